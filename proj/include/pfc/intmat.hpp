#pragma once

#include <vector>

#include "pfc/budget.hpp"

namespace pfc {

// Dense integer matrix with exact (overflow-checked) arithmetic.
struct IntMat {
    Int rows = 0;
    Int cols = 0;
    std::vector<Int> a;  // row-major

    IntMat() = default;
    IntMat(Int r, Int c) : rows(r), cols(c), a(static_cast<size_t>(r * c), 0) {}

    Int& at(Int r, Int c) { return a[static_cast<size_t>(r * cols + c)]; }
    Int at(Int r, Int c) const { return a[static_cast<size_t>(r * cols + c)]; }

    static IntMat identity(Int n);
    static IntMat from_rows(const std::vector<std::vector<Int>>& rws);

    IntMat mul(const IntMat& other) const;
    IntMat transpose() const;
    std::vector<Int> row(Int r) const;
    bool operator==(const IntMat& other) const { return rows == other.rows && cols == other.cols && a == other.a; }
};

// Fraction-free determinant (Bareiss). Throws on non-square input.
Int det(const IntMat& m);

// Smith normal form: U*M*V = D with U, V unimodular, D diagonal with
// non-negative entries in a divisibility chain d1 | d2 | ...
struct SnfResult {
    IntMat u;  // rows x rows
    IntMat d;  // rows x cols
    IntMat v;  // cols x cols
    std::vector<Int> diagonal() const;  // min(rows, cols) entries of d
};
SnfResult smith_normal_form(const IntMat& m);

// Row-style Hermite normal form of the lattice spanned by the rows of m:
// zero rows dropped, pivots positive and strictly right-descending, entries
// above each pivot reduced into [0, pivot). Canonical per row lattice.
IntMat hermite_normal_form(const IntMat& m);

// Membership of v in the row lattice of an HNF basis.
bool hnf_contains(const IntMat& hnf, const std::vector<Int>& v);

// Basis (rows) of { x in Z^cols : m * x^T = 0 }, via SNF; HNF-canonicalized.
IntMat integer_kernel(const IntMat& m);

// Exact inverse of a matrix with determinant +-1, via the adjugate.
IntMat inverse_unimodular(const IntMat& m);

}  // namespace pfc
