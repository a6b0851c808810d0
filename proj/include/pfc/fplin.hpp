#pragma once

#include <string>
#include <vector>

#include "pfc/budget.hpp"

namespace pfc {

// Prime field F_p; primality is checked at construction.
struct PrimeField {
    Int p;
    explicit PrimeField(Int p);
};

bool is_prime(Int p);

using FpVec = std::vector<Int>;  // entries in [0, p)

// Dense matrix over F_p.
struct FpMatrix {
    Int p = 2;
    Int rows = 0;
    Int cols = 0;
    std::vector<Int> a;

    FpMatrix() = default;
    FpMatrix(Int p, Int r, Int c) : p(p), rows(r), cols(c), a(static_cast<size_t>(r * c), 0) {}

    Int& at(Int r, Int c) { return a[static_cast<size_t>(r * cols + c)]; }
    Int at(Int r, Int c) const { return a[static_cast<size_t>(r * cols + c)]; }

    static FpMatrix identity(Int p, Int n);
    static FpMatrix from_rows(Int p, const std::vector<FpVec>& rows);

    FpMatrix mul(const FpMatrix& other) const;
    FpVec apply(const FpVec& v) const;  // matrix * column vector
    FpMatrix transpose() const;
    FpVec row(Int r) const;
    bool operator==(const FpMatrix& o) const { return p == o.p && rows == o.rows && cols == o.cols && a == o.a; }
};

struct RrefResult {
    FpMatrix r;          // canonical reduced row echelon form
    Int rank = 0;
    FpMatrix transform;  // transform * input = r
};
RrefResult rref(const FpMatrix& m);

// Inverse of a square matrix over F_p; throws if singular.
FpMatrix fp_inverse(const FpMatrix& m);

// Subspace of F_p^ambient_dim in canonical RREF basis form. Equality is
// representation equality; the RREF makes that a complete invariant.
struct Subspace {
    Int p = 2;
    Int ambient_dim = 0;
    FpMatrix basis;  // rank x ambient_dim, canonical RREF, no zero rows

    static Subspace zero(Int p, Int dim);
    static Subspace full(Int p, Int dim);
    static Subspace span(Int p, Int dim, const std::vector<FpVec>& vectors);

    Int dim() const { return basis.rows; }
    bool contains(const FpVec& v) const;
    bool contains_subspace(const Subspace& other) const;
    std::vector<Int> pivot_cols() const;
    bool operator==(const Subspace& o) const { return p == o.p && ambient_dim == o.ambient_dim && basis == o.basis; }
    bool operator<(const Subspace& o) const;  // deterministic ordering
};

// Annihilator of a subspace of the (coordinatized) dual: the kernel of its
// stacked basis forms. dim Y + dim annihilator(Y) = ambient_dim.
Subspace annihilator(const Subspace& y);

// Quotient of F_p^dim by a subspace Z, with the canonical projection whose
// section is supported on the non-pivot coordinates of Z's RREF.
struct QuotientSpace {
    Int p = 2;
    Int ambient_dim = 0;
    Subspace kernel;
    FpMatrix projection;          // (dim - dim Z) x dim
    FpMatrix section;             // dim x (dim - dim Z); projection * section = identity
    std::vector<Int> free_cols;   // coordinates carrying the quotient
    Int dim() const { return projection.rows; }
};
QuotientSpace quotient_space(Int dim, const Subspace& z);

// The natural isomorphism Y* -> V / annihilator(Y) realized as an explicit
// invertible matrix in the canonical coordinates (dual basis of Y's RREF
// basis on the left, quotient coordinates on the right). eval_matrix is the
// inverse direction, the evaluation pairing V/Y_perp -> Y*.
struct DualQuotientIso {
    Subspace y;
    Subspace y_perp;
    QuotientSpace quot;
    FpMatrix matrix;       // Y* -> V/Y_perp
    FpMatrix eval_matrix;  // V/Y_perp -> Y*, eval_matrix[i][r] = y_i(section e_r)
};
DualQuotientIso dual_quotient_iso(const Subspace& y);

// All k-dimensional subspaces of F_p^dim in canonical RREF form, ordered by
// pivot columns then free entries; count is the Gaussian binomial.
std::vector<Subspace> enumerate_subspaces(Int p, Int dim, Int k, const Budget& budget = default_budget());
std::vector<Subspace> enumerate_all_subspaces(Int p, Int dim, const Budget& budget = default_budget());

Int gaussian_binomial(Int p, Int n, Int k);

// Linear form on F_p^dim in the coordinates dual to the standard basis.
struct DualVector {
    Int p = 2;
    FpVec coords;
    Int eval(const FpVec& v) const;
    Int dim() const { return static_cast<Int>(coords.size()); }
};

// Linear functional on V* for finite-dimensional V, stored in the double-dual
// basis.
struct DoubleDualElement {
    Int p = 2;
    FpVec coords;
    Int eval(const DualVector& f) const;
    Int dim() const { return static_cast<Int>(coords.size()); }
    bool operator==(const DoubleDualElement& o) const { return p == o.p && coords == o.coords; }
};

// The canonical injection of V into its double dual: i(v)(f) = f(v).
DoubleDualElement double_dual_injection(Int p, const FpVec& v);

// All p^dim vectors of F_p^dim in mixed-radix order (last coordinate fastest).
std::vector<FpVec> all_vectors(Int p, Int dim, const Budget& budget = default_budget());

FpVec vec_add(Int p, const FpVec& a, const FpVec& b);
FpVec vec_smul(Int p, Int k, const FpVec& a);

}  // namespace pfc
