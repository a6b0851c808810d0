#include "pfc/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace pfc {

IntMat IntMat::identity(Int n) {
    IntMat m(n, n);
    for (Int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rws) {
    if (rws.empty()) return IntMat(0, 0);
    IntMat m(static_cast<Int>(rws.size()), static_cast<Int>(rws[0].size()));
    for (Int r = 0; r < m.rows; ++r) {
        if (static_cast<Int>(rws[static_cast<size_t>(r)].size()) != m.cols)
            throw std::invalid_argument("ragged rows in IntMat::from_rows");
        for (Int c = 0; c < m.cols; ++c) m.at(r, c) = rws[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }
    return m;
}

IntMat IntMat::mul(const IntMat& other) const {
    if (cols != other.rows) throw std::invalid_argument("IntMat::mul dimension mismatch");
    IntMat out(rows, other.cols);
    for (Int i = 0; i < rows; ++i)
        for (Int k = 0; k < cols; ++k) {
            Int aik = at(i, k);
            if (aik == 0) continue;
            for (Int j = 0; j < other.cols; ++j)
                out.at(i, j) = checked_add(out.at(i, j), checked_mul(aik, other.at(k, j)));
        }
    return out;
}

IntMat IntMat::transpose() const {
    IntMat out(cols, rows);
    for (Int i = 0; i < rows; ++i)
        for (Int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<Int> IntMat::row(Int r) const {
    std::vector<Int> out(static_cast<size_t>(cols));
    for (Int c = 0; c < cols; ++c) out[static_cast<size_t>(c)] = at(r, c);
    return out;
}

Int det(const IntMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
    Int n = m.rows;
    if (n == 0) return 1;
    IntMat w = m;
    Int sign = 1;
    Int prev = 1;
    for (Int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            Int swap = -1;
            for (Int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            for (Int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap, j));
            sign = -sign;
        }
        for (Int i = k + 1; i < n; ++i)
            for (Int j = k + 1; j < n; ++j) {
                Int num = checked_add(checked_mul(w.at(i, j), w.at(k, k)), -checked_mul(w.at(i, k), w.at(k, j)));
                w.at(i, j) = num / prev;  // exact by Bareiss
            }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

namespace {

struct SnfWork {
    IntMat u, d, v;

    void row_swap(Int r1, Int r2) {
        for (Int j = 0; j < d.cols; ++j) std::swap(d.at(r1, j), d.at(r2, j));
        for (Int j = 0; j < u.cols; ++j) std::swap(u.at(r1, j), u.at(r2, j));
    }
    void col_swap(Int c1, Int c2) {
        for (Int i = 0; i < d.rows; ++i) std::swap(d.at(i, c1), d.at(i, c2));
        for (Int i = 0; i < v.rows; ++i) std::swap(v.at(i, c1), v.at(i, c2));
    }
    // row r1 -= q * row r2
    void row_sub(Int r1, Int r2, Int q) {
        if (q == 0) return;
        for (Int j = 0; j < d.cols; ++j) d.at(r1, j) = checked_add(d.at(r1, j), -checked_mul(q, d.at(r2, j)));
        for (Int j = 0; j < u.cols; ++j) u.at(r1, j) = checked_add(u.at(r1, j), -checked_mul(q, u.at(r2, j)));
    }
    void col_sub(Int c1, Int c2, Int q) {
        if (q == 0) return;
        for (Int i = 0; i < d.rows; ++i) d.at(i, c1) = checked_add(d.at(i, c1), -checked_mul(q, d.at(i, c2)));
        for (Int i = 0; i < v.rows; ++i) v.at(i, c1) = checked_add(v.at(i, c1), -checked_mul(q, v.at(i, c2)));
    }
    void row_negate(Int r) {
        for (Int j = 0; j < d.cols; ++j) d.at(r, j) = -d.at(r, j);
        for (Int j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
    }
    void row_add(Int r1, Int r2) { row_sub(r1, r2, -1); }
};

}  // namespace

SnfResult smith_normal_form(const IntMat& m) {
    SnfWork w;
    w.u = IntMat::identity(m.rows);
    w.v = IntMat::identity(m.cols);
    w.d = m;

    Int t = 0;
    Int bound = std::min(m.rows, m.cols);
    while (t < bound) {
        // pivot: minimal nonzero |entry| in the remaining block, ties by
        // lowest (row, col)
        Int pr = -1, pc = -1, best = 0;
        for (Int i = t; i < m.rows; ++i)
            for (Int j = t; j < m.cols; ++j) {
                Int v = w.d.at(i, j);
                if (v == 0) continue;
                Int av = v < 0 ? -v : v;
                if (pr < 0 || av < best) {
                    best = av;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;  // remaining block is zero
        if (pr != t) w.row_swap(t, pr);
        if (pc != t) w.col_swap(t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (Int i = t + 1; i < m.rows; ++i) {
                Int q = w.d.at(i, t) / w.d.at(t, t);
                w.row_sub(i, t, q);
                if (w.d.at(i, t) != 0) {
                    w.row_swap(t, i);  // smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (Int j = t + 1; j < m.cols; ++j) {
                Int q = w.d.at(t, j) / w.d.at(t, t);
                w.col_sub(j, t, q);
                if (w.d.at(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
        }
        if (w.d.at(t, t) < 0) w.row_negate(t);

        // enforce divisibility d_t | every later entry
        bool redo = false;
        for (Int i = t + 1; i < m.rows && !redo; ++i)
            for (Int j = t + 1; j < m.cols && !redo; ++j)
                if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                    w.row_add(t, i);
                    redo = true;
                }
        if (!redo) ++t;
    }
    // zero diagonal entries may precede nonzero ones only if the block was
    // exhausted; the loop above always packs nonzero pivots first.
    return SnfResult{w.u, w.d, w.v};
}

std::vector<Int> SnfResult::diagonal() const {
    Int n = std::min(d.rows, d.cols);
    std::vector<Int> out(static_cast<size_t>(n));
    for (Int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = d.at(i, i);
    return out;
}

IntMat hermite_normal_form(const IntMat& m) {
    std::vector<std::vector<Int>> rows;
    for (Int i = 0; i < m.rows; ++i) rows.push_back(m.row(i));

    Int nc = m.cols;
    std::vector<std::vector<Int>> basis;
    Int pivot_col = 0;
    size_t done = 0;
    while (pivot_col < nc && done < rows.size()) {
        // gcd-reduce the column below the current pivot row
        while (true) {
            size_t best = rows.size();
            Int best_abs = 0;
            for (size_t i = done; i < rows.size(); ++i) {
                Int v = rows[i][static_cast<size_t>(pivot_col)];
                if (v == 0) continue;
                Int av = v < 0 ? -v : v;
                if (best == rows.size() || av < best_abs) {
                    best = i;
                    best_abs = av;
                }
            }
            if (best == rows.size()) break;  // column clear
            std::swap(rows[done], rows[best]);
            if (rows[done][static_cast<size_t>(pivot_col)] < 0)
                for (auto& x : rows[done]) x = -x;
            Int p = rows[done][static_cast<size_t>(pivot_col)];
            bool any = false;
            for (size_t i = done + 1; i < rows.size(); ++i) {
                Int q = rows[i][static_cast<size_t>(pivot_col)] / p;
                if (q != 0)
                    for (Int j = 0; j < nc; ++j)
                        rows[i][static_cast<size_t>(j)] =
                            checked_add(rows[i][static_cast<size_t>(j)], -checked_mul(q, rows[done][static_cast<size_t>(j)]));
                if (rows[i][static_cast<size_t>(pivot_col)] != 0) any = true;
            }
            if (!any) break;
        }
        if (rows[done][static_cast<size_t>(pivot_col)] != 0) ++done;
        ++pivot_col;
    }
    rows.resize(done);
    if (rows.empty()) return IntMat(0, nc);

    // reduce entries above each pivot into [0, pivot)
    for (size_t i = rows.size(); i-- > 0;) {
        Int pc = 0;
        while (pc < nc && rows[i][static_cast<size_t>(pc)] == 0) ++pc;
        if (pc == nc) continue;
        Int p = rows[i][static_cast<size_t>(pc)];
        for (size_t k = 0; k < i; ++k) {
            Int v = rows[k][static_cast<size_t>(pc)];
            Int q = (v - mod_floor(v, p)) / p;  // floor division
            if (q != 0)
                for (Int j = 0; j < nc; ++j)
                    rows[k][static_cast<size_t>(j)] =
                        checked_add(rows[k][static_cast<size_t>(j)], -checked_mul(q, rows[i][static_cast<size_t>(j)]));
        }
    }
    return IntMat::from_rows(rows);
}

bool hnf_contains(const IntMat& hnf, const std::vector<Int>& v) {
    if (static_cast<Int>(v.size()) != hnf.cols && !(hnf.rows == 0 && hnf.cols == 0))
        throw std::invalid_argument("hnf_contains: dimension mismatch");
    std::vector<Int> w = v;
    for (Int i = 0; i < hnf.rows; ++i) {
        Int pc = 0;
        while (pc < hnf.cols && hnf.at(i, pc) == 0) ++pc;
        if (pc == hnf.cols) continue;
        Int p = hnf.at(i, pc);
        if (w[static_cast<size_t>(pc)] % p != 0) return false;
        Int q = w[static_cast<size_t>(pc)] / p;
        if (q != 0)
            for (Int j = 0; j < hnf.cols; ++j)
                w[static_cast<size_t>(j)] = checked_add(w[static_cast<size_t>(j)], -checked_mul(q, hnf.at(i, j)));
    }
    for (Int x : w)
        if (x != 0) return false;
    return true;
}

IntMat inverse_unimodular(const IntMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse_unimodular: matrix not square");
    Int n = m.rows;
    Int dm = det(m);
    if (dm != 1 && dm != -1) throw std::invalid_argument("inverse_unimodular: determinant is not +-1");
    IntMat inv(n, n);
    for (Int i = 0; i < n; ++i)
        for (Int j = 0; j < n; ++j) {
            IntMat minor(n - 1, n - 1);
            for (Int r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;
                for (Int c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(mr, mc) = m.at(r, c);
                    ++mc;
                }
                ++mr;
            }
            Int cof = det(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            inv.at(i, j) = dm * cof;
        }
    return inv;
}

IntMat integer_kernel(const IntMat& m) {
    // x with m x = 0  <=>  x = V y where (U m V) y = D y = 0, so the kernel
    // is spanned by the columns of V at zero diagonal positions.
    SnfResult snf = smith_normal_form(m);
    std::vector<std::vector<Int>> basis;
    for (Int j = 0; j < m.cols; ++j) {
        Int dj = (j < std::min(snf.d.rows, snf.d.cols)) ? snf.d.at(j, j) : 0;
        if (dj != 0) continue;
        std::vector<Int> col(static_cast<size_t>(m.cols));
        for (Int i = 0; i < m.cols; ++i) col[static_cast<size_t>(i)] = snf.v.at(i, j);
        basis.push_back(std::move(col));
    }
    if (basis.empty()) return IntMat(0, m.cols);
    return hermite_normal_form(IntMat::from_rows(basis));
}

}  // namespace pfc
