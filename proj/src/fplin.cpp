#include "pfc/fplin.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfc {

bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PrimeField::PrimeField(Int p_) : p(p_) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
}

namespace {

Int inv_mod(Int a, Int p) {
    a = mod_floor(a, p);
    // Fermat: p is prime and a != 0
    Int r = 1, b = a, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

FpMatrix FpMatrix::identity(Int p, Int n) {
    FpMatrix m(p, n, n);
    for (Int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(Int p, const std::vector<FpVec>& rws) {
    if (rws.empty()) return FpMatrix(p, 0, 0);
    FpMatrix m(p, static_cast<Int>(rws.size()), static_cast<Int>(rws[0].size()));
    for (Int r = 0; r < m.rows; ++r) {
        if (static_cast<Int>(rws[static_cast<size_t>(r)].size()) != m.cols)
            throw std::invalid_argument("ragged rows in FpMatrix::from_rows");
        for (Int c = 0; c < m.cols; ++c) m.at(r, c) = mod_floor(rws[static_cast<size_t>(r)][static_cast<size_t>(c)], p);
    }
    return m;
}

FpMatrix FpMatrix::mul(const FpMatrix& other) const {
    if (cols != other.rows || p != other.p) throw std::invalid_argument("FpMatrix::mul mismatch");
    FpMatrix out(p, rows, other.cols);
    for (Int i = 0; i < rows; ++i)
        for (Int k = 0; k < cols; ++k) {
            Int v = at(i, k);
            if (v == 0) continue;
            for (Int j = 0; j < other.cols; ++j) out.at(i, j) = (out.at(i, j) + v * other.at(k, j)) % p;
        }
    return out;
}

FpVec FpMatrix::apply(const FpVec& v) const {
    if (static_cast<Int>(v.size()) != cols) throw std::invalid_argument("FpMatrix::apply length mismatch");
    FpVec out(static_cast<size_t>(rows), 0);
    for (Int i = 0; i < rows; ++i) {
        Int s = 0;
        for (Int j = 0; j < cols; ++j) s = (s + at(i, j) * mod_floor(v[static_cast<size_t>(j)], p)) % p;
        out[static_cast<size_t>(i)] = s;
    }
    return out;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix out(p, cols, rows);
    for (Int i = 0; i < rows; ++i)
        for (Int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
    return out;
}

FpVec FpMatrix::row(Int r) const {
    FpVec out(static_cast<size_t>(cols));
    for (Int c = 0; c < cols; ++c) out[static_cast<size_t>(c)] = at(r, c);
    return out;
}

RrefResult rref(const FpMatrix& m) {
    RrefResult res;
    res.r = m;
    res.transform = FpMatrix::identity(m.p, m.rows);
    Int p = m.p;
    Int pr = 0;  // current pivot row
    for (Int pc = 0; pc < m.cols && pr < m.rows; ++pc) {
        Int piv = -1;
        for (Int i = pr; i < m.rows; ++i)
            if (res.r.at(i, pc) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != pr)
            for (Int j = 0; j < m.cols; ++j) std::swap(res.r.at(pr, j), res.r.at(piv, j));
        if (piv != pr)
            for (Int j = 0; j < m.rows; ++j) std::swap(res.transform.at(pr, j), res.transform.at(piv, j));
        Int scale = inv_mod(res.r.at(pr, pc), p);
        if (scale != 1) {
            for (Int j = 0; j < m.cols; ++j) res.r.at(pr, j) = res.r.at(pr, j) * scale % p;
            for (Int j = 0; j < m.rows; ++j) res.transform.at(pr, j) = res.transform.at(pr, j) * scale % p;
        }
        for (Int i = 0; i < m.rows; ++i) {
            if (i == pr) continue;
            Int f = res.r.at(i, pc);
            if (f == 0) continue;
            for (Int j = 0; j < m.cols; ++j) res.r.at(i, j) = mod_floor(res.r.at(i, j) - f * res.r.at(pr, j), p);
            for (Int j = 0; j < m.rows; ++j)
                res.transform.at(i, j) = mod_floor(res.transform.at(i, j) - f * res.transform.at(pr, j), p);
        }
        ++pr;
    }
    res.rank = pr;
    return res;
}

FpMatrix fp_inverse(const FpMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("fp_inverse: not square");
    RrefResult r = rref(m);
    if (r.rank != m.rows) throw std::invalid_argument("fp_inverse: singular matrix");
    return r.transform;
}

// ----------------------------------------------------------------- Subspace

Subspace Subspace::zero(Int p, Int dim) {
    Subspace s;
    s.p = p;
    s.ambient_dim = dim;
    s.basis = FpMatrix(p, 0, dim);
    return s;
}

Subspace Subspace::full(Int p, Int dim) {
    Subspace s;
    s.p = p;
    s.ambient_dim = dim;
    s.basis = FpMatrix::identity(p, dim);
    return s;
}

Subspace Subspace::span(Int p, Int dim, const std::vector<FpVec>& vectors) {
    Subspace s;
    s.p = p;
    s.ambient_dim = dim;
    if (vectors.empty()) {
        s.basis = FpMatrix(p, 0, dim);
        return s;
    }
    for (const auto& v : vectors)
        if (static_cast<Int>(v.size()) != dim) throw std::invalid_argument("span: vector length mismatch");
    RrefResult r = rref(FpMatrix::from_rows(p, vectors));
    FpMatrix b(p, r.rank, dim);
    for (Int i = 0; i < r.rank; ++i)
        for (Int j = 0; j < dim; ++j) b.at(i, j) = r.r.at(i, j);
    s.basis = std::move(b);
    return s;
}

bool Subspace::contains(const FpVec& v) const {
    if (static_cast<Int>(v.size()) != ambient_dim) throw std::invalid_argument("contains: length mismatch");
    FpVec w(v);
    for (auto& x : w) x = mod_floor(x, p);
    for (Int i = 0; i < basis.rows; ++i) {
        Int pc = 0;
        while (pc < ambient_dim && basis.at(i, pc) == 0) ++pc;
        if (pc == ambient_dim) continue;
        Int f = w[static_cast<size_t>(pc)];
        if (f != 0)
            for (Int j = 0; j < ambient_dim; ++j) w[static_cast<size_t>(j)] = mod_floor(w[static_cast<size_t>(j)] - f * basis.at(i, j), p);
    }
    return std::all_of(w.begin(), w.end(), [](Int x) { return x == 0; });
}

bool Subspace::contains_subspace(const Subspace& other) const {
    for (Int i = 0; i < other.basis.rows; ++i)
        if (!contains(other.basis.row(i))) return false;
    return true;
}

std::vector<Int> Subspace::pivot_cols() const {
    std::vector<Int> out;
    for (Int i = 0; i < basis.rows; ++i) {
        Int pc = 0;
        while (pc < ambient_dim && basis.at(i, pc) == 0) ++pc;
        out.push_back(pc);
    }
    return out;
}

bool Subspace::operator<(const Subspace& o) const {
    if (basis.rows != o.basis.rows) return basis.rows < o.basis.rows;
    return basis.a < o.basis.a;
}

Subspace annihilator(const Subspace& y) {
    Int p = y.p, dim = y.ambient_dim;
    RrefResult r = rref(y.basis);
    std::vector<Int> pivots;
    std::vector<bool> is_pivot(static_cast<size_t>(dim), false);
    for (Int i = 0; i < r.rank; ++i) {
        Int pc = 0;
        while (pc < dim && r.r.at(i, pc) == 0) ++pc;
        pivots.push_back(pc);
        is_pivot[static_cast<size_t>(pc)] = true;
    }
    std::vector<FpVec> kernel_basis;
    for (Int j = 0; j < dim; ++j) {
        if (is_pivot[static_cast<size_t>(j)]) continue;
        FpVec v(static_cast<size_t>(dim), 0);
        v[static_cast<size_t>(j)] = 1;
        for (Int i = 0; i < r.rank; ++i) v[static_cast<size_t>(pivots[static_cast<size_t>(i)])] = mod_floor(-r.r.at(i, j), p);
        kernel_basis.push_back(std::move(v));
    }
    return Subspace::span(p, dim, kernel_basis);
}

QuotientSpace quotient_space(Int dim, const Subspace& z) {
    if (z.ambient_dim != dim) throw std::invalid_argument("quotient_space: ambient mismatch");
    QuotientSpace q;
    q.p = z.p;
    q.ambient_dim = dim;
    q.kernel = z;
    std::vector<Int> pivots = z.pivot_cols();
    std::vector<bool> is_pivot(static_cast<size_t>(dim), false);
    for (Int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    for (Int j = 0; j < dim; ++j)
        if (!is_pivot[static_cast<size_t>(j)]) q.free_cols.push_back(j);

    Int qd = static_cast<Int>(q.free_cols.size());
    q.projection = FpMatrix(z.p, qd, dim);
    for (Int j = 0; j < dim; ++j) {
        // reduce e_j by Z's rows, then read off the free coordinates
        FpVec v(static_cast<size_t>(dim), 0);
        v[static_cast<size_t>(j)] = 1;
        for (Int i = 0; i < z.basis.rows; ++i) {
            Int f = v[static_cast<size_t>(pivots[static_cast<size_t>(i)])];
            if (f != 0)
                for (Int c = 0; c < dim; ++c) v[static_cast<size_t>(c)] = mod_floor(v[static_cast<size_t>(c)] - f * z.basis.at(i, c), z.p);
        }
        for (Int r = 0; r < qd; ++r) q.projection.at(r, j) = v[static_cast<size_t>(q.free_cols[static_cast<size_t>(r)])];
    }
    q.section = FpMatrix(z.p, dim, qd);
    for (Int r = 0; r < qd; ++r) q.section.at(q.free_cols[static_cast<size_t>(r)], r) = 1;
    return q;
}

DualQuotientIso dual_quotient_iso(const Subspace& y) {
    DualQuotientIso iso;
    iso.y = y;
    iso.y_perp = annihilator(y);
    iso.quot = quotient_space(y.ambient_dim, iso.y_perp);
    Int m = y.dim();
    if (iso.quot.dim() != m) throw std::logic_error("dual_quotient_iso: dimension mismatch");
    // evaluation pairing in the canonical coordinates: column r is
    // (y_1(s_r), ..., y_m(s_r)) for the section vector s_r
    iso.eval_matrix = FpMatrix(y.p, m, m);
    for (Int r = 0; r < m; ++r) {
        FpVec s = iso.quot.section.transpose().row(r);
        for (Int i = 0; i < m; ++i) {
            Int acc = 0;
            for (Int c = 0; c < y.ambient_dim; ++c) acc = (acc + y.basis.at(i, c) * s[static_cast<size_t>(c)]) % y.p;
            iso.eval_matrix.at(i, r) = acc;
        }
    }
    iso.matrix = fp_inverse(iso.eval_matrix);
    return iso;
}

std::vector<Subspace> enumerate_subspaces(Int p, Int dim, Int k, const Budget& budget) {
    if (k < 0 || k > dim) return {};
    Int points = 1;
    for (Int i = 0; i < dim; ++i) {
        points = checked_mul(points, p);
        if (points > budget.enum_points) throw budget_error("enumerate_subspaces: p^dim exceeds budget", points);
    }
    std::vector<Subspace> out;
    // choose pivot columns c_1 < ... < c_k, then fill the free entries
    std::vector<Int> pivots(static_cast<size_t>(k));
    for (Int i = 0; i < k; ++i) pivots[static_cast<size_t>(i)] = i;
    auto advance = [&]() {
        Int i = k - 1;
        while (i >= 0 && pivots[static_cast<size_t>(i)] == dim - k + i) --i;
        if (i < 0) return false;
        ++pivots[static_cast<size_t>(i)];
        for (Int j = i + 1; j < k; ++j) pivots[static_cast<size_t>(j)] = pivots[static_cast<size_t>(j - 1)] + 1;
        return true;
    };
    if (k == 0) {
        out.push_back(Subspace::zero(p, dim));
        return out;
    }
    while (true) {
        std::vector<bool> is_pivot(static_cast<size_t>(dim), false);
        for (Int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
        std::vector<std::pair<Int, Int>> free_pos;  // (row, col), row-major
        for (Int i = 0; i < k; ++i)
            for (Int j = pivots[static_cast<size_t>(i)] + 1; j < dim; ++j)
                if (!is_pivot[static_cast<size_t>(j)]) free_pos.emplace_back(i, j);
        Int combos = 1;
        for (size_t t = 0; t < free_pos.size(); ++t) combos = checked_mul(combos, p);
        for (Int idx = 0; idx < combos; ++idx) {
            FpMatrix b(p, k, dim);
            for (Int i = 0; i < k; ++i) b.at(i, pivots[static_cast<size_t>(i)]) = 1;
            Int rest = idx;
            for (size_t t = free_pos.size(); t-- > 0;) {
                b.at(free_pos[t].first, free_pos[t].second) = rest % p;
                rest /= p;
            }
            Subspace s;
            s.p = p;
            s.ambient_dim = dim;
            s.basis = std::move(b);
            out.push_back(std::move(s));
        }
        if (!advance()) break;
    }
    return out;
}

std::vector<Subspace> enumerate_all_subspaces(Int p, Int dim, const Budget& budget) {
    std::vector<Subspace> out;
    for (Int k = 0; k <= dim; ++k) {
        auto part = enumerate_subspaces(p, dim, k, budget);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Int gaussian_binomial(Int p, Int n, Int k) {
    if (k < 0 || k > n) return 0;
    // product formula evaluated exactly: prod (p^(n-i) - 1) / (p^(k-i) - 1)
    Int num = 1, den = 1;
    for (Int i = 0; i < k; ++i) {
        Int pn = 1, pk = 1;
        for (Int t = 0; t < n - i; ++t) pn = checked_mul(pn, p);
        for (Int t = 0; t < k - i; ++t) pk = checked_mul(pk, p);
        num = checked_mul(num, pn - 1);
        den = checked_mul(den, pk - 1);
    }
    return num / den;
}

Int DualVector::eval(const FpVec& v) const {
    if (v.size() != coords.size()) throw std::invalid_argument("DualVector::eval length mismatch");
    Int s = 0;
    for (size_t i = 0; i < coords.size(); ++i) s = (s + coords[i] * mod_floor(v[i], p)) % p;
    return s;
}

Int DoubleDualElement::eval(const DualVector& f) const {
    if (f.coords.size() != coords.size()) throw std::invalid_argument("DoubleDualElement::eval length mismatch");
    Int s = 0;
    for (size_t i = 0; i < coords.size(); ++i) s = (s + coords[i] * f.coords[i]) % p;
    return s;
}

DoubleDualElement double_dual_injection(Int p, const FpVec& v) {
    DoubleDualElement d;
    d.p = p;
    d.coords.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) d.coords[i] = mod_floor(v[i], p);
    return d;
}

std::vector<FpVec> all_vectors(Int p, Int dim, const Budget& budget) {
    Int total = 1;
    for (Int i = 0; i < dim; ++i) {
        total = checked_mul(total, p);
        if (total > budget.enum_points) throw budget_error("all_vectors: p^dim exceeds budget", total);
    }
    std::vector<FpVec> out;
    out.reserve(static_cast<size_t>(total));
    for (Int idx = 0; idx < total; ++idx) {
        FpVec v(static_cast<size_t>(dim));
        Int rest = idx;
        for (size_t i = v.size(); i-- > 0;) {
            v[i] = rest % p;
            rest /= p;
        }
        out.push_back(std::move(v));
    }
    return out;
}

FpVec vec_add(Int p, const FpVec& a, const FpVec& b) {
    FpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod_floor(a[i] + b[i], p);
    return r;
}

FpVec vec_smul(Int p, Int k, const FpVec& a) {
    FpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod_floor(k * a[i], p);
    return r;
}

}  // namespace pfc
