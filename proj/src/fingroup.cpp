#include "pfc/fingroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "pfc/parallel.hpp"

namespace pfc {

namespace {

bool group_equal(const GroupVal& a, const GroupVal& b) {
    if (a.index() != b.index()) {
        // a table and an abelian descriptor are treated as distinct carriers
        return false;
    }
    if (std::holds_alternative<FinGroup>(a)) {
        const auto& x = std::get<FinGroup>(a);
        const auto& y = std::get<FinGroup>(b);
        return x.order == y.order && x.table == y.table;
    }
    return std::get<FinAbGroup>(a).factors == std::get<FinAbGroup>(b).factors;
}

}  // namespace

// ---------------------------------------------------------------- FinGroup

FinGroup FinGroup::trivial() {
    FinGroup g;
    g.order = 1;
    g.table = {0};
    g.name = "1";
    return g;
}

FinGroup FinGroup::from_table(std::vector<Int> table, std::string name, const Budget& budget) {
    FinGroup g;
    Int n = 0;
    while (n * n < static_cast<Int>(table.size())) ++n;
    if (n * n != static_cast<Int>(table.size()) || n == 0)
        throw std::invalid_argument("from_table: table size is not a positive square");
    if (n > budget.table_order) throw budget_error("from_table: order exceeds table budget", n);
    g.order = n;
    g.table = std::move(table);
    g.name = std::move(name);

    for (Int a = 0; a < n; ++a)
        for (Int b = 0; b < n; ++b) {
            Int v = g.mul(a, b);
            if (v < 0 || v >= n) throw std::invalid_argument("from_table: entry out of range");
        }
    for (Int b = 0; b < n; ++b)
        if (g.mul(0, b) != b || g.mul(b, 0) != b)
            throw std::invalid_argument("from_table: element 0 is not the identity");

    std::vector<bool> seen(static_cast<size_t>(n));
    for (Int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), false);
        for (Int b = 0; b < n; ++b) seen[static_cast<size_t>(g.mul(a, b))] = true;
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw std::invalid_argument("from_table: row is not a permutation");
        std::fill(seen.begin(), seen.end(), false);
        for (Int b = 0; b < n; ++b) seen[static_cast<size_t>(g.mul(b, a))] = true;
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw std::invalid_argument("from_table: column is not a permutation");
    }

    bool assoc = par::all_indices(n * n * n, [&](Int idx) {
        Int c = idx % n;
        Int b = (idx / n) % n;
        Int a = idx / (n * n);
        return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
    });
    if (!assoc) throw std::invalid_argument("from_table: multiplication is not associative");

    for (Int a = 0; a < n; ++a) {
        bool has_inv = false;
        for (Int b = 0; b < n && !has_inv; ++b) has_inv = g.mul(a, b) == 0 && g.mul(b, a) == 0;
        if (!has_inv) throw std::invalid_argument("from_table: element without two-sided inverse");
    }
    return g;
}

Int FinGroup::inv(Int a) const {
    for (Int b = 0; b < order; ++b)
        if (mul(a, b) == 0) return b;
    throw std::logic_error("inv: no inverse found");
}

Int FinGroup::pow(Int a, Int k) const {
    if (k < 0) return pow(inv(a), -k);
    Int r = 0;
    for (Int i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

Int FinGroup::element_order(Int a) const {
    Int x = a, t = 1;
    while (x != 0) {
        x = mul(x, a);
        ++t;
    }
    return t;
}

bool FinGroup::is_abelian() const {
    for (Int a = 0; a < order; ++a)
        for (Int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

// -------------------------------------------------------------- FinAbGroup

FinAbGroup FinAbGroup::from_factors(const std::vector<Int>& raw, std::string label) {
    std::vector<Int> kept;
    for (Int f : raw) {
        if (f <= 0) throw std::invalid_argument("cyclic factor must be positive");
        if (f > 1) kept.push_back(f);
    }
    FinAbGroup g;
    if (!kept.empty()) {
        IntMat rel(static_cast<Int>(kept.size()), static_cast<Int>(kept.size()));
        for (size_t i = 0; i < kept.size(); ++i) rel.at(static_cast<Int>(i), static_cast<Int>(i)) = kept[i];
        for (Int d : smith_normal_form(rel).diagonal())
            if (d >= 2) g.factors.push_back(d);
    }
    if (!label.empty()) {
        g.label = std::move(label);
    } else {
        FinAbGroup raw_view;
        raw_view.factors = kept;
        g.label = raw_view.canonical_name();
    }
    return g;
}

Int FinAbGroup::order() const {
    Int n = 1;
    for (Int f : factors) n = checked_mul(n, f);
    return n;
}

FinAbGroup::Elem FinAbGroup::add(const Elem& a, const Elem& b) const {
    Elem r(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) r[i] = mod_floor(a[i] + b[i], factors[i]);
    return r;
}

FinAbGroup::Elem FinAbGroup::neg(const Elem& a) const {
    Elem r(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) r[i] = mod_floor(-a[i], factors[i]);
    return r;
}

FinAbGroup::Elem FinAbGroup::smul(Int k, const Elem& a) const {
    Elem r(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) r[i] = mod_floor(checked_mul(mod_floor(k, factors[i]), a[i]), factors[i]);
    return r;
}

Int FinAbGroup::elem_order(const Elem& a) const {
    Int t = 1;
    for (size_t i = 0; i < factors.size(); ++i) t = lcm_int(t, factors[i] / gcd_int(a[i], factors[i]));
    return t;
}

Int FinAbGroup::index_of(const Elem& a) const {
    if (a.size() != factors.size()) throw std::invalid_argument("index_of: wrong tuple length");
    Int idx = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
        Int r = mod_floor(a[i], factors[i]);
        idx = checked_add(checked_mul(idx, factors[i]), r);
    }
    return idx;
}

FinAbGroup::Elem FinAbGroup::elem_at(Int idx) const {
    Elem a(factors.size());
    for (size_t i = factors.size(); i-- > 0;) {
        a[i] = idx % factors[i];
        idx /= factors[i];
    }
    return a;
}

std::string FinAbGroup::canonical_name() const {
    if (factors.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + std::to_string(factors[i]);
    }
    return s;
}

FinGroup FinAbGroup::to_table(const Budget& budget) const {
    Int n = order();
    if (n > budget.table_order) throw budget_error("to_table: order exceeds table budget", n);
    std::vector<Int> table(static_cast<size_t>(n * n));
    for (Int a = 0; a < n; ++a) {
        Elem ea = elem_at(a);
        for (Int b = 0; b < n; ++b) table[static_cast<size_t>(a * n + b)] = index_of(add(ea, elem_at(b)));
    }
    return FinGroup::from_table(std::move(table), label.empty() ? canonical_name() : label, budget);
}

FinAbGroup make_cyclic_product(const std::vector<Int>& factors) {
    return FinAbGroup::from_factors(factors);
}

// ---------------------------------------------------------------- GroupVal

Int group_order(const GroupVal& g) {
    return std::holds_alternative<FinGroup>(g) ? std::get<FinGroup>(g).order : std::get<FinAbGroup>(g).order();
}

std::string group_name(const GroupVal& g) {
    if (std::holds_alternative<FinGroup>(g)) return std::get<FinGroup>(g).name;
    const auto& ab = std::get<FinAbGroup>(g);
    return ab.label.empty() ? ab.canonical_name() : ab.label;
}

bool group_is_abelian(const GroupVal& g) {
    return std::holds_alternative<FinAbGroup>(g) || std::get<FinGroup>(g).is_abelian();
}

FinGroup group_to_table(const GroupVal& g, const Budget& budget) {
    return std::holds_alternative<FinGroup>(g) ? std::get<FinGroup>(g) : std::get<FinAbGroup>(g).to_table(budget);
}

Int group_mul(const GroupVal& g, Int a, Int b) {
    if (std::holds_alternative<FinGroup>(g)) return std::get<FinGroup>(g).mul(a, b);
    const auto& ab = std::get<FinAbGroup>(g);
    return ab.index_of(ab.add(ab.elem_at(a), ab.elem_at(b)));
}

Int group_inv(const GroupVal& g, Int a) {
    if (std::holds_alternative<FinGroup>(g)) return std::get<FinGroup>(g).inv(a);
    const auto& ab = std::get<FinAbGroup>(g);
    return ab.index_of(ab.neg(ab.elem_at(a)));
}

Int group_pow(const GroupVal& g, Int a, Int k) {
    if (std::holds_alternative<FinGroup>(g)) return std::get<FinGroup>(g).pow(a, k);
    const auto& ab = std::get<FinAbGroup>(g);
    return ab.index_of(ab.smul(k, ab.elem_at(a)));
}

Int group_elem_order(const GroupVal& g, Int a) {
    if (std::holds_alternative<FinGroup>(g)) return std::get<FinGroup>(g).element_order(a);
    const auto& ab = std::get<FinAbGroup>(g);
    return ab.elem_order(ab.elem_at(a));
}

// ------------------------------------------------------------ Homomorphism

namespace {

void validate_element_map(const GroupVal& src, const GroupVal& tgt, const std::vector<Int>& map) {
    Int n = group_order(src);
    Int m = group_order(tgt);
    if (static_cast<Int>(map.size()) != n) throw std::invalid_argument("element map has wrong size");
    for (Int v : map)
        if (v < 0 || v >= m) throw std::invalid_argument("element map value out of range");
    if (map[0] != 0) throw std::invalid_argument("element map does not fix the identity");
    bool ok = par::all_indices(n * n, [&](Int idx) {
        Int a = idx / n, b = idx % n;
        return map[static_cast<size_t>(group_mul(src, a, b))] ==
               group_mul(tgt, map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]);
    });
    if (!ok) throw std::invalid_argument("element map is not multiplicative");
}

}  // namespace

Homomorphism Homomorphism::from_element_map(GroupVal src, GroupVal tgt, std::vector<Int> map, const Budget& budget) {
    Int n = group_order(src);
    if (n > budget.limit_elements) throw budget_error("from_element_map: source too large", n);
    validate_element_map(src, tgt, map);
    Homomorphism h;
    h.src_ = std::move(src);
    h.tgt_ = std::move(tgt);
    h.elem_map_ = std::move(map);
    return h;
}

Homomorphism Homomorphism::from_gen_images(FinAbGroup src, GroupVal tgt, std::vector<Int> images, const Budget& budget) {
    if (static_cast<Int>(images.size()) != src.rank())
        throw std::invalid_argument("from_gen_images: one image per generator required");
    Int m = group_order(tgt);
    for (Int v : images)
        if (v < 0 || v >= m) throw std::invalid_argument("from_gen_images: image out of range");
    // relations d_i * g_i = 0, and images must commute pairwise
    for (size_t i = 0; i < images.size(); ++i)
        if (group_pow(tgt, images[i], src.factors[i]) != 0)
            throw std::invalid_argument("from_gen_images: generator relation violated");
    for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j)
            if (group_mul(tgt, images[i], images[j]) != group_mul(tgt, images[j], images[i]))
                throw std::invalid_argument("from_gen_images: images do not commute");

    Int n = src.order();
    if (n > budget.limit_elements) throw budget_error("from_gen_images: source too large", n);
    std::vector<Int> map(static_cast<size_t>(n));
    for (Int x = 0; x < n; ++x) {
        FinAbGroup::Elem t = src.elem_at(x);
        Int img = 0;
        for (size_t i = 0; i < images.size(); ++i) img = group_mul(tgt, img, group_pow(tgt, images[i], t[i]));
        map[static_cast<size_t>(x)] = img;
    }
    Homomorphism h;
    h.src_ = std::move(src);
    h.tgt_ = std::move(tgt);
    h.elem_map_ = std::move(map);
    h.gen_images_ = std::move(images);
    return h;
}

Homomorphism Homomorphism::identity(GroupVal g) {
    Int n = group_order(g);
    std::vector<Int> map(static_cast<size_t>(n));
    for (Int i = 0; i < n; ++i) map[static_cast<size_t>(i)] = i;
    Homomorphism h;
    h.src_ = g;
    h.tgt_ = std::move(g);
    h.elem_map_ = std::move(map);
    if (std::holds_alternative<FinAbGroup>(h.src_)) {
        const auto& ab = std::get<FinAbGroup>(h.src_);
        std::vector<Int> gi;
        for (Int i = 0; i < ab.rank(); ++i) {
            FinAbGroup::Elem e = ab.zero();
            e[static_cast<size_t>(i)] = 1;
            gi.push_back(ab.index_of(e));
        }
        h.gen_images_ = std::move(gi);
    }
    return h;
}

Int Homomorphism::apply(Int x) const { return elem_map_[static_cast<size_t>(x)]; }

IntMat Homomorphism::gen_matrix() const {
    if (!gen_images_ || !std::holds_alternative<FinAbGroup>(tgt_))
        throw std::logic_error("gen_matrix: not an abelian-to-abelian homomorphism");
    const auto& tgt = std::get<FinAbGroup>(tgt_);
    IntMat m(static_cast<Int>(gen_images_->size()), tgt.rank());
    for (size_t i = 0; i < gen_images_->size(); ++i) {
        FinAbGroup::Elem t = tgt.elem_at((*gen_images_)[i]);
        for (size_t j = 0; j < t.size(); ++j) m.at(static_cast<Int>(i), static_cast<Int>(j)) = t[j];
    }
    return m;
}

bool Homomorphism::is_surjective() const {
    std::vector<bool> hit(static_cast<size_t>(group_order(tgt_)), false);
    for (Int v : elem_map_) hit[static_cast<size_t>(v)] = true;
    return std::find(hit.begin(), hit.end(), false) == hit.end();
}

bool Homomorphism::is_injective() const {
    std::set<Int> vals(elem_map_.begin(), elem_map_.end());
    return static_cast<Int>(vals.size()) == group_order(src_);
}

namespace {

std::vector<Int> greedy_generators(const GroupVal& g, const std::vector<Int>& elements) {
    std::vector<Int> gens;
    std::set<Int> closure{0};
    for (Int e : elements) {
        if (closure.count(e)) continue;
        gens.push_back(e);
        closure.insert(e);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Int> cur(closure.begin(), closure.end());
            for (Int a : cur)
                for (Int b : cur)
                    if (closure.insert(group_mul(g, a, b)).second) grew = true;
        }
    }
    return gens;
}

}  // namespace

Subgroup kernel(const Homomorphism& f) {
    Subgroup s;
    for (Int x = 0; x < group_order(f.source()); ++x)
        if (f.apply(x) == 0) s.elements.push_back(x);
    s.generators = greedy_generators(f.source(), s.elements);
    return s;
}

Subgroup image(const Homomorphism& f) {
    std::set<Int> vals;
    for (Int x = 0; x < group_order(f.source()); ++x) vals.insert(f.apply(x));
    Subgroup s;
    s.elements.assign(vals.begin(), vals.end());
    s.generators = greedy_generators(f.target(), s.elements);
    return s;
}

bool is_surjective(const Homomorphism& f) { return f.is_surjective(); }

Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
    if (!group_equal(f.target(), g.source())) throw std::invalid_argument("compose: middle groups do not match");
    std::vector<Int> map(static_cast<size_t>(group_order(f.source())));
    for (Int x = 0; x < static_cast<Int>(map.size()); ++x) map[static_cast<size_t>(x)] = g.apply(f.apply(x));
    if (f.gen_images() && std::holds_alternative<FinAbGroup>(f.source())) {
        std::vector<Int> images;
        for (Int v : *f.gen_images()) images.push_back(g.apply(v));
        return Homomorphism::from_gen_images(std::get<FinAbGroup>(f.source()), g.target(), std::move(images));
    }
    return Homomorphism::from_element_map(f.source(), g.target(), std::move(map));
}

// -------------------------------------------------------- hom enumeration

std::vector<Int> generating_sequence(const FinGroup& g) {
    std::vector<Int> gens;
    std::set<Int> closure{0};
    while (static_cast<Int>(closure.size()) < g.order) {
        Int e = 0;
        while (closure.count(e)) ++e;
        gens.push_back(e);
        closure.insert(e);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Int> cur(closure.begin(), closure.end());
            for (Int a : cur)
                for (Int b : cur)
                    if (closure.insert(g.mul(a, b)).second) grew = true;
        }
    }
    return gens;
}

namespace {

// Closure order of a table group from a generating sequence, with the
// derivation of each element as (previous element) * (generator); lets a
// candidate generator-image tuple be extended to a full map in O(order).
struct ClosurePlan {
    std::vector<Int> gens;
    std::vector<Int> order;                    // elements in derivation order, order[0] = 0
    std::vector<std::pair<Int, Int>> deriv;    // deriv[i] = (index into order, index into gens)
};

ClosurePlan closure_plan(const FinGroup& g) {
    ClosurePlan plan;
    plan.gens = generating_sequence(g);
    std::vector<Int> pos(static_cast<size_t>(g.order), -1);
    plan.order.push_back(0);
    plan.deriv.emplace_back(-1, -1);
    pos[0] = 0;
    size_t head = 0;
    while (plan.order.size() < static_cast<size_t>(g.order)) {
        bool grew = false;
        for (; head < plan.order.size(); ++head) {
            Int x = plan.order[head];
            for (size_t gi = 0; gi < plan.gens.size(); ++gi) {
                Int y = g.mul(x, plan.gens[gi]);
                if (pos[static_cast<size_t>(y)] >= 0) continue;
                pos[static_cast<size_t>(y)] = static_cast<Int>(plan.order.size());
                plan.order.push_back(y);
                plan.deriv.emplace_back(static_cast<Int>(head), static_cast<Int>(gi));
                grew = true;
            }
        }
        if (!grew) break;
    }
    if (plan.order.size() != static_cast<size_t>(g.order))
        throw std::logic_error("closure_plan: generators do not generate");
    return plan;
}

// Extends candidate generator images to a full map following the closure
// derivation; returns false if the extension fails the homomorphism law.
bool extend_candidate(const FinGroup& src, const ClosurePlan& plan, const GroupVal& tgt,
                      const std::vector<Int>& gen_imgs, std::vector<Int>& map) {
    map.assign(static_cast<size_t>(src.order), -1);
    map[0] = 0;
    for (size_t i = 1; i < plan.order.size(); ++i) {
        auto [pi, gi] = plan.deriv[i];
        Int prev = plan.order[static_cast<size_t>(pi)];
        map[static_cast<size_t>(plan.order[i])] =
            group_mul(tgt, map[static_cast<size_t>(prev)], gen_imgs[static_cast<size_t>(gi)]);
    }
    for (Int a = 0; a < src.order; ++a)
        for (Int b = 0; b < src.order; ++b)
            if (map[static_cast<size_t>(src.mul(a, b))] !=
                group_mul(tgt, map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]))
                return false;
    return true;
}

}  // namespace

std::vector<Homomorphism> enumerate_homs(const GroupVal& source, const GroupVal& target, const Budget& budget) {
    Int m = group_order(target);
    std::vector<Homomorphism> out;

    if (std::holds_alternative<FinAbGroup>(source)) {
        const auto& src = std::get<FinAbGroup>(source);
        Int k = src.rank();
        Int total = 1;
        for (Int i = 0; i < k; ++i) {
            total = checked_mul(total, m);
            if (total > budget.hom_candidates)
                throw budget_error("enumerate_homs: candidate space too large", total);
        }
        auto decode = [&](Int idx) {
            std::vector<Int> imgs(static_cast<size_t>(k));
            for (Int i = k; i-- > 0;) {
                imgs[static_cast<size_t>(i)] = idx % m;
                idx /= m;
            }
            return imgs;
        };
        std::vector<Int> hits = par::filter_indices(total, [&](Int idx) {
            std::vector<Int> imgs = decode(idx);
            for (Int i = 0; i < k; ++i)
                if (group_pow(target, imgs[static_cast<size_t>(i)], src.factors[static_cast<size_t>(i)]) != 0)
                    return false;
            for (Int i = 0; i < k; ++i)
                for (Int j = i + 1; j < k; ++j) {
                    Int a = imgs[static_cast<size_t>(i)], b = imgs[static_cast<size_t>(j)];
                    if (group_mul(target, a, b) != group_mul(target, b, a)) return false;
                }
            return true;
        });
        out.reserve(hits.size());
        for (Int idx : hits) out.push_back(Homomorphism::from_gen_images(src, target, decode(idx), budget));
        return out;
    }

    const auto& src = std::get<FinGroup>(source);
    ClosurePlan plan = closure_plan(src);
    Int k = static_cast<Int>(plan.gens.size());
    Int total = 1;
    for (Int i = 0; i < k; ++i) {
        total = checked_mul(total, m);
        if (total > budget.hom_candidates)
            throw budget_error("enumerate_homs: candidate space too large", total);
    }
    auto decode = [&](Int idx) {
        std::vector<Int> imgs(static_cast<size_t>(k));
        for (Int i = k; i-- > 0;) {
            imgs[static_cast<size_t>(i)] = idx % m;
            idx /= m;
        }
        return imgs;
    };
    std::vector<Int> hits = par::filter_indices(total, [&](Int idx) {
        std::vector<Int> map;
        return extend_candidate(src, plan, target, decode(idx), map);
    });
    out.reserve(hits.size());
    for (Int idx : hits) {
        std::vector<Int> map;
        extend_candidate(src, plan, target, decode(idx), map);
        out.push_back(Homomorphism::from_element_map(src, target, std::move(map), budget));
    }
    return out;
}

// ----------------------------------------------------------- quotients etc.

AbelianQuotient abelian_quotient(Int m, const IntMat& rel) {
    if (rel.cols != m) throw std::invalid_argument("abelian_quotient: relation width mismatch");
    AbelianQuotient q;
    if (m == 0) {
        q.proj = IntMat(0, 0);
        q.section = IntMat(0, 0);
        return q;
    }
    SnfResult snf = smith_normal_form(rel);
    std::vector<Int> diag = snf.diagonal();
    diag.resize(static_cast<size_t>(m), 0);
    for (Int d : diag)
        if (d == 0) throw std::invalid_argument("abelian_quotient: quotient is infinite");

    std::vector<Int> kept;
    for (Int j = 0; j < m; ++j)
        if (diag[static_cast<size_t>(j)] >= 2) kept.push_back(j);

    q.factors.clear();
    for (Int j : kept) q.factors.push_back(diag[static_cast<size_t>(j)]);

    // x maps to (x V)_j mod d_j at the kept positions
    Int t = static_cast<Int>(kept.size());
    q.proj = IntMat(t, m);
    for (Int r = 0; r < t; ++r)
        for (Int i = 0; i < m; ++i) q.proj.at(r, i) = snf.v.at(i, kept[static_cast<size_t>(r)]);

    IntMat vinv = inverse_unimodular(snf.v);
    q.section = IntMat(m, t);
    for (Int i = 0; i < m; ++i)
        for (Int r = 0; r < t; ++r) q.section.at(i, r) = vinv.at(kept[static_cast<size_t>(r)], i);
    return q;
}

std::pair<FinAbGroup, Homomorphism> quotient(const FinAbGroup& g, const std::vector<FinAbGroup::Elem>& subgroup_gens) {
    Int k = g.rank();
    std::vector<std::vector<Int>> rel_rows;
    for (Int i = 0; i < k; ++i) {
        std::vector<Int> row(static_cast<size_t>(k), 0);
        row[static_cast<size_t>(i)] = g.factors[static_cast<size_t>(i)];
        rel_rows.push_back(std::move(row));
    }
    for (const auto& h : subgroup_gens) {
        if (static_cast<Int>(h.size()) != k) throw std::invalid_argument("quotient: generator tuple length mismatch");
        rel_rows.push_back(std::vector<Int>(h.begin(), h.end()));
    }
    IntMat rel = k == 0 ? IntMat(0, 0) : IntMat::from_rows(rel_rows);
    AbelianQuotient aq = abelian_quotient(k, rel);

    FinAbGroup q;
    q.factors = aq.factors;
    q.label = q.canonical_name();

    std::vector<Int> images;
    for (Int i = 0; i < k; ++i) {
        FinAbGroup::Elem img(q.factors.size());
        for (Int r = 0; r < static_cast<Int>(q.factors.size()); ++r)
            img[static_cast<size_t>(r)] = mod_floor(aq.proj.at(r, i), q.factors[static_cast<size_t>(r)]);
        images.push_back(q.index_of(img));
    }
    Homomorphism proj = Homomorphism::from_gen_images(g, q, std::move(images));
    return {std::move(q), std::move(proj)};
}

bool are_isomorphic(const FinAbGroup& a, const FinAbGroup& b) { return a.factors == b.factors; }

bool are_isomorphic_tables(const FinGroup& a, const FinGroup& b, const Budget& budget) {
    if (a.order != b.order) return false;
    if (a.order > 16) throw budget_error("are_isomorphic_tables: exhaustive search bounded at order 16", a.order);
    std::multiset<Int> oa, ob;
    for (Int x = 0; x < a.order; ++x) {
        oa.insert(a.element_order(x));
        ob.insert(b.element_order(x));
    }
    if (oa != ob) return false;

    ClosurePlan plan = closure_plan(a);
    Int k = static_cast<Int>(plan.gens.size());
    Int total = 1;
    for (Int i = 0; i < k; ++i) total = checked_mul(total, b.order);
    (void)budget;
    for (Int idx = 0; idx < total; ++idx) {
        std::vector<Int> imgs(static_cast<size_t>(k));
        Int rest = idx;
        for (Int i = k; i-- > 0;) {
            imgs[static_cast<size_t>(i)] = rest % b.order;
            rest /= b.order;
        }
        std::vector<Int> map;
        if (!extend_candidate(a, plan, GroupVal(b), imgs, map)) continue;
        std::vector<bool> hit(static_cast<size_t>(b.order), false);
        for (Int v : map) hit[static_cast<size_t>(v)] = true;
        if (std::find(hit.begin(), hit.end(), false) == hit.end()) return true;
    }
    return false;
}

Subgroup subgroup_closure(const FinGroup& g, const std::vector<Int>& gens) {
    std::set<Int> closure{0};
    bool grew = true;
    std::vector<Int> seed = gens;
    for (Int e : seed) closure.insert(e);
    while (grew) {
        grew = false;
        std::vector<Int> cur(closure.begin(), closure.end());
        for (Int a : cur)
            for (Int b : cur)
                if (closure.insert(g.mul(a, b)).second) grew = true;
    }
    Subgroup s;
    s.elements.assign(closure.begin(), closure.end());
    s.generators = greedy_generators(GroupVal(g), s.elements);
    return s;
}

std::vector<Subgroup> all_subgroups(const FinGroup& g, const Budget& budget) {
    if (g.order > budget.subgroup_order)
        throw budget_error("all_subgroups: order exceeds subgroup-search budget", g.order);
    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> queue;
    Subgroup triv = subgroup_closure(g, {});
    seen.insert(triv.elements);
    queue.push_back(triv.elements);
    for (size_t head = 0; head < queue.size(); ++head) {
        std::vector<Int> base = queue[head];
        for (Int x = 0; x < g.order; ++x) {
            if (std::binary_search(base.begin(), base.end(), x)) continue;
            std::vector<Int> gens = base;
            gens.push_back(x);
            Subgroup bigger = subgroup_closure(g, gens);
            if (seen.insert(bigger.elements).second) queue.push_back(bigger.elements);
        }
    }
    std::vector<std::vector<Int>> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<Subgroup> out;
    for (auto& elems : sorted) {
        Subgroup s;
        s.elements = elems;
        s.generators = greedy_generators(GroupVal(g), s.elements);
        out.push_back(std::move(s));
    }
    return out;
}

bool is_normal(const FinGroup& g, const Subgroup& h) {
    for (Int x = 0; x < g.order; ++x) {
        Int xi = g.inv(x);
        for (Int n : h.elements)
            if (!std::binary_search(h.elements.begin(), h.elements.end(), g.mul(g.mul(x, n), xi))) return false;
    }
    return true;
}

std::pair<FinGroup, std::vector<Int>> quotient_by_normal(const FinGroup& g, const Subgroup& n, const Budget& budget) {
    // cosets keyed by their minimal element; identity coset sorts first
    std::vector<Int> coset_rep(static_cast<size_t>(g.order), -1);
    std::vector<Int> reps;
    for (Int x = 0; x < g.order; ++x) {
        if (coset_rep[static_cast<size_t>(x)] >= 0) continue;
        std::vector<Int> coset;
        for (Int h : n.elements) coset.push_back(g.mul(x, h));
        Int rep = *std::min_element(coset.begin(), coset.end());
        for (Int y : coset) coset_rep[static_cast<size_t>(y)] = rep;
        reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());
    std::map<Int, Int> rep_index;
    for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<Int>(i);

    Int q = static_cast<Int>(reps.size());
    std::vector<Int> table(static_cast<size_t>(q * q));
    for (Int i = 0; i < q; ++i)
        for (Int j = 0; j < q; ++j)
            table[static_cast<size_t>(i * q + j)] =
                rep_index.at(coset_rep[static_cast<size_t>(g.mul(reps[static_cast<size_t>(i)], reps[static_cast<size_t>(j)]))]);
    FinGroup quot = FinGroup::from_table(std::move(table), g.name + "/N" + std::to_string(n.elements.size()), budget);
    std::vector<Int> proj(static_cast<size_t>(g.order));
    for (Int x = 0; x < g.order; ++x) proj[static_cast<size_t>(x)] = rep_index.at(coset_rep[static_cast<size_t>(x)]);
    return {std::move(quot), std::move(proj)};
}

// ------------------------------------------------------------------ catalog

const FinGroup& symmetric3() {
    static const FinGroup g = FinGroup::from_table(
        {0, 1, 2, 3, 4, 5,  //
         1, 2, 0, 5, 3, 4,  //
         2, 0, 1, 4, 5, 3,  //
         3, 4, 5, 0, 1, 2,  //
         4, 5, 3, 2, 0, 1,  //
         5, 3, 4, 1, 2, 0},
        "S3");
    return g;
}

const FinGroup& dihedral4() {
    static const FinGroup g = FinGroup::from_table(
        {0, 1, 2, 3, 4, 5, 6, 7,  //
         1, 2, 3, 0, 5, 6, 7, 4,  //
         2, 3, 0, 1, 6, 7, 4, 5,  //
         3, 0, 1, 2, 7, 4, 5, 6,  //
         4, 7, 6, 5, 0, 3, 2, 1,  //
         5, 4, 7, 6, 1, 0, 3, 2,  //
         6, 5, 4, 7, 2, 1, 0, 3,  //
         7, 6, 5, 4, 3, 2, 1, 0},
        "D4");
    return g;
}

const FinGroup& quaternion8() {
    static const FinGroup g = FinGroup::from_table(
        {0, 1, 2, 3, 4, 5, 6, 7,  //
         1, 0, 3, 2, 5, 4, 7, 6,  //
         2, 3, 1, 0, 6, 7, 5, 4,  //
         3, 2, 0, 1, 7, 6, 4, 5,  //
         4, 5, 7, 6, 1, 0, 2, 3,  //
         5, 4, 6, 7, 0, 1, 3, 2,  //
         6, 7, 4, 5, 3, 2, 1, 0,  //
         7, 6, 5, 4, 2, 3, 0, 1},
        "Q8");
    return g;
}

std::vector<FinAbGroup> abelian_catalog(Int max_order) {
    std::vector<std::vector<Int>> chains;
    std::vector<Int> cur;
    // invariant-factor chains d1 | d2 | ... with product <= max_order
    auto rec = [&](auto&& self, Int min_factor, Int budget_left) -> void {
        chains.push_back(cur);
        for (Int d = min_factor; d <= budget_left; ++d) {
            if (!cur.empty() && d % cur.back() != 0) continue;
            cur.push_back(d);
            self(self, d, budget_left / d);
            cur.pop_back();
        }
    };
    rec(rec, 2, max_order);
    std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
        Int pa = 1, pb = 1;
        for (Int x : a) pa *= x;
        for (Int x : b) pb *= x;
        if (pa != pb) return pa < pb;
        return a < b;
    });
    std::vector<FinAbGroup> out;
    for (auto& ch : chains) {
        FinAbGroup g;
        g.factors = ch;
        g.label = g.canonical_name();
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace pfc
