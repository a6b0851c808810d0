#include "pfc/approx.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pfc/parallel.hpp"

namespace pfc {

// -------------------------------------------------------------- SourceGroup

SourceGroup SourceGroup::from_finite(GroupVal g) {
    SourceGroup s;
    s.kind = Kind::finite;
    s.finite_group = std::move(g);
    return s;
}

SourceGroup SourceGroup::fg_abelian(Int rank, const std::vector<Int>& torsion) {
    if (rank < 0) throw std::invalid_argument("fg_abelian: negative rank");
    for (Int t : torsion)
        if (t < 2) throw std::invalid_argument("fg_abelian: torsion factors must be >= 2");
    SourceGroup s;
    s.kind = Kind::fg_abelian;
    s.rank = rank;
    s.torsion = torsion;
    return s;
}

SourceGroup SourceGroup::fp_space(Int p, Int dim) {
    PrimeField field(p);
    if (dim < 0) throw std::invalid_argument("fp_space: negative dimension");
    SourceGroup s;
    s.kind = Kind::fp_space;
    s.p = field.p;
    s.dim = dim;
    s.torsion.assign(static_cast<size_t>(dim), p);
    return s;
}

SourceGroup SourceGroup::seq_model(Int p, Int level) {
    PrimeField field(p);
    if (level < 0) throw std::invalid_argument("seq_model: level must be >= 0");
    SourceGroup s;
    s.kind = Kind::seq_model;
    s.p = field.p;
    s.level = level;
    return s;
}

std::string SourceGroup::describe() const {
    switch (kind) {
        case Kind::finite:
            return group_name(*finite_group);
        case Kind::fg_abelian: {
            std::string out;
            if (rank == 1) out = "Z";
            if (rank > 1) out = "Z^" + std::to_string(rank);
            for (Int t : torsion) {
                if (!out.empty()) out += " x ";
                out += "Z/" + std::to_string(t);
            }
            return out.empty() ? "1" : out;
        }
        case Kind::fp_space:
            return "F" + std::to_string(p) + "^" + std::to_string(dim);
        case Kind::seq_model:
            return "seq(" + std::to_string(p) + "," + std::to_string(level) + ")";
    }
    return "?";
}

Int SourceGroup::num_generators() const {
    switch (kind) {
        case Kind::fg_abelian:
            return rank + static_cast<Int>(torsion.size());
        case Kind::fp_space:
            return dim;
        default:
            throw std::logic_error("num_generators: source has no generator presentation");
    }
}

std::vector<Int> SourceGroup::generator_orders() const {
    std::vector<Int> orders;
    if (kind == Kind::fg_abelian) {
        orders.assign(static_cast<size_t>(rank), 0);
        for (Int t : torsion) orders.push_back(t);
    } else if (kind == Kind::fp_space) {
        orders.assign(static_cast<size_t>(dim), p);
    } else {
        throw std::logic_error("generator_orders: source has no generator presentation");
    }
    return orders;
}

Int SourceGroup::order_if_finite() const {
    switch (kind) {
        case Kind::finite:
            return group_order(*finite_group);
        case Kind::fg_abelian: {
            if (rank > 0) return -1;
            Int n = 1;
            for (Int t : torsion) n = checked_mul(n, t);
            return n;
        }
        case Kind::fp_space: {
            Int n = 1;
            for (Int i = 0; i < dim; ++i) n = checked_mul(n, p);
            return n;
        }
        case Kind::seq_model:
            return -1;
    }
    return -1;
}

// ------------------------------------------------------------ Approximation

IntMat Approximation::phi_matrix() const {
    if (!phi_gen_images || !std::holds_alternative<FinAbGroup>(target))
        throw std::logic_error("phi_matrix: needs generator images and an abelian target");
    const auto& ab = std::get<FinAbGroup>(target);
    Int k = static_cast<Int>(phi_gen_images->size());
    IntMat m(ab.rank(), k);
    for (Int i = 0; i < k; ++i) {
        FinAbGroup::Elem t = ab.elem_at((*phi_gen_images)[static_cast<size_t>(i)]);
        for (Int r = 0; r < ab.rank(); ++r) m.at(r, i) = t[static_cast<size_t>(r)];
    }
    return m;
}

Int apply_phi(const SourceGroup& src, const Approximation& a, const SourceElem& g) {
    if (src.kind == SourceGroup::Kind::finite) {
        if (g.size() != 1) throw std::invalid_argument("apply_phi: finite source element is a single index");
        return (*a.phi_elem_map)[static_cast<size_t>(g[0])];
    }
    if (!src.is_abelian_like()) throw std::invalid_argument("apply_phi: unsupported source kind");
    if (static_cast<Int>(g.size()) != src.num_generators())
        throw std::invalid_argument("apply_phi: element tuple length mismatch");
    Int out = 0;
    const auto& imgs = *a.phi_gen_images;
    for (size_t i = 0; i < imgs.size(); ++i) out = a.table.mul(out, a.table.pow(imgs[i], g[i]));
    return out;
}

Int ApproxDiagram::find_node(const std::string& key) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].key == key) return static_cast<Int>(i);
    return -1;
}

// -------------------------------------------------- surjective enumeration

namespace {

std::string join_ints(const std::vector<Int>& v, char sep = ',') {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string lattice_key(const IntMat& h) {
    std::string s = "ker[";
    for (Int i = 0; i < h.rows; ++i) {
        if (i) s += ";";
        s += join_ints(h.row(i));
    }
    return s + "]";
}

std::string subspace_key(const Subspace& z) {
    std::string s = "ker[";
    for (Int i = 0; i < z.basis.rows; ++i) {
        if (i) s += ";";
        s += join_ints(z.basis.row(i));
    }
    return s + "]";
}

// Full-rank upper-triangular HNF bases of sublattices of Z^m with index
// (= diagonal product) <= bound, ordered by index then entries.
std::vector<IntMat> hnf_superlattices(Int m, Int bound, const Budget& budget) {
    std::vector<IntMat> out;
    if (m == 0) {
        out.push_back(IntMat(0, 0));
        return out;
    }
    std::vector<Int> diag(static_cast<size_t>(m), 1);
    Int produced = 0;
    auto emit_for_diag = [&](auto&& self, IntMat& h, Int col) -> void {
        if (col == m) {
            out.push_back(h);
            if (++produced > budget.hom_candidates)
                throw budget_error("hnf_superlattices: too many lattices", produced);
            return;
        }
        // free entries above the diagonal of this column, each in [0, diag)
        std::vector<Int> rows_above;
        for (Int r = 0; r < col; ++r) rows_above.push_back(r);
        Int combos = 1;
        for (size_t i = 0; i < rows_above.size(); ++i) combos = checked_mul(combos, diag[static_cast<size_t>(col)]);
        for (Int idx = 0; idx < combos; ++idx) {
            Int rest = idx;
            for (size_t i = rows_above.size(); i-- > 0;) {
                h.at(rows_above[i], col) = rest % diag[static_cast<size_t>(col)];
                rest /= diag[static_cast<size_t>(col)];
            }
            self(self, h, col + 1);
        }
        for (Int r : rows_above) h.at(r, col) = 0;
    };
    auto rec_diag = [&](auto&& self, Int pos, Int left) -> void {
        if (pos == m) {
            IntMat h(m, m);
            for (Int i = 0; i < m; ++i) h.at(i, i) = diag[static_cast<size_t>(i)];
            emit_for_diag(emit_for_diag, h, 0);
            return;
        }
        for (Int d = 1; d <= left; ++d) {
            diag[static_cast<size_t>(pos)] = d;
            self(self, pos + 1, left / d);
        }
    };
    rec_diag(rec_diag, 0, bound);
    std::sort(out.begin(), out.end(), [](const IntMat& a, const IntMat& b) {
        Int da = 1, db = 1;
        for (Int i = 0; i < a.rows; ++i) da *= a.at(i, i);
        for (Int i = 0; i < b.rows; ++i) db *= b.at(i, i);
        if (da != db) return da < db;
        return a.a < b.a;
    });
    return out;
}

void check_edge_commutes(const SourceGroup& src, const Approximation& a, const Approximation& b,
                         const std::vector<Int>& map) {
    if (src.kind == SourceGroup::Kind::finite) {
        Int n = group_order(*src.finite_group);
        for (Int x = 0; x < n; ++x)
            if (map[static_cast<size_t>((*a.phi_elem_map)[static_cast<size_t>(x)])] !=
                (*b.phi_elem_map)[static_cast<size_t>(x)])
                throw std::logic_error("diagram edge does not commute with the structure maps");
        return;
    }
    const auto& ia = *a.phi_gen_images;
    const auto& ib = *b.phi_gen_images;
    for (size_t i = 0; i < ia.size(); ++i)
        if (map[static_cast<size_t>(ia[i])] != ib[i])
            throw std::logic_error("diagram edge does not commute with the structure maps");
}

}  // namespace

ApproxDiagram surjective_approximations(const SourceGroup& source, Int bound, const Budget& budget) {
    if (bound < 1) throw std::invalid_argument("surjective_approximations: bound must be >= 1");
    if (source.kind == SourceGroup::Kind::seq_model)
        throw std::invalid_argument("surjective_approximations: sequence model has its own witness machinery");

    ApproxDiagram dia;
    dia.source = source;
    dia.bound = bound;
    dia.mode = "surjective";

    if (source.kind == SourceGroup::Kind::finite) {
        FinGroup table = group_to_table(*source.finite_group, budget);
        std::vector<Subgroup> subs = all_subgroups(table, budget);
        for (const auto& n : subs) {
            if (!is_normal(table, n)) continue;
            Int index = table.order / static_cast<Int>(n.elements.size());
            if (index > bound) continue;
            auto [quot, proj] = quotient_by_normal(table, n, budget);
            Approximation a;
            a.key = "ker{" + join_ints(n.elements) + "}";
            a.table = quot;
            a.target = GroupVal(quot);
            a.phi_elem_map = proj;
            a.surjective = true;
            a.kernel_elements = n.elements;
            dia.nodes.push_back(std::move(a));
        }
        std::sort(dia.nodes.begin(), dia.nodes.end(), [](const Approximation& x, const Approximation& y) {
            if (x.order() != y.order()) return x.order() < y.order();
            return x.key < y.key;
        });
        for (size_t i = 0; i < dia.nodes.size(); ++i)
            for (size_t j = 0; j < dia.nodes.size(); ++j) {
                if (i == j) continue;
                const auto& ni = dia.nodes[i];
                const auto& nj = dia.nodes[j];
                if (!std::includes(nj.kernel_elements->begin(), nj.kernel_elements->end(),
                                   ni.kernel_elements->begin(), ni.kernel_elements->end()))
                    continue;
                // induced map on cosets via representatives
                std::vector<Int> rep(static_cast<size_t>(ni.order()), -1);
                for (Int x = 0; x < table.order; ++x) {
                    Int c = (*ni.phi_elem_map)[static_cast<size_t>(x)];
                    if (rep[static_cast<size_t>(c)] < 0) rep[static_cast<size_t>(c)] = x;
                }
                std::vector<Int> map(static_cast<size_t>(ni.order()));
                for (Int c = 0; c < ni.order(); ++c)
                    map[static_cast<size_t>(c)] = (*nj.phi_elem_map)[static_cast<size_t>(rep[static_cast<size_t>(c)])];
                check_edge_commutes(source, ni, nj, map);
                dia.edges.push_back({static_cast<Int>(i), static_cast<Int>(j), std::move(map)});
            }
        return dia;
    }

    if (source.kind == SourceGroup::Kind::fp_space) {
        Int p = source.p, d = source.dim;
        std::vector<Subspace> kernels = enumerate_all_subspaces(p, d, budget);
        std::vector<QuotientSpace> quots;
        for (const auto& z : kernels) {
            Int index = 1;
            for (Int i = 0; i < d - z.dim(); ++i) index = checked_mul(index, p);
            if (index > bound) continue;
            QuotientSpace qs = quotient_space(d, z);
            FinAbGroup target;
            target.factors.assign(static_cast<size_t>(qs.dim()), p);
            target.label = target.canonical_name();
            Approximation a;
            a.key = subspace_key(z);
            a.table = target.to_table(budget);
            std::vector<Int> imgs;
            for (Int i = 0; i < d; ++i) {
                FinAbGroup::Elem t(static_cast<size_t>(qs.dim()));
                for (Int r = 0; r < qs.dim(); ++r) t[static_cast<size_t>(r)] = qs.projection.at(r, i);
                imgs.push_back(target.index_of(t));
            }
            a.phi_gen_images = std::move(imgs);
            a.target = GroupVal(std::move(target));
            a.surjective = true;
            a.kernel_subspace = z;
            dia.nodes.push_back(std::move(a));
            quots.push_back(std::move(qs));
        }
        // sort nodes (and their quotient data) by index then kernel basis
        std::vector<size_t> perm(dia.nodes.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(), [&](size_t x, size_t y) {
            const auto& a = dia.nodes[x];
            const auto& b = dia.nodes[y];
            if (a.order() != b.order()) return a.order() < b.order();
            return a.key < b.key;
        });
        std::vector<Approximation> nodes;
        std::vector<QuotientSpace> qsorted;
        for (size_t i : perm) {
            nodes.push_back(std::move(dia.nodes[i]));
            qsorted.push_back(std::move(quots[i]));
        }
        dia.nodes = std::move(nodes);
        for (size_t i = 0; i < dia.nodes.size(); ++i)
            for (size_t j = 0; j < dia.nodes.size(); ++j) {
                if (i == j) continue;
                const auto& ni = dia.nodes[i];
                const auto& nj = dia.nodes[j];
                if (!nj.kernel_subspace->contains_subspace(*ni.kernel_subspace)) continue;
                const auto& ti = std::get<FinAbGroup>(ni.target);
                const auto& tj = std::get<FinAbGroup>(nj.target);
                std::vector<Int> map(static_cast<size_t>(ni.order()));
                for (Int x = 0; x < ni.order(); ++x) {
                    FinAbGroup::Elem t = ti.elem_at(x);
                    FpVec lift = qsorted[i].section.apply(FpVec(t.begin(), t.end()));
                    FpVec img = qsorted[j].projection.apply(lift);
                    map[static_cast<size_t>(x)] = tj.index_of(FinAbGroup::Elem(img.begin(), img.end()));
                }
                check_edge_commutes(source, ni, nj, map);
                dia.edges.push_back({static_cast<Int>(i), static_cast<Int>(j), std::move(map)});
            }
        return dia;
    }

    // fg_abelian: kernels are superlattices of the relation lattice in Z^m
    Int r = source.rank;
    Int m = source.num_generators();
    std::vector<IntMat> lattices = hnf_superlattices(m, bound, budget);
    std::vector<AbelianQuotient> aqs;
    for (const auto& h : lattices) {
        bool contains_relations = true;
        for (size_t t = 0; t < source.torsion.size() && contains_relations; ++t) {
            std::vector<Int> rel(static_cast<size_t>(m), 0);
            rel[static_cast<size_t>(r + static_cast<Int>(t))] = source.torsion[t];
            contains_relations = hnf_contains(h, rel);
        }
        if (!contains_relations) continue;
        AbelianQuotient aq = abelian_quotient(m, h);
        FinAbGroup target;
        target.factors = aq.factors;
        target.label = target.canonical_name();
        if (target.order() > bound) continue;  // defensive; index = det h <= bound already
        Approximation a;
        a.key = lattice_key(h);
        a.table = target.to_table(budget);
        std::vector<Int> imgs;
        for (Int i = 0; i < m; ++i) {
            FinAbGroup::Elem t(target.factors.size());
            for (Int rr = 0; rr < static_cast<Int>(target.factors.size()); ++rr)
                t[static_cast<size_t>(rr)] = mod_floor(aq.proj.at(rr, i), target.factors[static_cast<size_t>(rr)]);
            imgs.push_back(target.index_of(t));
        }
        a.phi_gen_images = std::move(imgs);
        a.target = GroupVal(std::move(target));
        a.surjective = true;
        a.kernel_lattice = h;
        dia.nodes.push_back(std::move(a));
        aqs.push_back(std::move(aq));
    }
    for (size_t i = 0; i < dia.nodes.size(); ++i)
        for (size_t j = 0; j < dia.nodes.size(); ++j) {
            if (i == j) continue;
            const auto& ni = dia.nodes[i];
            const auto& nj = dia.nodes[j];
            bool contained = true;
            for (Int row = 0; row < ni.kernel_lattice->rows && contained; ++row)
                contained = hnf_contains(*nj.kernel_lattice, ni.kernel_lattice->row(row));
            if (!contained) continue;
            const auto& ti = std::get<FinAbGroup>(ni.target);
            const auto& tj = std::get<FinAbGroup>(nj.target);
            std::vector<Int> map(static_cast<size_t>(ni.order()));
            for (Int x = 0; x < ni.order(); ++x) {
                FinAbGroup::Elem t = ti.elem_at(x);
                // integer lift, then project through the other quotient
                std::vector<Int> lift(static_cast<size_t>(m), 0);
                for (Int c = 0; c < m; ++c) {
                    Int acc = 0;
                    for (Int rr = 0; rr < static_cast<Int>(t.size()); ++rr)
                        acc = checked_add(acc, checked_mul(aqs[i].section.at(c, rr), t[static_cast<size_t>(rr)]));
                    lift[static_cast<size_t>(c)] = acc;
                }
                FinAbGroup::Elem img(tj.factors.size());
                for (Int rr = 0; rr < static_cast<Int>(tj.factors.size()); ++rr) {
                    Int acc = 0;
                    for (Int c = 0; c < m; ++c)
                        acc = checked_add(acc, checked_mul(aqs[j].proj.at(rr, c), lift[static_cast<size_t>(c)]));
                    img[static_cast<size_t>(rr)] = mod_floor(acc, tj.factors[static_cast<size_t>(rr)]);
                }
                map[static_cast<size_t>(x)] = tj.index_of(img);
            }
            check_edge_commutes(source, ni, nj, map);
            dia.edges.push_back({static_cast<Int>(i), static_cast<Int>(j), std::move(map)});
        }
    return dia;
}

// --------------------------------------------------------- full enumeration

std::vector<std::vector<Int>> enumerate_source_homs(const SourceGroup& source, const FinGroup& target,
                                                    const Budget& budget) {
    std::vector<Int> orders = source.generator_orders();
    Int k = static_cast<Int>(orders.size());
    Int m = target.order;
    Int total = 1;
    for (Int i = 0; i < k; ++i) {
        total = checked_mul(total, m);
        if (total > budget.hom_candidates)
            throw budget_error("enumerate_source_homs: candidate space too large", total);
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
        for (Int i = 0; i < k; ++i) {
            Int d = orders[static_cast<size_t>(i)];
            if (d > 0 && target.pow(imgs[static_cast<size_t>(i)], d) != 0) return false;
        }
        for (Int i = 0; i < k; ++i)
            for (Int j = i + 1; j < k; ++j) {
                Int a = imgs[static_cast<size_t>(i)], b = imgs[static_cast<size_t>(j)];
                if (target.mul(a, b) != target.mul(b, a)) return false;
            }
        return true;
    });
    std::vector<std::vector<Int>> out;
    out.reserve(hits.size());
    for (Int idx : hits) out.push_back(decode(idx));
    return out;
}

ApproxDiagram all_approximations(const SourceGroup& source, Int bound, const std::vector<GroupVal>& catalog,
                                 const Budget& budget) {
    if (source.kind == SourceGroup::Kind::seq_model)
        throw std::invalid_argument("all_approximations: sequence model has its own witness machinery");
    ApproxDiagram dia;
    dia.source = source;
    dia.bound = bound;
    dia.mode = "full";
    dia.with_identity_edges = true;

    std::vector<FinGroup> tables;
    for (const auto& g : catalog) {
        if (group_order(g) > bound) continue;
        tables.push_back(group_to_table(g, budget));
    }

    std::vector<GroupVal> kept;
    for (const auto& g : catalog)
        if (group_order(g) <= bound) kept.push_back(g);

    std::vector<Int> node_group;  // catalog-table index per node
    for (size_t c = 0; c < tables.size(); ++c) {
        const FinGroup& f = tables[c];
        if (source.kind == SourceGroup::Kind::finite) {
            auto homs = enumerate_homs(*source.finite_group, GroupVal(f), budget);
            for (const auto& h : homs) {
                Approximation a;
                a.key = f.name + ":[" + join_ints(h.element_map()) + "]";
                a.target = kept[c];
                a.table = f;
                a.phi_elem_map = h.element_map();
                a.surjective = h.is_surjective();
                dia.nodes.push_back(std::move(a));
                node_group.push_back(static_cast<Int>(c));
            }
        } else if (source.is_abelian_like()) {
            auto img_tuples = enumerate_source_homs(source, f, budget);
            for (auto& imgs : img_tuples) {
                Approximation a;
                a.key = f.name + ":[" + join_ints(imgs) + "]";
                a.target = kept[c];
                a.table = f;
                Subgroup img_sub = subgroup_closure(f, imgs);
                a.surjective = static_cast<Int>(img_sub.elements.size()) == f.order;
                a.phi_gen_images = std::move(imgs);
                dia.nodes.push_back(std::move(a));
                node_group.push_back(static_cast<Int>(c));
            }
        } else {
            throw std::invalid_argument("all_approximations: unsupported source kind");
        }
    }

    // memoized hom sets between catalog tables
    std::map<std::pair<Int, Int>, std::vector<std::vector<Int>>> hom_cache;
    auto homs_between_tables = [&](Int a, Int b) -> const std::vector<std::vector<Int>>& {
        auto key = std::make_pair(a, b);
        auto it = hom_cache.find(key);
        if (it != hom_cache.end()) return it->second;
        std::vector<std::vector<Int>> maps;
        for (const auto& h : enumerate_homs(GroupVal(tables[static_cast<size_t>(a)]),
                                            GroupVal(tables[static_cast<size_t>(b)]), budget))
            maps.push_back(h.element_map());
        return hom_cache.emplace(key, std::move(maps)).first->second;
    };

    auto commutes = [&](const Approximation& v, const Approximation& w, const std::vector<Int>& map) {
        if (source.kind == SourceGroup::Kind::finite) {
            Int n = group_order(*source.finite_group);
            for (Int x = 0; x < n; ++x)
                if (map[static_cast<size_t>((*v.phi_elem_map)[static_cast<size_t>(x)])] !=
                    (*w.phi_elem_map)[static_cast<size_t>(x)])
                    return false;
            return true;
        }
        const auto& iv = *v.phi_gen_images;
        const auto& iw = *w.phi_gen_images;
        for (size_t i = 0; i < iv.size(); ++i)
            if (map[static_cast<size_t>(iv[i])] != iw[i]) return false;
        return true;
    };

    for (size_t i = 0; i < dia.nodes.size(); ++i)
        for (size_t j = 0; j < dia.nodes.size(); ++j) {
            const auto& maps = homs_between_tables(node_group[i], node_group[j]);
            for (const auto& map : maps) {
                if (i == j) {
                    bool is_identity = true;
                    for (size_t x = 0; x < map.size(); ++x)
                        if (map[x] != static_cast<Int>(x)) {
                            is_identity = false;
                            break;
                        }
                    if (is_identity && !dia.with_identity_edges) continue;
                }
                if (commutes(dia.nodes[i], dia.nodes[j], map))
                    dia.edges.push_back({static_cast<Int>(i), static_cast<Int>(j), map});
            }
        }
    return dia;
}

std::vector<Homomorphism> hom_between(const SourceGroup& source, const Approximation& v, const Approximation& w,
                                      const Budget& budget) {
    std::vector<Homomorphism> out;
    for (const auto& h : enumerate_homs(GroupVal(v.table), GroupVal(w.table), budget)) {
        bool ok = true;
        if (source.kind == SourceGroup::Kind::finite) {
            Int n = group_order(*source.finite_group);
            for (Int x = 0; x < n && ok; ++x)
                ok = h.apply((*v.phi_elem_map)[static_cast<size_t>(x)]) == (*w.phi_elem_map)[static_cast<size_t>(x)];
        } else {
            const auto& iv = *v.phi_gen_images;
            const auto& iw = *w.phi_gen_images;
            for (size_t i = 0; i < iv.size() && ok; ++i) ok = h.apply(iv[i]) == iw[i];
        }
        if (ok) out.push_back(h);
    }
    return out;
}

std::string to_dot(const ApproxDiagram& d) {
    std::ostringstream os;
    os << "digraph {\n";
    for (size_t i = 0; i < d.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << group_name(d.nodes[i].target) << "\"];\n";
    std::vector<std::pair<Int, Int>> arrows;
    for (const auto& e : d.edges) arrows.emplace_back(e.from, e.to);
    std::sort(arrows.begin(), arrows.end());
    arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
    for (const auto& [from, to] : arrows) os << "  n" << from << " -> n" << to << ";\n";
    os << "}\n";
    return os.str();
}

std::vector<GroupVal> default_catalog() {
    std::vector<GroupVal> out;
    for (auto& g : abelian_catalog(8)) out.push_back(GroupVal(std::move(g)));
    out.push_back(GroupVal(symmetric3()));
    out.push_back(GroupVal(dihedral4()));
    out.push_back(GroupVal(quaternion8()));
    return out;
}

std::vector<GroupVal> fp_catalog(Int p, Int bound) {
    std::vector<GroupVal> out;
    Int order = 1;
    for (Int j = 0;; ++j) {
        if (order > bound) break;
        FinAbGroup g;
        g.factors.assign(static_cast<size_t>(j), p);
        g.label = g.canonical_name();
        out.push_back(GroupVal(std::move(g)));
        order = checked_mul(order, p);
    }
    return out;
}

void validate_diagram(const ApproxDiagram& d) {
    std::set<std::string> keys;
    for (const auto& n : d.nodes)
        if (!keys.insert(n.key).second) throw std::logic_error("validate_diagram: duplicate node key " + n.key);

    for (const auto& e : d.edges) {
        const auto& a = d.nodes[static_cast<size_t>(e.from)];
        const auto& b = d.nodes[static_cast<size_t>(e.to)];
        // edge maps are verified homomorphisms
        Homomorphism::from_element_map(GroupVal(a.table), GroupVal(b.table), e.map);
        check_edge_commutes(d.source, a, b, e.map);
    }

    // closure under composition (identity composites only when stored)
    std::set<std::tuple<Int, Int, std::vector<Int>>> edge_set;
    std::map<Int, std::vector<const ApproxMorphism*>> edges_from;
    for (const auto& e : d.edges) {
        edge_set.insert({e.from, e.to, e.map});
        edges_from[e.from].push_back(&e);
    }
    for (const auto& e1 : d.edges)
        for (const auto* e2 : edges_from[e1.to]) {
            std::vector<Int> comp(e1.map.size());
            for (size_t x = 0; x < e1.map.size(); ++x) comp[x] = e2->map[static_cast<size_t>(e1.map[x])];
            bool is_identity = true;
            for (size_t x = 0; x < comp.size(); ++x)
                if (comp[x] != static_cast<Int>(x)) {
                    is_identity = false;
                    break;
                }
            if (e1.from == e2->to && is_identity && !d.with_identity_edges) continue;
            if (!edge_set.count({e1.from, e2->to, comp}))
                throw std::logic_error("validate_diagram: edges not closed under composition");
        }
}

}  // namespace pfc
