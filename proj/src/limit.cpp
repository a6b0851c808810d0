#include "pfc/limit.hpp"

#include <algorithm>
#include <map>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pfc/parallel.hpp"

namespace pfc {

BareDiagram BareDiagram::from(const ApproxDiagram& d) {
    BareDiagram b;
    for (const auto& n : d.nodes) {
        b.keys.push_back(n.key);
        b.tables.push_back(n.table);
    }
    b.edges = d.edges;
    return b;
}

Int BareDiagram::product_order() const {
    Int total = 1;
    for (const auto& t : tables) total = checked_mul(total, t.order);
    return total;
}

bool is_compatible(const BareDiagram& d, const std::vector<Int>& assignment) {
    for (const auto& e : d.edges)
        if (e.map[static_cast<size_t>(assignment[static_cast<size_t>(e.from)])] !=
            assignment[static_cast<size_t>(e.to)])
            return false;
    return true;
}

namespace {

std::vector<Int> decode_assignment(const BareDiagram& d, Int flat) {
    std::vector<Int> a(d.tables.size());
    for (size_t i = d.tables.size(); i-- > 0;) {
        a[i] = flat % d.tables[i].order;
        flat /= d.tables[i].order;
    }
    return a;
}

std::vector<LimitElement> solve_brute_force(const BareDiagram& d, const Budget& budget) {
    Int total;
    try {
        total = d.product_order();
    } catch (const std::overflow_error&) {
        throw budget_error("inverse_limit: brute-force state space too large",
                           std::numeric_limits<Int>::max());
    }
    if (total > budget.solver_states)
        throw budget_error("inverse_limit: brute-force state space too large", total);
    std::vector<Int> hits = par::filter_indices(total, [&](Int flat) {
        std::vector<Int> a = decode_assignment(d, flat);
        return is_compatible(d, a);
    });
    std::vector<LimitElement> out;
    out.reserve(hits.size());
    for (Int flat : hits) out.push_back(LimitElement{decode_assignment(d, flat)});
    return out;  // ascending flat index = lex order on assignments
}

std::vector<LimitElement> solve_fiber_product(const BareDiagram& d, const Budget& budget) {
    size_t n = d.tables.size();
    // process large nodes first; they pin the families early
    std::vector<Int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Int a, Int b) {
        if (d.tables[static_cast<size_t>(a)].order != d.tables[static_cast<size_t>(b)].order)
            return d.tables[static_cast<size_t>(a)].order > d.tables[static_cast<size_t>(b)].order;
        return a < b;
    });
    std::vector<Int> placed_at(n, -1);  // node -> position in processing order

    std::vector<std::vector<Int>> partials{{}};
    for (size_t step = 0; step < n; ++step) {
        Int node = order[step];
        // edges touching this node and already-placed nodes (or itself)
        std::vector<const ApproxMorphism*> in_edges, out_edges, self_edges;
        for (const auto& e : d.edges) {
            bool from_placed = placed_at[static_cast<size_t>(e.from)] >= 0;
            bool to_placed = placed_at[static_cast<size_t>(e.to)] >= 0;
            if (e.from == node && e.to == node)
                self_edges.push_back(&e);
            else if (e.from == node && to_placed)
                out_edges.push_back(&e);
            else if (e.to == node && from_placed)
                in_edges.push_back(&e);
        }
        Int m = d.tables[static_cast<size_t>(node)].order;
        std::vector<std::vector<Int>> next;
        for (const auto& partial : partials) {
            for (Int cand = 0; cand < m; ++cand) {
                bool ok = true;
                for (const auto* e : self_edges)
                    if (e->map[static_cast<size_t>(cand)] != cand) {
                        ok = false;
                        break;
                    }
                for (const auto* e : out_edges) {
                    if (!ok) break;
                    Int tgt = partial[static_cast<size_t>(placed_at[static_cast<size_t>(e->to)])];
                    if (e->map[static_cast<size_t>(cand)] != tgt) ok = false;
                }
                for (const auto* e : in_edges) {
                    if (!ok) break;
                    Int src = partial[static_cast<size_t>(placed_at[static_cast<size_t>(e->from)])];
                    if (e->map[static_cast<size_t>(src)] != cand) ok = false;
                }
                if (!ok) continue;
                std::vector<Int> ext = partial;
                ext.push_back(cand);
                next.push_back(std::move(ext));
                if (static_cast<Int>(next.size()) > budget.limit_elements)
                    throw budget_error("inverse_limit: partial family count exceeds cap",
                                       static_cast<Int>(next.size()));
            }
        }
        partials = std::move(next);
        placed_at[static_cast<size_t>(node)] = static_cast<Int>(step);
        if (partials.empty()) break;
    }

    std::vector<LimitElement> out;
    out.reserve(partials.size());
    for (const auto& partial : partials) {
        std::vector<Int> a(n);
        for (size_t node = 0; node < n; ++node) a[node] = partial[static_cast<size_t>(placed_at[node])];
        out.push_back(LimitElement{std::move(a)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

void fill_group_structure(LimitGroup& g) {
    g.all_abelian = std::all_of(g.tables.begin(), g.tables.end(), [](const FinGroup& t) { return t.is_abelian(); });
    if (!g.all_abelian) return;
    Int n = g.order();
    g.invariant_factors.clear();
    if (n <= 1) return;

    std::vector<Int> orders;
    orders.reserve(static_cast<size_t>(n));
    for (const auto& e : g.elements) orders.push_back(g.elem_order(e.assignment));

    // primes dividing the group order
    std::vector<Int> primes;
    Int rest = n;
    for (Int q = 2; q * q <= rest; ++q)
        if (rest % q == 0) {
            primes.push_back(q);
            while (rest % q == 0) rest /= q;
        }
    if (rest > 1) primes.push_back(rest);

    // q^j-torsion counts give the multiset of cyclic q-power factors
    std::map<Int, std::vector<Int>> prime_powers;  // prime -> exponents, descending
    for (Int q : primes) {
        std::vector<Int> torsion_log;  // log_q of the q^j-torsion count
        torsion_log.push_back(0);
        for (Int j = 1;; ++j) {
            Int qj = 1;
            for (Int t = 0; t < j; ++t) qj = checked_mul(qj, q);
            Int count = 0;
            for (Int o : orders)
                if (qj % o == 0) ++count;
            Int lg = 0;
            Int c = count;
            while (c > 1) {
                c /= q;
                ++lg;
            }
            torsion_log.push_back(lg);
            if (count == n || torsion_log[static_cast<size_t>(j)] == torsion_log[static_cast<size_t>(j - 1)]) {
                // stabilized: full q-primary part reached
                break;
            }
        }
        std::vector<Int> exps;
        for (size_t j = 1; j < torsion_log.size(); ++j) {
            Int at_least_j = torsion_log[j] - torsion_log[j - 1];  // #cyclic factors with exponent >= j
            exps.push_back(at_least_j);
        }
        // exps[j-1] = #factors with exponent >= j; convert to the multiset
        std::vector<Int> powers;
        for (size_t j = 0; j < exps.size(); ++j) {
            Int next = j + 1 < exps.size() ? exps[j + 1] : 0;
            for (Int c = 0; c < exps[j] - next; ++c) powers.push_back(static_cast<Int>(j + 1));
        }
        std::sort(powers.rbegin(), powers.rend());
        if (!powers.empty()) prime_powers[q] = std::move(powers);
    }

    size_t slots = 0;
    for (const auto& [q, powers] : prime_powers) slots = std::max(slots, powers.size());
    std::vector<Int> chain(slots, 1);
    for (const auto& [q, powers] : prime_powers)
        for (size_t s = 0; s < powers.size(); ++s) {
            Int qe = 1;
            for (Int t = 0; t < powers[s]; ++t) qe = checked_mul(qe, q);
            chain[s] = checked_mul(chain[s], qe);
        }
    std::reverse(chain.begin(), chain.end());  // ascending divisibility chain
    g.invariant_factors = chain;

    Int check = 1;
    for (Int dd : g.invariant_factors) check = checked_mul(check, dd);
    if (check != n) throw std::logic_error("inverse_limit: invariant factor computation inconsistent");
}

}  // namespace

Int LimitGroup::index_of(const std::vector<Int>& assignment) const {
    LimitElement probe{assignment};
    auto it = std::lower_bound(elements.begin(), elements.end(), probe);
    if (it == elements.end() || !(*it == probe)) return -1;
    return static_cast<Int>(it - elements.begin());
}

LimitElement LimitGroup::identity() const { return LimitElement{std::vector<Int>(tables.size(), 0)}; }

std::vector<Int> LimitGroup::mul(const std::vector<Int>& a, const std::vector<Int>& b) const {
    std::vector<Int> r(tables.size());
    for (size_t i = 0; i < tables.size(); ++i) r[i] = tables[i].mul(a[i], b[i]);
    return r;
}

std::vector<Int> LimitGroup::inv(const std::vector<Int>& a) const {
    std::vector<Int> r(tables.size());
    for (size_t i = 0; i < tables.size(); ++i) r[i] = tables[i].inv(a[i]);
    return r;
}

Int LimitGroup::elem_order(const std::vector<Int>& a) const {
    Int t = 1;
    for (size_t i = 0; i < tables.size(); ++i) t = lcm_int(t, tables[i].element_order(a[i]));
    return t;
}

FinGroup LimitGroup::to_table(const std::string& name, const Budget& budget) const {
    Int n = order();
    if (n > budget.table_order) throw budget_error("LimitGroup::to_table: order exceeds table budget", n);
    std::vector<Int> table(static_cast<size_t>(n * n));
    for (Int i = 0; i < n; ++i)
        for (Int j = 0; j < n; ++j) {
            Int k = index_of(mul(elements[static_cast<size_t>(i)].assignment, elements[static_cast<size_t>(j)].assignment));
            if (k < 0) throw std::logic_error("LimitGroup::to_table: not closed under multiplication");
            table[static_cast<size_t>(i * n + j)] = k;
        }
    // identity family must sit at index 0
    if (index_of(identity().assignment) != 0)
        throw std::logic_error("LimitGroup::to_table: identity family is not the first element");
    return FinGroup::from_table(std::move(table), name, budget);
}

LimitGroup inverse_limit(const BareDiagram& d, SolverKind solver, const Budget& budget) {
    LimitGroup g;
    g.node_keys = d.keys;
    g.tables = d.tables;
    if (solver == SolverKind::automatic) {
        bool small = true;
        Int total = 1;
        for (const auto& t : d.tables) {
            total = checked_mul(total, t.order);
            if (total > budget.solver_states) {
                small = false;
                break;
            }
        }
        solver = small && total <= 4096 ? SolverKind::brute_force : SolverKind::fiber_product;
    }
    g.elements = solver == SolverKind::brute_force ? solve_brute_force(d, budget) : solve_fiber_product(d, budget);
    if (static_cast<Int>(g.elements.size()) > budget.limit_elements)
        throw budget_error("inverse_limit: materialized limit exceeds cap", static_cast<Int>(g.elements.size()));
    fill_group_structure(g);
    return g;
}

LimitGroup inverse_limit(const ApproxDiagram& d, SolverKind solver, const Budget& budget) {
    return inverse_limit(BareDiagram::from(d), solver, budget);
}

LimitElement profinite_projection(const SourceGroup& source, const SourceElem& g, const ApproxDiagram& d) {
    LimitElement e;
    e.assignment.reserve(d.nodes.size());
    for (const auto& node : d.nodes) e.assignment.push_back(apply_phi(source, node, g));
    BareDiagram bare = BareDiagram::from(d);
    if (!is_compatible(bare, e.assignment))
        throw std::logic_error("profinite_projection: image family is not compatible");
    return e;
}

ProjectionInfo projection_kernel_image(const SourceGroup& source, const ApproxDiagram& d, const LimitGroup& limit,
                                       const Budget& budget) {
    ProjectionInfo info;

    if (source.kind == SourceGroup::Kind::finite) {
        Int n = group_order(*source.finite_group);
        std::set<std::vector<Int>> image;
        for (Int x = 0; x < n; ++x) {
            LimitElement fam = profinite_projection(source, {x}, d);
            if (limit.index_of(fam.assignment) < 0)
                throw std::logic_error("projection image escapes the computed limit");
            if (fam.assignment == limit.identity().assignment) info.kernel_elements.push_back(x);
            image.insert(fam.assignment);
        }
        info.injective = static_cast<Int>(image.size()) == n;
        info.surjective = static_cast<Int>(image.size()) == limit.order();
        info.kernel_text = "{" + [&] {
            std::string s;
            for (size_t i = 0; i < info.kernel_elements.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(info.kernel_elements[i]);
            }
            return s;
        }() + "}";
        return info;
    }

    if (!source.is_abelian_like())
        throw std::invalid_argument("projection_kernel_image: unsupported source kind");

    Int m = source.num_generators();
    std::vector<Int> orders = source.generator_orders();

    // families of the generators, and the subgroup of the limit they generate
    std::vector<LimitElement> gen_fams;
    for (Int i = 0; i < m; ++i) {
        SourceElem e(static_cast<size_t>(m), 0);
        e[static_cast<size_t>(i)] = 1;
        gen_fams.push_back(profinite_projection(source, e, d));
    }
    std::set<std::vector<Int>> closure;
    closure.insert(limit.identity().assignment);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<Int>> cur(closure.begin(), closure.end());
        for (const auto& x : cur)
            for (const auto& gf : gen_fams)
                if (closure.insert(limit.mul(x, gf.assignment)).second) grew = true;
    }
    for (const auto& fam : closure)
        if (limit.index_of(fam) < 0) throw std::logic_error("projection image escapes the computed limit");
    info.surjective = static_cast<Int>(closure.size()) == limit.order();

    // kernel lattice by bounded enumeration: coordinate i ranges over the
    // order of its generator's family (free) or the torsion order
    std::vector<Int> ranges(static_cast<size_t>(m));
    Int total = 1;
    for (Int i = 0; i < m; ++i) {
        Int range = orders[static_cast<size_t>(i)] > 0 ? orders[static_cast<size_t>(i)]
                                                       : limit.elem_order(gen_fams[static_cast<size_t>(i)].assignment);
        ranges[static_cast<size_t>(i)] = range;
        total = checked_mul(total, range);
    }
    if (total > budget.solver_states)
        throw budget_error("projection_kernel_image: kernel search space too large", total);

    std::vector<std::vector<Int>> kernel_rows;
    for (Int flat = 0; flat < total; ++flat) {
        std::vector<Int> tup(static_cast<size_t>(m));
        Int rest = flat;
        for (size_t i = tup.size(); i-- > 0;) {
            tup[i] = rest % ranges[i];
            rest /= ranges[i];
        }
        if (flat == 0) continue;  // zero tuple
        std::vector<Int> fam = limit.identity().assignment;
        for (Int i = 0; i < m; ++i)
            for (Int t = 0; t < tup[static_cast<size_t>(i)]; ++t) fam = limit.mul(fam, gen_fams[static_cast<size_t>(i)].assignment);
        if (fam == limit.identity().assignment) kernel_rows.push_back(tup);
    }
    for (Int i = 0; i < m; ++i) {
        std::vector<Int> row(static_cast<size_t>(m), 0);
        row[static_cast<size_t>(i)] = ranges[static_cast<size_t>(i)];
        kernel_rows.push_back(std::move(row));
    }
    info.kernel_lattice = hermite_normal_form(IntMat::from_rows(kernel_rows));

    std::vector<std::vector<Int>> relation_rows;
    for (Int i = 0; i < m; ++i) {
        if (orders[static_cast<size_t>(i)] == 0) continue;
        std::vector<Int> row(static_cast<size_t>(m), 0);
        row[static_cast<size_t>(i)] = orders[static_cast<size_t>(i)];
        relation_rows.push_back(std::move(row));
    }
    IntMat relations = relation_rows.empty() ? IntMat(0, m) : hermite_normal_form(IntMat::from_rows(relation_rows));
    info.injective = *info.kernel_lattice == relations ||
                     (info.kernel_lattice->rows == relations.rows && info.kernel_lattice->a == relations.a);

    if (source.kind == SourceGroup::Kind::fg_abelian && source.rank == 1 && source.torsion.empty()) {
        info.kernel_text = std::to_string(info.kernel_lattice->rows > 0 ? info.kernel_lattice->at(0, 0) : 0) + "Z";
    } else {
        std::string s = "[";
        for (Int i = 0; i < info.kernel_lattice->rows; ++i) {
            if (i) s += ";";
            s += "[";
            for (Int j = 0; j < info.kernel_lattice->cols; ++j) {
                if (j) s += ",";
                s += std::to_string(info.kernel_lattice->at(i, j));
            }
            s += "]";
        }
        info.kernel_text = s + "]";
    }
    return info;
}

BareDiagram surjective_subdiagram(const ApproxDiagram& d, std::vector<Int>& node_index_out) {
    BareDiagram b;
    std::vector<Int> remap(d.nodes.size(), -1);
    node_index_out.clear();
    for (size_t i = 0; i < d.nodes.size(); ++i) {
        if (!d.nodes[i].surjective) continue;
        remap[i] = static_cast<Int>(b.keys.size());
        node_index_out.push_back(static_cast<Int>(i));
        b.keys.push_back(d.nodes[i].key);
        b.tables.push_back(d.nodes[i].table);
    }
    for (const auto& e : d.edges) {
        Int f = remap[static_cast<size_t>(e.from)];
        Int t = remap[static_cast<size_t>(e.to)];
        if (f >= 0 && t >= 0) b.edges.push_back({f, t, e.map});
    }
    return b;
}

FullVsSurjectiveReport compare_full_vs_surjective(const SourceGroup& source, Int bound,
                                        const std::vector<GroupVal>& catalog, const Budget& budget) {
    FullVsSurjectiveReport rep;
    rep.source = source.describe();
    rep.bound = bound;

    ApproxDiagram full = all_approximations(source, bound, catalog, budget);
    LimitGroup lim_full = inverse_limit(full, SolverKind::fiber_product, budget);
    rep.full_nodes = static_cast<Int>(full.nodes.size());
    rep.full_order = lim_full.order();

    std::vector<Int> surj_nodes;
    BareDiagram sub = surjective_subdiagram(full, surj_nodes);
    LimitGroup lim_surj = inverse_limit(sub, SolverKind::fiber_product, budget);
    rep.surjective_nodes = static_cast<Int>(sub.keys.size());
    rep.surjective_order = lim_surj.order();

    // natural restriction: forget the non-surjective components
    std::set<std::vector<Int>> restricted;
    for (const auto& fam : lim_full.elements) {
        std::vector<Int> r;
        r.reserve(surj_nodes.size());
        for (Int i : surj_nodes) r.push_back(fam.assignment[static_cast<size_t>(i)]);
        if (lim_surj.index_of(r) < 0) throw std::logic_error("restriction escapes the surjective limit");
        restricted.insert(std::move(r));
    }
    rep.restriction_bijective = static_cast<Int>(restricted.size()) == lim_full.order() &&
                                static_cast<Int>(restricted.size()) == lim_surj.order();

    ApproxDiagram kernel_dia = surjective_approximations(source, bound, budget);
    LimitGroup lim_kernel = inverse_limit(kernel_dia, SolverKind::automatic, budget);
    rep.kernel_diagram_order = lim_kernel.order();

    if (lim_kernel.all_abelian && lim_full.all_abelian) {
        rep.kernel_limit_isomorphic = lim_kernel.invariant_factors == lim_full.invariant_factors;
    } else if (lim_kernel.order() <= 16 && lim_full.order() <= 16) {
        rep.kernel_limit_isomorphic = are_isomorphic_tables(lim_kernel.to_table("K", budget),
                                                            lim_full.to_table("F", budget), budget);
    } else {
        rep.kernel_limit_isomorphic = lim_kernel.order() == lim_full.order();
    }

    rep.pass = rep.restriction_bijective && rep.kernel_limit_isomorphic;
    return rep;
}

}  // namespace pfc
