#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfc/approx.hpp"
#include "pfc/budget.hpp"
#include "pfc/fingroup.hpp"

namespace pfc {

// A compatible family: one element index per diagram node, in node order.
struct LimitElement {
    std::vector<Int> assignment;
    bool operator==(const LimitElement& o) const { return assignment == o.assignment; }
    bool operator<(const LimitElement& o) const { return assignment < o.assignment; }
};

// Diagram stripped to what the solvers need.
struct BareDiagram {
    std::vector<std::string> keys;
    std::vector<FinGroup> tables;
    std::vector<ApproxMorphism> edges;

    static BareDiagram from(const ApproxDiagram& d);
    Int product_order() const;  // throws on overflow
};

bool is_compatible(const BareDiagram& d, const std::vector<Int>& assignment);

// The materialized inverse limit: all compatible families with componentwise
// multiplication. Elements are sorted lexicographically.
struct LimitGroup {
    std::vector<std::string> node_keys;
    std::vector<FinGroup> tables;
    std::vector<LimitElement> elements;
    bool all_abelian = false;
    std::vector<Int> invariant_factors;  // meaningful when all_abelian

    Int order() const { return static_cast<Int>(elements.size()); }
    Int index_of(const std::vector<Int>& assignment) const;  // -1 when absent
    LimitElement identity() const;
    std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b) const;
    std::vector<Int> inv(const std::vector<Int>& a) const;
    Int elem_order(const std::vector<Int>& a) const;
    FinGroup to_table(const std::string& name, const Budget& budget = default_budget()) const;
};

enum class SolverKind { automatic, brute_force, fiber_product };

LimitGroup inverse_limit(const BareDiagram& d, SolverKind solver = SolverKind::automatic,
                         const Budget& budget = default_budget());
LimitGroup inverse_limit(const ApproxDiagram& d, SolverKind solver = SolverKind::automatic,
                         const Budget& budget = default_budget());

// The profinite projection of a source element: v maps to phi_v(g) at every
// node; the result is verified compatible.
LimitElement profinite_projection(const SourceGroup& source, const SourceElem& g, const ApproxDiagram& d);

// Kernel and image analysis of the projection into a computed limit. For
// finite sources the kernel is an element list; for the abelian-like sources
// it is an integer lattice in generator coordinates (HNF rows).
struct ProjectionInfo {
    bool injective = false;
    bool surjective = false;
    std::vector<Int> kernel_elements;      // finite sources
    std::optional<IntMat> kernel_lattice;  // abelian-like sources
    std::string kernel_text;
};
ProjectionInfo projection_kernel_image(const SourceGroup& source, const ApproxDiagram& d, const LimitGroup& limit,
                                       const Budget& budget = default_budget());

// Full-vs-surjective comparison: the limit over all approximations into the
// catalog against the limit over its surjective nodes, via the natural
// restriction map, plus the kernel-indexed quotient diagram as a cross-check.
struct FullVsSurjectiveReport {
    std::string source;
    Int bound = 0;
    Int full_nodes = 0;
    Int full_order = 0;
    Int surjective_nodes = 0;
    Int surjective_order = 0;
    bool restriction_bijective = false;
    Int kernel_diagram_order = 0;
    bool kernel_limit_isomorphic = false;
    bool pass = false;
};
FullVsSurjectiveReport compare_full_vs_surjective(const SourceGroup& source, Int bound,
                                        const std::vector<GroupVal>& catalog,
                                        const Budget& budget = default_budget());

// Restriction of families to the surjective nodes of a full diagram.
BareDiagram surjective_subdiagram(const ApproxDiagram& d, std::vector<Int>& node_index_out);

}  // namespace pfc
