#pragma once

#include <string>
#include <vector>

#include "pfc/approx.hpp"
#include "pfc/budget.hpp"
#include "pfc/fplin.hpp"
#include "pfc/limit.hpp"

namespace pfc {

// A truncated completion: the diagram at the requested bound, its inverse
// limit, and the kernel/image analysis of the projection into it.
struct CompletionResult {
    SourceGroup source;
    Int bound = 0;
    std::string mode;
    ApproxDiagram diagram;
    LimitGroup limit;
    ProjectionInfo projection;
};

CompletionResult complete(const SourceGroup& source, Int bound, const std::string& mode,
                          const std::vector<GroupVal>& catalog = default_catalog(),
                          const Budget& budget = default_budget());

// Surjective images of an F_p vector space are elementary abelian; this
// enumerates every homomorphism into each catalog group and checks it.
struct ClassifyReport {
    Int p = 0;
    Int dim = 0;
    struct PerTarget {
        std::string name;
        Int homs = 0;
        Int surjections = 0;
        bool images_elementary_abelian = true;
    };
    std::vector<PerTarget> targets;
    bool all_images_elementary_abelian = true;
    bool pass = false;
};
ClassifyReport classify_surjective_images(Int p, Int dim, const std::vector<GroupVal>& catalog,
                                          const Budget& budget = default_budget());

// The comparison map: a compatible family evaluates each linear form at the
// form's node. Requires a node for every form; the result is re-verified to
// be linear.
DoubleDualElement psi(const ApproxDiagram& d, const LimitElement& x);

enum class FactStatus { holds, violated, missing_nodes };
struct FactCheck {
    FactStatus status = FactStatus::missing_nodes;
    std::string detail;
};
// Checks x_{v_{f+lambda*g}} = x_{v_f} + lambda * x_{v_g} for one family and
// one (f, g, lambda); requires the pairing node (f,g) -> k^2 and its
// projection edges to be present in the diagram.
FactCheck check_fact_linearity(const ApproxDiagram& d, const LimitElement& x, const DualVector& f,
                               const DualVector& g, Int lambda);

// Reconstruction of a compatible family from a double-dual element: each
// node's value is assembled from the functional's values on the coordinate
// forms of the node's image.
LimitElement build_profinite_from_theta(const ApproxDiagram& d, const DoubleDualElement& theta,
                                        const Budget& budget = default_budget());

struct TheoremReport {
    Int p = 0, dim = 0, bound = 0;
    Int vhat_order = 0;
    bool order_matches = false;
    bool psi_linear = false;
    bool psi_injective = false;
    bool psi_surjective = false;
    bool psi_homomorphism = false;
    bool group_homs_equal_dual = false;
    bool pass = false;
};
// Full verification that the comparison map is a group isomorphism onto the
// double dual at (p, dim), including the step that every group homomorphism
// V -> F_p is a linear form (by counting).
TheoremReport check_theorem_iso(Int p, Int dim, Int bound = -1, const Budget& budget = default_budget());

struct TriangleReport {
    Int p = 0, dim = 0;
    Int vectors_checked = 0;
    Int failures = 0;
    bool pass = false;
};
// The commuting triangle: psi composed with the projection equals the
// canonical injection into the double dual, pointwise on all vectors.
TriangleReport check_triangle(Int p, Int dim, Int bound = -1, const Budget& budget = default_budget());

struct QuotientLimitReport {
    Int p = 0, dim = 0;
    Int subspace_count = 0;
    std::vector<Int> counts_by_dim;
    bool gaussian_counts_match = false;
    bool double_annihilator_identity = false;
    Int limit_order = 0;
    bool iso_bijective = false;
    bool pass = false;
};
// The limit presentation of the double dual over the quotient diagram of all
// subspaces, with the explicit isomorphism assembled from dual_quotient_iso.
QuotientLimitReport quotient_limit_presentation(Int p, Int dim, const Budget& budget = default_budget());

// Annihilator duality on all subspaces of F_p^dim: dimension counts match the
// Gaussian binomials, dim Y + dim Y_perp = dim, double application is the
// identity, and the correspondence reverses inclusions.
struct PerpReport {
    Int p = 0, dim = 0;
    std::vector<Int> counts_by_dim;
    bool gaussian_counts_match = false;
    bool dim_sum_identity = false;
    bool double_annihilator_identity = false;
    bool inclusion_reversing = false;
    bool pass = false;
};
PerpReport check_perp(Int p, Int dim, const Budget& budget = default_budget());

struct IterateReport {
    std::string source;
    Int depth = 0;
    std::vector<Int> stage_orders;
    std::vector<bool> stage_bijective;
    bool pass = false;
};
// Iterated completions of a finite source; each stage's projection must be an
// isomorphism.
IterateReport iterate_completion(const SourceGroup& source, Int depth, const Budget& budget = default_budget());

// Witness family for the failure of surjectivity over the restricted
// sequence model: values assigned to the coordinate forms p_0..p_level
// (all ones for the canonical witness).
struct WitnessFamily {
    Int p = 0;
    Int level = 0;
    std::vector<Int> values;  // value on p_i

    static WitnessFamily all_ones(Int p, Int level);
};

// The coordinate forms are independent, so any value assignment extends
// linearly to their span in exactly one way; verified by a rank computation.
bool witness_extension_consistent(const WitnessFamily& w);

// Smallest support of a vector realizing the family on p_0..p_level, computed
// by solving the constraint system.
Int witness_min_support(const WitnessFamily& w);
struct WitnessReport {
    Int p = 0;
    Int level = 0;
    std::vector<Int> min_support;  // per level 0..level
    bool supports_match_expected = false;
    bool strictly_increasing = false;
    bool extension_consistent = false;
    Int exhaustive_levels = 0;  // levels verified by full span enumeration
    bool pass = false;
};
WitnessReport nonsurjectivity_witness(Int p, Int level, const Budget& budget = default_budget());

// Sweep of the linearity identity over every compatible family and all
// (f, g, lambda != 0), plus a corrupted-family negative control.
struct FactSweepReport {
    Int p = 0, dim = 0;
    Int families = 0;
    Int triples = 0;
    Int checks = 0;
    Int failures = 0;
    bool negative_control_failed = false;
    bool pass = false;
};
FactSweepReport fact_linearity_sweep(Int p, Int dim, const Budget& budget = default_budget());

}  // namespace pfc
