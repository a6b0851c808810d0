#include "pfc/json_io.hpp"

namespace pfc {

json fpmatrix_to_json(const FpMatrix& m) {
    json out;
    out["p"] = m.p;
    json rows = json::array();
    for (Int r = 0; r < m.rows; ++r) rows.push_back(m.row(r));
    out["rows"] = std::move(rows);
    return out;
}

json subspace_to_json(const Subspace& s) {
    json out;
    out["p"] = s.p;
    out["ambient_dim"] = s.ambient_dim;
    json rows = json::array();
    for (Int r = 0; r < s.basis.rows; ++r) rows.push_back(s.basis.row(r));
    out["basis"] = std::move(rows);
    return out;
}

json group_to_json(const GroupVal& g) {
    json out;
    if (std::holds_alternative<FinGroup>(g)) {
        const auto& t = std::get<FinGroup>(g);
        out["kind"] = "table";
        out["name"] = t.name;
        json table = json::array();
        for (Int a = 0; a < t.order; ++a) {
            json row = json::array();
            for (Int b = 0; b < t.order; ++b) row.push_back(t.mul(a, b));
            table.push_back(std::move(row));
        }
        out["op_table"] = std::move(table);
    } else {
        const auto& ab = std::get<FinAbGroup>(g);
        out["kind"] = "abelian";
        out["name"] = ab.label.empty() ? ab.canonical_name() : ab.label;
        out["factors"] = ab.factors;
    }
    return out;
}

json node_to_json(const SourceGroup& source, const Approximation& a) {
    json out;
    out["key"] = a.key;
    out["group"] = group_to_json(a.target);
    out["surjective"] = a.surjective;
    json phi;
    phi["source"] = source.describe();
    phi["target"] = a.key;
    if (a.phi_elem_map) {
        phi["map"] = *a.phi_elem_map;
    } else if (a.phi_gen_images) {
        json matrix = json::array();
        if (std::holds_alternative<FinAbGroup>(a.target)) {
            const auto& ab = std::get<FinAbGroup>(a.target);
            for (Int img : *a.phi_gen_images) matrix.push_back(ab.elem_at(img));
        } else {
            for (Int img : *a.phi_gen_images) matrix.push_back(std::vector<Int>{img});
        }
        phi["matrix"] = std::move(matrix);
    }
    out["phi"] = std::move(phi);
    return out;
}

json diagram_to_json(const ApproxDiagram& d) {
    json out;
    out["source"] = d.source.describe();
    out["bound"] = d.bound;
    out["mode"] = d.mode;
    json nodes = json::array();
    for (const auto& n : d.nodes) nodes.push_back(node_to_json(d.source, n));
    out["nodes"] = std::move(nodes);
    json edges = json::array();
    for (const auto& e : d.edges) {
        json je;
        je["from"] = e.from;
        je["to"] = e.to;
        je["map"] = e.map;
        edges.push_back(std::move(je));
    }
    out["edges"] = std::move(edges);
    return out;
}

json limit_to_json(const LimitGroup& g, bool include_elements) {
    json out;
    out["nodes"] = g.node_keys;
    out["order"] = g.order();
    if (g.all_abelian) out["invariant_factors"] = g.invariant_factors;
    if (include_elements) {
        json elems = json::array();
        for (const auto& e : g.elements) elems.push_back(e.assignment);
        out["elements"] = std::move(elems);
    }
    return out;
}

json completion_to_json(const CompletionResult& r, bool include_elements) {
    json out;
    out["source"] = r.source.describe();
    out["bound"] = r.bound;
    out["mode"] = r.mode;
    out["diagram"] = diagram_to_json(r.diagram);
    out["limit"] = limit_to_json(r.limit, include_elements);
    json proj;
    proj["kernel"] = r.projection.kernel_text;
    proj["injective"] = r.projection.injective;
    proj["surjective"] = r.projection.surjective;
    out["projection"] = std::move(proj);
    return out;
}

json report_json(const std::string& claim, const std::string& instance, bool pass, json witness,
                 json counterexample) {
    json out;
    out["claim"] = claim;
    out["instance"] = instance;
    out["status"] = pass ? "pass" : "fail";
    if (!witness.is_null()) out["witness"] = std::move(witness);
    if (!counterexample.is_null()) out["counterexample"] = std::move(counterexample);
    return out;
}

json theorem_to_json(const TheoremReport& r) {
    json w;
    w["vhat_order"] = r.vhat_order;
    w["order_matches"] = r.order_matches;
    w["psi_linear"] = r.psi_linear;
    w["psi_injective"] = r.psi_injective;
    w["psi_surjective"] = r.psi_surjective;
    w["psi_homomorphism"] = r.psi_homomorphism;
    w["group_homs_equal_dual"] = r.group_homs_equal_dual;
    return report_json("completion is isomorphic to the double dual",
                       "p=" + std::to_string(r.p) + " dim=" + std::to_string(r.dim), r.pass, w);
}

json triangle_to_json(const TriangleReport& r) {
    json w;
    w["vectors_checked"] = r.vectors_checked;
    w["failures"] = r.failures;
    return report_json("comparison map identifies the projection with the canonical injection",
                       "p=" + std::to_string(r.p) + " dim=" + std::to_string(r.dim), r.pass, w);
}

json full_vs_surjective_to_json(const FullVsSurjectiveReport& r) {
    json w;
    w["full_nodes"] = r.full_nodes;
    w["full_order"] = r.full_order;
    w["surjective_nodes"] = r.surjective_nodes;
    w["surjective_order"] = r.surjective_order;
    w["restriction_bijective"] = r.restriction_bijective;
    w["kernel_diagram_order"] = r.kernel_diagram_order;
    w["kernel_limit_isomorphic"] = r.kernel_limit_isomorphic;
    return report_json("full and surjective truncated limits agree",
                       r.source + " bound=" + std::to_string(r.bound), r.pass, w);
}

json perp_to_json(const PerpReport& r) {
    json w;
    w["counts_by_dim"] = r.counts_by_dim;
    w["gaussian_counts_match"] = r.gaussian_counts_match;
    w["dim_sum_identity"] = r.dim_sum_identity;
    w["double_annihilator_identity"] = r.double_annihilator_identity;
    w["inclusion_reversing"] = r.inclusion_reversing;
    return report_json("annihilator duality on subspaces",
                       "p=" + std::to_string(r.p) + " dim=" + std::to_string(r.dim), r.pass, w);
}

json classify_to_json(const ClassifyReport& r) {
    json w = json::array();
    for (const auto& t : r.targets) {
        json jt;
        jt["target"] = t.name;
        jt["homs"] = t.homs;
        jt["surjections"] = t.surjections;
        jt["images_elementary_abelian"] = t.images_elementary_abelian;
        w.push_back(std::move(jt));
    }
    return report_json("surjective images are elementary abelian",
                       "p=" + std::to_string(r.p) + " dim=" + std::to_string(r.dim), r.pass, w);
}

json quotient_limit_to_json(const QuotientLimitReport& r) {
    json w;
    w["subspace_count"] = r.subspace_count;
    w["counts_by_dim"] = r.counts_by_dim;
    w["gaussian_counts_match"] = r.gaussian_counts_match;
    w["double_annihilator_identity"] = r.double_annihilator_identity;
    w["limit_order"] = r.limit_order;
    w["iso_bijective"] = r.iso_bijective;
    return report_json("double dual is the limit of the finite quotients",
                       "p=" + std::to_string(r.p) + " dim=" + std::to_string(r.dim), r.pass, w);
}

json fact_to_json(const FactSweepReport& r) {
    json w;
    w["families"] = r.families;
    w["triples"] = r.triples;
    w["checks"] = r.checks;
    w["failures"] = r.failures;
    w["negative_control_failed"] = r.negative_control_failed;
    return report_json("families are linear across form combinations",
                       "p=" + std::to_string(r.p) + " dim=" + std::to_string(r.dim), r.pass, w);
}

json iterate_to_json(const IterateReport& r) {
    json w;
    w["stage_orders"] = r.stage_orders;
    json bij = json::array();
    for (bool b : r.stage_bijective) bij.push_back(b);
    w["stage_bijective"] = std::move(bij);
    return report_json("iterated completions of a finite group are isomorphisms",
                       r.source + " depth=" + std::to_string(r.depth), r.pass, w);
}

json witness_to_json(const WitnessReport& r) {
    json w;
    w["min_support"] = r.min_support;
    w["supports_match_expected"] = r.supports_match_expected;
    w["strictly_increasing"] = r.strictly_increasing;
    w["extension_consistent"] = r.extension_consistent;
    w["exhaustive_levels"] = r.exhaustive_levels;
    return report_json("no finitely supported vector realizes the all-ones family at every level",
                       "p=" + std::to_string(r.p) + " level=" + std::to_string(r.level), r.pass, w);
}

}  // namespace pfc
