#pragma once

#include <json.hpp>

#include "pfc/limit.hpp"
#include "pfc/profinite.hpp"

namespace pfc {

using json = nlohmann::json;

// Canonical JSON shapes used by the CLI and the golden-file tests.
json fpmatrix_to_json(const FpMatrix& m);
json subspace_to_json(const Subspace& s);
json group_to_json(const GroupVal& g);
json node_to_json(const SourceGroup& source, const Approximation& a);
json diagram_to_json(const ApproxDiagram& d);
json limit_to_json(const LimitGroup& g, bool include_elements = false);
json completion_to_json(const CompletionResult& r, bool include_elements = false);

// Report shape: {claim, instance, status, witness?, counterexample?}.
json report_json(const std::string& claim, const std::string& instance, bool pass, json witness = nullptr,
                 json counterexample = nullptr);

json theorem_to_json(const TheoremReport& r);
json triangle_to_json(const TriangleReport& r);
json full_vs_surjective_to_json(const FullVsSurjectiveReport& r);
json perp_to_json(const PerpReport& r);
json classify_to_json(const ClassifyReport& r);
json quotient_limit_to_json(const QuotientLimitReport& r);
json fact_to_json(const FactSweepReport& r);
json iterate_to_json(const IterateReport& r);
json witness_to_json(const WitnessReport& r);

}  // namespace pfc
