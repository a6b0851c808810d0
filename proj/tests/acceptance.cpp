// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion is self-contained and carries its own oracle.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "pfc/profinite.hpp"
#include "pfc/source_spec.hpp"

using namespace pfc;

namespace {

int failures = 0;

void criterion(int number, const std::string& text, double time_limit_s, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit_s > 0 && secs > time_limit_s) ok = false;
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.2fs%s)\n", ok ? "PASS" : "FAIL", number, text.c_str(), secs,
                error.empty() ? "" : (", error: " + error).c_str());
}

Int ipow(Int b, Int e) {
    Int r = 1;
    for (Int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

int main() {
    criterion(1, "completion of Z at bound 10 is Z/2520, against the lcm and CRT oracles", 5.0, [] {
        SourceGroup z = parse_source("Z");
        ApproxDiagram dia = surjective_approximations(z, 10);
        LimitGroup lim = inverse_limit(dia, SolverKind::fiber_product);

        Int lcm = 1;
        for (Int k = 2; k <= 10; ++k) lcm = lcm_int(lcm, k);
        if (lcm != 2520) return false;
        if (lim.invariant_factors != std::vector<Int>{2520}) return false;

        std::set<std::vector<Int>> oracle;
        for (Int x = 0; x < lcm; ++x) {
            std::vector<Int> fam;
            for (const auto& node : dia.nodes) fam.push_back(x % node.order());
            oracle.insert(std::move(fam));
        }
        std::set<std::vector<Int>> got;
        for (const auto& e : lim.elements) got.insert(e.assignment);
        return got == oracle && lim.order() == 2520;
    });

    criterion(2, "full and surjective limits agree for Z/4, Z/6, F2^2, S3 over the mixed catalog at bound 8", 60.0,
              [] {
                  for (const char* text : {"Z/4", "Z/6", "F2^2", "S3"}) {
                      FullVsSurjectiveReport rep = compare_full_vs_surjective(parse_source(text), 8, default_catalog());
                      if (!rep.restriction_bijective || !rep.kernel_limit_isomorphic || !rep.pass) return false;
                  }
                  return true;
              });

    criterion(3, "the comparison map is a bijective homomorphism with |completion| = p^dim at four instances", 30.0,
              [] {
                  for (auto [p, dim] : std::vector<std::pair<Int, Int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
                      TheoremReport rep = check_theorem_iso(p, dim);
                      if (!rep.pass || rep.vhat_order != ipow(p, dim)) return false;
                  }
                  return true;
              });

    criterion(4, "the triangle identity holds pointwise on every vector at the same instances", 0, [] {
        for (auto [p, dim] : std::vector<std::pair<Int, Int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
            TriangleReport rep = check_triangle(p, dim);
            if (rep.vectors_checked != ipow(p, dim) || rep.failures != 0) return false;
        }
        return true;
    });

    criterion(5, "linearity sweep at p=2 dim=2: 64/64 checks pass and a corrupted family fails", 0, [] {
        FactSweepReport rep = fact_linearity_sweep(2, 2);
        return rep.families == 4 && rep.triples == 16 && rep.checks == 64 && rep.failures == 0 &&
               rep.negative_control_failed && rep.pass;
    });

    criterion(6, "no surjections F2^2 onto Z/4, S3, D4, Q8; exactly 6 onto Z/2 x Z/2; images elementary abelian", 0,
              [] {
                  std::vector<GroupVal> catalog = {
                      GroupVal(FinAbGroup::from_factors({4})), GroupVal(symmetric3()), GroupVal(dihedral4()),
                      GroupVal(quaternion8()), GroupVal(FinAbGroup::from_factors({2, 2}))};
                  ClassifyReport rep = classify_surjective_images(2, 2, catalog);
                  if (!rep.all_images_elementary_abelian) return false;
                  return rep.targets[0].surjections == 0 && rep.targets[1].surjections == 0 &&
                         rep.targets[2].surjections == 0 && rep.targets[3].surjections == 0 &&
                         rep.targets[4].surjections == 6;
              });

    criterion(7, "at p=2 dim=3: 16 subspaces (1,7,7,1), annihilator is an involution, the limit of the quotients has 8 elements and matches the double dual", 0, [] {
        QuotientLimitReport rep = quotient_limit_presentation(2, 3);
        return rep.subspace_count == 16 && rep.counts_by_dim == std::vector<Int>{1, 7, 7, 1} &&
               rep.double_annihilator_identity && rep.limit_order == 8 && rep.iso_bijective && rep.pass;
    });

    criterion(8, "iterated completions of Z/2 (depth 3) and S3 (depth 2) are isomorphisms at every stage", 0, [] {
        IterateReport a = iterate_completion(parse_source("Z/2"), 3);
        IterateReport b = iterate_completion(parse_source("S3"), 2);
        return a.pass && b.pass && a.stage_orders == std::vector<Int>{2, 2, 2} &&
               b.stage_orders == std::vector<Int>{6, 6};
    });

    criterion(9, "witness supports for p in {2,3}, levels 0..16, are exactly n+1 and strictly increasing", 1.0, [] {
        for (Int p : {2, 3}) {
            WitnessReport rep = nonsurjectivity_witness(p, 16);
            if (!rep.pass || !rep.supports_match_expected || !rep.strictly_increasing) return false;
            for (Int n = 0; n <= 16; ++n)
                if (rep.min_support[static_cast<size_t>(n)] != n + 1) return false;
        }
        return true;
    });

    criterion(10, "brute-force and fiber-product solvers agree elementwise on every corpus diagram", 0, [] {
        std::vector<ApproxDiagram> corpus;
        corpus.push_back(surjective_approximations(parse_source("Z"), 4));
        corpus.push_back(surjective_approximations(parse_source("Z"), 6));
        corpus.push_back(surjective_approximations(parse_source("Z"), 8));
        corpus.push_back(surjective_approximations(parse_source("Z/6"), 6));
        corpus.push_back(surjective_approximations(parse_source("Z/4"), 4));
        corpus.push_back(surjective_approximations(parse_source("F2^2"), 4));
        corpus.push_back(surjective_approximations(parse_source("F3^2"), 9));
        corpus.push_back(surjective_approximations(parse_source("S3"), 6));
        corpus.push_back(surjective_approximations(parse_source("D4"), 8));
        corpus.push_back(surjective_approximations(parse_source("Q8"), 8));
        corpus.push_back(all_approximations(parse_source("Z/4"), 4,
                                            {GroupVal(FinAbGroup::from_factors({})),
                                             GroupVal(FinAbGroup::from_factors({2})),
                                             GroupVal(FinAbGroup::from_factors({4}))}));
        corpus.push_back(all_approximations(parse_source("F2^1"), 2, fp_catalog(2, 2)));
        for (const auto& dia : corpus) {
            BareDiagram bare = BareDiagram::from(dia);
            if (bare.product_order() > 100000) return false;  // corpus must stay in the stated range
            LimitGroup brute = inverse_limit(bare, SolverKind::brute_force);
            LimitGroup fiber = inverse_limit(bare, SolverKind::fiber_product);
            if (!(brute.elements == fiber.elements)) return false;
        }
        return true;
    });

    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
