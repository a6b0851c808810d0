#include <doctest.h>

#include <set>

#include "pfc/limit.hpp"
#include "pfc/profinite.hpp"

using namespace pfc;

namespace {

BareDiagram reduction_z4_z2() {
    BareDiagram d;
    d.keys = {"a", "b"};
    d.tables = {make_cyclic_product({4}).to_table(), make_cyclic_product({2}).to_table()};
    d.edges.push_back({0, 1, {0, 1, 0, 1}});
    return d;
}

Int lcm_up_to(Int n) {
    Int l = 1;
    for (Int k = 2; k <= n; ++k) l = lcm_int(l, k);
    return l;
}

}  // namespace

TEST_CASE("single node diagrams materialize the node group") {
    BareDiagram d;
    d.keys = {"s3"};
    d.tables = {symmetric3()};
    LimitGroup g = inverse_limit(d);
    CHECK(g.order() == 6);
    CHECK_FALSE(g.all_abelian);
    CHECK(are_isomorphic_tables(g.to_table("L"), symmetric3()));
}

TEST_CASE("reduction diagram Z/4 -> Z/2") {
    BareDiagram d = reduction_z4_z2();
    LimitGroup g = inverse_limit(d);
    CHECK(g.order() == 4);
    CHECK(g.invariant_factors == std::vector<Int>{4});

    // hand-rolled scan of all 8 pairs
    std::set<std::vector<Int>> oracle;
    for (Int a = 0; a < 4; ++a)
        for (Int b = 0; b < 2; ++b)
            if (a % 2 == b) oracle.insert({a, b});
    std::set<std::vector<Int>> got;
    for (const auto& e : g.elements) got.insert(e.assignment);
    CHECK(got == oracle);
}

TEST_CASE("completion of Z at bound 10 is cyclic of order lcm(1..10)") {
    SourceGroup z = SourceGroup::fg_abelian(1, {});
    ApproxDiagram dia = surjective_approximations(z, 10);
    LimitGroup g = inverse_limit(dia, SolverKind::fiber_product);

    CHECK(lcm_up_to(10) == 2520);
    CHECK(g.order() == 2520);
    CHECK(g.invariant_factors == std::vector<Int>{2520});

    // CRT oracle: families are exactly the reductions of 0..2519 along the
    // divisor poset
    std::set<std::vector<Int>> oracle;
    for (Int x = 0; x < 2520; ++x) {
        std::vector<Int> fam;
        for (const auto& node : dia.nodes) fam.push_back(x % node.order());
        oracle.insert(std::move(fam));
    }
    REQUIRE(oracle.size() == 2520);
    std::set<std::vector<Int>> got;
    for (const auto& e : g.elements) got.insert(e.assignment);
    CHECK(got == oracle);
}

TEST_CASE("solver equivalence across the diagram corpus") {
    std::vector<ApproxDiagram> corpus;
    SourceGroup z = SourceGroup::fg_abelian(1, {});
    corpus.push_back(surjective_approximations(z, 4));
    corpus.push_back(surjective_approximations(z, 6));
    corpus.push_back(surjective_approximations(z, 8));
    corpus.push_back(surjective_approximations(SourceGroup::fg_abelian(0, {6}), 6));
    corpus.push_back(surjective_approximations(SourceGroup::fp_space(2, 2), 4));
    corpus.push_back(surjective_approximations(SourceGroup::from_finite(GroupVal(symmetric3())), 6));
    corpus.push_back(surjective_approximations(SourceGroup::from_finite(GroupVal(quaternion8())), 8));
    std::vector<GroupVal> small_cat = {GroupVal(FinAbGroup::from_factors({})), GroupVal(FinAbGroup::from_factors({2})),
                                       GroupVal(FinAbGroup::from_factors({4}))};
    corpus.push_back(all_approximations(SourceGroup::fg_abelian(0, {4}), 4, small_cat));
    corpus.push_back(all_approximations(SourceGroup::fp_space(2, 1), 2,
                                        {GroupVal(FinAbGroup::from_factors({})), GroupVal(FinAbGroup::from_factors({2}))}));

    Budget budget;
    for (const auto& dia : corpus) {
        BareDiagram bare = BareDiagram::from(dia);
        REQUIRE(bare.product_order() <= 100000);
        LimitGroup brute = inverse_limit(bare, SolverKind::brute_force, budget);
        LimitGroup fiber = inverse_limit(bare, SolverKind::fiber_product, budget);
        CHECK(brute.elements == fiber.elements);
    }
    // plus the bare two-node diagram
    BareDiagram d = reduction_z4_z2();
    CHECK(inverse_limit(d, SolverKind::brute_force).elements == inverse_limit(d, SolverKind::fiber_product).elements);
}

TEST_CASE("limits are groups under componentwise multiplication") {
    for (const ApproxDiagram& dia : {surjective_approximations(SourceGroup::fg_abelian(1, {}), 6),
                                     surjective_approximations(SourceGroup::from_finite(GroupVal(symmetric3())), 6)}) {
        LimitGroup g = inverse_limit(dia);
        CHECK(g.index_of(g.identity().assignment) >= 0);
        for (const auto& a : g.elements) {
            CHECK(g.index_of(g.inv(a.assignment)) >= 0);
            for (const auto& b : g.elements) CHECK(g.index_of(g.mul(a.assignment, b.assignment)) >= 0);
        }
    }
}

TEST_CASE("profinite projection families") {
    SourceGroup z = SourceGroup::fg_abelian(1, {});
    ApproxDiagram d4 = surjective_approximations(z, 4);

    SUBCASE("identity maps to the identity family") {
        LimitElement e = profinite_projection(z, {0}, d4);
        CHECK(e.assignment == std::vector<Int>(4, 0));
    }
    SUBCASE("generator of Z lands on residues") {
        LimitElement e = profinite_projection(z, {1}, d4);
        // nodes are ordered by quotient order 1, 2, 3, 4
        CHECK(e.assignment == std::vector<Int>{0, 1, 1, 1});
    }
    SUBCASE("element 3 of Z/6 across all its quotients") {
        SourceGroup z6 = SourceGroup::fg_abelian(0, {6});
        ApproxDiagram d = surjective_approximations(z6, 6);
        LimitElement e = profinite_projection(z6, {3}, d);
        // node order: 1, Z/2, Z/3, Z/6
        CHECK(e.assignment == std::vector<Int>{0, 1, 0, 3});
    }
    SUBCASE("malformed elements are rejected") {
        CHECK_THROWS_AS(profinite_projection(z, {1, 2}, d4), std::invalid_argument);
    }
}

TEST_CASE("projection kernel and image analysis") {
    SUBCASE("finite cyclic source: the projection is an isomorphism") {
        SourceGroup z6 = SourceGroup::fg_abelian(0, {6});
        ApproxDiagram d = surjective_approximations(z6, 6);
        LimitGroup g = inverse_limit(d);
        ProjectionInfo info = projection_kernel_image(z6, d, g);
        CHECK(info.injective);
        CHECK(info.surjective);
    }
    SUBCASE("Z at bound 10: kernel 2520Z, surjective but not injective") {
        SourceGroup z = SourceGroup::fg_abelian(1, {});
        ApproxDiagram d = surjective_approximations(z, 10);
        LimitGroup g = inverse_limit(d);
        ProjectionInfo info = projection_kernel_image(z, d, g);
        CHECK_FALSE(info.injective);
        CHECK(info.surjective);
        CHECK(info.kernel_text == "2520Z");
        REQUIRE(info.kernel_lattice);
        CHECK(info.kernel_lattice->at(0, 0) == 2520);
    }
    SUBCASE("trivial diagram: everything collapses, projection onto the point") {
        SourceGroup z = SourceGroup::fg_abelian(1, {});
        ApproxDiagram d = surjective_approximations(z, 1);
        LimitGroup g = inverse_limit(d);
        ProjectionInfo info = projection_kernel_image(z, d, g);
        CHECK(info.surjective);
        CHECK_FALSE(info.injective);
        CHECK(info.kernel_text == "1Z");
    }
    SUBCASE("finite table source") {
        SourceGroup s3 = SourceGroup::from_finite(GroupVal(symmetric3()));
        ApproxDiagram d = surjective_approximations(s3, 6);
        LimitGroup g = inverse_limit(d);
        ProjectionInfo info = projection_kernel_image(s3, d, g);
        CHECK(info.injective);
        CHECK(info.surjective);
        CHECK(info.kernel_elements == std::vector<Int>{0});
    }
    SUBCASE("finite vector space: the identity node pins every family") {
        SourceGroup v = SourceGroup::fp_space(2, 2);
        ApproxDiagram d = surjective_approximations(v, 4);
        LimitGroup g = inverse_limit(d);
        CHECK(g.order() == 4);
        ProjectionInfo info = projection_kernel_image(v, d, g);
        CHECK(info.injective);
        CHECK(info.surjective);
    }
}

TEST_CASE("enlarging the bound restricts onto the smaller limit") {
    SourceGroup z = SourceGroup::fg_abelian(1, {});
    ApproxDiagram small = surjective_approximations(z, 4);
    ApproxDiagram big = surjective_approximations(z, 8);
    LimitGroup gs = inverse_limit(small);
    LimitGroup gb = inverse_limit(big);

    // map the small diagram's nodes into the big one by key
    std::vector<Int> where;
    for (const auto& key : gs.node_keys) {
        Int idx = big.find_node(key);
        REQUIRE(idx >= 0);
        where.push_back(idx);
    }
    std::set<std::vector<Int>> restricted;
    for (const auto& fam : gb.elements) {
        std::vector<Int> r;
        for (Int i : where) r.push_back(fam.assignment[static_cast<size_t>(i)]);
        CHECK(gs.index_of(r) >= 0);
        restricted.insert(std::move(r));
    }
    CHECK(static_cast<Int>(restricted.size()) == gs.order());  // surjective restriction
}

TEST_CASE("full-vs-surjective comparison on the pinned sources") {
    SUBCASE("Z/4 over the abelian catalog") {
        FullVsSurjectiveReport rep = compare_full_vs_surjective(SourceGroup::fg_abelian(0, {4}), 8, default_catalog());
        CHECK(rep.full_order == 4);
        CHECK(rep.surjective_order == 4);
        CHECK(rep.restriction_bijective);
        CHECK(rep.kernel_limit_isomorphic);
        CHECK(rep.pass);
    }
    SUBCASE("F2^2 with nonabelian targets present") {
        FullVsSurjectiveReport rep = compare_full_vs_surjective(SourceGroup::fp_space(2, 2), 8, default_catalog());
        CHECK(rep.full_order == 4);
        CHECK(rep.restriction_bijective);
        CHECK(rep.pass);
    }
    SUBCASE("trivial source") {
        FullVsSurjectiveReport rep = compare_full_vs_surjective(SourceGroup::fg_abelian(0, {}), 8, default_catalog());
        CHECK(rep.full_order == 1);
        CHECK(rep.surjective_order == 1);
        CHECK(rep.pass);
    }
}

TEST_CASE("budget errors carry an estimate") {
    SourceGroup z = SourceGroup::fg_abelian(1, {});
    ApproxDiagram d = surjective_approximations(z, 10);
    Budget tiny;
    tiny.solver_states = 1000;
    try {
        inverse_limit(d, SolverKind::brute_force, tiny);
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        CHECK(e.estimate() == 3628800);  // 10!
    }
}
