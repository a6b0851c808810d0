#include <doctest.h>

#include <map>
#include <set>

#include "pfc/approx.hpp"
#include "pfc/limit.hpp"

using namespace pfc;

TEST_CASE("surjective approximations of Z form the divisor poset") {
    SourceGroup z = SourceGroup::fg_abelian(1, {});
    ApproxDiagram d = surjective_approximations(z, 10);
    REQUIRE(d.nodes.size() == 10);
    for (Int n = 1; n <= 10; ++n) CHECK(d.nodes[static_cast<size_t>(n - 1)].order() == n);

    // an edge Z/n -> Z/m exists exactly when m divides n
    std::set<std::pair<Int, Int>> arrows;
    for (const auto& e : d.edges) arrows.insert({d.nodes[static_cast<size_t>(e.from)].order(),
                                                 d.nodes[static_cast<size_t>(e.to)].order()});
    for (Int n = 1; n <= 10; ++n)
        for (Int m = 1; m <= 10; ++m) {
            bool expect = m != n && n % m == 0;
            CHECK(arrows.count({n, m}) == (expect ? 1u : 0u));
        }
    validate_diagram(d);
}

TEST_CASE("surjective approximations of Z/6") {
    SourceGroup z6 = SourceGroup::fg_abelian(0, {6});
    ApproxDiagram d = surjective_approximations(z6, 6);
    REQUIRE(d.nodes.size() == 4);
    std::multiset<Int> orders;
    for (const auto& n : d.nodes) orders.insert(n.order());
    CHECK(orders == std::multiset<Int>{1, 2, 3, 6});
    validate_diagram(d);
}

TEST_CASE("surjective approximations of F2^2 are indexed by subspaces") {
    SourceGroup v = SourceGroup::fp_space(2, 2);
    ApproxDiagram d = surjective_approximations(v, 4);
    CHECK(d.nodes.size() == 5);  // kernels of dimension 0, 1, 1, 1, 2
    std::multiset<Int> kernel_dims;
    for (const auto& n : d.nodes) kernel_dims.insert(n.kernel_subspace->dim());
    CHECK(kernel_dims == std::multiset<Int>{0, 1, 1, 1, 2});
    validate_diagram(d);

    // a lower bound cuts the large quotients
    CHECK(surjective_approximations(v, 2).nodes.size() == 4);
    CHECK(surjective_approximations(v, 1).nodes.size() == 1);

    // one-dimensional space at bound 2: the identity and trivial quotients
    CHECK(surjective_approximations(SourceGroup::fp_space(2, 1), 2).nodes.size() == 2);
    // the trivial source has a single approximation
    CHECK(surjective_approximations(SourceGroup::fg_abelian(0, {}), 4).nodes.size() == 1);
}

TEST_CASE("surjective approximations of a table group") {
    SourceGroup s3 = SourceGroup::from_finite(GroupVal(symmetric3()));
    ApproxDiagram d = surjective_approximations(s3, 6);
    REQUIRE(d.nodes.size() == 3);  // quotients S3, Z/2, 1
    std::multiset<Int> orders;
    for (const auto& n : d.nodes) orders.insert(n.order());
    CHECK(orders == std::multiset<Int>{1, 2, 6});
    validate_diagram(d);
}

TEST_CASE("node count equals the bound for Z and the subspace total for F_p spaces") {
    SourceGroup z = SourceGroup::fg_abelian(1, {});
    for (Int b = 1; b <= 8; ++b) CHECK(static_cast<Int>(surjective_approximations(z, b).nodes.size()) == b);

    SourceGroup v = SourceGroup::fp_space(2, 2);
    Int total = 0;
    for (Int k = 0; k <= 2; ++k) total += gaussian_binomial(2, 2, k);
    CHECK(static_cast<Int>(surjective_approximations(v, 4).nodes.size()) == total);
}

TEST_CASE("full approximation diagrams over a catalog") {
    SUBCASE("Z/2 into {1, Z/2} gives three nodes") {
        SourceGroup z2 = SourceGroup::fg_abelian(0, {2});
        std::vector<GroupVal> catalog = {GroupVal(FinAbGroup::from_factors({})), GroupVal(FinAbGroup::from_factors({2}))};
        ApproxDiagram d = all_approximations(z2, 2, catalog);
        CHECK(d.nodes.size() == 3);
        validate_diagram(d);
    }
    SUBCASE("F2 into {Z/3} admits only the zero map") {
        SourceGroup v = SourceGroup::fp_space(2, 1);
        ApproxDiagram d = all_approximations(v, 3, {GroupVal(FinAbGroup::from_factors({3}))});
        REQUIRE(d.nodes.size() == 1);
        CHECK((*d.nodes[0].phi_gen_images)[0] == 0);
        validate_diagram(d);
    }
    SUBCASE("any source into {1} has exactly one node") {
        for (const SourceGroup& s : {SourceGroup::fg_abelian(1, {}), SourceGroup::fp_space(3, 2),
                                     SourceGroup::from_finite(GroupVal(dihedral4()))}) {
            ApproxDiagram d = all_approximations(s, 8, {GroupVal(FinAbGroup::from_factors({}))});
            CHECK(d.nodes.size() == 1);
        }
    }
    SUBCASE("surjective flags match image size") {
        SourceGroup z4 = SourceGroup::fg_abelian(0, {4});
        ApproxDiagram d = all_approximations(z4, 8, default_catalog());
        CHECK(d.nodes.size() == 56);
        Int surjective = 0;
        for (const auto& n : d.nodes)
            if (n.surjective) ++surjective;
        CHECK(surjective == 4);  // two onto Z/4, one onto Z/2, one onto 1
        validate_diagram(d);
    }
}

TEST_CASE("morphisms between approximations") {
    SourceGroup z = SourceGroup::fg_abelian(1, {});
    ApproxDiagram d = surjective_approximations(z, 4);
    Int n2 = -1, n3 = -1, n4 = -1;
    for (size_t i = 0; i < d.nodes.size(); ++i) {
        if (d.nodes[i].order() == 2) n2 = static_cast<Int>(i);
        if (d.nodes[i].order() == 3) n3 = static_cast<Int>(i);
        if (d.nodes[i].order() == 4) n4 = static_cast<Int>(i);
    }
    REQUIRE(n2 >= 0);
    REQUIRE(n3 >= 0);
    REQUIRE(n4 >= 0);

    SUBCASE("identity approximation maps only to itself by the identity") {
        SourceGroup z2 = SourceGroup::fg_abelian(0, {2});
        ApproxDiagram d2 = surjective_approximations(z2, 2);
        const Approximation* idnode = nullptr;
        for (const auto& node : d2.nodes)
            if (node.order() == 2) idnode = &node;
        REQUIRE(idnode);
        auto homs = hom_between(z2, *idnode, *idnode);
        REQUIRE(homs.size() == 1);
        CHECK(homs[0].element_map() == std::vector<Int>{0, 1});
    }
    SUBCASE("reduction mod 2 is the unique arrow Z/4 -> Z/2") {
        auto homs = hom_between(z, d.nodes[static_cast<size_t>(n4)], d.nodes[static_cast<size_t>(n2)]);
        REQUIRE(homs.size() == 1);
        CHECK(homs[0].element_map() == std::vector<Int>{0, 1, 0, 1});
    }
    SUBCASE("no arrow from the mod-2 to the mod-3 approximation") {
        CHECK(hom_between(z, d.nodes[static_cast<size_t>(n2)], d.nodes[static_cast<size_t>(n3)]).empty());
    }
    SUBCASE("surjective sources admit at most one arrow to anything") {
        ApproxDiagram d6 = surjective_approximations(z, 6);
        for (const auto& v : d6.nodes)
            for (const auto& w : d6.nodes) CHECK(hom_between(z, v, w).size() <= 1);
    }
}

TEST_CASE("every node factors through a surjective node") {
    // cofinality: for each (F, phi) there is a surjective node with the image
    // as target and an injective arrow into (F, phi)
    SourceGroup z4 = SourceGroup::fg_abelian(0, {4});
    ApproxDiagram d = all_approximations(z4, 8, default_catalog());
    for (const auto& v : d.nodes) {
        bool found = false;
        for (const auto& w : d.nodes) {
            if (!w.surjective || found) continue;
            for (const auto& h : hom_between(z4, w, v))
                if (h.is_injective()) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("dot export") {
    SourceGroup z = SourceGroup::fg_abelian(1, {});
    SUBCASE("empty diagram is the bare skeleton") {
        ApproxDiagram empty;
        empty.source = z;
        CHECK(to_dot(empty) == "digraph {\n}\n");
    }
    SUBCASE("single node, no edges") {
        ApproxDiagram d = surjective_approximations(z, 1);
        CHECK(to_dot(d) == "digraph {\n  n0 [label=\"1\"];\n}\n");
    }
    SUBCASE("bound four: the divisor poset of {1,2,3,4}") {
        std::string dot = to_dot(surjective_approximations(z, 4));
        CHECK(dot ==
              "digraph {\n"
              "  n0 [label=\"1\"];\n"
              "  n1 [label=\"Z/2\"];\n"
              "  n2 [label=\"Z/3\"];\n"
              "  n3 [label=\"Z/4\"];\n"
              "  n1 -> n0;\n"
              "  n2 -> n0;\n"
              "  n3 -> n0;\n"
              "  n3 -> n1;\n"
              "}\n");
    }
}

TEST_CASE("structure maps expose their matrices for abelian targets") {
    SourceGroup v = SourceGroup::fp_space(2, 2);
    ApproxDiagram d = surjective_approximations(v, 4);
    for (const auto& node : d.nodes) {
        IntMat m = node.phi_matrix();
        CHECK(m.cols == 2);
        CHECK(m.rows == 2 - node.kernel_subspace->dim());
        // columns are the generator images
        for (Int i = 0; i < 2; ++i) {
            SourceElem e(2, 0);
            e[static_cast<size_t>(i)] = 1;
            Int img = apply_phi(v, node, e);
            const auto& ab = std::get<FinAbGroup>(node.target);
            FinAbGroup::Elem t = ab.elem_at(img);
            for (Int r = 0; r < m.rows; ++r) CHECK(m.at(r, i) == t[static_cast<size_t>(r)]);
        }
    }
}

TEST_CASE("sequence model sources are rejected by the diagram builders") {
    SourceGroup seq = SourceGroup::seq_model(2, 3);
    CHECK_THROWS_AS(surjective_approximations(seq, 4), std::invalid_argument);
    CHECK_THROWS_AS(all_approximations(seq, 4, default_catalog()), std::invalid_argument);
}

TEST_CASE("source descriptions") {
    CHECK(SourceGroup::fg_abelian(1, {}).describe() == "Z");
    CHECK(SourceGroup::fg_abelian(0, {6}).describe() == "Z/6");
    CHECK(SourceGroup::fg_abelian(2, {4, 8}).describe() == "Z^2 x Z/4 x Z/8");
    CHECK(SourceGroup::fp_space(2, 2).describe() == "F2^2");
    CHECK(SourceGroup::seq_model(3, 1).describe() == "seq(3,1)");
    CHECK(SourceGroup::from_finite(GroupVal(symmetric3())).describe() == "S3");
    CHECK(SourceGroup::fg_abelian(0, {}).describe() == "1");
}

TEST_CASE("finite-index sublattices of Z^2 are counted by the divisor-sum function") {
    // the number of index-n sublattices of Z^2 is sigma(n), the sum of the
    // divisors of n
    SourceGroup z2 = SourceGroup::fg_abelian(2, {});
    ApproxDiagram d = surjective_approximations(z2, 4);
    std::map<Int, Int> by_index;
    for (const auto& n : d.nodes) ++by_index[n.order()];
    auto sigma = [](Int n) {
        Int s = 0;
        for (Int q = 1; q <= n; ++q)
            if (n % q == 0) s += q;
        return s;
    };
    for (Int n = 1; n <= 4; ++n) CHECK(by_index[n] == sigma(n));
    validate_diagram(d);

    // at bound 2 the three index-2 quotients are only tied through the
    // trivial node, so the truncated limit is their full product and the
    // projection is not onto: the index-4 node that would cut it is missing
    ApproxDiagram d2 = surjective_approximations(z2, 2);
    REQUIRE(d2.nodes.size() == 4);
    for (const auto& e : d2.edges) CHECK(d2.nodes[static_cast<size_t>(e.to)].order() == 1);
    LimitGroup g = inverse_limit(d2);
    CHECK(g.order() == 8);
    ProjectionInfo info = projection_kernel_image(z2, d2, g);
    CHECK_FALSE(info.surjective);
    CHECK_FALSE(info.injective);
}

TEST_CASE("fg_abelian with torsion enumerates kernels through the relation lattice") {
    // Z x Z/2 at bound 4: kernels are superlattices of 2e2 in Z^2
    SourceGroup g = SourceGroup::fg_abelian(1, {2});
    ApproxDiagram d = surjective_approximations(g, 4);
    validate_diagram(d);
    for (const auto& n : d.nodes) CHECK(n.order() <= 4);
    // quotient orders include 1, 2 (two ways), 4
    std::multiset<Int> orders;
    for (const auto& n : d.nodes) orders.insert(n.order());
    CHECK(orders.count(1) == 1);
    CHECK(orders.count(2) >= 2);
}
