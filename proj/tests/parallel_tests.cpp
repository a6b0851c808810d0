#include <doctest.h>

#include "pfc/limit.hpp"
#include "pfc/parallel.hpp"

using namespace pfc;

namespace {

struct ModeGuard {
    par::Mode saved = par::mode();
    ~ModeGuard() { par::mode() = saved; }
};

}  // namespace

TEST_CASE("openmp kernels reproduce the serial reference") {
    auto pred_mod = [](Int i) { return i % 7 == 3; };
    auto pred_none = [](Int) { return false; };
    auto pred_all = [](Int) { return true; };

    for (Int n : {0LL, 1LL, 5LL, 1000LL, 100001LL}) {
        CHECK(par::filter_indices_openmp(n, pred_mod) == par::filter_indices_serial(n, pred_mod));
        CHECK(par::filter_indices_openmp(n, pred_none) == par::filter_indices_serial(n, pred_none));
        CHECK(par::filter_indices_openmp(n, pred_all) == par::filter_indices_serial(n, pred_all));
        CHECK(par::count_indices_openmp(n, pred_mod) == par::count_indices_serial(n, pred_mod));
        CHECK(par::all_indices_openmp(n, pred_all) == par::all_indices_serial(n, pred_all));
    }
    CHECK_FALSE(par::all_indices_openmp(10, [](Int i) { return i != 7; }));

    // results arrive in ascending index order
    auto hits = par::filter_indices_openmp(1000, pred_mod);
    CHECK(std::is_sorted(hits.begin(), hits.end()));
}

TEST_CASE("solver output is identical under both execution modes") {
    SourceGroup z = SourceGroup::fg_abelian(1, {});
    ApproxDiagram dia = surjective_approximations(z, 8);
    BareDiagram bare = BareDiagram::from(dia);

    ModeGuard guard;
    par::mode() = par::Mode::serial;
    LimitGroup serial = inverse_limit(bare, SolverKind::brute_force);
    if (par::openmp_compiled()) {
        par::mode() = par::Mode::openmp;
        LimitGroup parallel = inverse_limit(bare, SolverKind::brute_force);
        CHECK(serial.elements == parallel.elements);
        CHECK(serial.invariant_factors == parallel.invariant_factors);
    }
    CHECK(serial.order() == 840);  // lcm(1..8)
}

TEST_CASE("hom enumeration is identical under both execution modes") {
    FinAbGroup src = make_cyclic_product({2, 2, 2});
    const FinGroup& d4 = dihedral4();

    ModeGuard guard;
    par::mode() = par::Mode::serial;
    auto serial = enumerate_homs(GroupVal(src), GroupVal(d4));
    if (par::openmp_compiled()) {
        par::mode() = par::Mode::openmp;
        auto parallel = enumerate_homs(GroupVal(src), GroupVal(d4));
        REQUIRE(serial.size() == parallel.size());
        for (size_t i = 0; i < serial.size(); ++i)
            CHECK(serial[i].element_map() == parallel[i].element_map());
    }
}
