// Benchmarks the OpenMP kernels against the serial reference, and the two
// inverse-limit solvers against each other, on mid-size instances.

#include <chrono>
#include <iostream>

#include "pfc/limit.hpp"
#include "pfc/parallel.hpp"
#include "pfc/profinite.hpp"
#include "pfc/source_spec.hpp"

using namespace pfc;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_pair(const std::string& name, const std::function<void()>& work) {
    par::mode() = par::Mode::serial;
    double serial = time_ms(work);
    double parallel = serial;
    if (par::openmp_compiled()) {
        par::mode() = par::Mode::openmp;
        parallel = time_ms(work);
    }
    std::cout << name << ": serial " << serial << " ms";
    if (par::openmp_compiled())
        std::cout << ", openmp " << parallel << " ms (x" << (parallel > 0 ? serial / parallel : 0) << ")";
    else
        std::cout << ", openmp unavailable";
    std::cout << "\n";
    par::mode() = par::openmp_compiled() ? par::Mode::openmp : par::Mode::serial;
}

}  // namespace

int main() {
    std::cout << "threads: " <<
#ifdef _OPENMP
        omp_get_max_threads()
#else
        1
#endif
              << "\n";

    Budget big;
    big.table_order = 512;
    big.solver_states = 8'000'000;

    // table validation sweeps order^3 triples
    {
        FinAbGroup z;
        z.factors = {384};
        z.label = "Z/384";
        bench_pair("table validation (order 384)", [&] { (void)z.to_table(big); });
    }

    // brute-force limit solving filters the full assignment space
    {
        SourceGroup z = parse_source("Z");
        ApproxDiagram dia = surjective_approximations(z, 9, big);
        bench_pair("brute-force limit, Z bound 9 (362880 states)",
                   [&] { (void)inverse_limit(dia, SolverKind::brute_force, big); });
    }

    // homomorphism enumeration filters generator-image candidates
    {
        FinAbGroup src;
        src.factors = {2, 2, 2, 2, 2, 2};
        src.label = "Z/2^6";
        FinGroup d4 = dihedral4();
        bench_pair("hom enumeration (2^6 source into D4, 262144 candidates)",
                   [&] { (void)enumerate_homs(GroupVal(src), GroupVal(d4), big); });
    }

    // solver comparison on the same diagram
    {
        SourceGroup z = parse_source("Z");
        ApproxDiagram dia = surjective_approximations(z, 9, big);
        double brute = time_ms([&] { (void)inverse_limit(dia, SolverKind::brute_force, big); });
        double fiber = time_ms([&] { (void)inverse_limit(dia, SolverKind::fiber_product, big); });
        LimitGroup a = inverse_limit(dia, SolverKind::brute_force, big);
        LimitGroup b = inverse_limit(dia, SolverKind::fiber_product, big);
        std::cout << "solvers on Z bound 9: brute " << brute << " ms, fiber " << fiber << " ms, orders " << a.order()
                  << "/" << b.order() << (a.elements == b.elements ? " (identical element sets)" : " (MISMATCH)")
                  << "\n";
    }
    return 0;
}
