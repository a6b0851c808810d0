#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pfc {

using Int = long long;

// Resource ceilings for the exhaustive paths. Everything in this library is
// exact and enumeration-based, so each operation that scales with a group
// order or a point count checks one of these before it starts.
struct Budget {
    Int table_order = 256;           // max order for multiplication-table groups
    Int enum_points = 1LL << 16;     // max p^dim for subspace/vector enumeration
    Int limit_elements = 1'000'000;  // cap on materialized inverse-limit size
    Int solver_states = 4'000'000;   // cap on brute-force assignment scans
    Int hom_candidates = 2'000'000;  // cap on generator-image candidate scans
    Int subgroup_order = 64;         // max order for subgroup-lattice search
};

inline const Budget& default_budget() {
    static const Budget b{};
    return b;
}

// Thrown when an enumeration would exceed its budget; carries the estimated
// size so callers can report how far over the request was.
class budget_error : public std::runtime_error {
  public:
    budget_error(const std::string& what, Int estimate)
        : std::runtime_error(what + " (estimated size " + std::to_string(estimate) + ")"),
          estimate_(estimate) {}

    Int estimate() const { return estimate_; }

  private:
    Int estimate_;
};

// Exact integer helpers: overflow raises instead of wrapping.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

// Floor modulus: result always in [0, m) for m > 0.
inline Int mod_floor(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int lcm_int(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd_int(a, b), b < 0 ? -b : b);
}

}  // namespace pfc
