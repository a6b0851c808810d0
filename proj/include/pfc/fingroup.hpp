#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pfc/budget.hpp"
#include "pfc/intmat.hpp"

namespace pfc {

// Finite group as a multiplication table. Element 0 is the identity; the
// table is validated exhaustively at construction (Latin square,
// associativity, two-sided inverses).
struct FinGroup {
    Int order = 1;
    std::vector<Int> table;  // row-major: table[a * order + b] = a * b
    std::string name = "1";

    static FinGroup trivial();
    static FinGroup from_table(std::vector<Int> table, std::string name,
                               const Budget& budget = default_budget());

    Int mul(Int a, Int b) const { return table[static_cast<size_t>(a * order + b)]; }
    Int inv(Int a) const;
    Int pow(Int a, Int k) const;  // k may be negative
    Int element_order(Int a) const;
    bool is_abelian() const;
};

// Finite abelian group in invariant-factor form: factors d1 | d2 | ... | dk,
// all >= 2; the empty list is the trivial group. Elements are residue tuples;
// the canonical element index is mixed-radix with the last factor fastest.
struct FinAbGroup {
    std::vector<Int> factors;
    std::string label;  // construction label, e.g. "Z/2 x Z/3"

    using Elem = std::vector<Int>;

    // Normalizes an arbitrary cyclic-factor list via Smith normal form.
    static FinAbGroup from_factors(const std::vector<Int>& raw, std::string label = "");

    Int order() const;
    Int rank() const { return static_cast<Int>(factors.size()); }
    Elem zero() const { return Elem(factors.size(), 0); }
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem smul(Int k, const Elem& a) const;
    Int elem_order(const Elem& a) const;
    Int index_of(const Elem& a) const;
    Elem elem_at(Int idx) const;
    std::string canonical_name() const;  // "Z/d1 x Z/d2 x ..." or "1"

    FinGroup to_table(const Budget& budget = default_budget()) const;
};

// make_cyclic_product([f1, ..., fk]) = Z/f1 x ... x Z/fk, eagerly normalized.
// Factors equal to 1 are dropped; factors <= 0 are rejected.
FinAbGroup make_cyclic_product(const std::vector<Int>& factors);

using GroupVal = std::variant<FinGroup, FinAbGroup>;

Int group_order(const GroupVal& g);
std::string group_name(const GroupVal& g);
bool group_is_abelian(const GroupVal& g);
FinGroup group_to_table(const GroupVal& g, const Budget& budget = default_budget());

// element arithmetic through the canonical index
Int group_mul(const GroupVal& g, Int a, Int b);
Int group_inv(const GroupVal& g, Int a);
Int group_pow(const GroupVal& g, Int a, Int k);
Int group_elem_order(const GroupVal& g, Int a);

// Subgroup of a finite group, as sorted element indices plus a greedily
// chosen generating subset.
struct Subgroup {
    std::vector<Int> elements;
    std::vector<Int> generators;
};

// Homomorphism between finite groups. Table sources carry the full element
// map and are validated exhaustively; abelian sources carry generator images
// (canonical indices in the target) and are validated on the relations
// d_i * g_i = 0 plus pairwise commutation of the images.
class Homomorphism {
  public:
    // full element map, any source kind
    static Homomorphism from_element_map(GroupVal src, GroupVal tgt, std::vector<Int> map,
                                         const Budget& budget = default_budget());
    // generator images for an abelian source
    static Homomorphism from_gen_images(FinAbGroup src, GroupVal tgt, std::vector<Int> images,
                                        const Budget& budget = default_budget());
    static Homomorphism identity(GroupVal g);

    const GroupVal& source() const { return src_; }
    const GroupVal& target() const { return tgt_; }
    Int apply(Int x) const;
    const std::vector<Int>& element_map() const { return elem_map_; }
    const std::optional<std::vector<Int>>& gen_images() const { return gen_images_; }

    // generator-image matrix for abelian -> abelian homs (row i = image tuple
    // of generator i)
    IntMat gen_matrix() const;

    bool is_surjective() const;
    bool is_injective() const;

  private:
    Homomorphism() = default;
    GroupVal src_;
    GroupVal tgt_;
    std::vector<Int> elem_map_;                    // always materialized (finite sources)
    std::optional<std::vector<Int>> gen_images_;   // abelian sources only
};

Subgroup kernel(const Homomorphism& f);
Subgroup image(const Homomorphism& f);
bool is_surjective(const Homomorphism& f);
Homomorphism compose(const Homomorphism& f, const Homomorphism& g);  // g after f

// All homomorphisms source -> target, deterministic lexicographic order on
// generator images.
std::vector<Homomorphism> enumerate_homs(const GroupVal& source, const GroupVal& target,
                                         const Budget& budget = default_budget());

// Quotient of a finite abelian group by the subgroup generated by the given
// element tuples, via Smith normal form; returns the quotient in
// invariant-factor form together with the canonical projection.
std::pair<FinAbGroup, Homomorphism> quotient(const FinAbGroup& g,
                                             const std::vector<FinAbGroup::Elem>& subgroup_gens);

bool are_isomorphic(const FinAbGroup& a, const FinAbGroup& b);

// Exhaustive isomorphism search for table groups (order <= 16).
bool are_isomorphic_tables(const FinGroup& a, const FinGroup& b,
                           const Budget& budget = default_budget());

// Subgroup machinery for table groups (order bounded by budget).
Subgroup subgroup_closure(const FinGroup& g, const std::vector<Int>& gens);
std::vector<Subgroup> all_subgroups(const FinGroup& g, const Budget& budget = default_budget());
bool is_normal(const FinGroup& g, const Subgroup& h);
// Quotient of a table group by a normal subgroup: coset table plus projection.
std::pair<FinGroup, std::vector<Int>> quotient_by_normal(const FinGroup& g, const Subgroup& n,
                                                         const Budget& budget = default_budget());

// Greedy minimal generating sequence (smallest element index first).
std::vector<Int> generating_sequence(const FinGroup& g);

// Nonabelian catalog, as literal verified tables.
const FinGroup& symmetric3();
const FinGroup& dihedral4();
const FinGroup& quaternion8();

// All abelian groups of order <= bound (invariant-factor form), order then
// lexicographic; includes the trivial group.
std::vector<FinAbGroup> abelian_catalog(Int max_order);

// Quotient of Z^m by the full-rank row lattice of rel, with projection and an
// integer section. proj maps x in Z^m to residue tuples; section lifts tuples
// back with proj(section(t)) = t exactly.
struct AbelianQuotient {
    std::vector<Int> factors;  // invariant factors >= 2
    IntMat proj;               // (#factors) x m
    IntMat section;            // m x (#factors)
};
AbelianQuotient abelian_quotient(Int m, const IntMat& rel);

}  // namespace pfc
