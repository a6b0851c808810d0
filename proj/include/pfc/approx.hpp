#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfc/budget.hpp"
#include "pfc/fingroup.hpp"
#include "pfc/fplin.hpp"

namespace pfc {

// The group being completed. Finite groups are carried directly; finitely
// generated abelian groups as Z^rank x prod Z/torsion[i]; F_p vector spaces
// as FgAbelian with field structure; the restricted sequence model stands for
// finitely supported F_p sequences observed through coordinate forms
// p_0, ..., p_level.
struct SourceGroup {
    enum class Kind { finite, fg_abelian, fp_space, seq_model };
    Kind kind = Kind::finite;

    std::optional<GroupVal> finite_group;
    Int rank = 0;               // fg_abelian
    std::vector<Int> torsion;   // fg_abelian / fp_space (all p)
    Int p = 0;                  // fp_space / seq_model
    Int dim = 0;                // fp_space
    Int level = -1;             // seq_model

    static SourceGroup from_finite(GroupVal g);
    static SourceGroup fg_abelian(Int rank, const std::vector<Int>& torsion);
    static SourceGroup fp_space(Int p, Int dim);
    static SourceGroup seq_model(Int p, Int level);

    std::string describe() const;
    bool is_abelian_like() const { return kind == Kind::fg_abelian || kind == Kind::fp_space; }
    // generators of the abelian-like presentations; order 0 marks a free one
    Int num_generators() const;
    std::vector<Int> generator_orders() const;
    Int order_if_finite() const;  // -1 when infinite
};

// Elements: {index} for finite sources, a generator-coordinate tuple for the
// abelian-like ones.
using SourceElem = std::vector<Int>;

// A finite approximation of the source: a finite target group and the
// structure map into it. The target always carries a materialized table; the
// canonical element indexing of the table agrees with the abelian mixed-radix
// indexing when both views exist.
struct Approximation {
    std::string key;
    GroupVal target;
    FinGroup table;
    std::optional<std::vector<Int>> phi_elem_map;   // finite sources
    std::optional<std::vector<Int>> phi_gen_images; // abelian-like sources (table indices)
    bool surjective = false;

    // denormalized kernel data, per source kind, used by the checkers
    std::optional<std::vector<Int>> kernel_elements;  // finite
    std::optional<IntMat> kernel_lattice;             // fg_abelian (HNF rows)
    std::optional<Subspace> kernel_subspace;          // fp_space

    Int order() const { return table.order; }
    // generator-image matrix over F_p / Z for abelian-like sources with an
    // abelian target: column i is the image tuple of generator i
    IntMat phi_matrix() const;
};

Int apply_phi(const SourceGroup& src, const Approximation& a, const SourceElem& g);

struct ApproxMorphism {
    Int from = -1;
    Int to = -1;
    std::vector<Int> map;  // element map between the node tables
};

struct ApproxDiagram {
    SourceGroup source;
    Int bound = 0;
    std::string mode;  // "surjective" or "full"
    std::vector<Approximation> nodes;
    std::vector<ApproxMorphism> edges;
    bool with_identity_edges = false;

    Int find_node(const std::string& key) const;  // -1 if absent
};

// One node per finite-index kernel of index <= bound, target the canonical
// quotient, edges all induced maps for kernel inclusions. Nodes are ordered
// by index then by kernel basis; the diagram is closed under composition.
ApproxDiagram surjective_approximations(const SourceGroup& source, Int bound,
                                        const Budget& budget = default_budget());

// One node per homomorphism from the source into each catalog group of order
// <= bound; edges are all maps commuting with the structure maps (identity
// self-edges included).
ApproxDiagram all_approximations(const SourceGroup& source, Int bound,
                                 const std::vector<GroupVal>& catalog,
                                 const Budget& budget = default_budget());

// All homomorphisms between the targets of two approximations of the same
// source that commute with the structure maps. At most one exists when v is
// surjective.
std::vector<Homomorphism> hom_between(const SourceGroup& source, const Approximation& v,
                                      const Approximation& w, const Budget& budget = default_budget());

// Generator-image tuples of all homomorphisms from an abelian-like source
// into a table group, lexicographic.
std::vector<std::vector<Int>> enumerate_source_homs(const SourceGroup& source, const FinGroup& target,
                                                    const Budget& budget = default_budget());

std::string to_dot(const ApproxDiagram& d);

// Default catalog: all abelian groups of order <= 8 plus S3, D4, Q8.
std::vector<GroupVal> default_catalog();
// Elementary abelian catalog (F_p)^j for p^j <= bound.
std::vector<GroupVal> fp_catalog(Int p, Int bound);

// Structural validation used by the tests: every edge commutes with the
// structure maps and the edge set is closed under composition.
void validate_diagram(const ApproxDiagram& d);

}  // namespace pfc
