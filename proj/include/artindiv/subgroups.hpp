#ifndef ARTINDIV_SUBGROUPS_HPP_
#define ARTINDIV_SUBGROUPS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "artindiv/fingroup.hpp"

namespace artindiv {

  // Throws NotASubgroup unless H <= G.
  void check_subgroup(FinGroup const& G, FinGroup const& H);

  // The subgroup of G generated by gens (enumerated on its own).
  FinGroup subgroup(FinGroup const& G, std::vector<Permutation> gens);

  // The subgroup of G consisting of the elements satisfying pred, with a
  // small generating set chosen greedily in enumeration order. The caller
  // guarantees that the selected elements form a subgroup.
  FinGroup subgroup_where(FinGroup const&                               G,
                          std::function<bool(Permutation const&)> const& pred);

  // |c ∩ H| for a class c of G.
  std::size_t class_intersection_count(FinGroup const&  G,
                                       ConjClass const& c,
                                       FinGroup const&  H);

  // Right cosets H r of H in G. G acts on them on the right: coset i maps to
  // the coset of r_i * g.
  struct CosetTable {
    FinGroup                 subgroup;
    std::vector<Permutation> representatives;  // least element per coset
    std::vector<std::size_t> coset_of_element;  // indexed by G's elements
    std::vector<Permutation> action;  // one per generator of G, on cosets

    std::size_t index() const noexcept {
      return representatives.size();
    }
  };

  CosetTable coset_table(FinGroup const& G, FinGroup const& H);

  // The permutation induced on the cosets by an arbitrary g in G.
  Permutation coset_action(FinGroup const&   G,
                           CosetTable const& table,
                           Permutation const& g);

  // Intersection of all conjugates of H (the kernel of the coset action).
  FinGroup normal_core(FinGroup const& G, FinGroup const& H);

  // All subgroups of G, each once, grouped into conjugacy classes.
  struct SubgroupLattice {
    std::vector<FinGroup>                 subgroups;  // ordered by order
    std::vector<std::size_t>              class_of;
    std::vector<std::vector<std::size_t>> classes;  // first entry is the rep

    FinGroup const& representative(std::size_t cls) const {
      return subgroups[classes[cls].front()];
    }
  };

  // Throws CapExceeded when |G| exceeds `cap` (default: the lattice cap).
  SubgroupLattice all_subgroups(FinGroup const& G);
  SubgroupLattice all_subgroups(FinGroup const& G, std::size_t cap);

  FinGroup commutator_subgroup(FinGroup const& H);

  bool is_normal(FinGroup const& G, FinGroup const& N);

  struct QuotientGroup {
    FinGroup   group;  // acting on the cosets of the kernel
    CosetTable cosets;
  };

  // Throws NotNormal unless N is normal in G.
  QuotientGroup quotient(FinGroup const& G, FinGroup const& N);
  Permutation   quotient_image(FinGroup const&      G,
                               QuotientGroup const& Q,
                               Permutation const&   g);

  // Independent generators g_1..g_r of an abelian group with orders
  // d_1 | d_2 | ... | d_r, together with the exponent tuple of every element.
  struct AbelianBasis {
    std::vector<Permutation> generators;
    std::vector<std::size_t> orders;
    // exponents[i] is the tuple of elements()[i] of the group.
    std::vector<std::vector<std::size_t>> exponents;
  };

  // Throws NotAbelian for nonabelian input.
  AbelianBasis abelian_basis(FinGroup const& A);

  // A witness g with g H1 g^-1 = H2 when the subgroups are conjugate.
  std::optional<Permutation> are_conjugate_subgroups(FinGroup const& G,
                                                     FinGroup const& H1,
                                                     FinGroup const& H2);

}  // namespace artindiv

#endif  // ARTINDIV_SUBGROUPS_HPP_
