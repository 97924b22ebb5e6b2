#ifndef ARTINDIV_ARTIN_HPP_
#define ARTINDIV_ARTIN_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artindiv/cyclo.hpp"
#include "artindiv/fingroup.hpp"
#include "artindiv/local_factor.hpp"
#include "artindiv/subgroups.hpp"

namespace artindiv {

  // A 1-dimensional character of a subgroup H of G, stored as one root of
  // unity per element of H (in H's enumeration order).
  class SubgroupCharacter {
   public:
    using Assignment = std::vector<std::pair<Permutation, RootOfUnity>>;

    // Completes generator images by closure. Throws InconsistentCharacter if
    // the assignment does not extend to a homomorphism, NotASubgroup if a
    // generator is outside H or H is not in G, and InvalidArgument if the
    // listed elements do not generate H.
    static SubgroupCharacter from_generators(FinGroup const&   G,
                                             FinGroup const&   H,
                                             Assignment const& images);
    static SubgroupCharacter trivial(FinGroup const& G, FinGroup const& H);
    // values[i] belongs to H.element(i); checked to be multiplicative.
    static SubgroupCharacter from_values(FinGroup const&          G,
                                         FinGroup const&          H,
                                         std::vector<RootOfUnity> values);

    FinGroup const& group() const noexcept {
      return _G;
    }
    FinGroup const& subgroup() const noexcept {
      return _H;
    }
    // lcm of the orders of the values (the order of the character).
    std::size_t modulus() const noexcept {
      return _modulus;
    }
    std::vector<RootOfUnity> const& values() const noexcept {
      return _values;
    }
    // Throws NotASubgroup when h is not in H.
    RootOfUnity value(Permutation const& h) const;
    bool        is_trivial() const noexcept {
      return _modulus == 1;
    }

    // Restriction to K <= H.
    SubgroupCharacter restrict_to(FinGroup const& K) const;
    // Pointwise product; both characters must live on the same subgroup.
    SubgroupCharacter operator*(SubgroupCharacter const& b) const;

    // Same subgroup (as a set) and same value at every element.
    bool equals(SubgroupCharacter const& b) const;

   private:
    SubgroupCharacter(FinGroup G, FinGroup H, std::vector<RootOfUnity> values);
    friend std::vector<SubgroupCharacter> linear_characters(FinGroup const&, FinGroup const&);

    FinGroup                 _G;
    FinGroup                 _H;
    std::vector<RootOfUnity> _values;
    std::size_t              _modulus = 1;
  };

  // Every 1-dimensional character of H <= G, built on an abelian basis of
  // H/[H,H]: the character with exponent tuple (a_1..a_r) sends the i-th
  // basis element (of order d_i) to zeta_{d_i}^{a_i}. Tuples are listed in
  // lexicographic order, so the trivial character comes first.
  std::vector<SubgroupCharacter> linear_characters(FinGroup const& G, FinGroup const& H);

  // A class function on G: one cyclotomic value per conjugacy class, in the
  // order of G.classes().
  class ClassFunction {
   public:
    ClassFunction(FinGroup G, std::vector<CycloElem> values);

    FinGroup const& group() const noexcept {
      return _G;
    }
    std::vector<CycloElem> const& values() const noexcept {
      return _values;
    }
    CycloElem const& operator[](std::size_t cls) const {
      return _values.at(cls);
    }
    CycloElem const& at(Permutation const& g) const;
    // Value at the identity.
    CycloElem const& degree() const {
      return _values.front();
    }

    ClassFunction operator+(ClassFunction const& b) const;
    ClassFunction operator*(ClassFunction const& b) const;
    ClassFunction conj() const;
    bool          equals(ClassFunction const& b) const;

    // Values joined by ", ".
    std::string to_string() const;

   private:
    FinGroup               _G;
    std::vector<CycloElem> _values;
  };

  // Throws GroupMismatch unless both functions live on the same group.
  CycloElem inner_product(ClassFunction const& f1, ClassFunction const& f2);
  // The restriction of psi to H <= G, as a class function on H.
  ClassFunction restriction(ClassFunction const& psi, FinGroup const& H);
  ClassFunction trivial_character(FinGroup const& G);
  // The character of a 1-dimensional subgroup character, on H.
  ClassFunction as_class_function(SubgroupCharacter const& chi);

  // A matrix with one nonzero entry per row and per column: row i has
  // weight[i] in column column[i].
  struct MonomialMatrix {
    std::vector<std::size_t> column;
    std::vector<RootOfUnity> weight;

    std::size_t size() const noexcept {
      return column.size();
    }
    bool                       is_diagonal() const;
    std::optional<RootOfUnity> entry(std::size_t i, std::size_t j) const;
    MonomialMatrix             operator*(MonomialMatrix const& b) const;
    CycloElem                  trace() const;
    static MonomialMatrix      identity(std::size_t n);

    friend bool operator==(MonomialMatrix const&, MonomialMatrix const&) = default;
  };

  // det(I - M T), one factor (k, w) per k-cycle of the underlying
  // permutation with w the product of the weights along the cycle.
  LocalFactor monomial_charpoly(MonomialMatrix const& M);

  // The induced representation Ind_H^G(chi) is realized on the right cosets
  // H r_0, ..., H r_{n-1} of coset_table(G, H); equivalently on the left
  // cosets s_i H with s_i = r_i^-1. In that basis the matrix of g has entry
  // chi(s_i^-1 g s_j) = chi(r_i g r_j^-1) at (i, j) when this element lies
  // in H, and 0 otherwise.
  MonomialMatrix induced_matrix(FinGroup const&          G,
                                CosetTable const&        cosets,
                                SubgroupCharacter const& chi,
                                Permutation const&       g);
  MonomialMatrix induced_matrix(FinGroup const&          G,
                                FinGroup const&          H,
                                SubgroupCharacter const& chi,
                                Permutation const&       g);

  // The local factor by the orbit formula: for each <g>-orbit of size k on
  // the cosets, with representative H r, the factor (k, chi(r g^k r^-1)).
  LocalFactor induced_local_factor(FinGroup const&          G,
                                   CosetTable const&        cosets,
                                   SubgroupCharacter const& chi,
                                   Permutation const&       g);
  LocalFactor induced_local_factor(FinGroup const&          G,
                                   FinGroup const&          H,
                                   SubgroupCharacter const& chi,
                                   Permutation const&       g);
  // Same, with caller-chosen coset representatives (reps[i] must lie in the
  // i-th coset of the table).
  LocalFactor induced_local_factor(FinGroup const&                 G,
                                   CosetTable const&               cosets,
                                   SubgroupCharacter const&        chi,
                                   Permutation const&              g,
                                   std::vector<Permutation> const& reps);

  // One local factor per conjugacy class of G.
  std::vector<LocalFactor> local_factor_table(FinGroup const&          G,
                                              SubgroupCharacter const& chi);

  ClassFunction induced_character(FinGroup const&          G,
                                  FinGroup const&          H,
                                  SubgroupCharacter const& chi);
  // Ind_H^G of the trivial character: the number of cosets fixed by g.
  ClassFunction permutation_character(FinGroup const& G, FinGroup const& H);

  // The irreducible characters of G, trivial character first, then by
  // degree. Throws CapExceeded when |G| exceeds the lattice cap.
  std::vector<ClassFunction> character_table(FinGroup const& G);

  // Multiplicity of each irreducible (rows of `table`) in f.
  std::vector<mpq_class> decompose(ClassFunction const&              f,
                                   std::vector<ClassFunction> const& table);

  // Whether Ind_H 1 is a subrepresentation of Ind_{H'} 1.
  bool is_subrep(FinGroup const& G, FinGroup const& H, FinGroup const& H2);
  bool is_subrep(FinGroup const&                   G,
                 FinGroup const&                   H,
                 FinGroup const&                   H2,
                 std::vector<ClassFunction> const& table);

  // Per-class data behind the comparison of (H, H') inside G:
  //   p1: zeta_K divides zeta_K'   (evaluated as p3, trivial characters)
  //   p2: |c ∩ H| >= |c ∩ H'| for every class c
  //   p3: charpoly(rho(c)) divides charpoly(rho'(c)) for every class c
  //   p4: rho is a subrepresentation of rho'
  // with rho = Ind_H 1 and rho' = Ind_{H'} 1.
  struct ClassEvidence {
    std::size_t cls;
    Permutation representative;
    std::size_t count_h;
    std::size_t count_h2;
    LocalFactor factor_h;
    LocalFactor factor_h2;
    bool        count_ok;  // count_h >= count_h2
    bool        divides;   // factor_h | factor_h2
  };

  struct PropertyReport {
    std::vector<ClassEvidence> rows;
    bool                       p1 = false;
    bool                       p2 = false;
    bool                       p3 = false;
    std::optional<bool>        p4;  // absent when not requested
    // First class (by index) where p2 resp. p3 fails.
    std::optional<std::size_t> p2_witness;
    std::optional<std::size_t> p3_witness;
  };

  PropertyReport compare_properties(FinGroup const& G,
                                    FinGroup const& H,
                                    FinGroup const& H2,
                                    bool            with_p4 = true);
  PropertyReport compare_properties(FinGroup const&                   G,
                                    FinGroup const&                   H,
                                    FinGroup const&                   H2,
                                    std::vector<ClassFunction> const* table);

  bool property_1(FinGroup const& G, FinGroup const& H, FinGroup const& H2);
  bool property_2(FinGroup const& G, FinGroup const& H, FinGroup const& H2);
  bool property_3(FinGroup const& G, FinGroup const& H, FinGroup const& H2);
  bool property_4(FinGroup const& G, FinGroup const& H, FinGroup const& H2);

  // Equal class intersection counts for every class. Also compares the two
  // permutation characters and throws Internal if the criteria disagree.
  bool gassmann_equivalent(FinGroup const& G, FinGroup const& H, FinGroup const& H2);

  // Character file:
  //   modulus: 4
  //   chi: a^2 b -> 1        (generator maps to zeta_4^1)
  //   chi: (1 2)(3 4) -> 2
  // The left-hand sides are returned unparsed; the caller resolves them as
  // words or permutations.
  struct CharacterFile {
    std::size_t                                    modulus = 1;
    std::vector<std::pair<std::string, long long>> images;
  };
  CharacterFile parse_character_file(std::string_view text);

}  // namespace artindiv

#endif  // ARTINDIV_ARTIN_HPP_
