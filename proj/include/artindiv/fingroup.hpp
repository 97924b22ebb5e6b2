#ifndef ARTINDIV_FINGROUP_HPP_
#define ARTINDIV_FINGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "artindiv/errors.hpp"
#include "artindiv/permutation.hpp"

namespace artindiv {

  struct ConjClass {
    Permutation              representative;        // first in enumeration
    std::size_t              representative_index;  // index in the parent
    std::vector<std::size_t> members;               // sorted parent indices

    std::size_t size() const noexcept {
      return members.size();
    }
  };

  struct ConjugacyClasses {
    std::vector<ConjClass>   classes;   // ordered by representative index
    std::vector<std::size_t> class_of;  // element index -> class index

    std::size_t size() const noexcept {
      return classes.size();
    }
    ConjClass const& operator[](std::size_t i) const {
      return classes[i];
    }
    auto begin() const {
      return classes.begin();
    }
    auto end() const {
      return classes.end();
    }
  };

  // Cayley table on element indices; index 0 is the identity.
  struct GroupTable {
    std::size_t                n = 0;
    std::vector<std::uint32_t> mul;  // mul[i * n + j] = index(e_i * e_j)
    std::vector<std::uint32_t> inv;

    std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept {
      return mul[i * n + j];
    }
  };

  // An explicitly enumerated permutation group.
  //
  // Elements are listed breadth-first: the identity first, then products
  // x * g for x in list order and g in generator order. Every "first" or
  // "least" element choice elsewhere in the library refers to this order.
  //
  // Instances share their (immutable) data, so copies are cheap; the class
  // list and Cayley table are computed on first use.
  class FinGroup {
   public:
    // The trivial group of degree 0.
    FinGroup();

    // Throws CapExceeded if the closure passes `cap` elements and
    // DegreeMismatch if a generator has the wrong degree.
    static FinGroup generated_by(std::size_t              degree,
                                 std::vector<Permutation> gens,
                                 std::size_t              cap);
    static FinGroup generated_by(std::size_t              degree,
                                 std::vector<Permutation> gens);

    std::size_t degree() const noexcept;
    std::size_t order() const noexcept;

    std::vector<Permutation> const& generators() const noexcept;
    std::vector<Permutation> const& elements() const noexcept;
    Permutation const&              element(std::size_t i) const;
    Permutation const&              identity() const;

    std::optional<std::size_t> index_of(Permutation const& p) const;
    // Like index_of but throws NotASubgroup for non-members.
    std::size_t index(Permutation const& p) const;
    bool        contains(Permutation const& p) const;

    // True iff every generator of this group lies in `that`.
    bool is_subgroup_of(FinGroup const& that) const;
    bool is_abelian() const;
    std::size_t exponent() const;

    ConjugacyClasses const& classes() const;
    std::size_t             class_index(Permutation const& p) const;
    // Throws CapExceeded if order() exceeds the lattice cap.
    GroupTable const& table() const;

    // Same element set (possibly different generators).
    bool same_elements(FinGroup const& that) const;

    // True iff both handles refer to the same enumerated object.
    bool identical(FinGroup const& that) const noexcept {
      return _impl == that._impl;
    }

   private:
    struct Impl;
    explicit FinGroup(std::shared_ptr<Impl const> impl);
    std::shared_ptr<Impl const> _impl;
  };

  inline FinGroup group_from_generators(std::size_t              degree,
                                        std::vector<Permutation> gens,
                                        std::size_t              cap) {
    return FinGroup::generated_by(degree, std::move(gens), cap);
  }

  ConjugacyClasses conjugacy_classes(FinGroup const& G);

  // Standard groups on {0..n-1}.
  FinGroup symmetric_group(std::size_t n);
  FinGroup alternating_group(std::size_t n);
  FinGroup cyclic_group(std::size_t n);

  // Direct product acting on the disjoint union of the point sets.
  FinGroup direct_product(FinGroup const& A, FinGroup const& B);
  // Embeds permutations of A (resp. B) into the direct product's degree.
  Permutation embed_left(Permutation const& a, std::size_t degree_b);
  Permutation embed_right(Permutation const& b, std::size_t degree_a);

}  // namespace artindiv

#endif  // ARTINDIV_FINGROUP_HPP_
