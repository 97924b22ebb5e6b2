#ifndef ARTINDIV_PERMUTATION_HPP_
#define ARTINDIV_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace artindiv {

  // A bijection of {0, ..., n-1}, stored as its image table.
  //
  // Permutations act on the right: the image of a point i under p is p[i],
  // and the product p * q applies p first and then q. Words in generators
  // therefore evaluate left to right, matching the right action of a group on
  // cosets produced by coset enumeration.
  class Permutation {
   public:
    using point_type = std::uint32_t;

    Permutation() = default;
    // Throws InvalidArgument unless images is a bijection of {0..n-1}.
    explicit Permutation(std::vector<point_type> images);

    static Permutation identity(std::size_t degree);
    // Cycles use 0-based points; points not mentioned are fixed.
    static Permutation from_cycles(std::size_t degree,
                                   std::vector<std::vector<point_type>> const& cycles);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    point_type operator[](std::size_t i) const noexcept {
      return _images[i];
    }

    std::vector<point_type> const& images() const noexcept {
      return _images;
    }

    // Throws DegreeMismatch when the degrees differ.
    Permutation operator*(Permutation const& that) const;
    Permutation inverse() const;
    Permutation pow(long long e) const;
    // this^-1 * g * this, i.e. the conjugate of g by this.
    Permutation conjugate(Permutation const& g) const;

    bool        is_identity() const noexcept;
    std::size_t order() const;

    // Nontrivial cycles, each starting at its least point, ordered by that
    // point.
    std::vector<std::vector<point_type>> cycles() const;
    // All cycle lengths (fixed points included), sorted descending.
    std::vector<std::size_t> cycle_type() const;

    // Cycle notation, e.g. "(1 2 3)(4 5)"; the identity prints as "()".
    std::string to_string(bool one_based = true) const;

    std::size_t hash() const noexcept;

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<point_type> _images;
  };

  // Parses cycle notation such as "(1 2 3)(4 5)" or "()" into a permutation
  // of the given degree. Points are 1-based unless one_based is false.
  Permutation parse_cycles(std::string_view text,
                           std::size_t      degree,
                           bool             one_based = true);

  struct PermutationHash {
    std::size_t operator()(Permutation const& p) const noexcept {
      return p.hash();
    }
  };

}  // namespace artindiv

#endif  // ARTINDIV_PERMUTATION_HPP_
