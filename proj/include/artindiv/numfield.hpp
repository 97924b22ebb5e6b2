#ifndef ARTINDIV_NUMFIELD_HPP_
#define ARTINDIV_NUMFIELD_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artindiv/local_factor.hpp"
#include "artindiv/poly.hpp"

namespace artindiv {

  // The field Q[x]/(f) for a monic irreducible f.
  class NumberFieldSpec {
   public:
    // Throws InvalidArgument unless f is monic of degree >= 1 with nonzero
    // discriminant, and unless f is irreducible modulo some prime <= 100 not
    // dividing disc(f) or assume_irreducible is set.
    explicit NumberFieldSpec(IntPoly f, bool assume_irreducible = false);
    // Polynomial text in the variable x, e.g. "x^3 - 2".
    static NumberFieldSpec parse(std::string_view text, bool assume_irreducible = false);

    IntPoly const& polynomial() const noexcept {
      return _f;
    }
    std::size_t degree() const noexcept {
      return static_cast<std::size_t>(_f.degree());
    }
    mpz_class const& discriminant() const noexcept {
      return _disc;
    }
    // The prime modulo which f was found irreducible; empty when the field
    // rests on the override.
    std::optional<std::uint64_t> certificate() const noexcept {
      return _certificate;
    }
    std::string to_string() const {
      return _f.to_string('x');
    }

   private:
    IntPoly                      _f;
    mpz_class                    _disc;
    std::optional<std::uint64_t> _certificate;
  };

  struct SplittingType {
    std::uint64_t              p = 0;
    std::vector<std::size_t>   degrees;   // ascending, empty when excluded
    std::optional<std::string> excluded;  // reason

    bool is_excluded() const noexcept {
      return excluded.has_value();
    }
  };

  // Residue degrees at p from the distinct-degree factorization of f mod p.
  // Primes dividing disc(f) are excluded. Throws InvalidArgument unless p is
  // a prime below 2^31.
  SplittingType splitting_type(NumberFieldSpec const& F, std::uint64_t p);

  // prod (1 - T^f_i), or nothing when p is excluded.
  std::optional<LocalFactor> zeta_local_factor(NumberFieldSpec const& F, std::uint64_t p);

  struct ZetaDivisionReport {
    std::uint64_t                pmax = 0;
    bool                         holds = true;
    std::optional<std::uint64_t> witness;  // least failing prime
    std::vector<std::uint64_t>   excluded;
    std::size_t                  tested = 0;
  };

  // Does the local factor of F1 divide the one of F2 at every prime p <= pmax
  // excluded for neither field?
  ZetaDivisionReport zeta_divides(NumberFieldSpec const& F1,
                                  NumberFieldSpec const& F2,
                                  std::uint64_t          pmax);

  std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace artindiv

#endif  // ARTINDIV_NUMFIELD_HPP_
