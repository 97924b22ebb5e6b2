#ifndef ARTINDIV_LOCAL_FACTOR_HPP_
#define ARTINDIV_LOCAL_FACTOR_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "artindiv/cyclo.hpp"

namespace artindiv {

  // One factor 1 - w T^k.
  struct FactorTerm {
    std::size_t k = 1;
    RootOfUnity w;

    friend bool operator==(FactorTerm const&, FactorTerm const&) = default;
    friend auto operator<=>(FactorTerm const&, FactorTerm const&) = default;
  };

  // A finite product of factors (1 - w T^k) with w a root of unity.
  //
  // Terms are kept sorted by (k, w), so == compares factorizations: the
  // printed form of a factor is determined by its term multiset. Two
  // different factorizations of the same polynomial, such as (1 - T^2) and
  // (1 - T)(1 - z2 T), compare equal under same_polynomial().
  class LocalFactor {
   public:
    // The empty product 1.
    LocalFactor() = default;
    explicit LocalFactor(std::vector<FactorTerm> terms);

    std::vector<FactorTerm> const& terms() const noexcept {
      return _terms;
    }
    // lcm of the orders of the w's.
    std::size_t ambient_modulus() const noexcept {
      return _ambient;
    }
    // Sum of the k's.
    std::size_t degree() const noexcept;

    // Every solution of T^k = w^-1 for every term, as a sorted multiset.
    std::vector<RootOfUnity> roots() const;

    LocalFactor operator*(LocalFactor const& b) const;

    // The expanded polynomial over Q(zeta_M), M = ambient_modulus().
    CycloPoly expand() const;
    bool      same_polynomial(LocalFactor const& b) const;

    friend bool operator==(LocalFactor const&, LocalFactor const&) = default;

    // "(1 - T)^4 (1 - T^2)^6", "(1 - z3^2 T^4)^2 (1 - T)"; the empty product
    // prints as "1".
    std::string to_string() const;

   private:
    std::vector<FactorTerm> _terms;
    std::size_t             _ambient = 1;
  };

  // Inverse of LocalFactor::to_string. Also accepts "1 + ..." (w negated) and
  // omitted spaces. Throws Parse.
  LocalFactor parse_local_factor(std::string_view text);

  // The local factor whose roots are exactly `roots`, one linear term per
  // root (1 - r^-1 T).
  LocalFactor from_roots(std::vector<RootOfUnity> const& roots);

  // True iff a divides b as polynomials over C, decided by sub-multiset
  // inclusion of the root multisets at the common modulus.
  bool localfactor_divides(LocalFactor const& a, LocalFactor const& b);

  // The product expanded over the cyclotomic field.
  inline CycloPoly localfactor_expand(LocalFactor const& a) {
    return a.expand();
  }

}  // namespace artindiv

#endif  // ARTINDIV_LOCAL_FACTOR_HPP_
