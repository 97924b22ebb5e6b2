#ifndef ARTINDIV_POLY_HPP_
#define ARTINDIV_POLY_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artindiv/errors.hpp"

namespace artindiv {

  // Dense polynomial over Z, constant term first. The zero polynomial has no
  // coefficients; otherwise the last coefficient is nonzero.
  class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly constant(mpz_class c);
    // c * var^k
    static IntPoly monomial(mpz_class c, std::size_t k);

    std::vector<mpz_class> const& coeffs() const noexcept {
      return _c;
    }
    bool is_zero() const noexcept {
      return _c.empty();
    }
    // -1 for the zero polynomial.
    long      degree() const noexcept {
      return static_cast<long>(_c.size()) - 1;
    }
    mpz_class coeff(std::size_t i) const {
      return i < _c.size() ? _c[i] : mpz_class(0);
    }
    mpz_class leading() const {
      return _c.empty() ? mpz_class(0) : _c.back();
    }
    bool is_monic() const {
      return !_c.empty() && _c.back() == 1;
    }

    IntPoly operator+(IntPoly const& b) const;
    IntPoly operator-(IntPoly const& b) const;
    IntPoly operator*(IntPoly const& b) const;
    IntPoly operator-() const;
    IntPoly derivative() const;

    friend bool operator==(IntPoly const&, IntPoly const&) = default;

    // Ascending powers, e.g. "1 - T^2 + 3T^5"; zero prints as "0".
    std::string to_string(char var = 'T') const;

   private:
    void                   normalize();
    std::vector<mpz_class> _c;
  };

  // Accepts sums of terms "c", "c var", "c*var^k", "-var^k" in any order;
  // repeated powers are added. Throws Parse.
  IntPoly parse_int_poly(std::string_view text, char var = 'T');

  IntPoly poly_mul(IntPoly const& a, IntPoly const& b);
  // q with b * q = a, or nullopt when b does not divide a over Z.
  // Throws DivisionByZero for b = 0.
  std::optional<IntPoly> poly_exact_div(IntPoly const& a, IntPoly const& b);

  // The m-th cyclotomic polynomial (memoized).
  IntPoly const& cyclotomic_polynomial(std::size_t m);
  std::size_t    euler_phi(std::size_t m);

  // Resultant by fraction-free elimination on the Sylvester matrix, and the
  // discriminant (-1)^(n(n-1)/2) res(f, f') / lc(f).
  mpz_class resultant(IntPoly const& f, IntPoly const& g);
  mpz_class discriminant(IntPoly const& f);

  // Polynomial over the prime field F_p, constant term first, normalized so
  // that the leading coefficient is nonzero.
  class FpPoly {
   public:
    FpPoly() = default;
    // Throws InvalidArgument unless p is a prime below 2^31.
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    static FpPoly from_int(std::uint64_t p, IntPoly const& f);

    std::uint64_t                     prime() const noexcept {
      return _p;
    }
    std::vector<std::uint64_t> const& coeffs() const noexcept {
      return _c;
    }
    long degree() const noexcept {
      return static_cast<long>(_c.size()) - 1;
    }
    bool is_zero() const noexcept {
      return _c.empty();
    }
    bool is_monic() const noexcept {
      return !_c.empty() && _c.back() == 1;
    }

    FpPoly operator+(FpPoly const& b) const;
    FpPoly operator-(FpPoly const& b) const;
    FpPoly operator*(FpPoly const& b) const;
    FpPoly derivative() const;
    FpPoly monic() const;
    // Quotient and remainder; throws DivisionByZero.
    std::pair<FpPoly, FpPoly> divmod(FpPoly const& b) const;
    FpPoly                    operator%(FpPoly const& b) const {
      return divmod(b).second;
    }
    // this^e mod m
    FpPoly powmod(mpz_class const& e, FpPoly const& m) const;

    friend bool operator==(FpPoly const&, FpPoly const&) = default;
    std::string to_string(char var = 'x') const;

   private:
    void                       normalize();
    std::uint64_t              _p = 2;
    std::vector<std::uint64_t> _c;
  };

  // Monic gcd.
  FpPoly gcd(FpPoly a, FpPoly b);

  struct DdfStage {
    std::size_t degree;   // every irreducible factor of `product` has this degree
    FpPoly      product;  // product of those factors
    std::size_t count() const {
      return static_cast<std::size_t>(product.degree()) / degree;
    }
  };

  struct Ddf {
    std::vector<DdfStage>              stages;  // ascending degree
    std::map<std::size_t, std::size_t> counts;  // degree -> number of factors
  };

  // Distinct-degree factorization of a monic squarefree f with deg f >= 1.
  // Throws NotSquarefree when gcd(f, f') != 1, InvalidArgument if f is not
  // monic of positive degree.
  Ddf ddf(FpPoly const& f);

  bool is_prime(std::uint64_t n);

}  // namespace artindiv

#endif  // ARTINDIV_POLY_HPP_
