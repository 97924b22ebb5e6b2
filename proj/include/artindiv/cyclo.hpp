#ifndef ARTINDIV_CYCLO_HPP_
#define ARTINDIV_CYCLO_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artindiv/errors.hpp"

namespace artindiv {

  std::size_t lcm_size(std::size_t a, std::size_t b);

  // zeta_m^e with zeta_m = exp(2 pi i / m), always stored in lowest terms:
  // gcd(e, m) = 1 and 0 <= e < m, so m is the multiplicative order. The
  // root 1 is (m, e) = (1, 0).
  class RootOfUnity {
   public:
    RootOfUnity() = default;
    RootOfUnity(std::size_t m, long long e);

    static RootOfUnity one() {
      return {};
    }

    std::size_t order() const noexcept {
      return _m;
    }
    std::size_t exponent() const noexcept {
      return _e;
    }
    bool is_one() const noexcept {
      return _m == 1;
    }

    // The exponent of this root as a power of zeta_M; throws InvalidArgument
    // unless order() divides M.
    std::size_t exponent_in(std::size_t M) const;

    RootOfUnity operator*(RootOfUnity const& b) const;
    RootOfUnity inverse() const;
    RootOfUnity pow(long long k) const;

    friend bool operator==(RootOfUnity const&, RootOfUnity const&) = default;
    friend auto operator<=>(RootOfUnity const&, RootOfUnity const&) = default;

    // "1", "z2", "z3^2", ...
    std::string to_string() const;

   private:
    std::size_t _m = 1;
    std::size_t _e = 0;
  };

  // Parses "1", "zM" or "zM^e" (e may be negative). Throws Parse.
  RootOfUnity parse_root_of_unity(std::string_view text);

  // An element of Q(zeta_m), as the coefficient vector of its residue modulo
  // the m-th cyclotomic polynomial in the power basis 1, zeta_m, ...,
  // zeta_m^(phi(m)-1). Binary operations first move both operands to the
  // lcm of their moduli, so values from different fields can be mixed.
  class CycloElem {
   public:
    // Zero in Q(zeta_1) = Q.
    CycloElem();
    static CycloElem zero(std::size_t m = 1);
    static CycloElem rational(mpq_class q, std::size_t m = 1);
    // Throws InvalidArgument unless w.order() divides m (0 means w.order()).
    static CycloElem root(RootOfUnity const& w, std::size_t m = 0);
    // sum c_i zeta_m^i for arbitrary exponents i.
    static CycloElem from_exponents(std::size_t                   m,
                                    std::vector<mpq_class> const& c);

    std::size_t                   modulus() const noexcept {
      return _m;
    }
    std::vector<mpq_class> const& coeffs() const noexcept {
      return _c;
    }

    // The same number inside Q(zeta_M); M must be a multiple of modulus().
    CycloElem lift(std::size_t M) const;

    CycloElem operator+(CycloElem const& b) const;
    CycloElem operator-(CycloElem const& b) const;
    CycloElem operator*(CycloElem const& b) const;
    CycloElem operator-() const;
    CycloElem scaled(mpq_class const& q) const;
    CycloElem& operator+=(CycloElem const& b) {
      return *this = *this + b;
    }
    CycloElem& operator*=(CycloElem const& b) {
      return *this = *this * b;
    }

    // Complex conjugation zeta -> zeta^-1.
    CycloElem conj() const;

    bool is_zero() const;
    bool is_rational() const;
    // Rational value; throws InvalidArgument if not rational.
    mpq_class rational_value() const;
    // Algebraic integer (all power-basis coordinates integral).
    bool is_integral() const;

    friend bool operator==(CycloElem const& a, CycloElem const& b);

    // e.g. "1/2", "-1 + 2 z5^3", "z3"; zero prints as "0".
    std::string to_string() const;

   private:
    CycloElem(std::size_t m, std::vector<mpq_class> c) : _m(m), _c(std::move(c)) {}

    std::size_t            _m;
    std::vector<mpq_class> _c;
  };

  // Polynomial in T with CycloElem coefficients, constant term first.
  class CycloPoly {
   public:
    CycloPoly() = default;
    explicit CycloPoly(std::vector<CycloElem> coeffs);

    std::vector<CycloElem> const& coeffs() const noexcept {
      return _c;
    }
    long degree() const noexcept {
      return static_cast<long>(_c.size()) - 1;
    }
    CycloElem coeff(std::size_t i) const {
      return i < _c.size() ? _c[i] : CycloElem();
    }

    CycloPoly operator*(CycloPoly const& b) const;
    friend bool operator==(CycloPoly const& a, CycloPoly const& b);

    std::string to_string(char var = 'T') const;

   private:
    void                   normalize();
    std::vector<CycloElem> _c;
  };

  // Exact quotient a / b in Q(zeta)[T] for b with constant term 1, or nullopt
  // when b does not divide a. Throws DivisionByZero for b = 0.
  std::optional<CycloPoly> exact_div(CycloPoly const& a, CycloPoly const& b);

}  // namespace artindiv

#endif  // ARTINDIV_CYCLO_HPP_
