#include "artindiv/cyclo.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "artindiv/poly.hpp"

namespace artindiv {

  std::size_t lcm_size(std::size_t a, std::size_t b) {
    return std::lcm(a, b);
  }

  ////////////////////////////////////////////////////////////////////////
  // RootOfUnity
  ////////////////////////////////////////////////////////////////////////

  RootOfUnity::RootOfUnity(std::size_t m, long long e) {
    if (m == 0) {
      throw Error(ErrorKind::InvalidArgument, "root of unity of order 0");
    }
    auto      mm = static_cast<long long>(m);
    long long r  = ((e % mm) + mm) % mm;
    auto      g  = std::gcd(static_cast<std::size_t>(r), m);
    _m           = m / g;
    _e           = static_cast<std::size_t>(r) / g;
  }

  std::size_t RootOfUnity::exponent_in(std::size_t M) const {
    if (M == 0 || M % _m != 0) {
      throw Error(ErrorKind::InvalidArgument,
                  to_string() + " is not an " + std::to_string(M)
                      + "-th root of unity");
    }
    return _e * (M / _m);
  }

  RootOfUnity RootOfUnity::operator*(RootOfUnity const& b) const {
    auto L = std::lcm(_m, b._m);
    return RootOfUnity(L, static_cast<long long>(exponent_in(L) + b.exponent_in(L)));
  }

  RootOfUnity RootOfUnity::inverse() const {
    return RootOfUnity(_m, -static_cast<long long>(_e));
  }

  RootOfUnity RootOfUnity::pow(long long k) const {
    auto mm = static_cast<long long>(_m);
    k       = ((k % mm) + mm) % mm;
    return RootOfUnity(_m, static_cast<long long>(_e) * k);
  }

  std::string RootOfUnity::to_string() const {
    if (_m == 1) {
      return "1";
    }
    auto s = "z" + std::to_string(_m);
    if (_e != 1) {
      s += "^" + std::to_string(_e);
    }
    return s;
  }

  RootOfUnity parse_root_of_unity(std::string_view text) {
    auto fail = [&]() -> RootOfUnity {
      throw Error(ErrorKind::Parse,
                  "bad root of unity \"" + std::string(text) + "\"");
    };
    std::string s;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        s += c;
      }
    }
    if (s == "1") {
      return RootOfUnity();
    }
    if (s.size() < 2 || s[0] != 'z') {
      return fail();
    }
    std::size_t pos = 1;
    std::size_t b   = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    if (pos == b || pos - b > 9) {
      return fail();
    }
    std::size_t m = std::stoul(s.substr(b, pos - b));
    long long   e = 1;
    if (pos < s.size()) {
      if (s[pos] != '^') {
        return fail();
      }
      ++pos;
      bool neg = pos < s.size() && s[pos] == '-';
      pos += neg;
      b = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      }
      if (pos == b || pos != s.size() || pos - b > 9) {
        return fail();
      }
      e = std::stoll(s.substr(b)) * (neg ? -1 : 1);
    }
    if (m == 0) {
      return fail();
    }
    return RootOfUnity(m, e);
  }

  ////////////////////////////////////////////////////////////////////////
  // CycloElem
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Reduces sum c_i x^i modulo Phi_m (monic) to phi(m) coefficients.
    std::vector<mpq_class> reduce(std::size_t m, std::vector<mpq_class> c) {
      auto const& phi = cyclotomic_polynomial(m).coeffs();
      std::size_t n   = phi.size() - 1;
      for (std::size_t i = c.size(); i-- > n;) {
        if (c[i] == 0) {
          continue;
        }
        mpq_class t = c[i];
        for (std::size_t j = 0; j <= n; ++j) {
          c[i - n + j] -= t * phi[j];
        }
      }
      c.resize(n, 0);
      return c;
    }
  }  // namespace

  CycloElem::CycloElem() : _m(1), _c{0} {}

  CycloElem CycloElem::zero(std::size_t m) {
    if (m == 0) {
      throw Error(ErrorKind::InvalidArgument, "cyclotomic modulus must be >= 1");
    }
    return CycloElem(m, std::vector<mpq_class>(euler_phi(m), 0));
  }

  CycloElem CycloElem::rational(mpq_class q, std::size_t m) {
    auto z  = zero(m);
    z._c[0] = std::move(q);
    z._c[0].canonicalize();
    return z;
  }

  CycloElem CycloElem::root(RootOfUnity const& w, std::size_t m) {
    if (m == 0) {
      m = w.order();
    }
    std::vector<mpq_class> c(w.exponent_in(m) + 1, 0);
    c.back() = 1;
    return CycloElem(m, reduce(m, std::move(c)));
  }

  CycloElem CycloElem::from_exponents(std::size_t m, std::vector<mpq_class> const& c) {
    if (m == 0) {
      throw Error(ErrorKind::InvalidArgument, "cyclotomic modulus must be >= 1");
    }
    std::vector<mpq_class> folded(m, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      mpq_class x = c[i];
      x.canonicalize();
      folded[i % m] += x;
    }
    return CycloElem(m, reduce(m, std::move(folded)));
  }

  CycloElem CycloElem::lift(std::size_t M) const {
    if (M == _m) {
      return *this;
    }
    if (M == 0 || M % _m != 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "cannot move Q(z" + std::to_string(_m) + ") into Q(z"
                      + std::to_string(M) + ")");
    }
    std::size_t            step = M / _m;
    std::vector<mpq_class> c(_c.size() * step, 0);
    for (std::size_t i = 0; i < _c.size(); ++i) {
      c[i * step] = _c[i];
    }
    return from_exponents(M, c);
  }

  CycloElem CycloElem::operator+(CycloElem const& b) const {
    auto L = std::lcm(_m, b._m);
    auto x = lift(L);
    auto y = b.lift(L);
    for (std::size_t i = 0; i < x._c.size(); ++i) {
      x._c[i] += y._c[i];
    }
    return x;
  }

  CycloElem CycloElem::operator-() const {
    auto x = *this;
    for (auto& c : x._c) {
      c = -c;
    }
    return x;
  }

  CycloElem CycloElem::operator-(CycloElem const& b) const {
    return *this + (-b);
  }

  CycloElem CycloElem::operator*(CycloElem const& b) const {
    auto L = std::lcm(_m, b._m);
    auto x = lift(L);
    auto y = b.lift(L);
    std::vector<mpq_class> c(2 * x._c.size(), 0);
    for (std::size_t i = 0; i < x._c.size(); ++i) {
      if (x._c[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < y._c.size(); ++j) {
        c[i + j] += x._c[i] * y._c[j];
      }
    }
    return CycloElem(L, reduce(L, std::move(c)));
  }

  CycloElem CycloElem::scaled(mpq_class const& q) const {
    auto x = *this;
    for (auto& c : x._c) {
      c *= q;
    }
    return x;
  }

  CycloElem CycloElem::conj() const {
    std::vector<mpq_class> c(_m, 0);
    for (std::size_t i = 0; i < _c.size(); ++i) {
      c[(_m - i) % _m] = _c[i];
    }
    return from_exponents(_m, c);
  }

  bool CycloElem::is_zero() const {
    for (auto const& c : _c) {
      if (c != 0) {
        return false;
      }
    }
    return true;
  }

  bool CycloElem::is_rational() const {
    for (std::size_t i = 1; i < _c.size(); ++i) {
      if (_c[i] != 0) {
        return false;
      }
    }
    return true;
  }

  mpq_class CycloElem::rational_value() const {
    if (!is_rational()) {
      throw Error(ErrorKind::InvalidArgument, to_string() + " is not rational");
    }
    return _c[0];
  }

  bool CycloElem::is_integral() const {
    for (auto const& c : _c) {
      if (c.get_den() != 1) {
        return false;
      }
    }
    return true;
  }

  bool operator==(CycloElem const& a, CycloElem const& b) {
    auto L = std::lcm(a._m, b._m);
    return a.lift(L)._c == b.lift(L)._c;
  }

  std::string CycloElem::to_string() const {
    std::ostringstream out;
    bool               first = true;
    for (std::size_t i = 0; i < _c.size(); ++i) {
      if (_c[i] == 0) {
        continue;
      }
      mpq_class mag = abs(_c[i]);
      if (first) {
        if (_c[i] < 0) {
          out << '-';
        }
      } else {
        out << (_c[i] < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0) {
        out << mag.get_str();
        continue;
      }
      if (mag != 1) {
        out << mag.get_str() << ' ';
      }
      out << 'z' << _m;
      if (i > 1) {
        out << '^' << i;
      }
    }
    return first ? "0" : out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // CycloPoly
  ////////////////////////////////////////////////////////////////////////

  CycloPoly::CycloPoly(std::vector<CycloElem> coeffs) : _c(std::move(coeffs)) {
    normalize();
  }

  void CycloPoly::normalize() {
    while (!_c.empty() && _c.back().is_zero()) {
      _c.pop_back();
    }
  }

  CycloPoly CycloPoly::operator*(CycloPoly const& b) const {
    if (_c.empty() || b._c.empty()) {
      return CycloPoly();
    }
    std::vector<CycloElem> r(_c.size() + b._c.size() - 1);
    for (std::size_t i = 0; i < _c.size(); ++i) {
      if (_c[i].is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < b._c.size(); ++j) {
        r[i + j] += _c[i] * b._c[j];
      }
    }
    return CycloPoly(std::move(r));
  }

  bool operator==(CycloPoly const& a, CycloPoly const& b) {
    if (a._c.size() != b._c.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a._c.size(); ++i) {
      if (!(a._c[i] == b._c[i])) {
        return false;
      }
    }
    return true;
  }

  std::string CycloPoly::to_string(char var) const {
    if (_c.empty()) {
      return "0";
    }
    std::ostringstream out;
    bool               first = true;
    for (std::size_t i = 0; i < _c.size(); ++i) {
      if (_c[i].is_zero()) {
        continue;
      }
      if (!first) {
        out << " + ";
      }
      first = false;
      auto c = _c[i].to_string();
      if (i == 0) {
        out << c;
        continue;
      }
      if (c != "1") {
        out << '(' << c << ')';
      }
      out << var;
      if (i > 1) {
        out << '^' << i;
      }
    }
    return out.str();
  }

  std::optional<CycloPoly> exact_div(CycloPoly const& a, CycloPoly const& b) {
    if (b.coeffs().empty()) {
      throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
    }
    if (!(b.coeff(0) == CycloElem::rational(1))) {
      throw Error(ErrorKind::InvalidArgument,
                  "divisor must have constant term 1");
    }
    if (a.coeffs().empty()) {
      return CycloPoly();
    }
    if (a.degree() < b.degree()) {
      return std::nullopt;
    }
    // power-series division; b(0) = 1 makes every step exact
    auto                   n = static_cast<std::size_t>(a.degree() - b.degree()) + 1;
    std::vector<CycloElem> q(n);
    for (std::size_t i = 0; i < n; ++i) {
      CycloElem t = a.coeff(i);
      for (std::size_t j = 1; j <= i && j < b.coeffs().size(); ++j) {
        t = t - b.coeffs()[j] * q[i - j];
      }
      q[i] = t;
    }
    CycloPoly quotient(std::move(q));
    if (!(quotient * b == a)) {
      return std::nullopt;
    }
    return quotient;
  }

}  // namespace artindiv
