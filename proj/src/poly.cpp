#include "artindiv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>

namespace artindiv {

  ////////////////////////////////////////////////////////////////////////
  // IntPoly
  ////////////////////////////////////////////////////////////////////////

  IntPoly::IntPoly(std::vector<mpz_class> coeffs) : _c(std::move(coeffs)) {
    normalize();
  }

  IntPoly IntPoly::constant(mpz_class c) {
    return IntPoly({std::move(c)});
  }

  IntPoly IntPoly::monomial(mpz_class c, std::size_t k) {
    std::vector<mpz_class> v(k + 1, 0);
    v[k] = std::move(c);
    return IntPoly(std::move(v));
  }

  void IntPoly::normalize() {
    while (!_c.empty() && _c.back() == 0) {
      _c.pop_back();
    }
  }

  IntPoly IntPoly::operator+(IntPoly const& b) const {
    std::vector<mpz_class> r(std::max(_c.size(), b._c.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = coeff(i) + b.coeff(i);
    }
    return IntPoly(std::move(r));
  }

  IntPoly IntPoly::operator-() const {
    auto r = _c;
    for (auto& x : r) {
      x = -x;
    }
    return IntPoly(std::move(r));
  }

  IntPoly IntPoly::operator-(IntPoly const& b) const {
    return *this + (-b);
  }

  IntPoly IntPoly::operator*(IntPoly const& b) const {
    if (is_zero() || b.is_zero()) {
      return IntPoly();
    }
    std::vector<mpz_class> r(_c.size() + b._c.size() - 1, 0);
    for (std::size_t i = 0; i < _c.size(); ++i) {
      if (_c[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b._c.size(); ++j) {
        r[i + j] += _c[i] * b._c[j];
      }
    }
    return IntPoly(std::move(r));
  }

  IntPoly IntPoly::derivative() const {
    std::vector<mpz_class> r;
    for (std::size_t i = 1; i < _c.size(); ++i) {
      r.push_back(_c[i] * static_cast<unsigned long>(i));
    }
    return IntPoly(std::move(r));
  }

  std::string IntPoly::to_string(char var) const {
    if (is_zero()) {
      return "0";
    }
    std::ostringstream out;
    bool               first = true;
    for (std::size_t i = 0; i < _c.size(); ++i) {
      if (_c[i] == 0) {
        continue;
      }
      mpz_class mag = abs(_c[i]);
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
        out << mag.get_str();
      }
      out << var;
      if (i > 1) {
        out << '^' << i;
      }
    }
    return out.str();
  }

  IntPoly parse_int_poly(std::string_view text, char var) {
    std::string s;
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) {
        s += ch;
      }
    }
    auto fail = [&](std::string const& why) -> IntPoly {
      throw Error(ErrorKind::Parse,
                  "polynomial \"" + std::string(text) + "\": " + why);
    };
    if (s.empty()) {
      return fail("empty");
    }
    auto digits = [&](std::size_t& pos) {
      std::size_t b = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      }
      return s.substr(b, pos - b);
    };
    std::vector<mpz_class> c;
    std::size_t            pos = 0;
    while (pos < s.size()) {
      bool neg = false;
      if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
      } else if (pos != 0) {
        return fail("expected '+' or '-' at position " + std::to_string(pos));
      }
      auto      num = digits(pos);
      mpz_class coef(num.empty() ? "1" : num);
      if (!num.empty() && pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos == s.size() || s[pos] != var) {
          return fail("expected variable after '*'");
        }
      }
      std::size_t power = 0;
      if (pos < s.size() && s[pos] == var) {
        ++pos;
        power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          auto e = digits(pos);
          if (e.empty() || e.size() > 6) {
            return fail("bad exponent");
          }
          power = std::stoul(e);
        }
      } else if (num.empty()) {
        return fail("expected a term at position " + std::to_string(pos));
      }
      if (c.size() <= power) {
        c.resize(power + 1, 0);
      }
      c[power] += neg ? -coef : coef;
    }
    return IntPoly(std::move(c));
  }

  IntPoly poly_mul(IntPoly const& a, IntPoly const& b) {
    return a * b;
  }

  std::optional<IntPoly> poly_exact_div(IntPoly const& a, IntPoly const& b) {
    if (b.is_zero()) {
      throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
    }
    if (a.is_zero()) {
      return IntPoly();
    }
    if (a.degree() < b.degree()) {
      return std::nullopt;
    }
    auto                   r = a.coeffs();
    auto const&            d = b.coeffs();
    std::size_t            n = d.size() - 1;
    std::vector<mpz_class> q(r.size() - n, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
      mpz_class const& top = r[i + n];
      if (top == 0) {
        continue;
      }
      if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) {
        return std::nullopt;
      }
      q[i] = top / d.back();
      for (std::size_t j = 0; j <= n; ++j) {
        r[i + j] -= q[i] * d[j];
      }
    }
    for (auto const& x : r) {
      if (x != 0) {
        return std::nullopt;
      }
    }
    return IntPoly(std::move(q));
  }

  std::size_t euler_phi(std::size_t m) {
    std::size_t result = m;
    for (std::size_t p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        while (m % p == 0) {
          m /= p;
        }
        result -= result / p;
      }
    }
    if (m > 1) {
      result -= result / m;
    }
    return result;
  }

  IntPoly const& cyclotomic_polynomial(std::size_t m) {
    if (m == 0) {
      throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be >= 1");
    }
    static std::mutex                     mutex;
    static std::map<std::size_t, IntPoly> cache;
    {
      std::lock_guard lock(mutex);
      if (auto it = cache.find(m); it != cache.end()) {
        return it->second;
      }
    }
    IntPoly phi = IntPoly::monomial(1, m) - IntPoly::constant(1);
    for (std::size_t d = 1; d < m; ++d) {
      if (m % d == 0) {
        phi = *poly_exact_div(phi, cyclotomic_polynomial(d));
      }
    }
    std::lock_guard lock(mutex);
    return cache.emplace(m, std::move(phi)).first->second;
  }

  mpz_class resultant(IntPoly const& f, IntPoly const& g) {
    if (f.is_zero() || g.is_zero()) {
      return 0;
    }
    auto m = static_cast<std::size_t>(f.degree());
    auto n = static_cast<std::size_t>(g.degree());
    if (m == 0 && n == 0) {
      return 1;
    }
    std::size_t                         N = m + n;
    std::vector<std::vector<mpz_class>> a(N, std::vector<mpz_class>(N, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j <= m; ++j) {
        a[i][i + j] = f.coeff(m - j);
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        a[n + i][i + j] = g.coeff(n - j);
      }
    }
    // Bareiss fraction-free elimination
    int       sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < N; ++k) {
      if (a[k][k] == 0) {
        std::size_t r = k + 1;
        while (r < N && a[r][k] == 0) {
          ++r;
        }
        if (r == N) {
          return 0;
        }
        std::swap(a[k], a[r]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < N; ++i) {
        for (std::size_t j = k + 1; j < N; ++j) {
          a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
        a[i][k] = 0;
      }
      prev = a[k][k];
    }
    return sign * a[N - 1][N - 1];
  }

  mpz_class discriminant(IntPoly const& f) {
    if (f.degree() < 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "discriminant needs a polynomial of positive degree");
    }
    auto      n = static_cast<unsigned long>(f.degree());
    mpz_class r = resultant(f, f.derivative()) / f.leading();
    return (n * (n - 1) / 2) % 2 == 0 ? r : mpz_class(-r);
  }

  ////////////////////////////////////////////////////////////////////////
  // FpPoly
  ////////////////////////////////////////////////////////////////////////

  bool is_prime(std::uint64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
      : _p(p), _c(std::move(coeffs)) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
      throw Error(ErrorKind::InvalidArgument,
                  std::to_string(p) + " is not a supported prime");
    }
    for (auto& x : _c) {
      x %= p;
    }
    normalize();
  }

  FpPoly FpPoly::from_int(std::uint64_t p, IntPoly const& f) {
    std::vector<std::uint64_t> c;
    mpz_class                  mp(static_cast<unsigned long>(p));
    for (auto const& x : f.coeffs()) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mp.get_mpz_t());
      c.push_back(r.get_ui());
    }
    return FpPoly(p, std::move(c));
  }

  void FpPoly::normalize() {
    while (!_c.empty() && _c.back() == 0) {
      _c.pop_back();
    }
  }

  FpPoly FpPoly::operator+(FpPoly const& b) const {
    std::vector<std::uint64_t> r(std::max(_c.size(), b._c.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t x = i < _c.size() ? _c[i] : 0;
      std::uint64_t y = i < b._c.size() ? b._c[i] : 0;
      r[i]            = (x + y) % _p;
    }
    FpPoly out = *this;
    out._c     = std::move(r);
    out.normalize();
    return out;
  }

  FpPoly FpPoly::operator-(FpPoly const& b) const {
    FpPoly neg = b;
    for (auto& x : neg._c) {
      x = (_p - x) % _p;
    }
    return *this + neg;
  }

  FpPoly FpPoly::operator*(FpPoly const& b) const {
    FpPoly out = *this;
    out._c.clear();
    if (_c.empty() || b._c.empty()) {
      return out;
    }
    out._c.assign(_c.size() + b._c.size() - 1, 0);
    for (std::size_t i = 0; i < _c.size(); ++i) {
      for (std::size_t j = 0; j < b._c.size(); ++j) {
        out._c[i + j] = (out._c[i + j] + _c[i] * b._c[j]) % _p;
      }
    }
    out.normalize();
    return out;
  }

  FpPoly FpPoly::derivative() const {
    FpPoly out = *this;
    out._c.clear();
    for (std::size_t i = 1; i < _c.size(); ++i) {
      out._c.push_back(_c[i] * (i % _p) % _p);
    }
    out.normalize();
    return out;
  }

  namespace {
    std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
      // Fermat
      std::uint64_t result = 1, base = a % p, e = p - 2;
      while (e) {
        if (e & 1) {
          result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
      }
      return result;
    }
  }  // namespace

  FpPoly FpPoly::monic() const {
    if (_c.empty()) {
      return *this;
    }
    FpPoly        out = *this;
    std::uint64_t inv = inverse_mod(_c.back(), _p);
    for (auto& x : out._c) {
      x = x * inv % _p;
    }
    return out;
  }

  std::pair<FpPoly, FpPoly> FpPoly::divmod(FpPoly const& b) const {
    if (b._c.empty()) {
      throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
    }
    FpPoly q = *this;
    FpPoly r = *this;
    q._c.clear();
    if (_c.size() < b._c.size()) {
      return {q, r};
    }
    std::size_t   n   = b._c.size() - 1;
    std::uint64_t inv = inverse_mod(b._c.back(), _p);
    q._c.assign(_c.size() - n, 0);
    for (std::size_t i = q._c.size(); i-- > 0;) {
      std::uint64_t t = r._c[i + n] * inv % _p;
      q._c[i]         = t;
      if (t == 0) {
        continue;
      }
      for (std::size_t j = 0; j <= n; ++j) {
        r._c[i + j] = (r._c[i + j] + (_p - t) * b._c[j]) % _p;
      }
    }
    q.normalize();
    r.normalize();
    return {q, r};
  }

  FpPoly FpPoly::powmod(mpz_class const& e, FpPoly const& m) const {
    FpPoly result(_p, {1});
    result      = result % m;
    FpPoly base = *this % m;
    auto   bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = (result * result) % m;
      if (mpz_tstbit(e.get_mpz_t(), i)) {
        result = (result * base) % m;
      }
    }
    return result;
  }

  std::string FpPoly::to_string(char var) const {
    std::vector<mpz_class> c;
    for (auto x : _c) {
      c.emplace_back(static_cast<unsigned long>(x));
    }
    return IntPoly(std::move(c)).to_string(var) + " mod " + std::to_string(_p);
  }

  FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
      auto r = a % b;
      a      = std::move(b);
      b      = std::move(r);
    }
    return a.monic();
  }

  Ddf ddf(FpPoly const& f) {
    if (!f.is_monic() || f.degree() < 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "distinct-degree factorization needs a monic polynomial of "
                  "positive degree");
    }
    auto df = f.derivative();
    if (df.is_zero() || gcd(f, df).degree() > 0) {
      throw Error(ErrorKind::NotSquarefree,
                  f.to_string() + " is not squarefree");
    }
    auto   p = f.prime();
    Ddf    out;
    FpPoly rest = f;
    FpPoly x(p, {0, 1});
    FpPoly h = x % rest;
    for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(rest.degree()); ++d) {
      h      = h.powmod(mpz_class(static_cast<unsigned long>(p)), rest);
      auto g = gcd(rest, h - x);
      if (g.degree() > 0) {
        out.stages.push_back({d, g});
        rest = rest.divmod(g).first;
        h    = h % rest;
      }
    }
    if (rest.degree() > 0) {
      out.stages.push_back({static_cast<std::size_t>(rest.degree()), rest});
    }
    for (auto const& s : out.stages) {
      out.counts[s.degree] += s.count();
    }
    return out;
  }

}  // namespace artindiv
