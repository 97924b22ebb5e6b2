#ifndef ARTINDIV_TESTS_ORACLES_HPP_
#define ARTINDIV_TESTS_ORACLES_HPP_

// Brute-force reference computations shared by the tests and the acceptance
// binary. Deliberately naive: no code from the library's finite field layer.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

  // Polynomials over F_p as coefficient vectors, constant term first, with no
  // trailing zeros.
  using Poly = std::vector<std::int64_t>;

  inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) {
      f.pop_back();
    }
  }

  inline std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
    for (std::int64_t x = 1; x < p; ++x) {
      if (a * x % p == 1) {
        return x;
      }
    }
    return 0;
  }

  // Remainder of f by g; sets `quotient` when requested.
  inline Poly divmod(Poly f, Poly const& g, std::int64_t p, Poly* quotient = nullptr) {
    Poly q(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, 0);
    auto lead = inverse_mod(g.back(), p);
    while (f.size() >= g.size()) {
      auto c     = f.back() * lead % p;
      auto shift = f.size() - g.size();
      q[shift]   = c;
      for (std::size_t i = 0; i < g.size(); ++i) {
        f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
      }
      trim(f);
    }
    if (quotient) {
      trim(q);
      *quotient = q;
    }
    return f;
  }

  // All monic polynomials of degree d over F_p, in counting order.
  inline std::vector<Poly> monic_polys(std::size_t d, std::int64_t p) {
    std::vector<Poly> out;
    Poly              f(d + 1, 0);
    f[d] = 1;
    while (true) {
      out.push_back(f);
      std::size_t i = 0;
      while (i < d && ++f[i] == p) {
        f[i++] = 0;
      }
      if (i == d) {
        break;
      }
    }
    return out;
  }

  // Degrees of the irreducible factors of f mod p (f monic, reduced mod p),
  // found by trial division by every monic polynomial of increasing degree:
  // the first divisor of each degree found is necessarily irreducible, since
  // its factors of lower degree were already removed. Sorted ascending.
  inline std::vector<std::size_t> factor_degrees(Poly f, std::int64_t p) {
    for (auto& c : f) {
      c = ((c % p) + p) % p;
    }
    trim(f);
    std::vector<std::size_t> out;
    for (std::size_t d = 1; f.size() > 1 && 2 * d <= f.size() - 1; ++d) {
      for (auto const& g : monic_polys(d, p)) {
        Poly q;
        while (f.size() > g.size() - 1 && divmod(f, g, p, &q).empty()) {
          out.push_back(d);
          f = q;
        }
      }
    }
    if (f.size() > 1) {
      out.push_back(f.size() - 1);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace oracle

#endif  // ARTINDIV_TESTS_ORACLES_HPP_
