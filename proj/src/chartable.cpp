// Character tables by simultaneous diagonalization of the class matrices
// over a prime field F_q with q = 1 mod exp(G) (Dixon's method), followed by
// an exact lift of each value to Z[zeta_exp(G)] from the multiplicities of
// its eigenvalues.

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "artindiv/artin.hpp"
#include "artindiv/poly.hpp"

namespace artindiv {

  namespace {
    using u64    = std::uint64_t;
    using Vec    = std::vector<u64>;
    using Matrix = std::vector<Vec>;

    u64 pow_mod(u64 b, u64 e, u64 q) {
      u64 r = 1;
      b %= q;
      while (e) {
        if (e & 1) {
          r = r * b % q;
        }
        b = b * b % q;
        e >>= 1;
      }
      return r;
    }

    u64 inv_mod(u64 a, u64 q) {
      return pow_mod(a, q - 2, q);
    }

    // Basis of {x : M x = 0} for an r x d matrix M.
    std::vector<Vec> nullspace(Matrix M, std::size_t d, u64 q) {
      std::size_t              rows = M.size();
      std::vector<std::size_t> pivot_col;
      std::size_t              row = 0;
      for (std::size_t col = 0; col < d && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && M[p][col] == 0) {
          ++p;
        }
        if (p == rows) {
          continue;
        }
        std::swap(M[p], M[row]);
        u64 inv = inv_mod(M[row][col], q);
        for (auto& x : M[row]) {
          x = x * inv % q;
        }
        for (std::size_t i = 0; i < rows; ++i) {
          if (i != row && M[i][col] != 0) {
            u64 f = M[i][col];
            for (std::size_t j = 0; j < d; ++j) {
              M[i][j] = (M[i][j] + (q - f) * M[row][j]) % q;
            }
          }
        }
        pivot_col.push_back(col);
        ++row;
      }
      std::vector<Vec> basis;
      std::vector<bool> is_pivot(d, false);
      for (auto c : pivot_col) {
        is_pivot[c] = true;
      }
      for (std::size_t free = 0; free < d; ++free) {
        if (is_pivot[free]) {
          continue;
        }
        Vec x(d, 0);
        x[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
          x[pivot_col[i]] = (q - M[i][free]) % q;
        }
        basis.push_back(std::move(x));
      }
      return basis;
    }

    std::vector<u64> prime_factors(u64 n) {
      std::vector<u64> out;
      for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
          out.push_back(p);
          while (n % p == 0) {
            n /= p;
          }
        }
      }
      if (n > 1) {
        out.push_back(n);
      }
      return out;
    }

    u64 primitive_root(u64 q) {
      auto factors = prime_factors(q - 1);
      for (u64 g = 2; g < q; ++g) {
        bool ok = true;
        for (auto p : factors) {
          if (pow_mod(g, (q - 1) / p, q) == 1) {
            ok = false;
            break;
          }
        }
        if (ok) {
          return g;
        }
      }
      return 1;  // q = 2
    }
  }  // namespace

  std::vector<ClassFunction> character_table(FinGroup const& G) {
    if (G.order() > Caps::from_env().lattice) {
      throw Error(ErrorKind::CapExceeded,
                  "character table requested for group of order " + std::to_string(G.order()));
    }
    auto const& T   = G.table();
    auto const& cls = G.classes();
    std::size_t r   = cls.size();
    u64         n   = G.order();
    u64         e   = G.exponent();

    u64 q = e + 1;
    while (!(is_prime(q) && q * q > 4 * n)) {
      q += e;
    }

    // A[j][k][l] = #{x in C_j : x^-1 z_l in C_k}, z_l the representative of C_l
    std::vector<Matrix> A(r, Matrix(r, Vec(r, 0)));
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t l = 0; l < r; ++l) {
        auto z = cls[l].representative_index;
        for (auto x : cls[j].members) {
          auto k = cls.class_of[T(T.inv[x], z)];
          A[j][k][l] += 1;
        }
      }
    }

    // split F_q^r into common eigenspaces of all A_j
    std::vector<std::vector<Vec>> spaces(1);
    for (std::size_t i = 0; i < r; ++i) {
      Vec v(r, 0);
      v[i] = 1;
      spaces[0].push_back(std::move(v));
    }
    for (std::size_t j = 1; j < r && spaces.size() < r; ++j) {
      std::vector<std::vector<Vec>> next;
      for (auto& W : spaces) {
        std::size_t d = W.size();
        if (d == 1) {
          next.push_back(std::move(W));
          continue;
        }
        std::vector<Vec> AW;
        for (auto const& w : W) {
          Vec y(r, 0);
          for (std::size_t k = 0; k < r; ++k) {
            u64 s = 0;
            for (std::size_t l = 0; l < r; ++l) {
              s = (s + (A[j][k][l] % q) * w[l]) % q;
            }
            y[k] = s;
          }
          AW.push_back(std::move(y));
        }
        std::size_t found = 0;
        for (u64 lambda = 0; lambda < q && found < d; ++lambda) {
          Matrix M(r, Vec(d, 0));
          for (std::size_t k = 0; k < r; ++k) {
            for (std::size_t t = 0; t < d; ++t) {
              M[k][t] = (AW[t][k] + (q - lambda) * W[t][k]) % q;
            }
          }
          auto ns = nullspace(std::move(M), d, q);
          if (ns.empty()) {
            continue;
          }
          std::vector<Vec> sub;
          for (auto const& x : ns) {
            Vec v(r, 0);
            for (std::size_t t = 0; t < d; ++t) {
              for (std::size_t k = 0; k < r; ++k) {
                v[k] = (v[k] + x[t] * W[t][k]) % q;
              }
            }
            sub.push_back(std::move(v));
          }
          found += sub.size();
          next.push_back(std::move(sub));
        }
        if (found != d) {
          throw Error(ErrorKind::Internal, "class matrix is not diagonalizable over F_q");
        }
      }
      spaces = std::move(next);
    }
    if (spaces.size() != r) {
      throw Error(ErrorKind::Internal, "class matrices do not separate the characters");
    }

    std::vector<std::size_t> inverse_class(r);
    std::vector<std::size_t> rep_order(r);
    for (std::size_t i = 0; i < r; ++i) {
      inverse_class[i] = cls.class_of[T.inv[cls[i].representative_index]];
      rep_order[i]     = cls[i].representative.order();
    }
    // class of x^t for each class representative x and 0 <= t < ord(x)
    std::vector<std::vector<std::size_t>> power_class(r);
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t x = 0;
      for (std::size_t t = 0; t < rep_order[i]; ++t) {
        power_class[i].push_back(cls.class_of[x]);
        x = T(x, cls[i].representative_index);
      }
    }

    u64 z = pow_mod(primitive_root(q), (q - 1) / e, q);  // image of zeta_e

    struct Row {
      std::size_t            degree;
      bool                   trivial;
      std::vector<CycloElem> values;
    };
    std::vector<Row> rows;
    auto             max_degree = static_cast<u64>(std::sqrt(static_cast<double>(n))) + 1;
    for (auto const& W : spaces) {
      Vec omega = W[0];
      u64 inv0  = inv_mod(omega[0], q);
      for (auto& x : omega) {
        x = x * inv0 % q;
      }
      u64 s = 0;
      for (std::size_t i = 0; i < r; ++i) {
        s = (s + omega[i] * omega[inverse_class[i]] % q * inv_mod(cls[i].size() % q, q)) % q;
      }
      u64         target = (n % q) * inv_mod(s, q) % q;
      std::size_t degree = 0;
      for (u64 d = 1; d <= max_degree && d * d <= n; ++d) {
        if (d * d % q == target) {
          degree = d;
          break;
        }
      }
      if (degree == 0) {
        throw Error(ErrorKind::Internal, "no character degree matches the class constants");
      }
      Vec chi(r);
      for (std::size_t i = 0; i < r; ++i) {
        chi[i] = degree % q * omega[i] % q * inv_mod(cls[i].size() % q, q) % q;
      }
      Row row{degree, true, {}};
      for (std::size_t i = 0; i < r; ++i) {
        std::size_t            o    = rep_order[i];
        u64                    zo   = pow_mod(z, e / o, q);
        u64                    inv_o = inv_mod(o % q, q);
        std::vector<mpq_class> coeffs(e, 0);
        std::size_t            total = 0;
        for (std::size_t k = 0; k < o; ++k) {
          u64 m = 0;
          for (std::size_t t = 0; t < o; ++t) {
            // zeta_o^(-k t)
            u64 w = pow_mod(zo, (o - (k * t) % o) % o, q);
            m     = (m + chi[power_class[i][t]] * w) % q;
          }
          m = m * inv_o % q;
          if (m > degree) {
            throw Error(ErrorKind::Internal, "eigenvalue multiplicity out of range");
          }
          coeffs[k * (e / o)] = static_cast<unsigned long>(m);
          total += m;
        }
        if (total != degree) {
          throw Error(ErrorKind::Internal, "eigenvalue multiplicities do not sum to the degree");
        }
        row.values.push_back(CycloElem::from_exponents(e, coeffs));
        if (!(row.values.back() == CycloElem::rational(1))) {
          row.trivial = false;
        }
      }
      rows.push_back(std::move(row));
    }

    std::stable_sort(rows.begin(), rows.end(), [](Row const& a, Row const& b) {
      if (a.degree != b.degree) {
        return a.degree < b.degree;
      }
      return a.trivial && !b.trivial;
    });
    std::size_t squares = 0;
    std::vector<ClassFunction> table;
    for (auto& row : rows) {
      squares += row.degree * row.degree;
      table.emplace_back(G, std::move(row.values));
    }
    if (squares != n) {
      throw Error(ErrorKind::Internal, "character degrees do not satisfy sum of squares");
    }
    return table;
  }

}  // namespace artindiv
