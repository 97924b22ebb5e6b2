#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>

#include "artindiv/cyclo.hpp"
#include "artindiv/local_factor.hpp"
#include "artindiv/poly.hpp"

using namespace artindiv;

namespace {
  IntPoly P(std::string_view s) {
    return parse_int_poly(s);
  }

  LocalFactor LF(std::string_view s) {
    return parse_local_factor(s);
  }

  // Factor degrees of f over F_p by repeatedly splitting off a divisor of
  // least degree (which is necessarily irreducible), found by trial over all
  // monic polynomials. Returns nullopt if some irreducible factor repeats.
  std::optional<std::map<std::size_t, std::size_t>> exhaustive_degrees(FpPoly f) {
    auto const p = f.prime();
    std::map<std::size_t, std::size_t> out;
    std::vector<FpPoly>                found;
    while (f.degree() > 0) {
      bool split = false;
      for (long d = 1; 2 * d <= f.degree() && !split; ++d) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
        c.back() = 1;
        // odometer over the d lower coefficients
        while (true) {
          FpPoly g(p, c);
          if ((f % g).is_zero()) {
            found.push_back(g);
            out[static_cast<std::size_t>(d)]++;
            f     = f.divmod(g).first;
            split = true;
            break;
          }
          std::size_t i = 0;
          while (i < static_cast<std::size_t>(d) && ++c[i] == p) {
            c[i++] = 0;
          }
          if (i == static_cast<std::size_t>(d)) {
            break;
          }
        }
      }
      if (!split) {
        found.push_back(f);
        out[static_cast<std::size_t>(f.degree())]++;
        break;
      }
    }
    std::sort(found.begin(), found.end(), [](FpPoly const& a, FpPoly const& b) {
      return a.coeffs() < b.coeffs();
    });
    if (std::adjacent_find(found.begin(), found.end()) != found.end()) {
      return std::nullopt;
    }
    return out;
  }

  RootOfUnity random_root(std::mt19937& rng, std::size_t M) {
    std::size_t m = 1 + rng() % M;
    while (M % m != 0) {
      m = 1 + rng() % M;
    }
    return RootOfUnity(m, static_cast<long long>(rng() % m));
  }

  LocalFactor random_factor(std::mt19937& rng, std::size_t M, std::size_t max_degree) {
    std::vector<FactorTerm> terms;
    std::size_t             deg = rng() % (max_degree + 1);
    while (deg > 0) {
      std::size_t k = 1 + rng() % std::min<std::size_t>(deg, 4);
      terms.push_back({k, random_root(rng, M)});
      deg -= k;
    }
    return LocalFactor(std::move(terms));
  }
}  // namespace

TEST_CASE("integer polynomial text", "[poly]") {
  auto f = P("1 - T^2 + 3T^5");
  REQUIRE(f.coeffs().size() == 6);
  REQUIRE(f.coeff(2) == -1);
  REQUIRE(f.to_string() == "1 - T^2 + 3T^5");
  REQUIRE(parse_int_poly("x^3-2", 'x').to_string('x') == "-2 + x^3");
  REQUIRE(parse_int_poly("-x + 3*x^2 + x", 'x').to_string('x') == "3x^2");
  REQUIRE(IntPoly().to_string() == "0");
  REQUIRE(P("0").is_zero());
  REQUIRE_THROWS_AS(P("1 +"), Error);
  REQUIRE_THROWS_AS(P("T^"), Error);
  REQUIRE_THROWS_AS(P("y"), Error);

  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    std::vector<mpz_class> c(rng() % 8);
    for (auto& x : c) {
      x = static_cast<long>(rng() % 21) - 10;
    }
    IntPoly g(c);
    REQUIRE(P(g.to_string()) == g);
  }
}

TEST_CASE("exact division", "[poly]") {
  REQUIRE(*poly_exact_div(P("1 - T^4"), P("1 - T^2")) == P("1 + T^2"));
  auto a = P("1 - T") * P("1 - T^3");
  auto b = P("1 - T") * P("1 - T");
  REQUIRE(*poly_exact_div(a, b) == P("1 + T + T^2"));

  IntPoly lhs = IntPoly::constant(1), rhs = IntPoly::constant(1);
  for (int i = 0; i < 4; ++i) {
    lhs = lhs * P("1 - T");
  }
  for (int i = 0; i < 6; ++i) {
    lhs = lhs * P("1 - T^2");
  }
  for (int i = 0; i < 8; ++i) {
    rhs = rhs * P("1 - T^4");
  }
  REQUIRE_FALSE(poly_exact_div(rhs, lhs));
  REQUIRE_FALSE(poly_exact_div(P("1 + T"), P("2")));
  try {
    poly_exact_div(P("1 + T"), IntPoly());
    FAIL("expected DivisionByZero");
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::DivisionByZero);
  }

  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    std::vector<mpz_class> x(1 + rng() % 6), y(1 + rng() % 4);
    for (auto& c : x) {
      c = static_cast<long>(rng() % 11) - 5;
    }
    for (auto& c : y) {
      c = static_cast<long>(rng() % 11) - 5;
    }
    IntPoly q(x), d(y);
    if (d.is_zero()) {
      continue;
    }
    REQUIRE(*poly_exact_div(q * d, d) == q);
  }
}

TEST_CASE("cyclotomic polynomials", "[poly]") {
  REQUIRE(cyclotomic_polynomial(1) == P("-1 + T"));
  REQUIRE(cyclotomic_polynomial(4) == P("1 + T^2"));
  REQUIRE(cyclotomic_polynomial(6) == P("1 - T + T^2"));
  for (std::size_t m = 1; m <= 60; ++m) {
    IntPoly prod = IntPoly::constant(1);
    for (std::size_t d = 1; d <= m; ++d) {
      if (m % d == 0) {
        prod = prod * cyclotomic_polynomial(d);
      }
    }
    REQUIRE(prod == IntPoly::monomial(1, m) - IntPoly::constant(1));
    REQUIRE(cyclotomic_polynomial(m).degree() == static_cast<long>(euler_phi(m)));
    REQUIRE(cyclotomic_polynomial(m).is_monic());
  }
}

TEST_CASE("resultants and discriminants", "[poly]") {
  REQUIRE(discriminant(parse_int_poly("x^2+1", 'x')) == -4);
  REQUIRE(discriminant(parse_int_poly("x^3-2", 'x')) == -108);
  REQUIRE(discriminant(parse_int_poly("x^4+1", 'x')) == 256);
  REQUIRE(discriminant(parse_int_poly("x", 'x')) == 1);
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    long b = static_cast<long>(rng() % 41) - 20, c = static_cast<long>(rng() % 41) - 20;
    IntPoly q({c, b, 1});
    REQUIRE(discriminant(q) == b * b - 4 * c);
    IntPoly cubic({c, b, 0, 1});
    REQUIRE(discriminant(cubic) == -4 * b * b * b - 27 * c * c);
  }
  // res(f, g) = prod over roots of f of g(root), with f = (x-1)(x-2)
  REQUIRE(resultant(parse_int_poly("x^2-3x+2", 'x'), parse_int_poly("x+5", 'x')) == 42);
}

TEST_CASE("distinct-degree factorization examples", "[poly]") {
  auto counts = [](std::string_view f, std::uint64_t p) {
    return ddf(FpPoly::from_int(p, parse_int_poly(f, 'x'))).counts;
  };
  REQUIRE(counts("x^3-2", 5) == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}});
  REQUIRE(counts("x^2+1", 5) == std::map<std::size_t, std::size_t>{{1, 2}});
  REQUIRE(counts("x^3-2", 7) == std::map<std::size_t, std::size_t>{{3, 1}});
  try {
    counts("x^2+1", 2);
    FAIL("expected NotSquarefree");
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::NotSquarefree);
  }
  REQUIRE_THROWS_AS(ddf(FpPoly(5, {1, 2})), Error);  // not monic
}

TEST_CASE("ddf agrees with exhaustive factorization", "[poly][property]") {
  std::mt19937                     rng(1234);
  std::vector<std::uint64_t> const primes = {2, 3, 5, 7, 11, 13};
  int                              squarefree = 0;
  for (int trial = 0; trial < 600; ++trial) {
    auto                       p   = primes[rng() % primes.size()];
    std::size_t                deg = 1 + rng() % 6;
    std::vector<std::uint64_t> c(deg + 1);
    for (auto& x : c) {
      x = rng() % p;
    }
    c.back() = 1;
    FpPoly f(p, c);
    auto   oracle = exhaustive_degrees(f);
    if (!oracle) {
      REQUIRE_THROWS_AS(ddf(f), Error);
      continue;
    }
    ++squarefree;
    auto        r = ddf(f);
    REQUIRE(r.counts == *oracle);
    std::size_t total = 0;
    FpPoly      prod(p, {1});
    for (auto const& s : r.stages) {
      total += s.degree * s.count();
      prod = prod * s.product;
    }
    REQUIRE(total == deg);
    REQUIRE(prod == f);
  }
  REQUIRE(squarefree > 300);
}

TEST_CASE("roots of unity", "[cyclo]") {
  RootOfUnity w(6, 4);
  REQUIRE(w == RootOfUnity(3, 2));
  REQUIRE(w.to_string() == "z3^2");
  REQUIRE(RootOfUnity(4, 8).is_one());
  REQUIRE(RootOfUnity(2, 1).to_string() == "z2");
  REQUIRE(parse_root_of_unity("z3^-1") == RootOfUnity(3, 2));
  REQUIRE(parse_root_of_unity("z12^3") == RootOfUnity(4, 1));
  REQUIRE((RootOfUnity(3, 1) * RootOfUnity(2, 1)) == RootOfUnity(6, 5));
  REQUIRE(RootOfUnity(5, 2).inverse() == RootOfUnity(5, 3));
  REQUIRE(RootOfUnity(5, 2).pow(-2) == RootOfUnity(5, 1));
  REQUIRE(RootOfUnity(3, 1).exponent_in(12) == 4);
  REQUIRE_THROWS_AS(RootOfUnity(3, 1).exponent_in(4), Error);
  REQUIRE_THROWS_AS(parse_root_of_unity("z0"), Error);
  REQUIRE_THROWS_AS(parse_root_of_unity("w3"), Error);
}

TEST_CASE("cyclotomic field arithmetic", "[cyclo][property]") {
  for (std::size_t m = 1; m <= 30; ++m) {
    auto z = CycloElem::root(RootOfUnity(m, 1), m);
    auto p = CycloElem::rational(1, m);
    for (std::size_t i = 0; i < m; ++i) {
      p = p * z;
    }
    REQUIRE(p == CycloElem::rational(1));
    // Phi_m(zeta_m) = 0
    auto        v   = CycloElem::zero(m);
    auto const& phi = cyclotomic_polynomial(m).coeffs();
    auto        pw  = CycloElem::rational(1, m);
    for (auto const& c : phi) {
      v  = v + pw.scaled(mpq_class(c));
      pw = pw * z;
    }
    REQUIRE(v.is_zero());
    // sum of all m-th roots vanishes for m > 1
    auto s = CycloElem::zero(m);
    for (std::size_t i = 0; i < m; ++i) {
      s = s + CycloElem::root(RootOfUnity(m, static_cast<long long>(i)), m);
    }
    REQUIRE(s == CycloElem::rational(m == 1 ? 1 : 0));
    REQUIRE((z * z.conj()) == CycloElem::rational(1));
  }

  std::mt19937 rng(99);
  auto         random_elem = [&](std::size_t m) {
    std::vector<mpq_class> c(m);
    for (auto& x : c) {
      x = mpq_class(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
    }
    return CycloElem::from_exponents(m, c);
  };
  for (int i = 0; i < 300; ++i) {
    std::size_t ma = 1 + rng() % 12, mb = 1 + rng() % 12, mc = 1 + rng() % 12;
    auto        a = random_elem(ma), b = random_elem(mb), c = random_elem(mc);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    REQUIRE(a.conj().conj() == a);
    REQUIRE((a * b).conj() == a.conj() * b.conj());
  }
  REQUIRE(CycloElem::root(RootOfUnity(2, 1)) == CycloElem::rational(-1));
  REQUIRE(CycloElem::rational(mpq_class(1, 2)).to_string() == "1/2");
  REQUIRE_FALSE(CycloElem::rational(mpq_class(1, 2)).is_integral());
  REQUIRE(CycloElem::root(RootOfUnity(5, 3)).is_integral());
  REQUIRE_FALSE(CycloElem::root(RootOfUnity(5, 3)).is_rational());
}

TEST_CASE("local factor text", "[local_factor]") {
  auto a = LF("(1 - z3^2 T^4)^2 (1 - T)");
  REQUIRE(a.degree() == 9);
  REQUIRE(a.terms().size() == 3);
  REQUIRE(a.to_string() == "(1 - T) (1 - z3^2 T^4)^2");
  REQUIRE(LF(a.to_string()) == a);
  REQUIRE(LF("1") == LocalFactor());
  REQUIRE(LocalFactor().to_string() == "1");
  REQUIRE(LF("(1+T)") == LF("(1 - z2 T)"));
  REQUIRE(LF("(1-T)^4(1-T^2)^6").to_string() == "(1 - T)^4 (1 - T^2)^6");
  REQUIRE_THROWS_AS(LF("(1 - T"), Error);
  REQUIRE_THROWS_AS(LF("1 - T"), Error);
  REQUIRE_THROWS_AS(LF("(1 - q T)"), Error);

  std::mt19937 rng(8);
  for (int i = 0; i < 300; ++i) {
    auto f = random_factor(rng, 24, 12);
    REQUIRE(LF(f.to_string()) == f);
  }
}

TEST_CASE("local factor divisibility examples", "[local_factor]") {
  for (std::size_t k = 1; k <= 12; ++k) {
    REQUIRE(localfactor_divides(LF("(1 - T)"), LocalFactor({{k, RootOfUnity()}})));
  }
  REQUIRE(localfactor_divides(LF("(1 - T)^2"), LF("(1 - T^2)^2")));
  auto a = LF("(1 - T)^4 (1 - T^2)^6");
  auto b = LF("(1 - T^4)^8");
  REQUIRE_FALSE(localfactor_divides(a, b));
  auto ra = a.roots();
  auto rb = b.roots();
  REQUIRE(std::count(ra.begin(), ra.end(), RootOfUnity()) == 10);
  REQUIRE(std::count(rb.begin(), rb.end(), RootOfUnity()) == 8);
  REQUIRE(localfactor_divides(LF("(1 - T^2)"), LF("(1 - T)(1 + T)")));
  REQUIRE_FALSE(localfactor_divides(LF("(1 - T^2)"), LF("(1 - T)^2")));
  REQUIRE(LF("(1 - T^2)").same_polynomial(LF("(1 - T)(1 + T)")));
  REQUIRE_FALSE(LF("(1 - T^2)") == LF("(1 - T)(1 + T)"));
}

TEST_CASE("local factor expansion examples", "[local_factor]") {
  auto cube = LF("(1 - z3 T)(1 - z3^2 T)(1 - T)").expand();
  REQUIRE(cube == LF("(1 - T^3)").expand());
  REQUIRE(cube.coeffs().size() == 4);
  REQUIRE(cube.coeff(3) == CycloElem::rational(-1));
  REQUIRE(cube.coeff(1).is_zero());
  auto sq = LF("(1 - T^2)").expand();
  REQUIRE(sq.degree() == 2);
  REQUIRE(sq.coeff(0) == CycloElem::rational(1));
  REQUIRE(sq.coeff(2) == CycloElem::rational(-1));
  auto tw = LF("(1 - z3 T^2)").expand();
  REQUIRE(tw.coeff(2) == -CycloElem::root(RootOfUnity(3, 1)));
  REQUIRE(tw.coeff(1).is_zero());
}

TEST_CASE("divisibility agrees with expanded division", "[local_factor][property]") {
  std::mt19937 rng(20261016);
  int          agree = 0, positives = 0;
  for (int trial = 0; trial < 600; ++trial) {
    std::size_t M = 1 + rng() % 24;
    auto        a = random_factor(rng, M, 6);
    LocalFactor b;
    if (rng() % 2) {
      b = a * random_factor(rng, M, 12 - a.degree());
    } else {
      b = random_factor(rng, M, 12);
    }
    bool by_roots = localfactor_divides(a, b);
    bool by_division = exact_div(b.expand(), a.expand()).has_value();
    REQUIRE(by_roots == by_division);
    positives += by_roots;
    ++agree;
  }
  REQUIRE(agree >= 500);
  REQUIRE(positives >= 100);
  REQUIRE(positives <= 550);
}

TEST_CASE("root multiset round trip", "[local_factor][property]") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    auto a     = random_factor(rng, 1 + rng() % 24, 12);
    auto roots = a.roots();
    REQUIRE(roots.size() == a.degree());
    auto b = from_roots(roots);
    REQUIRE(b.expand() == a.expand());
    REQUIRE(b.roots() == roots);
    REQUIRE(a.expand().coeff(0) == CycloElem::rational(1));
    // each root r of (k, w) satisfies r^k = w^-1
    for (auto const& t : a.terms()) {
      LocalFactor single({t});
      for (auto const& r : single.roots()) {
        REQUIRE(r.pow(static_cast<long long>(t.k)) == t.w.inverse());
      }
    }
  }
}
