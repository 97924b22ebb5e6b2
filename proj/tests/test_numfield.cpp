#include <catch_amalgamated.hpp>

#include <random>

#include "artindiv/artin.hpp"
#include "artindiv/numfield.hpp"
#include "oracles.hpp"

using namespace artindiv;

namespace {
  std::vector<std::size_t> degrees(char const* f, std::uint64_t p) {
    return splitting_type(NumberFieldSpec::parse(f), p).degrees;
  }
}  // namespace

TEST_CASE("number field construction", "[numfield]") {
  auto F = NumberFieldSpec::parse("x^3 - 2");
  REQUIRE(F.degree() == 3);
  REQUIRE(F.discriminant() == -108);
  REQUIRE(F.certificate().has_value());
  REQUIRE(*F.certificate() == 7);

  REQUIRE(NumberFieldSpec::parse("x").certificate().has_value());
  REQUIRE_THROWS_AS(NumberFieldSpec::parse("2x^2 + 1"), Error);
  REQUIRE_THROWS_AS(NumberFieldSpec::parse("x^2 - 1"), Error);  // reducible everywhere
  REQUIRE_THROWS_AS(NumberFieldSpec::parse("x^2 + 2x + 1"), Error);
  REQUIRE_THROWS_AS(NumberFieldSpec::parse("5"), Error);

  // x^4 + 1 is irreducible over Q but reducible modulo every prime
  REQUIRE_THROWS_AS(NumberFieldSpec::parse("x^4 + 1"), Error);
  auto C8 = NumberFieldSpec::parse("x^4 + 1", true);
  REQUIRE_FALSE(C8.certificate().has_value());
  REQUIRE(C8.discriminant() == 256);
}

TEST_CASE("splitting types", "[numfield]") {
  REQUIRE(degrees("x^3 - 2", 5) == std::vector<std::size_t>{1, 2});
  REQUIRE(degrees("x^3 - 2", 7) == std::vector<std::size_t>{3});
  REQUIRE(degrees("x^3 - 2", 31) == std::vector<std::size_t>{1, 1, 1});
  auto F = NumberFieldSpec::parse("x^2 + 1");
  REQUIRE(splitting_type(F, 2).is_excluded());
  REQUIRE(splitting_type(F, 2).excluded == "ramified-or-index");
  REQUIRE(splitting_type(NumberFieldSpec::parse("x^3 - 2"), 3).is_excluded());
  REQUIRE_THROWS_AS(splitting_type(F, 9), Error);

  REQUIRE(zeta_local_factor(NumberFieldSpec::parse("x"), 13)->to_string() == "(1 - T)");
  REQUIRE(zeta_local_factor(F, 5)->to_string() == "(1 - T)^2");
  REQUIRE(zeta_local_factor(F, 3)->to_string() == "(1 - T^2)");
  REQUIRE_FALSE(zeta_local_factor(F, 2).has_value());
}

TEST_CASE("splitting types agree with exhaustive search", "[numfield][oracle]") {
  auto cube = NumberFieldSpec::parse("x^3 - 2");
  REQUIRE(oracle::factor_degrees({-2, 0, 0, 1}, 5) == std::vector<std::size_t>{1, 2});
  REQUIRE(oracle::factor_degrees({-2, 0, 0, 1}, 7) == std::vector<std::size_t>{3});
  REQUIRE(oracle::factor_degrees({-2, 0, 0, 1}, 11) == std::vector<std::size_t>{1, 2});
  for (auto p : primes_up_to(200)) {
    if (p == 2 || p == 3) {
      continue;
    }
    INFO("p = " << p);
    REQUIRE(splitting_type(cube, p).degrees
            == oracle::factor_degrees({-2, 0, 0, 1}, static_cast<std::int64_t>(p)));
  }

  std::mt19937 rng(2718);
  auto         small = primes_up_to(13);
  int          compared = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t                n = 1 + rng() % 5;
    std::vector<mpz_class>     c(n + 1);
    oracle::Poly               f(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      long v = static_cast<long>(rng() % 21) - 10;
      c[i]   = v;
      f[i]   = v;
    }
    c[n] = 1;
    f[n] = 1;
    auto p = small[rng() % small.size()];
    try {
      auto F  = NumberFieldSpec(IntPoly(c), true);
      auto st = splitting_type(F, p);
      if (!st.is_excluded()) {
        REQUIRE(st.degrees == oracle::factor_degrees(f, static_cast<std::int64_t>(p)));
        ++compared;
      }
    } catch (Error const&) {
      // zero discriminant
    }
  }
  REQUIRE(compared >= 300);
}

TEST_CASE("splitting type invariants", "[numfield][property]") {
  std::mt19937 rng(777);
  auto         primes = primes_up_to(2000);
  int          checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t            n = 1 + rng() % 6;
    std::vector<mpz_class> c(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = static_cast<long>(rng() % 41) - 20;
    }
    c[n] = 1;
    IntPoly f(c);
    auto    p  = primes[rng() % primes.size()];
    auto    fp = FpPoly::from_int(p, f);
    if (gcd(fp, fp.derivative()).degree() > 0) {
      continue;
    }
    auto d = ddf(fp);
    // the stages multiply back to f mod p
    FpPoly prod(p, {1});
    std::size_t sum = 0;
    for (auto const& s : d.stages) {
      prod = prod * s.product;
      sum += s.degree * s.count();
    }
    REQUIRE(prod == fp);
    REQUIRE(sum == n);
    ++checked;
  }
  REQUIRE(checked > 400);
}

TEST_CASE("zeta divisibility", "[numfield]") {
  auto Q    = NumberFieldSpec::parse("x");
  auto Qi   = NumberFieldSpec::parse("x^2 + 1");
  auto Qs2  = NumberFieldSpec::parse("x^2 - 2");
  auto Qz8  = NumberFieldSpec::parse("x^4 + 1", true);
  auto cube = NumberFieldSpec::parse("x^3 - 2");

  for (auto const* F : {&Qi, &Qs2, &Qz8, &cube}) {
    auto r = zeta_divides(Q, *F, 300);
    REQUIRE(r.holds);
    REQUIRE_FALSE(r.witness.has_value());
  }

  auto fails = zeta_divides(Qs2, Qi, 100);
  REQUIRE_FALSE(fails.holds);
  REQUIRE(fails.witness == 5u);
  REQUIRE(fails.excluded == std::vector<std::uint64_t>{2});

  // Q(i), Q(sqrt 2) and Q(sqrt -2) lie inside Q(zeta_8)
  for (auto const* F : {&Qi, &Qs2}) {
    auto r = zeta_divides(*F, Qz8, 1000);
    REQUIRE(r.holds);
    REQUIRE(r.excluded == std::vector<std::uint64_t>{2});
    REQUIRE(r.tested == 167);
  }
  REQUIRE(zeta_divides(NumberFieldSpec::parse("x^2 + 2"), Qz8, 1000).holds);
  // but not the other way round
  REQUIRE_FALSE(zeta_divides(Qz8, Qi, 100).holds);
  REQUIRE_FALSE(zeta_divides(cube, Qi, 100).holds);
}

TEST_CASE("Q(i) agrees with the group model", "[numfield]") {
  // Gal(Q(i)/Q) = C2; Frobenius at an odd p is trivial iff p = 1 mod 4
  auto G     = cyclic_group(2);
  auto sigma = G.generators().front();
  auto one   = SubgroupCharacter::trivial(G, subgroup(G, {}));
  auto K     = NumberFieldSpec::parse("x^2 + 1");
  for (auto p : primes_up_to(499)) {
    if (p == 2) {
      REQUIRE(splitting_type(K, p).is_excluded());
      continue;
    }
    auto st = splitting_type(K, p);
    REQUIRE(st.degrees
            == (p % 4 == 1 ? std::vector<std::size_t>{1, 1} : std::vector<std::size_t>{2}));
    auto frob = p % 4 == 1 ? Permutation::identity(2) : sigma;
    REQUIRE(*zeta_local_factor(K, p) == induced_local_factor(G, subgroup(G, {}), one, frob));
  }
}
