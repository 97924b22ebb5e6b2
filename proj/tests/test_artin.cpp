#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>

#include "artindiv/artin.hpp"
#include "artindiv/fpgroup.hpp"
#include "artindiv/group_io.hpp"

using namespace artindiv;

namespace {
  Permutation cyc(std::size_t n, std::vector<std::vector<Permutation::point_type>> c) {
    return Permutation::from_cycles(n, c);
  }

  FinGroup S4() {
    return symmetric_group(4);
  }
  FinGroup A4() {
    return FinGroup::generated_by(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1, 3}})});
  }
  // stabilizer of the point 3
  FinGroup S3in4() {
    return FinGroup::generated_by(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2}})});
  }
  FinGroup D4() {
    return FinGroup::generated_by(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})});
  }
  FinGroup Q8() {
    // right regular representation on {±1, ±i, ±j, ±k}
    auto i = Permutation({2, 3, 1, 0, 7, 6, 4, 5});
    auto j = Permutation({4, 5, 6, 7, 1, 0, 3, 2});
    return FinGroup::generated_by(8, {i, j});
  }

  FinGroup gl32() {
    auto file = parse_group_file(read_text_file(ARTINDIV_DATA_DIR "/gl32.group"));
    return FinGroup::generated_by(file.degree, file.generators);
  }

  RegularRepresentation const& group128() {
    static RegularRepresentation rr(
        Presentation::parse(read_text_file(ARTINDIV_DATA_DIR "/g128.pres")), 100'000);
    return rr;
  }

  std::size_t class_with_cycle_type(FinGroup const& G, std::vector<std::size_t> type) {
    auto const& cls = G.classes();
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (cls[i].representative.cycle_type() == type) {
        return i;
      }
    }
    FAIL("no class with the requested cycle type");
    return 0;
  }

  CycloElem q(long n, long d = 1) {
    return CycloElem::rational(mpq_class(n, d));
  }

  // the standard character of S4: fixed points minus one
  ClassFunction standard_character(FinGroup const& G) {
    std::vector<CycloElem> v;
    for (auto const& c : G.classes()) {
      std::size_t fixed = 0;
      for (std::size_t x = 0; x < G.degree(); ++x) {
        fixed += c.representative[x] == x;
      }
      v.push_back(q(static_cast<long>(fixed) - 1));
    }
    return ClassFunction(G, std::move(v));
  }

  Permutation random_element(FinGroup const& G, std::mt19937& rng) {
    return G.element(rng() % G.order());
  }

  FinGroup random_subgroup(FinGroup const& G, std::mt19937& rng) {
    std::vector<Permutation> gens;
    for (std::size_t i = 0, n = rng() % 3; i < n; ++i) {
      gens.push_back(random_element(G, rng));
    }
    return subgroup(G, gens);
  }
}  // namespace

TEST_CASE("induced local factor examples", "[artin]") {
  auto G  = S4();
  auto t  = cyc(4, {{0, 1}});
  auto c3 = cyc(4, {{0, 1, 2}});
  auto v  = cyc(4, {{0, 1}, {2, 3}});
  auto c4 = cyc(4, {{0, 1, 2, 3}});
  auto e  = Permutation::identity(4);

  auto one_G = SubgroupCharacter::trivial(G, G);
  for (auto const& g : {e, t, c3, v, c4}) {
    REQUIRE(induced_local_factor(G, G, one_G, g).to_string() == "(1 - T)");
  }

  auto A        = A4();
  auto one_A    = SubgroupCharacter::trivial(G, A);
  auto factor_A = [&](Permutation const& g) {
    return induced_local_factor(G, A, one_A, g).to_string();
  };
  CHECK(factor_A(e) == "(1 - T)^2");
  CHECK(factor_A(t) == "(1 - T^2)");
  CHECK(factor_A(c3) == "(1 - T)^2");
  CHECK(factor_A(v) == "(1 - T)^2");
  CHECK(factor_A(c4) == "(1 - T^2)");

  auto S        = S3in4();
  auto one_S    = SubgroupCharacter::trivial(G, S);
  auto factor_S = [&](Permutation const& g) {
    return induced_local_factor(G, S, one_S, g).to_string();
  };
  CHECK(factor_S(e) == "(1 - T)^4");
  CHECK(factor_S(t) == "(1 - T)^2 (1 - T^2)");
  CHECK(factor_S(c3) == "(1 - T) (1 - T^3)");
  CHECK(factor_S(v) == "(1 - T^2)^2");
  CHECK(factor_S(c4) == "(1 - T^4)");

  // C4 over its subgroup of order 2 with the sign character:
  // Ind = (zeta_4) + (zeta_4^3), so the generator has factor 1 + T^2
  auto C4  = cyclic_group(4);
  auto g   = C4.generators().front();
  auto C2  = subgroup(C4, {g * g});
  auto chi = SubgroupCharacter::from_generators(C4, C2, {{g * g, RootOfUnity(2, 1)}});
  auto f   = induced_local_factor(C4, C2, chi, g);
  CHECK(f.to_string() == "(1 - z2 T^2)");
  CHECK(f.same_polynomial(parse_local_factor("(1 - z4 T)(1 - z4^3 T)")));
}

TEST_CASE("subgroup characters", "[artin]") {
  auto C4 = cyclic_group(4);
  auto g  = C4.generators().front();
  auto chi = SubgroupCharacter::from_generators(C4, C4, {{g, RootOfUnity(4, 1)}});
  REQUIRE(chi.modulus() == 4);
  REQUIRE(chi.value(g * g) == RootOfUnity(2, 1));
  REQUIRE_THROWS_AS(SubgroupCharacter::from_generators(C4, C4, {{g, RootOfUnity(3, 1)}}),
                    Error);
  try {
    SubgroupCharacter::from_generators(C4, C4, {{g, RootOfUnity(3, 1)}});
  } catch (Error const& err) {
    REQUIRE(err.kind() == ErrorKind::InconsistentCharacter);
  }

  auto G = S4();
  REQUIRE(linear_characters(G, G).size() == 2);
  REQUIRE(linear_characters(G, A4()).size() == 3);
  REQUIRE(linear_characters(G, D4()).size() == 4);
  REQUIRE(linear_characters(G, G).front().is_trivial());
  auto C12 = cyclic_group(12);
  auto all = linear_characters(C12, C12);
  REQUIRE(all.size() == 12);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      REQUIRE_FALSE(all[i].equals(all[j]));
    }
  }
}

TEST_CASE("induced matrices", "[artin]") {
  auto G   = S4();
  auto S   = S3in4();
  auto one = SubgroupCharacter::trivial(G, S);
  auto I   = induced_matrix(G, S, one, Permutation::identity(4));
  REQUIRE(I == MonomialMatrix::identity(4));
  REQUIRE(monomial_charpoly(I).to_string() == "(1 - T)^4");

  // matrices multiply like the group elements
  auto ct = coset_table(G, S);
  auto A4g = A4();
  auto chi = linear_characters(G, A4g)[1];
  auto ctA = coset_table(G, A4g);
  for (auto const& a : G.elements()) {
    for (auto const& b : G.elements()) {
      REQUIRE(induced_matrix(G, ct, one, a) * induced_matrix(G, ct, one, b)
              == induced_matrix(G, ct, one, a * b));
      REQUIRE(induced_matrix(G, ctA, chi, a) * induced_matrix(G, ctA, chi, b)
              == induced_matrix(G, ctA, chi, a * b));
    }
  }
}

TEST_CASE("induced characters", "[artin]") {
  auto G   = S4();
  auto ind = induced_character(G, S3in4(), SubgroupCharacter::trivial(G, S3in4()));
  CHECK(ind[class_with_cycle_type(G, {1, 1, 1, 1})] == q(4));
  CHECK(ind[class_with_cycle_type(G, {2, 1, 1})] == q(2));
  CHECK(ind[class_with_cycle_type(G, {3, 1})] == q(1));
  CHECK(ind[class_with_cycle_type(G, {2, 2})] == q(0));
  CHECK(ind[class_with_cycle_type(G, {4})] == q(0));
  REQUIRE(ind.equals(permutation_character(G, S3in4())));

  auto whole = induced_character(G, G, SubgroupCharacter::trivial(G, G));
  for (auto const& v : whole.values()) {
    REQUIRE(v == q(1));
  }

  // trace consistency, with nontrivial characters
  for (auto const& H : {A4(), D4(), S3in4()}) {
    auto ct = coset_table(G, H);
    for (auto const& chi : linear_characters(G, H)) {
      auto f = induced_character(G, H, chi);
      for (auto const& g : G.elements()) {
        REQUIRE(f.at(g) == induced_matrix(G, ct, chi, g).trace());
      }
    }
  }
}

TEST_CASE("inner products", "[artin]") {
  auto G   = S4();
  auto one = trivial_character(G);
  REQUIRE(inner_product(one, one) == q(1));

  auto std_chi = standard_character(G);
  REQUIRE(inner_product(std_chi, std_chi) == q(1));

  auto S = S3in4();
  REQUIRE(inner_product(permutation_character(G, S), std_chi) == q(1));
  // the same number computed on S: (1/6)(1*3 + 3*1 + 2*0)
  REQUIRE(inner_product(trivial_character(S), restriction(std_chi, S)) == q(1));

  auto C2 = subgroup(G, {cyc(4, {{0, 1}, {2, 3}})});
  REQUIRE(inner_product(permutation_character(G, C2), std_chi) == q(1));
  // (1/2)(1*3 + 1*(-1))
  REQUIRE(inner_product(trivial_character(C2), restriction(std_chi, C2)) == q(1));

  REQUIRE_THROWS_AS(inner_product(one, trivial_character(A4())), Error);
}

TEST_CASE("character tables", "[artin]") {
  auto c2 = character_table(cyclic_group(2));
  REQUIRE(c2.size() == 2);
  REQUIRE(c2[0].values() == std::vector<CycloElem>{q(1), q(1)});
  REQUIRE(c2[1].values() == std::vector<CycloElem>{q(1), q(-1)});

  auto degrees = [](std::vector<ClassFunction> const& t) {
    std::vector<std::string> d;
    for (auto const& row : t) {
      d.push_back(row.degree().to_string());
    }
    return d;
  };
  REQUIRE(degrees(character_table(S4())) == std::vector<std::string>{"1", "1", "2", "3", "3"});
  REQUIRE(degrees(character_table(Q8())) == std::vector<std::string>{"1", "1", "1", "1", "2"});
  REQUIRE(degrees(character_table(alternating_group(5)))
          == std::vector<std::string>{"1", "3", "3", "4", "5"});

  auto G   = S4();
  auto tab = character_table(G);
  // the standard character and the sign are in the table
  REQUIRE(std::any_of(tab.begin(), tab.end(),
                      [&](auto const& r) { return r.equals(standard_character(G)); }));
  // the permutation character on the points is 1 + standard
  auto dec = decompose(permutation_character(G, S3in4()), tab);
  REQUIRE(std::count(dec.begin(), dec.end(), mpq_class(1)) == 2);
  REQUIRE(std::count(dec.begin(), dec.end(), mpq_class(0)) == 3);
}

TEST_CASE("character table orthogonality", "[artin][property]") {
  std::vector<FinGroup> groups{cyclic_group(2),       cyclic_group(7),
                               symmetric_group(3),    S4(),
                               D4(),                  Q8(),
                               alternating_group(4),  alternating_group(5),
                               direct_product(symmetric_group(3), cyclic_group(5)),
                               gl32(),                group128().group()};
  for (auto const& G : groups) {
    auto        tab = character_table(G);
    auto const& cls = G.classes();
    REQUIRE(tab.size() == cls.size());
    REQUIRE(tab.front().equals(trivial_character(G)));
    std::size_t squares = 0;
    for (std::size_t i = 0; i < tab.size(); ++i) {
      for (auto const& v : tab[i].values()) {
        REQUIRE(v.is_integral());
        REQUIRE(G.exponent() % v.modulus() == 0);
      }
      auto d = tab[i].degree().rational_value();
      REQUIRE(d.get_den() == 1);
      REQUIRE(G.order() % d.get_num().get_ui() == 0);
      squares += d.get_num().get_ui() * d.get_num().get_ui();
      for (std::size_t j = 0; j < tab.size(); ++j) {
        REQUIRE(inner_product(tab[i], tab[j]) == q(i == j ? 1 : 0));
      }
    }
    REQUIRE(squares == G.order());
    // columns: sum_chi chi(x_a) conj(chi(x_b)) = delta_ab |C_G(x_a)|
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (std::size_t b = 0; b < cls.size(); ++b) {
        CycloElem s;
        for (auto const& row : tab) {
          s += row[a] * row[b].conj();
        }
        long expected = a == b ? static_cast<long>(G.order() / cls[a].size()) : 0;
        REQUIRE(s == q(expected));
      }
    }
    // the regular character decomposes with multiplicities equal to degrees
    auto reg = decompose(permutation_character(G, subgroup(G, {})), tab);
    for (std::size_t i = 0; i < tab.size(); ++i) {
      REQUIRE(CycloElem::rational(reg[i]) == tab[i].degree());
    }
  }
}

TEST_CASE("is_subrep examples", "[artin]") {
  auto G  = S4();
  auto S  = S3in4();
  auto A  = A4();
  auto C2 = subgroup(G, {cyc(4, {{0, 1}, {2, 3}})});
  REQUIRE(is_subrep(G, S, S));
  REQUIRE(is_subrep(G, S, C2));
  REQUIRE_FALSE(is_subrep(G, A, S));
  REQUIRE_FALSE(is_subrep(G, S, A));
  REQUIRE(is_subrep(G, G, S));
  REQUIRE(is_subrep(G, S, subgroup(G, {})));
}

TEST_CASE("property comparisons", "[artin]") {
  auto G = S4();
  auto r = compare_properties(G, A4(), S3in4());
  REQUIRE(r.p3);
  REQUIRE(r.p1 == r.p3);
  REQUIRE_FALSE(r.p2);
  REQUIRE(r.p4.has_value());
  REQUIRE_FALSE(*r.p4);
  REQUIRE(r.p2_witness == class_with_cycle_type(G, {2, 1, 1}));
  REQUIRE(property_3(G, A4(), S3in4()));
  REQUIRE_FALSE(property_4(G, A4(), S3in4()));
  REQUIRE_FALSE(property_2(G, A4(), S3in4()));

  // H' <= H
  auto V = subgroup(G, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  REQUIRE(property_2(G, A4(), V));
  REQUIRE(property_3(G, A4(), V));
  REQUIRE(property_2(G, S3in4(), subgroup(G, {cyc(4, {{0, 1}})})));

  auto no_p4 = compare_properties(G, A4(), S3in4(), false);
  REQUIRE_FALSE(no_p4.p4.has_value());
}

TEST_CASE("order-128 counterexample", "[artin]") {
  auto const& rr = group128();
  auto const& G  = rr.group();
  auto H  = rr.subgroup({"b^-2", "a c^2", "a d^-1 c^-1"});
  auto H2 = rr.subgroup({"a c^2", "a^-1 d c^-1 a"});
  auto r  = compare_properties(G, H, H2, true);
  REQUIRE(r.p2);
  REQUIRE_FALSE(r.p3);
  REQUIRE_FALSE(r.p1);
  REQUIRE_FALSE(*r.p4);
  REQUIRE(r.p3_witness.has_value());

  struct Row {
    char const* word;
    std::size_t count_h, count_h2;
    char const* factor_h;
    char const* factor_h2;
  };
  std::vector<Row> rows{
      {"1", 1, 1, "(1 - T)^16", "(1 - T)^32"},
      {"a c^2", 2, 1, "(1 - T)^4 (1 - T^2)^6", "(1 - T)^4 (1 - T^2)^14"},
      {"b^2", 1, 0, "(1 - T)^16", "(1 - T^2)^16"},
      {"b^3 c^3 d", 2, 2, "(1 - T)^4 (1 - T^2)^6", "(1 - T)^8 (1 - T^2)^12"},
      {"a^2 b^3 c^3 d", 2, 0, "(1 - T)^4 (1 - T^2)^6", "(1 - T^4)^8"},
  };
  std::vector<std::size_t> seen;
  for (auto const& row : rows) {
    auto cls = G.class_index(rr.evaluate(row.word));
    seen.push_back(cls);
    auto const& ev = r.rows[cls];
    CHECK(ev.count_h == row.count_h);
    CHECK(ev.count_h2 == row.count_h2);
    CHECK(ev.factor_h.to_string() == row.factor_h);
    CHECK(ev.factor_h2.to_string() == row.factor_h2);
  }
  std::sort(seen.begin(), seen.end());
  REQUIRE(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  REQUIRE(*r.p3_witness == G.class_index(rr.evaluate("a^2 b^3 c^3 d")));
}

TEST_CASE("Gassmann equivalence", "[artin]") {
  auto G = gl32();
  REQUIRE(G.order() == 168);
  REQUIRE(G.classes().size() == 6);
  auto point = subgroup_where(G, [](Permutation const& p) { return p[0] == 0; });
  // the line through the points 1, 2, 3
  auto line = subgroup_where(G, [](Permutation const& p) {
    return p[0] < 3 && p[1] < 3 && p[2] < 3;
  });
  REQUIRE(point.order() == 24);
  REQUIRE(line.order() == 24);
  REQUIRE(gassmann_equivalent(G, point, line));
  REQUIRE_FALSE(are_conjugate_subgroups(G, point, line).has_value());
  REQUIRE(permutation_character(G, point).equals(permutation_character(G, line)));
  auto r = compare_properties(G, point, line);
  REQUIRE((r.p1 && r.p2 && r.p3 && *r.p4));

  auto S4g = S4();
  REQUIRE_FALSE(gassmann_equivalent(S4g, A4(), S3in4()));
  auto g = cyc(4, {{0, 3}});
  auto conj = subgroup(S4g, {g * cyc(4, {{0, 1}}) * g, g * cyc(4, {{0, 1, 2}}) * g});
  REQUIRE(gassmann_equivalent(S4g, S3in4(), conj));
}

TEST_CASE("charpoly of induced matrix equals orbit formula", "[artin][property]") {
  std::vector<FinGroup> groups{symmetric_group(3),
                               S4(),
                               D4(),
                               Q8(),
                               direct_product(symmetric_group(3), cyclic_group(5)),
                               direct_product(cyclic_group(4), cyclic_group(6)),
                               alternating_group(5),
                               group128().group()};
  std::mt19937 rng(31337);
  std::size_t  nontrivial = 0;
  for (int trial = 0; trial < 600; ++trial) {
    auto const& G   = groups[rng() % groups.size()];
    auto        H   = random_subgroup(G, rng);
    auto        chs = linear_characters(G, H);
    auto const& chi = chs[rng() % chs.size()];
    nontrivial += !chi.is_trivial();
    auto ct = coset_table(G, H);
    auto g  = random_element(G, rng);

    auto f = induced_local_factor(G, ct, chi, g);
    REQUIRE(monomial_charpoly(induced_matrix(G, ct, chi, g)) == f);
    // degree bookkeeping
    REQUIRE(f.degree() == ct.index());

    // representatives h r with h in H
    std::vector<Permutation> reps;
    for (auto const& r : ct.representatives) {
      reps.push_back(random_element(H, rng) * r);
    }
    REQUIRE(induced_local_factor(G, ct, chi, g, reps) == f);

    // conjugate g: same class, same factor
    auto x = random_element(G, rng);
    REQUIRE(induced_local_factor(G, ct, chi, x.inverse() * g * x) == f);

    auto e = induced_local_factor(G, ct, chi, Permutation::identity(G.degree()));
    REQUIRE(e == LocalFactor(std::vector<FactorTerm>(ct.index(), FactorTerm{1, RootOfUnity()})));
  }
  REQUIRE(nontrivial > 100);
}

TEST_CASE("Frobenius reciprocity", "[artin][property]") {
  for (auto const& G : {symmetric_group(3), S4(), D4()}) {
    auto tab = character_table(G);
    auto lat = all_subgroups(G);
    for (auto const& H : lat.subgroups) {
      for (auto const& chi : linear_characters(G, H)) {
        auto ind = induced_character(G, H, chi);
        auto res = as_class_function(chi);
        for (auto const& psi : tab) {
          auto lhs = inner_product(ind, psi);
          REQUIRE(lhs.is_rational());
          REQUIRE(lhs == inner_product(res, restriction(psi, H)));
        }
      }
    }
  }
}

TEST_CASE("properties are invariant under conjugation", "[artin][property]") {
  std::mt19937 rng(4242);
  for (auto const& G : {S4(), D4(), direct_product(symmetric_group(3), cyclic_group(2))}) {
    auto tab = character_table(G);
    auto lat = all_subgroups(G);
    auto conjugate = [&](FinGroup const& H, Permutation const& x) {
      std::vector<Permutation> gens;
      for (auto const& h : H.generators()) {
        gens.push_back(x.inverse() * h * x);
      }
      return subgroup(G, gens);
    };
    for (int trial = 0; trial < 200; ++trial) {
      auto const& H  = lat.subgroups[rng() % lat.subgroups.size()];
      auto const& H2 = lat.subgroups[rng() % lat.subgroups.size()];
      auto        a  = compare_properties(G, H, H2, &tab);
      auto        b  = compare_properties(G, conjugate(H, random_element(G, rng)),
                                  conjugate(H2, random_element(G, rng)), &tab);
      REQUIRE(a.p1 == b.p1);
      REQUIRE(a.p2 == b.p2);
      REQUIRE(a.p3 == b.p3);
      REQUIRE(a.p4 == b.p4);
      // property 4 implies property 3, and property 3 implies equal counts at e
      if (*a.p4) {
        REQUIRE(a.p3);
      }
    }
  }
}

TEST_CASE("character file", "[artin]") {
  auto f = parse_character_file("# test\nmodulus: 4\nchi: a^2 b -> 1\nchi: (1 2)(3 4) -> 2\n");
  REQUIRE(f.modulus == 4);
  REQUIRE(f.images.size() == 2);
  REQUIRE(f.images[0] == std::pair<std::string, long long>{"a^2 b", 1});
  REQUIRE(f.images[1].first == "(1 2)(3 4)");
  REQUIRE_THROWS_AS(parse_character_file("chi: a -> 1\n"), Error);
  REQUIRE_THROWS_AS(parse_character_file("modulus: 3\nchi: a 1\n"), Error);
}
