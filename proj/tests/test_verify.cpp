#include <catch_amalgamated.hpp>

#include <algorithm>

#include "artindiv/group_io.hpp"
#include "artindiv/fpgroup.hpp"
#include "artindiv/verify.hpp"

using namespace artindiv;

namespace {
  EvidenceRow const& row_labelled(EvidenceTable const& t, std::string const& label) {
    auto it = std::find_if(t.rows.begin(), t.rows.end(),
                           [&](auto const& r) { return r.label == label; });
    REQUIRE(it != t.rows.end());
    return *it;
  }

  void require_round_trip(EvidenceTable const& t) {
    auto text = to_json(t).dump(2);
    REQUIRE(evidence_from_json(nlohmann::json::parse(text)) == t);
  }
}  // namespace

TEST_CASE("embedded presentation matches the data file", "[verify]") {
  auto file = Presentation::parse(read_text_file(ARTINDIV_DATA_DIR "/g128.pres"));
  auto code = Presentation::parse(group128_presentation);
  REQUIRE(file.generators() == code.generators());
  REQUIRE(file.relators() == code.relators());
}

TEST_CASE("worked comparisons", "[verify]") {
  auto tables = reproduce_s3_tables();
  REQUIRE(tables.size() == 3);
  for (auto const& t : tables) {
    INFO(t.to_text());
    REQUIRE(t.passed());
    REQUIRE(t.audit());
    require_round_trip(t);
  }

  auto const& t1 = tables[0];
  REQUIRE(row_labelled(t1, "e").factor_h == "(1 - T)^2");
  REQUIRE(row_labelled(t1, "e").factor_h2 == "(1 - T)^4");
  REQUIRE(row_labelled(t1, "(...)").factor_h2 == "(1 - T) (1 - T^3)");
  REQUIRE(row_labelled(t1, "(..)(..)").factor_h2 == "(1 - T^2)^2");
  REQUIRE(t1.verdicts.at("property_3"));
  REQUIRE_FALSE(t1.verdicts.at("property_4"));
  REQUIRE(std::any_of(t1.notes.begin(), t1.notes.end(), [](auto const& n) {
    return n.find("other way round") != std::string::npos;
  }));

  auto const& t2 = tables[1];
  REQUIRE(t2.verdicts.at("property_4"));
  REQUIRE_FALSE(t2.verdicts.at("property_2"));
  REQUIRE(std::find(t2.notes.begin(), t2.notes.end(),
                    "<1_C2, Res chi_standard> = (1/2)(1*3 + 1*(-1)) = 1")
          != t2.notes.end());
  REQUIRE(std::find(t2.notes.begin(), t2.notes.end(),
                    "<1_S3, Res chi_standard> = (1/6)(1*3 + 3*1 + 2*0) = 1")
          != t2.notes.end());

  auto const& t3 = tables[2];
  REQUIRE(t3.rows.front().label == "(1)^G");
  REQUIRE(t3.rows.front().count_h == 1u);
  REQUIRE(t3.rows.front().factor_h == "(1 - T)^16");
  REQUIRE(t3.rows.front().factor_h2 == "(1 - T)^32");
  REQUIRE(row_labelled(t3, "(b^2)^G").count_h2 == 0u);
  REQUIRE(row_labelled(t3, "(b^2)^G").factor_h2 == "(1 - T^2)^16");
  REQUIRE_FALSE(row_labelled(t3, "(a^2 b^3 c^3 d)^G").divides);
  REQUIRE(t3.verdicts.at("property_2"));
  REQUIRE_FALSE(t3.verdicts.at("property_3"));

  // a tampered row fails the audit
  auto bad            = t1;
  bad.rows[0].divides = false;
  REQUIRE_FALSE(bad.audit());
  auto bad2                    = t3;
  bad2.verdicts["property_3"] = true;
  REQUIRE_FALSE(bad2.audit());
}

TEST_CASE("evidence JSON", "[verify]") {
  EvidenceTable t;
  t.scenario  = "x";
  t.column_h  = "H";
  t.column_h2 = "K";
  t.rows.push_back({"e", "()", 1, std::nullopt, "(1 - T)", "(1 - T)^2", true, ""});
  t.verdicts["divides_all"] = true;
  t.checks.push_back({"c", true});
  t.notes.push_back("n");
  require_round_trip(t);
  auto list = to_json(std::vector<EvidenceTable>{t, t});
  REQUIRE(list.at("schema") == 1);
  REQUIRE(evidence_list_from_json(list).size() == 2);
  auto j      = to_json(t);
  j["schema"] = 2;
  REQUIRE_THROWS_AS(evidence_from_json(j), Error);
  REQUIRE_THROWS_AS(evidence_from_json(nlohmann::json::object()), Error);
}

TEST_CASE("restriction divisibility", "[verify]") {
  auto G  = symmetric_group(4);
  auto A4 = subgroup(G, {Permutation::from_cycles(4, {{0, 1, 2}}),
                         Permutation::from_cycles(4, {{0, 1, 3}})});
  auto V4 = subgroup(G, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  auto t  = iota_divisibility_check(G, A4, V4, SubgroupCharacter::trivial(G, A4));
  REQUIRE(t.passed());
  REQUIRE(t.rows.size() == 5);
  REQUIRE(t.audit());

  // H' = H gives equal factors
  for (auto const& chi : linear_characters(G, A4)) {
    auto same = iota_divisibility_check(G, A4, A4, chi);
    for (auto const& r : same.rows) {
      REQUIRE(r.factor_h == r.factor_h2);
    }
  }
  // nontrivial characters of A4 restricted to V4 and to C3
  auto C3 = subgroup(G, {Permutation::from_cycles(4, {{0, 1, 2}})});
  for (auto const& chi : linear_characters(G, A4)) {
    REQUIRE(iota_divisibility_check(G, A4, V4, chi).passed());
    REQUIRE(iota_divisibility_check(G, A4, C3, chi).passed());
  }

  auto M      = build_gamma(2, 3, symmetric_group(2));
  auto kernel = subgroup_where(M.gamma, [](Permutation const& x) {
    return x[0] < 3 && x[3] >= 3;
  });
  REQUIRE(kernel.order() == 9);
  REQUIRE(iota_divisibility_check(M.gamma, M.delta, kernel, *M.chi).passed());

  REQUIRE_THROWS_AS(iota_divisibility_check(G, V4, A4, SubgroupCharacter::trivial(G, V4)),
                    Error);
}

TEST_CASE("prime matching", "[verify]") {
  auto a = parse_local_factor("(1 - T)^2 (1 - T^2)");
  auto m = match_primes(a, a);
  REQUIRE(m == std::vector<std::size_t>{0, 1, 2});

  auto b = parse_local_factor("(1 - T^2) (1 - z3 T)");
  auto p = match_primes(parse_local_factor("(1 - T)"), b);
  REQUIRE(p.has_value());
  REQUIRE(b.terms()[(*p)[0]].k == 2);

  REQUIRE_FALSE(match_primes(parse_local_factor("(1 - T^2)"), parse_local_factor("(1 - T)^2")));
  // divisible, but both roots 1 would have to share the single T^2 orbit
  REQUIRE(localfactor_divides(parse_local_factor("(1 - T)(1 + T)"),
                              parse_local_factor("(1 - T^2)")));
  REQUIRE_FALSE(match_primes(parse_local_factor("(1 - T)(1 + T)"),
                             parse_local_factor("(1 - T^2)")));
}

TEST_CASE("kernel witnesses for small l", "[verify]") {
  auto t5 = section5_kernel(5);
  REQUIRE(t5.rows.size() == 7);
  REQUIRE(t5.passed());
  REQUIRE(t5.audit());
  REQUIRE(row_labelled(t5, "e").factor_h2 == "(1 - T)^24");
  require_round_trip(t5);

  auto t7 = section5_kernel(7);
  REQUIRE(t7.rows.size() == 15);
  REQUIRE(t7.passed());

  REQUIRE_THROWS_AS(section5_kernel(4), Error);
  REQUIRE_THROWS_AS(section5_kernel(3), Error);
}

TEST_CASE("small-l counterexample", "[verify]") {
  auto t = counterexample_small_l(5);
  REQUIRE(t.rows.size() == 35);
  REQUIRE(t.passed());
  REQUIRE(t.audit());
  for (auto const& r : t.rows) {
    REQUIRE(parse_local_factor(r.factor_h2).degree() == 24);
  }
}

TEST_CASE("Gamma model", "[verify]") {
  auto M = build_gamma(2, 3, symmetric_group(2));
  REQUIRE(M.gamma.order() == 18);
  REQUIRE(M.cosets.index() == 2);
  auto t = lemma_alpha_checks(M);
  INFO(t.to_text());
  REQUIRE(t.passed());
  REQUIRE(t.rows[0].note == "diag(z3, 1)");
  REQUIRE(t.rows[1].note == "diag(1, z3)");

  auto M3 = build_gamma(3, 3, symmetric_group(3));
  REQUIRE(M3.gamma.order() == 162);
  REQUIRE(lemma_alpha_checks(M3).passed());

  auto M5 = build_gamma(3, 5, cyclic_group(3));
  REQUIRE(M5.gamma.order() == 375);
  REQUIRE(lemma_alpha_checks(M5).passed());

  REQUIRE(named_group("D4").order() == 8);
  REQUIRE(named_group("A4").order() == 12);
  REQUIRE_THROWS_AS(named_group("X3"), Error);
  REQUIRE_THROWS_AS(build_gamma(3, 4, symmetric_group(3)), Error);
  REQUIRE_THROWS_AS(build_gamma(3, 3, symmetric_group(4)), Error);
  // not transitive
  REQUIRE_THROWS_AS(build_gamma(3, 3, subgroup(symmetric_group(3),
                                               {Permutation::from_cycles(3, {{0, 1}})})),
                    Error);
}

TEST_CASE("single L-series brute force", "[verify]") {
  auto M = build_gamma(2, 3, symmetric_group(2));
  auto t = bruteforce_theorem(M);
  INFO(t.to_text());
  REQUIRE(t.passed());
  REQUIRE_FALSE(t.rows.empty());
  // independent of the number of worker threads
  REQUIRE(bruteforce_theorem(M, 3) == t);

  auto M3 = build_gamma(3, 3, symmetric_group(3));
  auto t3 = bruteforce_theorem(M3);
  INFO(t3.to_text());
  REQUIRE(t3.passed());
}
