#ifndef ARTINDIV_VERIFY_HPP_
#define ARTINDIV_VERIFY_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "artindiv/artin.hpp"
#include "artindiv/parallel.hpp"

namespace artindiv {

  // One row per conjugacy class (or per scenario item). Factors are stored
  // in their text form so that a table read back from JSON can be audited
  // without the group.
  struct EvidenceRow {
    std::string                label;
    std::string                rep;
    std::optional<std::size_t> count_h;
    std::optional<std::size_t> count_h2;
    std::string                factor_h;
    std::string                factor_h2;
    bool                       divides = false;
    std::string                note;

    friend bool operator==(EvidenceRow const&, EvidenceRow const&) = default;
  };

  struct Check {
    std::string name;
    bool        passed = false;

    friend bool operator==(Check const&, Check const&) = default;
  };

  struct EvidenceTable {
    std::string                 scenario;
    std::string                 column_h;   // label of the first subgroup
    std::string                 column_h2;  // label of the second subgroup
    std::vector<EvidenceRow>    rows;
    std::map<std::string, bool> verdicts;
    // Asserted facts; the scenario succeeds iff all of them pass.
    std::vector<Check>       checks;
    std::vector<std::string> notes;

    bool passed() const;
    // Recomputes every row's divisibility from its factor strings, and the
    // verdicts "property_2", "property_3" and "divides_all" (when present)
    // from the rows.
    bool audit() const;
    std::string to_text() const;

    friend bool operator==(EvidenceTable const&, EvidenceTable const&) = default;
  };

  inline constexpr int json_schema_version = 1;

  nlohmann::json to_json(EvidenceTable const& t);
  // Throws Parse on a malformed document or an unknown schema version.
  EvidenceTable evidence_from_json(nlohmann::json const& j);
  nlohmann::json to_json(std::vector<EvidenceTable> const& tables);
  std::vector<EvidenceTable> evidence_list_from_json(nlohmann::json const& j);

  // The order-128 presentation (same relators as data/g128.pres).
  extern char const* const group128_presentation;

  // The three worked comparisons: (S4, A4, S3), (S4, S3, <(1 2)(3 4)>) and
  // the order-128 group with its two subgroups.
  std::vector<EvidenceTable> reproduce_s3_tables();

  // For H' <= H <= G and chi on H: the factor of chi divides the factor of
  // Res chi at every class.
  EvidenceTable iota_divisibility_check(FinGroup const&          G,
                                        FinGroup const&          H,
                                        FinGroup const&          H2,
                                        SubgroupCharacter const& chi,
                                        std::string              scenario = "iota");

  // When a | b, pairs each term of a with a distinct term of b whose roots
  // contain the first root of the a-term (a bipartite matching). Returns the
  // index into b.terms() for every term of a, or nothing.
  std::optional<std::vector<std::size_t>> match_primes(LocalFactor const& a,
                                                       LocalFactor const& b);
  std::optional<std::vector<std::size_t>> match_primes(std::vector<LocalFactor> const& a,
                                                       std::vector<LocalFactor> const& b,
                                                       std::size_t                     cls);

  // G = S_l, H = <(1 2 ... l)>, chi_N faithful on H. Per class: a coset xH
  // with <g> and xHx^-1 meeting trivially, and (1 - T) | the chi_N factor.
  // Throws WitnessNotFound if some class has no such coset.
  EvidenceTable section5_kernel(std::size_t l);

  // S_l x C_l with H x C_l, chi the projection to C_l and
  // psi = Res(chi) * chi_N.
  EvidenceTable counterexample_small_l(std::size_t l);

  // Gamma = C_l^n semidirect G on l*n points, (i, c) -> (g(i), c + a_g(i)),
  // point (i, c) numbered i*l + c.
  struct GammaModel {
    std::size_t                   n = 0;
    std::size_t                   l = 0;
    FinGroup                      base;
    FinGroup                      gamma;
    FinGroup                      delta;  // stabilizer of block 0
    std::optional<SubgroupCharacter> chi;  // chi~(a, h) = zeta_l^(a_0)
    std::vector<Permutation>      alphas;  // alpha_i shifts block i
    CosetTable                    cosets;  // of delta
    std::vector<std::size_t>      coset_block;  // block labelling each coset
  };

  // Throws InvalidArgument unless l is an odd prime, n >= 2 and base is a
  // transitive group of degree n; CapExceeded when l^n |G| exceeds the
  // closure cap.
  GammaModel build_gamma(std::size_t n, std::size_t l, FinGroup const& base);
  EvidenceTable lemma_alpha_checks(GammaModel const& M);
  // Every subgroup class H'' of Gamma and every linear character chi' of
  // H'' whose factor table divides the one of chi~ at every class.
  EvidenceTable bruteforce_theorem(GammaModel const& M, unsigned jobs = 1);

  // Base group by name: "S<n>", "A<n>", "C<n>" or "D<n>" (dihedral of
  // degree n).
  FinGroup named_group(std::string const& name);

}  // namespace artindiv

#endif  // ARTINDIV_VERIFY_HPP_
