#ifndef ARTINDIV_CLI_HPP_
#define ARTINDIV_CLI_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "artindiv/fingroup.hpp"
#include "artindiv/subgroups.hpp"

namespace artindiv {

  // Exit codes of the command-line tool.
  enum ExitCode : int {
    exit_ok    = 0,  // success, or every asserted verdict holds
    exit_false = 1,  // some asserted verdict fails
    exit_usage = 2,  // bad arguments or unreadable input
    exit_cap   = 3,  // a size cap was exceeded
  };

  // Required / forbidden values of properties 1..4; empty slots are free.
  struct PropertyPattern {
    std::array<std::optional<bool>, 4> want;

    bool empty() const noexcept;
    bool matches(std::array<bool, 4> const& props) const noexcept;
    // "p1", "p2", ... as accepted on the command line; throws Parse.
    static std::size_t property_index(std::string const& name);
  };

  struct EquivPair {
    std::size_t         h;   // subgroup class index of H
    std::size_t         h2;  // subgroup class index of H'
    std::array<bool, 4> props;
  };

  // Ordered pairs (H, H') of distinct subgroup class representatives of G
  // with |H| >= |H'| whose properties match the pattern, ordered by
  // (h, h2). Pairs with |H| < |H'| are skipped: there all four properties
  // fail for degree reasons. Work is spread over `jobs` threads; the result
  // does not depend on it.
  std::vector<EquivPair> equiv_search(FinGroup const&        G,
                                      PropertyPattern const& pattern,
                                      unsigned               jobs = 1);
  std::vector<EquivPair> equiv_search(FinGroup const&        G,
                                      SubgroupLattice const& lattice,
                                      PropertyPattern const& pattern,
                                      unsigned               jobs = 1);

  // Runs the tool on the arguments after the program name.
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace artindiv

#endif  // ARTINDIV_CLI_HPP_
