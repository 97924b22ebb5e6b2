#ifndef ARTINDIV_GROUP_IO_HPP_
#define ARTINDIV_GROUP_IO_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "artindiv/permutation.hpp"

namespace artindiv {

  // Line-oriented group description:
  //
  //   # comment
  //   degree: 4
  //   perm: (1 2)
  //   perm: (1 2 3 4)
  //
  // Points are 1-based in cycle notation. emit_group_file writes the
  // canonical form, which parse_group_file reads back exactly.
  struct GroupFile {
    std::size_t              degree = 0;
    std::vector<Permutation> generators;

    friend bool operator==(GroupFile const&, GroupFile const&) = default;
  };

  GroupFile   parse_group_file(std::string_view text);
  std::string emit_group_file(GroupFile const& file);

  // Splits "key: value" lines, dropping comments and blank lines. Shared by
  // the group, presentation and character file readers.
  struct KeyValueLine {
    std::size_t line_number;
    std::string key;
    std::string value;
  };
  std::vector<KeyValueLine> split_key_value_lines(std::string_view text);

  std::string read_text_file(std::string const& path);

}  // namespace artindiv

#endif  // ARTINDIV_GROUP_IO_HPP_
