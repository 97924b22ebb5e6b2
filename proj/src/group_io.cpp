#include "artindiv/group_io.hpp"

#include <fstream>
#include <sstream>

#include "artindiv/errors.hpp"

namespace artindiv {

  namespace {
    std::string trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return "";
      }
      auto e = s.find_last_not_of(" \t\r");
      return std::string(s.substr(b, e - b + 1));
    }
  }  // namespace

  std::vector<KeyValueLine> split_key_value_lines(std::string_view text) {
    std::vector<KeyValueLine> result;
    std::size_t               line_number = 0;
    std::size_t               pos         = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++line_number;
      std::string_view line = text.substr(pos, end - pos);
      pos                   = end + 1;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      auto t = trim(line);
      if (t.empty()) {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      auto colon = t.find(':');
      if (colon == std::string::npos) {
        throw Error(ErrorKind::Parse,
                    "line " + std::to_string(line_number)
                        + ": expected 'key: value'");
      }
      result.push_back(
          {line_number, trim(t.substr(0, colon)), trim(t.substr(colon + 1))});
      if (end == text.size()) {
        break;
      }
    }
    return result;
  }

  GroupFile parse_group_file(std::string_view text) {
    GroupFile                file;
    bool                     have_degree = false;
    std::vector<std::string> perms;
    std::vector<std::size_t> perm_lines;
    for (auto const& kv : split_key_value_lines(text)) {
      if (kv.key == "degree") {
        if (have_degree) {
          throw Error(ErrorKind::Parse, "duplicate degree line");
        }
        try {
          std::size_t used = 0;
          long long   d    = std::stoll(kv.value, &used);
          if (used != kv.value.size() || d < 1) {
            throw std::invalid_argument("degree");
          }
          file.degree = static_cast<std::size_t>(d);
        } catch (std::exception const&) {
          throw Error(ErrorKind::Parse,
                      "line " + std::to_string(kv.line_number)
                          + ": degree must be a positive integer");
        }
        have_degree = true;
      } else if (kv.key == "perm") {
        perms.push_back(kv.value);
        perm_lines.push_back(kv.line_number);
      } else {
        throw Error(ErrorKind::Parse,
                    "line " + std::to_string(kv.line_number)
                        + ": unknown key '" + kv.key + "'");
      }
    }
    if (!have_degree) {
      throw Error(ErrorKind::Parse, "missing 'degree:' line");
    }
    for (std::size_t i = 0; i < perms.size(); ++i) {
      try {
        file.generators.push_back(parse_cycles(perms[i], file.degree));
      } catch (Error const& e) {
        throw Error(ErrorKind::Parse,
                    "line " + std::to_string(perm_lines[i]) + ": " + e.what());
      }
    }
    return file;
  }

  std::string emit_group_file(GroupFile const& file) {
    std::ostringstream out;
    out << "degree: " << file.degree << '\n';
    for (auto const& g : file.generators) {
      out << "perm: " << g.to_string() << '\n';
    }
    return out.str();
  }

  std::string read_text_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::Parse, "cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

}  // namespace artindiv
