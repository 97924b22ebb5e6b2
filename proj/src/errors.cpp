#include "artindiv/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace artindiv {

  std::string_view kind_name(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::CapExceeded: return "CapExceeded";
      case ErrorKind::DegreeMismatch: return "DegreeMismatch";
      case ErrorKind::NotASubgroup: return "NotASubgroup";
      case ErrorKind::NotNormal: return "NotNormal";
      case ErrorKind::NotAbelian: return "NotAbelian";
      case ErrorKind::DivisionByZero: return "DivisionByZero";
      case ErrorKind::NotSquarefree: return "NotSquarefree";
      case ErrorKind::InconsistentCharacter: return "InconsistentCharacter";
      case ErrorKind::GroupMismatch: return "GroupMismatch";
      case ErrorKind::WitnessNotFound: return "WitnessNotFound";
      case ErrorKind::Parse: return "Parse";
      case ErrorKind::InvalidArgument: return "InvalidArgument";
      case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
  }

  std::string Error::reason() const {
    std::string msg(what());
    for (char& c : msg) {
      if (c == '\n') {
        c = ' ';
      }
    }
    return std::string(kind_name(_kind)) + ": " + msg;
  }

  Caps Caps::parse(std::string_view spec) {
    return parse(spec, Caps{});
  }

  Caps Caps::parse(std::string_view spec, Caps base) {
    std::string       s(spec);
    std::stringstream ss(s);
    std::string       item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) {
        continue;
      }
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorKind::Parse, "cap entry without '=': " + item);
      }
      std::string key = item.substr(0, eq);
      std::size_t value;
      try {
        value = std::stoull(item.substr(eq + 1));
      } catch (std::exception const&) {
        throw Error(ErrorKind::Parse, "bad cap value: " + item);
      }
      if (value == 0) {
        throw Error(ErrorKind::InvalidArgument, "caps must be positive: " + item);
      }
      if (key == "closure") {
        base.closure = value;
      } else if (key == "lattice") {
        base.lattice = value;
      } else if (key == "cosets") {
        base.cosets = value;
      } else {
        throw Error(ErrorKind::Parse, "unknown cap: " + key);
      }
    }
    return base;
  }

  Caps Caps::from_env() {
    char const* env = std::getenv("ARTINDIV_CAPS");
    if (env == nullptr) {
      return Caps{};
    }
    return parse(env);
  }

}  // namespace artindiv
