#ifndef ARTINDIV_ERRORS_HPP_
#define ARTINDIV_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace artindiv {

  enum class ErrorKind {
    CapExceeded,
    DegreeMismatch,
    NotASubgroup,
    NotNormal,
    NotAbelian,
    DivisionByZero,
    NotSquarefree,
    InconsistentCharacter,
    GroupMismatch,
    WitnessNotFound,
    Parse,
    InvalidArgument,
    Internal
  };

  std::string_view kind_name(ErrorKind kind) noexcept;

  // All library failures are reported through this one exception type; the
  // kind is what callers (and the CLI exit-code mapping) switch on.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

    // "<Kind>: <message>" on one line.
    std::string reason() const;

   private:
    ErrorKind _kind;
  };

  // Size limits for the desk-scale algorithms. Defaults may be overridden by
  // the ARTINDIV_CAPS environment variable, e.g.
  //   ARTINDIV_CAPS="closure=200000,lattice=3000,cosets=50000"
  struct Caps {
    std::size_t closure = 1'000'000;  // elements enumerated by closure
    std::size_t lattice = 2'000;      // group order for lattice / tables
    std::size_t cosets  = 100'000;    // cosets defined by Todd-Coxeter

    static Caps from_env();
    static Caps parse(std::string_view spec);
    static Caps parse(std::string_view spec, Caps base);
  };

}  // namespace artindiv

#endif  // ARTINDIV_ERRORS_HPP_
