#include "artindiv/numfield.hpp"

#include "artindiv/errors.hpp"

namespace artindiv {

  NumberFieldSpec::NumberFieldSpec(IntPoly f, bool assume_irreducible)
      : _f(std::move(f)) {
    if (_f.degree() < 1 || !_f.is_monic()) {
      throw Error(ErrorKind::InvalidArgument,
                  "defining polynomial must be monic of positive degree: "
                      + _f.to_string('x'));
    }
    _disc = artindiv::discriminant(_f);
    if (_disc == 0) {
      throw Error(ErrorKind::InvalidArgument,
                  _f.to_string('x') + " has a repeated factor (discriminant 0)");
    }
    for (auto p : primes_up_to(100)) {
      if (_disc % p == 0) {
        continue;
      }
      auto d = ddf(FpPoly::from_int(p, _f));
      if (d.counts.size() == 1 && d.counts.begin()->second == 1) {
        _certificate = p;
        break;
      }
    }
    if (!_certificate && !assume_irreducible) {
      throw Error(ErrorKind::InvalidArgument,
                  _f.to_string('x')
                      + " is reducible modulo every prime up to 100 not dividing its "
                        "discriminant; pass the irreducibility override to accept it");
    }
  }

  NumberFieldSpec NumberFieldSpec::parse(std::string_view text, bool assume_irreducible) {
    return NumberFieldSpec(parse_int_poly(text, 'x'), assume_irreducible);
  }

  SplittingType splitting_type(NumberFieldSpec const& F, std::uint64_t p) {
    if (p >= (std::uint64_t(1) << 31) || !is_prime(p)) {
      throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not a prime below 2^31");
    }
    SplittingType st;
    st.p = p;
    if (F.discriminant() % p == 0) {
      st.excluded = "ramified-or-index";
      return st;
    }
    try {
      auto d = ddf(FpPoly::from_int(p, F.polynomial()));
      for (auto const& [deg, count] : d.counts) {
        st.degrees.insert(st.degrees.end(), count, deg);
      }
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::NotSquarefree) {
        throw;
      }
      st.excluded = "ramified-or-index";
    }
    return st;
  }

  std::optional<LocalFactor> zeta_local_factor(NumberFieldSpec const& F, std::uint64_t p) {
    auto st = splitting_type(F, p);
    if (st.is_excluded()) {
      return std::nullopt;
    }
    std::vector<FactorTerm> terms;
    for (auto d : st.degrees) {
      terms.push_back({d, RootOfUnity()});
    }
    return LocalFactor(std::move(terms));
  }

  ZetaDivisionReport zeta_divides(NumberFieldSpec const& F1,
                                  NumberFieldSpec const& F2,
                                  std::uint64_t          pmax) {
    if (pmax < 2) {
      throw Error(ErrorKind::InvalidArgument, "pmax must be at least 2");
    }
    ZetaDivisionReport report;
    report.pmax = pmax;
    for (auto p : primes_up_to(pmax)) {
      auto a = zeta_local_factor(F1, p);
      auto b = zeta_local_factor(F2, p);
      if (!a || !b) {
        report.excluded.push_back(p);
        continue;
      }
      ++report.tested;
      if (report.holds && !localfactor_divides(*a, *b)) {
        report.holds   = false;
        report.witness = p;
      }
    }
    return report;
  }

  std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<bool>          composite(n + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
      if (composite[i]) {
        continue;
      }
      out.push_back(i);
      for (std::uint64_t j = i * i; j <= n; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }

}  // namespace artindiv
