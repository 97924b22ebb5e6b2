#include "artindiv/local_factor.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace artindiv {

  LocalFactor::LocalFactor(std::vector<FactorTerm> terms) : _terms(std::move(terms)) {
    for (auto const& t : _terms) {
      if (t.k == 0) {
        throw Error(ErrorKind::InvalidArgument, "factor with T^0");
      }
      _ambient = std::lcm(_ambient, t.w.order());
    }
    std::sort(_terms.begin(), _terms.end());
  }

  std::size_t LocalFactor::degree() const noexcept {
    std::size_t d = 0;
    for (auto const& t : _terms) {
      d += t.k;
    }
    return d;
  }

  std::vector<RootOfUnity> LocalFactor::roots() const {
    std::vector<RootOfUnity> out;
    for (auto const& t : _terms) {
      auto        inv = t.w.inverse();
      std::size_t m   = inv.order();
      auto        a   = static_cast<long long>(inv.exponent());
      for (std::size_t j = 0; j < t.k; ++j) {
        out.emplace_back(t.k * m, a + static_cast<long long>(m * j));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  LocalFactor LocalFactor::operator*(LocalFactor const& b) const {
    auto terms = _terms;
    terms.insert(terms.end(), b._terms.begin(), b._terms.end());
    return LocalFactor(std::move(terms));
  }

  CycloPoly LocalFactor::expand() const {
    CycloPoly result({CycloElem::rational(1, _ambient)});
    for (auto const& t : _terms) {
      std::vector<CycloElem> c(t.k + 1, CycloElem::zero(_ambient));
      c[0]   = CycloElem::rational(1, _ambient);
      c[t.k] = -CycloElem::root(t.w, _ambient);
      result = result * CycloPoly(std::move(c));
    }
    return result;
  }

  bool LocalFactor::same_polynomial(LocalFactor const& b) const {
    return roots() == b.roots();
  }

  std::string LocalFactor::to_string() const {
    if (_terms.empty()) {
      return "1";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < _terms.size();) {
      std::size_t j = i;
      while (j < _terms.size() && _terms[j] == _terms[i]) {
        ++j;
      }
      if (i > 0) {
        out << ' ';
      }
      auto const& t = _terms[i];
      out << "(1 - ";
      if (!t.w.is_one()) {
        out << t.w.to_string() << ' ';
      }
      out << 'T';
      if (t.k > 1) {
        out << '^' << t.k;
      }
      out << ')';
      if (j - i > 1) {
        out << '^' << (j - i);
      }
      i = j;
    }
    return out.str();
  }

  LocalFactor parse_local_factor(std::string_view text) {
    std::string s;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        s += c;
      }
    }
    auto fail = [&](std::string const& why) -> LocalFactor {
      throw Error(ErrorKind::Parse,
                  "local factor \"" + std::string(text) + "\": " + why);
    };
    if (s == "1") {
      return LocalFactor();
    }
    if (s.empty()) {
      return fail("empty");
    }
    std::size_t pos    = 0;
    auto        number = [&]() -> std::size_t {
      std::size_t b = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      }
      if (pos == b || pos - b > 6) {
        fail("expected a number at position " + std::to_string(b));
      }
      return std::stoul(s.substr(b, pos - b));
    };
    std::vector<FactorTerm> terms;
    while (pos < s.size()) {
      if (s.compare(pos, 2, "(1") != 0 || pos + 2 >= s.size()) {
        return fail("expected '(1' at position " + std::to_string(pos));
      }
      pos += 2;
      if (s[pos] != '-' && s[pos] != '+') {
        return fail("expected '-' or '+'");
      }
      bool plus = s[pos] == '+';
      ++pos;
      auto tpos = s.find('T', pos);
      if (tpos == std::string::npos) {
        return fail("missing T");
      }
      RootOfUnity w;
      if (tpos > pos) {
        auto ws = s.substr(pos, tpos - pos);
        if (!ws.empty() && ws.back() == '*') {
          ws.pop_back();
        }
        w = parse_root_of_unity(ws);
      }
      if (plus) {
        w = w * RootOfUnity(2, 1);
      }
      pos           = tpos + 1;
      std::size_t k = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        k = number();
      }
      if (pos >= s.size() || s[pos] != ')') {
        return fail("missing ')'");
      }
      ++pos;
      std::size_t mult = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        mult = number();
      }
      if (k == 0) {
        return fail("factor with T^0");
      }
      for (std::size_t i = 0; i < mult; ++i) {
        terms.push_back({k, w});
      }
    }
    return LocalFactor(std::move(terms));
  }

  LocalFactor from_roots(std::vector<RootOfUnity> const& roots) {
    std::vector<FactorTerm> terms;
    for (auto const& r : roots) {
      terms.push_back({1, r.inverse()});
    }
    return LocalFactor(std::move(terms));
  }

  bool localfactor_divides(LocalFactor const& a, LocalFactor const& b) {
    if (a.degree() > b.degree()) {
      return false;
    }
    auto        ra = a.roots();
    auto        rb = b.roots();
    std::size_t L  = 1;
    for (auto const& r : ra) {
      L = std::lcm(L, r.order());
    }
    for (auto const& r : rb) {
      L = std::lcm(L, r.order());
    }
    auto exponents = [L](std::vector<RootOfUnity> const& rs) {
      std::vector<std::size_t> e;
      e.reserve(rs.size());
      for (auto const& r : rs) {
        e.push_back(r.exponent_in(L));
      }
      std::sort(e.begin(), e.end());
      return e;
    };
    auto ea = exponents(ra);
    auto eb = exponents(rb);
    return std::includes(eb.begin(), eb.end(), ea.begin(), ea.end());
  }

}  // namespace artindiv
