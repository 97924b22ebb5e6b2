#include "artindiv/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "artindiv/errors.hpp"

namespace artindiv {

  Permutation::Permutation(std::vector<point_type> images)
      : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (auto x : _images) {
      if (x >= _images.size() || seen[x]) {
        throw Error(ErrorKind::InvalidArgument,
                    "image table is not a bijection");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::identity(std::size_t degree) {
    Permutation p;
    p._images.resize(degree);
    std::iota(p._images.begin(), p._images.end(), point_type(0));
    return p;
  }

  Permutation Permutation::from_cycles(
      std::size_t                                 degree,
      std::vector<std::vector<point_type>> const& cycles) {
    Permutation       p = identity(degree);
    std::vector<bool> used(degree, false);
    for (auto const& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        auto x = cycle[i];
        if (x >= degree) {
          throw Error(ErrorKind::InvalidArgument,
                      "cycle point " + std::to_string(x)
                          + " out of range for degree "
                          + std::to_string(degree));
        }
        if (used[x]) {
          throw Error(ErrorKind::InvalidArgument,
                      "point repeated in cycles: " + std::to_string(x));
        }
        used[x]      = true;
        p._images[x] = cycle[(i + 1) % cycle.size()];
      }
    }
    return p;
  }

  Permutation Permutation::operator*(Permutation const& that) const {
    if (degree() != that.degree()) {
      throw Error(ErrorKind::DegreeMismatch,
                  "cannot multiply permutations of degree "
                      + std::to_string(degree()) + " and "
                      + std::to_string(that.degree()));
    }
    Permutation result;
    result._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      result._images[i] = that._images[_images[i]];
    }
    return result;
  }

  Permutation Permutation::inverse() const {
    Permutation result;
    result._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      result._images[_images[i]] = static_cast<point_type>(i);
    }
    return result;
  }

  Permutation Permutation::pow(long long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    unsigned long long n
        = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : e;
    Permutation result = identity(degree());
    while (n > 0) {
      if (n & 1) {
        result = result * base;
      }
      base = base * base;
      n >>= 1;
    }
    return result;
  }

  Permutation Permutation::conjugate(Permutation const& g) const {
    return inverse() * g * *this;
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::size_t Permutation::order() const {
    std::size_t result = 1;
    for (auto len : cycle_type()) {
      result = std::lcm(result, len);
    }
    return result;
  }

  std::vector<std::vector<Permutation::point_type>>
  Permutation::cycles() const {
    std::vector<std::vector<point_type>> result;
    std::vector<bool>                    seen(_images.size(), false);
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (seen[i] || _images[i] == i) {
        continue;
      }
      std::vector<point_type> cycle;
      for (auto j = static_cast<point_type>(i); !seen[j]; j = _images[j]) {
        seen[j] = true;
        cycle.push_back(j);
      }
      result.push_back(std::move(cycle));
    }
    return result;
  }

  std::vector<std::size_t> Permutation::cycle_type() const {
    std::vector<std::size_t> result;
    std::vector<bool>        seen(_images.size(), false);
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t len = 0;
      for (auto j = i; !seen[j]; j = _images[j]) {
        seen[j] = true;
        ++len;
      }
      result.push_back(len);
    }
    std::sort(result.rbegin(), result.rend());
    return result;
  }

  std::string Permutation::to_string(bool one_based) const {
    auto cs = cycles();
    if (cs.empty()) {
      return "()";
    }
    std::ostringstream out;
    for (auto const& c : cs) {
      out << '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) {
          out << ' ';
        }
        out << (c[i] + (one_based ? 1 : 0));
      }
      out << ')';
    }
    return out.str();
  }

  std::size_t Permutation::hash() const noexcept {
    // FNV-1a over the image table
    std::size_t h = 1469598103934665603ULL;
    for (auto x : _images) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }

  Permutation parse_cycles(std::string_view text,
                           std::size_t      degree,
                           bool             one_based) {
    std::vector<std::vector<Permutation::point_type>> cycles;
    std::size_t                                       i = 0;
    auto skip_space = [&] {
      while (i < text.size()
             && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    skip_space();
    if (i == text.size()) {
      throw Error(ErrorKind::Parse, "empty permutation");
    }
    while (i < text.size()) {
      if (text[i] != '(') {
        throw Error(ErrorKind::Parse,
                    "expected '(' in permutation: " + std::string(text));
      }
      ++i;
      std::vector<Permutation::point_type> cycle;
      while (true) {
        skip_space();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        if (i == text.size()
            || !std::isdigit(static_cast<unsigned char>(text[i]))) {
          throw Error(ErrorKind::Parse,
                      "bad cycle in permutation: " + std::string(text));
        }
        unsigned long long v = 0;
        while (i < text.size()
               && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + static_cast<unsigned>(text[i] - '0');
          if (v > (1ULL << 31)) {
            throw Error(ErrorKind::Parse, "point out of range");
          }
          ++i;
        }
        if (one_based) {
          if (v == 0) {
            throw Error(ErrorKind::Parse, "point 0 in 1-based cycle notation");
          }
          --v;
        }
        cycle.push_back(static_cast<Permutation::point_type>(v));
      }
      if (!cycle.empty()) {
        cycles.push_back(std::move(cycle));
      }
      skip_space();
    }
    try {
      return Permutation::from_cycles(degree, cycles);
    } catch (Error const& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
  }

}  // namespace artindiv
