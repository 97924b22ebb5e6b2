#include "artindiv/fingroup.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace artindiv {

  struct FinGroup::Impl {
    std::size_t              degree = 0;
    std::vector<Permutation> gens;
    std::vector<Permutation> elements;
    // BFS tree: elements[i] = elements[parent[i]] * gens[step[i]]
    std::vector<std::uint32_t>                                   parent;
    std::vector<std::uint32_t>                                   step;
    std::unordered_map<Permutation, std::size_t, PermutationHash> index;

    mutable std::once_flag   classes_once;
    mutable ConjugacyClasses classes;
    mutable std::once_flag   table_once;
    mutable GroupTable       table;
  };

  FinGroup::FinGroup() : FinGroup(generated_by(0, {}, 1)) {}

  FinGroup::FinGroup(std::shared_ptr<Impl const> impl)
      : _impl(std::move(impl)) {}

  FinGroup FinGroup::generated_by(std::size_t              degree,
                                  std::vector<Permutation> gens) {
    return generated_by(degree, std::move(gens), Caps::from_env().closure);
  }

  FinGroup FinGroup::generated_by(std::size_t              degree,
                                  std::vector<Permutation> gens,
                                  std::size_t              cap) {
    if (cap == 0) {
      throw Error(ErrorKind::InvalidArgument, "closure cap must be >= 1");
    }
    for (auto const& g : gens) {
      if (g.degree() != degree) {
        throw Error(ErrorKind::DegreeMismatch,
                    "generator " + g.to_string() + " has degree "
                        + std::to_string(g.degree()) + ", expected "
                        + std::to_string(degree));
      }
    }
    auto impl    = std::make_shared<Impl>();
    impl->degree = degree;
    impl->gens   = std::move(gens);
    auto id      = Permutation::identity(degree);
    impl->elements.push_back(id);
    impl->parent.push_back(0);
    impl->step.push_back(0);
    impl->index.emplace(id, 0);
    for (std::size_t i = 0; i < impl->elements.size(); ++i) {
      for (std::size_t k = 0; k < impl->gens.size(); ++k) {
        Permutation y = impl->elements[i] * impl->gens[k];
        if (impl->index.find(y) != impl->index.end()) {
          continue;
        }
        if (impl->elements.size() >= cap) {
          throw Error(ErrorKind::CapExceeded,
                      "group closure passed " + std::to_string(cap)
                          + " elements");
        }
        impl->index.emplace(y, impl->elements.size());
        impl->elements.push_back(std::move(y));
        impl->parent.push_back(static_cast<std::uint32_t>(i));
        impl->step.push_back(static_cast<std::uint32_t>(k));
      }
    }
    return FinGroup(std::move(impl));
  }

  std::size_t FinGroup::degree() const noexcept {
    return _impl->degree;
  }

  std::size_t FinGroup::order() const noexcept {
    return _impl->elements.size();
  }

  std::vector<Permutation> const& FinGroup::generators() const noexcept {
    return _impl->gens;
  }

  std::vector<Permutation> const& FinGroup::elements() const noexcept {
    return _impl->elements;
  }

  Permutation const& FinGroup::element(std::size_t i) const {
    return _impl->elements.at(i);
  }

  Permutation const& FinGroup::identity() const {
    return _impl->elements[0];
  }

  std::optional<std::size_t> FinGroup::index_of(Permutation const& p) const {
    auto it = _impl->index.find(p);
    if (it == _impl->index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t FinGroup::index(Permutation const& p) const {
    auto it = _impl->index.find(p);
    if (it == _impl->index.end()) {
      throw Error(ErrorKind::NotASubgroup,
                  p.to_string() + " is not an element of the group");
    }
    return it->second;
  }

  bool FinGroup::contains(Permutation const& p) const {
    return _impl->index.find(p) != _impl->index.end();
  }

  bool FinGroup::is_subgroup_of(FinGroup const& that) const {
    if (degree() != that.degree()) {
      return false;
    }
    for (auto const& g : generators()) {
      if (!that.contains(g)) {
        return false;
      }
    }
    return true;
  }

  bool FinGroup::is_abelian() const {
    auto const& gs = generators();
    for (std::size_t i = 0; i < gs.size(); ++i) {
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        if (gs[i] * gs[j] != gs[j] * gs[i]) {
          return false;
        }
      }
    }
    return true;
  }

  std::size_t FinGroup::exponent() const {
    std::size_t e = 1;
    for (auto const& c : classes()) {
      e = std::lcm(e, c.representative.order());
    }
    return e;
  }

  ConjugacyClasses const& FinGroup::classes() const {
    std::call_once(_impl->classes_once, [this] {
      auto const&      els = _impl->elements;
      ConjugacyClasses result;
      constexpr auto   unset = static_cast<std::size_t>(-1);
      result.class_of.assign(els.size(), unset);
      std::vector<Permutation> inv_gens;
      for (auto const& g : _impl->gens) {
        inv_gens.push_back(g.inverse());
      }
      for (std::size_t i = 0; i < els.size(); ++i) {
        if (result.class_of[i] != unset) {
          continue;
        }
        std::size_t c = result.classes.size();
        ConjClass   cls{els[i], i, {i}};
        result.class_of[i] = c;
        for (std::size_t q = 0; q < cls.members.size(); ++q) {
          auto const& x = els[cls.members[q]];
          for (std::size_t k = 0; k < inv_gens.size(); ++k) {
            std::size_t y = _impl->index.at(inv_gens[k] * x * _impl->gens[k]);
            if (result.class_of[y] == unset) {
              result.class_of[y] = c;
              cls.members.push_back(y);
            }
          }
        }
        std::sort(cls.members.begin(), cls.members.end());
        result.classes.push_back(std::move(cls));
      }
      _impl->classes = std::move(result);
    });
    return _impl->classes;
  }

  std::size_t FinGroup::class_index(Permutation const& p) const {
    return classes().class_of[index(p)];
  }

  GroupTable const& FinGroup::table() const {
    if (order() > Caps::from_env().lattice) {
      throw Error(ErrorKind::CapExceeded,
                  "Cayley table requested for group of order "
                      + std::to_string(order()));
    }
    std::call_once(_impl->table_once, [this] {
      auto const& els = _impl->elements;
      std::size_t n   = els.size();
      std::size_t ng  = _impl->gens.size();
      // right multiplication by generators
      std::vector<std::uint32_t> right(n * ng);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < ng; ++k) {
          right[i * ng + k] = static_cast<std::uint32_t>(
              _impl->index.at(els[i] * _impl->gens[k]));
        }
      }
      GroupTable t;
      t.n = n;
      t.mul.resize(n * n);
      t.inv.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        t.mul[i * n] = static_cast<std::uint32_t>(i);
        // elements are in BFS order, so parents precede children
        for (std::size_t j = 1; j < n; ++j) {
          auto x       = t.mul[i * n + _impl->parent[j]];
          t.mul[i * n + j] = right[x * ng + _impl->step[j]];
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (t.mul[i * n + j] == 0) {
            t.inv[i] = static_cast<std::uint32_t>(j);
            break;
          }
        }
      }
      _impl->table = std::move(t);
    });
    return _impl->table;
  }

  bool FinGroup::same_elements(FinGroup const& that) const {
    if (order() != that.order() || degree() != that.degree()) {
      return false;
    }
    for (auto const& g : generators()) {
      if (!that.contains(g)) {
        return false;
      }
    }
    return true;
  }

  ConjugacyClasses conjugacy_classes(FinGroup const& G) {
    return G.classes();
  }

  FinGroup symmetric_group(std::size_t n) {
    std::vector<Permutation> gens;
    if (n >= 2) {
      gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    }
    if (n >= 3) {
      std::vector<Permutation::point_type> cyc(n);
      std::iota(cyc.begin(), cyc.end(), 0u);
      gens.push_back(Permutation::from_cycles(n, {cyc}));
    }
    return FinGroup::generated_by(n, std::move(gens));
  }

  FinGroup alternating_group(std::size_t n) {
    std::vector<Permutation> gens;
    for (std::size_t k = 2; k < n; ++k) {
      gens.push_back(Permutation::from_cycles(
          n, {{0, 1, static_cast<Permutation::point_type>(k)}}));
    }
    return FinGroup::generated_by(n, std::move(gens));
  }

  FinGroup cyclic_group(std::size_t n) {
    std::vector<Permutation> gens;
    if (n >= 2) {
      std::vector<Permutation::point_type> cyc(n);
      std::iota(cyc.begin(), cyc.end(), 0u);
      gens.push_back(Permutation::from_cycles(n, {cyc}));
    }
    return FinGroup::generated_by(n, std::move(gens));
  }

  Permutation embed_left(Permutation const& a, std::size_t degree_b) {
    auto images = a.images();
    for (std::size_t i = 0; i < degree_b; ++i) {
      images.push_back(static_cast<Permutation::point_type>(a.degree() + i));
    }
    return Permutation(std::move(images));
  }

  Permutation embed_right(Permutation const& b, std::size_t degree_a) {
    std::vector<Permutation::point_type> images(degree_a);
    std::iota(images.begin(), images.end(), 0u);
    for (auto x : b.images()) {
      images.push_back(static_cast<Permutation::point_type>(x + degree_a));
    }
    return Permutation(std::move(images));
  }

  FinGroup direct_product(FinGroup const& A, FinGroup const& B) {
    std::vector<Permutation> gens;
    for (auto const& a : A.generators()) {
      gens.push_back(embed_left(a, B.degree()));
    }
    for (auto const& b : B.generators()) {
      gens.push_back(embed_right(b, A.degree()));
    }
    return FinGroup::generated_by(A.degree() + B.degree(), std::move(gens));
  }

}  // namespace artindiv
