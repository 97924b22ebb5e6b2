#include "artindiv/subgroups.hpp"

#include <algorithm>
#include <unordered_map>

namespace artindiv {

  void check_subgroup(FinGroup const& G, FinGroup const& H) {
    if (!H.is_subgroup_of(G)) {
      throw Error(ErrorKind::NotASubgroup,
                  "group of order " + std::to_string(H.order())
                      + " is not a subgroup of the ambient group");
    }
  }

  FinGroup subgroup(FinGroup const& G, std::vector<Permutation> gens) {
    for (auto const& g : gens) {
      if (!G.contains(g)) {
        throw Error(ErrorKind::NotASubgroup,
                    g.to_string() + " is not an element of the group");
      }
    }
    return FinGroup::generated_by(G.degree(), std::move(gens));
  }

  FinGroup subgroup_where(FinGroup const&                               G,
                          std::function<bool(Permutation const&)> const& pred) {
    std::vector<Permutation> gens;
    FinGroup H = FinGroup::generated_by(G.degree(), {});
    for (auto const& g : G.elements()) {
      if (pred(g) && !H.contains(g)) {
        gens.push_back(g);
        H = FinGroup::generated_by(G.degree(), gens);
      }
    }
    return H;
  }

  std::size_t class_intersection_count(FinGroup const&  G,
                                       ConjClass const& c,
                                       FinGroup const&  H) {
    check_subgroup(G, H);
    std::size_t count = 0;
    for (auto i : c.members) {
      if (H.contains(G.element(i))) {
        ++count;
      }
    }
    return count;
  }

  CosetTable coset_table(FinGroup const& G, FinGroup const& H) {
    check_subgroup(G, H);
    constexpr auto unset = static_cast<std::size_t>(-1);
    CosetTable     t;
    t.subgroup = H;
    t.coset_of_element.assign(G.order(), unset);
    for (std::size_t i = 0; i < G.order(); ++i) {
      if (t.coset_of_element[i] != unset) {
        continue;
      }
      std::size_t c = t.representatives.size();
      auto const& r = G.element(i);
      t.representatives.push_back(r);
      for (auto const& h : H.elements()) {
        t.coset_of_element[G.index(h * r)] = c;
      }
    }
    for (auto const& g : G.generators()) {
      t.action.push_back(coset_action(G, t, g));
    }
    return t;
  }

  Permutation coset_action(FinGroup const&    G,
                           CosetTable const&  table,
                           Permutation const& g) {
    std::vector<Permutation::point_type> images(table.index());
    for (std::size_t i = 0; i < table.index(); ++i) {
      images[i] = static_cast<Permutation::point_type>(
          table.coset_of_element[G.index(table.representatives[i] * g)]);
    }
    return Permutation(std::move(images));
  }

  FinGroup normal_core(FinGroup const& G, FinGroup const& H) {
    check_subgroup(G, H);
    return subgroup_where(G, [&](Permutation const& x) {
      if (!H.contains(x)) {
        return false;
      }
      for (auto const& g : G.elements()) {
        if (!H.contains(g.conjugate(x))) {
          return false;
        }
      }
      return true;
    });
  }

  namespace {
    using Bits = std::vector<std::uint64_t>;

    struct BitsHash {
      std::size_t operator()(Bits const& b) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto w : b) {
          h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };

    bool test(Bits const& b, std::size_t i) {
      return (b[i >> 6] >> (i & 63)) & 1;
    }

    void set(Bits& b, std::size_t i) {
      b[i >> 6] |= std::uint64_t(1) << (i & 63);
    }

    std::vector<std::size_t> members(Bits const& b, std::size_t n) {
      std::vector<std::size_t> result;
      for (std::size_t i = 0; i < n; ++i) {
        if (test(b, i)) {
          result.push_back(i);
        }
      }
      return result;
    }

    struct RawSubgroup {
      Bits                       bits;
      std::vector<std::uint32_t> gens;
      std::size_t                order;
    };

    RawSubgroup closure(GroupTable const&                 t,
                        std::vector<std::uint32_t> const& gens) {
      RawSubgroup s{Bits((t.n + 63) / 64, 0), gens, 0};
      std::vector<std::uint32_t> queue{0};
      set(s.bits, 0);
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (auto g : gens) {
          auto y = t(queue[q], g);
          if (!test(s.bits, y)) {
            set(s.bits, y);
            queue.push_back(y);
          }
        }
      }
      s.order = queue.size();
      return s;
    }
  }  // namespace

  SubgroupLattice all_subgroups(FinGroup const& G) {
    return all_subgroups(G, Caps::from_env().lattice);
  }

  SubgroupLattice all_subgroups(FinGroup const& G, std::size_t cap) {
    if (G.order() > cap) {
      throw Error(ErrorKind::CapExceeded,
                  "subgroup lattice requested for group of order "
                      + std::to_string(G.order()) + " (cap "
                      + std::to_string(cap) + ")");
    }
    GroupTable const&                            t = G.table();
    std::size_t                                  n = t.n;
    std::vector<RawSubgroup>                     subs;
    std::unordered_map<Bits, std::size_t, BitsHash> seen;

    auto add = [&](RawSubgroup s) {
      if (seen.emplace(s.bits, subs.size()).second) {
        subs.push_back(std::move(s));
      }
    };

    std::vector<std::uint32_t> cyclic_gens;
    for (std::uint32_t x = 0; x < n; ++x) {
      auto s = closure(t, x == 0 ? std::vector<std::uint32_t>{}
                                 : std::vector<std::uint32_t>{x});
      if (!seen.count(s.bits)) {
        cyclic_gens.push_back(x);
      }
      add(std::move(s));
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {
      for (auto c : cyclic_gens) {
        if (test(subs[i].bits, c)) {
          continue;
        }
        auto gens = subs[i].gens;
        gens.push_back(c);
        add(closure(t, gens));
      }
    }

    std::vector<std::vector<std::size_t>> keys(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
      keys[i] = members(subs[i].bits, n);
    }
    std::vector<std::size_t> order(subs.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (subs[a].order != subs[b].order) {
        return subs[a].order < subs[b].order;
      }
      return keys[a] < keys[b];
    });
    std::vector<std::size_t> position(subs.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      position[order[i]] = i;
    }

    // conjugation by each generator g: x -> g^-1 x g
    std::vector<std::vector<std::uint32_t>> conj;
    for (auto const& g : G.generators()) {
      auto                       gi = G.index(g);
      std::vector<std::uint32_t> map(n);
      for (std::size_t x = 0; x < n; ++x) {
        map[x] = t(t(t.inv[gi], x), gi);
      }
      conj.push_back(std::move(map));
    }

    SubgroupLattice result;
    constexpr auto  unset = static_cast<std::size_t>(-1);
    result.class_of.assign(subs.size(), unset);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      auto const& s = subs[order[i]];
      std::vector<std::uint32_t> gens;
      for (auto g : s.gens) {
        gens.push_back(g);
      }
      std::vector<Permutation> perms;
      for (auto g : gens) {
        perms.push_back(G.element(g));
      }
      result.subgroups.push_back(
          FinGroup::generated_by(G.degree(), std::move(perms)));
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (result.class_of[i] != unset) {
        continue;
      }
      std::size_t cls = result.classes.size();
      result.classes.push_back({i});
      result.class_of[i] = cls;
      auto& members_of_class = result.classes.back();
      for (std::size_t q = 0; q < members_of_class.size(); ++q) {
        auto const& bits = subs[order[members_of_class[q]]].bits;
        for (auto const& map : conj) {
          Bits image(bits.size(), 0);
          for (std::size_t x = 0; x < n; ++x) {
            if (test(bits, x)) {
              set(image, map[x]);
            }
          }
          auto j = position[seen.at(image)];
          if (result.class_of[j] == unset) {
            result.class_of[j] = cls;
            members_of_class.push_back(j);
          }
        }
      }
      std::sort(members_of_class.begin(), members_of_class.end());
    }
    return result;
  }

  FinGroup commutator_subgroup(FinGroup const& H) {
    auto const&              gs = H.generators();
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        auto c = gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j];
        if (!c.is_identity()) {
          gens.push_back(std::move(c));
        }
      }
    }
    FinGroup N = FinGroup::generated_by(H.degree(), gens);
    // normal closure in H
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < N.generators().size() && !changed; ++a) {
        for (auto const& h : gs) {
          auto c = h.conjugate(N.generators()[a]);
          if (!N.contains(c)) {
            gens.push_back(std::move(c));
            N       = FinGroup::generated_by(H.degree(), gens);
            changed = true;
            break;
          }
        }
      }
    }
    return N;
  }

  bool is_normal(FinGroup const& G, FinGroup const& N) {
    check_subgroup(G, N);
    for (auto const& g : G.generators()) {
      for (auto const& n : N.generators()) {
        if (!N.contains(g.conjugate(n))) {
          return false;
        }
      }
    }
    return true;
  }

  QuotientGroup quotient(FinGroup const& G, FinGroup const& N) {
    if (!is_normal(G, N)) {
      throw Error(ErrorKind::NotNormal, "subgroup is not normal");
    }
    auto cosets = coset_table(G, N);
    auto group  = FinGroup::generated_by(cosets.index(), cosets.action);
    return QuotientGroup{std::move(group), std::move(cosets)};
  }

  Permutation quotient_image(FinGroup const&      G,
                             QuotientGroup const& Q,
                             Permutation const&   g) {
    return coset_action(G, Q.cosets, g);
  }

  AbelianBasis abelian_basis(FinGroup const& A) {
    if (!A.is_abelian()) {
      throw Error(ErrorKind::NotAbelian, "group is not abelian");
    }
    std::size_t              n = A.order();
    std::vector<bool>        in_span(n, false);
    std::vector<std::size_t> span{0};
    in_span[0] = true;
    std::vector<Permutation> basis;
    std::vector<std::size_t> orders;

    // Each round adds an element x whose order equals both the exponent of
    // A / span and the order of x * span; such an x spans a direct summand
    // together with the current span.
    while (span.size() < n) {
      std::size_t best_order = 0;
      std::size_t best       = 0;
      std::size_t quotient_exponent = 0;
      for (std::size_t i = 0; i < n; ++i) {
        auto const& x        = A.element(i);
        Permutation y        = x;
        std::size_t mod_span = 1;
        while (!in_span[A.index(y)]) {
          y = y * x;
          ++mod_span;
        }
        quotient_exponent = std::max(quotient_exponent, mod_span);
        if (mod_span > best_order && x.order() == mod_span) {
          best_order = mod_span;
          best       = i;
        }
      }
      if (best_order != quotient_exponent) {
        throw Error(ErrorKind::Internal, "no summand of maximal order found");
      }
      auto const&              x = A.element(best);
      std::vector<std::size_t> next;
      Permutation              power = A.identity();
      for (std::size_t j = 0; j < best_order; ++j) {
        for (auto b : span) {
          auto k = A.index(A.element(b) * power);
          if (in_span[k] && j > 0) {
            throw Error(ErrorKind::Internal, "abelian basis step not direct");
          }
          next.push_back(k);
        }
        power = power * x;
      }
      for (auto k : next) {
        in_span[k] = true;
      }
      span = std::move(next);
      basis.push_back(x);
      orders.push_back(best_order);
    }
    std::reverse(basis.begin(), basis.end());
    std::reverse(orders.begin(), orders.end());

    AbelianBasis result{basis, orders, {}};
    result.exponents.assign(n, {});
    std::vector<std::size_t> tuple(basis.size(), 0);
    std::size_t              assigned = 0;
    while (true) {
      Permutation g = A.identity();
      for (std::size_t i = 0; i < basis.size(); ++i) {
        g = g * basis[i].pow(static_cast<long long>(tuple[i]));
      }
      auto k = A.index(g);
      if (!result.exponents[k].empty() || (basis.empty() && assigned > 0)) {
        throw Error(ErrorKind::Internal, "abelian basis is not independent");
      }
      result.exponents[k] = tuple;
      ++assigned;
      std::size_t i = 0;
      while (i < tuple.size() && ++tuple[i] == orders[i]) {
        tuple[i] = 0;
        ++i;
      }
      if (i == tuple.size()) {
        break;
      }
    }
    if (assigned != n) {
      throw Error(ErrorKind::Internal, "abelian basis does not span");
    }
    return result;
  }

  std::optional<Permutation> are_conjugate_subgroups(FinGroup const& G,
                                                     FinGroup const& H1,
                                                     FinGroup const& H2) {
    check_subgroup(G, H1);
    check_subgroup(G, H2);
    if (H1.order() != H2.order()) {
      return std::nullopt;
    }
    for (auto const& g : G.elements()) {
      auto gi = g.inverse();
      bool ok = true;
      for (auto const& h : H1.generators()) {
        if (!H2.contains(g * h * gi)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        return g;
      }
    }
    return std::nullopt;
  }

}  // namespace artindiv
