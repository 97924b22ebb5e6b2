#include "artindiv/artin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "artindiv/group_io.hpp"

namespace artindiv {

  namespace {
    bool same_group(FinGroup const& a, FinGroup const& b) {
      return a.identical(b)
             || (a.degree() == b.degree() && a.generators() == b.generators());
    }

    void require_same_group(FinGroup const& a, FinGroup const& b) {
      if (!same_group(a, b)) {
        throw Error(ErrorKind::GroupMismatch,
                    "class functions live on different groups");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SubgroupCharacter
  ////////////////////////////////////////////////////////////////////////

  SubgroupCharacter::SubgroupCharacter(FinGroup                 G,
                                       FinGroup                 H,
                                       std::vector<RootOfUnity> values)
      : _G(std::move(G)), _H(std::move(H)), _values(std::move(values)) {
    for (auto const& v : _values) {
      _modulus = std::lcm(_modulus, v.order());
    }
  }

  SubgroupCharacter SubgroupCharacter::from_generators(FinGroup const&   G,
                                                       FinGroup const&   H,
                                                       Assignment const& images) {
    check_subgroup(G, H);
    for (auto const& [g, w] : images) {
      if (!H.contains(g)) {
        throw Error(ErrorKind::NotASubgroup,
                    g.to_string() + " is not in the subgroup");
      }
    }
    std::vector<std::optional<RootOfUnity>> val(H.order());
    std::vector<std::size_t>                queue{0};
    val[0] = RootOfUnity::one();
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto x = queue[q];
      for (auto const& [g, w] : images) {
        auto y = H.index(H.element(x) * g);
        auto v = *val[x] * w;
        if (!val[y]) {
          val[y] = v;
          queue.push_back(y);
        } else if (*val[y] != v) {
          throw Error(ErrorKind::InconsistentCharacter,
                      "assignment gives " + H.element(y).to_string()
                          + " both " + val[y]->to_string() + " and "
                          + v.to_string());
        }
      }
    }
    if (queue.size() != H.order()) {
      throw Error(ErrorKind::InvalidArgument,
                  "character images given on a proper subgroup of order "
                      + std::to_string(queue.size()) + " of a group of order "
                      + std::to_string(H.order()));
    }
    std::vector<RootOfUnity> values;
    values.reserve(val.size());
    for (auto const& v : val) {
      values.push_back(*v);
    }
    return SubgroupCharacter(G, H, std::move(values));
  }

  SubgroupCharacter SubgroupCharacter::trivial(FinGroup const& G, FinGroup const& H) {
    check_subgroup(G, H);
    return SubgroupCharacter(G, H, std::vector<RootOfUnity>(H.order()));
  }

  SubgroupCharacter SubgroupCharacter::from_values(FinGroup const&          G,
                                                   FinGroup const&          H,
                                                   std::vector<RootOfUnity> values) {
    check_subgroup(G, H);
    if (values.size() != H.order()) {
      throw Error(ErrorKind::InvalidArgument, "one value per subgroup element expected");
    }
    if (!values[0].is_one()) {
      throw Error(ErrorKind::InconsistentCharacter, "value at the identity is not 1");
    }
    for (std::size_t x = 0; x < H.order(); ++x) {
      for (auto const& g : H.generators()) {
        auto y = H.index(H.element(x) * g);
        if (values[y] != values[x] * values[H.index(g)]) {
          throw Error(ErrorKind::InconsistentCharacter,
                      "values are not multiplicative at "
                          + H.element(x).to_string() + " * " + g.to_string());
        }
      }
    }
    return SubgroupCharacter(G, H, std::move(values));
  }

  RootOfUnity SubgroupCharacter::value(Permutation const& h) const {
    return _values[_H.index(h)];
  }

  SubgroupCharacter SubgroupCharacter::restrict_to(FinGroup const& K) const {
    check_subgroup(_H, K);
    std::vector<RootOfUnity> v;
    v.reserve(K.order());
    for (auto const& k : K.elements()) {
      v.push_back(value(k));
    }
    return SubgroupCharacter(_G, K, std::move(v));
  }

  SubgroupCharacter SubgroupCharacter::operator*(SubgroupCharacter const& b) const {
    if (!_H.same_elements(b._H)) {
      throw Error(ErrorKind::GroupMismatch, "characters on different subgroups");
    }
    std::vector<RootOfUnity> v(_values.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = _values[i] * b.value(_H.element(i));
    }
    return SubgroupCharacter(_G, _H, std::move(v));
  }

  bool SubgroupCharacter::equals(SubgroupCharacter const& b) const {
    if (!_H.same_elements(b._H)) {
      return false;
    }
    for (std::size_t i = 0; i < _values.size(); ++i) {
      if (_values[i] != b.value(_H.element(i))) {
        return false;
      }
    }
    return true;
  }

  std::vector<SubgroupCharacter> linear_characters(FinGroup const& G, FinGroup const& H) {
    check_subgroup(G, H);
    auto Q     = quotient(H, commutator_subgroup(H));
    auto basis = abelian_basis(Q.group);
    // exponent tuple of the image of every element of H
    std::vector<std::vector<std::size_t> const*> tuple_of;
    for (auto const& h : H.elements()) {
      tuple_of.push_back(&basis.exponents[Q.group.index(quotient_image(H, Q, h))]);
    }
    std::vector<SubgroupCharacter> out;
    std::vector<std::size_t>       a(basis.orders.size(), 0);
    while (true) {
      std::vector<RootOfUnity> values;
      values.reserve(H.order());
      for (auto const* t : tuple_of) {
        RootOfUnity v;
        for (std::size_t i = 0; i < a.size(); ++i) {
          v = v * RootOfUnity(basis.orders[i], static_cast<long long>(a[i] * (*t)[i]));
        }
        values.push_back(v);
      }
      out.push_back(SubgroupCharacter(G, H, std::move(values)));
      // odometer, last coordinate fastest
      std::size_t i = a.size();
      while (i > 0 && ++a[i - 1] == basis.orders[i - 1]) {
        a[--i] = 0;
      }
      if (i == 0) {
        break;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // ClassFunction
  ////////////////////////////////////////////////////////////////////////

  ClassFunction::ClassFunction(FinGroup G, std::vector<CycloElem> values)
      : _G(std::move(G)), _values(std::move(values)) {
    if (_values.size() != _G.classes().size()) {
      throw Error(ErrorKind::InvalidArgument,
                  "class function needs one value per conjugacy class");
    }
  }

  CycloElem const& ClassFunction::at(Permutation const& g) const {
    return _values[_G.class_index(g)];
  }

  ClassFunction ClassFunction::operator+(ClassFunction const& b) const {
    require_same_group(_G, b._G);
    auto v = _values;
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] += b._values[i];
    }
    return ClassFunction(_G, std::move(v));
  }

  ClassFunction ClassFunction::operator*(ClassFunction const& b) const {
    require_same_group(_G, b._G);
    auto v = _values;
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] *= b._values[i];
    }
    return ClassFunction(_G, std::move(v));
  }

  ClassFunction ClassFunction::conj() const {
    auto v = _values;
    for (auto& x : v) {
      x = x.conj();
    }
    return ClassFunction(_G, std::move(v));
  }

  bool ClassFunction::equals(ClassFunction const& b) const {
    if (!same_group(_G, b._G)) {
      return false;
    }
    for (std::size_t i = 0; i < _values.size(); ++i) {
      if (!(_values[i] == b._values[i])) {
        return false;
      }
    }
    return true;
  }

  std::string ClassFunction::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < _values.size(); ++i) {
      if (i > 0) {
        out += ", ";
      }
      out += _values[i].to_string();
    }
    return out;
  }

  CycloElem inner_product(ClassFunction const& f1, ClassFunction const& f2) {
    require_same_group(f1.group(), f2.group());
    auto const& G   = f1.group();
    auto const& cls = G.classes();
    CycloElem   sum;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      sum += (f1[i] * f2[i].conj()).scaled(mpq_class(cls[i].size()));
    }
    return sum.scaled(mpq_class(1, G.order()));
  }

  ClassFunction restriction(ClassFunction const& psi, FinGroup const& H) {
    check_subgroup(psi.group(), H);
    std::vector<CycloElem> v;
    for (auto const& c : H.classes()) {
      v.push_back(psi.at(c.representative));
    }
    return ClassFunction(H, std::move(v));
  }

  ClassFunction trivial_character(FinGroup const& G) {
    return ClassFunction(G, std::vector<CycloElem>(G.classes().size(), CycloElem::rational(1)));
  }

  ClassFunction as_class_function(SubgroupCharacter const& chi) {
    auto const&            H = chi.subgroup();
    std::vector<CycloElem> v;
    for (auto const& c : H.classes()) {
      v.push_back(CycloElem::root(chi.value(c.representative)));
    }
    return ClassFunction(H, std::move(v));
  }

  ////////////////////////////////////////////////////////////////////////
  // Monomial matrices
  ////////////////////////////////////////////////////////////////////////

  bool MonomialMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < column.size(); ++i) {
      if (column[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::optional<RootOfUnity> MonomialMatrix::entry(std::size_t i, std::size_t j) const {
    if (column.at(i) != j) {
      return std::nullopt;
    }
    return weight[i];
  }

  MonomialMatrix MonomialMatrix::operator*(MonomialMatrix const& b) const {
    if (size() != b.size()) {
      throw Error(ErrorKind::DegreeMismatch, "monomial matrices of different size");
    }
    MonomialMatrix out;
    for (std::size_t i = 0; i < size(); ++i) {
      out.column.push_back(b.column[column[i]]);
      out.weight.push_back(weight[i] * b.weight[column[i]]);
    }
    return out;
  }

  CycloElem MonomialMatrix::trace() const {
    CycloElem t;
    for (std::size_t i = 0; i < size(); ++i) {
      if (column[i] == i) {
        t += CycloElem::root(weight[i]);
      }
    }
    return t;
  }

  MonomialMatrix MonomialMatrix::identity(std::size_t n) {
    MonomialMatrix m;
    for (std::size_t i = 0; i < n; ++i) {
      m.column.push_back(i);
      m.weight.emplace_back();
    }
    return m;
  }

  LocalFactor monomial_charpoly(MonomialMatrix const& M) {
    std::vector<bool>       seen(M.size(), false);
    std::vector<FactorTerm> terms;
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t k = 0;
      RootOfUnity w;
      for (std::size_t j = i; !seen[j]; j = M.column[j]) {
        seen[j] = true;
        w       = w * M.weight[j];
        ++k;
      }
      terms.push_back({k, w});
    }
    return LocalFactor(std::move(terms));
  }

  ////////////////////////////////////////////////////////////////////////
  // Induced representations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_character_subgroup(CosetTable const& cosets, SubgroupCharacter const& chi) {
      if (!cosets.subgroup.same_elements(chi.subgroup())) {
        throw Error(ErrorKind::GroupMismatch,
                    "character is defined on a different subgroup than the cosets");
      }
    }

    std::size_t coset_of(FinGroup const& G, CosetTable const& cosets, Permutation const& x) {
      return cosets.coset_of_element[G.index(x)];
    }
  }  // namespace

  MonomialMatrix induced_matrix(FinGroup const&          G,
                                CosetTable const&        cosets,
                                SubgroupCharacter const& chi,
                                Permutation const&       g) {
    check_character_subgroup(cosets, chi);
    G.index(g);
    MonomialMatrix M;
    auto const&    r = cosets.representatives;
    for (std::size_t i = 0; i < r.size(); ++i) {
      auto y = r[i] * g;
      auto j = coset_of(G, cosets, y);
      M.column.push_back(j);
      M.weight.push_back(chi.value(y * r[j].inverse()));
    }
    return M;
  }

  MonomialMatrix induced_matrix(FinGroup const&          G,
                                FinGroup const&          H,
                                SubgroupCharacter const& chi,
                                Permutation const&       g) {
    return induced_matrix(G, coset_table(G, H), chi, g);
  }

  LocalFactor induced_local_factor(FinGroup const&                 G,
                                   CosetTable const&               cosets,
                                   SubgroupCharacter const&        chi,
                                   Permutation const&              g,
                                   std::vector<Permutation> const& reps) {
    check_character_subgroup(cosets, chi);
    if (reps.size() != cosets.index()) {
      throw Error(ErrorKind::InvalidArgument, "one representative per coset expected");
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (coset_of(G, cosets, reps[i]) != i) {
        throw Error(ErrorKind::InvalidArgument,
                    reps[i].to_string() + " is not in coset " + std::to_string(i));
      }
    }
    G.index(g);
    std::vector<bool>       seen(reps.size(), false);
    std::vector<FactorTerm> terms;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t k = 0;
      Permutation x = reps[i];
      for (std::size_t j = i; !seen[j];) {
        seen[j] = true;
        ++k;
        x = x * g;
        j = coset_of(G, cosets, x);
      }
      auto h = reps[i] * g.pow(static_cast<long long>(k)) * reps[i].inverse();
      terms.push_back({k, chi.value(h)});
    }
    return LocalFactor(std::move(terms));
  }

  LocalFactor induced_local_factor(FinGroup const&          G,
                                   CosetTable const&        cosets,
                                   SubgroupCharacter const& chi,
                                   Permutation const&       g) {
    return induced_local_factor(G, cosets, chi, g, cosets.representatives);
  }

  LocalFactor induced_local_factor(FinGroup const&          G,
                                   FinGroup const&          H,
                                   SubgroupCharacter const& chi,
                                   Permutation const&       g) {
    return induced_local_factor(G, coset_table(G, H), chi, g);
  }

  std::vector<LocalFactor> local_factor_table(FinGroup const&          G,
                                              SubgroupCharacter const& chi) {
    auto                     cosets = coset_table(G, chi.subgroup());
    std::vector<LocalFactor> out;
    for (auto const& c : G.classes()) {
      out.push_back(induced_local_factor(G, cosets, chi, c.representative));
    }
    return out;
  }

  ClassFunction induced_character(FinGroup const&          G,
                                  FinGroup const&          H,
                                  SubgroupCharacter const& chi) {
    auto cosets = coset_table(G, H);
    check_character_subgroup(cosets, chi);
    auto const&            r = cosets.representatives;
    std::vector<CycloElem> v;
    for (auto const& c : G.classes()) {
      CycloElem sum;
      for (std::size_t i = 0; i < r.size(); ++i) {
        auto y = r[i] * c.representative;
        if (coset_of(G, cosets, y) == i) {
          sum += CycloElem::root(chi.value(y * r[i].inverse()));
        }
      }
      v.push_back(sum);
    }
    return ClassFunction(G, std::move(v));
  }

  ClassFunction permutation_character(FinGroup const& G, FinGroup const& H) {
    return induced_character(G, H, SubgroupCharacter::trivial(G, H));
  }

  std::vector<mpq_class> decompose(ClassFunction const&              f,
                                   std::vector<ClassFunction> const& table) {
    std::vector<mpq_class> out;
    for (auto const& psi : table) {
      auto ip = inner_product(f, psi);
      if (!ip.is_rational()) {
        throw Error(ErrorKind::Internal,
                    "inner product with an irreducible is not rational: " + ip.to_string());
      }
      out.push_back(ip.rational_value());
    }
    return out;
  }

  bool is_subrep(FinGroup const&                   G,
                 FinGroup const&                   H,
                 FinGroup const&                   H2,
                 std::vector<ClassFunction> const& table) {
    auto a = decompose(permutation_character(G, H), table);
    auto b = decompose(permutation_character(G, H2), table);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) {
        return false;
      }
    }
    return true;
  }

  bool is_subrep(FinGroup const& G, FinGroup const& H, FinGroup const& H2) {
    check_subgroup(G, H);
    check_subgroup(G, H2);
    return is_subrep(G, H, H2, character_table(G));
  }

  ////////////////////////////////////////////////////////////////////////
  // The four comparison properties
  ////////////////////////////////////////////////////////////////////////

  PropertyReport compare_properties(FinGroup const&                   G,
                                    FinGroup const&                   H,
                                    FinGroup const&                   H2,
                                    std::vector<ClassFunction> const* table) {
    check_subgroup(G, H);
    check_subgroup(G, H2);
    auto           t1  = coset_table(G, H);
    auto           t2  = coset_table(G, H2);
    auto           chi1 = SubgroupCharacter::trivial(G, H);
    auto           chi2 = SubgroupCharacter::trivial(G, H2);
    PropertyReport rep;
    auto const&    cls = G.classes();
    for (std::size_t i = 0; i < cls.size(); ++i) {
      auto const&   g = cls[i].representative;
      ClassEvidence row{i,
                        g,
                        class_intersection_count(G, cls[i], H),
                        class_intersection_count(G, cls[i], H2),
                        induced_local_factor(G, t1, chi1, g),
                        induced_local_factor(G, t2, chi2, g),
                        false,
                        false};
      row.count_ok = row.count_h >= row.count_h2;
      row.divides  = localfactor_divides(row.factor_h, row.factor_h2);
      if (!row.count_ok && !rep.p2_witness) {
        rep.p2_witness = i;
      }
      if (!row.divides && !rep.p3_witness) {
        rep.p3_witness = i;
      }
      rep.rows.push_back(std::move(row));
    }
    rep.p2 = !rep.p2_witness;
    rep.p3 = !rep.p3_witness;
    rep.p1 = rep.p3;
    if (table) {
      rep.p4 = is_subrep(G, H, H2, *table);
    }
    return rep;
  }

  PropertyReport compare_properties(FinGroup const& G,
                                    FinGroup const& H,
                                    FinGroup const& H2,
                                    bool            with_p4) {
    if (!with_p4) {
      return compare_properties(G, H, H2, nullptr);
    }
    auto table = character_table(G);
    return compare_properties(G, H, H2, &table);
  }

  bool property_1(FinGroup const& G, FinGroup const& H, FinGroup const& H2) {
    return compare_properties(G, H, H2, false).p1;
  }

  bool property_2(FinGroup const& G, FinGroup const& H, FinGroup const& H2) {
    return compare_properties(G, H, H2, false).p2;
  }

  bool property_3(FinGroup const& G, FinGroup const& H, FinGroup const& H2) {
    return compare_properties(G, H, H2, false).p3;
  }

  bool property_4(FinGroup const& G, FinGroup const& H, FinGroup const& H2) {
    return is_subrep(G, H, H2);
  }

  bool gassmann_equivalent(FinGroup const& G, FinGroup const& H, FinGroup const& H2) {
    check_subgroup(G, H);
    check_subgroup(G, H2);
    bool counts = true;
    for (auto const& c : G.classes()) {
      if (class_intersection_count(G, c, H) != class_intersection_count(G, c, H2)) {
        counts = false;
        break;
      }
    }
    bool characters = H.order() == H2.order()
                      && permutation_character(G, H).equals(permutation_character(G, H2));
    if (counts != characters) {
      throw Error(ErrorKind::Internal,
                  "class counts and permutation characters disagree on Gassmann equivalence");
    }
    return counts;
  }

  CharacterFile parse_character_file(std::string_view text) {
    CharacterFile file;
    bool          have_modulus = false;
    for (auto const& kv : split_key_value_lines(text)) {
      auto where = "line " + std::to_string(kv.line_number) + ": ";
      if (kv.key == "modulus") {
        try {
          std::size_t used = 0;
          long long   m    = std::stoll(kv.value, &used);
          if (used != kv.value.size() || m < 1) {
            throw std::invalid_argument("modulus");
          }
          file.modulus = static_cast<std::size_t>(m);
        } catch (std::exception const&) {
          throw Error(ErrorKind::Parse, where + "modulus must be a positive integer");
        }
        have_modulus = true;
      } else if (kv.key == "chi") {
        auto arrow = kv.value.rfind("->");
        if (arrow == std::string::npos) {
          throw Error(ErrorKind::Parse, where + "expected '<element> -> <exponent>'");
        }
        auto lhs = kv.value.substr(0, arrow);
        auto rhs = kv.value.substr(arrow + 2);
        while (!lhs.empty() && lhs.back() == ' ') {
          lhs.pop_back();
        }
        try {
          std::size_t used = 0;
          auto        first = rhs.find_first_not_of(' ');
          if (first == std::string::npos) {
            throw std::invalid_argument("exponent");
          }
          rhs       = rhs.substr(first);
          long long e = std::stoll(rhs, &used);
          if (used != rhs.size()) {
            throw std::invalid_argument("exponent");
          }
          file.images.emplace_back(lhs, e);
        } catch (std::exception const&) {
          throw Error(ErrorKind::Parse, where + "exponent must be an integer");
        }
      } else {
        throw Error(ErrorKind::Parse, where + "unknown key '" + kv.key + "'");
      }
    }
    if (!have_modulus) {
      throw Error(ErrorKind::Parse, "missing 'modulus:' line");
    }
    return file;
  }

}  // namespace artindiv
