#include "artindiv/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "artindiv/artin.hpp"
#include "artindiv/fpgroup.hpp"
#include "artindiv/group_io.hpp"
#include "artindiv/numfield.hpp"
#include "artindiv/parallel.hpp"
#include "artindiv/verify.hpp"

namespace artindiv {

  bool PropertyPattern::empty() const noexcept {
    for (auto const& w : want) {
      if (w) {
        return false;
      }
    }
    return true;
  }

  bool PropertyPattern::matches(std::array<bool, 4> const& props) const noexcept {
    for (std::size_t i = 0; i < 4; ++i) {
      if (want[i] && *want[i] != props[i]) {
        return false;
      }
    }
    return true;
  }

  std::size_t PropertyPattern::property_index(std::string const& name) {
    if (name.size() == 2 && name[0] == 'p' && name[1] >= '1' && name[1] <= '4') {
      return static_cast<std::size_t>(name[1] - '1');
    }
    throw Error(ErrorKind::Parse, "unknown property '" + name + "' (expected p1, p2, p3 or p4)");
  }

  namespace {
    std::array<bool, 4> property_flags(PropertyReport const& r) {
      return {r.p1, r.p2, r.p3, r.p4.value_or(false)};
    }
  }  // namespace

  std::vector<EquivPair> equiv_search(FinGroup const&        G,
                                      SubgroupLattice const& lattice,
                                      PropertyPattern const& pattern,
                                      unsigned               jobs) {
    auto const                                       table = character_table(G);
    std::vector<std::pair<std::size_t, std::size_t>> work;
    for (std::size_t i = 0; i < lattice.classes.size(); ++i) {
      for (std::size_t j = 0; j < lattice.classes.size(); ++j) {
        // |H| < |H'| fails every property at the identity class
        if (i != j && lattice.representative(i).order() >= lattice.representative(j).order()) {
          work.emplace_back(i, j);
        }
      }
    }
    auto results = parallel_map<std::optional<EquivPair>>(work.size(), jobs, [&](std::size_t k) {
      auto [i, j] = work[k];
      auto r      = compare_properties(G, lattice.representative(i), lattice.representative(j),
                                       &table);
      auto props  = property_flags(r);
      return pattern.matches(props) ? std::optional<EquivPair>(EquivPair{i, j, props})
                                    : std::nullopt;
    });
    std::vector<EquivPair> out;
    for (auto& r : results) {
      if (r) {
        out.push_back(*r);
      }
    }
    return out;
  }

  std::vector<EquivPair> equiv_search(FinGroup const&        G,
                                      PropertyPattern const& pattern,
                                      unsigned               jobs) {
    return equiv_search(G, all_subgroups(G), pattern, jobs);
  }

  namespace {
    using nlohmann::json;

    ////////////////////////////////////////////////////////////////////////
    // input
    ////////////////////////////////////////////////////////////////////////

    // A group given as a permutation file, a presentation file or a name
    // such as "S4".
    struct Source {
      FinGroup                             G;
      std::optional<RegularRepresentation> rr;
      std::vector<std::string>             words;  // per element, when rr is set

      std::string show(Permutation const& g) const {
        return rr ? words[G.index(g)] : g.to_string();
      }
    };

    bool looks_like_presentation(std::string const& text) {
      for (auto const& kv : split_key_value_lines(text)) {
        if (kv.key == "gens") {
          return true;
        }
      }
      return false;
    }

    Source load_source(std::string const& spec) {
      Source src;
      if (!std::filesystem::exists(spec)) {
        src.G = named_group(spec);
        return src;
      }
      auto text = read_text_file(spec);
      if (looks_like_presentation(text)) {
        src.rr.emplace(Presentation::parse(text), Caps::from_env().cosets);
        src.G     = src.rr->group();
        src.words = shortest_words(*src.rr);
      } else {
        auto file = parse_group_file(text);
        src.G     = FinGroup::generated_by(file.degree, file.generators);
      }
      return src;
    }

    std::string trim(std::string const& s) {
      auto b = s.find_first_not_of(" \t");
      if (b == std::string::npos) {
        return "";
      }
      auto e = s.find_last_not_of(" \t");
      return s.substr(b, e - b + 1);
    }

    // Cycle notation for permutation groups, words for presented groups.
    Permutation parse_element(Source const& src, std::string const& text) {
      auto t = trim(text);
      bool has_letter = false;
      for (char c : t) {
        has_letter = has_letter || std::isalpha(static_cast<unsigned char>(c));
      }
      Permutation g = src.rr && has_letter ? src.rr->evaluate(t) : parse_cycles(t, src.G.degree());
      if (!src.G.contains(g)) {
        throw Error(ErrorKind::NotASubgroup, "element " + t + " is not in the group");
      }
      return g;
    }

    FinGroup parse_subgroup(Source const& src, std::vector<std::string> const& gens) {
      std::vector<Permutation> perms;
      for (auto const& g : gens) {
        if (!trim(g).empty()) {
          perms.push_back(parse_element(src, g));
        }
      }
      return subgroup(src.G, std::move(perms));
    }

    SubgroupCharacter load_character(Source const& src, std::string const& path) {
      auto file = parse_character_file(read_text_file(path));
      SubgroupCharacter::Assignment images;
      std::vector<Permutation>      gens;
      for (auto const& [lhs, e] : file.images) {
        auto g = parse_element(src, lhs);
        gens.push_back(g);
        images.emplace_back(g, RootOfUnity(file.modulus, e));
      }
      auto H = subgroup(src.G, gens);
      return SubgroupCharacter::from_generators(src.G, H, images);
    }

    ////////////////////////////////////////////////////////////////////////
    // output
    ////////////////////////////////////////////////////////////////////////

    void print_table(std::ostream&                                out,
                     std::vector<std::string> const&              header,
                     std::vector<std::vector<std::string>> const& rows) {
      std::vector<std::size_t> width(header.size(), 0);
      for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (auto const& r : rows) {
          width[c] = std::max(width[c], r[c].size());
        }
      }
      auto line = [&](std::vector<std::string> const& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
          s += cells[c];
          if (c + 1 < cells.size()) {
            s += std::string(width[c] - cells[c].size() + 2, ' ');
          }
        }
        out << s << "\n";
      };
      line(header);
      for (auto const& r : rows) {
        line(r);
      }
    }

    // Class names: cycle shape for permutation groups (with a suffix when
    // two classes share a shape), "(word)^G" for presented groups.
    std::vector<std::string> class_labels(Source const& src) {
      std::vector<std::string> labels;
      for (auto const& c : src.G.classes()) {
        if (src.rr) {
          labels.push_back("(" + src.show(c.representative) + ")^G");
          continue;
        }
        std::string shape;
        for (auto k : c.representative.cycle_type()) {
          if (k > 1) {
            shape += "(" + std::string(k, '.') + ")";
          }
        }
        labels.push_back(shape.empty() ? "e" : shape);
      }
      std::map<std::string, std::size_t> total, seen;
      for (auto const& l : labels) {
        ++total[l];
      }
      for (auto& l : labels) {
        if (total[l] > 1) {
          l += "#" + std::to_string(++seen[l]);
        }
      }
      return labels;
    }

    std::vector<std::string> generator_strings(Source const& src, FinGroup const& H) {
      std::vector<std::string> out;
      for (auto const& g : H.generators()) {
        out.push_back(src.show(g));
      }
      return out;
    }

    std::string join(std::vector<std::string> const& parts, std::string const& sep) {
      std::string out;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
      }
      return out;
    }

    std::string show_subgroup(Source const& src, FinGroup const& H) {
      auto g = generator_strings(src, H);
      return "<" + join(g, ", ") + ">";
    }

    ////////////////////////////////////////////////////////////////////////
    // options shared by the verbs
    ////////////////////////////////////////////////////////////////////////

    struct Options {
      bool                     json_out = false;
      unsigned                 jobs     = 1;
      std::uint64_t            seed     = 20240229;
      std::size_t              trials   = 0;
      std::string              caps;
      bool                     assume_irreducible = false;
      std::string              source;
      std::string              file;
      std::vector<std::string> h;
      std::vector<std::string> h2;
      std::vector<std::string> sub;
      std::vector<std::string> require;
      std::vector<std::string> forbid;
      std::string              elt;
      std::string              character;
      std::string              poly, poly1, poly2;
      std::uint64_t            p    = 0;
      std::uint64_t            pmax = 1000;
      std::size_t              n    = 2;
      std::size_t              l    = 0;
      std::string              base;
    };

    constexpr char const* caps_help =
        "size caps, e.g. closure=1000000,lattice=2000,cosets=100000; "
        "defaults come from the ARTINDIV_CAPS environment variable";

    constexpr char const* source_help =
        "group: a permutation file (degree:/perm: lines), a presentation file "
        "(gens:/rel: lines) or a name S<n>, A<n>, C<n>, D<n>";

    void add_common(CLI::App* cmd, Options& o) {
      cmd->add_flag("--json", o.json_out, "emit JSON (schema 1) instead of text");
      cmd->add_option("--caps", o.caps, caps_help);
    }

    void add_source(CLI::App* cmd, Options& o) {
      cmd->add_option("source", o.source, source_help)->required();
    }

    void add_pair(CLI::App* cmd, Options& o, bool required) {
      auto* a = cmd->add_option("--H", o.h,
                                "generators of H, comma separated: cycles such as "
                                "\"(1 2 3),(1 2)\" or words such as \"b^-2,a c^2\"")
                    ->delimiter(',');
      auto* b = cmd->add_option("--H2", o.h2, "generators of H', same syntax")->delimiter(',');
      if (required) {
        a->required();
        b->required();
      }
    }

    PropertyPattern make_pattern(Options const& o) {
      PropertyPattern pat;
      for (auto const& r : o.require) {
        pat.want[PropertyPattern::property_index(r)] = true;
      }
      for (auto const& f : o.forbid) {
        auto i = PropertyPattern::property_index(f);
        if (pat.want[i]) {
          throw Error(ErrorKind::InvalidArgument, f + " is both required and forbidden");
        }
        pat.want[i] = false;
      }
      return pat;
    }

    std::string pattern_text(PropertyPattern const& pat) {
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < 4; ++i) {
        if (pat.want[i]) {
          parts.push_back(std::string(*pat.want[i] ? "+" : "-") + "p" + std::to_string(i + 1));
        }
      }
      return parts.empty() ? "(none)" : join(parts, " ");
    }

    int emit_tables(std::ostream& out, Options const& o, std::vector<EvidenceTable> const& ts) {
      bool ok = true;
      for (auto const& t : ts) {
        ok = ok && t.passed();
      }
      if (o.json_out) {
        out << (ts.size() == 1 ? to_json(ts.front()) : to_json(ts)).dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < ts.size(); ++i) {
          out << (i ? "\n" : "") << ts[i].to_text();
        }
      }
      return ok ? exit_ok : exit_false;
    }

    ////////////////////////////////////////////////////////////////////////
    // verbs
    ////////////////////////////////////////////////////////////////////////

    int group_classes(std::ostream& out, Options const& o) {
      auto src    = load_source(o.source);
      auto labels = class_labels(src);
      auto const& cls = src.G.classes();
      if (o.json_out) {
        json j = {{"schema", json_schema_version}, {"order", src.G.order()},
                  {"degree", src.G.degree()}, {"classes", json::array()}};
        for (std::size_t i = 0; i < cls.size(); ++i) {
          j["classes"].push_back({{"class", labels[i]},
                                  {"rep", src.show(cls[i].representative)},
                                  {"size", cls[i].size()},
                                  {"order", cls[i].representative.order()}});
        }
        out << j.dump(2) << "\n";
        return exit_ok;
      }
      out << "order " << src.G.order() << ", " << cls.size() << " classes\n";
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < cls.size(); ++i) {
        rows.push_back({std::to_string(i), labels[i], std::to_string(cls[i].size()),
                        std::to_string(cls[i].representative.order()),
                        src.show(cls[i].representative)});
      }
      print_table(out, {"#", "class", "size", "order", "rep"}, rows);
      return exit_ok;
    }

    int group_subgroups(std::ostream& out, Options const& o) {
      auto src = load_source(o.source);
      auto lat = all_subgroups(src.G);
      if (o.json_out) {
        json j = {{"schema", json_schema_version}, {"order", src.G.order()},
                  {"subgroups", lat.subgroups.size()}, {"classes", json::array()}};
        for (std::size_t c = 0; c < lat.classes.size(); ++c) {
          auto const& H = lat.representative(c);
          j["classes"].push_back({{"class", c},
                                  {"order", H.order()},
                                  {"conjugates", lat.classes[c].size()},
                                  {"generators", generator_strings(src, H)}});
        }
        out << j.dump(2) << "\n";
        return exit_ok;
      }
      out << "order " << src.G.order() << ", " << lat.subgroups.size() << " subgroups in "
          << lat.classes.size() << " conjugacy classes\n";
      std::vector<std::vector<std::string>> rows;
      for (std::size_t c = 0; c < lat.classes.size(); ++c) {
        auto const& H = lat.representative(c);
        rows.push_back({std::to_string(c), std::to_string(H.order()),
                        std::to_string(lat.classes[c].size()), show_subgroup(src, H)});
      }
      print_table(out, {"#", "order", "conjugates", "representative"}, rows);
      return exit_ok;
    }

    int fp_enumerate(std::ostream& out, Options const& o) {
      auto              pres = Presentation::parse(read_text_file(o.file));
      std::vector<Word> sub  = pres.subgroup();
      if (!o.sub.empty()) {
        sub.clear();
        for (auto const& w : o.sub) {
          sub.push_back(pres.parse_word(w));
        }
      }
      auto                     ce = todd_coxeter(pres, sub, Caps::from_env().cosets);
      std::vector<std::string> sub_text;
      for (auto const& w : sub) {
        sub_text.push_back(pres.to_string(w));
      }
      if (o.json_out) {
        json j = {{"schema", json_schema_version},
                  {"generators", pres.generators()},
                  {"relators", pres.relators().size()},
                  {"subgroup", sub_text},
                  {"cosets", ce.size()}};
        out << j.dump(2) << "\n";
      } else {
        out << "generators: " << join(pres.generators(), " ") << "\n"
            << "relators: " << pres.relators().size() << "\n"
            << "subgroup: " << (sub_text.empty() ? "trivial" : "<" + join(sub_text, ", ") + ">")
            << "\n"
            << "cosets: " << ce.size() << "\n";
      }
      return exit_ok;
    }

    int equiv_check(std::ostream& out, Options const& o) {
      auto src   = load_source(o.source);
      auto H     = parse_subgroup(src, o.h);
      auto H2    = parse_subgroup(src, o.h2);
      auto pat   = make_pattern(o);
      auto table = character_table(src.G);
      auto r     = compare_properties(src.G, H, H2, &table);
      auto props = property_flags(r);

      EvidenceTable t;
      t.scenario  = "equiv check: H = " + show_subgroup(src, H) + ", H' = " + show_subgroup(src, H2);
      t.column_h  = "H";
      t.column_h2 = "H'";
      auto labels = class_labels(src);
      for (auto const& ev : r.rows) {
        t.rows.push_back({labels[ev.cls], src.show(ev.representative), ev.count_h, ev.count_h2,
                          ev.factor_h.to_string(), ev.factor_h2.to_string(), ev.divides, ""});
      }
      for (std::size_t i = 0; i < 4; ++i) {
        t.verdicts["property_" + std::to_string(i + 1)] = props[i];
      }
      t.verdicts["gassmann"]  = gassmann_equivalent(src.G, H, H2);
      t.verdicts["conjugate"] = are_conjugate_subgroups(src.G, H, H2).has_value();
      for (std::size_t i = 0; i < 4; ++i) {
        if (pat.want[i]) {
          auto name = "p" + std::to_string(i + 1);
          t.checks.push_back({name + (*pat.want[i] ? " holds" : " fails"), props[i] == *pat.want[i]});
        }
      }
      if (o.trials > 0) {
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<std::size_t> pick(0, src.G.order() - 1);
        bool            same = true;
        for (std::size_t k = 0; k < o.trials && same; ++k) {
          auto conj = [&](FinGroup const& K) {
            auto const&              x = src.G.element(pick(rng));
            std::vector<Permutation> gens;
            for (auto const& g : K.generators()) {
              gens.push_back(x.conjugate(g));
            }
            return subgroup(src.G, gens);
          };
          auto cH  = conj(H);
          auto cH2 = conj(H2);
          same     = property_flags(compare_properties(src.G, cH, cH2, &table)) == props;
        }
        t.checks.push_back({"verdicts unchanged on " + std::to_string(o.trials)
                                + " random conjugate pairs (seed " + std::to_string(o.seed) + ")",
                            same});
      }
      t.notes.push_back("property 1 is evaluated as property 3 with trivial characters");
      if (r.p2_witness) {
        t.notes.push_back("property 2 fails first at " + labels[*r.p2_witness]);
      }
      if (r.p3_witness) {
        t.notes.push_back("property 3 fails first at " + labels[*r.p3_witness]);
      }
      return emit_tables(out, o, {t});
    }

    int equiv_search_verb(std::ostream& out, Options const& o) {
      auto src   = load_source(o.source);
      auto pat   = make_pattern(o);
      auto lat   = all_subgroups(src.G);
      auto pairs = equiv_search(src.G, lat, pat, o.jobs);
      auto sub_json = [&](std::size_t c) {
        auto const& H = lat.representative(c);
        return json{{"class", c}, {"order", H.order()}, {"generators", generator_strings(src, H)}};
      };
      if (o.json_out) {
        json j = {{"schema", json_schema_version},
                  {"order", src.G.order()},
                  {"pattern", pattern_text(pat)},
                  {"pairs", json::array()}};
        for (auto const& e : pairs) {
          json props;
          for (std::size_t i = 0; i < 4; ++i) {
            props["property_" + std::to_string(i + 1)] = e.props[i];
          }
          j["pairs"].push_back({{"H", sub_json(e.h)}, {"H2", sub_json(e.h2)}, {"verdicts", props}});
        }
        out << j.dump(2) << "\n";
      } else {
        out << "order " << src.G.order() << ", " << lat.classes.size()
            << " subgroup classes, pattern " << pattern_text(pat) << ": " << pairs.size()
            << " pairs\n";
        std::vector<std::vector<std::string>> rows;
        for (auto const& e : pairs) {
          std::string flags;
          for (std::size_t i = 0; i < 4; ++i) {
            flags += (i ? " " : "") + std::string(e.props[i] ? "+" : "-") + "p" + std::to_string(i + 1);
          }
          auto const& H  = lat.representative(e.h);
          auto const& H2 = lat.representative(e.h2);
          rows.push_back({std::to_string(e.h), std::to_string(H.order()), show_subgroup(src, H),
                          std::to_string(e.h2), std::to_string(H2.order()),
                          show_subgroup(src, H2), flags});
        }
        print_table(out, {"H#", "|H|", "H", "H'#", "|H'|", "H'", "properties"}, rows);
      }
      return pairs.empty() ? exit_false : exit_ok;
    }

    int artin_local(std::ostream& out, Options const& o) {
      auto src    = load_source(o.source);
      auto chi    = load_character(src, o.character);
      auto labels = class_labels(src);
      auto cosets = coset_table(src.G, chi.subgroup());
      std::vector<std::tuple<std::string, std::string, std::string>> rows;
      if (!o.elt.empty()) {
        auto g = parse_element(src, o.elt);
        rows.emplace_back(labels[src.G.class_index(g)], src.show(g),
                          induced_local_factor(src.G, cosets, chi, g).to_string());
      } else {
        auto const& cls = src.G.classes();
        for (std::size_t i = 0; i < cls.size(); ++i) {
          rows.emplace_back(labels[i], src.show(cls[i].representative),
                            induced_local_factor(src.G, cosets, chi, cls[i].representative)
                                .to_string());
        }
      }
      if (o.json_out) {
        json j = {{"schema", json_schema_version},
                  {"subgroup", generator_strings(src, chi.subgroup())},
                  {"index", cosets.index()},
                  {"modulus", chi.modulus()},
                  {"rows", json::array()}};
        for (auto const& [c, rep, f] : rows) {
          j["rows"].push_back({{"class", c}, {"rep", rep}, {"factor", f}});
        }
        out << j.dump(2) << "\n";
      } else {
        out << "H = " << show_subgroup(src, chi.subgroup()) << ", index " << cosets.index()
            << ", character of order " << chi.modulus() << "\n";
        std::vector<std::vector<std::string>> text;
        for (auto const& [c, rep, f] : rows) {
          text.push_back({c, rep, f});
        }
        print_table(out, {"class", "rep", "local factor"}, text);
      }
      return exit_ok;
    }

    int artin_character_table(std::ostream& out, Options const& o) {
      auto        src    = load_source(o.source);
      auto        table  = character_table(src.G);
      auto        labels = class_labels(src);
      auto const& cls    = src.G.classes();
      if (o.json_out) {
        json j = {{"schema", json_schema_version}, {"order", src.G.order()},
                  {"classes", labels}, {"characters", json::array()}};
        for (auto const& chi : table) {
          std::vector<std::string> v;
          for (auto const& x : chi.values()) {
            v.push_back(x.to_string());
          }
          j["characters"].push_back(v);
        }
        out << j.dump(2) << "\n";
        return exit_ok;
      }
      std::vector<std::string> header{"", "size"};
      std::vector<std::string> sizes{"", ""};
      for (std::size_t i = 0; i < cls.size(); ++i) {
        header.push_back(labels[i]);
      }
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string>              size_row{"|c|", ""};
      for (auto const& c : cls) {
        size_row.push_back(std::to_string(c.size()));
      }
      rows.push_back(size_row);
      for (std::size_t k = 0; k < table.size(); ++k) {
        std::vector<std::string> r{"chi" + std::to_string(k + 1), table[k].degree().to_string()};
        for (auto const& x : table[k].values()) {
          r.push_back(x.to_string());
        }
        rows.push_back(r);
      }
      header[1] = "degree";
      print_table(out, header, rows);
      return exit_ok;
    }

    int artin_subrep(std::ostream& out, Options const& o) {
      auto src   = load_source(o.source);
      auto H     = parse_subgroup(src, o.h);
      auto H2    = parse_subgroup(src, o.h2);
      auto table = character_table(src.G);
      auto m1    = decompose(permutation_character(src.G, H), table);
      auto m2    = decompose(permutation_character(src.G, H2), table);
      bool sub   = is_subrep(src.G, H, H2, table);
      auto text  = [](std::vector<mpq_class> const& m) {
        std::vector<std::string> s;
        for (auto const& x : m) {
          s.push_back(x.get_str());
        }
        return s;
      };
      if (o.json_out) {
        json j = {{"schema", json_schema_version},
                  {"subrep", sub},
                  {"multiplicities_H", text(m1)},
                  {"multiplicities_H2", text(m2)}};
        out << j.dump(2) << "\n";
      } else {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t k = 0; k < table.size(); ++k) {
          rows.push_back({"chi" + std::to_string(k + 1), table[k].degree().to_string(),
                          m1[k].get_str(), m2[k].get_str()});
        }
        print_table(out, {"irreducible", "degree", "in Ind_H 1", "in Ind_H' 1"}, rows);
        out << "Ind_H 1 is " << (sub ? "" : "not ") << "a subrepresentation of Ind_H' 1\n";
      }
      return sub ? exit_ok : exit_false;
    }

    int zeta_local(std::ostream& out, Options const& o) {
      auto F  = NumberFieldSpec::parse(o.poly, o.assume_irreducible);
      auto st = splitting_type(F, o.p);
      if (o.json_out) {
        json j = {{"schema", json_schema_version}, {"poly", F.to_string()}, {"p", o.p},
                  {"degrees", st.degrees}};
        if (st.excluded) {
          j["excluded"] = *st.excluded;
        } else {
          j["factor"] = zeta_local_factor(F, o.p)->to_string();
        }
        out << j.dump(2) << "\n";
        return exit_ok;
      }
      out << "field: Q[x]/(" << F.to_string() << "), discriminant " << F.discriminant().get_str()
          << "\n";
      if (st.excluded) {
        out << "p = " << o.p << ": excluded (" << *st.excluded << ")\n";
        return exit_ok;
      }
      std::vector<std::string> d;
      for (auto k : st.degrees) {
        d.push_back(std::to_string(k));
      }
      out << "p = " << o.p << ": residue degrees " << join(d, " ") << "\n"
          << "local factor: " << zeta_local_factor(F, o.p)->to_string() << "\n";
      return exit_ok;
    }

    int zeta_divides_verb(std::ostream& out, Options const& o) {
      auto F1 = NumberFieldSpec::parse(o.poly1, o.assume_irreducible);
      auto F2 = NumberFieldSpec::parse(o.poly2, o.assume_irreducible);
      auto r  = zeta_divides(F1, F2, o.pmax);
      if (o.json_out) {
        json j = {{"schema", json_schema_version}, {"poly1", F1.to_string()},
                  {"poly2", F2.to_string()},         {"pmax", r.pmax},
                  {"holds", r.holds},                {"tested", r.tested},
                  {"excluded", r.excluded}};
        j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
        out << j.dump(2) << "\n";
      } else {
        std::vector<std::string> ex;
        for (auto p : r.excluded) {
          ex.push_back(std::to_string(p));
        }
        out << "L_p(" << F1.to_string() << ") | L_p(" << F2.to_string() << ") for p <= " << r.pmax
            << ": " << (r.holds ? "holds" : "fails") << "\n"
            << "primes tested: " << r.tested << "\n"
            << "excluded: " << (ex.empty() ? "none" : join(ex, " ")) << "\n";
        if (r.witness) {
          out << "first failure: p = " << *r.witness << "\n";
        }
      }
      return r.holds ? exit_ok : exit_false;
    }

    FinGroup base_group(Options const& o) {
      return named_group(o.base.empty() ? "S" + std::to_string(o.n) : o.base);
    }

    int verify_iota(std::ostream& out, Options const& o) {
      if (!o.source.empty()) {
        auto src = load_source(o.source);
        auto H2  = parse_subgroup(src, o.h2);
        if (o.character.empty()) {
          auto H = parse_subgroup(src, o.h);
          return emit_tables(out, o,
                             {iota_divisibility_check(src.G, H, H2, SubgroupCharacter::trivial(src.G, H))});
        }
        auto chi = load_character(src, o.character);
        return emit_tables(out, o, {iota_divisibility_check(src.G, chi.subgroup(), H2, chi)});
      }
      auto M      = build_gamma(o.n, o.l == 0 ? 3 : o.l, base_group(o));
      auto kernel = subgroup_where(M.gamma, [&](Permutation const& x) {
        for (std::size_t i = 0; i < M.n; ++i) {
          if (x[i * M.l] / M.l != i) {
            return false;
          }
        }
        return true;
      });
      auto t = iota_divisibility_check(M.gamma, M.delta, kernel, *M.chi,
                                       "iota: Gamma(n=" + std::to_string(M.n) + ", l="
                                           + std::to_string(M.l) + "), H = Delta, H' = C_l^n");
      return emit_tables(out, o, {t});
    }

    ////////////////////////////////////////////////////////////////////////
    // dispatch
    ////////////////////////////////////////////////////////////////////////

    // Sets ARTINDIV_CAPS for the duration of one run.
    class ScopedCaps {
     public:
      explicit ScopedCaps(std::string const& value) {
        if (char const* old = std::getenv("ARTINDIV_CAPS")) {
          _old = old;
        }
        setenv("ARTINDIV_CAPS", value.c_str(), 1);
      }
      ~ScopedCaps() {
        if (_old) {
          setenv("ARTINDIV_CAPS", _old->c_str(), 1);
        } else {
          unsetenv("ARTINDIV_CAPS");
        }
      }
      ScopedCaps(ScopedCaps const&)            = delete;
      ScopedCaps& operator=(ScopedCaps const&) = delete;

     private:
      std::optional<std::string> _old;
    };

    std::string caps_string(Caps const& c) {
      return "closure=" + std::to_string(c.closure) + ",lattice=" + std::to_string(c.lattice)
             + ",cosets=" + std::to_string(c.cosets);
    }

    int exit_for(ErrorKind kind) {
      switch (kind) {
        case ErrorKind::CapExceeded: return exit_cap;
        case ErrorKind::WitnessNotFound:
        case ErrorKind::Internal: return exit_false;
        default: return exit_usage;
      }
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Options  o;
    CLI::App app{"Artin local factors, divisibility of L-series and their finite group models",
                 "artindiv"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "help for every verb");

    std::function<int()> action;
    auto leaf = [&](CLI::App* parent, std::string const& name, std::string const& desc,
                    std::function<int(std::ostream&, Options const&)> f) {
      auto* cmd = parent->add_subcommand(name, desc);
      add_common(cmd, o);
      cmd->callback([&action, f, &out, &o] { action = [f, &out, &o] { return f(out, o); }; });
      return cmd;
    };

    auto* group = app.add_subcommand("group", "inspect a permutation or presented group");
    group->require_subcommand(1);
    add_source(leaf(group, "classes", "conjugacy classes with sizes, orders and representatives",
                    group_classes),
               o);
    add_source(leaf(group, "subgroups", "subgroup lattice up to conjugacy", group_subgroups), o);

    auto* fp = app.add_subcommand("fp", "finitely presented groups");
    fp->require_subcommand(1);
    auto* en = leaf(fp, "enumerate", "Todd-Coxeter coset enumeration", fp_enumerate);
    en->add_option("file", o.file,
                   "presentation file: 'gens: a b', one 'rel: <word>' per relator, "
                   "optional 'sub: <word>' lines")
        ->required();
    en->add_option("--sub", o.sub, "subgroup generator word (repeatable); overrides sub: lines");

    auto* eq = app.add_subcommand("equiv", "compare the properties of two subgroups");
    eq->require_subcommand(1);
    auto add_pattern = [&](CLI::App* cmd) {
      cmd->add_option("--require", o.require, "properties that must hold: p1 p2 p3 p4")
          ->delimiter(',');
      cmd->add_option("--forbid", o.forbid, "properties that must fail")->delimiter(',');
    };
    auto* check = leaf(eq, "check",
                       "properties 1-4, Gassmann equivalence and conjugacy of (H, H'); "
                       "p1: zeta_K | zeta_K', p2: class counts, p3: per-class charpoly "
                       "divisibility, p4: Ind_H 1 inside Ind_H' 1",
                       equiv_check);
    add_source(check, o);
    add_pair(check, o, true);
    add_pattern(check);
    check->add_option("--trials", o.trials,
                      "also recheck the verdicts on this many random conjugates (default 0)");
    check->add_option("--seed", o.seed, "seed for --trials (default 20240229)");
    auto* search = leaf(eq, "search",
                        "all pairs of subgroup class representatives matching a pattern; "
                        "exit 1 when there is none",
                        equiv_search_verb);
    add_source(search, o);
    add_pattern(search);
    search->add_option("--jobs", o.jobs, "worker threads (default 1)");

    auto* tables = app.add_subcommand("tables", "the worked comparison tables");
    tables->require_subcommand(1);
    leaf(tables, "s3",
         "(S4, A4, S3), (S4, S3, <(1 2)(3 4)>) and the order-128 example; exit 0 iff every "
         "check passes",
         [](std::ostream& out, Options const& o) { return emit_tables(out, o, reproduce_s3_tables()); });

    auto* artin = app.add_subcommand("artin", "Artin local factors and characters");
    artin->require_subcommand(1);
    auto* local = leaf(artin, "local", "local factor of Ind_H chi per class (or at --elt)",
                       artin_local);
    add_source(local, o);
    local->add_option("character", o.character,
                      "character file: 'modulus: m', then 'chi: <element> -> e' lines sending "
                      "each generator of H to zeta_m^e")
        ->required();
    local->add_option("--elt", o.elt, "a single element (cycles or word)");
    add_source(leaf(artin, "character-table", "irreducible characters", artin_character_table),
               o);
    auto* subrep = leaf(artin, "subrep", "is Ind_H 1 a subrepresentation of Ind_H' 1",
                        artin_subrep);
    add_source(subrep, o);
    add_pair(subrep, o, true);

    auto* zeta = app.add_subcommand("zeta", "Dedekind zeta factors of number fields");
    zeta->require_subcommand(1);
    auto* zl = leaf(zeta, "local", "splitting type and local factor at p", zeta_local);
    zl->add_option("--poly", o.poly, "monic irreducible polynomial in x, e.g. \"x^3 - 2\"")
        ->required();
    zl->add_option("--p", o.p, "prime below 2^31")->required();
    zl->add_flag("--assume-irreducible", o.assume_irreducible,
                 "accept a polynomial with no irreducibility certificate");
    auto* zd = leaf(zeta, "divides", "does zeta_F1 divide zeta_F2 prime by prime",
                    zeta_divides_verb);
    zd->add_option("--poly1", o.poly1, "defining polynomial of F1")->required();
    zd->add_option("--poly2", o.poly2, "defining polynomial of F2")->required();
    zd->add_option("--pmax", o.pmax, "test primes up to this bound (default 1000)");
    zd->add_flag("--assume-irreducible", o.assume_irreducible,
                 "accept polynomials with no irreducibility certificate");

    auto* verify = app.add_subcommand("verify", "verification scenarios");
    verify->require_subcommand(1);
    auto add_gamma = [&](CLI::App* cmd) {
      cmd->add_option("--n", o.n, "number of blocks (default 2)");
      cmd->add_option("--l", o.l, "odd prime l (default 3)");
      cmd->add_option("--base", o.base, "transitive base group S<n>, A<n>, C<n>, D<n> (default S<n>)");
    };
    auto* iota = leaf(verify, "iota",
                      "L-factor of chi divides that of Res chi, per class; without a source, "
                      "uses H = Delta and H' = C_l^n in Gamma(n, l, base)",
                      verify_iota);
    iota->add_option("source", o.source, source_help);
    add_pair(iota, o, false);
    iota->add_option("--char", o.character, "character file for chi on H (default trivial on --H)");
    add_gamma(iota);
    auto* k5 = leaf(verify, "kernel5", "totally split coset witnesses in S_l",
                    [](std::ostream& out, Options const& o) {
                      return emit_tables(out, o, {section5_kernel(o.l == 0 ? 5 : o.l)});
                    });
    k5->add_option("--l", o.l, "prime l, 5 or 7 (default 5)");
    auto* ce = leaf(verify, "counterexample", "S_l x C_l model with psi(chi) != Res chi",
                    [](std::ostream& out, Options const& o) {
                      return emit_tables(out, o, {counterexample_small_l(o.l == 0 ? 5 : o.l)});
                    });
    ce->add_option("--l", o.l, "prime l >= 5 (default 5)");
    add_gamma(leaf(verify, "gamma", "alpha-matrix checks in Gamma = C_l^n x| G",
                   [](std::ostream& out, Options const& o) {
                     return emit_tables(
                         out, o, {lemma_alpha_checks(build_gamma(o.n, o.l == 0 ? 3 : o.l, base_group(o)))});
                   }));
    auto* th = leaf(verify, "theorem", "brute force over all (H'', chi') in Gamma",
                    [](std::ostream& out, Options const& o) {
                      auto M = build_gamma(o.n, o.l == 0 ? 3 : o.l, base_group(o));
                      return emit_tables(out, o, {bruteforce_theorem(M, o.jobs)});
                    });
    add_gamma(th);
    th->add_option("--jobs", o.jobs, "worker threads (default 1)");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      auto* cmd = &app;
      while (!cmd->get_subcommands().empty()) {
        cmd = cmd->get_subcommands().front();
      }
      out << cmd->help();
      return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "error: Usage: " << e.what() << "\n";
      return exit_usage;
    }

    try {
      std::optional<ScopedCaps> caps;
      if (!o.caps.empty()) {
        caps.emplace(caps_string(Caps::parse(o.caps, Caps::from_env())));
      }
      if (o.jobs == 0) {
        throw Error(ErrorKind::InvalidArgument, "--jobs must be at least 1");
      }
      return action();
    } catch (Error const& e) {
      err << "error: " << e.reason() << "\n";
      return exit_for(e.kind());
    } catch (json::exception const& e) {
      err << "error: Internal: " << e.what() << "\n";
      return exit_false;
    }
  }

}  // namespace artindiv
