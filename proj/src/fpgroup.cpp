#include "artindiv/fpgroup.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "artindiv/group_io.hpp"

namespace artindiv {

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word Word::inverse() const {
    std::vector<Letter> out(_letters.rbegin(), _letters.rend());
    for (auto& l : out) {
      l.inverse = !l.inverse;
    }
    return Word(std::move(out));
  }

  Word Word::reduced() const {
    std::vector<Letter> out;
    for (auto const& l : _letters) {
      if (!out.empty() && out.back().generator == l.generator
          && out.back().inverse != l.inverse) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return Word(std::move(out));
  }

  Word Word::operator*(Word const& that) const {
    auto out = _letters;
    out.insert(out.end(), that._letters.begin(), that._letters.end());
    return Word(std::move(out));
  }

  Word Word::pow(long long e) const {
    Word base = e < 0 ? inverse() : *this;
    Word result;
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) {
      result = result * base;
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  Presentation::Presentation(std::vector<std::string> generators)
      : _generators(std::move(generators)) {
    for (std::size_t i = 0; i < _generators.size(); ++i) {
      auto const& g = _generators[i];
      if (g.empty()
          || !std::all_of(g.begin(), g.end(), [](unsigned char c) {
               return std::isalpha(c) || c == '_';
             })) {
        throw Error(ErrorKind::Parse, "bad generator name '" + g + "'");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (_generators[j] == g) {
          throw Error(ErrorKind::Parse, "duplicate generator '" + g + "'");
        }
      }
    }
  }

  void Presentation::check(Word const& w) const {
    for (auto const& l : w.letters()) {
      if (l.generator >= _generators.size()) {
        throw Error(ErrorKind::InvalidArgument, "letter outside alphabet");
      }
    }
  }

  void Presentation::add_relator(Word w) {
    check(w);
    _relators.push_back(std::move(w));
  }

  void Presentation::add_subgroup_generator(Word w) {
    check(w);
    _subgroup.push_back(std::move(w));
  }

  namespace {
    class WordParser {
     public:
      WordParser(std::vector<std::string> const& gens, std::string_view text)
          : _gens(gens), _text(text) {}

      Word parse() {
        Word w = sequence();
        skip();
        if (_pos != _text.size()) {
          fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        return w;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw Error(ErrorKind::Parse,
                    "word \"" + std::string(_text) + "\": " + msg);
      }

      void skip() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      Word sequence() {
        Word w;
        while (true) {
          skip();
          if (_pos == _text.size() || _text[_pos] == ')') {
            return w;
          }
          w = w * factor();
        }
      }

      Word factor() {
        Word a = atom();
        skip();
        if (_pos < _text.size() && _text[_pos] == '^') {
          ++_pos;
          skip();
          bool neg = false;
          if (_pos < _text.size() && (_text[_pos] == '-' || _text[_pos] == '+')) {
            neg = _text[_pos] == '-';
            ++_pos;
          }
          if (_pos == _text.size()
              || !std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
            fail("expected exponent after '^'");
          }
          long long e = 0;
          while (_pos < _text.size()
                 && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
            e = e * 10 + (_text[_pos] - '0');
            if (e > 1'000'000) {
              fail("exponent too large");
            }
            ++_pos;
          }
          a = a.pow(neg ? -e : e);
        }
        return a;
      }

      Word atom() {
        skip();
        if (_pos == _text.size()) {
          fail("unexpected end");
        }
        if (_text[_pos] == '(') {
          ++_pos;
          Word w = sequence();
          skip();
          if (_pos == _text.size() || _text[_pos] != ')') {
            fail("missing ')'");
          }
          ++_pos;
          return w;
        }
        if (_text[_pos] == '1') {
          ++_pos;
          return Word();
        }
        // longest generator name matching here
        std::size_t best = _gens.size();
        std::size_t len  = 0;
        for (std::size_t i = 0; i < _gens.size(); ++i) {
          auto const& g = _gens[i];
          if (g.size() > len && _text.substr(_pos, g.size()) == g) {
            best = i;
            len  = g.size();
          }
        }
        if (best == _gens.size()) {
          fail("unknown generator at '" + std::string(_text.substr(_pos)) + "'");
        }
        _pos += len;
        return Word({Letter{best, false}});
      }

      std::vector<std::string> const& _gens;
      std::string_view                _text;
      std::size_t                     _pos = 0;
    };
  }  // namespace

  Word Presentation::parse_word(std::string_view text) const {
    return WordParser(_generators, text).parse();
  }

  std::string Presentation::to_string(Word const& w) const {
    auto const& ls = w.letters();
    if (ls.empty()) {
      return "1";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < ls.size();) {
      std::size_t j = i;
      while (j < ls.size() && ls[j] == ls[i]) {
        ++j;
      }
      if (i > 0) {
        out << ' ';
      }
      out << _generators[ls[i].generator];
      long long e = static_cast<long long>(j - i) * (ls[i].inverse ? -1 : 1);
      if (e != 1) {
        out << '^' << e;
      }
      i = j;
    }
    return out.str();
  }

  Presentation Presentation::parse(std::string_view text) {
    auto         lines = split_key_value_lines(text);
    Presentation pres;
    bool         have_gens = false;
    for (auto const& kv : lines) {
      auto where = "line " + std::to_string(kv.line_number) + ": ";
      try {
        if (kv.key == "gens") {
          if (have_gens) {
            throw Error(ErrorKind::Parse, "duplicate gens line");
          }
          std::istringstream       ss(kv.value);
          std::vector<std::string> names;
          for (std::string name; ss >> name;) {
            names.push_back(name);
          }
          pres      = Presentation(std::move(names));
          have_gens = true;
        } else if (kv.key == "rel" || kv.key == "sub") {
          if (!have_gens) {
            throw Error(ErrorKind::Parse, "'gens:' must come first");
          }
          Word w;
          auto eq = kv.value.find('=');
          if (eq == std::string::npos) {
            w = pres.parse_word(kv.value);
          } else if (kv.key == "rel") {
            w = pres.parse_word(kv.value.substr(0, eq))
                * pres.parse_word(kv.value.substr(eq + 1)).inverse();
          } else {
            throw Error(ErrorKind::Parse, "'sub:' takes a word");
          }
          if (kv.key == "rel") {
            pres.add_relator(std::move(w));
          } else {
            pres.add_subgroup_generator(std::move(w));
          }
        } else {
          throw Error(ErrorKind::Parse, "unknown key '" + kv.key + "'");
        }
      } catch (Error const& e) {
        throw Error(ErrorKind::Parse, where + e.what());
      }
    }
    if (!have_gens) {
      throw Error(ErrorKind::Parse, "missing 'gens:' line");
    }
    return pres;
  }

  std::string Presentation::emit() const {
    std::ostringstream out;
    out << "gens:";
    for (auto const& g : _generators) {
      out << ' ' << g;
    }
    out << '\n';
    for (auto const& r : _relators) {
      out << "rel: " << to_string(r) << '\n';
    }
    for (auto const& s : _subgroup) {
      out << "sub: " << to_string(s) << '\n';
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Coset enumeration
  ////////////////////////////////////////////////////////////////////////

  std::uint32_t CosetEnumeration::act(std::uint32_t coset, Word const& w) const {
    for (auto const& l : w.letters()) {
      coset = table[coset][2 * l.generator + (l.inverse ? 1 : 0)];
    }
    return coset;
  }

  namespace {
    class Enumerator {
     public:
      Enumerator(std::size_t ngens, std::size_t cap)
          : _cols(2 * ngens), _cap(cap) {
        _tab.assign(_cols, -1);
        _parent.push_back(0);
        _defined = 1;
      }

      static std::size_t col(Letter const& l) {
        return 2 * l.generator + (l.inverse ? 1 : 0);
      }

      bool live(std::size_t c) const {
        return _parent[c] == c;
      }

      std::size_t defined() const {
        return _defined;
      }

      std::size_t columns() const {
        return _cols;
      }

      std::int64_t& at(std::size_t c, std::size_t x) {
        return _tab[c * _cols + x];
      }

      void define(std::size_t c, std::size_t x) {
        if (_defined >= _cap) {
          throw Error(ErrorKind::CapExceeded,
                      "coset enumeration defined more than "
                          + std::to_string(_cap) + " cosets");
        }
        std::size_t d = _defined++;
        _tab.resize(_defined * _cols, -1);
        _parent.push_back(d);
        at(c, x)     = static_cast<std::int64_t>(d);
        at(d, x ^ 1) = static_cast<std::int64_t>(c);
      }

      std::size_t rep(std::size_t k) {
        std::size_t r = k;
        while (_parent[r] != r) {
          r = _parent[r];
        }
        while (_parent[k] != r) {
          auto next  = _parent[k];
          _parent[k] = r;
          k          = next;
        }
        return r;
      }

      void merge(std::size_t k, std::size_t l) {
        auto a = rep(k);
        auto b = rep(l);
        if (a == b) {
          return;
        }
        if (a > b) {
          std::swap(a, b);
        }
        _parent[b] = a;
        _queue.push_back(b);
      }

      void coincidence(std::size_t a, std::size_t b) {
        _queue.clear();
        merge(a, b);
        for (std::size_t i = 0; i < _queue.size(); ++i) {
          auto g = _queue[i];
          for (std::size_t x = 0; x < _cols; ++x) {
            if (at(g, x) < 0) {
              continue;
            }
            auto d          = static_cast<std::size_t>(at(g, x));
            at(d, x ^ 1)    = -1;
            auto mu         = rep(g);
            auto nu         = rep(d);
            if (at(mu, x) >= 0) {
              merge(nu, rep(static_cast<std::size_t>(at(mu, x))));
            } else if (at(nu, x ^ 1) >= 0) {
              merge(mu, rep(static_cast<std::size_t>(at(nu, x ^ 1))));
            } else {
              at(mu, x)     = static_cast<std::int64_t>(nu);
              at(nu, x ^ 1) = static_cast<std::int64_t>(mu);
            }
          }
        }
      }

      void scan_and_fill(std::size_t a, Word const& w) {
        auto const& ls = w.letters();
        std::size_t f  = a;
        std::size_t b  = a;
        std::int64_t i = 0;
        std::int64_t j = static_cast<std::int64_t>(ls.size()) - 1;
        while (true) {
          while (i <= j && at(f, col(ls[i])) >= 0) {
            f = static_cast<std::size_t>(at(f, col(ls[i])));
            ++i;
          }
          if (i > j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j >= i && at(b, col(ls[j]) ^ 1) >= 0) {
            b = static_cast<std::size_t>(at(b, col(ls[j]) ^ 1));
            --j;
          }
          if (j < i) {
            coincidence(f, b);
            return;
          }
          if (i == j) {
            at(f, col(ls[i]))     = static_cast<std::int64_t>(b);
            at(b, col(ls[i]) ^ 1) = static_cast<std::int64_t>(f);
            return;
          }
          define(f, col(ls[i]));
        }
      }

     private:
      std::size_t               _cols;
      std::size_t               _cap;
      std::vector<std::int64_t> _tab;
      std::vector<std::size_t>  _parent;
      std::vector<std::size_t>  _queue;
      std::size_t               _defined = 0;
    };
  }  // namespace

  CosetEnumeration todd_coxeter(Presentation const&      pres,
                                std::vector<Word> const& subgroup,
                                std::size_t              cap) {
    if (cap == 0) {
      throw Error(ErrorKind::InvalidArgument, "coset cap must be >= 1");
    }
    std::size_t ngens = pres.generators().size();
    Enumerator  e(ngens, cap);
    for (auto const& w : subgroup) {
      e.scan_and_fill(0, w);
    }
    for (std::size_t a = 0; a < e.defined(); ++a) {
      if (!e.live(a)) {
        continue;
      }
      for (auto const& r : pres.relators()) {
        e.scan_and_fill(a, r);
        if (!e.live(a)) {
          break;
        }
      }
      if (e.live(a)) {
        for (std::size_t x = 0; x < e.columns(); ++x) {
          if (e.at(a, x) < 0) {
            e.define(a, x);
          }
        }
      }
    }

    // renumber the live cosets breadth-first from coset 0
    constexpr auto           unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> number(e.defined(), unset);
    std::vector<std::size_t> order{0};
    number[0] = 0;
    for (std::size_t q = 0; q < order.size(); ++q) {
      for (std::size_t x = 0; x < e.columns(); ++x) {
        auto entry = e.at(order[q], x);
        if (entry < 0) {
          throw Error(ErrorKind::Internal, "incomplete coset table");
        }
        auto d = e.rep(static_cast<std::size_t>(entry));
        if (number[d] == unset) {
          number[d] = order.size();
          order.push_back(d);
        }
      }
    }
    CosetEnumeration result;
    result.generators = ngens;
    result.table.resize(order.size());
    for (std::size_t q = 0; q < order.size(); ++q) {
      auto& row = result.table[q];
      row.resize(e.columns());
      for (std::size_t x = 0; x < e.columns(); ++x) {
        row[x] = static_cast<std::uint32_t>(
            number[e.rep(static_cast<std::size_t>(e.at(order[q], x)))]);
      }
    }

    // every relator must close up at every coset, and subgroup words at 0
    for (std::uint32_t c = 0; c < result.size(); ++c) {
      for (std::size_t x = 0; x < 2 * ngens; ++x) {
        if (result.table[result.table[c][x]][x ^ 1] != c) {
          throw Error(ErrorKind::Internal, "coset table is not invertible");
        }
      }
      for (auto const& r : pres.relators()) {
        if (result.act(c, r) != c) {
          throw Error(ErrorKind::Internal, "relator fails on coset table");
        }
      }
    }
    for (auto const& w : subgroup) {
      if (result.act(0, w) != 0) {
        throw Error(ErrorKind::Internal, "subgroup word moves coset 0");
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Regular representation
  ////////////////////////////////////////////////////////////////////////

  RegularRepresentation::RegularRepresentation(Presentation pres,
                                               std::size_t  cap)
      : _pres(std::move(pres)) {
    auto        table = todd_coxeter(_pres, {}, cap);
    std::size_t n     = table.size();
    for (std::size_t g = 0; g < _pres.generators().size(); ++g) {
      std::vector<Permutation::point_type> fwd(n), bwd(n);
      for (std::size_t c = 0; c < n; ++c) {
        fwd[c] = table.table[c][2 * g];
        bwd[c] = table.table[c][2 * g + 1];
      }
      _images.emplace_back(std::move(fwd));
      _inverse_images.emplace_back(std::move(bwd));
    }
    _group = FinGroup::generated_by(n, _images, std::max<std::size_t>(cap, n));
    if (_group.order() != n) {
      throw Error(ErrorKind::Internal,
                  "regular representation has order "
                      + std::to_string(_group.order()) + " but "
                      + std::to_string(n) + " cosets");
    }
  }

  Permutation RegularRepresentation::evaluate(Word const& w) const {
    Permutation result = _group.identity();
    for (auto const& l : w.letters()) {
      result = result
               * (l.inverse ? _inverse_images[l.generator]
                            : _images[l.generator]);
    }
    return result;
  }

  Permutation RegularRepresentation::evaluate(std::string_view word) const {
    return evaluate(_pres.parse_word(word));
  }

  FinGroup RegularRepresentation::subgroup(
      std::vector<std::string> const& words) const {
    std::vector<Permutation> gens;
    for (auto const& w : words) {
      gens.push_back(evaluate(w));
    }
    return FinGroup::generated_by(_group.degree(), std::move(gens));
  }

  std::vector<std::string> shortest_words(RegularRepresentation const& rr) {
    auto const&              G     = rr.group();
    auto const&              names = rr.presentation().generators();
    std::vector<Word>        word(G.order());
    std::vector<bool>        seen(G.order(), false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto x = queue[q];
      for (std::size_t s = 0; s < 2 * names.size(); ++s) {
        auto const& gen  = rr.generator_image(s % names.size());
        auto        step = s < names.size() ? gen : gen.inverse();
        auto        y    = G.index(G.element(x) * step);
        if (!seen[y]) {
          seen[y] = true;
          auto ls = word[x].letters();
          ls.push_back({s % names.size(), s >= names.size()});
          word[y] = Word(std::move(ls));
          queue.push_back(y);
        }
      }
    }
    std::vector<std::string> out;
    out.reserve(word.size());
    for (auto const& w : word) {
      out.push_back(rr.presentation().to_string(w));
    }
    return out;
  }

}  // namespace artindiv
