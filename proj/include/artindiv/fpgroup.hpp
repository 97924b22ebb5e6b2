#ifndef ARTINDIV_FPGROUP_HPP_
#define ARTINDIV_FPGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "artindiv/fingroup.hpp"

namespace artindiv {

  struct Letter {
    std::size_t generator;
    bool        inverse = false;

    friend bool operator==(Letter const&, Letter const&) = default;
  };

  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}

    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    Word inverse() const;
    // Cancels adjacent x x^-1 pairs.
    Word reduced() const;
    Word operator*(Word const& that) const;
    Word pow(long long e) const;

    friend bool operator==(Word const&, Word const&) = default;

   private:
    std::vector<Letter> _letters;
  };

  // A finitely presented group <generators | relators>, optionally with
  // subgroup generators read from the same file.
  //
  // File syntax:
  //   gens: a b c d
  //   rel: a^4
  //   rel: d^2 = a^-1          (an equation u = v becomes the relator u v^-1)
  //   sub: b^-2
  //
  // Words are juxtapositions of generator names with optional integer powers;
  // parentheses group, e.g. "(a b)^3", "a d^-1 c^-1", "ac^2".
  class Presentation {
   public:
    Presentation() = default;
    explicit Presentation(std::vector<std::string> generators);

    std::vector<std::string> const& generators() const noexcept {
      return _generators;
    }
    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }
    std::vector<Word> const& subgroup() const noexcept {
      return _subgroup;
    }

    void add_relator(Word w);
    void add_subgroup_generator(Word w);

    // Throws Parse for unknown generator names or malformed input.
    Word        parse_word(std::string_view text) const;
    std::string to_string(Word const& w) const;

    static Presentation parse(std::string_view text);
    std::string         emit() const;

   private:
    void check(Word const& w) const;

    std::vector<std::string> _generators;
    std::vector<Word>        _relators;
    std::vector<Word>        _subgroup;
  };

  // A complete coset table: table[c][2*g] is the image of coset c under
  // generator g and table[c][2*g+1] under its inverse. Coset 0 is the
  // subgroup itself; cosets are numbered in breadth-first order.
  struct CosetEnumeration {
    std::size_t                             generators = 0;
    std::vector<std::vector<std::uint32_t>> table;

    std::size_t size() const noexcept {
      return table.size();
    }
    // Image of a coset under a word (right action).
    std::uint32_t act(std::uint32_t coset, Word const& w) const;
  };

  // Hasselgrove-Leech-Trotter enumeration with coincidence processing.
  // Throws CapExceeded when more than `cap` cosets have been defined.
  CosetEnumeration todd_coxeter(Presentation const&      pres,
                                std::vector<Word> const& subgroup,
                                std::size_t              cap);

  // The right regular representation of a finite presented group, together
  // with the images of its generators.
  class RegularRepresentation {
   public:
    RegularRepresentation(Presentation pres, std::size_t cap);

    FinGroup const& group() const noexcept {
      return _group;
    }
    Presentation const& presentation() const noexcept {
      return _pres;
    }
    Permutation const& generator_image(std::size_t i) const {
      return _images.at(i);
    }

    Permutation evaluate(Word const& w) const;
    Permutation evaluate(std::string_view word) const;
    // Subgroup generated by the given words.
    FinGroup subgroup(std::vector<std::string> const& words) const;

   private:
    Presentation             _pres;
    std::vector<Permutation> _images;
    std::vector<Permutation> _inverse_images;
    FinGroup                 _group;
  };

  // A shortest word for every element of the regular representation (by
  // element index), found breadth-first over the generators and then their
  // inverses. The identity is "1".
  std::vector<std::string> shortest_words(RegularRepresentation const& rr);

  inline RegularRepresentation regular_rep(Presentation pres, std::size_t cap) {
    return RegularRepresentation(std::move(pres), cap);
  }

}  // namespace artindiv

#endif  // ARTINDIV_FPGROUP_HPP_
