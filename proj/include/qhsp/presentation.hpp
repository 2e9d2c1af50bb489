#pragma once

#include <string>
#include <vector>

#include "qhsp/errors.hpp"

namespace qhsp {

//------------------------------------------------------------------------------
// One-relator surface presentations and words
//------------------------------------------------------------------------------
// Generators of the genus-g group are indexed 0..2g-1 in the order
// a1, b1, a2, b2, ..., ag, bg. A word is a sequence of signed 1-based
// letters: +(idx+1) for a generator, -(idx+1) for its inverse. The string
// form uses lowercase for generators and uppercase for inverses: "a1b1A1B1".

struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

  Word inverse() const {
    Word w;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
    return w;
  }
  Word operator*(const Word& o) const {
    Word w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
  }
};

/// Parse "a1b1A1B1"-style words for a genus-g presentation.
Word parse_word(const std::string& s, int genus);
std::string word_to_string(const Word& w);

struct SurfacePresentation {
  int genus = 2;
  Word relator; // product of commutators [a_i, b_i], length 4g

  explicit SurfacePresentation(int g = 2);

  int num_generators() const { return 2 * genus; }
  std::string generator_name(int idx) const;

  /// relator length 4g, every generator exactly twice with opposite signs
  void validate() const;
};

/// Word for the generator index (a single positive letter).
Word generator_word(int idx);

/// The commutator [x, y] = x y x^{-1} y^{-1} as a word.
Word commutator_word(const Word& x, const Word& y);

} // namespace qhsp
