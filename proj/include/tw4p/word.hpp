#pragma once

#include <string>
#include <vector>

#include "tw4p/matrix2.hpp"

namespace tw4p {

// Pauli matrices m1 = diag(1,-1), m2 = (0 1; 1 0), m3 = (0 i; -i 0).
inline const Mat2c kPauli[3] = {
    {cplx(1), cplx(0), cplx(0), cplx(-1)},
    {cplx(0), cplx(1), cplx(1), cplx(0)},
    {cplx(0), kI, -kI, cplx(0)},
};

// A multi-index over the letters {1,2,3}; the empty word is allowed.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}
  Word(std::initializer_list<int> l) : letters(l) {}

  size_t depth() const { return letters.size(); }
  std::string str() const {
    std::string s;
    for (int l : letters) s.push_back(static_cast<char>('0' + l));
    return s;
  }
  bool operator==(const Word&) const = default;
};

// Ordered product of Pauli matrices; the empty word gives the identity.
// Throws on letters outside {1,2,3}.
Mat2c pauli_word(const Word& w);

// Flat indexing of all nonempty words up to a depth: level l occupies a
// contiguous block of 3^l entries, indexed big-endian in the letters.
struct WordIndex {
  explicit WordIndex(int depth);

  int depth;
  std::vector<size_t> level_offset;  // offset of level l in [1, depth]
  size_t total;

  size_t index(const Word& w) const;
  Word word(int level, size_t idx_in_level) const;
  // For a state entry at (level, idx): index of the prefix entry (level-1)
  // and the final letter. level >= 2 for prefix use.
  size_t prefix(size_t idx_in_level) const { return idx_in_level / 3; }
  int last_letter(size_t idx_in_level) const { return static_cast<int>(idx_in_level % 3) + 1; }
};

// All (a shuffle b) interleavings, with multiplicity.
std::vector<Word> shuffle(const Word& a, const Word& b);

}  // namespace tw4p
