#include "tw4p/word.hpp"

namespace tw4p {

Mat2c pauli_word(const Word& w) {
  Mat2c m = Mat2c::identity();
  for (int l : w.letters) {
    if (l < 1 || l > 3) throw std::invalid_argument("pauli_word: letter outside {1,2,3}");
    m = m * kPauli[l - 1];
  }
  return m;
}

WordIndex::WordIndex(int depth_) : depth(depth_) {
  level_offset.assign(static_cast<size_t>(depth + 1), 0);
  size_t off = 0, count = 1;
  for (int l = 1; l <= depth; ++l) {
    count *= 3;
    level_offset[static_cast<size_t>(l)] = off;
    off += count;
  }
  total = off;
}

size_t WordIndex::index(const Word& w) const {
  const int l = static_cast<int>(w.depth());
  if (l < 1 || l > depth) throw std::out_of_range("WordIndex: word depth out of range");
  size_t idx = 0;
  for (int letter : w.letters) idx = idx * 3 + static_cast<size_t>(letter - 1);
  return level_offset[static_cast<size_t>(l)] + idx;
}

Word WordIndex::word(int level, size_t idx_in_level) const {
  std::vector<int> letters(static_cast<size_t>(level));
  for (int j = level; j-- > 0;) {
    letters[static_cast<size_t>(j)] = static_cast<int>(idx_in_level % 3) + 1;
    idx_in_level /= 3;
  }
  return Word{std::move(letters)};
}

std::vector<Word> shuffle(const Word& a, const Word& b) {
  if (a.letters.empty()) return {b};
  if (b.letters.empty()) return {a};
  std::vector<Word> out;
  const Word atail{std::vector<int>(a.letters.begin() + 1, a.letters.end())};
  for (Word w : shuffle(atail, b)) {
    w.letters.insert(w.letters.begin(), a.letters.front());
    out.push_back(std::move(w));
  }
  const Word btail{std::vector<int>(b.letters.begin() + 1, b.letters.end())};
  for (Word w : shuffle(a, btail)) {
    w.letters.insert(w.letters.begin(), b.letters.front());
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace tw4p
