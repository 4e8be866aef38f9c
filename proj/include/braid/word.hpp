#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace braid {

// One letter of a braid word: sigma_{index} when sign is +1, its inverse when -1.
struct Letter {
  int index = 1;
  int sign = +1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A braid word over B_n, kept as the literal letter sequence. The empty word is
// the identity, and no rewriting ever happens behind the caller's back; group
// equality lives in garside.hpp.
class BraidWord {
 public:
  explicit BraidWord(int strands) : strands_(strands) {
    if (strands < 1) throw std::invalid_argument("BraidWord: strand count must be >= 1");
  }

  BraidWord(int strands, std::vector<Letter> letters) : BraidWord(strands) {
    for (const Letter& letter : letters) check(letter);
    letters_ = std::move(letters);
  }

  // Builds a word from signed generator indices: g > 0 is sigma_g, g < 0 is
  // sigma_{-g}^{-1}. Zero is rejected.
  static BraidWord from_ints(int strands, const std::vector<int>& gens) {
    BraidWord w(strands);
    w.letters_.reserve(gens.size());
    for (int g : gens) {
      if (g == 0) throw std::invalid_argument("BraidWord: zero is not a generator");
      w.push_back(Letter{g < 0 ? -g : g, g < 0 ? -1 : +1});
    }
    return w;
  }

  int strands() const { return strands_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Letter letter) {
    check(letter);
    letters_.push_back(letter);
  }

  std::vector<int> to_ints() const {
    std::vector<int> out;
    out.reserve(letters_.size());
    for (const Letter& l : letters_) out.push_back(l.sign * l.index);
    return out;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  void check(const Letter& letter) const {
    if (letter.index < 1 || letter.index > strands_ - 1)
      throw std::invalid_argument("BraidWord: generator index out of range");
    if (letter.sign != 1 && letter.sign != -1)
      throw std::invalid_argument("BraidWord: letter sign must be +1 or -1");
  }

  int strands_;
  std::vector<Letter> letters_;
};

inline BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw std::invalid_argument("concat: strand counts differ");
  std::vector<Letter> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(letters));
}

// Formal inverse: letters reversed, signs flipped.
inline BraidWord inverse(const BraidWord& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : letters) l.sign = -l.sign;
  return BraidWord(w.strands(), std::move(letters));
}

// q^{-1} w q, built formally with no rewriting.
inline BraidWord conjugate(const BraidWord& w, const BraidWord& q) {
  return concat(concat(inverse(q), w), q);
}

// Exponent sum of the word.
inline int degree(const BraidWord& w) {
  int sum = 0;
  for (const Letter& l : w.letters()) sum += l.sign;
  return sum;
}

// sigma_c^k as a word; k may be zero (empty word) or negative.
inline BraidWord generator_power(int strands, int c, int k) {
  BraidWord w(strands);
  const int count = k < 0 ? -k : k;
  for (int i = 0; i < count; ++i) w.push_back(Letter{c, k < 0 ? -1 : +1});
  return w;
}

// Where each strand ends up. Strands are labelled 1..n by their start position
// at the top of the braid; image_of(s) is the final position of strand s.
// Words act left to right: the permutation of concat(u, v) sends s to
// v's image of u's image of s.
class StrandPermutation {
 public:
  explicit StrandPermutation(int strands) : img_(static_cast<std::size_t>(strands) + 1) {
    if (strands < 1) throw std::invalid_argument("StrandPermutation: strand count must be >= 1");
    std::iota(img_.begin(), img_.end(), 0);
  }

  int strands() const { return static_cast<int>(img_.size()) - 1; }

  int image_of(int start) const {
    if (start < 1 || start > strands()) throw std::invalid_argument("StrandPermutation: label out of range");
    return img_[static_cast<std::size_t>(start)];
  }

  void set_image(int start, int end) { img_[static_cast<std::size_t>(start)] = end; }

  bool is_identity() const {
    for (int s = 1; s <= strands(); ++s)
      if (img_[static_cast<std::size_t>(s)] != s) return false;
    return true;
  }

  // Engaged iff exactly two strands move; a bijection moving exactly two
  // points must swap them.
  std::optional<std::pair<int, int>> moved_pair() const {
    int a = 0, b = 0, moved = 0;
    for (int s = 1; s <= strands(); ++s) {
      if (img_[static_cast<std::size_t>(s)] == s) continue;
      ++moved;
      if (moved == 1) a = s;
      else if (moved == 2) b = s;
      else return std::nullopt;
    }
    if (moved != 2) return std::nullopt;
    return std::make_pair(a, b);
  }

  StrandPermutation then(const StrandPermutation& after) const {
    if (strands() != after.strands()) throw std::invalid_argument("StrandPermutation: strand counts differ");
    StrandPermutation out(strands());
    for (int s = 1; s <= strands(); ++s) out.set_image(s, after.image_of(image_of(s)));
    return out;
  }

  friend bool operator==(const StrandPermutation&, const StrandPermutation&) = default;

 private:
  std::vector<int> img_;
};

// Signed crossing counts per unordered strand pair.
class CrossingTable {
 public:
  explicit CrossingTable(int strands)
      : strands_(strands), cells_(static_cast<std::size_t>(strands) * (strands - 1) / 2, 0) {
    if (strands < 1) throw std::invalid_argument("CrossingTable: strand count must be >= 1");
  }

  int strands() const { return strands_; }

  int& at(int i, int j) { return cells_[offset(i, j)]; }
  int at(int i, int j) const { return cells_[offset(i, j)]; }

  bool all_zero() const {
    return std::all_of(cells_.begin(), cells_.end(), [](int v) { return v == 0; });
  }

  std::vector<std::pair<int, int>> nonzero_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i < strands_; ++i)
      for (int j = i + 1; j <= strands_; ++j)
        if (at(i, j) != 0) out.emplace_back(i, j);
    return out;
  }

  friend bool operator==(const CrossingTable&, const CrossingTable&) = default;

 private:
  std::size_t offset(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > strands_ || i == j) throw std::invalid_argument("CrossingTable: bad strand pair");
    const std::size_t row = static_cast<std::size_t>(i - 1);
    return row * (2 * static_cast<std::size_t>(strands_) - i) / 2 + static_cast<std::size_t>(j - i - 1);
  }

  int strands_;
  std::vector<int> cells_;
};

// The strand labels sitting at positions (index, index+1) just before a letter.
using SwitchingPair = std::pair<int, int>;

struct StrandData {
  StrandPermutation permutation;
  CrossingTable crossings;
  std::vector<SwitchingPair> switching;  // one entry per letter
};

// Single left-to-right pass over the word, tracking which strand occupies each
// position.
inline StrandData strand_data(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> occupant(static_cast<std::size_t>(n) + 1);
  std::iota(occupant.begin(), occupant.end(), 0);

  CrossingTable cr(n);
  std::vector<std::pair<int, int>> switching;
  switching.reserve(w.size());

  for (const Letter& l : w.letters()) {
    const int a = occupant[static_cast<std::size_t>(l.index)];
    const int b = occupant[static_cast<std::size_t>(l.index) + 1];
    switching.emplace_back(a, b);
    cr.at(a, b) += l.sign;
    std::swap(occupant[static_cast<std::size_t>(l.index)], occupant[static_cast<std::size_t>(l.index) + 1]);
  }

  StrandPermutation perm(n);
  for (int p = 1; p <= n; ++p) perm.set_image(occupant[static_cast<std::size_t>(p)], p);
  return {std::move(perm), std::move(cr), std::move(switching)};
}

// Removes two strands from the diagram. A letter survives iff neither of the
// strands it crosses is deleted; surviving letters are re-indexed by the number
// of deleted strands sitting at smaller positions.
inline BraidWord delete_strands(const BraidWord& w, std::pair<int, int> doomed) {
  const int n = w.strands();
  if (n < 3) throw std::invalid_argument("delete_strands: needs at least 3 strands");
  auto [a, b] = doomed;
  if (a > b) std::swap(a, b);
  if (a < 1 || b > n || a == b) throw std::invalid_argument("delete_strands: bad strand pair");

  std::vector<int> occupant(static_cast<std::size_t>(n) + 1);
  std::iota(occupant.begin(), occupant.end(), 0);
  int pos_a = a, pos_b = b;

  BraidWord out(n - 2);
  for (const Letter& l : w.letters()) {
    const int u = occupant[static_cast<std::size_t>(l.index)];
    const int v = occupant[static_cast<std::size_t>(l.index) + 1];
    if (u != a && u != b && v != a && v != b) {
      const int shift = (pos_a < l.index ? 1 : 0) + (pos_b < l.index ? 1 : 0);
      out.push_back(Letter{l.index - shift, l.sign});
    }
    std::swap(occupant[static_cast<std::size_t>(l.index)], occupant[static_cast<std::size_t>(l.index) + 1]);
    if (pos_a == l.index) pos_a = l.index + 1;
    else if (pos_a == l.index + 1) pos_a = l.index;
    if (pos_b == l.index) pos_b = l.index + 1;
    else if (pos_b == l.index + 1) pos_b = l.index;
  }
  return out;
}

}  // namespace braid
