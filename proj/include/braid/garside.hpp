#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "braid/word.hpp"

namespace braid {

// A word in the positive braid monoid: generator indices only, all exponents +1.
// Two positive words are group-equal iff they are monoid-equal, which is what
// lets the extraction procedures below decide group questions by rewriting.
class PositiveWord {
 public:
  explicit PositiveWord(int strands) : strands_(strands) {
    if (strands < 1) throw std::invalid_argument("PositiveWord: strand count must be >= 1");
  }

  PositiveWord(int strands, std::vector<int> letters) : PositiveWord(strands) {
    for (int v : letters)
      if (v < 1 || v > strands - 1) throw std::invalid_argument("PositiveWord: generator index out of range");
    letters_ = std::move(letters);
  }

  int strands() const { return strands_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<int>& letters() const { return letters_; }

  BraidWord to_braid_word() const {
    BraidWord w(strands_);
    for (int v : letters_) w.push_back(Letter{v, +1});
    return w;
  }

  static PositiveWord from_braid_word(const BraidWord& w) {
    std::vector<int> letters;
    letters.reserve(w.size());
    for (const Letter& l : w.letters()) {
      if (l.sign < 0) throw std::invalid_argument("PositiveWord: word has a negative letter");
      letters.push_back(l.index);
    }
    return PositiveWord(w.strands(), std::move(letters));
  }

  friend bool operator==(const PositiveWord&, const PositiveWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// Failure report of a letter extraction. For left extraction,
// leftmost_reachable is the leftmost position (1-based) the generator could be
// driven to; size+1 means the word contains no such generator at all. Right
// extractions mirror this: the field holds the rightmost reachable position,
// with 0 meaning no occurrence.
struct ExtractFailure {
  int leftmost_reachable = 0;
};

namespace detail {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

inline std::size_t find_letter(const std::vector<int>& w, int c, std::size_t from) {
  for (std::size_t i = from; i < w.size(); ++i)
    if (w[i] == c) return i;
  return npos;
}

// Drives one c-letter leftward to position `front` using the braid relations,
// in place. Distant letters are swapped through; an adjacent-index blocker j is
// crossed by first pulling another j next to the driven letter (recursively)
// and applying j c j = c j c. The scan always drives the leftmost literal
// occurrence, which decides left divisibility exactly: if sigma_c divides
// w[front..], the blocked-case complement argument forces the helper
// extraction to be possible as well.
//
// Returns true when w[front] == c afterwards. On failure w still spells the
// same monoid element and stuck_pos is the position the letter reached
// (w.size() when no c-letter exists).
inline bool drive_left(std::vector<int>& w, int c, std::size_t front, std::size_t& stuck_pos) {
  struct Frame {
    int target;
    std::size_t front;
    std::size_t pos;
  };

  const std::size_t start = find_letter(w, c, front);
  if (start == npos) {
    stuck_pos = w.size();
    return false;
  }

  std::vector<Frame> frames{{c, front, start}};
  while (true) {
    Frame& f = frames.back();
    if (f.pos == f.front) {
      if (frames.size() == 1) return true;
      const Frame done = f;
      frames.pop_back();
      Frame& parent = frames.back();
      // (j, c, j) -> (c, j, c) around the parent's letter
      w[parent.pos - 1] = parent.target;
      w[parent.pos] = done.target;
      w[parent.pos + 1] = parent.target;
      --parent.pos;
      continue;
    }
    const int j = w[f.pos - 1];
    if (j == f.target) {
      --f.pos;
    } else if (std::abs(j - f.target) >= 2) {
      std::swap(w[f.pos - 1], w[f.pos]);
      --f.pos;
    } else {
      const std::size_t helper = find_letter(w, j, f.pos + 1);
      if (helper == npos) {
        stuck_pos = frames.front().pos;
        return false;
      }
      frames.push_back({j, f.pos + 1, helper});
    }
  }
}

struct DriveWordResult {
  bool ok = false;
  std::size_t done = 0;       // target letters extracted before failing
  std::size_t stuck_pos = 0;  // stuck position of the first target letter, when done == 0
};

// Extracts target letters, in order, to the front of w[begin..).
inline DriveWordResult drive_word_left(std::vector<int>& w, const std::vector<int>& target, std::size_t begin) {
  for (std::size_t k = 0; k < target.size(); ++k) {
    std::size_t stuck = 0;
    if (!drive_left(w, target[k], begin + k, stuck)) return {false, k, stuck};
  }
  return {true, target.size(), 0};
}

// Rewrites w to the lexicographically least word of its monoid class: at each
// position, greedily extract the smallest generator that left-divides the rest.
// Only generators smaller than the current first letter need probing.
inline void lex_minimize(std::vector<int>& w) {
  std::size_t begin = 0;
  std::size_t ignore = 0;
  while (begin < w.size()) {
    const int first = w[begin];
    for (int c = 1; c < first; ++c)
      if (drive_left(w, c, begin, ignore)) break;
    ++begin;
  }
}

}  // namespace detail

// The fundamental braid word Delta_n, spelled (s1)(s2 s1)(s3 s2 s1)...; length
// n(n-1)/2, inducing the order-reversing strand permutation.
inline PositiveWord delta_word(int n) {
  if (n < 1) throw std::invalid_argument("delta_word: strands must be >= 1");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int k = 1; k <= n - 1; ++k)
    for (int j = k; j >= 1; --j) letters.push_back(j);
  return PositiveWord(n, std::move(letters));
}

struct LetterExtractResult {
  std::optional<PositiveWord> word;
  ExtractFailure failure{};
  bool ok() const { return word.has_value(); }
};

struct WordExtractResult {
  std::optional<PositiveWord> word;
  std::size_t letters_extracted = 0;
  ExtractFailure failure{};  // set when the very first target letter failed
  bool ok() const { return word.has_value(); }
};

// Rewrites p so that sigma_i is its first letter, when possible.
inline LetterExtractResult letter_extract_left(const PositiveWord& p, int i) {
  if (i < 1 || i > p.strands() - 1) throw std::invalid_argument("letter_extract_left: index out of range");
  std::vector<int> buf = p.letters();
  std::size_t stuck = 0;
  if (detail::drive_left(buf, i, 0, stuck))
    return {PositiveWord(p.strands(), std::move(buf)), {}};
  return {std::nullopt, {static_cast<int>(stuck) + 1}};
}

// Mirror image: rewrites p so that sigma_i is its last letter. On failure the
// report holds the rightmost reachable position (0 when no occurrence).
inline LetterExtractResult letter_extract_right(const PositiveWord& p, int i) {
  if (i < 1 || i > p.strands() - 1) throw std::invalid_argument("letter_extract_right: index out of range");
  std::vector<int> buf(p.letters().rbegin(), p.letters().rend());
  std::size_t stuck = 0;
  if (detail::drive_left(buf, i, 0, stuck)) {
    std::reverse(buf.begin(), buf.end());
    return {PositiveWord(p.strands(), std::move(buf)), {}};
  }
  return {std::nullopt, {static_cast<int>(buf.size() - stuck)}};
}

// Rewrites w as prefix . rest with the prefix letter-for-letter as given.
inline WordExtractResult word_extract_left(const PositiveWord& w, const PositiveWord& prefix) {
  if (w.strands() != prefix.strands()) throw std::invalid_argument("word_extract_left: strand counts differ");
  std::vector<int> buf = w.letters();
  const detail::DriveWordResult res = detail::drive_word_left(buf, prefix.letters(), 0);
  if (res.ok) return {PositiveWord(w.strands(), std::move(buf)), res.done, {}};
  return {std::nullopt, res.done, {res.done == 0 ? static_cast<int>(res.stuck_pos) + 1 : 0}};
}

// Rewrites w as rest . suffix with the suffix letter-for-letter as given.
inline WordExtractResult word_extract_right(const PositiveWord& w, const PositiveWord& suffix) {
  if (w.strands() != suffix.strands()) throw std::invalid_argument("word_extract_right: strand counts differ");
  std::vector<int> buf(w.letters().rbegin(), w.letters().rend());
  std::vector<int> target(suffix.letters().rbegin(), suffix.letters().rend());
  const detail::DriveWordResult res = detail::drive_word_left(buf, target, 0);
  if (res.ok) {
    std::reverse(buf.begin(), buf.end());
    return {PositiveWord(w.strands(), std::move(buf)), res.done, {}};
  }
  return {std::nullopt, res.done, {res.done == 0 ? static_cast<int>(buf.size() - res.stuck_pos) : 0}};
}

// Canonical form Delta^{-r} . P with r minimal and P the lexicographically
// least positive spelling of its monoid element.
struct NormalForm {
  int strands = 1;
  int r = 0;
  PositiveWord positive{1};
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Normalization, cubic in the word length:
//   1. free reduction;
//   2. each sigma_i^{-1} becomes Delta^{-1} A_i (where Delta = A_i sigma_i),
//      and Delta^{-1} factors move left through positive letters via the flip
//      automorphism tau: sigma_i -> sigma_{n-i};
//   3. r is minimized by stripping Delta from the front while it divides P;
//   4. P is rewritten to its lex-least spelling.
inline NormalForm normalize(const BraidWord& w) {
  const int n = w.strands();

  std::vector<int> reduced;
  reduced.reserve(w.size());
  for (const Letter& l : w.letters()) {
    const int g = l.sign * l.index;
    if (!reduced.empty() && reduced.back() == -g) reduced.pop_back();
    else reduced.push_back(g);
  }

  const std::vector<int> delta = delta_word(n).letters();

  // A_i per generator, computed on demand from Delta = A_i sigma_i.
  std::vector<std::optional<std::vector<int>>> a_words(static_cast<std::size_t>(n));
  auto a_word = [&](int i) -> const std::vector<int>& {
    std::optional<std::vector<int>>& slot = a_words[static_cast<std::size_t>(i)];
    if (!slot) {
      std::vector<int> buf(delta.rbegin(), delta.rend());
      std::size_t stuck = 0;
      detail::drive_left(buf, i, 0, stuck);  // every generator divides Delta on both sides
      slot = std::vector<int>(buf.rbegin(), buf.rend() - 1);
    }
    return *slot;
  };

  int r = 0;
  std::vector<int> p;
  for (int g : reduced) {
    if (g > 0) {
      p.push_back(g);
      continue;
    }
    ++r;
    for (int& v : p) v = n - v;  // x Delta^{-1} = Delta^{-1} tau(x)
    const std::vector<int>& a = a_word(-g);
    p.insert(p.end(), a.begin(), a.end());
  }

  while (r > 0 && !delta.empty()) {
    if (p.size() < delta.size()) break;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : p) seen[static_cast<std::size_t>(v)] = 1;
    bool full_support = true;
    for (int i = 1; i <= n - 1; ++i) full_support = full_support && seen[static_cast<std::size_t>(i)];
    if (!full_support) break;  // Delta needs every generator

    std::vector<int> attempt = p;
    if (!detail::drive_word_left(attempt, delta, 0).ok) break;
    attempt.erase(attempt.begin(), attempt.begin() + static_cast<std::ptrdiff_t>(delta.size()));
    p = std::move(attempt);
    --r;
  }

  detail::lex_minimize(p);
  return NormalForm{n, r, PositiveWord(n, std::move(p))};
}

// Flat word for a normal form: r copies of Delta^{-1} then the positive part.
// Every negative letter precedes every positive letter.
inline BraidWord expand_to_word(const NormalForm& nf) {
  BraidWord out(nf.strands);
  const std::vector<int> delta = delta_word(nf.strands).letters();
  for (int copy = 0; copy < nf.r; ++copy)
    for (auto it = delta.rbegin(); it != delta.rend(); ++it) out.push_back(Letter{*it, -1});
  for (int v : nf.positive.letters()) out.push_back(Letter{v, +1});
  return out;
}

// Word problem. Degree, permutation and crossing counts reject most
// non-identities before the normal form is computed.
inline bool is_identity(const BraidWord& w) {
  if (w.empty()) return true;
  if (degree(w) != 0) return false;
  const StrandData sd = strand_data(w);
  if (!sd.permutation.is_identity()) return false;
  if (!sd.crossings.all_zero()) return false;
  const NormalForm nf = normalize(w);
  return nf.r == 0 && nf.positive.empty();
}

inline bool equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw std::invalid_argument("equal: strand counts differ");
  return is_identity(concat(u, inverse(v)));
}

}  // namespace braid
