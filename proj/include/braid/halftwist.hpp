#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "braid/garside.hpp"
#include "braid/word.hpp"

namespace braid {

enum class FalseReason {
  WrongPermutation,
  WrongCrossingTable,
  ResidueNotIdentity,
  ZeroDegreeNonIdentity,
};

inline const char* to_string(FalseReason r) {
  switch (r) {
    case FalseReason::WrongPermutation: return "WrongPermutation";
    case FalseReason::WrongCrossingTable: return "WrongCrossingTable";
    case FalseReason::ResidueNotIdentity: return "ResidueNotIdentity";
    case FalseReason::ZeroDegreeNonIdentity: return "ZeroDegreeNonIdentity";
  }
  return "?";
}

// A verifiable positive answer: conjugate(w, conjugator) equals
// sigma_generator^power for the word w the witness was issued for.
struct HalfTwistWitness {
  int generator = 1;
  int power = 0;
  BraidWord conjugator{1};
};

// Three-valued check result. True carries a witness; GenuineFalse is backed by
// a conjugacy invariant and therefore certain; plain False is not.
class CheckOutcome {
 public:
  enum class Kind { True, GenuineFalse, False };

  static CheckOutcome truth(HalfTwistWitness witness, int tries = 1) {
    CheckOutcome o;
    o.kind_ = Kind::True;
    o.witness_ = std::move(witness);
    o.tries_ = tries;
    return o;
  }

  static CheckOutcome genuine_false(FalseReason reason, int tries = 1) {
    CheckOutcome o;
    o.kind_ = Kind::GenuineFalse;
    o.reason_ = reason;
    o.tries_ = tries;
    return o;
  }

  static CheckOutcome unknown_false(int tries) {
    CheckOutcome o;
    o.kind_ = Kind::False;
    o.tries_ = tries;
    return o;
  }

  Kind kind() const { return kind_; }
  bool is_true() const { return kind_ == Kind::True; }
  bool is_genuine_false() const { return kind_ == Kind::GenuineFalse; }

  const HalfTwistWitness& witness() const {
    if (!witness_) throw std::logic_error("CheckOutcome: no witness");
    return *witness_;
  }

  FalseReason reason() const {
    if (!reason_) throw std::logic_error("CheckOutcome: no reason");
    return *reason_;
  }

  int tries() const { return tries_; }

 private:
  Kind kind_ = Kind::False;
  std::optional<HalfTwistWitness> witness_;
  std::optional<FalseReason> reason_;
  int tries_ = 1;
};

struct IsHalfTwistOptions {
  bool use_prechecks = true;
  bool use_skip_table = true;
};

// Split positions proven unreachable by earlier failed extractions, one bound
// per generator and direction. Confined to a single is_half_twist invocation.
struct SkipTable {
  std::vector<std::size_t> min_split_right;
  std::vector<std::size_t> min_split_left;
  explicit SkipTable(int strands)
      : min_split_right(static_cast<std::size_t>(strands), 0),
        min_split_left(static_cast<std::size_t>(strands), 0) {}
};

// Outcome of the cheap invariant tests; on pass, carries the strand pair that
// a power of a generator conjugate to w would have to switch.
struct PrecheckResult {
  std::optional<FalseReason> rejected;
  std::pair<int, int> pair{0, 0};
  bool passed() const { return !rejected.has_value(); }
};

// Conjugacy-invariant rejections for "w conjugate to sigma_i^k":
//  1. the permutation must be the identity (k even) or a single transposition
//     (k odd);
//  2. for even k exactly one strand pair may have a nonzero crossing count,
//     and that count must be k;
//  3. deleting the distinguished pair must leave the identity of B_{n-2}.
inline PrecheckResult precheck(const BraidWord& w, int k) {
  if (k < 1) throw std::invalid_argument("precheck: k must be >= 1");
  const StrandData sd = strand_data(w);

  std::pair<int, int> pair{0, 0};
  if (k % 2 == 0) {
    if (!sd.permutation.is_identity()) return {FalseReason::WrongPermutation, {}};
    const std::vector<std::pair<int, int>> nz = sd.crossings.nonzero_pairs();
    if (nz.size() != 1 || sd.crossings.at(nz[0].first, nz[0].second) != k)
      return {FalseReason::WrongCrossingTable, {}};
    pair = nz[0];
  } else {
    const std::optional<std::pair<int, int>> moved = sd.permutation.moved_pair();
    if (!moved) return {FalseReason::WrongPermutation, {}};
    pair = *moved;
  }

  if (w.strands() >= 3) {
    if (!is_identity(delete_strands(w, pair))) return {FalseReason::ResidueNotIdentity, {}};
  }
  return {std::nullopt, pair};
}

namespace detail {

// Right-extracts `count` copies of gen from word[0..split), returning the
// rewritten prefix on success. first_fail / stuck report the very first letter
// failing, which feeds the skip table.
struct SideExtract {
  bool ok = false;
  bool first_fail = false;
  std::size_t stuck = 0;
  std::vector<int> rewritten;
};

inline SideExtract extract_block_right(const std::vector<int>& word, std::size_t split, int gen, int count) {
  SideExtract out;
  std::vector<int> buf(word.rend() - static_cast<std::ptrdiff_t>(split), word.rend());
  for (int j = 0; j < count; ++j) {
    std::size_t stuck = 0;
    if (!drive_left(buf, gen, static_cast<std::size_t>(j), stuck)) {
      out.first_fail = (j == 0);
      out.stuck = stuck;
      return out;
    }
  }
  std::reverse(buf.begin(), buf.end());
  out.ok = true;
  out.rewritten = std::move(buf);
  return out;
}

inline SideExtract extract_block_left(const std::vector<int>& word, std::size_t split, int gen, int count) {
  SideExtract out;
  std::vector<int> buf(word.begin() + static_cast<std::ptrdiff_t>(split), word.end());
  for (int j = 0; j < count; ++j) {
    std::size_t stuck = 0;
    if (!drive_left(buf, gen, static_cast<std::size_t>(j), stuck)) {
      out.first_fail = (j == 0);
      out.stuck = stuck;
      return out;
    }
  }
  out.ok = true;
  out.rewritten = std::move(buf);
  return out;
}

}  // namespace detail

// The deterministic core check: tries to rewrite w (an expanded normal form,
// negatives before positives) as q^{-1} sigma_i^k q. For every generator i,
// every split of sigma_i^k into a left part sigma_i^t and right part
// sigma_i^{k-t}, and every split position p of the positive segment, the left
// part is extracted to the right of the prefix and the right part to the left
// of the suffix; when both succeed and the leftover Test word is the identity,
// the suffix remainder inverts into a verified conjugator.
//
// A failed extraction rules out a run of nearby split positions: a right
// extraction cannot succeed again before the next literal sigma_i enters the
// prefix, and a left extraction cannot succeed while the suffix starts right of
// the reported reachable position. The skip table records both bounds.
inline CheckOutcome is_half_twist(const BraidWord& w, int k, IsHalfTwistOptions opt = {}) {
  if (k < 1) throw std::invalid_argument("is_half_twist: k must be >= 1");
  const int n = w.strands();

  std::size_t ipos = w.size();  // index of the first positive letter
  for (std::size_t idx = 0; idx < w.size(); ++idx) {
    if (w[idx].sign > 0) {
      if (ipos == w.size()) ipos = idx;
    } else if (ipos != w.size()) {
      throw std::invalid_argument("is_half_twist: word is not an expanded normal form");
    }
  }

  std::pair<int, int> dpair{0, 0};
  if (opt.use_prechecks) {
    const PrecheckResult pre = precheck(w, k);
    if (!pre.passed()) return CheckOutcome::genuine_false(*pre.rejected);
    dpair = pre.pair;
  }

  std::vector<int> positive;
  positive.reserve(w.size() - ipos);
  for (std::size_t idx = ipos; idx < w.size(); ++idx) positive.push_back(w[idx].index);
  const std::size_t plen = positive.size();

  // strand occupancy after the negative block
  std::vector<int> occ0(static_cast<std::size_t>(n) + 1);
  for (int s = 0; s <= n; ++s) occ0[static_cast<std::size_t>(s)] = s;
  for (std::size_t idx = 0; idx < ipos; ++idx) {
    const int ix = w[idx].index;
    std::swap(occ0[static_cast<std::size_t>(ix)], occ0[static_cast<std::size_t>(ix) + 1]);
  }

  BraidWord negatives(n);
  for (std::size_t idx = 0; idx < ipos; ++idx) negatives.push_back(w[idx]);

  SkipTable skip(n);
  for (int gen = 1; gen <= n - 1; ++gen) {
    std::size_t& min_split_right = skip.min_split_right[static_cast<std::size_t>(gen)];
    std::size_t& min_split_left = skip.min_split_left[static_cast<std::size_t>(gen)];

    for (int t = 0; t <= k; ++t) {
      std::vector<int> occ = occ0;
      for (std::size_t split = 0; split <= plen; ++split) {
        if (split > 0) {
          const int ix = positive[split - 1];
          std::swap(occ[static_cast<std::size_t>(ix)], occ[static_cast<std::size_t>(ix) + 1]);
        }

        if (opt.use_prechecks) {
          const int u = occ[static_cast<std::size_t>(gen)];
          const int v = occ[static_cast<std::size_t>(gen) + 1];
          const bool switches = (u == dpair.first && v == dpair.second) || (u == dpair.second && v == dpair.first);
          if (!switches) continue;  // sigma_gen^k here would switch the wrong strands
        }

        if (opt.use_skip_table) {
          if (t >= 1 && split < min_split_right) continue;
          if (k - t >= 1 && split < min_split_left) continue;
        }

        std::vector<int> left_part;   // rewritten prefix, ending in gen^t
        std::vector<int> right_part;  // rewritten suffix, starting with gen^{k-t}
        if (t >= 1) {
          detail::SideExtract res = detail::extract_block_right(positive, split, gen, t);
          if (!res.ok) {
            if (res.first_fail) {
              const std::size_t next = detail::find_letter(positive, gen, split);
              min_split_right = (next == detail::npos) ? plen + 1 : next + 1;
            }
            continue;
          }
          left_part = std::move(res.rewritten);
        } else {
          left_part.assign(positive.begin(), positive.begin() + static_cast<std::ptrdiff_t>(split));
        }

        if (k - t >= 1) {
          detail::SideExtract res = detail::extract_block_left(positive, split, gen, k - t);
          if (!res.ok) {
            if (res.first_fail)
              min_split_left = (res.stuck == plen - split) ? plen + 1 : split + res.stuck;
            continue;
          }
          right_part = std::move(res.rewritten);
        } else {
          right_part.assign(positive.begin() + static_cast<std::ptrdiff_t>(split), positive.end());
        }

        BraidWord test = negatives;
        for (std::size_t j = 0; j + static_cast<std::size_t>(t) < left_part.size(); ++j)
          test.push_back(Letter{left_part[j], +1});
        BraidWord remainder(n);
        for (std::size_t j = static_cast<std::size_t>(k - t); j < right_part.size(); ++j)
          remainder.push_back(Letter{right_part[j], +1});
        for (const Letter& l : remainder.letters()) test.push_back(l);

        if (is_identity(test)) return CheckOutcome::truth({gen, k, inverse(remainder)});
      }
    }
  }
  return CheckOutcome::unknown_false(1);
}

// Executable form of the soundness contract.
inline bool verify_witness(const BraidWord& w, const HalfTwistWitness& witness) {
  if (witness.conjugator.strands() != w.strands()) return false;
  if (witness.power != 0 && (witness.generator < 1 || witness.generator > w.strands() - 1)) return false;
  return equal(conjugate(w, witness.conjugator), generator_power(w.strands(), witness.generator, witness.power));
}

}  // namespace braid
