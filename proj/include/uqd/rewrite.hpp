#pragma once

#include "uqd/cyclotomic.hpp"
#include "uqd/lie_data.hpp"
#include "uqd/monomial.hpp"
#include "uqd/sparse.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace uqd {

using PbwExp = std::array<std::uint16_t, kMaxRoots>;

/// Linear combination of letter words.
struct WordTerm {
  std::vector<int> letters;
  CycScalar coeff;
};
using WordSum = std::vector<WordTerm>;

/// A root-vector letter of the PBW basis.
struct PbwLetter {
  std::string name;
  std::array<int, kMaxRank> weight{};
  int nilpotency = 0;  // letter^nilpotency = 0
  /// Expression in the simple generators e_0..e_{r-1}; word entries are
  /// simple-root indices, not letter indices.
  WordSum definition;
};

/// Straightening rules for the root-vector subalgebra B: words over the
/// ordered letters are rewritten to nondecreasing normal words
/// l_0^{k_0} l_1^{k_1} ... with k_i < nilpotency(l_i).
///
/// Every out-of-order adjacent pair (b, a), b > a, must carry a rule
/// b a -> sum c w. Products are computed by peeling the last letter of the
/// left factor, so the rule set must strictly decrease the word order.
class RewriteSystem {
 public:
  using Rules = std::map<std::pair<int, int>, WordSum>;

  RewriteSystem(const CycField& f, std::vector<PbwLetter> letters, Rules rules);

  const CycField& field() const { return *field_; }
  int letter_count() const { return static_cast<int>(letters_.size()); }
  const PbwLetter& letter(int i) const { return letters_[i]; }
  const Rules& rules() const { return rules_; }
  /// Index of the letter equal to the simple generator e_i.
  int simple_letter(int i) const { return simple_letters_.at(i); }

  /// Number of normal words.
  std::uint64_t dimension() const;
  std::array<int, kMaxRank> weight(const PbwExp& x) const;
  std::vector<int> word(const PbwExp& x) const;

  /// Normal form of x * (letter a). Results are memoized.
  const Element& multiply_letter(const PbwExp& x, int a) const;
  /// Normal form of x * y; memoized up to a bounded cache.
  Element multiply(const PbwExp& x, const PbwExp& y) const;
  /// Normal form of an arbitrary letter word.
  Element normal_form(const std::vector<int>& word) const;

  /// Copy with one rule replaced (used for harness negative controls).
  std::shared_ptr<RewriteSystem> with_rule(std::pair<int, int> pair, WordSum replacement) const;

 private:
  Element right_multiply(const Element& x, int a) const;

  const CycField* field_;
  std::vector<PbwLetter> letters_;
  Rules rules_;
  std::vector<int> simple_letters_;

  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::uint64_t, std::unique_ptr<Element>> letter_cache_;
  mutable std::unordered_map<std::uint64_t, Element> product_cache_;
  static constexpr std::size_t kProductCacheLimit = 200000;
};

/// Standard PBW data for u_q(b) of the given type at q = zeta_{n^2}:
/// A1: letter e; A2: letters e1 < E12 < e2 with E12 = e1 e2 - q^{-1} e2 e1.
std::shared_ptr<RewriteSystem> standard_pbw(const LieDatum& datum, int n);

/// Rewrite system with no letters (pure group algebras).
std::shared_ptr<RewriteSystem> empty_pbw(const CycField& f);

}  // namespace uqd
