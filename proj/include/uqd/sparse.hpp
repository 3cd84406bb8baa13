#pragma once

#include "uqd/cyclotomic.hpp"
#include "uqd/monomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace uqd {

/// Sparse linear combination over a basis indexed by Key. Zero
/// coefficients are never stored.
template <class Key, class Hash>
class SparseTerms {
 public:
  using Map = std::unordered_map<Key, CycScalar, Hash>;

  void add(const Key& k, const CycScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const SparseTerms& o) {
    if (&o == this) return add(SparseTerms(o));
    for (const auto& [k, c] : o.terms_) add(k, c);
  }
  void add_scaled(const SparseTerms& o, const CycScalar& s) {
    if (&o == this) return add_scaled(SparseTerms(o), s);
    for (const auto& [k, c] : o.terms_) add(k, c * s);
  }
  void scale(const CycScalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return;
    }
    for (auto& [k, c] : terms_) c *= s;
  }

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  void reserve(std::size_t n) { terms_.reserve(n); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  const CycScalar* find(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? nullptr : &it->second;
  }

  /// Terms sorted by key, for deterministic output.
  std::vector<std::pair<Key, CycScalar>> sorted() const {
    std::vector<std::pair<Key, CycScalar>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  /// Audit hook: true iff no stored coefficient is zero.
  bool hygienic() const {
    return std::none_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_zero(); });
  }

  friend bool operator==(const SparseTerms& a, const SparseTerms& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [k, c] : a.terms_) {
      const CycScalar* o = b.find(k);
      if (!o || !(*o == c)) return false;
    }
    return true;
  }

 private:
  Map terms_;
};

/// Element of an algebra over the Monomial basis.
using Element = SparseTerms<Monomial, MonomialHash>;

/// Element of a k-fold tensor power.
class TensorElement {
 public:
  explicit TensorElement(int arity) : arity_(arity) {
    if (arity < 1 || arity > kMaxArity) throw std::invalid_argument("TensorElement arity out of range");
  }

  int arity() const { return arity_; }
  void add(const TensorKey& k, const CycScalar& c) { terms_.add(k, c); }
  void add(const TensorElement& o) {
    check_arity(o);
    terms_.add(o.terms_);
  }
  void add_scaled(const TensorElement& o, const CycScalar& s) {
    check_arity(o);
    terms_.add_scaled(o.terms_, s);
  }
  void scale(const CycScalar& s) { terms_.scale(s); }
  void reserve(std::size_t n) { terms_.reserve(n); }

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const CycScalar* find(const TensorKey& k) const { return terms_.find(k); }
  std::vector<std::pair<TensorKey, CycScalar>> sorted() const { return terms_.sorted(); }
  bool hygienic() const { return terms_.hygienic(); }

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  void check_arity(const TensorElement& o) const {
    if (o.arity_ != arity_) {
      throw std::invalid_argument("tensor arity mismatch: " + std::to_string(arity_) + " vs " +
                                  std::to_string(o.arity_));
    }
  }

 private:
  int arity_;
  SparseTerms<TensorKey, TensorKeyHash> terms_;
};

/// a - b for any sparse container with add_scaled.
template <class T>
T difference(T a, const T& b, const CycField& f) {
  a.add_scaled(b, -CycScalar::one(f));
  return a;
}

/// Embeds an Element as an arity-1 tensor and back.
TensorElement as_tensor(const Element& x);
Element as_element(const TensorElement& x);

/// Pure tensor x_0 ⊗ ... ⊗ x_{k-1}.
TensorElement tensor_of(const std::vector<Element>& factors);

}  // namespace uqd
