#pragma once

#include "uqd/algebra.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

namespace uqd {

inline constexpr int kMaxLabelDims = 4;

/// The finite group (Z/N)^d, elements packed little-endian in base N.
class LabelGroup {
 public:
  LabelGroup(int dims, std::uint32_t modulus);

  int dims() const { return dims_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return size_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t digit(std::uint32_t a, int i) const;
  std::uint32_t make(const std::array<long, kMaxLabelDims>& digits) const;
  friend bool operator==(const LabelGroup&, const LabelGroup&) = default;

 private:
  int dims_;
  std::uint32_t modulus_;
  std::uint32_t size_;
  std::array<std::uint32_t, kMaxLabelDims> place_{};
};

/// Diagonal tensor sum_{z_1..z_k} q^{E(z)} 1_{z_1} ⊗ ... ⊗ 1_{z_k} over a
/// label group, with E valued in Z/m. Entries are evaluated lazily through
/// an expression tree, so products, inverses and slot maps of large
/// diagonal tensors cost nothing until compared.
class PhaseTensor {
 public:
  using Index = std::array<std::uint32_t, kMaxArity>;
  struct Node {
    virtual ~Node() = default;
    virtual std::uint32_t exponent(const Index& idx) const = 0;
  };

  static PhaseTensor from_function(const CycField& f, LabelGroup g, int arity, std::function<long(const Index&)> e);
  static PhaseTensor trivial(const CycField& f, LabelGroup g, int arity);

  const CycField& field() const { return *field_; }
  const LabelGroup& group() const { return group_; }
  int arity() const { return arity_; }
  std::uint64_t entry_count() const;
  std::uint32_t exponent(const Index& idx) const { return node_->exponent(idx); }
  CycScalar coefficient(const Index& idx) const { return CycScalar::zeta_pow(*field_, exponent(idx)); }

  PhaseTensor operator*(const PhaseTensor& o) const;
  PhaseTensor inverse() const;
  /// Coproduct of the label group algebra on one slot (arity + 1).
  PhaseTensor coproduct_on_slot(int slot) const;
  /// Counit on one slot (arity - 1).
  PhaseTensor counit_on_slot(int slot) const;
  /// Inserts a unit factor at the given slot (arity + 1).
  PhaseTensor unit_on_slot(int slot) const;
  /// Reads the tensor on a finer label group through a homomorphism.
  PhaseTensor pullback(const LabelGroup& finer, std::function<std::uint32_t(std::uint32_t)> project) const;
  /// Evaluates every entry into a table.
  PhaseTensor materialize() const;
  /// Copy with one entry's exponent replaced (negative controls).
  PhaseTensor with_entry(const Index& idx, std::uint32_t exponent) const;

  /// Sparse form over an algebra in the idempotent basis whose Cartan
  /// labels are this label group.
  TensorElement to_tensor() const;

  /// Calls f on every index in lexicographic order.
  void for_each_index(const std::function<void(const Index&)>& f) const;

 private:
  PhaseTensor(const CycField& f, LabelGroup g, int arity, std::shared_ptr<const Node> n)
      : field_(&f), group_(g), arity_(arity), node_(std::move(n)) {}

  const CycField* field_;
  LabelGroup group_;
  int arity_;
  std::shared_ptr<const Node> node_;
};

struct PhaseMismatch {
  PhaseTensor::Index index;
  std::uint32_t lhs;
  std::uint32_t rhs;
};

/// First index where the two tensors differ; jobs > 1 splits the first
/// slot across threads (the reported index is the smallest either way).
std::optional<PhaseMismatch> first_mismatch(const PhaseTensor& a, const PhaseTensor& b, int jobs = 1);

}  // namespace uqd
