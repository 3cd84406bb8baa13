#include "uqd/phase_tensor.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace uqd {

LabelGroup::LabelGroup(int dims, std::uint32_t modulus) : dims_(dims), modulus_(modulus), size_(1) {
  if (dims < 1 || dims > kMaxLabelDims) throw std::invalid_argument("label group dimension out of range");
  for (int i = 0; i < dims; ++i) {
    place_[i] = size_;
    size_ *= modulus;
  }
}

std::uint32_t LabelGroup::digit(std::uint32_t a, int i) const { return (a / place_[i]) % modulus_; }

std::uint32_t LabelGroup::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0;
  for (int i = 0; i < dims_; ++i) r += ((digit(a, i) + digit(b, i)) % modulus_) * place_[i];
  return r;
}

std::uint32_t LabelGroup::neg(std::uint32_t a) const {
  std::uint32_t r = 0;
  for (int i = 0; i < dims_; ++i) r += ((modulus_ - digit(a, i)) % modulus_) * place_[i];
  return r;
}

std::uint32_t LabelGroup::make(const std::array<long, kMaxLabelDims>& digits) const {
  std::uint32_t r = 0;
  const long m = modulus_;
  for (int i = 0; i < dims_; ++i) r += static_cast<std::uint32_t>(((digits[i] % m) + m) % m) * place_[i];
  return r;
}

namespace {

using Index = PhaseTensor::Index;
using NodePtr = std::shared_ptr<const PhaseTensor::Node>;

struct FunctionNode : PhaseTensor::Node {
  std::function<long(const Index&)> f;
  long m;
  std::uint32_t exponent(const Index& i) const override {
    const long e = f(i) % m;
    return static_cast<std::uint32_t>(e < 0 ? e + m : e);
  }
};

struct TableNode : PhaseTensor::Node {
  std::vector<std::uint16_t> table;
  std::uint32_t size;
  int arity;
  std::size_t flat(const Index& i) const {
    std::size_t k = 0;
    for (int s = 0; s < arity; ++s) k = k * size + i[s];
    return k;
  }
  std::uint32_t exponent(const Index& i) const override { return table[flat(i)]; }
};

struct ProductNode : PhaseTensor::Node {
  NodePtr a, b;
  std::uint32_t m;
  std::uint32_t exponent(const Index& i) const override { return (a->exponent(i) + b->exponent(i)) % m; }
};

struct InverseNode : PhaseTensor::Node {
  NodePtr a;
  std::uint32_t m;
  std::uint32_t exponent(const Index& i) const override { return (m - a->exponent(i)) % m; }
};

struct CoproductNode : PhaseTensor::Node {
  NodePtr a;
  LabelGroup g;
  int slot;
  int arity;  // of the result
  CoproductNode(NodePtr a, LabelGroup g, int slot, int arity) : a(std::move(a)), g(g), slot(slot), arity(arity) {}
  std::uint32_t exponent(const Index& i) const override {
    Index j{};
    for (int s = 0, t = 0; s < arity; ++s, ++t) {
      if (s == slot) {
        j[t] = g.add(i[s], i[s + 1]);
        ++s;
      } else {
        j[t] = i[s];
      }
    }
    return a->exponent(j);
  }
};

struct CounitNode : PhaseTensor::Node {
  NodePtr a;
  int slot;
  int arity;  // of the result
  std::uint32_t exponent(const Index& i) const override {
    Index j{};
    for (int s = 0, t = 0; t <= arity; ++t) j[t] = t == slot ? 0 : i[s++];
    return a->exponent(j);
  }
};

struct UnitNode : PhaseTensor::Node {
  NodePtr a;
  int slot;
  int arity;  // of the result
  std::uint32_t exponent(const Index& i) const override {
    Index j{};
    for (int s = 0, t = 0; s < arity; ++s) {
      if (s != slot) j[t++] = i[s];
    }
    return a->exponent(j);
  }
};

struct PullbackNode : PhaseTensor::Node {
  NodePtr a;
  std::vector<std::uint32_t> project;
  int arity;
  std::uint32_t exponent(const Index& i) const override {
    Index j{};
    for (int s = 0; s < arity; ++s) j[s] = project[i[s]];
    return a->exponent(j);
  }
};

struct OverrideNode : PhaseTensor::Node {
  NodePtr a;
  Index at;
  std::uint32_t value;
  int arity;
  std::uint32_t exponent(const Index& i) const override {
    for (int s = 0; s < arity; ++s) {
      if (i[s] != at[s]) return a->exponent(i);
    }
    return value;
  }
};

}  // namespace

PhaseTensor PhaseTensor::from_function(const CycField& f, LabelGroup g, int arity, std::function<long(const Index&)> e) {
  if (arity < 1 || arity > kMaxArity) throw std::invalid_argument("phase tensor arity out of range");
  auto n = std::make_shared<FunctionNode>();
  n->f = std::move(e);
  n->m = f.order();
  return PhaseTensor(f, g, arity, n);
}

PhaseTensor PhaseTensor::trivial(const CycField& f, LabelGroup g, int arity) {
  return from_function(f, g, arity, [](const Index&) { return 0L; });
}

std::uint64_t PhaseTensor::entry_count() const {
  std::uint64_t c = 1;
  for (int s = 0; s < arity_; ++s) c *= group_.size();
  return c;
}

PhaseTensor PhaseTensor::operator*(const PhaseTensor& o) const {
  if (!(group_ == o.group_) || arity_ != o.arity_ || field_ != o.field_) {
    throw std::invalid_argument("phase tensor shape mismatch");
  }
  auto n = std::make_shared<ProductNode>();
  n->a = node_;
  n->b = o.node_;
  n->m = field_->order();
  return PhaseTensor(*field_, group_, arity_, n);
}

PhaseTensor PhaseTensor::inverse() const {
  auto n = std::make_shared<InverseNode>();
  n->a = node_;
  n->m = field_->order();
  return PhaseTensor(*field_, group_, arity_, n);
}

PhaseTensor PhaseTensor::coproduct_on_slot(int slot) const {
  if (slot < 0 || slot >= arity_ || arity_ + 1 > kMaxArity) throw std::invalid_argument("bad coproduct slot");
  return PhaseTensor(*field_, group_, arity_ + 1, std::make_shared<CoproductNode>(node_, group_, slot, arity_ + 1));
}

PhaseTensor PhaseTensor::counit_on_slot(int slot) const {
  if (slot < 0 || slot >= arity_ || arity_ < 2) throw std::invalid_argument("bad counit slot");
  auto n = std::make_shared<CounitNode>();
  n->a = node_;
  n->slot = slot;
  n->arity = arity_ - 1;
  return PhaseTensor(*field_, group_, arity_ - 1, n);
}

PhaseTensor PhaseTensor::unit_on_slot(int slot) const {
  if (slot < 0 || slot > arity_ || arity_ + 1 > kMaxArity) throw std::invalid_argument("bad unit slot");
  auto n = std::make_shared<UnitNode>();
  n->a = node_;
  n->slot = slot;
  n->arity = arity_ + 1;
  return PhaseTensor(*field_, group_, arity_ + 1, n);
}

PhaseTensor PhaseTensor::pullback(const LabelGroup& finer, std::function<std::uint32_t(std::uint32_t)> project) const {
  auto n = std::make_shared<PullbackNode>();
  n->a = node_;
  n->arity = arity_;
  n->project.resize(finer.size());
  for (std::uint32_t z = 0; z < finer.size(); ++z) {
    n->project[z] = project(z);
    if (n->project[z] >= group_.size()) throw std::invalid_argument("pullback projects outside the label group");
  }
  return PhaseTensor(*field_, finer, arity_, n);
}

PhaseTensor PhaseTensor::materialize() const {
  auto n = std::make_shared<TableNode>();
  n->size = group_.size();
  n->arity = arity_;
  n->table.reserve(entry_count());
  for_each_index([&](const Index& i) { n->table.push_back(static_cast<std::uint16_t>(exponent(i))); });
  return PhaseTensor(*field_, group_, arity_, n);
}

PhaseTensor PhaseTensor::with_entry(const Index& idx, std::uint32_t exponent) const {
  auto n = std::make_shared<OverrideNode>();
  n->a = node_;
  n->at = idx;
  n->value = exponent % field_->order();
  n->arity = arity_;
  return PhaseTensor(*field_, group_, arity_, n);
}

void PhaseTensor::for_each_index(const std::function<void(const Index&)>& f) const {
  Index i{};
  const std::uint32_t size = group_.size();
  for (;;) {
    f(i);
    int s = arity_ - 1;
    while (s >= 0 && ++i[s] == size) i[s--] = 0;
    if (s < 0) return;
  }
}

TensorElement PhaseTensor::to_tensor() const {
  if (group_.dims() > kMaxRank) throw std::invalid_argument("label group too wide for monomial labels");
  TensorElement out(arity_);
  out.reserve(entry_count());
  for_each_index([&](const Index& i) {
    TensorKey k{};
    for (int s = 0; s < arity_; ++s) {
      for (int d = 0; d < group_.dims(); ++d) k[s].group[d] = static_cast<std::uint16_t>(group_.digit(i[s], d));
    }
    out.add(k, coefficient(i));
  });
  return out;
}

std::optional<PhaseMismatch> first_mismatch(const PhaseTensor& a, const PhaseTensor& b, int jobs) {
  if (!(a.group() == b.group()) || a.arity() != b.arity()) throw std::invalid_argument("phase tensor shape mismatch");
  const std::uint32_t size = a.group().size();
  const int arity = a.arity();
  auto scan = [&](std::uint32_t first_lo, std::uint32_t first_hi) -> std::optional<PhaseMismatch> {
    Index i{};
    i[0] = first_lo;
    if (first_lo >= first_hi) return std::nullopt;
    for (;;) {
      const std::uint32_t x = a.exponent(i), y = b.exponent(i);
      if (x != y) return PhaseMismatch{i, x, y};
      int s = arity - 1;
      while (s > 0 && ++i[s] == size) i[s--] = 0;
      if (s == 0 && ++i[0] == first_hi) return std::nullopt;
    }
  };
  if (arity == 1) {
    for (std::uint32_t z = 0; z < size; ++z) {
      Index i{};
      i[0] = z;
      if (a.exponent(i) != b.exponent(i)) return PhaseMismatch{i, a.exponent(i), b.exponent(i)};
    }
    return std::nullopt;
  }
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(size)));
  if (jobs == 1) return scan(0, size);
  std::vector<std::optional<PhaseMismatch>> results(static_cast<std::size_t>(jobs));
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t) {
    const std::uint32_t lo = size * static_cast<std::uint32_t>(t) / static_cast<std::uint32_t>(jobs);
    const std::uint32_t hi = size * static_cast<std::uint32_t>(t + 1) / static_cast<std::uint32_t>(jobs);
    threads.emplace_back([&, t, lo, hi] { results[static_cast<std::size_t>(t)] = scan(lo, hi); });
  }
  for (auto& th : threads) th.join();
  for (auto& r : results) {
    if (r) return r;
  }
  return std::nullopt;
}

}  // namespace uqd
