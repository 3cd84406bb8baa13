#include "uqd/algebra.hpp"

#include <random>
#include <stdexcept>
#include <unordered_map>

namespace uqd {

namespace {

using TermList = std::vector<std::pair<Monomial, CycScalar>>;

int mod(long v, int m) {
  long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

Monomial cartan_part(const Monomial& m) {
  Monomial c;
  c.group = m.group;
  return c;
}

TensorKey label_key(const TensorKey& k, int arity) {
  TensorKey out{};
  for (int s = 0; s < arity; ++s) out[s] = cartan_part(k[s]);
  return out;
}

bool has_pbw(const TensorKey& k, int arity) {
  for (int s = 0; s < arity; ++s) {
    if (k[s].has_pbw()) return true;
  }
  return false;
}

}  // namespace

Algebra::Algebra(std::shared_ptr<const RewriteSystem> pbw, int rank, int modulus, int step, CartanBasis basis)
    : pbw_(std::move(pbw)), rank_(rank), modulus_(modulus), step_(step), basis_(basis) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank out of range");
  if (modulus < 1 || static_cast<std::uint32_t>(modulus * step) != field().order()) {
    throw std::invalid_argument("Cartan modulus times step must equal the field order");
  }
}

std::shared_ptr<Algebra> Algebra::with_basis(CartanBasis b) const {
  return std::make_shared<Algebra>(pbw_, rank_, modulus_, step_, b);
}

std::uint64_t Algebra::cartan_size() const {
  std::uint64_t s = 1;
  for (int i = 0; i < rank_; ++i) s *= static_cast<std::uint64_t>(modulus_);
  return s;
}

Monomial Algebra::cartan(const std::array<int, kMaxRank>& a) const {
  Monomial m;
  for (int i = 0; i < rank_; ++i) m.group[i] = static_cast<std::uint16_t>(mod(a[i], modulus_));
  return m;
}

Element Algebra::one() const {
  Element e;
  if (basis_ == CartanBasis::group) {
    e.add(Monomial{}, CycScalar::one(field()));
    return e;
  }
  for (std::uint64_t i = 0; i < cartan_size(); ++i) e.add(basis_monomial(i * pbw_->dimension()), CycScalar::one(field()));
  return e;
}

TensorElement Algebra::tensor_one(int arity) const {
  return tensor_of(std::vector<Element>(static_cast<std::size_t>(arity), one()));
}

Element Algebra::group_element(const std::array<int, kMaxRank>& a) const {
  Element e;
  e.add(cartan(a), CycScalar::one(field()));
  return basis_ == CartanBasis::group ? e : with_basis(CartanBasis::group)->to_basis(e, CartanBasis::idempotent);
}

Element Algebra::letter(int l) const {
  Element e;
  for (const auto& [m, c] : one()) {
    Monomial x = m;
    x.pbw[l] = 1;
    e.add(x, c);
  }
  return e;
}

Element Algebra::multiply(const Monomial& x, const Monomial& y) const {
  Element out;
  CycScalar c = CycScalar::one(field());
  Monomial cart;
  if (basis_ == CartanBasis::group) {
    if (x.has_pbw()) {
      const auto wt = pbw_->weight(x.pbw);
      long e = 0;
      for (int i = 0; i < rank_; ++i) e += static_cast<long>(y.group[i]) * wt[i];
      c = q_pow(-static_cast<long>(step_) * e);
    }
    for (int i = 0; i < rank_; ++i) cart.group[i] = static_cast<std::uint16_t>((x.group[i] + y.group[i]) % modulus_);
  } else {
    const auto wt = pbw_->weight(x.pbw);
    for (int i = 0; i < rank_; ++i) {
      if (mod(static_cast<long>(x.group[i]) - wt[i], modulus_) != y.group[i]) return out;
    }
    cart.group = x.group;
  }
  if (!x.has_pbw() || !y.has_pbw()) {
    Monomial r = cart;
    r.pbw = x.has_pbw() ? x.pbw : y.pbw;
    out.add(r, c);
    return out;
  }
  for (const auto& [m, d] : pbw_->multiply(x.pbw, y.pbw)) {
    Monomial r = cart;
    r.pbw = m.pbw;
    out.add(r, c * d);
  }
  return out;
}

Element Algebra::multiply(const Element& x, const Element& y) const {
  Element out;
  if (basis_ == CartanBasis::idempotent) {
    std::unordered_map<Monomial, TermList, MonomialHash> buckets;
    for (const auto& [m, c] : y) buckets[cartan_part(m)].emplace_back(m, c);
    for (const auto& [xm, xc] : x) {
      const auto wt = pbw_->weight(xm.pbw);
      Monomial need;
      for (int i = 0; i < rank_; ++i) need.group[i] = static_cast<std::uint16_t>(mod(static_cast<long>(xm.group[i]) - wt[i], modulus_));
      auto it = buckets.find(need);
      if (it == buckets.end()) continue;
      for (const auto& [ym, yc] : it->second) out.add_scaled(multiply(xm, ym), xc * yc);
    }
    return out;
  }
  for (const auto& [xm, xc] : x) {
    for (const auto& [ym, yc] : y) out.add_scaled(multiply(xm, ym), xc * yc);
  }
  return out;
}

TensorElement Algebra::multiply(const TensorElement& x, const TensorElement& y) const {
  x.check_arity(y);
  const int k = x.arity();
  TensorElement out(k);
  std::vector<std::pair<TensorKey, CycScalar>> partial;

  auto combine = [&](const TensorKey& xk, const CycScalar& xc, const TensorKey& yk, const CycScalar& yc) {
    partial.clear();
    partial.emplace_back(TensorKey{}, xc * yc);
    for (int s = 0; s < k; ++s) {
      Element p = multiply(xk[s], yk[s]);
      if (p.empty()) return;
      if (p.size() == 1) {
        const auto& [m, c] = *p.begin();
        for (auto& [key, coeff] : partial) {
          key[s] = m;
          if (!c.is_one()) coeff *= c;
        }
        continue;
      }
      std::vector<std::pair<TensorKey, CycScalar>> next;
      next.reserve(partial.size() * p.size());
      for (const auto& [key, coeff] : partial) {
        for (const auto& [m, c] : p) {
          TensorKey nk = key;
          nk[s] = m;
          next.emplace_back(nk, coeff * c);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [key, coeff] : partial) out.add(key, coeff);
  };

  if (basis_ == CartanBasis::idempotent) {
    std::unordered_map<TensorKey, std::vector<const std::pair<const TensorKey, CycScalar>*>, TensorKeyHash> buckets;
    buckets.reserve(y.size());
    for (const auto& t : y) buckets[label_key(t.first, k)].push_back(&t);
    for (const auto& [xk, xc] : x) {
      TensorKey need{};
      for (int s = 0; s < k; ++s) {
        const auto wt = pbw_->weight(xk[s].pbw);
        for (int i = 0; i < rank_; ++i) {
          need[s].group[i] = static_cast<std::uint16_t>(mod(static_cast<long>(xk[s].group[i]) - wt[i], modulus_));
        }
      }
      auto it = buckets.find(need);
      if (it == buckets.end()) continue;
      for (const auto* t : it->second) combine(xk, xc, t->first, t->second);
    }
    return out;
  }
  for (const auto& [xk, xc] : x) {
    for (const auto& [yk, yc] : y) combine(xk, xc, yk, yc);
  }
  return out;
}

Monomial Algebra::basis_monomial(std::uint64_t i) const {
  const std::uint64_t pd = pbw_->dimension();
  std::uint64_t c = i / pd;
  std::uint64_t p = i % pd;
  Monomial m;
  for (int r = 0; r < rank_; ++r) {
    m.group[r] = static_cast<std::uint16_t>(c % static_cast<std::uint64_t>(modulus_));
    c /= static_cast<std::uint64_t>(modulus_);
  }
  for (int l = 0; l < pbw_->letter_count(); ++l) {
    const auto b = static_cast<std::uint64_t>(pbw_->letter(l).nilpotency);
    m.pbw[l] = static_cast<std::uint16_t>(p % b);
    p /= b;
  }
  return m;
}

std::uint64_t Algebra::basis_index(const Monomial& m) const {
  std::uint64_t p = 0;
  for (int l = pbw_->letter_count(); l-- > 0;) p = p * static_cast<std::uint64_t>(pbw_->letter(l).nilpotency) + m.pbw[l];
  std::uint64_t c = 0;
  for (int r = rank_; r-- > 0;) c = c * static_cast<std::uint64_t>(modulus_) + m.group[r];
  return c * pbw_->dimension() + p;
}

std::vector<Monomial> Algebra::basis_monomials() const {
  std::vector<Monomial> out;
  out.reserve(dimension());
  for (std::uint64_t i = 0; i < dimension(); ++i) out.push_back(basis_monomial(i));
  return out;
}

TermList Algebra::convert_monomial(const Monomial& m, CartanBasis target) const {
  TermList out;
  if (target == basis_) {
    out.emplace_back(m, CycScalar::one(field()));
    return out;
  }
  // g^a = sum_z q^{s a.z} 1_z and 1_z = N^{-r} sum_a q^{-s a.z} g^a
  const int sign = target == CartanBasis::idempotent ? 1 : -1;
  const CycScalar norm = target == CartanBasis::idempotent
                             ? CycScalar::one(field())
                             : CycScalar::rational(field(), BigRational(Int(1), Int(static_cast<std::int64_t>(cartan_size()))));
  out.reserve(cartan_size());
  for (std::uint64_t i = 0; i < cartan_size(); ++i) {
    Monomial r = basis_monomial(i * pbw_->dimension());
    long e = 0;
    for (int j = 0; j < rank_; ++j) e += static_cast<long>(m.group[j]) * r.group[j];
    r.pbw = m.pbw;
    out.emplace_back(r, norm * q_pow(sign * static_cast<long>(step_) * e));
  }
  return out;
}

Element Algebra::to_basis(const Element& x, CartanBasis target) const {
  if (target == basis_) return x;
  Element out;
  for (const auto& [m, c] : x) {
    for (const auto& [r, d] : convert_monomial(m, target)) out.add(r, c * d);
  }
  return out;
}

TensorElement Algebra::to_basis(const TensorElement& x, CartanBasis target) const {
  if (target == basis_) return x;
  TensorElement cur = x;
  std::unordered_map<Monomial, TermList, MonomialHash> memo;
  for (int s = 0; s < x.arity(); ++s) {
    TensorElement next(x.arity());
    for (const auto& [k, c] : cur) {
      auto it = memo.find(k[s]);
      if (it == memo.end()) it = memo.emplace(k[s], convert_monomial(k[s], target)).first;
      for (const auto& [r, d] : it->second) {
        TensorKey nk = k;
        nk[s] = r;
        next.add(nk, c * d);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

TensorElement apply_on_slot(const TensorElement& x, int slot,
                            const std::function<TensorElement(const Monomial&)>& f) {
  const int k = x.arity();
  if (slot < 0 || slot >= k) throw std::invalid_argument("slot out of range");
  std::unordered_map<Monomial, TensorElement, MonomialHash> memo;
  std::optional<TensorElement> out;
  for (const auto& [key, c] : x) {
    auto it = memo.find(key[slot]);
    if (it == memo.end()) it = memo.emplace(key[slot], f(key[slot])).first;
    const TensorElement& v = it->second;
    const int j = v.arity();
    if (k - 1 + j > kMaxArity) throw std::invalid_argument("tensor arity would exceed the maximum");
    if (!out) out.emplace(k - 1 + j);
    for (const auto& [vk, vc] : v) {
      TensorKey nk{};
      for (int s = 0; s < slot; ++s) nk[s] = key[s];
      for (int s = 0; s < j; ++s) nk[slot + s] = vk[s];
      for (int s = slot + 1; s < k; ++s) nk[s - 1 + j] = key[s];
      out->add(nk, c * vc);
    }
  }
  if (!out) {
    // Zero input: the output arity is that of f's value type, probed on 1.
    return TensorElement(k - 1 + f(Monomial{}).arity());
  }
  return *out;
}

TensorElement contract_slot(const TensorElement& x, int slot, const std::function<CycScalar(const Monomial&)>& f) {
  const int k = x.arity();
  if (k < 2) throw std::invalid_argument("contract_slot needs arity >= 2");
  if (slot < 0 || slot >= k) throw std::invalid_argument("slot out of range");
  TensorElement out(k - 1);
  for (const auto& [key, c] : x) {
    CycScalar v = f(key[slot]);
    if (v.is_zero()) continue;
    TensorKey nk{};
    for (int s = 0, t = 0; s < k; ++s) {
      if (s != slot) nk[t++] = key[s];
    }
    out.add(nk, c * v);
  }
  return out;
}

namespace {

TensorElement invert_diagonal_idempotent(const Algebra& alg, const TensorElement& d) {
  std::uint64_t full = 1;
  for (int s = 0; s < d.arity(); ++s) full *= alg.cartan_size();
  if (d.size() != full) throw std::domain_error("tensor is not invertible: Cartan part is singular");
  TensorElement out(d.arity());
  out.reserve(d.size());
  for (const auto& [k, c] : d) out.add(k, c.inverse());
  return out;
}

}  // namespace

TensorElement invert_tensor(const Algebra& alg, const TensorElement& x) {
  const int k = x.arity();
  TensorElement d(k);
  TensorElement rest(k);
  for (const auto& [key, c] : x) (has_pbw(key, k) ? rest : d).add(key, c);
  if (d.empty()) throw std::domain_error("tensor is not invertible: no Cartan part");

  TensorElement dinv(k);
  if (alg.basis() == CartanBasis::idempotent) {
    dinv = invert_diagonal_idempotent(alg, d);
  } else if (d.size() == 1 && !has_pbw(d.begin()->first, k)) {
    // c g^a ⊗ ... inverts to c^{-1} g^{-a} ⊗ ...
    const auto& [key, c] = *d.begin();
    TensorKey inv{};
    for (int s = 0; s < k; ++s) {
      std::array<int, kMaxRank> a{};
      for (int i = 0; i < alg.rank(); ++i) a[i] = -static_cast<int>(key[s].group[i]);
      inv[s] = alg.cartan(a);
    }
    dinv.add(inv, c.inverse());
  } else {
    auto idem = alg.with_basis(CartanBasis::idempotent);
    dinv = idem->to_basis(invert_diagonal_idempotent(*idem, alg.to_basis(d, CartanBasis::idempotent)), CartanBasis::group);
  }
  if (rest.empty()) return dinv;

  const TensorElement nil = alg.multiply(dinv, rest);
  TensorElement sum = alg.tensor_one(k);
  TensorElement term = sum;
  TensorElement neg = nil;
  neg.scale(-CycScalar::one(alg.field()));
  for (;;) {
    term = alg.multiply(term, neg);
    if (term.empty()) break;
    sum.add(term);
  }
  return alg.multiply(sum, dinv);
}

std::vector<Monomial> generator_monomials(const Algebra& alg) {
  std::vector<Monomial> gens;
  for (int i = 0; i < alg.rank(); ++i) {
    std::array<int, kMaxRank> a{};
    a[i] = 1;
    gens.push_back(alg.cartan(a));
  }
  for (int l = 0; l < alg.pbw().letter_count(); ++l) {
    Monomial m;
    m.pbw[l] = 1;
    gens.push_back(m);
  }
  return gens;
}

std::optional<AssociativityFailure> associativity_probe(const Algebra& alg, const std::vector<Monomial>& generators,
                                                        std::uint64_t samples, std::uint64_t seed) {
  auto check = [&](const Monomial& x, const Monomial& y, const Monomial& z) -> std::optional<AssociativityFailure> {
    Element ex, ez;
    ex.add(x, CycScalar::one(alg.field()));
    ez.add(z, CycScalar::one(alg.field()));
    Element lhs = alg.multiply(alg.multiply(x, y), ez);
    Element rhs = alg.multiply(ex, alg.multiply(y, z));
    if (lhs == rhs) return std::nullopt;
    return AssociativityFailure{{x, y, z}, std::move(lhs), std::move(rhs)};
  };
  for (const auto& x : generators) {
    for (const auto& y : generators) {
      for (const auto& z : generators) {
        if (auto f = check(x, y, z)) return f;
      }
    }
  }
  std::mt19937_64 rng(seed);
  const std::uint64_t dim = alg.dimension();
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Monomial x = alg.basis_monomial(rng() % dim);
    const Monomial y = alg.basis_monomial(rng() % dim);
    const Monomial z = alg.basis_monomial(rng() % dim);
    if (auto f = check(x, y, z)) return f;
  }
  return std::nullopt;
}

}  // namespace uqd
