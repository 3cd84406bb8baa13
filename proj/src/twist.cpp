#include "uqd/twist.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace uqd {

namespace {

long mod(long v, long m) {
  const long r = v % m;
  return r < 0 ? r + m : r;
}

std::array<long, kMaxRank> digits(const LabelGroup& g, std::uint32_t label) {
  std::array<long, kMaxRank> d{};
  for (int i = 0; i < g.dims(); ++i) d[i] = g.digit(label, i);
  return d;
}

std::uint32_t label_of(const Monomial& m, int rank, long modulus) {
  std::uint32_t l = 0;
  for (int i = rank; i-- > 0;) l = l * static_cast<std::uint32_t>(modulus) + m.group[i];
  return l;
}

Element single(const Monomial& m, const CycField& f) {
  Element e;
  e.add(m, CycScalar::one(f));
  return e;
}

// Inserts the unit of `alg` as a new tensor slot.
TensorElement insert_unit(const Algebra& alg, const TensorElement& x, int slot) {
  const Element one = alg.one();
  TensorElement out(x.arity() + 1);
  for (const auto& [k, c] : x) {
    for (const auto& [m, d] : one) {
      TensorKey nk{};
      for (int s = 0, t = 0; s <= x.arity(); ++s) nk[s] = s == slot ? m : k[t++];
      out.add(nk, c * d);
    }
  }
  return out;
}

}  // namespace

long c_exponent(long z, long y, int n) {
  const long yr = mod(y, n);
  return -z * (y - yr);
}

CycScalar c_scalar(const CycField& f, long z, long y, int n) { return CycScalar::zeta_pow(f, c_exponent(z, y, n)); }

Element primitive_idempotent(const QuantumBorel& uqb, const std::array<int, kMaxRank>& z) {
  const Algebra& a = uqb.group_algebra();
  const CycScalar norm = CycScalar::rational(a.field(), BigRational(Int(1), Int(static_cast<std::int64_t>(a.cartan_size()))));
  Element out;
  for (std::uint64_t i = 0; i < a.cartan_size(); ++i) {
    const Monomial g = a.basis_monomial(i * a.pbw().dimension());
    long e = 0;
    for (int j = 0; j < uqb.rank(); ++j) e -= static_cast<long>(z[j]) * g.group[j];
    out.add(g, norm * CycScalar::zeta_pow(a.field(), e));
  }
  return out;
}

Element bold_idempotent(const QuantumBorel& uqb, const std::array<int, kMaxRank>& beta) {
  const Algebra& a = uqb.group_algebra();
  const CycField& f = a.field();
  const int n = uqb.n();
  const int r = uqb.rank();
  std::int64_t count = 1;
  for (int i = 0; i < r; ++i) count *= n;
  // n^{-r} sum_{b in (Z/n)^r} q^{-n b.beta} g^{n b}
  Element direct;
  const CycScalar norm = CycScalar::rational(f, BigRational(Int(1), Int(count)));
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::array<int, kMaxRank> b{};
    std::int64_t c = idx;
    long e = 0;
    for (int i = 0; i < r; ++i) {
      b[i] = static_cast<int>(c % n) * n;
      c /= n;
      e -= static_cast<long>(b[i]) * beta[i];
    }
    direct.add(uqb.g(b), norm * CycScalar::zeta_pow(f, e));
  }

  Element aggregate;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::array<int, kMaxRank> z{};
    std::int64_t c = idx;
    for (int i = 0; i < r; ++i) {
      z[i] = static_cast<int>(mod(beta[i], n) + n * (c % n));
      c /= n;
    }
    aggregate.add(primitive_idempotent(uqb, z));
  }
  if (!(aggregate == direct)) throw std::logic_error("bold idempotent differs from the coset sum of primitive idempotents");
  for (int i = 0; i < r; ++i) {
    std::array<int, kMaxRank> gn{};
    gn[i] = n;
    Element want = direct;
    want.scale(CycScalar::zeta_pow(f, static_cast<long>(n) * beta[i]));
    if (!(a.multiply(direct, single(uqb.g(gn), f)) == want)) {
      throw std::logic_error("bold idempotent fails its eigenvector equation");
    }
  }
  return direct;
}

TwistJ build_twist_J(const QuantumBorel& uqb) {
  const LabelGroup g(uqb.rank(), static_cast<std::uint32_t>(uqb.m()));
  const LieDatum d = uqb.datum();
  const int n = uqb.n();
  PhaseTensor j = PhaseTensor::from_function(uqb.field(), g, 2, [g, d, n](const PhaseTensor::Index& i) {
    const auto z = digits(g, i[0]);
    const auto y = digits(g, i[1]);
    long e = 0;
    for (int a = 0; a < d.rank; ++a) {
      for (int b = 0; b < d.rank; ++b) e += d.a(a, b) * c_exponent(z[a], y[b], n);
    }
    return e;
  });
  j = j.materialize();
  return TwistJ{j, j.inverse().materialize()};
}

Associator closed_form_phi(CartanType type, int n) {
  const LieDatum d = lie_datum(type);
  const LabelGroup g(d.rank, static_cast<std::uint32_t>(n));
  const CycField& f = CycField::of(static_cast<std::uint32_t>(n * n));
  return Associator{PhaseTensor::from_function(f, g, 3, [g, d, n](const PhaseTensor::Index& i) {
    const auto b = digits(g, i[0]);
    const auto c = digits(g, i[1]);
    const auto e = digits(g, i[2]);
    long x = 0;
    for (int a = 0; a < d.rank; ++a) {
      for (int k = 0; k < d.rank; ++k) x += d.a(a, k) * b[a] * (((c[k] + e[k]) % n) - c[k] - e[k]);
    }
    return x;
  })};
}

PhaseTensor phi_on_fine_labels(const Associator& phi, const QuantumBorel& uqb) {
  const LabelGroup fine(uqb.rank(), static_cast<std::uint32_t>(uqb.m()));
  const LabelGroup coarse = phi.value.group();
  return phi.value.pullback(fine, [fine, coarse](std::uint32_t z) {
    std::array<long, kMaxLabelDims> d{};
    for (int i = 0; i < fine.dims(); ++i) d[i] = fine.digit(z, i);
    return coarse.make(d);
  });
}

PhaseTensor coboundary_dJ(const TwistJ& j) {
  const PhaseTensor& J = j.value;
  return J.unit_on_slot(0) * J.coproduct_on_slot(1) * J.coproduct_on_slot(0).inverse() * J.unit_on_slot(2).inverse();
}

TensorElement coboundary_dJ_sparse(const QuantumBorel& uqb, const TwistJ& j) {
  const Algebra& a = uqb.idempotent_algebra();
  const HopfData& h = uqb.hopf_idempotent();
  const TensorElement J = j.value.to_tensor();
  const TensorElement one_J = insert_unit(a, J, 0);
  const TensorElement J_one = insert_unit(a, J, 2);
  const TensorElement id_delta = h.delta_on_slot(J, 1);
  const TensorElement delta_id = h.delta_on_slot(J, 0);
  return a.multiply(a.multiply(a.multiply(one_J, id_delta), invert_tensor(a, delta_id)), invert_tensor(a, J_one));
}

TensorElement conjugate_by_diagonal(const Algebra& idem, const PhaseTensor& j, const PhaseTensor& jinv,
                                    const TensorElement& x) {
  if (idem.basis() != CartanBasis::idempotent) throw std::invalid_argument("conjugation needs the idempotent basis");
  if (x.arity() != j.arity()) throw std::invalid_argument("twist arity mismatch");
  const int r = idem.rank();
  const int N = idem.modulus();
  TensorElement out(x.arity());
  out.reserve(x.size());
  for (const auto& [k, c] : x) {
    PhaseTensor::Index left{}, right{};
    for (int s = 0; s < x.arity(); ++s) {
      left[s] = label_of(k[s], r, N);
      const auto wt = idem.pbw().weight(k[s].pbw);
      Monomial shifted;
      for (int i = 0; i < r; ++i) shifted.group[i] = static_cast<std::uint16_t>(mod(static_cast<long>(k[s].group[i]) - wt[i], N));
      right[s] = label_of(shifted, r, N);
    }
    out.add(k, c * CycScalar::zeta_pow(idem.field(), static_cast<long>(j.exponent(left)) + jinv.exponent(right)));
  }
  return out;
}

TensorElement delta_J(const QuantumBorel& uqb, const TwistJ& j, const Element& x) {
  return conjugate_by_diagonal(uqb.idempotent_algebra(), j.value, j.inverse, uqb.hopf_idempotent().delta(x));
}

std::optional<std::pair<TensorKey, std::string>> aq_tensor_violation(const QuantumBorel& uqb, const TensorElement& x,
                                                                     CartanBasis basis) {
  const int n = uqb.n();
  const int r = uqb.rank();
  const int k = x.arity();
  if (basis == CartanBasis::group) {
    for (const auto& t : x.sorted()) {
      for (int s = 0; s < k; ++s) {
        for (int i = 0; i < r; ++i) {
          if (t.first[s].group[i] % n != 0) return std::pair{t.first, std::string("group exponent not divisible by n")};
        }
      }
    }
    return std::nullopt;
  }
  struct Coset {
    std::uint64_t count = 0;
    const CycScalar* coeff = nullptr;
    TensorKey witness{};
  };
  std::unordered_map<TensorKey, Coset, TensorKeyHash> cosets;
  std::map<TensorKey, std::string> bad;
  for (const auto& [key, c] : x) {
    TensorKey ck = key;
    for (int s = 0; s < k; ++s) {
      for (int i = 0; i < r; ++i) ck[s].group[i] = static_cast<std::uint16_t>(key[s].group[i] % n);
    }
    Coset& co = cosets[ck];
    if (co.count == 0) {
      co.coeff = &c;
      co.witness = key;
    } else if (!(*co.coeff == c)) {
      bad.emplace(std::min(co.witness, key), "coefficient not constant on an A_q coset");
    }
    ++co.count;
  }
  std::uint64_t full = 1;
  for (int s = 0; s < k * r; ++s) full *= static_cast<std::uint64_t>(n);
  for (const auto& [ck, co] : cosets) {
    if (co.count != full) bad.emplace(co.witness, "coset only partially present");
  }
  if (bad.empty()) return std::nullopt;
  return *bad.begin();
}

TensorElement to_coset_basis(const QuantumBorel& uqb, const Algebra& coset_idem, const TensorElement& x) {
  if (auto v = aq_tensor_violation(uqb, x, CartanBasis::idempotent)) {
    throw std::domain_error("tensor is not in A_q: " + v->second + " at " + v->first[0].to_string());
  }
  (void)coset_idem;
  const int n = uqb.n();
  TensorElement out(x.arity());
  for (const auto& [key, c] : x) {
    bool representative = true;
    for (int s = 0; s < x.arity() && representative; ++s) {
      for (int i = 0; i < uqb.rank(); ++i) representative = representative && key[s].group[i] < n;
    }
    if (representative) out.add(key, c);
  }
  return out;
}

Element from_coset_basis(const QuantumBorel& uqb, const Element& x) {
  const int n = uqb.n();
  const int r = uqb.rank();
  std::uint64_t count = 1;
  for (int i = 0; i < r; ++i) count *= static_cast<std::uint64_t>(n);
  Element out;
  for (const auto& [m, c] : x) {
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Monomial z = m;
      std::uint64_t t = idx;
      for (int i = 0; i < r; ++i) {
        z.group[i] = static_cast<std::uint16_t>(m.group[i] + n * static_cast<int>(t % static_cast<std::uint64_t>(n)));
        t /= static_cast<std::uint64_t>(n);
      }
      out.add(z, c);
    }
  }
  return out;
}

TwistedAq build_twisted_Aq(const AqBasis& aq, const TwistJ& j, const Associator& phi) {
  TwistedAq t;
  t.basis = aq;
  auto alg = aq.coset_algebra(CartanBasis::idempotent);
  t.algebra = alg;
  t.phi = phi.value.to_tensor();
  struct Memo {
    std::mutex mutex;
    std::unordered_map<Monomial, TensorElement, MonomialHash> map;
  };
  auto memo = std::make_shared<Memo>();
  auto uqb = aq.uqb;
  t.structure.algebra = alg;
  t.structure.coproduct = [memo, uqb, alg, j](const Monomial& m) {
    {
      std::lock_guard lock(memo->mutex);
      auto it = memo->map.find(m);
      if (it != memo->map.end()) return it->second;
    }
    const Element fine = from_coset_basis(*uqb, single(m, uqb->field()));
    TensorElement d = to_coset_basis(*uqb, *alg, delta_J(*uqb, j, fine));
    std::lock_guard lock(memo->mutex);
    memo->map.try_emplace(m, d);
    return d;
  };
  const CycField& f = aq.uqb->field();
  t.structure.counit = [&f](const Monomial& m) {
    const bool unit = !m.has_pbw() && m.group == Monomial{}.group;
    return unit ? CycScalar::one(f) : CycScalar::zero(f);
  };
  return t;
}

std::optional<TensorElement> pentagon_check(const Algebra& alg, const HopfData& delta, const TensorElement& phi) {
  if (phi.arity() != 3) throw std::invalid_argument("associator must have arity 3");
  const TensorElement one_phi = insert_unit(alg, phi, 0);
  const TensorElement phi_one = insert_unit(alg, phi, 3);
  const TensorElement mid = delta.delta_on_slot(phi, 1);
  const TensorElement lhs = alg.multiply(alg.multiply(one_phi, mid), phi_one);
  const TensorElement rhs = alg.multiply(delta.delta_on_slot(phi, 2), delta.delta_on_slot(phi, 0));
  TensorElement res = difference(lhs, rhs, alg.field());
  if (res.empty()) return std::nullopt;
  return res;
}

std::optional<TensorElement> quasi_coassoc_check(const Algebra& alg, const HopfData& delta, const TensorElement& phi,
                                                 const Element& x) {
  const TensorElement d = delta.delta(x);
  const TensorElement lhs = alg.multiply(delta.delta_on_slot(d, 1), phi);
  const TensorElement rhs = alg.multiply(phi, delta.delta_on_slot(d, 0));
  TensorElement res = difference(lhs, rhs, alg.field());
  if (res.empty()) return std::nullopt;
  return res;
}

}  // namespace uqd
