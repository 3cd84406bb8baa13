#include "uqd/quantum_borel.hpp"

#include <mutex>
#include <random>
#include <unordered_map>

namespace uqd {

namespace {

std::string join_messages(const std::vector<ParamViolation>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x.message;
  return s;
}

Element single(const Monomial& m, const CycField& f) {
  Element e;
  e.add(m, CycScalar::one(f));
  return e;
}

// Memoized map from PBW exponents to a value.
template <class V>
class PbwMemo {
 public:
  template <class F>
  V get(const PbwExp& x, F&& compute) {
    const std::uint64_t key = Monomial{{}, x}.pack();
    {
      std::lock_guard lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V v = compute();
    std::lock_guard lock(mutex_);
    map_.try_emplace(key, v);
    return v;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<std::uint64_t, V> map_;
};

}  // namespace

ParamError::ParamError(std::vector<ParamViolation> v)
    : std::invalid_argument("invalid parameters: " + join_messages(v)), violations_(std::move(v)) {}

TensorElement HopfData::delta(const Element& x) const {
  TensorElement out(2);
  for (const auto& [m, c] : x) out.add_scaled(coproduct(m), c);
  return out;
}

TensorElement HopfData::delta_on_slot(const TensorElement& x, int slot) const {
  return apply_on_slot(x, slot, coproduct);
}

CycScalar HopfData::epsilon(const Element& x) const {
  CycScalar s = CycScalar::zero(algebra->field());
  for (const auto& [m, c] : x) s += c * counit(m);
  return s;
}

TensorElement HopfData::epsilon_on_slot(const TensorElement& x, int slot) const {
  return contract_slot(x, slot, counit);
}

Element HopfData::S(const Element& x) const {
  if (!antipode) throw std::logic_error("no antipode supplied");
  Element out;
  for (const auto& [m, c] : x) out.add_scaled(antipode(m), c);
  return out;
}

std::array<int, kMaxRank> QuantumBorel::K_exponent(int i) const {
  std::array<int, kMaxRank> k{};
  for (int j = 0; j < rank(); ++j) k[j] = datum_.a(i, j);
  return k;
}

Monomial QuantumBorel::e(int i) const {
  Monomial m;
  m.pbw[pbw_->simple_letter(i)] = 1;
  return m;
}

std::shared_ptr<const QuantumBorel> QuantumBorel::build(CartanType type, int n,
                                                        std::shared_ptr<const RewriteSystem> pbw) {
  auto violations = validate_params(type, n);
  if (!violations.empty()) throw ParamError(std::move(violations));
  std::shared_ptr<QuantumBorel> q(new QuantumBorel());
  q->datum_ = lie_datum(type);
  q->n_ = n;
  q->pbw_ = pbw ? std::move(pbw) : standard_pbw(q->datum_, n);
  if (q->pbw_->field().order() != static_cast<std::uint32_t>(n * n)) throw std::invalid_argument("rewrite system over the wrong field");
  const int r = q->datum_.rank;
  const int N = n * n;
  auto group = std::make_shared<Algebra>(q->pbw_, r, N, 1, CartanBasis::group);
  auto idem = group->with_basis(CartanBasis::idempotent);
  q->group_ = group;
  q->idem_ = idem;
  const CycField& f = group->field();
  const QuantumBorel* self = q.get();

  // Delta(e_i) = e_i ⊗ K_i + 1 ⊗ e_i
  std::vector<TensorElement> delta_simple;
  for (int i = 0; i < r; ++i) {
    TensorElement d(2);
    d.add({self->e(i), group->cartan(self->K_exponent(i))}, CycScalar::one(f));
    d.add({Monomial{}, self->e(i)}, CycScalar::one(f));
    delta_simple.push_back(std::move(d));
  }
  std::vector<TensorElement> delta_letter;
  for (int l = 0; l < q->pbw_->letter_count(); ++l) {
    TensorElement d(2);
    for (const auto& term : q->pbw_->letter(l).definition) {
      TensorElement p = group->tensor_one(2);
      for (int s : term.letters) p = group->multiply(p, delta_simple[s]);
      d.add_scaled(p, term.coeff);
    }
    delta_letter.push_back(std::move(d));
  }

  struct DeltaState {
    std::shared_ptr<const Algebra> group;
    std::vector<TensorElement> letters;
    PbwMemo<TensorElement> memo;
    TensorElement compute(const PbwExp& x) {
      return memo.get(x, [&]() {
        int last = -1;
        for (int l = group->pbw().letter_count() - 1; l >= 0; --l) {
          if (x[l] > 0) {
            last = l;
            break;
          }
        }
        if (last < 0) return group->tensor_one(2);
        PbwExp head = x;
        --head[last];
        return group->multiply(compute(head), letters[last]);
      });
    }
  };
  auto state = std::make_shared<DeltaState>();
  state->group = group;
  state->letters = delta_letter;

  q->hopf_.algebra = group;
  q->hopf_.coproduct = [state](const Monomial& m) {
    const TensorElement d = state->compute(m.pbw);
    if (m.group == Monomial{}.group) return d;
    TensorElement out(2);
    for (const auto& [k, c] : d) {
      TensorKey nk = k;
      for (int s = 0; s < 2; ++s) {
        std::array<int, kMaxRank> a{};
        for (int i = 0; i < state->group->rank(); ++i) a[i] = k[s].group[i] + m.group[i];
        nk[s].group = state->group->cartan(a).group;
      }
      out.add(nk, c);
    }
    return out;
  };
  q->hopf_.counit = [&f](const Monomial& m) { return m.has_pbw() ? CycScalar::zero(f) : CycScalar::one(f); };

  // S(e_i) = -e_i K_i^{-1}, S^{-1}(e_i) = -K_i^{-1} e_i; both anti-multiplicative.
  auto make_anti = [self, group, &f](bool inverse) {
    std::vector<Element> simple;
    for (int i = 0; i < self->rank(); ++i) {
      std::array<int, kMaxRank> kinv{};
      for (int j = 0; j < self->rank(); ++j) kinv[j] = -self->datum().a(i, j);
      Element s = inverse ? group->multiply(single(group->cartan(kinv), f), single(self->e(i), f))
                          : group->multiply(single(self->e(i), f), single(group->cartan(kinv), f));
      s.scale(-CycScalar::one(f));
      simple.push_back(std::move(s));
    }
    std::vector<Element> letters;
    for (int l = 0; l < group->pbw().letter_count(); ++l) {
      Element v;
      for (const auto& term : group->pbw().letter(l).definition) {
        Element p = group->one();
        for (auto it = term.letters.rbegin(); it != term.letters.rend(); ++it) p = group->multiply(p, simple[*it]);
        v.add_scaled(p, term.coeff);
      }
      letters.push_back(std::move(v));
    }
    auto memo = std::make_shared<PbwMemo<Element>>();
    return [group, letters, memo, &f](const Monomial& m) {
      Element s = memo->get(m.pbw, [&]() {
        Element p = group->one();
        const auto word = group->pbw().word(m.pbw);
        for (auto it = word.rbegin(); it != word.rend(); ++it) p = group->multiply(p, letters[*it]);
        return p;
      });
      std::array<int, kMaxRank> a{};
      for (int i = 0; i < group->rank(); ++i) a[i] = -static_cast<int>(m.group[i]);
      return group->multiply(s, single(group->cartan(a), f));
    };
  };
  q->hopf_.antipode = make_anti(false);
  q->hopf_.antipode_inverse = make_anti(true);

  // Idempotent basis: Delta(1_z E^x) = sum_{u+v=z} Delta(E^x) restricted, using 1_u g^a = q^{a.u} 1_u.
  q->hopf_idem_.algebra = idem;
  q->hopf_idem_.coproduct = [state, idem](const Monomial& m) {
    const TensorElement d = state->compute(m.pbw);
    TensorElement out(2);
    const int rk = idem->rank();
    const std::uint64_t cs = idem->cartan_size();
    const std::uint64_t pd = idem->pbw().dimension();
    for (std::uint64_t iu = 0; iu < cs; ++iu) {
      const Monomial u = idem->basis_monomial(iu * pd);
      std::array<int, kMaxRank> v{};
      for (int i = 0; i < rk; ++i) v[i] = static_cast<int>(m.group[i]) - u.group[i];
      const Monomial vm = idem->cartan(v);
      for (const auto& [k, c] : d) {
        long e = 0;
        for (int i = 0; i < rk; ++i) e += static_cast<long>(k[0].group[i]) * u.group[i] + static_cast<long>(k[1].group[i]) * vm.group[i];
        TensorKey nk{};
        nk[0] = u;
        nk[0].pbw = k[0].pbw;
        nk[1] = vm;
        nk[1].pbw = k[1].pbw;
        out.add(nk, c * idem->q_pow(e));
      }
    }
    return out;
  };
  q->hopf_idem_.counit = [&f](const Monomial& m) {
    const bool unit = !m.has_pbw() && m.group == Monomial{}.group;
    return unit ? CycScalar::one(f) : CycScalar::zero(f);
  };
  return q;
}

std::optional<HopfFailure> check_coassociativity(const HopfData& h, const std::vector<Monomial>& xs) {
  for (const auto& x : xs) {
    const TensorElement d = h.coproduct(x);
    if (!(h.delta_on_slot(d, 0) == h.delta_on_slot(d, 1))) return HopfFailure{"coassociativity", {x}};
  }
  return std::nullopt;
}

std::optional<HopfFailure> check_counit(const HopfData& h, const std::vector<Monomial>& xs) {
  for (const auto& x : xs) {
    const TensorElement d = h.coproduct(x);
    const TensorElement want = as_tensor(single(x, h.algebra->field()));
    if (!(h.epsilon_on_slot(d, 0) == want)) return HopfFailure{"left counit", {x}};
    if (!(h.epsilon_on_slot(d, 1) == want)) return HopfFailure{"right counit", {x}};
  }
  return std::nullopt;
}

std::optional<HopfFailure> check_antipode(const HopfData& h, const std::vector<Monomial>& xs) {
  const Algebra& a = *h.algebra;
  for (const auto& x : xs) {
    Element want = a.one();
    want.scale(h.counit(x));
    Element left, right;
    for (const auto& [k, c] : h.coproduct(x)) {
      left.add_scaled(a.multiply(h.antipode(k[0]), single(k[1], a.field())), c);
      right.add_scaled(a.multiply(single(k[0], a.field()), h.antipode(k[1])), c);
    }
    if (!(left == want)) return HopfFailure{"left antipode", {x}};
    if (!(right == want)) return HopfFailure{"right antipode", {x}};
    if (h.antipode_inverse && !(h.S(h.antipode_inverse(x)) == single(x, a.field()))) {
      return HopfFailure{"antipode inverse", {x}};
    }
  }
  return std::nullopt;
}

std::optional<HopfFailure> check_coproduct_multiplicative(const HopfData& h,
                                                          const std::vector<std::pair<Monomial, Monomial>>& pairs) {
  const Algebra& a = *h.algebra;
  for (const auto& [x, y] : pairs) {
    const TensorElement lhs = h.delta(a.multiply(x, y));
    const TensorElement rhs = a.multiply(h.coproduct(x), h.coproduct(y));
    if (!(lhs == rhs)) return HopfFailure{"coproduct multiplicativity", {x, y}};
  }
  return std::nullopt;
}

bool AqBasis::contains(const Monomial& m) const {
  for (int i = 0; i < uqb->rank(); ++i) {
    if (m.group[i] % uqb->n() != 0) return false;
  }
  return true;
}

Monomial AqBasis::monomial(std::uint64_t i) const {
  const std::uint64_t pd = uqb->pbw().dimension();
  Monomial m = uqb->group_algebra().basis_monomial(i % pd);
  std::uint64_t c = i / pd;
  for (int r = 0; r < uqb->rank(); ++r) {
    m.group[r] = static_cast<std::uint16_t>((c % static_cast<std::uint64_t>(uqb->n())) * static_cast<std::uint64_t>(uqb->n()));
    c /= static_cast<std::uint64_t>(uqb->n());
  }
  return m;
}

std::shared_ptr<Algebra> AqBasis::coset_algebra(CartanBasis basis) const {
  return std::make_shared<Algebra>(uqb->group_algebra().pbw_handle(), uqb->rank(), uqb->n(), uqb->n(), basis);
}

Element AqBasis::embed(const Element& x) const {
  Element out;
  for (const auto& [m, c] : x) {
    Monomial r = m;
    for (int i = 0; i < uqb->rank(); ++i) r.group[i] = static_cast<std::uint16_t>(m.group[i] * uqb->n());
    out.add(r, c);
  }
  return out;
}

AqBasis build_Aq(std::shared_ptr<const QuantumBorel> uqb) {
  AqBasis b;
  b.count = uqb->pbw().dimension();
  for (int i = 0; i < uqb->rank(); ++i) b.count *= static_cast<std::uint64_t>(uqb->n());
  b.uqb = std::move(uqb);
  return b;
}

bool in_Aq(const AqBasis& aq, const Element& x) {
  for (const auto& [m, c] : x) {
    if (!aq.contains(m)) return false;
  }
  return true;
}

std::optional<ClosureFailure> check_Aq_closure(const AqBasis& aq, std::uint64_t exhaustive_limit,
                                               std::uint64_t samples, std::uint64_t seed) {
  const Algebra& a = aq.uqb->group_algebra();
  auto check = [&](const Monomial& x, const Monomial& y) -> std::optional<ClosureFailure> {
    for (const auto& [m, c] : a.multiply(x, y)) {
      if (!aq.contains(m)) return ClosureFailure{x, y, m};
    }
    return std::nullopt;
  };
  if (aq.count * aq.count <= exhaustive_limit) {
    for (std::uint64_t i = 0; i < aq.count; ++i) {
      for (std::uint64_t j = 0; j < aq.count; ++j) {
        if (auto f = check(aq.monomial(i), aq.monomial(j))) return f;
      }
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Monomial x = aq.monomial(rng() % aq.count);
    const Monomial y = aq.monomial(rng() % aq.count);
    if (auto f = check(x, y)) return f;
  }
  return std::nullopt;
}

HopfData build_group_algebra_T(int r, int n) {
  const CycField& f = CycField::of(static_cast<std::uint32_t>(n * n));
  auto alg = std::make_shared<Algebra>(empty_pbw(f), r, n * n, 1, CartanBasis::group);
  HopfData h;
  h.algebra = alg;
  h.coproduct = [&f](const Monomial& m) {
    TensorElement t(2);
    t.add({m, m}, CycScalar::one(f));
    return t;
  };
  h.counit = [&f](const Monomial&) { return CycScalar::one(f); };
  h.antipode = [alg, &f](const Monomial& m) {
    std::array<int, kMaxRank> a{};
    for (int i = 0; i < alg->rank(); ++i) a[i] = -static_cast<int>(m.group[i]);
    return single(alg->cartan(a), f);
  };
  h.antipode_inverse = h.antipode;
  return h;
}

int GammaActionData::correction_exponent(int j1, int j2, int n) {
  const int reduced = (j1 + j2) % n;
  return (reduced - j1 - j2) / n;
}

Element GammaActionData::correction(const QuantumBorel& uqb, int i, int j1, int j2) {
  std::array<int, kMaxRank> a{};
  a[i] = uqb.n() * correction_exponent(j1, j2, uqb.n());
  return single(uqb.g(a), uqb.field());
}

GammaActionData gamma_action_data(const QuantumBorel& uqb, int i, int j) {
  if (j < 0 || j >= uqb.n()) throw std::invalid_argument("gamma index j out of range");
  std::array<int, kMaxRank> a{};
  a[i] = j;
  return GammaActionData{i, j, single(uqb.g(a), uqb.field())};
}

GammaReport gamma_presentation_check(const AqBasis& aq, std::uint64_t exhaustive_limit, std::uint64_t samples,
                                     std::uint64_t seed) {
  const QuantumBorel& u = *aq.uqb;
  const Algebra& a = u.group_algebra();
  const CycField& f = u.field();
  const int n = u.n();
  GammaReport rep;
  rep.uqb_dimension = u.dimension();

  std::vector<Element> aq_gens;
  for (int k = 0; k < u.rank(); ++k) {
    std::array<int, kMaxRank> e{};
    e[k] = n;
    aq_gens.push_back(single(u.g(e), f));
  }
  for (int l = 0; l < u.pbw().letter_count(); ++l) {
    Monomial m;
    m.pbw[l] = 1;
    aq_gens.push_back(single(m, f));
  }

  auto p = [&](int i, int j) {
    std::array<int, kMaxRank> e{};
    e[i] = j;
    return single(u.g(e), f);
  };

  for (int i = 0; i < u.rank(); ++i) {
    for (int j = 0; j < n; ++j) {
      const Element pj = p(i, j);
      const Element pinv = p(i, -j);
      for (std::size_t g = 0; g < aq_gens.size(); ++g) {
        const Element& x = aq_gens[g];
        const Element conj = a.multiply(a.multiply(pj, x), pinv);
        ++rep.identities_checked;
        if (!in_Aq(aq, conj)) {
          rep.failure = GammaFailure{"conjugate stays in A_q", i, {j, static_cast<int>(g)}, ""};
          return rep;
        }
        if (!(a.multiply(pj, x) == a.multiply(conj, pj))) {
          rep.failure = GammaFailure{"p a = F(a) p", i, {j, static_cast<int>(g)}, ""};
          return rep;
        }
      }
    }
    for (int j1 = 0; j1 < n; ++j1) {
      for (int j2 = 0; j2 < n; ++j2) {
        const int r = (j1 + j2) % n;
        std::array<int, kMaxRank> e{};
        e[i] = j1 + j2 - r;
        const Element rhs = a.multiply(p(i, r), single(u.g(e), f));
        ++rep.identities_checked;
        if (!(a.multiply(p(i, j1), p(i, j2)) == rhs)) {
          rep.failure = GammaFailure{"p_j1 p_j2 = p_(j1+j2)' (g^n)^k", i, {j1, j2}, ""};
          return rep;
        }
        const int c = GammaActionData::correction_exponent(j1, j2, n);
        if (c != 0 && c != -1) {
          rep.failure = GammaFailure{"correction exponent in {0,-1}", i, {j1, j2}, std::to_string(c)};
          return rep;
        }
        for (int j3 = 0; j3 < n; ++j3) {
          const int lhs = c + GammaActionData::correction_exponent(r, j3, n);
          const int rhs3 = GammaActionData::correction_exponent(j2, j3, n) +
                           GammaActionData::correction_exponent(j1, (j2 + j3) % n, n);
          ++rep.identities_checked;
          if (lhs != rhs3) {
            rep.failure = GammaFailure{"correction coherence", i, {j1, j2, j3}, ""};
            return rep;
          }
        }
      }
    }
  }

  // Spanning: (p-monomial, A_q monomial) -> product is a bijection onto the basis.
  std::uint64_t pcount = 1;
  for (int i = 0; i < u.rank(); ++i) pcount *= static_cast<std::uint64_t>(n);
  const std::uint64_t total = pcount * aq.count;
  auto product = [&](std::uint64_t pi, std::uint64_t ai, Monomial& out) {
    std::array<int, kMaxRank> e{};
    std::uint64_t c = pi;
    for (int i = 0; i < u.rank(); ++i) {
      e[i] = static_cast<int>(c % static_cast<std::uint64_t>(n));
      c /= static_cast<std::uint64_t>(n);
    }
    const Element prod = a.multiply(u.g(e), aq.monomial(ai));
    if (prod.size() != 1 || !prod.begin()->second.is_one()) return false;
    out = prod.begin()->first;
    return true;
  };
  if (total <= exhaustive_limit) {
    std::vector<bool> seen(u.dimension(), false);
    for (std::uint64_t pi = 0; pi < pcount; ++pi) {
      for (std::uint64_t ai = 0; ai < aq.count; ++ai) {
        Monomial m;
        if (!product(pi, ai, m) || seen[a.basis_index(m)]) {
          rep.failure = GammaFailure{"spanning", 0, {static_cast<int>(pi), static_cast<int>(ai)}, "product is not a fresh basis monomial"};
          return rep;
        }
        seen[a.basis_index(m)] = true;
        ++rep.spanning_count;
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const std::uint64_t pi = rng() % pcount;
      const std::uint64_t ai = rng() % aq.count;
      Monomial m;
      bool ok = product(pi, ai, m);
      if (ok) {
        // The factorization is recovered from the product: p-part is the residue mod n.
        for (int i = 0; i < u.rank(); ++i) {
          ok = ok && static_cast<std::uint64_t>(m.group[i] % n) == (pi / (i == 0 ? 1 : static_cast<std::uint64_t>(n))) % static_cast<std::uint64_t>(n);
        }
      }
      if (!ok) {
        rep.failure = GammaFailure{"spanning", 0, {static_cast<int>(pi), static_cast<int>(ai)}, "sampled product is not the expected basis monomial"};
        return rep;
      }
    }
    rep.spanning_count = total;
  }
  if (rep.spanning_count != rep.uqb_dimension) {
    rep.failure = GammaFailure{"spanning count", 0, {}, std::to_string(rep.spanning_count) + " != " + std::to_string(rep.uqb_dimension)};
  }
  return rep;
}

}  // namespace uqd
