#include "uqd/drinfeld_double.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace uqd {

namespace {

long mod_long(long a, long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

Monomial group_monomial(const Algebra& alg, const std::array<long, kMaxRank>& v) {
  std::array<int, kMaxRank> a{};
  for (int i = 0; i < alg.rank(); ++i) a[i] = static_cast<int>(mod_long(v[i], alg.modulus()));
  return alg.cartan(a);
}

TensorElement scaled(TensorElement x, const CycScalar& s) {
  x.scale(s);
  return x;
}

TensorElement sum(TensorElement a, const TensorElement& b) {
  a.add(b);
  return a;
}

}  // namespace

std::shared_ptr<const DrinfeldDouble> DrinfeldDouble::build(std::shared_ptr<const QuantumBorel> uqb) {
  if (!uqb) throw std::invalid_argument("null u_q(b)");
  if (uqb->dimension() > 81) {
    throw std::invalid_argument("the double is only built for u_q(b) of dimension <= 81 (A1, n=3)");
  }
  std::shared_ptr<DrinfeldDouble> d(new DrinfeldDouble());
  d->uqb_ = std::move(uqb);
  const Algebra& alg = d->uqb_->group_algebra();
  const HopfData& h = d->uqb_->hopf();
  d->dim_ = alg.dimension();
  d->basis_ = alg.basis_monomials();
  const std::size_t n = d->dim_;

  d->mult_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) d->mult_[x * n + y] = alg.multiply(d->basis_[x], d->basis_[y]);

  d->dual_product_.resize(n * n);
  d->dual_coproduct_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    d->delta_.push_back(h.coproduct(d->basis_[x]));
    d->delta2_.push_back(h.delta_on_slot(d->delta_.back(), 0));
    d->antipode_inv_.push_back(h.antipode_inverse(d->basis_[x]));
    for (const auto& [k, c] : d->delta_.back()) {
      d->dual_product_[d->index(k[0]) * n + d->index(k[1])].emplace_back(static_cast<std::uint32_t>(x), c);
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& [p, c] : d->mult_[y * n + x]) {
        d->dual_coproduct_[d->index(p)].emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), c);
      }
  return d;
}

const std::vector<DrinfeldDouble::Terms>& DrinfeldDouble::conjugation(std::size_t a1, std::size_t a3) const {
  const std::uint64_t key = a1 * dim_ + a3;
  auto it = conj_cache_.find(key);
  if (it != conj_cache_.end()) return *it->second;
  const Algebra& alg = uqb_->group_algebra();
  auto out = std::make_unique<std::vector<Terms>>(dim_);
  const Element right = single_element(basis_[a1]);
  for (std::size_t y = 0; y < dim_; ++y) {
    const Element p = alg.multiply(alg.multiply(antipode_inv_[a3], single_element(basis_[y])), right);
    for (const auto& [r, c] : p) (*out)[index(r)].emplace_back(static_cast<std::uint32_t>(y), c);
  }
  return *conj_cache_.emplace(key, std::move(out)).first->second;
}

Element DrinfeldDouble::single_element(const Monomial& m) const {
  Element e;
  e.add(m, CycScalar::one(field()));
  return e;
}

// (delta_p ⊗ a)(delta_r ⊗ b) = sum delta_p delta_r(S^{-1}(a_3) ? a_1) ⊗ a_2 b
const TensorElement& DrinfeldDouble::basis_product(const TensorKey& key) const {
  auto it = product_cache_.find(key);
  if (it != product_cache_.end()) return *it->second;
  const std::size_t p = index(key[0]), a = index(key[1]), r = index(key[2]), b = index(key[3]);
  auto out = std::make_unique<TensorElement>(2);
  for (const auto& [k, c] : delta2_[a]) {
    const auto& conj = conjugation(index(k[0]), index(k[2]));
    const Element& tail = mult_[index(k[1]) * dim_ + b];
    for (const auto& [y, c1] : conj[r]) {
      for (const auto& [x, c2] : dual_product_[p * dim_ + y]) {
        const CycScalar s = c * c1 * c2;
        for (const auto& [hm, c3] : tail) out->add(TensorKey{basis_[x], hm}, s * c3);
      }
    }
  }
  return *product_cache_.emplace(key, std::move(out)).first->second;
}

Element DrinfeldDouble::dual_unit() const {
  Element e;
  for (const auto& m : basis_)
    if (!m.has_pbw()) e.add(m, CycScalar::one(field()));
  return e;
}

Element DrinfeldDouble::dual_multiply(const Element& f, const Element& g) const {
  Element out;
  for (const auto& [p, cp] : f)
    for (const auto& [r, cr] : g)
      for (const auto& [x, c] : dual_product_[index(p) * dim_ + index(r)]) out.add(basis_[x], cp * cr * c);
  return out;
}

TensorElement DrinfeldDouble::dual_coproduct(const Element& f) const {
  TensorElement out(2);
  for (const auto& [p, cp] : f)
    for (const auto& [x, y, c] : dual_coproduct_[index(p)]) out.add(TensorKey{basis_[x], basis_[y]}, cp * c);
  return out;
}

CycScalar DrinfeldDouble::evaluate(const Element& f, const Element& x) const {
  CycScalar s = CycScalar::zero(field());
  for (const auto& [p, c] : f)
    if (const CycScalar* v = x.find(p)) s += c * *v;
  return s;
}

TensorElement DrinfeldDouble::one() const { return from_dual(dual_unit()); }

TensorElement DrinfeldDouble::from_base(const Element& h) const {
  TensorElement out(2);
  for (const auto& [eps, c0] : dual_unit())
    for (const auto& [m, c] : h) out.add(TensorKey{eps, m}, c0 * c);
  return out;
}

TensorElement DrinfeldDouble::from_dual(const Element& f) const {
  TensorElement out(2);
  for (const auto& [p, c] : f) out.add(TensorKey{p, Monomial{}}, c);
  return out;
}

Element DrinfeldDouble::character(const std::array<long, kMaxRank>& w) const {
  Element e;
  for (const auto& m : basis_) {
    if (m.has_pbw()) continue;
    long k = 0;
    for (int i = 0; i < uqb_->rank(); ++i) k += w[i] * m.group[i];
    e.add(m, CycScalar::zeta_pow(field(), k));
  }
  return e;
}

TensorElement DrinfeldDouble::grouplike(const std::array<long, kMaxRank>& v, const std::array<long, kMaxRank>& w) const {
  const Monomial g = group_monomial(uqb_->group_algebra(), v);
  TensorElement out(2);
  for (const auto& [p, c] : character(w)) out.add(TensorKey{p, g}, c);
  return out;
}

TensorElement DrinfeldDouble::multiply(const TensorElement& x, const TensorElement& y) const {
  x.check_arity(y);
  if (x.arity() == 2) {
    TensorElement out(2);
    for (const auto& [kx, cx] : x)
      for (const auto& [ky, cy] : y) out.add_scaled(basis_product(TensorKey{kx[0], kx[1], ky[0], ky[1]}), cx * cy);
    return out;
  }
  if (x.arity() != 4) throw std::invalid_argument("double products need arity 2 or 4");
  TensorElement out(4);
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      const TensorElement& left = basis_product(TensorKey{kx[0], kx[1], ky[0], ky[1]});
      const TensorElement& right = basis_product(TensorKey{kx[2], kx[3], ky[2], ky[3]});
      const CycScalar s = cx * cy;
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) out.add(TensorKey{l[0], l[1], r[0], r[1]}, s * cl * cr);
    }
  return out;
}

TensorElement DrinfeldDouble::coproduct(const TensorElement& x) const {
  if (x.arity() != 2) throw std::invalid_argument("double coproduct needs arity 2");
  TensorElement out(4);
  for (const auto& [k, c] : x) {
    const TensorElement& dh = delta_[index(k[1])];
    for (const auto& [f1, f2, cf] : dual_coproduct_[index(k[0])])
      for (const auto& [t, ch] : dh) out.add(TensorKey{basis_[f1], t[0], basis_[f2], t[1]}, c * cf * ch);
  }
  return out;
}

TensorElement DrinfeldDouble::coproduct_op(const TensorElement& x) const {
  TensorElement out(4);
  for (const auto& [k, c] : coproduct(x)) out.add(TensorKey{k[2], k[3], k[0], k[1]}, c);
  return out;
}

TensorElement DrinfeldDouble::tensor(const TensorElement& x, const TensorElement& y) const {
  if (x.arity() != 2 || y.arity() != 2) throw std::invalid_argument("double tensor needs arity 2 factors");
  TensorElement out(4);
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) out.add(TensorKey{kx[0], kx[1], ky[0], ky[1]}, cx * cy);
  return out;
}

TensorElement DrinfeldDouble::R() const {
  TensorElement out(4);
  const Element eps = dual_unit();
  for (const auto& h : basis_)
    for (const auto& [p, c] : eps) out.add(TensorKey{p, h, h, Monomial{}}, c);
  return out;
}

TensorElement DrinfeldDouble::basis_element(std::uint64_t i) const {
  if (i >= dimension()) throw std::out_of_range("double basis index");
  TensorElement out(2);
  out.add(TensorKey{basis_[i / dim_], basis_[i % dim_]}, CycScalar::one(field()));
  return out;
}

DoubleGenerators identify_generators(const DrinfeldDouble& d) {
  const QuantumBorel& b = d.base();
  const long m = b.m();
  const long half = (m + 1) / 2;
  DoubleGenerators g;
  for (int i = 0; i < b.rank(); ++i) {
    const auto A = b.K_exponent(i);
    std::array<long, kMaxRank> v{}, w{}, wp{}, nv{}, nw{}, nwp{};
    for (int j = 0; j < b.rank(); ++j) {
      v[j] = mod_long(half * A[j], m);
      w[j] = mod_long(j == i ? half : 0, m);
      wp[j] = mod_long(-w[j], m);
      nv[j] = mod_long(-v[j], m);
      nw[j] = mod_long(-w[j], m);
      nwp[j] = mod_long(-wp[j], m);
    }
    g.K_v.push_back(v);
    g.K_w.push_back(w);
    g.Kp_v.push_back(v);
    g.Kp_w.push_back(wp);
    g.K.push_back(d.grouplike(v, w));
    g.Kp.push_back(d.grouplike(v, wp));
    g.K_inv.push_back(d.grouplike(nv, nw));
    g.Kp_inv.push_back(d.grouplike(nv, nwp));

    Element e;
    e.add(b.e(i), CycScalar::one(d.field()));
    g.e.push_back(d.from_base(e));

    const Monomial ei = b.e(i);
    Element phi;
    for (std::uint64_t k = 0; k < d.base_dimension(); ++k) {
      const Monomial mono = d.base_monomial(k);
      if (mono.pbw == ei.pbw) phi.add(mono, CycScalar::one(d.field()));
    }
    g.f.push_back(d.multiply(d.from_dual(phi), g.Kp_inv.back()));
  }
  return g;
}

namespace {

DoubleCheck verdict(std::string name, bool pass, std::string detail) {
  return DoubleCheck{std::move(name), pass, std::move(detail)};
}

// <x, y> = sum x_i a_ij y_j on r-digit blocks of (Z/m)^{2r} labels.
struct Pairing {
  std::array<std::array<int, kMaxRank>, kMaxRank> cartan;
  int rank;
  long m;
  LabelGroup group;

  long operator()(const std::array<long, kMaxLabelDims>& x, int xo, const std::array<long, kMaxLabelDims>& y,
                  int yo) const {
    long s = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) s += x[xo + i] * cartan[i][j] * y[yo + j];
    return mod_long(s, m);
  }
  std::array<long, kMaxLabelDims> digits(std::uint32_t x) const {
    std::array<long, kMaxLabelDims> out{};
    for (int i = 0; i < 2 * rank; ++i) out[i] = group.digit(x, i);
    return out;
  }
};

bool is_cartan(const TensorElement& x) {
  for (const auto& [k, c] : x)
    if (k[0].has_pbw() || k[1].has_pbw()) return false;
  return true;
}

}  // namespace

std::vector<DoubleCheck> check_double_structure(const DrinfeldDouble& d, const DoubleGenerators& g,
                                                std::uint64_t samples, std::uint64_t seed) {
  const CycField& f = d.field();
  const QuantumBorel& b = d.base();
  const int r = b.rank();
  std::vector<DoubleCheck> out;

  const std::uint64_t expected = b.dimension() * b.dimension();
  out.push_back(verdict("dimension", d.dimension() == expected,
                        std::to_string(d.dimension()) + " = " + std::to_string(b.dimension()) + "^2"));

  std::vector<std::pair<std::string, TensorElement>> gens;
  for (int i = 0; i < r; ++i) {
    const std::string s = r > 1 ? std::to_string(i + 1) : "";
    gens.emplace_back("e" + s, g.e[i]);
    gens.emplace_back("f" + s, g.f[i]);
    gens.emplace_back("K" + s, g.K[i]);
    gens.emplace_back("K'" + s, g.Kp[i]);
  }
  const TensorElement one = d.one();

  {
    std::string bad;
    for (const auto& [name, x] : gens)
      if (!(d.multiply(one, x) == x) || !(d.multiply(x, one) == x)) bad = name;
    out.push_back(verdict("unit", bad.empty(), bad.empty() ? "1 x = x 1 = x on generators" : "fails on " + bad));
  }

  {
    std::string bad;
    std::uint64_t count = 0;
    for (const auto& [n1, x] : gens)
      for (const auto& [n2, y] : gens)
        for (const auto& [n3, z] : gens) {
          ++count;
          if (bad.empty() && !(d.multiply(d.multiply(x, y), z) == d.multiply(x, d.multiply(y, z))))
            bad = n1 + " " + n2 + " " + n3;
        }
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples && bad.empty(); ++s) {
      const std::uint64_t i = rng() % d.dimension(), j = rng() % d.dimension(), k = rng() % d.dimension();
      const TensorElement x = d.basis_element(i), y = d.basis_element(j), z = d.basis_element(k);
      ++count;
      if (!(d.multiply(d.multiply(x, y), z) == d.multiply(x, d.multiply(y, z))))
        bad = "basis " + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k);
    }
    out.push_back(verdict("associativity", bad.empty(),
                          bad.empty() ? std::to_string(count) + " triples" : "fails on " + bad));
  }

  {
    std::string bad;
    for (const auto& [n1, x] : gens)
      for (const auto& [n2, y] : gens)
        if (bad.empty() && !(d.coproduct(d.multiply(x, y)) == d.multiply(d.coproduct(x), d.coproduct(y))))
          bad = n1 + " " + n2;
    out.push_back(verdict("coproduct-multiplicative", bad.empty(),
                          bad.empty() ? "Delta(xy) = Delta(x) Delta(y) on generator pairs" : "fails on " + bad));
  }

  for (int i = 0; i < r; ++i) {
    const std::string s = r > 1 ? std::to_string(i + 1) : "";
    const TensorElement KKp = d.multiply(g.K[i], g.Kp[i]);
    const bool de = d.coproduct(g.e[i]) == sum(d.tensor(g.e[i], KKp), d.tensor(one, g.e[i]));
    out.push_back(verdict("coproduct-e" + s, de, "Delta(e) = e ⊗ KK' + 1 ⊗ e"));
    const bool df = d.coproduct(g.f[i]) == sum(d.tensor(g.f[i], g.Kp_inv[i]), d.tensor(g.K_inv[i], g.f[i]));
    out.push_back(verdict("coproduct-f" + s, df, "Delta(f) = f ⊗ K'^{-1} + K^{-1} ⊗ f"));
    const bool gk = d.coproduct(g.K[i]) == d.tensor(g.K[i], g.K[i]) &&
                    d.coproduct(g.Kp[i]) == d.tensor(g.Kp[i], g.Kp[i]) &&
                    d.multiply(g.K[i], g.K_inv[i]) == one && d.multiply(g.Kp[i], g.Kp_inv[i]) == one;
    out.push_back(verdict("grouplike-K" + s, gk, "K, K' grouplike and invertible"));

    std::string bad;
    for (const auto& [name, x] : gens)
      if (!(d.multiply(g.Kp[i], x) == d.multiply(x, g.Kp[i]))) bad = name;
    out.push_back(verdict("K'-central" + s, bad.empty(), bad.empty() ? "K' x = x K' on generators" : "fails on " + bad));

    bool conj = true;
    for (int j = 0; j < r; ++j) {
      const long a = b.datum().a(i, j);
      conj = conj && d.multiply(d.multiply(g.K[i], g.e[j]), g.K_inv[i]) == scaled(g.e[j], CycScalar::zeta_pow(f, a));
      conj = conj && d.multiply(d.multiply(g.K[i], g.f[j]), g.K_inv[i]) == scaled(g.f[j], CycScalar::zeta_pow(f, -a));
    }
    out.push_back(verdict("K-conjugation" + s, conj, "K_i e_j K_i^{-1} = q^{a_ij} e_j, K_i f_j K_i^{-1} = q^{-a_ij} f_j"));

    TensorElement ep = one, fp = one;
    bool nil = true;
    for (int k = 1; k <= b.m(); ++k) {
      ep = d.multiply(ep, g.e[i]);
      fp = d.multiply(fp, g.f[i]);
      if (k < b.m()) nil = nil && !ep.empty() && !fp.empty();
    }
    nil = nil && ep.empty() && fp.empty();
    out.push_back(verdict("nilpotency" + s, nil, "e^" + std::to_string(b.m()) + " = f^" + std::to_string(b.m()) +
                                                     " = 0, lower powers nonzero"));

    const TensorElement comm = difference(d.multiply(g.e[i], g.f[i]), d.multiply(g.f[i], g.e[i]), f);
    const TensorElement kdiff = difference(g.K[i], g.K_inv[i], f);
    std::ostringstream detail;
    bool proportional = false;
    if (!comm.empty() && is_cartan(comm)) {
      const auto& [k0, c0] = *kdiff.begin();
      const CycScalar* cc = comm.find(k0);
      if (cc) {
        const CycScalar lambda = *cc * c0.inverse();
        proportional = comm == scaled(kdiff, lambda);
        if (proportional) detail << "[e,f] = (" << lambda.to_string() << ") (K - K^{-1})";
      }
      if (!proportional) detail << "[e,f] lies in the Cartan part with " << comm.size() << " terms";
    } else {
      detail << "[e,f] is " << (comm.empty() ? "zero" : "not in the Cartan part");
    }
    out.push_back(verdict("commutator" + s, !comm.empty() && is_cartan(comm), detail.str()));
    for (int j = 0; j < r && r > 1; ++j) {
      if (j == i) continue;
      const TensorElement c2 = difference(d.multiply(g.e[i], g.f[j]), d.multiply(g.f[j], g.e[i]), f);
      out.push_back(verdict("commutator-" + std::to_string(i + 1) + std::to_string(j + 1), c2.empty(),
                            "[e_i, f_j] = 0 for i != j"));
    }
  }
  return out;
}

BicharacterTwist bicharacter_twist(const DrinfeldDouble& d, const DoubleGenerators& g) {
  const QuantumBorel& b = d.base();
  const int r = b.rank();
  const long m = b.m();
  const CycField& f = d.field();
  const LabelGroup C(2 * r, static_cast<std::uint32_t>(m));
  const Pairing pair{b.datum().cartan, r, m, C};
  auto digits = [&](std::uint32_t x) { return pair.digits(x); };

  // beta((a,b), (c,d)) = <a, d>
  PhaseTensor idem = PhaseTensor::from_function(f, C, 2, [pair](const PhaseTensor::Index& idx) {
    return pair(pair.digits(idx[0]), 0, pair.digits(idx[1]), pair.rank);
  });

  const std::uint32_t N = C.size();
  std::vector<std::uint32_t> beta(static_cast<std::size_t>(N) * N), chi(static_cast<std::size_t>(N) * N);
  for (std::uint32_t x = 0; x < N; ++x) {
    const auto dx = digits(x);
    for (std::uint32_t y = 0; y < N; ++y) {
      const auto dy = digits(y);
      beta[x * N + y] = static_cast<std::uint32_t>(pair(dx, 0, dy, r));
      // chi_(a,b)(K^c K'^d) = q^{<a,c> - <b,d>}, x = (a,b), y = (c,d)
      chi[x * N + y] = static_cast<std::uint32_t>(mod_long(pair(dx, 0, dy, 0) - pair(dx, r, dy, r), m));
    }
  }

  auto element_of = [&](std::uint32_t h) {
    const auto dh = digits(h);
    std::array<long, kMaxRank> v{}, w{};
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        v[j] += dh[i] * g.K_v[i][j] + dh[r + i] * g.Kp_v[i][j];
        w[j] += dh[i] * g.K_w[i][j] + dh[r + i] * g.Kp_w[i][j];
      }
    }
    return d.grouplike(v, w);
  };
  BicharacterTwist out{idem, TensorElement(4), TensorElement(4), 0, {}, {}, {}};
  for (std::uint32_t h = 0; h < N; ++h) out.elements.push_back(element_of(h));
  const auto& elems = out.elements;
  const BigRational norm(Int(1), Int(static_cast<long>(N)) * Int(static_cast<long>(N)));
  std::vector<long> plus(m), minus(m);
  for (std::uint32_t h = 0; h < N; ++h) {
    for (std::uint32_t hp = 0; hp < N; ++hp) {
      std::fill(plus.begin(), plus.end(), 0);
      std::fill(minus.begin(), minus.end(), 0);
      for (std::uint32_t x = 0; x < N; ++x) {
        const long cx = m - chi[x * N + h];
        for (std::uint32_t y = 0; y < N; ++y) {
          const long base = cx + m - chi[y * N + hp];
          ++plus[(base + beta[x * N + y]) % m];
          ++minus[(base + m - beta[x * N + y]) % m];
        }
      }
      auto to_scalar = [&](const std::vector<long>& counts) {
        CycScalar s = CycScalar::zero(f);
        for (long k = 0; k < m; ++k)
          if (counts[k]) s += CycScalar::monomial(f, BigRational(Int(counts[k])) * norm, k);
        return s;
      };
      const CycScalar jp = to_scalar(plus), jm = to_scalar(minus);
      if (!jp.is_zero()) {
        ++out.group_terms;
        out.value.add_scaled(d.tensor(elems[h], elems[hp]), jp);
        out.group_value.push_back({h, hp, jp});
      }
      if (!jm.is_zero()) {
        out.inverse.add_scaled(d.tensor(elems[h], elems[hp]), jm);
        out.group_inverse.push_back({h, hp, jm});
      }
    }
  }
  return out;
}

std::vector<DoubleCheck> check_bicharacter_twist(const DrinfeldDouble& d, const DoubleGenerators& g,
                                                 const BicharacterTwist& j) {
  std::vector<DoubleCheck> out;
  const PhaseTensor& J = j.idempotent_form;
  {
    const PhaseTensor lhs = J.unit_on_slot(0) * J.coproduct_on_slot(1);
    const PhaseTensor rhs = J.unit_on_slot(2) * J.coproduct_on_slot(0);
    const auto mm = first_mismatch(lhs, rhs);
    const auto m0 = first_mismatch(J.counit_on_slot(0), PhaseTensor::trivial(J.field(), J.group(), 1));
    const auto m1 = first_mismatch(J.counit_on_slot(1), PhaseTensor::trivial(J.field(), J.group(), 1));
    out.push_back(verdict("twist-2-cocycle", !mm && !m0 && !m1,
                          "(1⊗J)(id⊗Delta)(J) = (J⊗1)(Delta⊗id)(J), counital, over " +
                              std::to_string(lhs.entry_count()) + " labels"));
  }
  const TensorElement one = d.one();
  const TensorElement one2 = d.tensor(one, one);
  // Products taken through the group form; the grouplikes multiply inside D.
  std::map<std::pair<std::uint32_t, std::uint32_t>, TensorElement> products;
  auto product = [&](std::uint32_t a, std::uint32_t b) -> const TensorElement& {
    auto it = products.find({a, b});
    if (it == products.end()) it = products.emplace(std::make_pair(a, b), d.multiply(j.elements[a], j.elements[b])).first;
    return it->second;
  };
  auto group_product = [&](const auto& x, const auto& y) {
    TensorElement out4(4);
    for (const auto& s : x)
      for (const auto& t : y) out4.add_scaled(d.tensor(product(s.left, t.left), product(s.right, t.right)), s.coeff * t.coeff);
    return out4;
  };
  out.push_back(verdict("twist-invertible",
                        group_product(j.group_value, j.group_inverse) == one2 &&
                            group_product(j.group_inverse, j.group_value) == one2,
                        "J J^{-1} = J^{-1} J = 1 ⊗ 1; J has " + std::to_string(j.group_terms) +
                            " group terms, " + std::to_string(j.value.size()) + " basis terms"));

  const int r = d.base().rank();
  for (int i = 0; i < r; ++i) {
    const std::string s = r > 1 ? std::to_string(i + 1) : "";
    const std::vector<std::tuple<std::string, const TensorElement*, TensorElement>> cases = {
        {"e", &g.e[i], sum(d.tensor(g.e[i], g.K[i]), d.tensor(one, g.e[i]))},
        {"f", &g.f[i], sum(d.tensor(g.f[i], one), d.tensor(g.K_inv[i], g.f[i]))},
        {"K", &g.K[i], d.tensor(g.K[i], g.K[i])},
        {"K'", &g.Kp[i], d.tensor(g.Kp[i], g.Kp[i])},
    };
    for (const auto& [name, x, target] : cases) {
      const bool ok = d.multiply(j.value, d.coproduct(*x)) == d.multiply(target, j.value);
      out.push_back(verdict("twisted-coproduct-" + name + s, ok, "J Delta_*(" + name + ") J^{-1} is the tensor-product coproduct"));
    }
  }
  return out;
}

std::vector<DoubleCheck> r_matrix_check(const DrinfeldDouble& d, const DoubleGenerators& g) {
  std::vector<DoubleCheck> out;
  const TensorElement R = d.R();
  const int r = d.base().rank();
  for (int i = 0; i < r; ++i) {
    const std::string s = r > 1 ? std::to_string(i + 1) : "";
    const std::vector<std::pair<std::string, const TensorElement*>> cases = {
        {"e", &g.e[i]}, {"f", &g.f[i]}, {"K", &g.K[i]}, {"K'", &g.Kp[i]}};
    for (const auto& [name, x] : cases) {
      const bool ok = d.multiply(R, d.coproduct(*x)) == d.multiply(d.coproduct_op(*x), R);
      out.push_back(verdict("r-matrix-" + name + s, ok, "R Delta(" + name + ") = Delta^op(" + name + ") R"));
    }
  }
  return out;
}

}  // namespace uqd
