#include "uqd/rewrite.hpp"

#include <mutex>
#include <stdexcept>

namespace uqd {

namespace {

constexpr int kExpBits = 10;
thread_local int rewrite_depth = 0;
constexpr int kMaxRewriteDepth = 20000;

std::uint64_t pack_exp(const PbwExp& x) {
  std::uint64_t k = 0;
  for (auto v : x) k = (k << kExpBits) | v;
  return k;
}

Monomial pbw_monomial(const PbwExp& x) {
  Monomial m;
  m.pbw = x;
  return m;
}

struct DepthGuard {
  DepthGuard() {
    if (++rewrite_depth > kMaxRewriteDepth) {
      --rewrite_depth;
      throw std::logic_error("rewriting did not terminate; rule table is not order-decreasing");
    }
  }
  ~DepthGuard() { --rewrite_depth; }
};

}  // namespace

RewriteSystem::RewriteSystem(const CycField& f, std::vector<PbwLetter> letters, Rules rules)
    : field_(&f), letters_(std::move(letters)), rules_(std::move(rules)) {
  if (letters_.size() > static_cast<std::size_t>(kMaxRoots)) throw std::invalid_argument("too many PBW letters");
  for (const auto& l : letters_) {
    if (l.nilpotency < 1 || l.nilpotency >= (1 << kExpBits)) throw std::invalid_argument("nilpotency out of range");
  }
  for (int i = 0; i < kMaxRank; ++i) {
    for (int a = 0; a < letter_count(); ++a) {
      const auto& d = letters_[a].definition;
      if (d.size() == 1 && d[0].letters == std::vector<int>{i} && d[0].coeff.is_one()) {
        simple_letters_.push_back(a);
        break;
      }
    }
  }
  for (int b = 0; b < letter_count(); ++b) {
    for (int a = 0; a < b; ++a) {
      if (!rules_.count({b, a})) {
        throw std::invalid_argument("missing straightening rule for " + letters_[b].name + " " + letters_[a].name);
      }
    }
  }
}

std::uint64_t RewriteSystem::dimension() const {
  std::uint64_t d = 1;
  for (const auto& l : letters_) d *= static_cast<std::uint64_t>(l.nilpotency);
  return d;
}

std::array<int, kMaxRank> RewriteSystem::weight(const PbwExp& x) const {
  std::array<int, kMaxRank> w{};
  for (int a = 0; a < letter_count(); ++a) {
    for (int i = 0; i < kMaxRank; ++i) w[i] += x[a] * letters_[a].weight[i];
  }
  return w;
}

std::vector<int> RewriteSystem::word(const PbwExp& x) const {
  std::vector<int> w;
  for (int a = 0; a < letter_count(); ++a) w.insert(w.end(), x[a], a);
  return w;
}

const Element& RewriteSystem::multiply_letter(const PbwExp& x, int a) const {
  const std::uint64_t key = (pack_exp(x) << 2) | static_cast<std::uint64_t>(a);
  {
    std::shared_lock lock(mutex_);
    auto it = letter_cache_.find(key);
    if (it != letter_cache_.end()) return *it->second;
  }
  DepthGuard guard;
  auto result = std::make_unique<Element>();
  int b = -1;
  for (int l = letter_count() - 1; l >= 0; --l) {
    if (x[l] > 0) {
      b = l;
      break;
    }
  }
  if (b <= a) {
    if (x[a] + 1 < letters_[a].nilpotency) {
      PbwExp y = x;
      ++y[a];
      result->add(pbw_monomial(y), CycScalar::one(*field_));
    }
  } else {
    PbwExp head = x;
    --head[b];
    for (const auto& term : rules_.at({b, a})) {
      Element cur;
      cur.add(pbw_monomial(head), term.coeff);
      for (int l : term.letters) cur = right_multiply(cur, l);
      result->add(cur);
    }
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = letter_cache_.try_emplace(key, std::move(result));
  return *it->second;
}

Element RewriteSystem::right_multiply(const Element& x, int a) const {
  Element out;
  for (const auto& [m, c] : x) {
    const Element& p = multiply_letter(m.pbw, a);
    for (const auto& [pm, pc] : p) {
      Monomial r = pm;
      r.group = m.group;
      out.add(r, c * pc);
    }
  }
  return out;
}

Element RewriteSystem::multiply(const PbwExp& x, const PbwExp& y) const {
  const std::uint64_t key = (pack_exp(x) << (kExpBits * kMaxRoots)) | pack_exp(y);
  {
    std::shared_lock lock(mutex_);
    auto it = product_cache_.find(key);
    if (it != product_cache_.end()) return it->second;
  }
  Element cur;
  cur.add(pbw_monomial(x), CycScalar::one(*field_));
  for (int l : word(y)) {
    if (cur.empty()) break;
    cur = right_multiply(cur, l);
  }
  std::unique_lock lock(mutex_);
  if (product_cache_.size() < kProductCacheLimit) product_cache_.try_emplace(key, cur);
  return cur;
}

Element RewriteSystem::normal_form(const std::vector<int>& word) const {
  Element cur;
  cur.add(Monomial{}, CycScalar::one(*field_));
  for (int l : word) cur = right_multiply(cur, l);
  return cur;
}

std::shared_ptr<RewriteSystem> RewriteSystem::with_rule(std::pair<int, int> pair, WordSum replacement) const {
  Rules r = rules_;
  r[pair] = std::move(replacement);
  return std::make_shared<RewriteSystem>(*field_, letters_, std::move(r));
}

std::shared_ptr<RewriteSystem> standard_pbw(const LieDatum& datum, int n) {
  const CycField& f = CycField::of(static_cast<std::uint32_t>(n * n));
  const int bound = n * n;
  const CycScalar one = CycScalar::one(f);
  std::vector<PbwLetter> letters;
  RewriteSystem::Rules rules;
  switch (datum.type) {
    case CartanType::A1:
      letters.push_back({"e", {1, 0}, bound, {{{0}, one}}});
      break;
    case CartanType::A2: {
      const CycScalar q = CycScalar::zeta_pow(f, 1);
      const CycScalar qinv = CycScalar::zeta_pow(f, -1);
      letters.push_back({"e1", {1, 0}, bound, {{{0}, one}}});
      letters.push_back({"E12", {1, 1}, bound, {{{0, 1}, one}, {{1, 0}, -qinv}}});
      letters.push_back({"e2", {0, 1}, bound, {{{1}, one}}});
      rules[{1, 0}] = {{{0, 1}, qinv}};
      rules[{2, 1}] = {{{1, 2}, qinv}};
      rules[{2, 0}] = {{{0, 2}, q}, {{1}, -q}};
      break;
    }
  }
  return std::make_shared<RewriteSystem>(f, std::move(letters), std::move(rules));
}

std::shared_ptr<RewriteSystem> empty_pbw(const CycField& f) {
  return std::make_shared<RewriteSystem>(f, std::vector<PbwLetter>{}, RewriteSystem::Rules{});
}

}  // namespace uqd
