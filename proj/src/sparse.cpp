#include "uqd/sparse.hpp"

namespace uqd {

std::string Monomial::to_string() const {
  std::string s = "g(";
  for (std::size_t i = 0; i < group.size(); ++i) s += (i ? "," : "") + std::to_string(group[i]);
  s += ")E(";
  for (std::size_t i = 0; i < pbw.size(); ++i) s += (i ? "," : "") + std::to_string(pbw[i]);
  return s + ")";
}

TensorElement as_tensor(const Element& x) {
  TensorElement t(1);
  t.reserve(x.size());
  for (const auto& [m, c] : x) t.add(TensorKey{m}, c);
  return t;
}

Element as_element(const TensorElement& x) {
  if (x.arity() != 1) throw std::invalid_argument("as_element needs arity 1");
  Element e;
  e.reserve(x.size());
  for (const auto& [k, c] : x) e.add(k[0], c);
  return e;
}

TensorElement tensor_of(const std::vector<Element>& factors) {
  const int k = static_cast<int>(factors.size());
  TensorElement out(k);
  std::vector<std::pair<TensorKey, CycScalar>> acc;
  if (factors.empty()) return out;
  for (const auto& [m, c] : factors[0]) acc.emplace_back(TensorKey{m}, c);
  for (int s = 1; s < k; ++s) {
    std::vector<std::pair<TensorKey, CycScalar>> next;
    for (const auto& [key, c] : acc) {
      for (const auto& [m, d] : factors[s]) {
        TensorKey nk = key;
        nk[s] = m;
        next.emplace_back(nk, c * d);
      }
    }
    acc = std::move(next);
  }
  for (const auto& [key, c] : acc) out.add(key, c);
  return out;
}

}  // namespace uqd
