#pragma once

#include "uqd/lie_data.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace uqd {

/// Normal-form basis word: Cartan part first, then root vectors in the
/// fixed PBW order. The Cartan part holds group exponents (g^a) or an
/// idempotent label (1_z), depending on the algebra's CartanBasis.
struct Monomial {
  std::array<std::uint16_t, kMaxRank> group{};
  std::array<std::uint16_t, kMaxRoots> pbw{};

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  bool has_pbw() const { return pbw[0] != 0 || pbw[1] != 0 || pbw[2] != 0; }
  std::uint64_t pack() const {
    std::uint64_t k = 0;
    for (auto v : group) k = (k << 12) | v;
    for (auto v : pbw) k = (k << 12) | v;
    return k;
  }
  std::string to_string() const;
};

inline constexpr int kMaxArity = 4;

/// Basis key of a k-fold tensor power; slots beyond the arity stay default.
using TensorKey = std::array<Monomial, kMaxArity>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return std::hash<std::uint64_t>{}(m.pack() * 0x9E3779B97F4A7C15ULL); }
};

struct TensorKeyHash {
  std::size_t operator()(const TensorKey& k) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& m : k) h = (h ^ m.pack()) * 0x100000001B3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace uqd
