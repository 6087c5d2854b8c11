#pragma once

// Keys for the monomials of one relation written as M * prod A_{i,a}^{-v}.
// Every character in a relation sits below its head by A^{-1} steps, so the
// exponent vector v is nonnegative and small. Each A-direction gets a bit
// field wide enough for the largest digit any product can reach, which makes
// multiplication plain integer addition and keeps keys at 16 bytes.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kernel.hpp"
#include "qg2/monomial.hpp"
#include "qg2/polynomial.hpp"

namespace qg2::detail {

using U128 = unsigned __int128;

struct AKey {
  U128 v = 0;
  friend bool operator==(const AKey&, const AKey&) = default;
};

inline AKey key_mul(const AKey& a, const AKey& b) { return {a.v + b.v}; }

template <>
struct KeyHash<AKey> {
  std::size_t operator()(const AKey& k) const noexcept {
    const auto lo = static_cast<std::uint64_t>(k.v);
    const auto hi = static_cast<std::uint64_t>(k.v >> 64);
    std::uint64_t h = (lo ^ (hi * 0x9E3779B97F4A7C15ULL)) * 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 31;
    h *= 0x94D049BB133111EBULL;
    return h ^ (h >> 29);
  }
};

struct ALayout {
  struct Field {
    Node node;
    int shift;
    int offset;
    int bits;
    // Largest digit a quotient term may carry.
    std::uint64_t quotient_cap;
  };
  std::vector<Field> fields;
  std::map<std::pair<int, int>, std::size_t> index;  // (node, shift) -> field

  std::uint64_t digit(const AKey& k, std::size_t f) const {
    const Field& fd = fields[f];
    return static_cast<std::uint64_t>(k.v >> fd.offset) & ((std::uint64_t{1} << fd.bits) - 1);
  }

  AKey encode(const AVector& v) const {
    AKey k;
    for (const auto& e : v.entries()) {
      const Field& fd = fields[index.at({node_number(e.node), e.shift})];
      k.v += static_cast<U128>(-e.exp) << fd.offset;
    }
    return k;
  }
};

// The layout in use by this thread; sub-grades and quotient checks read it.
inline thread_local const ALayout* tl_layout = nullptr;

struct LayoutScope {
  explicit LayoutScope(const ALayout* l) : saved(tl_layout) { tl_layout = l; }
  ~LayoutScope() { tl_layout = saved; }
  LayoutScope(const LayoutScope&) = delete;
  LayoutScope& operator=(const LayoutScope&) = delete;
  const ALayout* saved;
};

// Linear in v, so additive: the node-1 digit count and a signed shift moment.
inline SubGrade key_subgrade(const AKey& k) {
  const ALayout& l = *tl_layout;
  int w1 = 0;
  int mu = 0;
  for (std::size_t f = 0; f < l.fields.size(); ++f) {
    const int d = static_cast<int>(l.digit(k, f));
    if (d == 0) continue;
    if (l.fields[f].node == Node::one) {
      w1 += d;
      mu += l.fields[f].shift * d;
    } else {
      mu -= l.fields[f].shift * d;
    }
  }
  return {w1, mu};
}

// Quotient by the unit top of a divisor; rejects digits no exact quotient
// can have, since those could spill into the next field.
inline bool key_div(const AKey& a, const AKey& b, AKey& out) {
  out.v = a.v - b.v;
  const ALayout& l = *tl_layout;
  for (std::size_t f = 0; f < l.fields.size(); ++f) {
    if (l.digit(out, f) > l.fields[f].quotient_cap) return false;
  }
  return true;
}

/// Monomials ref * A^{-v} for keys of one frame.
struct AFrame {
  const ALayout* layout = nullptr;
  LMonomial ref;

  LMonomial unpack(const AKey& k) const {
    LMonomial m = ref;
    for (std::size_t f = 0; f < layout->fields.size(); ++f) {
      const auto d = layout->digit(k, f);
      if (d == 0) continue;
      const auto& fd = layout->fields[f];
      LMonomial a = a_inverse(fd.node, fd.shift);
      for (std::uint64_t i = 0; i < d; ++i) m *= a;
    }
    return m;
  }

  // Division never rebuilds keys from monomials in this frame.
  AKey pack(const LMonomial&) const { throw PackedOverflow{}; }
};

}  // namespace qg2::detail
