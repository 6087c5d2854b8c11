#pragma once

// Internal sparse kernel. Monomials whose support fits a window of 32 shifts of
// one parity per node are packed into 64 signed bytes, so multiplication is a
// lane-wise add and hashing is over a fixed-size block. Everything else falls
// back to LMonomial keys through the same templates.

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qg2/monomial.hpp"
#include "qg2/polynomial.hpp"

namespace qg2::detail {

// Signals that a compact key would leave its safe range; the caller retries
// with a wider key.
struct PackedOverflow {};

inline constexpr int kLanesPerNode = 32;
inline constexpr int kLanes = 2 * kLanesPerNode;
// Inputs with larger exponents take the generic path; this keeps sums of up
// to eight factors inside int8.
inline constexpr int kMaxPackedExp = 15;

struct alignas(16) Packed {
  std::array<std::int8_t, kLanes> e{};

  friend bool operator==(const Packed& a, const Packed& b) { return std::memcmp(a.e.data(), b.e.data(), kLanes) == 0; }
};

// GCC/Clang vector extension; lowers to SIMD adds where available.
using LaneVec = std::int8_t __attribute__((vector_size(16)));

inline Packed key_mul(const Packed& a, const Packed& b) {
  Packed r;
  for (int i = 0; i < kLanes; i += 16) {
    LaneVec x;
    LaneVec y;
    std::memcpy(&x, a.e.data() + i, 16);
    std::memcpy(&y, b.e.data() + i, 16);
    x += y;
    std::memcpy(r.e.data() + i, &x, 16);
  }
  return r;
}

struct PackedHash {
  std::size_t operator()(const Packed& p) const noexcept {
    std::uint64_t h = 0;
    for (int i = 0; i < kLanes; i += 8) {
      std::uint64_t w;
      std::memcpy(&w, p.e.data() + i, 8);
      h = (h ^ w) * 0x9E3779B97F4A7C15ULL;
      h ^= h >> 31;
    }
    h *= 0xBF58476D1CE4E5B9ULL;
    return h ^ (h >> 32);
  }
};

inline LMonomial key_mul(const LMonomial& a, const LMonomial& b) { return a * b; }

struct PackedSpace {
  std::array<int, 2> base{0, 0};

  bool fits(const LMonomial& m) const {
    for (const auto& f : m.factors()) {
      int off = f.shift - base[node_slot(f.node)];
      if (off < 0 || off % 2 != 0 || off / 2 >= kLanesPerNode) return false;
      if (f.exp > kMaxPackedExp || f.exp < -kMaxPackedExp) return false;
    }
    return true;
  }

  Packed pack(const LMonomial& m) const {
    Packed p;
    for (const auto& f : m.factors()) {
      std::size_t slot = node_slot(f.node);
      p.e[slot * kLanesPerNode + static_cast<std::size_t>((f.shift - base[slot]) / 2)] =
          static_cast<std::int8_t>(f.exp);
    }
    return p;
  }

  LMonomial unpack(const Packed& p) const {
    std::vector<Factor> fs;
    for (int lane = 0; lane < kLanes; ++lane) {
      if (p.e[lane] == 0) continue;
      std::size_t slot = lane < kLanesPerNode ? 0 : 1;
      int j = lane % kLanesPerNode;
      fs.push_back({slot == 0 ? Node::one : Node::two, base[slot] + 2 * j, p.e[lane]});
    }
    return LMonomial::from_factors(std::move(fs));
  }

  // Window covering every polynomial given, if one exists.
  static std::optional<PackedSpace> covering(std::initializer_list<const QPolynomial*> polys) {
    return covering(std::vector<const QPolynomial*>(polys));
  }

  static std::optional<PackedSpace> covering(const std::vector<const QPolynomial*>& polys) {
    std::array<int, 2> lo{INT32_MAX, INT32_MAX};
    std::array<int, 2> hi{INT32_MIN, INT32_MIN};
    for (const auto* p : polys) {
      for (const auto& t : *p) {
        for (const auto& f : t.monomial.factors()) {
          std::size_t s = node_slot(f.node);
          if (lo[s] != INT32_MAX && ((f.shift - lo[s]) % 2 != 0)) return std::nullopt;
          lo[s] = std::min(lo[s], f.shift);
          hi[s] = std::max(hi[s], f.shift);
          if (f.exp > kMaxPackedExp || f.exp < -kMaxPackedExp) return std::nullopt;
        }
      }
    }
    PackedSpace space;
    for (std::size_t s = 0; s < 2; ++s) {
      if (lo[s] == INT32_MAX) continue;
      if ((hi[s] - lo[s]) / 2 >= kLanesPerNode) return std::nullopt;
      space.base[s] = lo[s];
    }
    return space;
  }
};

inline int key_height(const PackedSpace&, const Packed& p) {
  int h = 0;
  for (int i = 0; i < kLanesPerNode; ++i) h += 3 * p.e[i];
  for (int i = kLanesPerNode; i < kLanes; ++i) h += 5 * p.e[i];
  return h;
}

inline int key_height(const PackedSpace&, const LMonomial& m) { return weight_of(m).height(); }

// Identity conversions for the generic path.
struct GenericSpace {
  const LMonomial& pack(const LMonomial& m) const { return m; }
  const LMonomial& unpack(const LMonomial& m) const { return m; }
};

template <class Key>
struct KeyHash;

template <>
struct KeyHash<Packed> : PackedHash {};

template <>
struct KeyHash<LMonomial> : LMonomialHash {};

template <class Key>
using CoeffMap = absl::flat_hash_map<Key, Coeff, KeyHash<Key>>;

template <class Key>
using TermList = std::vector<std::pair<Key, Coeff>>;

inline void accumulate(Coeff& slot, Coeff c) { slot = checked_add(slot, c); }

/// Terms bucketed by height, highest first.
template <class Key>
struct Graded {
  std::map<int, TermList<Key>, std::greater<>> classes;

  Coeff mass() const {
    Coeff m = 0;
    for (const auto& [h, list] : classes) {
      for (const auto& [k, c] : list) m = checked_add(m, c);
    }
    return m;
  }

  const TermList<Key>* at(int h) const {
    auto it = classes.find(h);
    return it == classes.end() ? nullptr : &it->second;
  }
};

template <class Key, class Space>
Graded<Key> grade(const QPolynomial& p, const Space& space) {
  Graded<Key> g;
  for (const auto& t : p) {
    Key k = space.pack(t.monomial);
    g.classes[weight_of(t.monomial).height()].emplace_back(std::move(k), t.coeff);
  }
  return g;
}

template <class Key>
Graded<Key> grade_map(CoeffMap<Key>&& m, const PackedSpace& space) {
  Graded<Key> g;
  for (auto& [k, c] : m) g.classes[key_height(space, k)].emplace_back(k, c);
  return g;
}

template <class Key>
void add_class_product(const TermList<Key>& a, const TermList<Key>& b, CoeffMap<Key>& out) {
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) accumulate(out[key_mul(ka, kb)], checked_mul(ca, cb));
  }
}

/// Heights of a*b, highest first.
template <class Key>
std::vector<int> product_heights(const Graded<Key>& a, const Graded<Key>& b) {
  std::vector<int> hs;
  for (const auto& [ha, la] : a.classes) {
    for (const auto& [hb, lb] : b.classes) hs.push_back(ha + hb);
  }
  std::sort(hs.begin(), hs.end(), std::greater<>());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return hs;
}

/// The height-H part of a*b, added into out.
template <class Key>
void product_class(const Graded<Key>& a, const Graded<Key>& b, int h, CoeffMap<Key>& out) {
  for (const auto& [ha, la] : a.classes) {
    if (const auto* lb = b.at(h - ha)) add_class_product(la, *lb, out);
  }
}

template <class Key>
CoeffMap<Key> full_product(const Graded<Key>& a, const Graded<Key>& b) {
  CoeffMap<Key> out;
  for (const auto& [ha, la] : a.classes) {
    for (const auto& [hb, lb] : b.classes) add_class_product(la, lb, out);
  }
  return out;
}

// Finer additive grading inside one height: the node-1 weight and a moment of
// the shifts. Products of buckets land in one bucket, so the hash maps used
// per bucket stay small. (A finer grading loses more to pairing buckets than
// it gains in locality.)
using SubGrade = std::pair<int, int>;

inline SubGrade key_subgrade(const Packed& p) {
  int w1 = 0;
  int mu = 0;
  for (int i = 0; i < kLanesPerNode; ++i) {
    w1 += p.e[i];
    mu += i * (p.e[i] + p.e[i + kLanesPerNode]);
  }
  return {w1, mu};
}

inline SubGrade key_subgrade(const LMonomial& m) {
  int w1 = 0;
  int mu = 0;
  for (const auto& f : m.factors()) {
    if (f.node == Node::one) w1 += f.exp;
    mu += f.shift * f.exp;
  }
  return {w1, mu};
}

template <class Key>
struct Bucket {
  SubGrade sub;
  TermList<Key> terms;
};

template <class Key>
struct Bucketed {
  std::map<int, std::vector<Bucket<Key>>, std::greater<>> classes;

  const std::vector<Bucket<Key>>* at(int h) const {
    auto it = classes.find(h);
    return it == classes.end() ? nullptr : &it->second;
  }
};

template <class Key>
Bucketed<Key> bucketize(Graded<Key>&& g) {
  Bucketed<Key> out;
  for (auto& [h, list] : g.classes) {
    std::map<SubGrade, TermList<Key>> by_sub;
    for (auto& kv : list) by_sub[key_subgrade(kv.first)].push_back(std::move(kv));
    auto& buckets = out.classes[h];
    for (auto& [sub, terms] : by_sub) buckets.push_back({sub, std::move(terms)});
  }
  return out;
}

template <class Key, class Space>
QPolynomial to_polynomial(const CoeffMap<Key>& m, const Space& space) {
  PolyAccumulator acc;
  acc.reserve(m.size());
  for (const auto& [k, c] : m) {
    if (c != 0) acc.add(space.unpack(k), c);
  }
  return std::move(acc).finish();
}

}  // namespace qg2::detail
