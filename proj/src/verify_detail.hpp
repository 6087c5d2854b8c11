#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "kernel.hpp"
#include "qg2/tsystem.hpp"

namespace qg2::detail {

template <class Key>
using SignedMap = absl::flat_hash_map<Key, std::int64_t, KeyHash<Key>>;

template <class Key>
struct PairRef {
  const TermList<Key>* a;
  const TermList<Key>* b;
  std::int64_t sign;
};

/// Signed bucket pairs contributing to each sub-grade of one height class.
template <class Key>
using PairIndex = std::map<SubGrade, std::vector<PairRef<Key>>>;

/// Product of graded factors served one height class at a time. All factors
/// but the largest are expanded up front; the largest stays graded.
template <class Key>
class ProductStream {
 public:
  explicit ProductStream(std::vector<Graded<Key>> factors);

  std::vector<int> heights() const;
  /// Adds the bucket pairs of class h to index with the given sign.
  void collect(int h, PairIndex<Key>& index, std::int64_t sign) const;
  Coeff mass() const { return mass_; }
  const Bucketed<Key>& small() const { return small_; }
  const Bucketed<Key>& big() const { return big_; }

 private:
  Bucketed<Key> small_;
  Bucketed<Key> big_;
  Coeff mass_ = 1;
};

/// Characters of one relation; top may be null when solving for it.
struct RelationChars {
  const QPolynomial* left = nullptr;
  const QPolynomial* right = nullptr;
  const QPolynomial* top = nullptr;
  const QPolynomial* bottom = nullptr;
  std::vector<const QPolynomial*> sources;
};

VerificationReport verify_chars(const RelationChars& rc);

/// (left right - prod sources) / bottom, or the plain difference without a bottom.
QPolynomial solve_for_top(const RelationChars& rc);

}  // namespace qg2::detail
