#pragma once

// q-characters of U_{q_i}(sl2) modules and the restriction maps beta_i.
// Shifts live in the ambient G2 lattice; a node-i string advances by
// string_step(i) (2 for node 1, 6 for node 2).

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qg2/monomial.hpp"
#include "qg2/polynomial.hpp"

namespace qg2 {

/// Laurent monomial in a single family of variables Y_s.
class Sl2Monomial {
 public:
  Sl2Monomial() = default;
  /// (shift, exp) pairs in any order; repeated shifts are merged.
  static Sl2Monomial from_pairs(std::vector<std::pair<int, int>> pairs);

  std::span<const std::pair<int, int>> entries() const { return entries_; }
  bool is_identity() const { return entries_.empty(); }
  int exponent(int shift) const;
  bool is_dominant() const;

  friend Sl2Monomial operator*(const Sl2Monomial& a, const Sl2Monomial& b);
  Sl2Monomial inverse() const;

  friend bool operator==(const Sl2Monomial&, const Sl2Monomial&) = default;
  friend auto operator<=>(const Sl2Monomial&, const Sl2Monomial&) = default;

 private:
  std::vector<std::pair<int, int>> entries_;
};

std::string to_string(const Sl2Monomial& m);

/// Finite sum of sl2 monomials, sorted by monomial, positive coefficients.
using Sl2Polynomial = std::vector<std::pair<Sl2Monomial, Coeff>>;

/// The string {center + (length - 1 - 2j) * step / 2 : 0 <= j < length}.
struct Sl2String {
  int center = 0;
  int length = 1;
  int step = 2;

  /// Shifts in increasing order.
  std::vector<int> members() const;
  int lowest() const { return center - (length - 1) * step / 2; }
  int highest() const { return center + (length - 1) * step / 2; }

  friend bool operator==(const Sl2String&, const Sl2String&) = default;
};

/// String with the given lowest shift.
Sl2String string_from(int lowest, int length, int step);

/// Keeps the node-i exponents: Y_{i,s} -> Y_s.
Sl2Monomial beta(const LMonomial& m, Node i);

/// True iff the union is not a string or one string contains the other.
/// Throws StepMismatch when the steps differ.
bool in_general_position(const Sl2String& a, const Sl2String& b);

/// Decomposition of a dominant monomial into pairwise general-position
/// strings, sorted by (lowest, length). Throws NotDominant.
std::vector<Sl2String> decompose_strings(const Sl2Monomial& m, int step);

/// sl2 A_b = Y_{b-h} Y_{b+h} with h = step / 2.
Sl2Monomial sl2_a_monomial(int b, int step);

Sl2Polynomial string_character(const Sl2String& s);
Sl2Polynomial sl2_character(const Sl2Monomial& m, int step);

/// Maps each term t of p to base * prod a_monomial(i, b)^{v_b}, where
/// t = beta_i(base) * prod A_b^{v_b} with all v_b <= 0. Throws NotAPullback.
QPolynomial pull_back(const LMonomial& base, Node i, const Sl2Polynomial& p);

/// sl2 character of a dominant monomial with each term recorded as the
/// multiset of A-shifts it lies below the head.
struct Sl2Expansion {
  struct Entry {
    std::vector<int> a_shifts;  // sorted, with repetition
    Coeff coeff = 1;
  };
  std::vector<Entry> entries;  // entries[0] is the head (no A-shifts)
};

/// Cached expansion of a translate of m; the actual A-shifts are the stored
/// ones plus offset.
struct Sl2ExpansionRef {
  std::shared_ptr<const Sl2Expansion> table;
  int offset = 0;
};

/// Expansion for a dominant beta_i(m). Results are cached by translation
/// class. Thread-safe.
Sl2ExpansionRef sl2_expansion(const Sl2Monomial& m, Node i);

}  // namespace qg2
