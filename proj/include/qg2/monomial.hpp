#pragma once

// Laurent monomials in the variables Y_{i, aq^s} of type G2 with the spectral
// parameter a fixed, so a variable is named by its node i and its shift s.
// Rendered with the shorthand i_s for Y_{i,s}: "1_0 1_2^-1 2_1".

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qg2 {

/// Dynkin node of G2: node 1 is the short root (r = 1), node 2 the long root (r = 3).
enum class Node : std::int8_t { one = 1, two = 2 };

inline constexpr Node kNodes[] = {Node::one, Node::two};

constexpr int node_number(Node i) { return static_cast<int>(i); }
constexpr std::size_t node_slot(Node i) { return i == Node::one ? 0 : 1; }
constexpr Node other_node(Node i) { return i == Node::one ? Node::two : Node::one; }

/// r_i, so that q_i = q^{r_i}.
constexpr int root_length(Node i) { return i == Node::one ? 1 : 3; }

/// Spacing between consecutive members of a q_i-string, in units of the shift.
constexpr int string_step(Node i) { return 2 * root_length(i); }

/// Throws InvalidNode unless value is 1 or 2.
Node node_from_int(int value);

/// One exponent entry. Used both for Y-variables and for A-lattice coordinates.
struct Factor {
  Node node;
  int shift;
  int exp;

  friend constexpr auto operator<=>(const Factor&, const Factor&) = default;
};

/// Coordinates in the fundamental weight basis (omega_1, omega_2).
struct Weight {
  int w1 = 0;
  int w2 = 0;

  /// Height in the simple-root basis; alpha_1 and alpha_2 both have height 1.
  /// omega_1 = 2 alpha_1 + alpha_2 and omega_2 = 3 alpha_1 + 2 alpha_2.
  constexpr int height() const { return 3 * w1 + 5 * w2; }

  friend constexpr Weight operator+(Weight a, Weight b) { return {a.w1 + b.w1, a.w2 + b.w2}; }
  friend constexpr Weight operator-(Weight a, Weight b) { return {a.w1 - b.w1, a.w2 - b.w2}; }
  friend constexpr auto operator<=>(const Weight&, const Weight&) = default;
};

/// Element of the free abelian group generated by the Y_{i,s}. Factors are kept
/// sorted by (node, shift) with no zero exponents, so equal monomials have equal
/// storage.
class LMonomial {
 public:
  LMonomial() = default;

  static LMonomial variable(Node node, int shift, int exp = 1);
  /// Sorts, merges repeated keys and drops zero exponents.
  static LMonomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool is_identity() const { return factors_.empty(); }
  int exponent(Node node, int shift) const;

  LMonomial inverse() const;
  LMonomial pow(int n) const;

  friend LMonomial operator*(const LMonomial& a, const LMonomial& b);
  LMonomial& operator*=(const LMonomial& other);

  friend bool operator==(const LMonomial&, const LMonomial&) = default;
  /// Canonical key order: lexicographic on the (node, shift, exp) sequence.
  friend std::strong_ordering operator<=>(const LMonomial& a, const LMonomial& b) {
    return a.factors_ <=> b.factors_;
  }

  std::size_t hash() const noexcept;

 private:
  std::vector<Factor> factors_;
};

struct LMonomialHash {
  std::size_t operator()(const LMonomial& m) const noexcept { return m.hash(); }
};

inline LMonomial mono_mul(const LMonomial& a, const LMonomial& b) { return a * b; }

/// Integer exponent vector over the A_{i,s} basis of the root lattice Q.
class AVector {
 public:
  AVector() = default;
  static AVector from_entries(std::vector<Factor> entries);

  std::span<const Factor> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int entry(Node node, int shift) const;
  bool all_nonpositive() const;
  /// Number of A^{-1} factors, i.e. minus the sum of all entries.
  int depth() const;

  friend bool operator==(const AVector&, const AVector&) = default;

 private:
  std::vector<Factor> entries_;
};

/// A_{1,s} = 1_{s-1} 1_{s+1} 2_s^{-1};  A_{2,s} = 2_{s-3} 2_{s+3} 1_{s-2}^{-1} 1_s^{-1} 1_{s+2}^{-1}.
LMonomial a_monomial(Node node, int shift);
LMonomial a_inverse(Node node, int shift);

/// prod A_{i,s}^{v_{i,s}}.
LMonomial realize(const AVector& v);

/// Unique v with m = base * realize(v). Throws NotInLattice if m base^{-1} is not in Q.
AVector factor_over_A(const LMonomial& base, const LMonomial& m);

/// m <= other in the partial order, i.e. other m^{-1} in Q^+.
bool monomial_leq(const LMonomial& m, const LMonomial& other);

bool is_dominant(const LMonomial& m);
bool is_antidominant(const LMonomial& m);
bool is_i_dominant(const LMonomial& m, Node i);

/// True iff every variable at the largest shift in the support has negative
/// exponent. Throws EmptyMonomial on the identity.
bool is_right_negative(const LMonomial& m);

Weight weight_of(const LMonomial& m);

/// Total order compatible with multiplication: height of weight_of first,
/// then lexicographic on the exponent vector (variables in (node, shift) order,
/// larger exponent wins).
std::strong_ordering term_order(const LMonomial& a, const LMonomial& b);

LMonomial tau_shift(const LMonomial& m, int b);

/// Ring involution Y_{i,s} -> Y_{i,12-s}^{-1}.
LMonomial iota(const LMonomial& m);

/// Renders as "1_0 1_2^-1 2_1"; the identity renders as "1".
std::string to_string(const LMonomial& m);

/// Inverse of to_string. Throws ParseError.
LMonomial parse_monomial(std::string_view text);

}  // namespace qg2
