#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "qg2/monomial.hpp"

namespace qg2 {

using Coeff = std::uint64_t;

/// Overflow-checked coefficient arithmetic; throws CoefficientOverflow.
Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

struct Term {
  LMonomial monomial;
  Coeff coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite sum of monomials with positive integer coefficients, e.g. a
/// (truncated) q-character. Terms are stored in decreasing term_order, so the
/// first term is the leading one.
class QPolynomial {
 public:
  QPolynomial() = default;

  static QPolynomial one();
  static QPolynomial monomial(LMonomial m, Coeff c = 1);
  /// Merges repeated monomials, drops zero coefficients and sorts.
  static QPolynomial from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Zero if m is absent.
  Coeff coefficient(const LMonomial& m) const;
  bool contains(const LMonomial& m) const { return coefficient(m) != 0; }
  const Term& leading() const;
  /// Sum of all coefficients (the dimension of a module).
  Coeff mass() const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  friend class PolyAccumulator;
  std::vector<Term> terms_;
};

/// Hash-map accumulator used to build polynomials term by term.
class PolyAccumulator {
 public:
  void reserve(std::size_t n) { terms_.reserve(n); }
  void add(const LMonomial& m, Coeff c);
  void add(LMonomial&& m, Coeff c);
  void add(const QPolynomial& p);
  std::size_t size() const { return terms_.size(); }
  QPolynomial finish() &&;

 private:
  std::unordered_map<LMonomial, Coeff, LMonomialHash> terms_;
};

QPolynomial poly_add(const QPolynomial& a, const QPolynomial& b);
QPolynomial poly_mul(const QPolynomial& a, const QPolynomial& b);
/// a - b; throws NegativeCoefficient if some coefficient of b exceeds that of a.
QPolynomial poly_sub(const QPolynomial& a, const QPolynomial& b);
QPolynomial poly_scale(const QPolynomial& a, const LMonomial& m);

inline QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) { return poly_add(a, b); }
inline QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) { return poly_mul(a, b); }
inline QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) { return poly_sub(a, b); }

QPolynomial tau_shift(const QPolynomial& p, int b);
QPolynomial iota(const QPolynomial& p);

}  // namespace qg2
