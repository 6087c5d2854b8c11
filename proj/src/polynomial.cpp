#include "qg2/polynomial.hpp"

#include <algorithm>
#include <string>

#include "kernel.hpp"
#include "qg2/errors.hpp"

namespace qg2 {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow("coefficient overflow in addition");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow("coefficient overflow in multiplication");
  return r;
}

namespace {

void sort_terms(std::vector<Term>& terms) {
  struct Keyed {
    int height;
    Term* term;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(terms.size());
  for (auto& t : terms) keyed.push_back({weight_of(t.monomial).height(), &t});
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.height != b.height) return a.height > b.height;
    return term_order(a.term->monomial, b.term->monomial) == std::strong_ordering::greater;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& k : keyed) out.push_back(std::move(*k.term));
  terms = std::move(out);
}

}  // namespace

QPolynomial QPolynomial::one() { return monomial(LMonomial{}, 1); }

QPolynomial QPolynomial::monomial(LMonomial m, Coeff c) {
  QPolynomial p;
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

QPolynomial QPolynomial::from_terms(std::vector<Term> terms) {
  PolyAccumulator acc;
  acc.reserve(terms.size());
  for (auto& t : terms) acc.add(std::move(t.monomial), t.coeff);
  return std::move(acc).finish();
}

Coeff QPolynomial::coefficient(const LMonomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const LMonomial& key) {
    return term_order(t.monomial, key) == std::strong_ordering::greater;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

const Term& QPolynomial::leading() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

Coeff QPolynomial::mass() const {
  Coeff total = 0;
  for (const auto& t : terms_) total = checked_add(total, t.coeff);
  return total;
}

void PolyAccumulator::add(const LMonomial& m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second = checked_add(it->second, c);
}

void PolyAccumulator::add(LMonomial&& m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) it->second = checked_add(it->second, c);
}

void PolyAccumulator::add(const QPolynomial& p) {
  for (const auto& t : p) add(t.monomial, t.coeff);
}

QPolynomial PolyAccumulator::finish() && {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (auto& [m, c] : terms_) {
    if (c != 0) terms.push_back({m, c});
  }
  terms_.clear();
  sort_terms(terms);
  QPolynomial p;
  p.terms_ = std::move(terms);
  return p;
}

QPolynomial poly_add(const QPolynomial& a, const QPolynomial& b) {
  PolyAccumulator acc;
  acc.reserve(a.size() + b.size());
  acc.add(a);
  acc.add(b);
  return std::move(acc).finish();
}

QPolynomial poly_mul(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (auto space = detail::PackedSpace::covering({&a, &b})) {
    auto ga = detail::grade<detail::Packed>(a, *space);
    auto gb = detail::grade<detail::Packed>(b, *space);
    return detail::to_polynomial(detail::full_product(ga, gb), *space);
  }
  detail::GenericSpace space;
  auto ga = detail::grade<LMonomial>(a, space);
  auto gb = detail::grade<LMonomial>(b, space);
  return detail::to_polynomial(detail::full_product(ga, gb), space);
}

QPolynomial poly_sub(const QPolynomial& a, const QPolynomial& b) {
  std::unordered_map<LMonomial, Coeff, LMonomialHash> left;
  left.reserve(a.size());
  for (const auto& t : a) left.emplace(t.monomial, t.coeff);
  for (const auto& t : b) {
    auto it = left.find(t.monomial);
    Coeff have = it == left.end() ? 0 : it->second;
    if (have < t.coeff) {
      throw NegativeCoefficient("subtraction leaves a negative coefficient at " + to_string(t.monomial) + " (" +
                                std::to_string(have) + " - " + std::to_string(t.coeff) + ")");
    }
    it->second = have - t.coeff;
  }
  std::vector<Term> terms;
  terms.reserve(left.size());
  for (auto& [m, c] : left) {
    if (c != 0) terms.push_back({m, c});
  }
  return QPolynomial::from_terms(std::move(terms));
}

QPolynomial poly_scale(const QPolynomial& a, const LMonomial& m) {
  std::vector<Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a) terms.push_back({t.monomial * m, t.coeff});
  return QPolynomial::from_terms(std::move(terms));
}

QPolynomial tau_shift(const QPolynomial& p, int b) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({tau_shift(t.monomial, b), t.coeff});
  return QPolynomial::from_terms(std::move(terms));
}

QPolynomial iota(const QPolynomial& p) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({iota(t.monomial), t.coeff});
  return QPolynomial::from_terms(std::move(terms));
}

}  // namespace qg2
