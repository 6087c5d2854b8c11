#pragma once

#include <map>
#include <string>
#include <vector>

#include "qg2/monomial.hpp"
#include "qg2/polynomial.hpp"

namespace fixtures {

// Hand-transcribed fundamental characters.
inline const std::vector<std::string> kChi1 = {
    "1_0",
    "1_2^-1 2_1",
    "1_4 1_6 2_7^-1",
    "1_4 1_8^-1",
    "1_6^-1 1_8^-1 2_5",
    "1_10 2_11^-1",
    "1_12^-1",
};

inline const std::vector<std::string> kChi2 = {
    "2_0",
    "1_1 1_3 1_5 2_6^-1",
    "1_1 1_3 1_7^-1",
    "1_1 1_5^-1 1_7^-1 2_4",
    "1_3^-1 1_5^-1 1_7^-1 2_2 2_4",
    "1_1 1_9 2_10^-1",
    "2_4 2_8^-1",
    "1_3^-1 1_9 2_2 2_10^-1",
    "1_5 1_7 1_9 2_8^-1 2_10^-1",
    "1_1 1_11^-1",
    "1_3^-1 1_11^-1 2_2",
    "1_5 1_7 1_11^-1 2_8^-1",
    "1_5 1_9^-1 1_11^-1",
    "1_7^-1 1_9^-1 1_11^-1 2_6",
    "2_12^-1",
};

inline qg2::QPolynomial poly_of(const std::vector<std::string>& monomials) {
  std::vector<qg2::Term> terms;
  for (const auto& s : monomials) terms.push_back({qg2::parse_monomial(s), 1});
  return qg2::QPolynomial::from_terms(std::move(terms));
}

inline qg2::LMonomial mono(const char* s) { return qg2::parse_monomial(s); }

// Weight multiplicities are invariant under s1(u1,u2) = (-u1, u1+u2) and
// s2(u1,u2) = (u1+3u2, -u2), which generate the Weyl group.
inline bool weyl_invariant(const qg2::QPolynomial& p) {
  std::map<std::pair<int, int>, qg2::Coeff> mult;
  for (const auto& t : p) {
    auto w = qg2::weight_of(t.monomial);
    mult[{w.w1, w.w2}] += t.coeff;
  }
  auto lookup = [&](int a, int b) {
    auto it = mult.find({a, b});
    return it == mult.end() ? qg2::Coeff{0} : it->second;
  };
  for (const auto& [w, c] : mult) {
    auto [u1, u2] = w;
    if (lookup(-u1, u1 + u2) != c || lookup(u1 + 3 * u2, -u2) != c) return false;
  }
  return true;
}

}  // namespace fixtures
