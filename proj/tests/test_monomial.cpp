#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "qg2/errors.hpp"
#include "qg2/monomial.hpp"
#include "qg2/polynomial.hpp"

using namespace qg2;
using fixtures::mono;

namespace {

LMonomial random_monomial(std::mt19937& rng, int max_factors = 6) {
  std::uniform_int_distribution<int> count(0, max_factors);
  std::uniform_int_distribution<int> node(1, 2);
  std::uniform_int_distribution<int> shift(-20, 20);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::vector<Factor> fs;
  int n = count(rng);
  for (int i = 0; i < n; ++i) fs.push_back({node_from_int(node(rng)), shift(rng), exp(rng)});
  return LMonomial::from_factors(std::move(fs));
}

AVector random_avector(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<int> node(1, 2);
  std::uniform_int_distribution<int> shift(-20, 20);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::vector<Factor> es;
  int n = count(rng);
  for (int i = 0; i < n; ++i) es.push_back({node_from_int(node(rng)), shift(rng), exp(rng)});
  return AVector::from_entries(std::move(es));
}

}  // namespace

TEST_CASE("mono_mul examples") {
  CHECK((mono("1_0") * mono("1_0^-1")).is_identity());
  CHECK(mono("2_0") * mono("1_7") == mono("2_0 1_7"));
  CHECK(mono("1_2^-1 2_1") * mono("1_2") == mono("2_1"));
}

TEST_CASE("text round trip") {
  CHECK(to_string(mono("2_1 1_0 1_2^-1")) == "1_0 1_2^-1 2_1");
  CHECK(to_string(LMonomial{}) == "1");
  CHECK(mono("1").is_identity());
  CHECK(mono("1_3*2_-4^2") == LMonomial::from_factors({{Node::one, 3, 1}, {Node::two, -4, 2}}));
  CHECK_THROWS_AS(parse_monomial("3_1"), ParseError);
  CHECK_THROWS_AS(parse_monomial("1_x"), ParseError);
  CHECK_THROWS_AS(parse_monomial(""), ParseError);
  CHECK_THROWS_AS(node_from_int(0), InvalidNode);
}

TEST_CASE("a_monomial examples") {
  CHECK(a_monomial(Node::one, 0) == mono("1_1 1_-1 2_0^-1"));
  CHECK(a_monomial(Node::two, 0) == mono("2_3 2_-3 1_-2^-1 1_0^-1 1_2^-1"));
  CHECK(mono("1_0") * a_inverse(Node::one, 1) == mono("1_2^-1 2_1"));
}

TEST_CASE("dominance predicates") {
  CHECK(is_dominant(mono("2_0 1_7")));
  LMonomial m = mono("1_2^-1 2_1");
  CHECK(is_i_dominant(m, Node::two));
  CHECK_FALSE(is_i_dominant(m, Node::one));
  CHECK_FALSE(is_dominant(m));
  CHECK(is_dominant(LMonomial{}));
  CHECK(is_antidominant(LMonomial{}));
}

TEST_CASE("right negativity") {
  CHECK(is_right_negative(a_inverse(Node::one, 0)));
  CHECK(is_right_negative(a_inverse(Node::two, 5)));
  CHECK_FALSE(is_right_negative(mono("1_0")));
  CHECK(is_right_negative(mono("1_2^-1 2_1")));
  CHECK_THROWS_AS(is_right_negative(LMonomial{}), EmptyMonomial);
}

TEST_CASE("factor_over_A examples") {
  LMonomial base = mono("1_0");
  AVector v = factor_over_A(base, base * a_inverse(Node::one, 2));
  CHECK(v == AVector::from_entries({{Node::one, 2, -1}}));
  CHECK(factor_over_A(base, mono("1_2^-1 2_1")) == AVector::from_entries({{Node::one, 1, -1}}));
  CHECK_THROWS_AS(factor_over_A(base, mono("1_1")), NotInLattice);
  CHECK(monomial_leq(mono("1_12^-1"), base));
  CHECK_FALSE(monomial_leq(base, mono("1_12^-1")));
}

TEST_CASE("weight_of examples") {
  CHECK(weight_of(mono("2_0 1_7")) == Weight{1, 1});
  CHECK(weight_of(a_monomial(Node::one, 3)) == Weight{2, -1});
  CHECK(weight_of(a_monomial(Node::two, 3)) == Weight{-3, 2});
  CHECK(weight_of(LMonomial{}) == Weight{0, 0});
  CHECK(weight_of(a_inverse(Node::one, 0)).height() == -1);
  CHECK(weight_of(a_inverse(Node::two, 0)).height() == -1);
}

TEST_CASE("tau and iota") {
  CHECK(tau_shift(mono("1_0"), 2) == mono("1_2"));
  CHECK(iota(mono("1_0")) == mono("1_12^-1"));
  QPolynomial chi1 = fixtures::poly_of(fixtures::kChi1);
  QPolynomial chi2 = fixtures::poly_of(fixtures::kChi2);
  CHECK(tau_shift(chi1, 0) == chi1);
  CHECK(iota(chi1) == chi1);
  CHECK(iota(iota(chi2)) == chi2);
}

TEST_CASE("polynomial arithmetic") {
  QPolynomial chi1 = fixtures::poly_of(fixtures::kChi1);
  QPolynomial chi2 = fixtures::poly_of(fixtures::kChi2);
  CHECK(chi1 * QPolynomial::one() == chi1);
  CHECK((chi1 * chi2).mass() == 105);
  CHECK((chi1 + chi1).coefficient(mono("1_0")) == 2);
  CHECK((chi1 + chi2) - chi2 == chi1);
  CHECK_THROWS_AS(chi1 - chi2, NegativeCoefficient);
  CHECK(chi1.leading().monomial == mono("1_0"));
  CHECK(chi1.contains(mono("1_4 1_8^-1")));
  CHECK_FALSE(chi1.contains(mono("1_4")));
  CHECK(tau_shift(chi1 * chi2, 3) == tau_shift(chi1, 3) * tau_shift(chi2, 3));
  CHECK_THROWS_AS(checked_mul(Coeff{1} << 40, Coeff{1} << 40), CoefficientOverflow);
}

TEST_CASE("packed and generic products agree") {
  // Shifts of mixed parity at node 1 force the generic path.
  QPolynomial a = fixtures::poly_of({"1_0", "1_1 2_3^-1", "2_40"});
  QPolynomial b = fixtures::poly_of({"1_2", "1_3^-1"});
  QPolynomial p = a * b;
  CHECK(p.size() == 6);
  CHECK(p.coefficient(mono("1_0 1_2")) == 1);
  QPolynomial chi1 = fixtures::poly_of(fixtures::kChi1);
  QPolynomial sq = chi1 * chi1;
  Coeff total = 0;
  for (const auto& x : chi1) {
    for (const auto& y : chi1) total += sq.coefficient(x.monomial * y.monomial) > 0 ? 1 : 0;
  }
  CHECK(total == 49);
  CHECK(sq.mass() == 49);
}

TEST_CASE("group laws and weight additivity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    LMonomial a = random_monomial(rng);
    LMonomial b = random_monomial(rng);
    LMonomial c = random_monomial(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * LMonomial{} == a);
    CHECK((a * a.inverse()).is_identity());
    CHECK(weight_of(a * b) == weight_of(a) + weight_of(b));
    CHECK(tau_shift(tau_shift(a, 3), -7) == tau_shift(a, -4));
    CHECK(iota(iota(a)) == a);
    CHECK(parse_monomial(to_string(a)) == a);
    if (is_dominant(a)) CHECK(is_antidominant(iota(a)));
    if (!a.is_identity() && is_right_negative(a)) CHECK_FALSE(is_dominant(a));
  }
}

TEST_CASE("factor_over_A round trip") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    LMonomial base = random_monomial(rng);
    AVector v = random_avector(rng);
    CHECK(factor_over_A(base, base * realize(v)) == v);
  }
}

TEST_CASE("products of A inverses are right-negative") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<int> node(1, 2);
  std::uniform_int_distribution<int> shift(-15, 15);
  for (int trial = 0; trial < 500; ++trial) {
    LMonomial m;
    int n = count(rng);
    for (int i = 0; i < n; ++i) m *= a_inverse(node_from_int(node(rng)), shift(rng));
    CHECK(is_right_negative(m));
  }
}

TEST_CASE("term order is a multiplicative total order") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    LMonomial a = random_monomial(rng);
    LMonomial b = random_monomial(rng);
    LMonomial c = random_monomial(rng);
    auto ab = term_order(a, b);
    CHECK((ab == 0) == (a == b));
    CHECK(term_order(b, a) == 0 <=> ab);
    CHECK(term_order(a * c, b * c) == ab);
  }
  CHECK(term_order(mono("1_0"), mono("1_0") * a_inverse(Node::two, 4)) > 0);
}
