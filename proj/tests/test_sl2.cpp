#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "qg2/errors.hpp"
#include "qg2/sl2.hpp"

using namespace qg2;
using fixtures::mono;

namespace {

Sl2Monomial ys(std::vector<int> shifts) {
  std::vector<std::pair<int, int>> pairs;
  for (int s : shifts) pairs.emplace_back(s, 1);
  return Sl2Monomial::from_pairs(std::move(pairs));
}

Sl2Monomial y(std::vector<std::pair<int, int>> pairs) { return Sl2Monomial::from_pairs(std::move(pairs)); }

Coeff mass(const Sl2Polynomial& p) {
  Coeff total = 0;
  for (const auto& [m, c] : p) total += c;
  return total;
}

}  // namespace

TEST_CASE("beta examples") {
  CHECK(beta(mono("2_0 1_7"), Node::one) == ys({7}));
  CHECK(beta(mono("1_2^-1 2_1"), Node::two) == ys({1}));
  CHECK(beta(LMonomial{}, Node::two).is_identity());
}

TEST_CASE("general position examples") {
  CHECK_FALSE(in_general_position(string_from(0, 2, 2), string_from(4, 1, 2)));
  CHECK(in_general_position(string_from(0, 3, 2), string_from(2, 1, 2)));
  CHECK(in_general_position(string_from(0, 1, 2), string_from(6, 1, 2)));
  CHECK_FALSE(in_general_position(string_from(0, 1, 2), string_from(2, 1, 2)));
  CHECK(in_general_position(string_from(0, 1, 2), string_from(1, 1, 2)));
  CHECK_THROWS_AS(in_general_position(string_from(0, 1, 2), string_from(0, 1, 6)), StepMismatch);
}

TEST_CASE("decompose_strings examples") {
  auto one = decompose_strings(ys({1, 3, 5}), 2);
  REQUIRE(one.size() == 1);
  CHECK(one[0].length == 3);
  CHECK(one[0].center == 3);

  auto two = decompose_strings(y({{0, 1}, {2, 2}, {4, 1}}), 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].members() == std::vector<int>{0, 2, 4});
  CHECK(two[1].members() == std::vector<int>{2});

  auto apart = decompose_strings(ys({0, 4}), 2);
  REQUIRE(apart.size() == 2);
  CHECK(apart[0].members() == std::vector<int>{0});
  CHECK(apart[1].members() == std::vector<int>{4});

  auto node2 = decompose_strings(ys({8, 10, 16}), 6);
  REQUIRE(node2.size() == 2);
  CHECK(node2[0].members() == std::vector<int>{8});
  CHECK(node2[1].members() == std::vector<int>{10, 16});

  CHECK_THROWS_AS(decompose_strings(y({{0, -1}}), 2), NotDominant);
}

TEST_CASE("string characters") {
  auto single = string_character(string_from(0, 1, 2));
  REQUIRE(single.size() == 2);
  CHECK(single[0].first == ys({0}));
  CHECK(single[1].first == y({{2, -1}}));

  Sl2Polynomial pair = string_character(string_from(-1, 2, 2));
  std::vector<Sl2Monomial> got;
  for (const auto& [m, c] : pair) {
    CHECK(c == 1);
    got.push_back(m);
  }
  std::vector<Sl2Monomial> want = {ys({-1, 1}), y({{-1, 1}, {3, -1}}), y({{1, -1}, {3, -1}})};
  std::sort(want.begin(), want.end());
  CHECK(got == want);

  auto prod = sl2_character(ys({0, 4}), 2);
  CHECK(prod.size() == 4);
  CHECK(mass(prod) == 4);

  for (int k = 1; k <= 8; ++k) {
    for (int step : {2, 6}) {
      auto ch = string_character(string_from(3, k, step));
      CHECK(ch.size() == static_cast<std::size_t>(k + 1));
      CHECK(mass(ch) == static_cast<Coeff>(k + 1));
    }
  }
}

TEST_CASE("dominant monomials of sl2 characters") {
  // Nested strings give extra dominant terms: Y0 Y2 Y4 * (Y2 + Y4^-1) contains Y0 Y2.
  auto nested = sl2_character(y({{0, 1}, {2, 2}, {4, 1}}), 2);
  int nested_dominant = 0;
  for (const auto& [t, c] : nested) nested_dominant += t.is_dominant() ? 1 : 0;
  CHECK(nested_dominant == 2);

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<int> slot(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<int, int>> pairs;
    int n = count(rng);
    for (int i = 0; i < n; ++i) pairs.emplace_back(2 * slot(rng), 1);
    Sl2Monomial m = Sl2Monomial::from_pairs(pairs);
    bool multiplicity_free = std::all_of(m.entries().begin(), m.entries().end(), [](const auto& p) { return p.second == 1; });
    auto ch = sl2_character(m, 2);
    int dominant = 0;
    for (const auto& [t, c] : ch) {
      if (t == m) CHECK(c == 1);
      if (t.is_dominant()) {
        ++dominant;
        CHECK(t <= m);
      }
    }
    if (multiplicity_free) CHECK(dominant == 1);
    // Shuffled input gives the same decomposition.
    std::shuffle(pairs.begin(), pairs.end(), rng);
    auto a = decompose_strings(m, 2);
    auto b = decompose_strings(Sl2Monomial::from_pairs(pairs), 2);
    CHECK(a == b);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) CHECK(in_general_position(a[i], a[j]));
    }
  }
}

TEST_CASE("pull_back examples") {
  QPolynomial p1 = pull_back(mono("1_0"), Node::one, sl2_character(ys({0}), 2));
  CHECK(p1 == fixtures::poly_of({"1_0", "1_2^-1 2_1"}));
  QPolynomial p2 = pull_back(mono("2_0"), Node::two, sl2_character(ys({0}), 6));
  CHECK(p2 == fixtures::poly_of({"2_0", "2_6^-1 1_1 1_3 1_5"}));
  CHECK(pull_back(LMonomial{}, Node::one, {{Sl2Monomial{}, 1}}) == QPolynomial::one());
  CHECK_THROWS_AS(pull_back(mono("1_0"), Node::one, {{ys({2}), 1}}), NotAPullback);
}

TEST_CASE("beta inverts pull_back") {
  for (const char* base : {"1_0 1_2 2_5", "2_0 2_6 1_3", "1_0 1_4 2_1^-1"}) {
    LMonomial m = mono(base);
    for (Node i : kNodes) {
      Sl2Monomial top = beta(m, i);
      if (!top.is_dominant()) continue;
      auto ch = sl2_character(top, string_step(i));
      QPolynomial up = pull_back(m, i, ch);
      Sl2Polynomial back;
      for (const auto& t : up) back.emplace_back(beta(t.monomial, i), t.coeff);
      std::sort(back.begin(), back.end());
      CHECK(back == ch);
    }
  }
}
