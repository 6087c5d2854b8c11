#include "doctest.h"
#include "fixtures.hpp"
#include "qg2/catalog.hpp"
#include "qg2/errors.hpp"
#include "qg2/fm.hpp"

using namespace qg2;
using fixtures::mono;

namespace {

bool has(const std::vector<FamilyId>& ids, FamilyId id) { return std::find(ids.begin(), ids.end(), id) != ids.end(); }

}  // namespace

TEST_CASE("highest monomial examples") {
  CHECK(highest_monomial({Family::B, 1, 1, 0}) == mono("2_0 1_7"));
  CHECK(highest_monomial({Family::E, 3, 1, 1}) == mono("1_1 1_3 1_5 2_10"));
  CHECK(highest_monomial({Family::B, 0, 0, 5}).is_identity());
  CHECK(highest_monomial({Family::Bt, 1, 3, -11}) == mono("1_0 1_2 1_4 2_11"));
  CHECK(highest_monomial({Family::C, 1, 1, 6}) == mono("2_6 2_16"));
  CHECK(highest_monomial({Family::D, 0, 1, 0}) == mono("1_1 2_8"));
  CHECK(highest_monomial({Family::F, 1, 1, 0}) == mono("1_0 1_8"));
  CHECK(highest_monomial({Family::E, 1, 1, 0}) == mono("1_0 2_5"));
  CHECK(highest_monomial({Family::E, 0, 4, 0}) == mono("2_3 2_5 2_9 2_11"));
  CHECK(highest_monomial({Family::KR1, 0, 3, 2}) == mono("1_2 1_4 1_6"));
  CHECK(highest_monomial({Family::KR2, 2, 0, 1}) == mono("2_1 2_7"));
  CHECK(highest_monomial({Family::Dt, 0, 1, 0}) == mono("1_-1 2_-8"));
  CHECK_THROWS_AS(highest_monomial({Family::KR1, 1, 1, 0}), InvalidParameters);
  CHECK_THROWS_AS(highest_monomial({Family::B, -1, 0, 0}), InvalidParameters);
}

TEST_CASE("heads are dominant") {
  for (Family f : kAllFamilies) {
    for (int k = 0; k <= 4; ++k) {
      for (int l = 0; l <= 4; ++l) {
        if ((f == Family::KR1 && k != 0) || (f == Family::KR2 && l != 0)) continue;
        for (int s : {-3, 0, 7}) CHECK(is_dominant(highest_monomial({f, k, l, s})));
      }
    }
  }
}

TEST_CASE("trivial aliases") {
  for (int k = 0; k <= 5; ++k) {
    for (int s : {-2, 0, 3}) {
      auto e = trivial_aliases({Family::E, k, 0, s});
      CHECK(has(e, {Family::B, 0, k, s - 1}));
      CHECK(has(e, {Family::F, 0, k, s - 6}));
      CHECK(has(e, {Family::F, k, 0, s}));
      auto d = trivial_aliases({Family::D, k, 0, s});
      CHECK(has(d, {Family::B, k, 1, s}));
      auto b = trivial_aliases({Family::B, k, 0, s});
      CHECK(has(b, {Family::C, 0, k, s - 4}));
      auto dt = trivial_aliases({Family::D, 0, k, s});
      CHECK(has(dt, {Family::Bt, k, 1, -s - 6 * k - 2}));
      CHECK(has(trivial_aliases({Family::Et, k, 0, s}), {Family::Ft, 0, k, s - 6}));
    }
  }
  auto unit = trivial_aliases({Family::B, 0, 0, 4});
  CHECK(unit.front() == FamilyId{Family::B, 0, 0, 4});
  CHECK(has(unit, {Family::C, 0, 0, 4}));

  // Every alias has exactly the same head.
  for (Family f : kAllFamilies) {
    for (int k = 0; k <= 3; ++k) {
      for (int l = 0; l <= 3; ++l) {
        if ((f == Family::KR1 && k != 0) || (f == Family::KR2 && l != 0)) continue;
        FamilyId id{f, k, l, 1};
        auto aliases = trivial_aliases(id);
        CHECK(aliases.front() == id);
        for (const auto& a : aliases) CHECK_MESSAGE(highest_monomial(a) == highest_monomial(id), to_string(a));
      }
    }
  }
}

TEST_CASE("minimal affinizations") {
  CHECK(minimal_affinization_monomial(1, 1, 0, Orientation::two_first) == mono("2_0 1_7"));
  CHECK(minimal_affinization_monomial(1, 1, 0, Orientation::one_first) == mono("1_0 2_7"));
  CHECK(minimal_affinization_monomial(0, 0, 3, Orientation::one_first).is_identity());
  for (int k = 0; k <= 4; ++k) {
    for (int l = 0; l <= 4; ++l) {
      for (int s : {-4, 0, 5}) {
        CHECK(minimal_affinization_monomial(k, l, s, Orientation::two_first) == highest_monomial({Family::B, l, k, s}));
        CHECK(minimal_affinization_monomial(k, l, s, Orientation::one_first) ==
              highest_monomial({Family::Bt, l, k, -s - 6 * l - 2 * k + 1}));
        CHECK(highest_monomial({Family::MinAff, k, l, s}) == highest_monomial({Family::B, l, k, s}));
      }
    }
  }
}

TEST_CASE("tilde heads are iota images of lowest terms") {
  for (Family f : {Family::B, Family::C, Family::D, Family::E, Family::F}) {
    for (int k = 0; k <= 1; ++k) {
      for (int l = 0; l <= 1; ++l) {
        QPolynomial ch = fm_character(highest_monomial({f, k, l, 0}));
        std::vector<LMonomial> lowest;
        for (const auto& t : ch) {
          if (is_antidominant(t.monomial)) lowest.push_back(t.monomial);
        }
        REQUIRE(lowest.size() == 1);
        CHECK(iota(lowest[0]) == highest_monomial({mirror(f), k, l, 0}));
      }
    }
  }
}

TEST_CASE("family id text form") {
  FamilyId id{Family::B, 2, 1, 0};
  CHECK(to_string(id) == "B[k=2,l=1,s=0]");
  CHECK(parse_family_id("B[k=2,l=1,s=0]") == id);
  CHECK(parse_family_id("Dt[s=-7,l=2]") == FamilyId{Family::Dt, 0, 2, -7});
  CHECK(parse_family_id("MinAff") == FamilyId{Family::MinAff, 0, 0, 0});
  for (Family f : kAllFamilies) {
    FamilyId x{f, 3, 0, -5};
    CHECK(parse_family_id(to_string(x)) == x);
  }
  CHECK_THROWS_AS(parse_family_id("G[k=1]"), ParseError);
  CHECK_THROWS_AS(parse_family_id("B[k=1"), ParseError);
  CHECK_THROWS_AS(parse_family_id("B[k=x]"), ParseError);
  CHECK_THROWS_AS(parse_family_id("B[k=1,k=2]"), ParseError);
  CHECK_THROWS_AS(parse_family_id("B[k=-1]"), ParseError);
  CHECK_THROWS_AS(parse_family_id("B[q=1]"), ParseError);
}
