#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qg2/monomial.hpp"

namespace qg2 {

/// B..F and their tilde mirrors (i_a -> i_{-a}). KR1[l=n,s] is the node-1 KR
/// head 1_s 1_{s+2} ... (n factors), KR2[k=n,s] the node-2 head 2_s 2_{s+6} ....
/// MinAff[k,l,s] is the two-first minimal affinization of k w_1 + l w_2.
enum class Family { B, C, D, E, F, Bt, Ct, Dt, Et, Ft, KR1, KR2, MinAff };

inline constexpr Family kAllFamilies[] = {Family::B,  Family::C,  Family::D,  Family::E,   Family::F,
                                          Family::Bt, Family::Ct, Family::Dt, Family::Et,  Family::Ft,
                                          Family::KR1, Family::KR2, Family::MinAff};

struct FamilyId {
  Family family = Family::B;
  int k = 0;
  int l = 0;
  int s = 0;

  friend auto operator<=>(const FamilyId&, const FamilyId&) = default;
};

std::string_view family_name(Family f);
bool is_tilde(Family f);
/// B <-> Bt and so on; KR1, KR2 and MinAff map to themselves.
Family mirror(Family f);

/// Throws InvalidParameters for negative k or l, or a KR id with the unused
/// index nonzero.
LMonomial highest_monomial(const FamilyId& id);

/// Ids with the same head found through the standard identifications, id itself first.
std::vector<FamilyId> trivial_aliases(const FamilyId& id);

enum class Orientation { two_first, one_first };

/// Minimal affinization head for the classical weight k w_1 + l w_2, shifted by s.
LMonomial minimal_affinization_monomial(int k, int l, int s, Orientation o);

/// "B[k=2,l=1,s=0]". Keys may come in any order; missing keys default to 0.
std::string to_string(const FamilyId& id);
FamilyId parse_family_id(std::string_view text);

}  // namespace qg2
