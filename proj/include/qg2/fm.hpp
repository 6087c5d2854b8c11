#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qg2/monomial.hpp"
#include "qg2/polynomial.hpp"

namespace qg2 {

/// A set U of (node, shift) directions: an explicit list, all shifts below a
/// bound, or the union of both. Default-constructed U is empty.
struct TruncationSet {
  std::set<std::pair<Node, int>> members;
  std::optional<int> shift_below;

  bool contains(Node i, int shift) const {
    return members.count({i, shift}) != 0 || (shift_below && shift < *shift_below);
  }

  static TruncationSet below(int bound) {
    TruncationSet u;
    u.shift_below = bound;
    return u;
  }
};

struct FmOptions {
  std::size_t max_terms = 5'000'000;
  /// No truncation when empty.
  std::optional<TruncationSet> trunc;
  bool expect_special = true;
};

struct FmResult {
  QPolynomial character;
  /// False when a second dominant monomial or an inconsistent restriction was
  /// met with expect_special off.
  bool verified = true;
  std::vector<std::string> warnings;
};

/// Frenkel-Mukhin algorithm. Throws NotDominant, SecondDominantFound,
/// InconsistentRestriction (both only with expect_special), TermCapExceeded.
FmResult fm_run(const LMonomial& m_plus, const FmOptions& opts = {});

inline QPolynomial fm_character(const LMonomial& m_plus, const FmOptions& opts = {}) {
  return fm_run(m_plus, opts).character;
}

QPolynomial truncated_character(const LMonomial& m_plus, const TruncationSet& u, const FmOptions& opts = {});

struct CertificateReport {
  bool passed = false;
  /// 1 to 4 for the first violated condition, 0 on success.
  int failed_condition = 0;
  std::string detail;
};

/// Checks the four hypotheses under which sum(M) is the truncation of
/// chi_q(m_plus) to U.
CertificateReport check_truncation_certificate(const LMonomial& m_plus, const TruncationSet& u,
                                               const std::vector<LMonomial>& monomials);

}  // namespace qg2
