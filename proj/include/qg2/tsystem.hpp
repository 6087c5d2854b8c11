#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "qg2/catalog.hpp"
#include "qg2/fm.hpp"
#include "qg2/polynomial.hpp"

namespace qg2 {

// ---- relations ------------------------------------------------------------

/// tsys1 and tsys2 are the node-1 and node-2 KR T-systems. The others are the
/// extended relations; e0 and e1 are pure products.
enum class RelationKind { tsys1, tsys2, b, e0, e1, eext, c, d0, d, f };

/// Parameters by kind: tsys1, d0, e0, e1 use l; tsys2 uses k; eext uses k as t.
/// tilde selects the mirrored relation with left and right exchanged.
struct RelationId {
  RelationKind kind = RelationKind::tsys2;
  int k = 0;
  int l = 0;
  int s = 0;
  bool tilde = false;

  friend bool operator==(const RelationId&, const RelationId&) = default;
};

/// [left][right] = [top][bottom] + prod [sources]. For e0 and e1 the bottom is
/// absent and there are no sources, i.e. [left][right] = [top].
struct RelationInstance {
  RelationId id;
  FamilyId left;
  FamilyId right;
  FamilyId top;
  std::optional<FamilyId> bottom;
  std::vector<FamilyId> sources;
  /// Which branch of a case split applied, e.g. "t=3r+2, l=2p-1"; empty otherwise.
  std::string case_label;
};

std::string_view relation_name(RelationKind k);
/// Accepts the names printed by relation_name. Throws ParseError.
RelationKind parse_relation_kind(std::string_view name);
std::string to_string(const RelationId& id);

/// Throws InvalidParameters outside the stated ranges.
RelationInstance relation_instance(const RelationId& id);

/// All instances with 1 <= k, l <= kmax, lmax (t from 2 to tmax for eext,
/// k up to max(kmax, 3) for f so every case appears), plain and tilde.
std::vector<RelationId> relation_grid(int kmax, int lmax, int tmax, int s, bool with_tilde);

// ---- characters -------------------------------------------------------------

using CharPtr = std::shared_ptr<const QPolynomial>;
using CharacterProvider = std::function<CharPtr(const FamilyId&)>;

enum class Engine { fm, recursive };

std::string_view engine_name(Engine e);

/// Thread-safe memo of characters keyed by the untilded family at s = 0;
/// other shifts come from tau, tilde families from iota. Trivial aliases are
/// resolved first, so e.g. C[k=2,l=0] and B[k=2,l=0] share one entry.
///
/// The fm engine runs the FM algorithm on every head. The recursive engine
/// only runs it on 1_0 and 2_0 and obtains everything else by solving a
/// relation for its top module.
class CharacterStore {
 public:
  explicit CharacterStore(Engine engine, FmOptions opts = {});

  CharPtr get(const FamilyId& id);
  CharacterProvider provider();
  Engine engine() const { return engine_; }
  std::size_t cached() const;

 private:
  CharPtr base(Family f, int k, int l);
  CharPtr compute(Family f, int k, int l);
  CharPtr solve_top(const RelationId& rel);

  Engine engine_;
  FmOptions opts_;
  mutable std::shared_mutex mutex_;
  std::map<std::tuple<int, int, int>, CharPtr> memo_;
};

/// The same character through the recursive engine, memoized in a store local
/// to the call.
QPolynomial compute_recursive(const FamilyId& id);

// ---- verification -----------------------------------------------------------

struct Discrepancy {
  LMonomial monomial;
  Coeff lhs = 0;
  Coeff rhs = 0;
};

struct VerificationReport {
  RelationId id;
  bool passed = false;
  Coeff lhs_mass = 0;
  Coeff top_bottom_mass = 0;
  Coeff source_mass = 0;
  std::optional<Discrepancy> first_discrepancy;
  double seconds = 0;
};

/// Compares chi(L) chi(R) with chi(T) chi(B) + prod chi(S) height class by
/// height class from the top, so only one class of each side is held at a time.
/// Never throws IdentityFails; see require_pass.
VerificationReport verify_relation(const RelationInstance& inst, const CharacterProvider& chars);

/// Throws IdentityFails naming the first discrepant monomial.
void require_pass(const VerificationReport& report);

/// q with num = den * q, by leading-term elimination class by class. Throws
/// NotDivisible on a nonzero remainder or a negative intermediate coefficient.
QPolynomial poly_div_exact(const QPolynomial& num, const QPolynomial& den);

// ---- dominant monomials -----------------------------------------------------

struct Multiplicity {
  LMonomial monomial;
  Coeff coeff = 0;

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

/// Sorted by canonical key order.
std::vector<Multiplicity> dominant_monomials(const QPolynomial& p);
std::vector<Multiplicity> anti_dominant_monomials(const QPolynomial& p);

/// Dominant monomials of a product without expanding the whole product.
std::vector<Multiplicity> dominant_monomials_of_product(const std::vector<const QPolynomial*>& factors);

/// The six cases of the dominant monomial classification of [L][R].
enum class ProductCase { b = 1, c = 2, d0 = 3, d = 4, e = 5, f = 6 };

struct DominantChain {
  /// M_0 = head of L R, M_j = M_{j-1} times the A^{-1} in steps[j-1].
  std::vector<LMonomial> monomials;
  std::vector<std::vector<std::pair<Node, int>>> steps;
};

/// Case d0 ignores k. Throws InvalidParameters for k < 1 (other cases) or l < 1.
DominantChain expected_product_dominants(ProductCase c, int k, int l, int s);

/// Families of L, R, T, B for the case.
RelationInstance product_case_instance(ProductCase c, int k, int l, int s);

struct IrreducibilityItem {
  int index = 0;
  LMonomial m;  // M_i
  LMonomial n;  // n_i
  /// n_i is absent from chi(T) chi(B).
  bool absent_from_product = false;
  /// n_i in chi_q(M_i), established by a truncation certificate.
  std::optional<bool> membership;
  std::string detail;
};

struct IrreducibilityReport {
  bool passed = false;
  std::vector<IrreducibilityItem> items;
};

/// For each non-highest dominant monomial M_i of T B, checks that the witness
/// n_i lies outside chi(T) chi(B). n_i is M_i times the A^{-1} of the step
/// that produced M_i, applied once more. n_i in chi_q(M_i) is confirmed with a
/// truncation certificate over those A-directions when one exists; otherwise
/// membership stays empty. passed is false only when n_i is in the product
/// or a certified truncation misses it.
IrreducibilityReport irreducibility_certificate(ProductCase c, int k, int l, int s, const CharacterProvider& chars);

/// The explicit truncation data for the middle witness of the C case: U and
/// the five monomials m_0..m_4 starting at M_l. Needs k >= 2, since only
/// then is M_l followed by a witness.
struct CCaseCertificate {
  TruncationSet u;
  std::vector<LMonomial> monomials;
};
CCaseCertificate c_case_certificate(int k, int l, int s);

}  // namespace qg2
