// One PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "qg2/catalog.hpp"
#include "qg2/dimensions.hpp"
#include "qg2/errors.hpp"
#include "qg2/fm.hpp"
#include "qg2/sl2.hpp"
#include "qg2/tsystem.hpp"

using namespace qg2;

namespace {

using Clock = std::chrono::steady_clock;

constexpr Family kPlain[] = {Family::B, Family::C, Family::D, Family::E, Family::F};

// Collects every character handed out, for the property checks at the end.
class Recorder {
 public:
  explicit Recorder(Engine e) : store_(e) {}

  CharPtr get(const FamilyId& id) {
    CharPtr p = store_.get(id);
    std::lock_guard lock(mutex_);
    seen_.emplace(id, p);
    return p;
  }

  CharacterProvider provider() {
    return [this](const FamilyId& id) { return get(id); };
  }

  std::map<FamilyId, CharPtr> seen() const {
    std::lock_guard lock(mutex_);
    return seen_;
  }

 private:
  CharacterStore store_;
  mutable std::mutex mutex_;
  std::map<FamilyId, CharPtr> seen_;
};

std::vector<Recorder*>& recorders() {
  static std::vector<Recorder*> all;
  return all;
}

Recorder& fresh(Engine e = Engine::fm) {
  static std::vector<std::unique_ptr<Recorder>> owned;
  owned.push_back(std::make_unique<Recorder>(e));
  recorders().push_back(owned.back().get());
  return *owned.back();
}

struct Outcome {
  bool ok = true;
  std::ostringstream why;

  void fail(const std::string& what) {
    if (ok) why << what;
    ok = false;
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

DimFamily dim_family(Family f) {
  switch (f) {
    case Family::B: return DimFamily::B;
    case Family::C: return DimFamily::C;
    case Family::D: return DimFamily::D;
    case Family::E: return DimFamily::E;
    default: return DimFamily::F;
  }
}

std::string n2s(std::uint64_t v) { return std::to_string(v); }

// ---- 1 ----------------------------------------------------------------------

void fundamental(Outcome& o, std::string& summary) {
  const QPolynomial chi1 = fm_character(fixtures::mono("1_0"));
  const QPolynomial chi2 = fm_character(fixtures::mono("2_0"));
  o.expect(chi1.size() == 7, "chi(1_0) has " + n2s(chi1.size()) + " terms");
  o.expect(chi2.size() == 15, "chi(2_0) has " + n2s(chi2.size()) + " terms");
  for (const auto* p : {&chi1, &chi2}) {
    for (const auto& t : *p) o.expect(t.coeff == 1, "coefficient " + n2s(t.coeff) + " at " + to_string(t.monomial));
  }
  o.expect(chi1 == fixtures::poly_of(fixtures::kChi1), "chi(1_0) differs from the table");
  o.expect(chi2 == fixtures::poly_of(fixtures::kChi2), "chi(2_0) differs from the table");
  summary = "7 and 15 terms, term by term";
}

// ---- 2 ----------------------------------------------------------------------

void dimension_table(Outcome& o, std::string& summary) {
  Recorder& rec = fresh();
  struct Row {
    Family f;
    int k;
    int l;
    std::uint64_t want;
  };
  const Row rows[] = {{Family::B, 0, 2, 34}, {Family::F, 1, 1, 42},  {Family::C, 0, 2, 92},
                      {Family::B, 1, 1, 71}, {Family::D, 0, 1, 71},  {Family::E, 1, 1, 105}};
  std::ostringstream s;
  for (const auto& r : rows) {
    const FamilyId id{r.f, r.k, r.l, 0};
    const std::uint64_t mass = dim_of_character(*rec.get(id));
    const std::uint64_t closed = dim_closed_form({dim_family(r.f), r.k, r.l});
    o.expect(mass == r.want && closed == r.want,
             to_string(id) + ": mass " + n2s(mass) + ", closed form " + n2s(closed) + ", want " + n2s(r.want));
    s << (s.tellp() > 0 ? " " : "") << r.want;
  }
  summary = s.str();
}

// ---- 3 ----------------------------------------------------------------------

void closed_forms(Outcome& o, std::string& summary) {
  Recorder& rec = fresh();
  const auto start = Clock::now();
  int n = 0;
  for (Family f : kPlain) {
    const int top = (f == Family::B || f == Family::C) ? 3 : 2;
    for (int k = 0; k <= top; ++k) {
      for (int l = 0; l <= top; ++l) {
        const FamilyId id{f, k, l, 0};
        const std::uint64_t mass = dim_of_character(*rec.get(id));
        const std::uint64_t closed = dim_closed_form({dim_family(f), k, l});
        o.expect(mass == closed, to_string(id) + ": mass " + n2s(mass) + " vs " + n2s(closed));
        ++n;
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.expect(secs < 300, "took " + std::to_string(secs) + " s");
  summary = std::to_string(n) + " heads, " + std::to_string(static_cast<int>(secs)) + " s";
}

// ---- 4 ----------------------------------------------------------------------

void tsystem(Outcome& o, std::string& summary) {
  Recorder& rec = fresh();
  const auto start = Clock::now();
  int n = 0;
  for (int k = 1; k <= 3; ++k) {
    for (RelationKind kind : {RelationKind::tsys2, RelationKind::tsys1}) {
      RelationId id{kind, kind == RelationKind::tsys2 ? k : 0, kind == RelationKind::tsys1 ? k : 0, 0};
      VerificationReport rep = verify_relation(relation_instance(id), rec.provider());
      o.expect(rep.passed, to_string(id) + " fails");
      if (kind == RelationKind::tsys2 && k == 1) {
        o.expect(rep.lhs_mass == 225 && rep.top_bottom_mass == 92 && rep.source_mass == 133,
                 "tsys2 k=1 masses " + n2s(rep.lhs_mass) + " = " + n2s(rep.top_bottom_mass) + " + " +
                     n2s(rep.source_mass));
      }
      ++n;
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.expect(secs < 60, "took " + std::to_string(secs) + " s");
  summary = std::to_string(n) + " relations, 225 = 92 + 133, " + std::to_string(static_cast<int>(secs)) + " s";
}

// ---- 5 ----------------------------------------------------------------------

void extended(Outcome& o, std::string& summary) {
  Recorder& rec = fresh();
  const auto start = Clock::now();
  std::set<std::string> labels;
  int plain = 0;
  int tilde = 0;
  for (const auto& id : relation_grid(2, 2, 5, 0, true)) {
    RelationInstance inst = relation_instance(id);
    if (!inst.case_label.empty()) labels.insert(std::string(relation_name(id.kind)) + ":" + inst.case_label);
    VerificationReport rep = verify_relation(inst, rec.provider());
    o.expect(rep.passed, to_string(id) + " fails");
    ++(id.tilde ? tilde : plain);
  }
  o.expect(labels.size() == 9, "saw " + n2s(labels.size()) + " of the nine E and F cases");

  // The mirrored identity with iota applied to the plain characters only.
  int mirrored = 0;
  for (const auto& id : relation_grid(2, 2, 5, 0, false)) {
    RelationInstance inst = relation_instance(id);
    RelationId tid = id;
    tid.tilde = true;
    RelationInstance tinst = relation_instance(tid);
    std::map<FamilyId, CharPtr> by_mirror;
    auto put = [&](const FamilyId& p, const FamilyId& t) {
      by_mirror[t] = std::make_shared<const QPolynomial>(iota(*rec.get(p)));
    };
    put(inst.left, tinst.right);
    put(inst.right, tinst.left);
    put(inst.top, tinst.top);
    if (inst.bottom) put(*inst.bottom, *tinst.bottom);
    for (std::size_t i = 0; i < inst.sources.size(); ++i) put(inst.sources[i], tinst.sources[i]);
    CharacterProvider lookup = [&](const FamilyId& f) {
      auto it = by_mirror.find(f);
      if (it == by_mirror.end()) throw Error("mirror of " + to_string(f) + " not supplied");
      return it->second;
    };
    o.expect(verify_relation(tinst, lookup).passed, to_string(tid) + " fails from iota images");
    ++mirrored;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.expect(secs < 600, "took " + std::to_string(secs) + " s");
  summary = std::to_string(plain) + " plain, " + std::to_string(tilde) + " mirrored, " + std::to_string(mirrored) +
            " iota images, 9 E/F cases, " + std::to_string(static_cast<int>(secs)) + " s";
}

// ---- 6 ----------------------------------------------------------------------

void speciality(Outcome& o, std::string& summary) {
  Recorder& rec = fresh();
  int n = 0;
  for (Family f : kPlain) {
    for (int k = 0; k <= 2; ++k) {
      for (int l = 0; l <= 2; ++l) {
        const FamilyId id{f, k, l, 0};
        CharPtr p = rec.get(id);
        const auto dom = dominant_monomials(*p);
        o.expect(dom.size() == 1 && dom[0].monomial == highest_monomial(id) && dom[0].coeff == 1,
                 to_string(id) + " has " + n2s(dom.size()) + " dominant monomials");
        const FamilyId tid{mirror(f), k, l, 0};
        CharPtr t = rec.get(tid);
        const auto anti = anti_dominant_monomials(*t);
        o.expect(anti.size() == 1 && anti[0].coeff == 1, to_string(tid) + " has " + n2s(anti.size()) +
                                                             " anti-dominant monomials");
        o.expect(t->leading().monomial == highest_monomial(tid), to_string(tid) + " head mismatch");
        ++n;
      }
    }
  }
  summary = std::to_string(n) + " heads special, " + std::to_string(n) + " mirrored heads anti-special";
}

// ---- 7 ----------------------------------------------------------------------

void non_special(Outcome& o, std::string& summary) {
  const QPolynomial chi = iota(fm_character(highest_monomial({Family::B, 1, 3, -11})));
  std::map<LMonomial, Coeff> dom;
  for (const auto& m : dominant_monomials(chi)) dom[m.monomial] += m.coeff;
  o.expect(dom.size() >= 2, "only " + n2s(dom.size()) + " dominant monomials");
  o.expect(dom.count(fixtures::mono("1_0 1_2 1_4 2_11")) == 1, "1_0 1_2 1_4 2_11 missing");
  o.expect(dom.count(fixtures::mono("2_5")) == 1, "2_5 missing");
  summary = std::to_string(dom.size()) + " dominant monomials, including 1_0 1_2 1_4 2_11 and 2_5";
}

// ---- 8 ----------------------------------------------------------------------

void product_dominants(Outcome& o, std::string& summary) {
  Recorder& rec = fresh();
  const ProductCase cases[] = {ProductCase::b, ProductCase::c, ProductCase::d0,
                               ProductCase::d, ProductCase::e, ProductCase::f};
  int n = 0;
  for (ProductCase c : cases) {
    for (int k = 1; k <= 2; ++k) {
      for (int l = 1; l <= 2; ++l) {
        RelationInstance inst = product_case_instance(c, k, l, 0);
        CharPtr left = rec.get(inst.left);
        CharPtr right = rec.get(inst.right);
        std::map<LMonomial, Coeff> got;
        for (const auto& m : dominant_monomials_of_product({left.get(), right.get()})) got[m.monomial] += m.coeff;
        std::map<LMonomial, Coeff> want;
        for (const auto& m : expected_product_dominants(c, k, l, 0).monomials) want[m] += 1;
        const std::string where = "case " + std::to_string(static_cast<int>(c) + 1) + " k=" + std::to_string(k) +
                                  " l=" + std::to_string(l);
        o.expect(got == want, where + ": " + n2s(got.size()) + " dominant monomials, expected " + n2s(want.size()));
        for (const auto& [m, mult] : got) o.expect(mult == 1, where + ": multiplicity " + n2s(mult));
        ++n;
      }
    }
  }
  summary = std::to_string(n) + " products";
}

// ---- 9 ----------------------------------------------------------------------

void sources(Outcome& o, std::string& summary) {
  Recorder& rec = fresh();
  int n = 0;
  for (const auto& id : relation_grid(2, 2, 5, 0, false)) {
    RelationInstance inst = relation_instance(id);
    if (inst.sources.empty()) continue;
    std::vector<CharPtr> hold;
    std::vector<const QPolynomial*> ps;
    for (const auto& s : inst.sources) {
      hold.push_back(rec.get(s));
      ps.push_back(hold.back().get());
    }
    const auto dom = dominant_monomials_of_product(ps);
    o.expect(dom.size() == 1 && dom[0].coeff == 1, to_string(id) + ": source product has " + n2s(dom.size()) +
                                                       " dominant monomials");
    ++n;
  }
  summary = std::to_string(n) + " source products";
}

// ---- 10 ---------------------------------------------------------------------

void properties(Outcome& o, std::string& summary) {
  // fm against the recursive engine on every family head with k, l <= 2.
  Recorder& fm = fresh();
  Recorder& rec = fresh(Engine::recursive);
  const auto start = Clock::now();
  int compared = 0;
  for (Family f : kPlain) {
    for (int k = 0; k <= 2; ++k) {
      for (int l = 0; l <= 2; ++l) {
        const FamilyId id{f, k, l, 0};
        o.expect(*fm.get(id) == *rec.get(id), to_string(id) + ": engines disagree");
        ++compared;
      }
    }
  }
  const double rec_secs = std::chrono::duration<double>(Clock::now() - start).count();

  // Weyl invariance and the A-factorization round trip over everything computed.
  std::set<const QPolynomial*> done;
  int chars = 0;
  for (Recorder* r : recorders()) {
    for (const auto& [id, p] : r->seen()) {
      if (!done.insert(p.get()).second) continue;
      ++chars;
      o.expect(fixtures::weyl_invariant(*p), to_string(id) + " is not Weyl invariant");
      const LMonomial head = p->leading().monomial;
      for (const auto& t : *p) {
        AVector v = factor_over_A(head, t.monomial);
        if (head * realize(v) != t.monomial || !v.all_nonpositive()) {
          o.fail(to_string(id) + ": factor_over_A round trip fails at " + to_string(t.monomial));
          break;
        }
      }
    }
  }

  // sl2 string characters have k + 1 terms.
  for (int step : {2, 6}) {
    for (int len = 1; len <= 10; ++len) {
      const Sl2Polynomial ch = string_character(string_from(-3 * step, len, step));
      Coeff mass = 0;
      for (const auto& [m, c] : ch) mass += c;
      o.expect(mass == static_cast<Coeff>(len + 1), "string of length " + std::to_string(len) + " has mass " +
                                                        n2s(mass));
    }
  }

  // fm commutes with shifts.
  for (const char* h : {"1_0", "2_0", "1_0 1_2 2_7", "2_0 2_6 1_13", "B[k=1,l=3,s=0]"}) {
    const LMonomial head = h[0] == 'B' ? highest_monomial(parse_family_id(h)) : fixtures::mono(h);
    const QPolynomial base = fm_character(head);
    for (int b : {-7, -1, 2, 5}) {
      o.expect(fm_character(tau_shift(head, b)) == tau_shift(base, b),
               std::string("fm and tau do not commute at ") + h + " by " + std::to_string(b));
    }
  }

  summary = std::to_string(compared) + " heads fm = recursive (" + std::to_string(static_cast<int>(rec_secs)) +
            " s), " + std::to_string(chars) + " characters Weyl invariant with A round trip, strings, shifts";
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<void(Outcome&, std::string&)> run;
  };
  const Criterion all[] = {
      {1, "fundamental characters", fundamental},
      {2, "dimension table", dimension_table},
      {3, "closed forms against FM masses", closed_forms},
      {4, "KR T-systems", tsystem},
      {5, "extended T-system and mirrors", extended},
      {6, "speciality and anti-speciality", speciality},
      {7, "non-special mirrored minimal affinization", non_special},
      {8, "dominant monomials of products", product_dominants},
      {9, "source speciality", sources},
      {10, "property suites", properties},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    std::string summary;
    const auto start = Clock::now();
    try {
      c.run(o, summary);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.ok) {
      std::printf("PASS %d %s: %s [%.1f s]\n", c.number, c.name, summary.c_str(), secs);
    } else {
      std::printf("FAIL %d %s: %s [%.1f s]\n", c.number, c.name, o.why.str().c_str(), secs);
      ++failed;
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
