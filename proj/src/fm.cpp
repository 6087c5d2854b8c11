#include "qg2/fm.hpp"

#include <absl/container/node_hash_map.h>

#include <algorithm>
#include <unordered_set>

#include "qg2/errors.hpp"
#include "qg2/sl2.hpp"

namespace qg2 {

namespace {

struct Record {
  std::array<Coeff, 2> demand{0, 0};
  Coeff mult = 0;
};

void append_a_inverse(std::vector<Factor>& fs, Node i, int b) {
  if (i == Node::one) {
    fs.push_back({Node::one, b - 1, -1});
    fs.push_back({Node::one, b + 1, -1});
    fs.push_back({Node::two, b, 1});
  } else {
    fs.push_back({Node::two, b - 3, -1});
    fs.push_back({Node::two, b + 3, -1});
    fs.push_back({Node::one, b - 2, 1});
    fs.push_back({Node::one, b, 1});
    fs.push_back({Node::one, b + 2, 1});
  }
}

}  // namespace

FmResult fm_run(const LMonomial& m_plus, const FmOptions& opts) {
  if (!is_dominant(m_plus)) throw NotDominant(to_string(m_plus) + " is not dominant");
  if (opts.max_terms == 0) throw InvalidParameters("max_terms must be positive");

  FmResult result;
  absl::node_hash_map<LMonomial, Record, LMonomialHash> table;
  std::vector<std::vector<const LMonomial*>> buckets(1);
  {
    auto [it, inserted] = table.try_emplace(m_plus);
    buckets[0].push_back(&it->first);
  }

  auto flag = [&](auto error, const std::string& message) {
    if (opts.expect_special) throw error;
    if (result.verified || result.warnings.size() < 16) result.warnings.push_back(message);
    result.verified = false;
  };

  for (std::size_t d = 0; d < buckets.size(); ++d) {
    for (std::size_t j = 0; j < buckets[d].size(); ++j) {
      const LMonomial& m = *buckets[d][j];
      Record& rec = table.find(m)->second;
      rec.mult = d == 0 ? 1 : std::max(rec.demand[0], rec.demand[1]);
      if (d > 0 && is_dominant(m)) {
        std::string msg = "second dominant monomial " + to_string(m) + " in the FM expansion of " + to_string(m_plus);
        flag(SecondDominantFound(msg), msg);
      }
      for (Node i : kNodes) {
        const std::size_t slot = node_slot(i);
        Sl2Monomial b = beta(m, i);
        if (!b.is_dominant()) {
          if (rec.demand[slot] != rec.mult) {
            std::string msg = "restriction to node " + std::to_string(node_number(i)) + " does not cover " +
                              to_string(m) + " (" + std::to_string(rec.demand[slot]) + " of " +
                              std::to_string(rec.mult) + ")";
            flag(InconsistentRestriction(msg), msg);
          }
          continue;
        }
        const Coeff residual = rec.mult - rec.demand[slot];
        rec.demand[slot] = rec.mult;
        if (residual == 0 || b.is_identity()) continue;
        Sl2ExpansionRef ex = sl2_expansion(b, i);
        for (std::size_t e = 1; e < ex.table->entries.size(); ++e) {
          const auto& entry = ex.table->entries[e];
          if (opts.trunc) {
            bool inside = std::all_of(entry.a_shifts.begin(), entry.a_shifts.end(),
                                      [&](int s) { return opts.trunc->contains(i, s + ex.offset); });
            if (!inside) continue;
          }
          std::vector<Factor> fs(m.factors().begin(), m.factors().end());
          for (int s : entry.a_shifts) append_a_inverse(fs, i, s + ex.offset);
          LMonomial child = LMonomial::from_factors(std::move(fs));
          const std::size_t child_depth = d + entry.a_shifts.size();
          auto [it, inserted] = table.try_emplace(std::move(child));
          if (inserted) {
            if (table.size() > opts.max_terms) {
              throw TermCapExceeded("FM expansion of " + to_string(m_plus) + " exceeded " +
                                    std::to_string(opts.max_terms) + " terms");
            }
            if (buckets.size() <= child_depth) buckets.resize(child_depth + 1);
            buckets[child_depth].push_back(&it->first);
          }
          auto& slot_demand = it->second.demand[slot];
          slot_demand = checked_add(slot_demand, checked_mul(residual, entry.coeff));
        }
      }
    }
  }

  std::vector<Term> terms;
  terms.reserve(table.size());
  for (auto& [m, rec] : table) terms.push_back({m, rec.mult});
  result.character = QPolynomial::from_terms(std::move(terms));
  return result;
}

QPolynomial truncated_character(const LMonomial& m_plus, const TruncationSet& u, const FmOptions& opts) {
  FmOptions o = opts;
  o.trunc = u;
  return fm_character(m_plus, o);
}

namespace {

CertificateReport fail(int condition, std::string detail) { return {false, condition, std::move(detail)}; }

// Entries of m' / m over A when it is a pure node-i element, else nullopt.
std::optional<AVector> node_only_factor(const LMonomial& m, const LMonomial& other, Node i) {
  try {
    AVector v = factor_over_A(m, other);
    for (const auto& e : v.entries()) {
      if (e.node != i) return std::nullopt;
    }
    return v;
  } catch (const NotInLattice&) {
    return std::nullopt;
  }
}

}  // namespace

CertificateReport check_truncation_certificate(const LMonomial& m_plus, const TruncationSet& u,
                                               const std::vector<LMonomial>& monomials) {
  std::unordered_set<LMonomial, LMonomialHash> members(monomials.begin(), monomials.end());
  if (members.size() != monomials.size()) return fail(1, "the monomials are not distinct");

  // (i) M lies in m_+ Q_U^-.
  for (const auto& m : monomials) {
    try {
      AVector v = factor_over_A(m_plus, m);
      for (const auto& e : v.entries()) {
        if (e.exp > 0 || !u.contains(e.node, e.shift)) {
          return fail(1, to_string(m) + " is not in m_+ Q_U^-");
        }
      }
    } catch (const NotInLattice&) {
      return fail(1, to_string(m) + " is not in the root lattice coset of m_+");
    }
  }

  // (ii) m_+ is the only dominant member.
  if (members.count(m_plus) == 0) return fail(2, "m_+ is missing");
  if (!is_dominant(m_plus)) return fail(2, to_string(m_plus) + " is not dominant");
  for (const auto& m : monomials) {
    if (m != m_plus && is_dominant(m)) return fail(2, to_string(m) + " is a second dominant monomial");
  }

  // (iii) one-step escapes: m' = m A_{i,a}^{-1} A_{j,b} in M forces m A_{i,a}^{-1} in M.
  for (const auto& m : monomials) {
    for (const auto& other : monomials) {
      if (m == other) continue;
      AVector v;
      try {
        v = factor_over_A(m, other);
      } catch (const NotInLattice&) {
        continue;
      }
      auto es = v.entries();
      if (es.size() != 2) continue;
      const Factor* down = nullptr;
      const Factor* up = nullptr;
      for (const auto& e : es) {
        if (e.exp == -1) down = &e;
        if (e.exp == 1) up = &e;
      }
      if (down == nullptr || up == nullptr || !u.contains(down->node, down->shift)) continue;
      if (members.count(m * a_inverse(down->node, down->shift)) == 0) {
        return fail(3, to_string(other) + " is reached from " + to_string(m) + " through A^{-1}_{" +
                           std::to_string(node_number(down->node)) + "," + std::to_string(down->shift) +
                           "} which leaves M");
      }
    }
  }

  // (iv) each i-family is the truncated sl2 character of exactly one i-dominant member.
  for (const auto& m : monomials) {
    for (Node i : kNodes) {
      // Candidates are taken from the family itself; otherwise every member
      // with a trivial node-i part would match a trivial family.
      std::vector<const LMonomial*> members_of_family;
      std::vector<Sl2Monomial> family;
      for (const auto& other : monomials) {
        if (node_only_factor(m, other, i)) {
          members_of_family.push_back(&other);
          family.push_back(beta(other, i));
        }
      }
      std::sort(family.begin(), family.end());
      int matches = 0;
      for (const LMonomial* cand_ptr : members_of_family) {
        const LMonomial& cand = *cand_ptr;
        if (!is_i_dominant(cand, i)) continue;
        Sl2Monomial top = beta(cand, i);
        std::vector<Sl2Monomial> truncated;
        bool multiplicity_one = true;
        if (top.is_identity()) {
          truncated.push_back(top);
        } else {
          Sl2ExpansionRef ex = sl2_expansion(top, i);
          for (const auto& entry : ex.table->entries) {
            bool inside = std::all_of(entry.a_shifts.begin(), entry.a_shifts.end(),
                                      [&](int s) { return u.contains(i, s + ex.offset); });
            if (!inside) continue;
            if (entry.coeff != 1) multiplicity_one = false;
            Sl2Monomial t = top;
            for (int s : entry.a_shifts) t = t * sl2_a_monomial(s + ex.offset, string_step(i)).inverse();
            truncated.push_back(std::move(t));
          }
        }
        std::sort(truncated.begin(), truncated.end());
        if (multiplicity_one && truncated == family) ++matches;
      }
      if (matches != 1) {
        return fail(4, "the node-" + std::to_string(node_number(i)) + " family of " + to_string(m) + " has " +
                           std::to_string(matches) + " matching i-dominant heads");
      }
    }
  }
  return {true, 0, "all four conditions hold"};
}

}  // namespace qg2
