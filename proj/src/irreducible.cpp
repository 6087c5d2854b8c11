#include "qg2/errors.hpp"
#include "qg2/tsystem.hpp"

namespace qg2 {

namespace {

bool in_product(const LMonomial& n, const QPolynomial& top, const QPolynomial* bottom) {
  if (bottom == nullptr) return top.contains(n);
  for (const auto& t : top) {
    if (bottom->contains(n * t.monomial.inverse())) return true;
  }
  return false;
}

}  // namespace

IrreducibilityReport irreducibility_certificate(ProductCase c, int k, int l, int s, const CharacterProvider& chars) {
  const RelationInstance inst = product_case_instance(c, k, l, s);
  const DominantChain chain = expected_product_dominants(c, k, l, s);
  CharPtr top = chars(inst.top);
  CharPtr bottom = inst.bottom ? chars(*inst.bottom) : nullptr;

  IrreducibilityReport rep;
  rep.passed = true;
  const auto n = chain.monomials.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    IrreducibilityItem item;
    item.index = static_cast<int>(i);
    item.m = chain.monomials[i];
    // n_i repeats the step that produced M_i.
    TruncationSet u;
    item.n = item.m;
    for (auto [node, a] : chain.steps[i - 1]) {
      u.members.insert({node, a});
      item.n *= a_inverse(node, a);
    }
    item.absent_from_product = !in_product(item.n, *top, bottom.get());

    try {
      FmOptions opts;
      opts.expect_special = false;
      QPolynomial trunc = truncated_character(item.m, u, opts);
      std::vector<LMonomial> ms;
      for (const auto& t : trunc) ms.push_back(t.monomial);
      CertificateReport cert = check_truncation_certificate(item.m, u, ms);
      if (cert.passed) {
        item.membership = trunc.contains(item.n);
        if (!*item.membership) item.detail = "witness outside the certified truncation";
      } else {
        item.detail = "not machine-checked: condition " + std::to_string(cert.failed_condition) + ": " + cert.detail;
      }
    } catch (const Error& e) {
      item.detail = std::string("not machine-checked: ") + e.what();
    }
    if (!item.absent_from_product || item.membership == false) rep.passed = false;
    rep.items.push_back(std::move(item));
  }
  return rep;
}

}  // namespace qg2
