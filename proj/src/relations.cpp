#include <algorithm>

#include "qg2/errors.hpp"
#include "qg2/tsystem.hpp"

namespace qg2 {

namespace {

constexpr std::string_view kRelationNames[] = {"tsys1", "tsys2", "b", "e0", "e1", "eext", "c", "d0", "d", "f"};

FamilyId fam(Family f, int k, int l, int s) { return {f, k, l, s}; }

// KR ids become B ids so that mirroring yields a tilde family.
FamilyId mirrored(FamilyId id) {
  if (id.family == Family::KR1) id = {Family::B, 0, id.l, id.s - 1};
  if (id.family == Family::KR2) id = {Family::B, id.k, 0, id.s};
  if (id.family == Family::MinAff) id = {Family::B, id.l, id.k, id.s};
  id.family = mirror(id.family);
  return id;
}

void require(bool ok, const RelationId& id, const char* what) {
  if (!ok) throw InvalidParameters(to_string(id) + ": " + what);
}

RelationInstance plain_instance(const RelationId& id) {
  const int k = id.k;
  const int l = id.l;
  const int s = id.s;
  RelationInstance r;
  r.id = id;
  auto set = [&](FamilyId left, FamilyId right, FamilyId top, std::optional<FamilyId> bottom,
                 std::vector<FamilyId> sources) {
    r.left = left;
    r.right = right;
    r.top = top;
    r.bottom = bottom;
    r.sources = std::move(sources);
  };
  using enum Family;
  switch (id.kind) {
    case RelationKind::tsys1:
      // The KR T-systems index node-1 strings from their first variable.
      require(l >= 1, id, "needs l >= 1");
      set(fam(KR1, 0, l, s), fam(KR1, 0, l, s + 2), fam(KR1, 0, l + 1, s), fam(KR1, 0, l - 1, s + 2),
          {fam(B, (l + 2) / 3, 0, s + 1), fam(B, (l + 1) / 3, 0, s + 3), fam(B, l / 3, 0, s + 5)});
      break;
    case RelationKind::tsys2:
      require(k >= 1, id, "needs k >= 1");
      set(fam(B, k, 0, s), fam(B, k, 0, s + 6), fam(B, k + 1, 0, s), fam(B, k - 1, 0, s + 6),
          {fam(KR1, 0, 3 * k, s + 1)});
      break;
    case RelationKind::b:
      require(k >= 1 && l >= 1, id, "needs k, l >= 1");
      // ceil((2l-2)/3) = floor(2l/3)
      set(fam(B, k, l - 1, s), fam(B, k - 1, l, s + 6), fam(B, k, l, s), fam(B, k - 1, l - 1, s + 6),
          {fam(E, 3 * k - 1, 2 * l / 3, s + 1), fam(B, (l - 1) / 3, 0, s + 6 * k + 6)});
      break;
    case RelationKind::e0:
      require(l >= 1, id, "needs l >= 1");
      set(fam(B, (l + 1) / 2, 0, s + 3), fam(B, l / 2, 0, s + 5), fam(E, 0, l, s), std::nullopt, {});
      break;
    case RelationKind::e1:
      require(l >= 1, id, "needs l >= 1");
      set(fam(D, 0, l / 2, s - 1), fam(B, (l + 1) / 2, 0, s + 5), fam(E, 1, l, s), std::nullopt, {});
      break;
    case RelationKind::eext: {
      const int t = k;
      require(t >= 2 && l >= 1, id, "needs t >= 2, l >= 1");
      const int rr = (t - 2) / 3;
      const int m = (t - 2) % 3;
      const bool odd = l % 2 == 1;
      const int p = odd ? (l + 1) / 2 : l / 2;
      std::vector<FamilyId> src;
      if (m == 0 && odd) src = {fam(D, rr, p - 1, s + 1), fam(B, rr + p, 0, s + 3), fam(B, rr, 3 * p - 2, s + 5)};
      if (m == 0 && !odd) src = {fam(B, rr + p + 1, 0, s + 1), fam(C, rr, p, s + 3), fam(B, rr, 3 * p - 1, s + 5)};
      if (m == 1 && odd) src = {fam(B, rr + 1, 3 * p - 2, s + 1), fam(D, rr, p - 1, s + 3), fam(B, rr + p, 0, s + 5)};
      if (m == 1 && !odd) src = {fam(B, rr + 1, 3 * p - 1, s + 1), fam(B, rr + p + 1, 0, s + 3), fam(C, rr, p, s + 5)};
      if (m == 2 && odd) src = {fam(B, rr + p + 1, 0, s + 1), fam(B, rr + 1, 3 * p - 2, s + 3), fam(D, rr, p - 1, s + 5)};
      if (m == 2 && !odd) src = {fam(C, rr + 1, p, s + 1), fam(B, rr + 1, 3 * p - 1, s + 3), fam(B, rr + p + 1, 0, s + 5)};
      set(fam(E, t, l - 1, s), fam(E, t - 1, l, s + 2), fam(E, t, l, s), fam(E, t - 1, l - 1, s + 2), std::move(src));
      r.case_label = "t=3r+" + std::to_string(m + 2) + (odd ? ", l=2p-1" : ", l=2p");
      break;
    }
    case RelationKind::c:
      require(k >= 1 && l >= 1, id, "needs k, l >= 1");
      set(fam(C, k, l - 1, s), fam(C, k - 1, l, s + 6), fam(C, k, l, s), fam(C, k - 1, l - 1, s + 6),
          {fam(F, 3 * k - 2, 3 * l - 2, s + 1)});
      break;
    case RelationKind::d0:
      require(l >= 1, id, "needs l >= 1");
      set(fam(D, 0, l - 1, s), fam(B, l, 0, s + 8), fam(D, 0, l, s), fam(B, l - 1, 0, s + 8),
          {fam(B, 0, 3 * l - 1, s + 4)});
      break;
    case RelationKind::d:
      require(k >= 1 && l >= 1, id, "needs k, l >= 1");
      set(fam(D, k, l - 1, s), fam(D, k - 1, l, s + 6), fam(D, k, l, s), fam(D, k - 1, l - 1, s + 6),
          {fam(F, 3 * k - 1, 3 * l - 1, s + 1)});
      break;
    case RelationKind::f: {
      require(k >= 1 && l >= 1, id, "needs k, l >= 1");
      const int rr = (k - 1) / 3;
      const int m = (k - 1) % 3;
      const FamilyId tail = fam(B, (l - 1) / 3, 0, s + 2 * k + 11);
      std::vector<FamilyId> src;
      if (m == 0) src = {fam(B, rr, 0, s + 1), fam(D, rr, l / 3, s + 3), fam(C, rr, (l + 1) / 3, s + 5), tail};
      if (m == 1) src = {fam(C, rr + 1, (l + 1) / 3, s + 1), fam(B, rr, 0, s + 3), fam(D, rr, l / 3, s + 5), tail};
      if (m == 2) src = {fam(D, rr + 1, l / 3, s + 1), fam(C, rr + 1, (l + 1) / 3, s + 3), fam(B, rr, 0, s + 5), tail};
      set(fam(F, k, l - 1, s), fam(F, k - 1, l, s + 2), fam(F, k, l, s), fam(F, k - 1, l - 1, s + 2), std::move(src));
      r.case_label = "k=3r+" + std::to_string(m + 1);
      break;
    }
  }
  return r;
}

}  // namespace

std::string_view relation_name(RelationKind k) { return kRelationNames[static_cast<int>(k)]; }

RelationKind parse_relation_kind(std::string_view name) {
  auto it = std::find(std::begin(kRelationNames), std::end(kRelationNames), name);
  if (it == std::end(kRelationNames)) throw ParseError("unknown relation '" + std::string(name) + "'");
  return static_cast<RelationKind>(it - std::begin(kRelationNames));
}

std::string to_string(const RelationId& id) {
  std::string out = id.tilde ? "~" : "";
  out += relation_name(id.kind);
  out += "(";
  switch (id.kind) {
    case RelationKind::tsys1:
    case RelationKind::e0:
    case RelationKind::e1:
    case RelationKind::d0:
      out += "l=" + std::to_string(id.l);
      break;
    case RelationKind::tsys2:
      out += "k=" + std::to_string(id.k);
      break;
    case RelationKind::eext:
      out += "t=" + std::to_string(id.k) + ",l=" + std::to_string(id.l);
      break;
    default:
      out += "k=" + std::to_string(id.k) + ",l=" + std::to_string(id.l);
      break;
  }
  return out + ",s=" + std::to_string(id.s) + ")";
}

RelationInstance relation_instance(const RelationId& id) {
  RelationId plain = id;
  plain.tilde = false;
  RelationInstance r = plain_instance(plain);
  r.id = id;
  if (!id.tilde) return r;
  // Mirrored relation: every family tilded, left and right exchanged.
  FamilyId left = mirrored(r.right);
  FamilyId right = mirrored(r.left);
  r.left = left;
  r.right = right;
  r.top = mirrored(r.top);
  if (r.bottom) r.bottom = mirrored(*r.bottom);
  for (auto& src : r.sources) src = mirrored(src);
  return r;
}

std::vector<RelationId> relation_grid(int kmax, int lmax, int tmax, int s, bool with_tilde) {
  std::vector<RelationId> out;
  auto add = [&](RelationKind kind, int k, int l) {
    out.push_back({kind, k, l, s, false});
    if (with_tilde) out.push_back({kind, k, l, s, true});
  };
  for (int l = 1; l <= lmax; ++l) add(RelationKind::tsys1, 0, l);
  for (int k = 1; k <= kmax; ++k) add(RelationKind::tsys2, k, 0);
  for (int k = 1; k <= kmax; ++k) {
    for (int l = 1; l <= lmax; ++l) add(RelationKind::b, k, l);
  }
  for (int l = 1; l <= lmax; ++l) {
    add(RelationKind::e0, 0, l);
    add(RelationKind::e1, 0, l);
  }
  for (int t = 2; t <= tmax; ++t) {
    for (int l = 1; l <= lmax; ++l) add(RelationKind::eext, t, l);
  }
  for (int k = 1; k <= kmax; ++k) {
    for (int l = 1; l <= lmax; ++l) add(RelationKind::c, k, l);
  }
  for (int l = 1; l <= lmax; ++l) add(RelationKind::d0, 0, l);
  for (int k = 1; k <= kmax; ++k) {
    for (int l = 1; l <= lmax; ++l) add(RelationKind::d, k, l);
  }
  for (int k = 1; k <= std::max(kmax, 3); ++k) {
    for (int l = 1; l <= lmax; ++l) add(RelationKind::f, k, l);
  }
  return out;
}

// ---- dominant chains --------------------------------------------------------

namespace {

using Step = std::vector<std::pair<Node, int>>;

Step one(Node i, int a) { return {{i, a}}; }

std::vector<Step> chain_steps(ProductCase c, int k, int l, int s) {
  std::vector<Step> steps;
  const Node n1 = Node::one;
  const Node n2 = Node::two;
  switch (c) {
    case ProductCase::b:
      for (int j = 1; j <= l - 1; ++j) steps.push_back(one(n1, s + 6 * k + 2 * l - 2 * j));
      steps.push_back({{n2, s + 6 * k - 3}, {n1, s + 6 * k}});
      for (int j = l + 1; j <= k + l - 1; ++j) steps.push_back(one(n2, s + 6 * k - 3 - 6 * (j - l)));
      break;
    case ProductCase::c:
      for (int j = 1; j <= l - 1; ++j) steps.push_back(one(n2, s + 6 * k + 6 * l + 1 - 6 * j));
      steps.push_back({{n2, s + 6 * k - 3}, {n1, s + 6 * k}, {n1, s + 6 * k - 2}, {n2, s + 6 * k + 1}});
      for (int j = l + 1; j <= k + l - 1; ++j) steps.push_back(one(n2, s + 6 * k - 3 - 6 * (j - l)));
      break;
    case ProductCase::d0:
      // The last step is written with k; the chain has k = 0.
      for (int j = 1; j <= l - 1; ++j) steps.push_back(one(n2, s + 6 * l + 5 - 6 * j));
      steps.push_back({{n1, s + 2}, {n2, s + 5}});
      break;
    case ProductCase::d:
      for (int j = 1; j <= l - 1; ++j) steps.push_back(one(n2, s + 6 * k + 6 * l + 5 - 6 * j));
      steps.push_back({{n1, s + 6 * k + 2}, {n2, s + 6 * k + 5}});
      steps.push_back({{n2, s + 6 * k - 3}, {n1, s + 6 * k}});
      for (int j = l + 2; j <= k + l; ++j) steps.push_back(one(n2, s + 6 * k - 3 - 6 * (j - l - 1)));
      break;
    case ProductCase::e: {
      const int r = l / 2;
      std::vector<Step> all;
      if (l % 2 == 1) {
        for (int j = 1; j <= r; ++j) all.push_back(one(n2, s + 2 * k + 3 * l + 3 - 6 * j));
        all.push_back({{n1, s + 2 * k - 1}, {n1, s + 2 * k - 3}, {n2, s + 2 * k}});
        for (int i = 2; i <= k - 1; ++i) all.push_back(one(n1, s + 2 * k - 1 - 2 * i));
      } else {
        for (int j = 1; j <= r - 1; ++j) all.push_back(one(n2, s + 2 * k + 3 * l + 2 - 6 * j));
        all.push_back({{n1, s + 2 * k - 1}, {n2, s + 2 * k + 2}});
        for (int i = 1; i <= k - 1; ++i) all.push_back(one(n1, s + 2 * k - 1 - 2 * i));
      }
      // The chain is M_0 .. M_{k+r-1}.
      all.resize(static_cast<std::size_t>(k + r - 1));
      steps = std::move(all);
      break;
    }
    case ProductCase::f:
      for (int j = 1; j <= l - 1; ++j) steps.push_back(one(n1, s + 2 * k + 2 * l + 5 - 2 * j));
      steps.push_back({{n1, s + 2 * k - 1}, {n2, s + 2 * k + 2}, {n1, s + 2 * k + 5}});
      for (int i = 1; i <= k - 1; ++i) steps.push_back(one(n1, s + 2 * k - 1 - 2 * i));
      break;
  }
  return steps;
}

}  // namespace

RelationInstance product_case_instance(ProductCase c, int k, int l, int s) {
  if (l < 1 || (c != ProductCase::d0 && k < 1)) throw InvalidParameters("product cases need k, l >= 1");
  using enum Family;
  switch (c) {
    case ProductCase::b: return relation_instance({RelationKind::b, k, l, s});
    case ProductCase::c: return relation_instance({RelationKind::c, k, l, s});
    case ProductCase::d0: return relation_instance({RelationKind::d0, 0, l, s});
    case ProductCase::d: return relation_instance({RelationKind::d, k, l, s});
    case ProductCase::f: return relation_instance({RelationKind::f, k, l, s});
    case ProductCase::e:
      if (k >= 2) return relation_instance({RelationKind::eext, k, l, s});
      break;
  }
  // k = 1 in the E case has no relation attached; only the four houses.
  RelationInstance r;
  r.id = {RelationKind::eext, k, l, s};
  r.left = {E, k, l - 1, s};
  r.right = {E, k - 1, l, s + 2};
  r.top = {E, k, l, s};
  r.bottom = FamilyId{E, k - 1, l - 1, s + 2};
  return r;
}

DominantChain expected_product_dominants(ProductCase c, int k, int l, int s) {
  RelationInstance inst = product_case_instance(c, k, l, s);
  DominantChain chain;
  chain.steps = chain_steps(c, k, l, s);
  LMonomial m = highest_monomial(inst.left) * highest_monomial(inst.right);
  chain.monomials.push_back(m);
  for (const auto& step : chain.steps) {
    for (auto [i, a] : step) m *= a_inverse(i, a);
    chain.monomials.push_back(m);
  }
  return chain;
}

CCaseCertificate c_case_certificate(int k, int l, int s) {
  if (k < 2 || l < 1) throw InvalidParameters("the C case certificate needs k >= 2 and l >= 1");
  DominantChain chain = expected_product_dominants(ProductCase::c, k, l, s);
  CCaseCertificate cert;
  const std::pair<Node, int> dirs[] = {
      {Node::two, s + 6 * k - 3}, {Node::one, s + 6 * k}, {Node::one, s + 6 * k - 2}, {Node::two, s + 6 * k + 1}};
  LMonomial m = chain.monomials.at(static_cast<std::size_t>(l));
  cert.monomials.push_back(m);
  for (auto [i, a] : dirs) {
    cert.u.members.insert({i, a});
    m *= a_inverse(i, a);
    cert.monomials.push_back(m);
  }
  return cert;
}

}  // namespace qg2
