#include <mutex>
#include <set>

#include "qg2/errors.hpp"
#include "qg2/tsystem.hpp"
#include "verify_detail.hpp"

namespace qg2 {

namespace {

struct Resolved {
  Family family;  // untilded, never KR or MinAff
  int k;
  int l;
  int s;
  bool tilde;
};

// Reduces an id to a canonical family whose character at s = 0 is memoized.
// The identity comes back as B[k=0,l=0].
Resolved resolve(const FamilyId& id) {
  highest_monomial(id);  // validates indices
  FamilyId x = id;
  if (x.family == Family::KR1) x = {Family::B, 0, x.l, x.s - 1};
  if (x.family == Family::KR2) x = {Family::B, x.k, 0, x.s};
  if (x.family == Family::MinAff) x = {Family::B, x.l, x.k, x.s};
  const bool tilde = is_tilde(x.family);
  if (tilde) x.family = mirror(x.family);
  auto [f, k, l, s] = x;
  switch (f) {
    case Family::C:
      if (l == 0) return {Family::B, k, 0, s, tilde};
      if (k == 0) return {Family::B, l, 0, s + 4, tilde};
      break;
    case Family::D:
      if (l == 0) return {Family::B, k, 1, s, tilde};
      break;
    case Family::E:
      if (l == 0) return {Family::B, 0, k, s - 1, tilde};
      break;
    case Family::F:
      if (l == 0) return {Family::B, 0, k, s - 1, tilde};
      if (k == 0) return {Family::B, 0, l, s + 5, tilde};
      break;
    default:
      break;
  }
  if (f == Family::B && k == 0 && l == 0) s = 0;
  return {f, k, l, s, tilde};
}

// Families currently being solved on this thread, to report a cyclic recursion
// instead of overflowing the stack.
thread_local std::set<std::tuple<int, int, int>> in_progress;

}  // namespace

std::string_view engine_name(Engine e) { return e == Engine::fm ? "fm" : "recursive"; }

CharacterStore::CharacterStore(Engine engine, FmOptions opts) : engine_(engine), opts_(std::move(opts)) {}

std::size_t CharacterStore::cached() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

CharPtr CharacterStore::get(const FamilyId& id) {
  const Resolved r = resolve(id);
  CharPtr b = base(r.family, r.k, r.l);
  if (r.s == 0 && !r.tilde) return b;
  QPolynomial p = r.s == 0 ? *b : tau_shift(*b, r.s);
  if (r.tilde) p = iota(p);
  return std::make_shared<const QPolynomial>(std::move(p));
}

CharacterProvider CharacterStore::provider() {
  return [this](const FamilyId& id) { return get(id); };
}

CharPtr CharacterStore::base(Family f, int k, int l) {
  const auto key = std::make_tuple(static_cast<int>(f), k, l);
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  CharPtr p = compute(f, k, l);
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(key, std::move(p)).first->second;
}

CharPtr CharacterStore::compute(Family f, int k, int l) {
  const FamilyId head_id{f, k, l, 0};
  if (k == 0 && l == 0 && f == Family::B) return std::make_shared<const QPolynomial>(QPolynomial::one());
  if (engine_ == Engine::fm) return std::make_shared<const QPolynomial>(fm_character(highest_monomial(head_id), opts_));

  const auto key = std::make_tuple(static_cast<int>(f), k, l);
  if (!in_progress.insert(key).second) throw InvalidParameters("cyclic recursion at " + to_string(head_id));
  struct Guard {
    std::tuple<int, int, int> key;
    ~Guard() { in_progress.erase(key); }
  } guard{key};

  using RK = RelationKind;
  auto run = [&](RK kind, int kk, int ll, int s) { return solve_top({kind, kk, ll, s, false}); };
  switch (f) {
    case Family::B:
      if (k == 1 && l == 0) return std::make_shared<const QPolynomial>(fm_character(highest_monomial(head_id), opts_));
      if (k == 0 && l == 1) {
        return std::make_shared<const QPolynomial>(tau_shift(fm_character(LMonomial::variable(Node::one, 0), opts_), 1));
      }
      if (l == 0) return run(RK::tsys2, k - 1, 0, 0);
      if (k == 0) return run(RK::tsys1, 0, l - 1, 1);
      return run(RK::b, k, l, 0);
    case Family::C:
      return run(RK::c, k, l, 0);
    case Family::D:
      return k == 0 ? run(RK::d0, 0, l, 0) : run(RK::d, k, l, 0);
    case Family::E:
      if (k == 0) return run(RK::e0, 0, l, 0);
      if (k == 1) return run(RK::e1, 0, l, 0);
      return run(RK::eext, k, l, 0);
    case Family::F:
      return run(RK::f, k, l, 0);
    default:
      break;
  }
  throw InvalidParameters("no recursion for " + to_string(head_id));
}

CharPtr CharacterStore::solve_top(const RelationId& rel) {
  const RelationInstance inst = relation_instance(rel);
  std::vector<CharPtr> hold;
  auto fetch = [&](const FamilyId& id) {
    hold.push_back(get(id));
    return hold.back().get();
  };
  detail::RelationChars rc;
  rc.left = fetch(inst.left);
  rc.right = fetch(inst.right);
  if (inst.bottom) rc.bottom = fetch(*inst.bottom);
  for (const auto& s : inst.sources) rc.sources.push_back(fetch(s));
  QPolynomial top = detail::solve_for_top(rc);
  const LMonomial head = highest_monomial(inst.top);
  if (top.is_zero() || top.leading().monomial != head || top.leading().coeff != 1) {
    throw NotDivisible(to_string(rel) + " does not produce a character with head " + to_string(head));
  }
  return std::make_shared<const QPolynomial>(std::move(top));
}

QPolynomial compute_recursive(const FamilyId& id) {
  CharacterStore store(Engine::recursive);
  return *store.get(id);
}

}  // namespace qg2
