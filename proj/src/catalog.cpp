#include "qg2/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "qg2/errors.hpp"

namespace qg2 {

namespace {

constexpr std::string_view kNames[] = {"B", "C", "D", "E", "F", "Bt", "Ct", "Dt", "Et", "Ft", "KR1", "KR2", "MinAff"};

void push(std::vector<Factor>& fs, Node i, int shift) { fs.push_back({i, shift, 1}); }

LMonomial plain_head(Family f, int k, int l, int s) {
  std::vector<Factor> fs;
  switch (f) {
    case Family::B:
      for (int i = 0; i < k; ++i) push(fs, Node::two, s + 6 * i);
      for (int i = 0; i < l; ++i) push(fs, Node::one, s + 6 * k + 2 * i + 1);
      break;
    case Family::C:
      for (int i = 0; i < k; ++i) push(fs, Node::two, s + 6 * i);
      for (int i = 0; i < l; ++i) push(fs, Node::two, s + 6 * k + 6 * i + 4);
      break;
    case Family::D:
      for (int i = 0; i < k; ++i) push(fs, Node::two, s + 6 * i);
      push(fs, Node::one, s + 6 * k + 1);
      for (int i = 0; i < l; ++i) push(fs, Node::two, s + 6 * k + 6 * i + 8);
      break;
    case Family::E:
      for (int i = 0; i < k; ++i) push(fs, Node::one, s + 2 * i);
      // Upper limits floor((l-1)/2) and floor((l-2)/2), i.e. ceil(l/2) and floor(l/2) factors.
      for (int i = 0; i < (l + 1) / 2; ++i) push(fs, Node::two, s + 2 * k + 6 * i + 3);
      for (int i = 0; i < l / 2; ++i) push(fs, Node::two, s + 2 * k + 6 * i + 5);
      break;
    case Family::F:
      for (int i = 0; i < k; ++i) push(fs, Node::one, s + 2 * i);
      for (int i = 0; i < l; ++i) push(fs, Node::one, s + 2 * k + 2 * i + 6);
      break;
    default:
      break;
  }
  return LMonomial::from_factors(std::move(fs));
}

LMonomial negate_shifts(const LMonomial& m) {
  std::vector<Factor> fs(m.factors().begin(), m.factors().end());
  for (auto& f : fs) f.shift = -f.shift;
  return LMonomial::from_factors(std::move(fs));
}

Family untilded(Family f) { return is_tilde(f) ? mirror(f) : f; }

// Families related by one identification rule.
std::vector<FamilyId> neighbours(const FamilyId& id) {
  std::vector<FamilyId> out;
  const auto [f, k, l, s] = id;
  auto add = [&](Family g, int kk, int ll, int ss) { out.push_back({g, kk, ll, ss}); };

  if (f == Family::KR1) add(Family::B, 0, l, s - 1);
  if (f == Family::KR2) add(Family::B, k, 0, s);
  if (f == Family::MinAff) add(Family::B, l, k, s);
  if (f == Family::B && k == 0) add(Family::KR1, 0, l, s + 1);
  if (f == Family::B && l == 0) add(Family::KR2, k, 0, s);
  if (f == Family::B) add(Family::MinAff, l, k, s);

  if (f == Family::KR1 || f == Family::KR2 || f == Family::MinAff) return out;

  // The same rules hold within the plain and within the tilde families.
  const bool t = is_tilde(f);
  auto fam = [t](Family g) { return t ? mirror(g) : g; };
  switch (untilded(f)) {
    case Family::B:
      if (l == 0) {
        add(fam(Family::C), k, 0, s);
        add(fam(Family::C), 0, k, s - 4);
      }
      if (l == 1) add(fam(Family::D), k, 0, s);
      if (k == 0) add(fam(Family::E), l, 0, s + 1);
      break;
    case Family::C:
      if (l == 0) add(fam(Family::B), k, 0, s);
      if (k == 0) add(fam(Family::B), l, 0, s + 4);
      break;
    case Family::D:
      if (l == 0) add(fam(Family::B), k, 1, s);
      break;
    case Family::E:
      if (l == 0) {
        add(fam(Family::B), 0, k, s - 1);
        add(fam(Family::F), 0, k, s - 6);
        add(fam(Family::F), k, 0, s);
      }
      break;
    case Family::F:
      if (k == 0) add(fam(Family::E), l, 0, s + 6);
      if (l == 0) add(fam(Family::E), k, 0, s);
      break;
    default:
      break;
  }

  // Cross identifications between the plain and tilde families.
  if (f == Family::D && k == 0) add(Family::Bt, l, 1, -s - 6 * l - 2);
  if (f == Family::Dt && k == 0) add(Family::B, l, 1, -s - 6 * l - 2);
  if (f == Family::Bt && l == 1) add(Family::D, 0, k, -s - 6 * k - 2);
  if (f == Family::B && l == 1) add(Family::Dt, 0, k, -s - 6 * k - 2);
  // KR heads are single strings, so mirroring them is a shift.
  if (untilded(f) == Family::B && l == 0) add(mirror(f), k, 0, -s - 6 * k + 6);
  if (untilded(f) == Family::B && k == 0) add(mirror(f), 0, l, -s - 2 * l);
  return out;
}

void check_nonnegative(const FamilyId& id) {
  if (id.k < 0 || id.l < 0) throw InvalidParameters(to_string(id) + " has a negative index");
}

}  // namespace

std::string_view family_name(Family f) { return kNames[static_cast<int>(f)]; }

bool is_tilde(Family f) {
  return f == Family::Bt || f == Family::Ct || f == Family::Dt || f == Family::Et || f == Family::Ft;
}

Family mirror(Family f) {
  switch (f) {
    case Family::B: return Family::Bt;
    case Family::C: return Family::Ct;
    case Family::D: return Family::Dt;
    case Family::E: return Family::Et;
    case Family::F: return Family::Ft;
    case Family::Bt: return Family::B;
    case Family::Ct: return Family::C;
    case Family::Dt: return Family::D;
    case Family::Et: return Family::E;
    case Family::Ft: return Family::F;
    default: return f;
  }
}

LMonomial highest_monomial(const FamilyId& id) {
  check_nonnegative(id);
  switch (id.family) {
    case Family::KR1:
      if (id.k != 0) throw InvalidParameters("KR1 takes its length in l");
      return plain_head(Family::B, 0, id.l, id.s - 1);
    case Family::KR2:
      if (id.l != 0) throw InvalidParameters("KR2 takes its length in k");
      return plain_head(Family::B, id.k, 0, id.s);
    case Family::MinAff:
      return minimal_affinization_monomial(id.k, id.l, id.s, Orientation::two_first);
    default:
      break;
  }
  if (is_tilde(id.family)) return negate_shifts(plain_head(mirror(id.family), id.k, id.l, id.s));
  return plain_head(id.family, id.k, id.l, id.s);
}

std::vector<FamilyId> trivial_aliases(const FamilyId& id) {
  std::set<FamilyId> seen{id};
  if (highest_monomial(id).is_identity()) {
    // Every empty head at every s is the identity. Report the ones at id.s and
    // one rule step away, which keeps the list finite.
    std::vector<FamilyId> base;
    for (Family f : kAllFamilies) {
      if (f != Family::D && f != Family::Dt) base.push_back({f, 0, 0, id.s});
    }
    for (const auto& b : base) {
      seen.insert(b);
      for (const auto& n : neighbours(b)) seen.insert(n);
    }
  } else {
    std::vector<FamilyId> queue{id};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& n : neighbours(queue[i])) {
        if (seen.insert(n).second) queue.push_back(n);
      }
    }
  }
  std::vector<FamilyId> out{id};
  for (const auto& other : seen) {
    if (other != id) out.push_back(other);
  }
  return out;
}

LMonomial minimal_affinization_monomial(int k, int l, int s, Orientation o) {
  if (k < 0 || l < 0) throw InvalidParameters("minimal affinization indices must be nonnegative");
  std::vector<Factor> fs;
  if (o == Orientation::two_first) {
    for (int i = 0; i < l; ++i) push(fs, Node::two, s + 6 * i);
    for (int i = 0; i < k; ++i) push(fs, Node::one, s + 6 * l + 2 * i + 1);
  } else {
    for (int i = 0; i < k; ++i) push(fs, Node::one, s + 2 * i);
    for (int i = 0; i < l; ++i) push(fs, Node::two, s + 2 * k + 6 * i + 5);
  }
  return LMonomial::from_factors(std::move(fs));
}

std::string to_string(const FamilyId& id) {
  return std::string(family_name(id.family)) + "[k=" + std::to_string(id.k) + ",l=" + std::to_string(id.l) +
         ",s=" + std::to_string(id.s) + "]";
}

FamilyId parse_family_id(std::string_view text) {
  auto bad = [&](const std::string& why) { return ParseError("bad family id '" + std::string(text) + "': " + why); };
  const auto open = text.find('[');
  std::string_view name = text.substr(0, open);
  FamilyId id;
  auto it = std::find(std::begin(kNames), std::end(kNames), name);
  if (it == std::end(kNames)) throw bad("unknown family");
  id.family = static_cast<Family>(it - std::begin(kNames));
  if (open == std::string_view::npos) return id;
  if (text.back() != ']') throw bad("missing ']'");
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  std::set<char> keys;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    if (item.size() < 3 || item[1] != '=') throw bad("expected key=value");
    const char key = item[0];
    if (!keys.insert(key).second) throw bad("repeated key");
    int value = 0;
    std::string_view digits = item.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) throw bad("bad integer");
    switch (key) {
      case 'k': id.k = value; break;
      case 'l': id.l = value; break;
      case 's': id.s = value; break;
      default: throw bad("unknown key");
    }
  }
  if (id.k < 0 || id.l < 0) throw bad("negative index");
  return id;
}

}  // namespace qg2
