#include "qg2/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>

#include "qg2/errors.hpp"

namespace qg2 {

namespace {

bool same_key(const Factor& a, const Factor& b) { return a.node == b.node && a.shift == b.shift; }

bool key_less(const Factor& a, const Factor& b) {
  if (a.node != b.node) return a.node < b.node;
  return a.shift < b.shift;
}

std::vector<Factor> canonicalize(std::vector<Factor> in) {
  std::sort(in.begin(), in.end(), key_less);
  std::vector<Factor> out;
  out.reserve(in.size());
  for (const auto& f : in) {
    if (!out.empty() && same_key(out.back(), f)) {
      out.back().exp += f.exp;
    } else {
      out.push_back(f);
    }
  }
  std::erase_if(out, [](const Factor& f) { return f.exp == 0; });
  return out;
}

// Merge of two sorted factor lists with exponent scaling of the right side.
std::vector<Factor> merge(std::span<const Factor> a, std::span<const Factor> b, int b_scale) {
  std::vector<Factor> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && key_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || key_less(b[j], a[i])) {
      out.push_back({b[j].node, b[j].shift, b[j].exp * b_scale});
      ++j;
    } else {
      int e = a[i].exp + b_scale * b[j].exp;
      if (e != 0) out.push_back({a[i].node, a[i].shift, e});
      ++i;
      ++j;
    }
  }
  return out;
}

int find_exp(std::span<const Factor> fs, Node node, int shift) {
  Factor probe{node, shift, 0};
  auto it = std::lower_bound(fs.begin(), fs.end(), probe, key_less);
  if (it != fs.end() && same_key(*it, probe)) return it->exp;
  return 0;
}

}  // namespace

Node node_from_int(int value) {
  if (value == 1) return Node::one;
  if (value == 2) return Node::two;
  throw InvalidNode("node index must be 1 or 2, got " + std::to_string(value));
}

LMonomial LMonomial::variable(Node node, int shift, int exp) {
  LMonomial m;
  if (exp != 0) m.factors_.push_back({node, shift, exp});
  return m;
}

LMonomial LMonomial::from_factors(std::vector<Factor> factors) {
  LMonomial m;
  m.factors_ = canonicalize(std::move(factors));
  return m;
}

int LMonomial::exponent(Node node, int shift) const { return find_exp(factors_, node, shift); }

LMonomial LMonomial::inverse() const {
  LMonomial m = *this;
  for (auto& f : m.factors_) f.exp = -f.exp;
  return m;
}

LMonomial LMonomial::pow(int n) const {
  if (n == 0) return {};
  LMonomial m = *this;
  for (auto& f : m.factors_) f.exp *= n;
  return m;
}

LMonomial operator*(const LMonomial& a, const LMonomial& b) {
  LMonomial m;
  m.factors_ = merge(a.factors_, b.factors_, 1);
  return m;
}

LMonomial& LMonomial::operator*=(const LMonomial& other) {
  factors_ = merge(factors_, other.factors_, 1);
  return *this;
}

std::size_t LMonomial::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& f : factors_) {
    std::uint64_t v = (static_cast<std::uint64_t>(static_cast<std::uint8_t>(f.node)) << 56) ^
                      (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f.shift)) << 20) ^
                      static_cast<std::uint64_t>(static_cast<std::uint32_t>(f.exp));
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

AVector AVector::from_entries(std::vector<Factor> entries) {
  AVector v;
  v.entries_ = canonicalize(std::move(entries));
  return v;
}

int AVector::entry(Node node, int shift) const { return find_exp(entries_, node, shift); }

bool AVector::all_nonpositive() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Factor& f) { return f.exp <= 0; });
}

int AVector::depth() const {
  int d = 0;
  for (const auto& f : entries_) d -= f.exp;
  return d;
}

LMonomial a_monomial(Node node, int s) {
  if (node == Node::one) {
    return LMonomial::from_factors({{Node::one, s - 1, 1}, {Node::one, s + 1, 1}, {Node::two, s, -1}});
  }
  return LMonomial::from_factors({{Node::two, s - 3, 1},
                                  {Node::two, s + 3, 1},
                                  {Node::one, s - 2, -1},
                                  {Node::one, s, -1},
                                  {Node::one, s + 2, -1}});
}

LMonomial a_inverse(Node node, int shift) { return a_monomial(node, shift).inverse(); }

LMonomial realize(const AVector& v) {
  LMonomial m;
  for (const auto& e : v.entries()) m *= a_monomial(e.node, e.shift).pow(e.exp);
  return m;
}

AVector factor_over_A(const LMonomial& base, const LMonomial& m) {
  LMonomial rest = m * base.inverse();
  if (rest.is_identity()) return {};
  int lowest = std::numeric_limits<int>::max();
  for (const auto& f : rest.factors()) lowest = std::min(lowest, f.shift);

  // Each A_{i,s} has a unique entry of largest shift (1_{s+1} or 2_{s+3}), so
  // clearing the top shift of the remainder is a triangular solve. A lattice
  // element never needs an A below its own lowest shift; past that margin the
  // remainder is not in Q.
  std::map<std::pair<Node, int>, int> coords;
  while (!rest.is_identity()) {
    int top = std::numeric_limits<int>::min();
    for (const auto& f : rest.factors()) top = std::max(top, f.shift);
    LMonomial step;
    for (const auto& f : rest.factors()) {
      if (f.shift != top) continue;
      int a_shift = f.node == Node::one ? top - 1 : top - 3;
      if (a_shift < lowest - 6) {
        throw NotInLattice(to_string(m) + " is not in " + to_string(base) + " * Q");
      }
      coords[{f.node, a_shift}] += f.exp;
      step *= a_monomial(f.node, a_shift).pow(-f.exp);
    }
    rest *= step;
  }
  std::vector<Factor> entries;
  for (const auto& [key, e] : coords) entries.push_back({key.first, key.second, e});
  return AVector::from_entries(std::move(entries));
}

bool monomial_leq(const LMonomial& m, const LMonomial& other) {
  try {
    AVector v = factor_over_A(other, m);
    return v.all_nonpositive();
  } catch (const NotInLattice&) {
    return false;
  }
}

bool is_dominant(const LMonomial& m) {
  return std::all_of(m.factors().begin(), m.factors().end(), [](const Factor& f) { return f.exp > 0; });
}

bool is_antidominant(const LMonomial& m) {
  return std::all_of(m.factors().begin(), m.factors().end(), [](const Factor& f) { return f.exp < 0; });
}

bool is_i_dominant(const LMonomial& m, Node i) {
  return std::all_of(m.factors().begin(), m.factors().end(),
                     [i](const Factor& f) { return f.node != i || f.exp > 0; });
}

bool is_right_negative(const LMonomial& m) {
  if (m.is_identity()) throw EmptyMonomial("right-negativity is undefined for the identity monomial");
  int top = std::numeric_limits<int>::min();
  for (const auto& f : m.factors()) top = std::max(top, f.shift);
  return std::all_of(m.factors().begin(), m.factors().end(),
                     [top](const Factor& f) { return f.shift != top || f.exp < 0; });
}

Weight weight_of(const LMonomial& m) {
  Weight w;
  for (const auto& f : m.factors()) {
    if (f.node == Node::one) {
      w.w1 += f.exp;
    } else {
      w.w2 += f.exp;
    }
  }
  return w;
}

std::strong_ordering term_order(const LMonomial& a, const LMonomial& b) {
  if (auto c = weight_of(a).height() <=> weight_of(b).height(); c != 0) return c;
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && key_less(fa[i], fb[j]))) {
      return fa[i].exp <=> 0;
    }
    if (i == fa.size() || key_less(fb[j], fa[i])) {
      return 0 <=> fb[j].exp;
    }
    if (fa[i].exp != fb[j].exp) return fa[i].exp <=> fb[j].exp;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

LMonomial tau_shift(const LMonomial& m, int b) {
  std::vector<Factor> fs(m.factors().begin(), m.factors().end());
  for (auto& f : fs) f.shift += b;
  return LMonomial::from_factors(std::move(fs));
}

LMonomial iota(const LMonomial& m) {
  std::vector<Factor> fs(m.factors().begin(), m.factors().end());
  for (auto& f : fs) {
    f.shift = 12 - f.shift;
    f.exp = -f.exp;
  }
  return LMonomial::from_factors(std::move(fs));
}

std::string to_string(const LMonomial& m) {
  if (m.is_identity()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& f : m.factors()) {
    if (!first) out << ' ';
    first = false;
    out << node_number(f.node) << '_' << f.shift;
    if (f.exp != 1) out << '^' << f.exp;
  }
  return out.str();
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad integer '" + std::string(s) + "' in monomial '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

LMonomial parse_monomial(std::string_view text) {
  std::vector<Factor> fs;
  std::size_t pos = 0;
  bool saw_identity = false;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '*')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = text.find_first_of(" *", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;
    if (tok == "1") {
      saw_identity = true;
      continue;
    }
    auto us = tok.find('_');
    if (us == std::string_view::npos) throw ParseError("expected i_s in '" + std::string(tok) + "'");
    int node = parse_int(tok.substr(0, us), text);
    if (node != 1 && node != 2) throw ParseError("node must be 1 or 2 in '" + std::string(tok) + "'");
    auto caret = tok.find('^', us);
    int shift = parse_int(tok.substr(us + 1, caret == std::string_view::npos ? std::string_view::npos : caret - us - 1),
                          text);
    int exp = caret == std::string_view::npos ? 1 : parse_int(tok.substr(caret + 1), text);
    fs.push_back({node_from_int(node), shift, exp});
  }
  if (fs.empty() && !saw_identity) throw ParseError("empty monomial text");
  return LMonomial::from_factors(std::move(fs));
}

}  // namespace qg2
