#include "qg2/sl2.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "qg2/errors.hpp"

namespace qg2 {

Sl2Monomial Sl2Monomial::from_pairs(std::vector<std::pair<int, int>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  Sl2Monomial m;
  for (const auto& [s, e] : pairs) {
    if (!m.entries_.empty() && m.entries_.back().first == s) {
      m.entries_.back().second += e;
    } else {
      m.entries_.emplace_back(s, e);
    }
  }
  std::erase_if(m.entries_, [](const auto& p) { return p.second == 0; });
  return m;
}

int Sl2Monomial::exponent(int shift) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{shift, std::numeric_limits<int>::min()});
  return it != entries_.end() && it->first == shift ? it->second : 0;
}

bool Sl2Monomial::is_dominant() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& p) { return p.second > 0; });
}

Sl2Monomial operator*(const Sl2Monomial& a, const Sl2Monomial& b) {
  std::vector<std::pair<int, int>> all(a.entries_.begin(), a.entries_.end());
  all.insert(all.end(), b.entries_.begin(), b.entries_.end());
  return Sl2Monomial::from_pairs(std::move(all));
}

Sl2Monomial Sl2Monomial::inverse() const {
  Sl2Monomial m = *this;
  for (auto& p : m.entries_) p.second = -p.second;
  return m;
}

std::string to_string(const Sl2Monomial& m) {
  if (m.is_identity()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, e] : m.entries()) {
    if (!first) out << ' ';
    first = false;
    out << "Y_" << s;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

std::vector<int> Sl2String::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int j = 0; j < length; ++j) out.push_back(lowest() + j * step);
  return out;
}

Sl2String string_from(int lowest, int length, int step) {
  return {lowest + (length - 1) * step / 2, length, step};
}

Sl2Monomial beta(const LMonomial& m, Node i) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& f : m.factors()) {
    if (f.node == i) pairs.emplace_back(f.shift, f.exp);
  }
  return Sl2Monomial::from_pairs(std::move(pairs));
}

bool in_general_position(const Sl2String& a, const Sl2String& b) {
  if (a.step != b.step) throw StepMismatch("strings with steps " + std::to_string(a.step) + " and " + std::to_string(b.step));
  auto contains = [](const Sl2String& outer, const Sl2String& inner) {
    return outer.lowest() <= inner.lowest() && inner.highest() <= outer.highest() &&
           (inner.lowest() - outer.lowest()) % outer.step == 0;
  };
  if (contains(a, b) || contains(b, a)) return true;
  if ((a.lowest() - b.lowest()) % a.step != 0) return true;
  // Same residue class: the union is a string iff there is no gap.
  const Sl2String& lo = a.lowest() <= b.lowest() ? a : b;
  const Sl2String& hi = a.lowest() <= b.lowest() ? b : a;
  return hi.lowest() > lo.highest() + lo.step;
}

std::vector<Sl2String> decompose_strings(const Sl2Monomial& m, int step) {
  if (!m.is_dominant()) throw NotDominant(to_string(m) + " is not dominant");
  std::map<int, int> avail;
  for (const auto& [s, e] : m.entries()) avail[s] = e;
  std::vector<Sl2String> out;
  while (!avail.empty()) {
    int start = avail.begin()->first;
    int length = 0;
    for (int v = start;; v += step) {
      auto it = avail.find(v);
      if (it == avail.end()) break;
      ++length;
      if (--it->second == 0) avail.erase(it);
    }
    out.push_back(string_from(start, length, step));
  }
  std::sort(out.begin(), out.end(), [](const Sl2String& a, const Sl2String& b) {
    if (a.lowest() != b.lowest()) return a.lowest() < b.lowest();
    return a.length < b.length;
  });
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (!in_general_position(out[i], out[j])) {
        throw Error("string decomposition of " + to_string(m) + " is not in general position");
      }
    }
  }
  return out;
}

Sl2Monomial sl2_a_monomial(int b, int step) { return Sl2Monomial::from_pairs({{b - step / 2, 1}, {b + step / 2, 1}}); }

namespace {

using ShiftBag = std::vector<int>;

// Term i of the string character lies below the head by A_{c+(k-2j)h}, j < i.
std::vector<ShiftBag> string_bags(const Sl2String& s) {
  const int h = s.step / 2;
  std::vector<ShiftBag> bags(1);
  ShiftBag cur;
  for (int j = 0; j < s.length; ++j) {
    cur.push_back(s.center + (s.length - 2 * j) * h);
    ShiftBag sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    bags.push_back(std::move(sorted));
  }
  return bags;
}

Sl2Expansion expand(const Sl2Monomial& m, int step) {
  std::map<ShiftBag, Coeff> acc{{ShiftBag{}, 1}};
  for (const auto& s : decompose_strings(m, step)) {
    auto bags = string_bags(s);
    std::map<ShiftBag, Coeff> next;
    for (const auto& [bag, c] : acc) {
      for (const auto& extra : bags) {
        ShiftBag merged;
        merged.reserve(bag.size() + extra.size());
        std::merge(bag.begin(), bag.end(), extra.begin(), extra.end(), std::back_inserter(merged));
        auto& slot = next[merged];
        slot = checked_add(slot, c);
      }
    }
    acc = std::move(next);
  }
  Sl2Expansion out;
  out.entries.reserve(acc.size());
  for (auto& [bag, c] : acc) out.entries.push_back({bag, c});
  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const auto& a, const auto& b) { return a.a_shifts.size() < b.a_shifts.size(); });
  return out;
}

Sl2Monomial realize_bag(const Sl2Monomial& head, const ShiftBag& bag, int step) {
  std::vector<std::pair<int, int>> pairs(head.entries().begin(), head.entries().end());
  for (int b : bag) {
    pairs.emplace_back(b - step / 2, -1);
    pairs.emplace_back(b + step / 2, -1);
  }
  return Sl2Monomial::from_pairs(std::move(pairs));
}

}  // namespace

Sl2Polynomial string_character(const Sl2String& s) {
  std::vector<std::pair<int, int>> head;
  for (int v : s.members()) head.emplace_back(v, 1);
  return sl2_character(Sl2Monomial::from_pairs(std::move(head)), s.step);
}

Sl2Polynomial sl2_character(const Sl2Monomial& m, int step) {
  Sl2Expansion ex = expand(m, step);
  std::map<Sl2Monomial, Coeff> acc;
  for (const auto& e : ex.entries) {
    auto& slot = acc[realize_bag(m, e.a_shifts, step)];
    slot = checked_add(slot, e.coeff);
  }
  return {acc.begin(), acc.end()};
}

QPolynomial pull_back(const LMonomial& base, Node i, const Sl2Polynomial& p) {
  const int step = string_step(i);
  const int h = step / 2;
  const Sl2Monomial top = beta(base, i);
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& [t, c] : p) {
    Sl2Monomial rest = t * top.inverse();
    LMonomial image = base;
    int lowest = std::numeric_limits<int>::max();
    for (const auto& [s, e] : rest.entries()) lowest = std::min(lowest, s);
    while (!rest.is_identity()) {
      auto [s, e] = rest.entries().back();
      int b = s - h;
      if (e > 0 || b - h < lowest) {
        throw NotAPullback(to_string(t) + " is not below " + to_string(top) + " by A^{-1} steps");
      }
      // rest = A_b^{e} * rest', so divide it out.
      rest = rest * Sl2Monomial::from_pairs({{b - h, -e}, {b + h, -e}});
      image *= a_monomial(i, b).pow(e);
    }
    terms.push_back({std::move(image), c});
  }
  return QPolynomial::from_terms(std::move(terms));
}

Sl2ExpansionRef sl2_expansion(const Sl2Monomial& m, Node i) {
  static std::shared_mutex mutex;
  static std::map<std::pair<int, Sl2Monomial>, std::shared_ptr<const Sl2Expansion>> cache;
  const int step = string_step(i);
  const int offset = m.is_identity() ? 0 : m.entries().front().first;
  std::vector<std::pair<int, int>> shifted(m.entries().begin(), m.entries().end());
  for (auto& p : shifted) p.first -= offset;
  std::pair<int, Sl2Monomial> key{step, Sl2Monomial::from_pairs(std::move(shifted))};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return {it->second, offset};
  }
  auto table = std::make_shared<const Sl2Expansion>(expand(key.second, step));
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(std::move(key), std::move(table));
  return {it->second, offset};
}

}  // namespace qg2
