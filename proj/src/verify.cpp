#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <set>

#include "akey.hpp"
#include "kernel.hpp"
#include "qg2/errors.hpp"
#include "qg2/tsystem.hpp"
#include "verify_detail.hpp"

namespace qg2 {

namespace detail {

namespace {

constexpr int kMaxQuotientExp = 100;

bool key_div(const Packed& a, const Packed& b, Packed& out) {
  for (int i = 0; i < kLanes; ++i) {
    int v = a.e[i] - b.e[i];
    if (v > kMaxQuotientExp || v < -kMaxQuotientExp) return false;
    out.e[i] = static_cast<std::int8_t>(v);
  }
  return true;
}

bool key_div(const LMonomial& a, const LMonomial& b, LMonomial& out) {
  out = a * b.inverse();
  return true;
}

bool key_dominant(const Packed& p) {
  return std::all_of(p.e.begin(), p.e.end(), [](std::int8_t v) { return v >= 0; });
}

bool key_dominant(const LMonomial& m) { return is_dominant(m); }

template <class Key>
Key unit_key() {
  return Key{};
}

std::int64_t to_signed(Coeff c) {
  if (c > static_cast<Coeff>(INT64_MAX)) throw CoefficientOverflow("coefficient too large for exact division");
  return static_cast<std::int64_t>(c);
}

template <class Key>
Graded<Key> graded_product(const Graded<Key>& a, const Graded<Key>& b) {
  std::map<int, CoeffMap<Key>, std::greater<>> by_height;
  for (const auto& [ha, la] : a.classes) {
    for (const auto& [hb, lb] : b.classes) add_class_product(la, lb, by_height[ha + hb]);
  }
  Graded<Key> out;
  for (auto& [h, m] : by_height) {
    auto& list = out.classes[h];
    for (auto& [k, c] : m) {
      if (c != 0) list.emplace_back(k, c);
    }
    if (list.empty()) out.classes.erase(h);
  }
  return out;
}

}  // namespace

template <class Key>
ProductStream<Key>::ProductStream(std::vector<Graded<Key>> factors) {
  Graded<Key> small;
  small.classes[0].emplace_back(unit_key<Key>(), 1);
  Graded<Key> big;
  if (factors.empty()) {
    big = small;
  } else {
    auto size_of = [](const Graded<Key>& g) {
      std::size_t n = 0;
      for (const auto& [h, list] : g.classes) n += list.size();
      return n;
    };
    auto largest = std::max_element(factors.begin(), factors.end(),
                                    [&](const auto& a, const auto& b) { return size_of(a) < size_of(b); });
    big = std::move(*largest);
    factors.erase(largest);
    for (auto& g : factors) small = graded_product(small, g);
  }
  mass_ = checked_mul(small.mass(), big.mass());
  small_ = bucketize(std::move(small));
  big_ = bucketize(std::move(big));
}

template <class Key>
std::vector<int> ProductStream<Key>::heights() const {
  std::vector<int> hs;
  for (const auto& [ha, la] : small_.classes) {
    for (const auto& [hb, lb] : big_.classes) hs.push_back(ha + hb);
  }
  std::sort(hs.begin(), hs.end(), std::greater<>());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return hs;
}

template <class Key>
void ProductStream<Key>::collect(int h, PairIndex<Key>& index, std::int64_t sign) const {
  for (const auto& [ha, la] : small_.classes) {
    const auto* lb = big_.at(h - ha);
    if (lb == nullptr) continue;
    for (const auto& ba : la) {
      for (const auto& bb : *lb) {
        index[{ba.sub.first + bb.sub.first, ba.sub.second + bb.sub.second}].push_back({&ba.terms, &bb.terms, sign});
      }
    }
  }
}

template class ProductStream<Packed>;
template class ProductStream<LMonomial>;
template class ProductStream<AKey>;

namespace {

template <class Key>
void add_signed_product(const PairRef<Key>& r, SignedMap<Key>& out) {
  for (const auto& [ka, ca] : *r.a) {
    const std::int64_t sa = r.sign * to_signed(ca);
    for (const auto& [kb, cb] : *r.b) out[key_mul(ka, kb)] += sa * static_cast<std::int64_t>(cb);
  }
}

template <class Key>
bool all_zero(const SignedMap<Key>& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second == 0; });
}

template <class Key, class Space>
std::vector<Graded<Key>> grade_each(const std::vector<const QPolynomial*>& ps, const Space& space) {
  std::vector<Graded<Key>> out;
  for (const auto* p : ps) out.push_back(grade<Key>(*p, space));
  return out;
}

/// A relation's characters graded for one key type.
template <class Key>
struct GradedRelation {
  std::vector<Graded<Key>> left_right;
  std::vector<Graded<Key>> top_bottom;
  std::vector<Graded<Key>> sources;
  Graded<Key> bottom;
};

template <class Key, class Space>
GradedRelation<Key> grade_relation(const RelationChars& rc, const Space& space) {
  GradedRelation<Key> g;
  g.left_right = grade_each<Key>({rc.left, rc.right}, space);
  if (rc.top) {
    std::vector<const QPolynomial*> tb{rc.top};
    if (rc.bottom) tb.push_back(rc.bottom);
    g.top_bottom = grade_each<Key>(tb, space);
  }
  g.sources = grade_each<Key>(rc.sources, space);
  if (rc.bottom) {
    g.bottom = grade<Key>(*rc.bottom, space);
  } else {
    g.bottom.classes[0].emplace_back(unit_key<Key>(), 1);
  }
  return g;
}

template <class Key, class Space>
VerificationReport verify_impl(const Space& space, GradedRelation<Key>&& g) {
  VerificationReport rep;
  ProductStream<Key> lhs(std::move(g.left_right));
  ProductStream<Key> top_bottom(std::move(g.top_bottom));
  std::optional<ProductStream<Key>> src;
  if (!g.sources.empty()) src.emplace(std::move(g.sources));
  rep.lhs_mass = lhs.mass();
  rep.top_bottom_mass = top_bottom.mass();
  rep.source_mass = src ? src->mass() : 0;

  std::set<int, std::greater<>> heights;
  for (int h : lhs.heights()) heights.insert(h);
  for (int h : top_bottom.heights()) heights.insert(h);
  if (src) {
    for (int h : src->heights()) heights.insert(h);
  }

  rep.passed = true;
  std::optional<Discrepancy> best;
  for (int h : heights) {
    PairIndex<Key> index;
    lhs.collect(h, index, 1);
    top_bottom.collect(h, index, -1);
    if (src) src->collect(h, index, -1);
    for (const auto& [sub, refs] : index) {
      SignedMap<Key> diff;
      for (const auto& r : refs) add_signed_product(r, diff);
      if (all_zero(diff)) continue;
      // Keep scanning this height for its highest differing monomial.
      rep.passed = false;
      SignedMap<Key> left;
      for (const auto& r : refs) {
        if (r.sign > 0) add_signed_product(r, left);
      }
      for (const auto& [k, c] : diff) {
        if (c == 0) continue;
        auto it = left.find(k);
        const std::int64_t lc = it == left.end() ? 0 : it->second;
        LMonomial m = space.unpack(k);
        if (!best || term_order(m, best->monomial) > 0) {
          best = Discrepancy{std::move(m), static_cast<Coeff>(lc), static_cast<Coeff>(lc - c)};
        }
      }
    }
    if (!rep.passed) break;
  }
  rep.first_discrepancy = std::move(best);
  return rep;
}

template <class Key>
using Numerator = std::vector<std::pair<const ProductStream<Key>*, std::int64_t>>;

// space reads numerator keys, qspace quotient keys; they differ only for AKey.
// Without full_remainder the classes below the last quotient class are not
// expanded; a mass balance stands in for the zero-remainder check there.
template <class Key, class Space, class QSpace>
QPolynomial divide_impl(const Space& space, const QSpace& qspace, const Numerator<Key>& num,
                        const Bucketed<Key>& den, bool full_remainder = true) {
  if (den.classes.empty()) throw InvalidParameters("division by zero");
  const int h_top = den.classes.begin()->first;
  const auto& top_buckets = den.classes.begin()->second;
  const int den_low = den.classes.rbegin()->first;
  const bool single_top = top_buckets.size() == 1 && top_buckets.front().terms.size() == 1;

  std::set<int, std::greater<>> num_heights;
  for (const auto& [stream, sign] : num) {
    for (int h : stream->heights()) num_heights.insert(h);
  }
  if (num_heights.empty()) return QPolynomial{};
  const int num_low = *num_heights.rbegin();

  Bucketed<Key> q;
  auto check_bound = [&](int h) {
    // An exact quotient has no class below num_low - den_low.
    if (h - h_top < num_low - den_low) throw NotDivisible("nonzero remainder");
  };

  // Leading-term elimination within one height class for a multi-term top.
  auto divide_class_generic = [&](const SignedMap<Key>& residual) {
    if constexpr (std::is_same_v<Key, AKey>) throw PackedOverflow{};
    std::vector<Term> divisor;
    for (const auto& b : top_buckets) {
      for (const auto& [k, c] : b.terms) divisor.push_back({space.unpack(k), c});
    }
    std::sort(divisor.begin(), divisor.end(),
              [](const Term& a, const Term& b) { return term_order(a.monomial, b.monomial) > 0; });
    auto desc = [](const LMonomial& a, const LMonomial& b) { return term_order(a, b) > 0; };
    std::map<LMonomial, std::int64_t, decltype(desc)> rest(desc);
    for (const auto& [k, c] : residual) {
      if (c != 0) rest[space.unpack(k)] = c;
    }
    Graded<Key> out;
    TermList<Key>& list = out.classes[0];
    while (!rest.empty()) {
      auto [lead, c] = *rest.begin();
      const auto lc = static_cast<std::int64_t>(divisor.front().coeff);
      if (c < 0 || c % lc != 0) throw NotDivisible("no exact quotient at " + to_string(lead));
      LMonomial qm = lead * divisor.front().monomial.inverse();
      const std::int64_t qc = c / lc;
      for (const auto& d : divisor) {
        LMonomial prod = qm * d.monomial;
        std::int64_t& slot = rest[prod];
        slot -= qc * static_cast<std::int64_t>(d.coeff);
        if (slot == 0) rest.erase(prod);
      }
      if constexpr (std::is_same_v<Key, Packed>) {
        if (!space.fits(qm)) throw PackedOverflow{};
      }
      list.emplace_back(space.pack(qm), static_cast<Coeff>(qc));
    }
    return std::move(bucketize(std::move(out)).classes[0]);
  };

  for (int h = *num_heights.begin();; --h) {
    if (!full_remainder && h - h_top < num_low - den_low) break;
    if (h < num_low && (q.classes.empty() || h < q.classes.rbegin()->first + den_low)) break;
    PairIndex<Key> index;
    for (const auto& [stream, sign] : num) stream->collect(h, index, sign);
    for (const auto& [hq, qbs] : q.classes) {
      const auto* dbs = den.at(h - hq);
      if (dbs == nullptr) continue;
      for (const auto& qb : qbs) {
        for (const auto& db : *dbs) {
          index[{qb.sub.first + db.sub.first, qb.sub.second + db.sub.second}].push_back({&qb.terms, &db.terms, -1});
        }
      }
    }
    if (index.empty()) continue;

    std::vector<Bucket<Key>> out;
    if (single_top) {
      const auto& top = top_buckets.front();
      const auto& [dk, dc] = top.terms.front();
      const auto dcs = to_signed(dc);
      for (const auto& [sub, refs] : index) {
        SignedMap<Key> residual;
        for (const auto& r : refs) add_signed_product(r, residual);
        Bucket<Key> qb{{sub.first - top.sub.first, sub.second - top.sub.second}, {}};
        for (const auto& [k, c] : residual) {
          if (c == 0) continue;
          if (c < 0) throw NotDivisible("negative coefficient at " + to_string(space.unpack(k)));
          if (c % dcs != 0) throw NotDivisible("coefficient not divisible at " + to_string(space.unpack(k)));
          Key qk;
          if (!key_div(k, dk, qk)) throw PackedOverflow{};
          qb.terms.emplace_back(std::move(qk), static_cast<Coeff>(c / dcs));
        }
        if (qb.terms.empty()) continue;
        check_bound(h);
        out.push_back(std::move(qb));
      }
    } else {
      SignedMap<Key> residual;
      for (const auto& [sub, refs] : index) {
        for (const auto& r : refs) add_signed_product(r, residual);
      }
      if (all_zero(residual)) continue;
      check_bound(h);
      out = divide_class_generic(residual);
    }
    if (!out.empty()) q.classes[h - h_top] = std::move(out);
  }

  if (!full_remainder) {
    auto mass_of = [](const Bucketed<Key>& g) {
      Coeff m = 0;
      for (const auto& [h, buckets] : g.classes) {
        for (const auto& b : buckets) {
          for (const auto& [k, c] : b.terms) m += c;
        }
      }
      return m;
    };
    std::int64_t num_mass = 0;
    for (const auto& [stream, sign] : num) num_mass += sign * to_signed(stream->mass());
    if (to_signed(mass_of(q)) * to_signed(mass_of(den)) != num_mass) throw NotDivisible("mass balance fails");
  }

  PolyAccumulator acc;
  for (const auto& [h, buckets] : q.classes) {
    for (const auto& b : buckets) {
      for (const auto& [k, c] : b.terms) acc.add(qspace.unpack(k), c);
    }
  }
  return std::move(acc).finish();
}

template <class Key, class Space, class QSpace>
QPolynomial solve_impl(const Space& space, const QSpace& qspace, GradedRelation<Key>&& g) {
  ProductStream<Key> lhs(std::move(g.left_right));
  std::optional<ProductStream<Key>> src;
  if (!g.sources.empty()) src.emplace(std::move(g.sources));
  Numerator<Key> num{{&lhs, 1}};
  if (src) num.push_back({&*src, -1});
  return divide_impl<Key>(space, qspace, num, bucketize(std::move(g.bottom)), false);
}

template <class Key, class Space>
QPolynomial poly_div_impl(const Space& space, const QPolynomial& num, const QPolynomial& den) {
  ProductStream<Key> stream(grade_each<Key>({&num}, space));
  return divide_impl<Key>(space, space, Numerator<Key>{{&stream, 1}}, bucketize(grade<Key>(den, space)));
}

// ---- A-exponent keys --------------------------------------------------------

using DigitMax = std::map<std::pair<int, int>, std::uint64_t>;

struct AExpanded {
  LMonomial head;
  std::vector<AVector> below;  // one per term, in term order
  DigitMax max;
};

std::optional<AExpanded> expand_below_head(const QPolynomial& p) {
  AExpanded x;
  x.head = p.leading().monomial;
  x.below.reserve(p.size());
  for (const auto& t : p) {
    AVector v;
    try {
      v = factor_over_A(x.head, t.monomial);
    } catch (const NotInLattice&) {
      return std::nullopt;
    }
    for (const auto& e : v.entries()) {
      if (e.exp > 0) return std::nullopt;
      auto& slot = x.max[{node_number(e.node), e.shift}];
      slot = std::max<std::uint64_t>(slot, static_cast<std::uint64_t>(-e.exp));
    }
    x.below.push_back(std::move(v));
  }
  return x;
}

DigitMax digit_sum(const std::vector<const DigitMax*>& parts) {
  DigitMax out;
  for (const auto* d : parts) {
    for (const auto& [pos, v] : *d) out[pos] += v;
  }
  return out;
}

void digit_max_into(DigitMax& into, const DigitMax& d) {
  for (const auto& [pos, v] : d) into[pos] = std::max(into[pos], v);
}

struct APrepared {
  ALayout layout;
  LMonomial frame;           // head(left) head(right)
  LMonomial quotient_frame;  // frame / head(bottom)
  GradedRelation<AKey> graded;
};

// Lays out bit fields for every A-direction of the relation, or gives up when
// some character is not a head times A^{-1}'s, the products' heads disagree,
// or the digits need more than 128 bits.
std::optional<APrepared> prepare_a(const RelationChars& rc) {
  if (rc.left->is_zero() || rc.right->is_zero()) return std::nullopt;
  for (const auto* p : rc.sources) {
    if (p->is_zero()) return std::nullopt;
  }
  auto expand = [](const QPolynomial* p) { return expand_below_head(*p); };
  auto left = expand(rc.left);
  auto right = expand(rc.right);
  if (!left || !right) return std::nullopt;
  std::optional<AExpanded> top;
  std::optional<AExpanded> bottom;
  if (rc.top) {
    if (rc.top->is_zero() || !(top = expand(rc.top))) return std::nullopt;
  }
  if (rc.bottom) {
    if (rc.bottom->is_zero() || !(bottom = expand(rc.bottom))) return std::nullopt;
  }
  std::vector<AExpanded> sources;
  for (const auto* p : rc.sources) {
    auto x = expand(p);
    if (!x) return std::nullopt;
    sources.push_back(std::move(*x));
  }

  APrepared a;
  a.frame = left->head * right->head;
  const LMonomial bottom_head = bottom ? bottom->head : LMonomial{};
  a.quotient_frame = a.frame * bottom_head.inverse();
  if (top && top->head * bottom_head != a.frame) return std::nullopt;

  // The source product's head sits below the frame by w.
  AVector w;
  DigitMax w_max;
  if (!sources.empty()) {
    LMonomial heads;
    for (const auto& x : sources) heads *= x.head;
    try {
      w = factor_over_A(a.frame, heads);
    } catch (const NotInLattice&) {
      return std::nullopt;
    }
    for (const auto& e : w.entries()) {
      if (e.exp > 0) return std::nullopt;
      w_max[{node_number(e.node), e.shift}] = static_cast<std::uint64_t>(-e.exp);
    }
  }

  DigitMax numerator = digit_sum({&left->max, &right->max});
  if (!sources.empty()) {
    std::vector<const DigitMax*> parts{&w_max};
    for (const auto& x : sources) parts.push_back(&x.max);
    digit_max_into(numerator, digit_sum(parts));
  }
  DigitMax cap = numerator;
  const DigitMax none;
  const DigitMax& bottom_max = bottom ? bottom->max : none;
  if (top) digit_max_into(cap, digit_sum({&top->max, &bottom_max}));
  // Quotient digits stay within the numerator's; times the bottom's.
  digit_max_into(cap, digit_sum({&numerator, &bottom_max}));

  int offset = 0;
  for (const auto& [pos, c] : cap) {
    if (c == 0) continue;
    const int bits = std::bit_width(c);
    auto qit = numerator.find(pos);
    a.layout.index[pos] = a.layout.fields.size();
    a.layout.fields.push_back({node_from_int(pos.first), pos.second, offset, bits,
                               qit == numerator.end() ? 0 : qit->second});
    offset += bits;
    if (offset > 128) return std::nullopt;
  }

  auto grade_a = [&](const QPolynomial& p, const AExpanded& x, const AKey& shift) {
    Graded<AKey> g;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Term& t = p.terms()[i];
      g.classes[weight_of(t.monomial).height()].emplace_back(key_mul(a.layout.encode(x.below[i]), shift), t.coeff);
    }
    return g;
  };
  const AKey zero{};
  a.graded.left_right.push_back(grade_a(*rc.left, *left, zero));
  a.graded.left_right.push_back(grade_a(*rc.right, *right, zero));
  if (top) {
    a.graded.top_bottom.push_back(grade_a(*rc.top, *top, zero));
    if (bottom) a.graded.top_bottom.push_back(grade_a(*rc.bottom, *bottom, zero));
  }
  for (std::size_t i = 0; i < sources.size(); ++i) {
    a.graded.sources.push_back(grade_a(*rc.sources[i], sources[i], i == 0 ? a.layout.encode(w) : zero));
  }
  if (bottom) {
    a.graded.bottom = grade_a(*rc.bottom, *bottom, zero);
  } else {
    a.graded.bottom.classes[0].emplace_back(zero, 1);
  }
  return a;
}

std::vector<const QPolynomial*> all_polys(const RelationChars& rc) {
  std::vector<const QPolynomial*> ps{rc.left, rc.right, rc.top};
  if (rc.bottom) ps.push_back(rc.bottom);
  for (const auto* p : rc.sources) ps.push_back(p);
  std::erase(ps, nullptr);
  return ps;
}

template <class Key>
void collect_dominant(const Bucketed<Key>& small, const Bucketed<Key>& big, CoeffMap<Key>& out) {
  for (const auto& [ha, la] : small.classes) {
    for (const auto& [hb, lb] : big.classes) {
      // Dominant monomials have nonnegative height.
      if (ha + hb < 0) continue;
      for (const auto& ba : la) {
        for (const auto& bb : lb) {
          // and nonnegative node-1 weight.
          if (ba.sub.first + bb.sub.first < 0) continue;
          for (const auto& [ka, ca] : ba.terms) {
            for (const auto& [kb, cb] : bb.terms) {
              Key k = key_mul(ka, kb);
              if (key_dominant(k)) accumulate(out[k], checked_mul(ca, cb));
            }
          }
        }
      }
    }
  }
}

template <class Key, class Space>
std::vector<Multiplicity> product_dominants_impl(const Space& space, const std::vector<const QPolynomial*>& factors) {
  std::vector<Graded<Key>> gs;
  for (const auto* p : factors) gs.push_back(grade<Key>(*p, space));
  ProductStream<Key> stream(std::move(gs));
  CoeffMap<Key> out;
  collect_dominant(stream.small(), stream.big(), out);
  std::vector<Multiplicity> res;
  for (const auto& [k, c] : out) res.push_back({space.unpack(k), c});
  std::sort(res.begin(), res.end(), [](const auto& a, const auto& b) { return a.monomial < b.monomial; });
  return res;
}

}  // namespace

VerificationReport verify_chars(const RelationChars& rc) {
  if (auto a = prepare_a(rc)) {
    LayoutScope scope(&a->layout);
    return verify_impl<AKey>(AFrame{&a->layout, a->frame}, std::move(a->graded));
  }
  if (auto space = PackedSpace::covering(all_polys(rc))) {
    return verify_impl<Packed>(*space, grade_relation<Packed>(rc, *space));
  }
  return verify_impl<LMonomial>(GenericSpace{}, grade_relation<LMonomial>(rc, GenericSpace{}));
}

QPolynomial solve_for_top(const RelationChars& rc) {
  if (auto a = prepare_a(rc)) {
    LayoutScope scope(&a->layout);
    try {
      return solve_impl<AKey>(AFrame{&a->layout, a->frame}, AFrame{&a->layout, a->quotient_frame},
                              std::move(a->graded));
    } catch (const PackedOverflow&) {
    }
  }
  std::vector<const QPolynomial*> ps = all_polys(rc);
  if (auto space = PackedSpace::covering(ps)) {
    try {
      return solve_impl<Packed>(*space, *space, grade_relation<Packed>(rc, *space));
    } catch (const PackedOverflow&) {
    }
  }
  return solve_impl<LMonomial>(GenericSpace{}, GenericSpace{}, grade_relation<LMonomial>(rc, GenericSpace{}));
}

}  // namespace detail

using namespace detail;

VerificationReport verify_relation(const RelationInstance& inst, const CharacterProvider& chars) {
  auto start = std::chrono::steady_clock::now();
  std::vector<CharPtr> hold;
  auto get = [&](const FamilyId& id) {
    hold.push_back(chars(id));
    return hold.back().get();
  };
  RelationChars rc;
  rc.left = get(inst.left);
  rc.right = get(inst.right);
  rc.top = get(inst.top);
  if (inst.bottom) rc.bottom = get(*inst.bottom);
  for (const auto& s : inst.sources) rc.sources.push_back(get(s));
  VerificationReport rep = verify_chars(rc);
  rep.id = inst.id;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

void require_pass(const VerificationReport& report) {
  if (report.passed) return;
  std::string msg = to_string(report.id) + " fails";
  if (report.first_discrepancy) {
    const auto& d = *report.first_discrepancy;
    msg += " at " + to_string(d.monomial) + " (lhs " + std::to_string(d.lhs) + ", rhs " + std::to_string(d.rhs) + ")";
  }
  throw IdentityFails(msg);
}

QPolynomial poly_div_exact(const QPolynomial& num, const QPolynomial& den) {
  if (den.is_zero()) throw InvalidParameters("division by the zero polynomial");
  if (auto space = PackedSpace::covering({&num, &den})) {
    try {
      return poly_div_impl<Packed>(*space, num, den);
    } catch (const PackedOverflow&) {
    }
  }
  return poly_div_impl<LMonomial>(GenericSpace{}, num, den);
}

std::vector<Multiplicity> dominant_monomials(const QPolynomial& p) {
  std::vector<Multiplicity> out;
  for (const auto& t : p) {
    if (is_dominant(t.monomial)) out.push_back({t.monomial, t.coeff});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.monomial < b.monomial; });
  return out;
}

std::vector<Multiplicity> anti_dominant_monomials(const QPolynomial& p) {
  std::vector<Multiplicity> out;
  for (const auto& t : p) {
    if (is_antidominant(t.monomial)) out.push_back({t.monomial, t.coeff});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.monomial < b.monomial; });
  return out;
}

std::vector<Multiplicity> dominant_monomials_of_product(const std::vector<const QPolynomial*>& factors) {
  if (factors.empty()) return {{LMonomial{}, 1}};
  for (const auto* p : factors) {
    if (p->is_zero()) return {};
  }
  if (auto space = PackedSpace::covering(factors)) return product_dominants_impl<Packed>(*space, factors);
  return product_dominants_impl<LMonomial>(GenericSpace{}, factors);
}

}  // namespace qg2
