#include "qg2/dimensions.hpp"

#include <string>

#include "qg2/errors.hpp"

namespace qg2 {

namespace {

using Int = __int128;

std::string to_string(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  if (neg) v = -v;
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return neg ? "-" + s : s;
}

std::uint64_t finish(Int num, Int den, const char* label) {
  if (num % den != 0) {
    throw NonIntegralResult(std::string("closed form for ") + label + " is not integral: " + to_string(num) + "/" +
                            to_string(den));
  }
  Int q = num / den;
  if (q <= 0 || q > static_cast<Int>(UINT64_MAX)) throw NonIntegralResult(std::string("closed form for ") + label + " out of range");
  return static_cast<std::uint64_t>(q);
}

// In each formula k and l are the reduced indices, e.g. B_{k,3l+1}.

std::uint64_t dim_b(Int k, Int L) {
  Int l = L / 3;
  switch (static_cast<int>(L % 3)) {
    case 0:
      return finish((l + 2) * (l + 1) * (1 + k) * (k + 3 + l) * (k + 2 + l) *
                        (54 * l * l * l * k * k * k + 243 * l * l * k * k * k + 363 * l * k * k * k + 180 * k * k * k +
                         2784 * l * l * k * k + 1080 * k * k + 162 * l * l * l * l * k * k + 2880 * l * k * k +
                         1134 * l * l * l * k * k + 162 * l * l * l * l * l * k + 1539 * l * l * l * l * k +
                         5490 * l * l * l * k + 9132 * l * l * k + 7057 * l * k + 2040 * k + 54 * l * l * l * l * l * l +
                         648 * l * l * l * l * l + 3069 * l * l * l * l + 7272 * l * l * l + 8977 * l * l + 5380 * l + 1200),
                    14400, "B");
    case 1:
      return finish((l + 3) * (l + 2) * (l + 1) * (1 + k) * (k + 2 + l) * (k + 4 + l) * (k + 3 + l) *
                        (171 * l * k * k + 120 * k * k + 54 * l * l * k * k + 600 * k + 621 * l * l * k +
                         108 * l * l * l * k + 1116 * l * k + 54 * l * l * l * l + 450 * l * l * l + 1341 * l * l +
                         1665 * l + 700),
                    14400, "B");
    default:
      return finish((l + 3) * (l + 2) * (l + 1) * (1 + k) * (k + 4 + l) * (k + 3 + l) * (2 + k + l) *
                        (300 * k * k + 261 * l * k * k + 54 * l * l * k * k + 891 * l * l * k + 2376 * l * k + 2040 * k +
                         108 * l * l * l * k + 54 * l * l * l * l + 630 * l * l * l + 2691 * l * l + 4995 * l + 3400),
                    14400, "B");
  }
}

std::uint64_t dim_c(Int k, Int l) {
  return finish((l + 2) * (l + 1) * (k + 2) * (k + 1) * (k + 3 + l) * (k + 2 + l) *
                    (3 * k * k + 3 * l * k * k + 12 * k + 15 * l * k + 3 * l * l * k + 3 * l * l + 12 * l + 10),
                240, "C");
}

std::uint64_t dim_d(Int k, Int l) {
  return finish((l + 2) * (l + 1) * (k + 2) * (k + 1) * (k + 3 + l) * (k + 4 + l) *
                    (3 * l * k * k + 6 * k * k + 3 * l * l * k + 30 * k + 21 * l * k + 6 * l * l + 30 * l + 35),
                240, "D");
}

std::uint64_t dim_e(Int K, Int L) {
  Int k = K / 3;
  Int l = L / 2;
  Int k2 = k * k, k3 = k2 * k, k4 = k3 * k;
  Int l2 = l * l, l3 = l2 * l, l4 = l3 * l, l5 = l4 * l, l6 = l5 * l;
  int rk = static_cast<int>(K % 3);
  bool odd = L % 2 != 0;
  if (rk == 0 && !odd) {
    return finish((l + 2) * (l + 1) * (k + 1) * (k + l + 1) * (k + l + 2) * (k + l + 2) * (k + l + 3) * (k + l + 3) *
                      (27 * k4 * l2 + 81 * k4 * l + 54 * k4 + 81 * k3 * l3 + 468 * k3 * l2 + 825 * k3 * l + 432 * k3 +
                       81 * k2 * l4 + 711 * k2 * l3 + 2184 * k2 * l2 + 2754 * k2 * l + 1179 * k2 + 27 * k * l5 +
                       342 * k * l4 + 1593 * k * l3 + 3438 * k * l2 + 3435 * k * l + 1260 * k + 18 * l5 + 180 * l4 +
                       696 * l3 + 1296 * l2 + 1160 * l + 400),
                  28800, "E");
  }
  if (rk == 0) {
    return finish((l + 3) * (l + 2) * (l + 1) * (k + 1) * (k + l + 4) * (k + l + 2) * (k + l + 2) * (k + l + 3) *
                      (k + l + 3) *
                      (27 * k4 * l + 54 * k4 + 81 * k3 * l2 + 414 * k3 * l + 510 * k3 + 81 * k2 * l3 + 684 * k2 * l2 +
                       1842 * k2 * l + 1611 * k2 + 27 * k * l4 + 342 * k * l3 + 1512 * k * l2 + 2808 * k * l +
                       1875 * k + 18 * l4 + 180 * l3 + 642 * l2 + 960 * l + 500),
                  28800, "E");
  }
  if (rk == 1 && !odd) {
    return finish((l + 2) * (l + 1) * (k + 1) * (k + l + 4) * (k + l + 2) * (k + l + 2) * (k + l + 3) * (k + l + 3) *
                      (27 * k4 * l2 + 81 * k4 * l + 54 * k4 + 81 * k3 * l3 + 477 * k3 * l2 + 852 * k3 * l + 450 * k3 +
                       81 * k2 * l4 + 747 * k2 * l3 + 2373 * k2 * l2 + 3069 * k2 * l + 1341 * k2 + 27 * k * l5 +
                       387 * k * l4 + 1935 * k * l3 + 4353 * k * l2 + 4461 * k * l + 1665 * k + 36 * l5 + 360 * l4 +
                       1374 * l3 + 2490 * l2 + 2140 * l + 700),
                  28800, "E");
  }
  if (rk == 1) {
    return finish((l + 3) * (l + 2) * (l + 1) * (k + 1) * (k + l + 2) * (k + l + 3) * (k + l + 3) * (k + l + 4) *
                      (k + l + 4) *
                      (27 * k4 * l + 54 * k4 + 81 * k3 * l2 + 450 * k3 * l + 582 * k3 + 81 * k2 * l3 + 774 * k2 * l2 +
                       2310 * k2 * l + 2193 * k2 + 27 * k * l4 + 414 * k * l3 + 2124 * k * l2 + 4488 * k * l +
                       3375 * k + 36 * l4 + 396 * l3 + 1590 * l2 + 2760 * l + 1750),
                  28800, "E");
  }
  if (!odd) {
    return finish((l + 2) * (l + 1) * (k + 2) * (k + 1) * (k + l + 4) * (k + l + 2) * (k + l + 3) * (k + l + 3) *
                      (27 * k4 * l2 + 81 * k4 * l + 54 * k4 + 108 * k3 * l3 + 648 * k3 * l2 + 1176 * k3 * l +
                       630 * k3 + 162 * k2 * l4 + 1458 * k2 * l3 + 4629 * k2 * l2 + 6057 * k2 * l + 2691 * k2 +
                       108 * k * l5 + 1296 * k * l4 + 5946 * k * l3 + 12942 * k * l2 + 13230 * k * l + 4995 * k +
                       27 * l6 + 405 * l5 + 2439 * l4 + 7515 * l3 + 12429 * l2 + 10395 * l + 3400),
                  28800, "E");
  }
  return finish((l + 3) * (l + 2) * (l + 1) * (k + 2) * (k + 1) * (k + l + 5) * (k + l + 2) * (k + l + 3) *
                    (k + l + 3) * (k + l + 4) * (k + l + 4) *
                    (9 * k2 * l + 18 * k2 + 18 * k * l2 + 99 * k * l + 128 * k + 9 * l3 + 81 * l2 + 237 * l + 225),
                9600, "E");
}

std::uint64_t dim_f(Int K, Int L) {
  Int k = K / 3;
  Int l = L / 3;
  Int k2 = k * k, k3 = k2 * k, k4 = k3 * k;
  Int l2 = l * l, l3 = l2 * l, l4 = l3 * l;
  int rk = static_cast<int>(K % 3);
  int rl = static_cast<int>(L % 3);
  switch (rk * 3 + rl) {
    case 0:
      return finish((l + 2) * (l + 2) * (l + 1) * (l + 1) * (k + 2) * (k + 2) * (k + 1) * (k + 1) * (k + l + 3) *
                        (k + l + 3) *
                        (27 * k4 * l2 + 81 * k4 * l + 54 * k4 + 54 * k3 * l3 + 405 * k3 * l2 + 801 * k3 * l +
                         432 * k3 + 27 * k2 * l4 + 405 * k2 * l3 + 1746 * k2 * l2 + 2646 * k2 * l + 1179 * k2 +
                         81 * k * l4 + 801 * k * l3 + 2646 * k * l2 + 3342 * k * l + 1260 * k + 54 * l4 + 432 * l3 +
                         1179 * l2 + 1260 * l + 400),
                    57600, "F");
    case 3:  // F_{3k+1,3l}
      return finish((l + 2) * (l + 2) * (l + 1) * (l + 1) * (k + 3) * (k + 1) * (k + 2) * (k + 2) * (k + l + 4) *
                        (k + l + 3) *
                        (27 * k4 * l2 + 81 * k4 * l + 54 * k4 + 54 * k3 * l3 + 414 * k3 * l2 + 828 * k3 * l +
                         450 * k3 + 27 * k2 * l4 + 414 * k2 * l3 + 1854 * k2 * l2 + 2907 * k2 * l + 1341 * k2 +
                         81 * k * l4 + 864 * k * l3 + 3063 * k * l2 + 4116 * k * l + 1665 * k + 54 * l4 + 498 * l3 +
                         1563 * l2 + 1905 * l + 700),
                    57600, "F");
    case 6:  // F_{3k+2,3l}
      return finish((l + 2) * (l + 2) * (l + 1) * (l + 1) * (k + 3) * (k + 1) * (k + 2) * (k + 2) * (k + l + 4) *
                        (k + l + 3) *
                        (27 * k4 * l2 + 81 * k4 * l + 54 * k4 + 54 * k3 * l3 + 504 * k3 * l2 + 1098 * k3 * l +
                         630 * k3 + 27 * k2 * l4 + 558 * k2 * l3 + 3042 * k2 * l2 + 5355 * k2 * l + 2691 * k2 +
                         135 * k * l4 + 1764 * k * l3 + 7395 * k * l2 + 11190 * k * l + 4995 * k + 162 * l4 +
                         1734 * l3 + 6249 * l2 + 8475 * l + 3400),
                    57600, "F");
    case 1:  // F_{3k,3l+1}
      return finish((l + 3) * (l + 1) * (l + 2) * (l + 2) * (k + 2) * (k + 2) * (k + 1) * (k + 1) * (k + l + 4) *
                        (k + l + 3) *
                        (27 * k4 * l2 + 81 * k4 * l + 54 * k4 + 54 * k3 * l3 + 414 * k3 * l2 + 864 * k3 * l +
                         498 * k3 + 27 * k2 * l4 + 414 * k2 * l3 + 1854 * k2 * l2 + 3063 * k2 * l + 1563 * k2 +
                         81 * k * l4 + 828 * k * l3 + 2907 * k * l2 + 4116 * k * l + 1905 * k + 54 * l4 + 450 * l3 +
                         1341 * l2 + 1665 * l + 700),
                    57600, "F");
    case 4:  // F_{3k+1,3l+1}
      return finish((l + 3) * (l + 1) * (l + 2) * (l + 2) * (k + 3) * (k + 1) * (k + 2) * (k + 2) * (k + l + 3) *
                        (k + l + 4) *
                        (27 * k4 * l2 + 81 * k4 * l + 54 * k4 + 54 * k3 * l3 + 450 * k3 * l2 + 972 * k3 * l +
                         570 * k3 + 27 * k2 * l4 + 450 * k2 * l3 + 2214 * k2 * l2 + 3891 * k2 * l + 2061 * k2 +
                         81 * k * l4 + 972 * k * l3 + 3891 * k * l2 + 6060 * k * l + 2985 * k + 54 * l4 + 570 * l3 +
                         2061 * l2 + 2985 * l + 1400),
                    57600, "F");
    case 7:  // F_{3k+2,3l+1}
      return finish((l + 3) * (l + 1) * (l + 2) * (l + 2) * (k + 3) * (k + 1) * (k + 2) * (k + 2) * (k + l + 3) *
                        (k + l + 5) * (k + l + 4) * (k + l + 4) *
                        (9 * k2 * l2 + 27 * k2 * l + 18 * k2 + 45 * k * l2 + 135 * k * l + 88 * k + 54 * l2 +
                         164 * l + 105),
                    19200, "F");
    case 2:  // F_{3k,3l+2}
      return finish((l + 3) * (l + 1) * (l + 2) * (l + 2) * (k + 2) * (k + 2) * (k + 1) * (k + 1) * (k + l + 4) *
                        (k + l + 3) *
                        (27 * k4 * l2 + 135 * k4 * l + 162 * k4 + 54 * k3 * l3 + 558 * k3 * l2 + 1764 * k3 * l +
                         1734 * k3 + 27 * k2 * l4 + 504 * k2 * l3 + 3042 * k2 * l2 + 7395 * k2 * l + 6249 * k2 +
                         81 * k * l4 + 1098 * k * l3 + 5355 * k * l2 + 11190 * k * l + 8475 * k + 54 * l4 + 630 * l3 +
                         2691 * l2 + 4995 * l + 3400),
                    57600, "F");
    case 5:  // F_{3k+1,3l+2}
      return finish((l + 3) * (l + 1) * (l + 2) * (l + 2) * (k + 3) * (k + 1) * (k + 2) * (k + 2) * (k + l + 3) *
                        (k + l + 5) * (k + l + 4) * (k + l + 4) *
                        (9 * k2 * l2 + 45 * k2 * l + 54 * k2 + 27 * k * l2 + 135 * k * l + 164 * k + 18 * l2 +
                         88 * l + 105),
                    19200, "F");
    default:  // F_{3k+2,3l+2}
      return finish((l + 3) * (l + 1) * (l + 2) * (l + 2) * (k + 3) * (k + 1) * (k + 2) * (k + 2) * (k + l + 4) *
                        (k + l + 5) *
                        (27 * k4 * l2 + 135 * k4 * l + 162 * k4 + 54 * k3 * l3 + 630 * k3 * l2 + 2124 * k3 * l +
                         2166 * k3 + 27 * k2 * l4 + 630 * k2 * l3 + 4374 * k2 * l2 + 11661 * k2 * l + 10473 * k2 +
                         135 * k * l4 + 2124 * k * l3 + 11661 * k * l2 + 26748 * k * l + 21759 * k + 162 * l4 +
                         2166 * l3 + 10473 * l2 + 21759 * l + 16400),
                    57600, "F");
  }
}

}  // namespace

std::uint64_t dim_closed_form(const DimQuery& q) {
  if (q.k < 0 || q.l < 0) throw InvalidParameters("dimension indices must be nonnegative");
  Int k = q.k;
  Int l = q.l;
  switch (q.family) {
    case DimFamily::B:
      return dim_b(k, l);
    case DimFamily::C:
      return dim_c(k, l);
    case DimFamily::D:
      return dim_d(k, l);
    case DimFamily::E:
      return dim_e(k, l);
    case DimFamily::F:
      return dim_f(k, l);
  }
  throw InvalidParameters("unknown family");
}

std::uint64_t dim_of_character(const QPolynomial& p) { return p.mass(); }

}  // namespace qg2
