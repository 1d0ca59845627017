#include "ruledwalls/walls.hpp"

#include <algorithm>
#include <future>
#include <utility>

#include "ruledwalls/cohomology.hpp"

namespace ruledwalls {

namespace {

bool is_even(const Int& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

int parity_of(const Int& x) { return mpz_odd_p(x.get_mpz_t()) != 0 ? 1 : 0; }

// First integer >= lo with the given parity bit.
Int first_with_parity(Int lo, int parity) {
  if (parity_of(lo) != parity) lo += 1;
  return lo;
}

bool parity_range_nonempty(const Int& lo, const Int& hi, int parity) {
  if (lo > hi) return false;
  return first_with_parity(lo, parity) <= hi;
}

// The unique h making S + tH a ray of aS + hH (the ray polynomial solved
// for h); monotone increasing in t > 0 when a < 0, since the derivative
// numerator is 2|a| (t^2 + c1' t + c2') > 0 on the positive axis.
QuadraticNumber h_of_slope(const RuledThreefold& X, const Int& a,
                           const QuadraticNumber& t) {
  if (t.sign() == 0 && X.c1p == 0) return QuadraticNumber(Rational(0));
  const QuadraticNumber num =
      t.squared() + QuadraticNumber(Rational(Int(2 * X.c1p))) * t +
      QuadraticNumber(Rational(Int(X.c1p * X.c1p - X.c2p)));
  const QuadraticNumber den =
      QuadraticNumber(Rational(2)) * t + QuadraticNumber(Rational(X.c1p));
  return QuadraticNumber(Rational(Int(-a))) * (num / den);
}

struct RowScan {
  std::vector<Int> in_caps;  // H-coefficients to check fully, ascending
  bool beyond_caps = false;  // exact analysis leaves candidates outside caps
};

// Candidate H-coefficients of one S-coefficient row a < 0.  A candidate must
// have its ray inside the window (by monotonicity of h_of_slope an exact
// surd interval in h), carry the right parity, and pass both halves of
// pseudo-effectivity of [Z]:
//
//   z1 >= 0            4 z1 = 4 c2.z1 + a^2 c1' + 2 a h - (c1^2).z1
//                      is linear in h with slope 2a < 0: an upper bound;
//   c1' z1 + z2 >= 0   4 (c1' z1 + z2) = h^2 + 2 a c1' h + K
//                      is an upward parabola in h: the complement of the
//                      open interval between its roots.
//
// In-cap candidates are listed (parity only; the full wall test re-checks
// pseudo-effectivity exactly) and beyond_caps reports whether a candidate
// survives all four constraints outside the H-coefficient cap.
RowScan scan_row(const RuledThreefold& X, const DivisorClass& c1,
                 const CycleClass& c2, const Int& a, const SlopeWindow& win,
                 int h_parity, const Int& b_cap) {
  RowScan out;

  const QuadraticNumber h_lo_s = h_of_slope(X, a, win.lo);
  const QuadraticNumber h_hi_s = h_of_slope(X, a, win.hi);
  Int h_min = h_lo_s.ceil_int();
  if (win.lo_open && QuadraticNumber(Rational(h_min)) == h_lo_s) h_min += 1;
  Int h_max = h_hi_s.floor_int();
  if (win.hi_open && QuadraticNumber(Rational(h_max)) == h_hi_s) h_max -= 1;

  const CycleClass c1sq = reduce_product(X, c1, c1);
  const Rational z1_cap(Int(4 * c2.z1 + a * a * X.c1p - c1sq.z1),
                        Int(-2 * a));
  h_max = std::min(h_max, z1_cap.floor_int());
  if (h_min > h_max) return out;

  const Int K = a * a * (X.c1p * X.c1p - X.c2p) - X.c1p * c1sq.z1 - c1sq.z2 +
                4 * (X.c1p * c2.z1 + c2.z2);
  std::optional<std::pair<QuadraticNumber, QuadraticNumber>> gap;
  {
    auto roots = quadratic_roots(Int(1), Int(2 * a * X.c1p), K);
    if (roots.size() == 2 && qn_compare(roots[0], roots[1]) < 0)
      gap.emplace(roots[0], roots[1]);
  }

  // Is there a parity-matched integer in [lo, hi] outside the open gap?
  // The gap endpoints themselves are allowed (the parabola vanishes there).
  auto survivor = [&](const Int& lo, const Int& hi) {
    if (lo > hi) return false;
    if (!gap) return parity_range_nonempty(lo, hi, h_parity);
    const Int left = gap->first.floor_int();
    const Int right = gap->second.ceil_int();
    return parity_range_nonempty(lo, std::min(hi, left), h_parity) ||
           parity_range_nonempty(std::max(lo, right), hi, h_parity);
  };

  out.beyond_caps = survivor(h_min, std::min(h_max, Int(-b_cap - 1))) ||
                    survivor(std::max(h_min, Int(b_cap + 1)), h_max);

  const Int lo = std::max(h_min, Int(-b_cap));
  const Int hi = std::min(h_max, b_cap);
  if (lo <= hi)
    for (Int h = first_with_parity(lo, h_parity); h <= hi; h += 2)
      out.in_caps.push_back(h);
  return out;
}

// One boundary of the unexplored-row analysis, as a polynomial in n = a^2
// with all coefficients inside a single quadratic field.
struct TailBound {
  QuadraticNumber n2, n1, n0;

  int sign_at(const Int& n) const {
    const QuadraticNumber v{Rational(n)};
    return ((n2 * v + n1) * v + n0).sign();
  }

  // Once the value and (for a genuine quadratic) the slope both carry the
  // sign of the leading coefficient, the sign is locked for every larger n.
  bool settled_at(const Int& n) const {
    if (n2.sign() != 0) {
      const QuadraticNumber slope =
          n2 * QuadraticNumber(Rational(Int(2 * n))) + n1;
      return sign_at(n) == n2.sign() && slope.sign() == n2.sign();
    }
    if (n1.sign() != 0) return sign_at(n) == n1.sign();
    return true;
  }
};

}  // namespace

bool SlopeWindow::contains(const QuadraticNumber& t) const {
  const int cl = qn_compare(t, lo);
  if (cl < 0 || (cl == 0 && lo_open)) return false;
  const int ch = qn_compare(t, hi);
  if (ch > 0 || (ch == 0 && hi_open)) return false;
  return true;
}

std::array<Int, 3> slope_polynomial(const RuledThreefold& X,
                                    const DivisorClass& xi) {
  return {xi.a, Int(2 * xi.a * X.c1p + 2 * xi.b),
          Int(xi.a * (X.c1p * X.c1p - X.c2p) + xi.b * X.c1p)};
}

CycleClass z_class_of(const RuledThreefold& X, const DivisorClass& xi,
                      const DivisorClass& c1, const CycleClass& c2) {
  const CycleClass xisq = reduce_product(X, xi, xi);
  const CycleClass c1sq = reduce_product(X, c1, c1);
  const Int n1 = 4 * c2.z1 + xisq.z1 - c1sq.z1;
  const Int n2 = 4 * c2.z2 + xisq.z2 - c1sq.z2;
  if (n1 % 4 != 0 || n2 % 4 != 0)
    throw std::domain_error(
        "z-class is not integral: xi + c1 must be divisible by 2");
  return CycleClass{Int(n1 / 4), Int(n2 / 4)};
}

WallCheck wall_check(const RuledThreefold& X, const DivisorClass& xi,
                     const DivisorClass& c1, const CycleClass& c2) {
  WallCheck w;
  w.xi = xi;
  w.parity_ok = is_even(Int(xi.a + c1.a)) && is_even(Int(xi.b + c1.b));
  if (w.parity_ok) {
    w.z_class = z_class_of(X, xi, c1, c2);
    w.z_pseudo_effective = cycle_pseudo_effective(X, *w.z_class);
  }
  if (!(xi.a == 0 && xi.b == 0)) {
    const auto [A, B, C] = slope_polynomial(X, xi);
    for (const auto& r : quadratic_roots(A, B, C)) {
      if (r.sign() <= 0) continue;
      if (!w.rays.empty() && w.rays.back() == r) continue;  // double root
      w.rays.push_back(r);
    }
  }
  w.is_wall = w.parity_ok && w.z_pseudo_effective && !w.rays.empty();
  return w;
}

int side_of_wall(const RuledThreefold& X, const DivisorClass& xi,
                 const DivisorClass& L) {
  return sign_of(triple_product(X, xi, L, L));
}

int side_at_slope(const RuledThreefold& X, const DivisorClass& xi,
                  const QuadraticNumber& t) {
  if (t.sign() <= 0)
    throw std::invalid_argument("slope point must be positive");
  const auto [A, B, C] = slope_polynomial(X, xi);
  return eval_quadratic(A, B, C, t).sign();
}

QuadraticNumber separation_parameter(const RuledThreefold& X,
                                     const DivisorClass& xi,
                                     const DivisorClass& L1,
                                     const DivisorClass& L2) {
  const Int C = triple_product(X, xi, L1, L1);
  const Int A = triple_product(X, xi, L2, L2);
  if (!(sign_of(C) < 0 && sign_of(A) > 0))
    throw std::invalid_argument(
        "separation needs L1 below the wall and L2 above it");
  const Int B = Int(2 * cycle_dot(X, reduce_product(X, L1, L2), xi));
  for (const auto& r : quadratic_roots(A, B, C))
    if (r.sign() > 0) return r;
  // Unreachable: A*C < 0 forces one positive and one negative root.
  throw std::logic_error("separation quadratic without positive root");
}

bool qin_sandwich(const RuledThreefold& X, const DivisorClass& xi,
                  const DivisorClass& c1, const CycleClass& c2,
                  const DivisorClass& L1, const DivisorClass& L2) {
  const CycleClass xisq = reduce_product(X, xi, xi);
  const CycleClass lower = reduce_product(X, c1, c1) - Int(4) * c2;
  for (const DivisorClass& s : {L1, L2, L1 + L2}) {
    const Int upper = cycle_dot(X, xisq, s);
    if (sign_of(upper) < 0 && cycle_dot(X, lower, s) <= upper) return true;
  }
  return false;
}

std::vector<WallCheck> enumerate_wall_classes_window(
    const RuledThreefold& X, const DivisorClass& c1, const CycleClass& c2,
    const SlopeWindow& window, const Caps& caps,
    const std::optional<std::pair<DivisorClass, DivisorClass>>& qin_pair,
    int threads) {
  if (threads < 1) throw std::invalid_argument("thread count must be >= 1");
  if (caps.a_max < 0 || caps.b_max < 0)
    throw std::invalid_argument("caps must be nonnegative");
  if (qn_compare(window.lo, window.hi) > 0)
    throw std::invalid_argument("slope window endpoints out of order");

  SlopeWindow win = window;
  if (win.hi.sign() <= 0) return {};
  if (win.lo.sign() < 0) {  // rays are positive: clip to t >= 0
    win.lo = QuadraticNumber(Rational(0));
    win.lo_open = true;
  }

  const int a_parity = parity_of(c1.a);
  const int h_parity = parity_of(c1.b);

  // Rows a = -1, -2, ... of the right parity; a = 0 never carries a wall
  // (its ray polynomial has no positive root when the parity class does).
  std::vector<Int> rows;
  for (Int a = -1; a >= Int(-caps.a_max); a -= 1)
    if (parity_of(a) == a_parity) rows.push_back(a);

  // Exact truncation analysis before any full checks, in row order.
  std::vector<RowScan> scans(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    scans[i] = scan_row(X, c1, c2, rows[i], win, h_parity, caps.b_max);
    if (scans[i].beyond_caps)
      throw TruncationError(
          rows[i], "wall enumeration truncated: candidates beyond the "
                   "H-coefficient cap remain in row " +
                       rows[i].get_str());
  }
  // Unexplored rows a < -a_max are certified empty by interval analysis
  // alone; per-integer reasoning is reserved for explored rows.  A candidate
  // h in row a = -m must satisfy
  //
  //   m f(lo) <= h <= min(m f(hi), z1 cap)      f = h_of_slope at m = 1
  //   h outside the open z2 gap (m c1' - w, m c1' + w),  w^2 = n c2' - B
  //
  // and in n = m^2 every boundary is polynomial:
  //
  //   interval nonempty    n (2 f(lo) - c1') <= A        A = 4 c2.z1 - (c1^2).z1
  //   gap exists           n c2' - B > 0                 B = 4 (c1' c2.z1 + c2.z2)
  //                                                          - c1' (c1^2).z1 - (c1^2).z2
  //   room left of gap     f(lo) <= c1'  and  n (c2' - (c1' - f(lo))^2) <= B
  //   room right of gap    f(hi) >= c1'  and  n (c2' - (f(hi) - c1')^2) <= B
  //                        and  n c1' <= A  and  (A - n c1')^2 >= 4 n (n c2' - B)
  //
  // Each sign is eventually constant in n; rows up to the settle point are
  // decided one by one and a single row beyond decides all the rest.  Any
  // feasible unexplored row truncates, naming the first unexplored row.
  {
    const CycleClass c1sq = reduce_product(X, c1, c1);
    const Int A = 4 * c2.z1 - c1sq.z1;
    const Int B =
        4 * (X.c1p * c2.z1 + c2.z2) - X.c1p * c1sq.z1 - c1sq.z2;
    const QuadraticNumber f_lo = h_of_slope(X, Int(-1), win.lo);
    const QuadraticNumber f_hi = h_of_slope(X, Int(-1), win.hi);
    const QuadraticNumber zero;
    const QuadraticNumber qA{Rational(A)}, qB{Rational(B)};
    const QuadraticNumber c1pq{Rational(X.c1p)}, c2pq{Rational(X.c2p)};
    const QuadraticNumber dlo = c1pq - f_lo, dhi = f_hi - c1pq;
    const TailBound iv{zero, c1pq - f_lo - f_lo, qA};
    const TailBound gap{zero, c2pq, QuadraticNumber(Rational(Int(-B)))};
    const TailBound left{zero, dlo.squared() - c2pq, qB};
    const TailBound right{zero, dhi.squared() - c2pq, qB};
    const TailBound zcap{zero, QuadraticNumber(Rational(Int(-X.c1p))), qA};
    const TailBound zsq{
        QuadraticNumber(Rational(Int(X.c1p * X.c1p - 4 * X.c2p))),
        QuadraticNumber(Rational(Int(4 * B - 2 * A * X.c1p))),
        QuadraticNumber(Rational(Int(A * A)))};

    const auto row_feasible = [&](const Int& m) {
      const Int n = m * m;
      if (iv.sign_at(n) < 0) return false;
      if (gap.sign_at(n) <= 0) return true;
      if (dlo.sign() >= 0 && left.sign_at(n) >= 0) return true;
      return dhi.sign() >= 0 && right.sign_at(n) >= 0 &&
             zcap.sign_at(n) >= 0 && zsq.sign_at(n) >= 0;
    };

    Int settle(1);
    for (const TailBound* tb : {&iv, &gap, &left, &right, &zcap, &zsq})
      while (!tb->settled_at(settle)) settle *= 2;

    Int m = first_with_parity(Int(caps.a_max + 1), a_parity);
    const Int first_unexplored = Int(-m);
    bool tail_hit = false;
    for (; !tail_hit && m * m <= settle; m += 2) tail_hit = row_feasible(m);
    if (!tail_hit) tail_hit = row_feasible(m);
    if (tail_hit)
      throw TruncationError(
          first_unexplored,
          "wall enumeration truncated: the interval analysis leaves possible "
          "candidates in the unexplored row " +
              first_unexplored.get_str() + " or beyond");
  }

  auto check_row = [&](std::size_t i) {
    std::vector<WallCheck> hits;
    for (const Int& h : scans[i].in_caps) {
      WallCheck w = wall_check(X, DivisorClass{rows[i], h}, c1, c2);
      if (!w.is_wall) continue;
      bool inside = false;
      for (const auto& r : w.rays) inside = inside || win.contains(r);
      if (!inside) continue;
      if (qin_pair &&
          !qin_sandwich(X, w.xi, c1, c2, qin_pair->first, qin_pair->second))
        continue;
      hits.push_back(std::move(w));
    }
    return hits;
  };

  std::vector<std::vector<WallCheck>> per_row(rows.size());
  if (threads == 1 || rows.size() <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) per_row[i] = check_row(i);
  } else {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(threads), rows.size());
    std::vector<std::future<void>> parts;
    parts.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      parts.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < rows.size(); i += workers)
          per_row[i] = check_row(i);
      }));
    for (auto& p : parts) p.get();
  }

  std::vector<WallCheck> out;
  for (auto& v : per_row)
    for (auto& w : v) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(),
            [](const WallCheck& x, const WallCheck& y) {
              if (x.xi.a != y.xi.a) return x.xi.a < y.xi.a;
              return x.xi.b < y.xi.b;
            });
  return out;
}

std::vector<WallCheck> enumerate_wall_classes(const RuledThreefold& X,
                                              const DivisorClass& c1,
                                              const CycleClass& c2,
                                              const DivisorClass& L1,
                                              const DivisorClass& L2,
                                              const Caps& caps, int threads) {
  for (const DivisorClass& L : {L1, L2})
    if (sign_of(L.a) <= 0 || sign_of(L.b) <= 0)
      throw std::invalid_argument(
          "polarizations must lie in the open positive quadrant");
  QuadraticNumber s1{Rational(L1.b, L1.a)};
  QuadraticNumber s2{Rational(L2.b, L2.a)};
  if (qn_compare(s2, s1) < 0) std::swap(s1, s2);
  return enumerate_wall_classes_window(X, c1, c2, SlopeWindow::closed(s1, s2),
                                       caps, std::make_pair(L1, L2), threads);
}

CConditionReport check_c_condition(const RuledThreefold& X,
                                   const DivisorClass& xi,
                                   const DivisorClass& c1,
                                   const CycleClass& c2,
                                   const DivisorClass& d1,
                                   const DivisorClass& d2) {
  const CycleClass z = z_class_of(X, xi, c1, c2);
  if (!(reduce_product(X, d1, d2) == z))
    throw std::invalid_argument(
        "factors do not cut the z-class of the wall");
  CConditionReport r;
  r.h2_xi = h_line_bundle(X, xi, 2);
  r.normal_twist_degree = triple_product(X, d1 + d2 + xi, d1, d2);
  r.h0_on_Z = sign_of(r.normal_twist_degree) >= 0
                  ? Int(r.normal_twist_degree + 1)
                  : Int(0);
  r.satisfied = r.h2_xi == 0 && r.h0_on_Z > 0;
  return r;
}

}  // namespace ruledwalls
