#include "ruledwalls/chow.hpp"

namespace ruledwalls {

RuledThreefold RuledThreefold::from_chern(const Int& c1p, const Int& c2p) {
  if (c1p < 0) throw std::invalid_argument("RuledThreefold: c1' must be >= 0");
  if (c2p < 0 || c2p > c1p * c1p)
    throw std::invalid_argument("RuledThreefold: need 0 <= c2' <= c1'^2");
  return RuledThreefold{c1p, c2p, std::nullopt};
}

RuledThreefold RuledThreefold::split_bundle(const Int& e1, const Int& e2) {
  Int hi = e1 >= e2 ? e1 : e2, lo = e1 >= e2 ? e2 : e1;
  RuledThreefold X = from_chern(hi + lo, hi * lo);
  X.split = std::make_pair(hi, lo);
  return X;
}

static std::string linear_str(const Int& a, const Int& b, const char* ua,
                              const char* ub) {
  // renders a*ua + b*ub with unit coefficients elided, e.g. "-S + 2H"
  std::string s;
  auto term = [&](const Int& c, const char* u) {
    if (c == 0) return;
    if (s.empty()) {
      if (c == -1)
        s += "-";
      else if (c != 1)
        s += c.get_str();
    } else {
      s += c < 0 ? " - " : " + ";
      Int ab = abs(c);
      if (ab != 1) s += ab.get_str();
    }
    s += u;
  };
  term(a, ua);
  term(b, ub);
  return s.empty() ? "0" : s;
}

std::string DivisorClass::str() const { return linear_str(a, b, "S", "H"); }
std::string CycleClass::str() const { return linear_str(z1, z2, "SH", "H^2"); }

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  return DivisorClass{x.a + y.a, x.b + y.b};
}
DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
  return DivisorClass{x.a - y.a, x.b - y.b};
}
DivisorClass operator-(const DivisorClass& x) {
  return DivisorClass{-x.a, -x.b};
}
DivisorClass operator*(const Int& k, const DivisorClass& x) {
  return DivisorClass{k * x.a, k * x.b};
}
CycleClass operator+(const CycleClass& x, const CycleClass& y) {
  return CycleClass{x.z1 + y.z1, x.z2 + y.z2};
}
CycleClass operator-(const CycleClass& x, const CycleClass& y) {
  return CycleClass{x.z1 - y.z1, x.z2 - y.z2};
}
CycleClass operator*(const Int& k, const CycleClass& x) {
  return CycleClass{k * x.z1, k * x.z2};
}

CycleClass reduce_product(const RuledThreefold& X, const DivisorClass& d1,
                          const DivisorClass& d2) {
  // (a1 S + b1 H)(a2 S + b2 H) with S^2 = c1' SH - c2' H^2
  return CycleClass{d1.a * d2.a * X.c1p + d1.a * d2.b + d2.a * d1.b,
                    d1.b * d2.b - d1.a * d2.a * X.c2p};
}

CycleClass reduce_product(const RuledThreefold& X,
                          const std::vector<DivisorClass>& factors) {
  if (factors.size() != 2)
    throw std::invalid_argument("reduce_product: exactly two factors");
  return reduce_product(X, factors[0], factors[1]);
}

Int cycle_dot(const RuledThreefold& X, const CycleClass& z,
              const DivisorClass& d) {
  return z.z1 * (X.c1p * d.a + d.b) + z.z2 * d.a;
}

Int triple_product(const RuledThreefold& X, const DivisorClass& d1,
                   const DivisorClass& d2, const DivisorClass& d3) {
  return cycle_dot(X, reduce_product(X, d1, d2), d3);
}

DivisorClass canonical_divisor(const RuledThreefold& X) {
  return DivisorClass{-2, X.c1p - 3};
}

bool certified_ample(const RuledThreefold&, const DivisorClass& d) {
  return d.a >= 1 && d.b >= 2;
}

bool cycle_pseudo_effective(const RuledThreefold& X, const CycleClass& z) {
  return z.z1 >= 0 && X.c1p * z.z1 + z.z2 >= 0;
}

}  // namespace ruledwalls
