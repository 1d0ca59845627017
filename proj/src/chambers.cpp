#include "ruledwalls/chambers.hpp"

#include <algorithm>
#include <utility>

namespace ruledwalls {

bool ChamberRay::is_wall() const {
  return std::any_of(walls.begin(), walls.end(),
                     [](const WallCheck& w) { return w.is_wall; });
}

ChamberDecomposition build_decomposition(const std::vector<WallCheck>& checks) {
  std::vector<std::pair<QuadraticNumber, const WallCheck*>> cut;
  for (const auto& c : checks)
    for (const auto& r : c.rays)
      if (r.sign() > 0) cut.emplace_back(r, &c);
  // Stable: checks sharing an exact slope stay in input order when merged.
  std::stable_sort(cut.begin(), cut.end(), [](const auto& x, const auto& y) {
    return qn_compare(x.first, y.first) < 0;
  });
  ChamberDecomposition dec;
  for (const auto& [slope, check] : cut) {
    if (!dec.rays.empty() && qn_compare(dec.rays.back().slope, slope) == 0)
      dec.rays.back().walls.push_back(*check);
    else
      dec.rays.push_back(ChamberRay{slope, {*check}});
  }
  return dec;
}

Location locate(const ChamberDecomposition& dec, const DivisorClass& L) {
  if (sign_of(L.a) <= 0 || sign_of(L.b) <= 0)
    throw std::invalid_argument(
        "polarization must lie in the open positive quadrant");
  const QuadraticNumber s{Rational(L.b, L.a)};
  std::size_t below = 0;
  for (std::size_t i = 0; i < dec.rays.size(); ++i) {
    const int c = qn_compare(s, dec.rays[i].slope);
    if (c == 0) return Location{true, i};
    if (c < 0) break;
    below = i + 1;
  }
  return Location{false, below};
}

std::optional<DivisorClass> integer_polarization_in(
    const ChamberDecomposition& dec, std::size_t sector,
    const Int& alpha_max) {
  if (sector > dec.rays.size())
    throw std::invalid_argument("sector index out of range");
  const QuadraticNumber* lo =
      sector > 0 ? &dec.rays[sector - 1].slope : nullptr;
  const QuadraticNumber* hi =
      sector < dec.rays.size() ? &dec.rays[sector].slope : nullptr;
  for (Int alpha = 1; alpha <= alpha_max; alpha += 1) {
    Int beta(2);  // floor of the ampleness certificate
    if (lo) {
      // Least integer strictly above alpha * lo.
      const Int first =
          Int((QuadraticNumber(Rational(alpha)) * *lo).floor_int() + 1);
      if (first > beta) beta = first;
    }
    if (!hi || qn_compare(QuadraticNumber(Rational(beta, alpha)), *hi) < 0)
      return DivisorClass{alpha, beta};
    // Larger beta only moves further toward the upper ray: next alpha.
  }
  return std::nullopt;
}

}  // namespace ruledwalls
