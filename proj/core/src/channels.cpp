#include "detcap/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace detcap {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double log2_1p(double x) { return std::log1p(x) / kLn2; }

bool nonneg(RatePoint p) { return p.r1 >= 0.0 && p.r2 >= 0.0; }

}  // namespace

SnrDb::SnrDb(double db) : db_(db), linear_(std::pow(10.0, db / 10.0)) {
  if (!std::isfinite(db)) throw std::invalid_argument("SnrDb: dB value must be finite");
}

SnrDb SnrDb::from_linear(double snr) {
  if (!(snr > 0.0) || !std::isfinite(snr)) {
    throw std::invalid_argument("SnrDb: linear SNR must be positive and finite");
  }
  return SnrDb(10.0 * std::log10(snr), snr);
}

int det_level_count(SnrDb snr) {
  const double levels = std::ceil(std::log2(snr.linear()));
  return levels <= 0.0 ? 0 : static_cast<int>(levels);
}

double awgn_capacity(SnrDb snr) { return log2_1p(snr.linear()); }

bool det_mac_region_contains(int n1, int n2, RatePoint p) {
  if (n2 > n1) {
    throw std::domain_error("det_mac_region_contains: order labels so that n2 <= n1");
  }
  if (n2 < 0) throw std::invalid_argument("det_mac_region_contains: negative level count");
  if (!nonneg(p)) return false;
  return p.r2 <= static_cast<double>(n2) && p.r1 + p.r2 <= static_cast<double>(n1);
}

bool gauss_mac_region_contains(SnrDb snr1, SnrDb snr2, RatePoint p) {
  if (!nonneg(p)) return false;
  return p.r1 <= log2_1p(snr1.linear()) && p.r2 <= log2_1p(snr2.linear()) &&
         p.r1 + p.r2 <= log2_1p(snr1.linear() + snr2.linear());
}

bool det_bc_region_contains(int n1, int n2, RatePoint p) {
  if (n2 > n1) {
    throw std::domain_error("det_bc_region_contains: order labels so that n2 <= n1");
  }
  if (n2 < 0) throw std::invalid_argument("det_bc_region_contains: negative level count");
  if (!nonneg(p)) return false;
  return p.r2 <= static_cast<double>(n2) && p.r1 + p.r2 <= static_cast<double>(n1);
}

bool gauss_bc_region_contains(SnrDb snr1, SnrDb snr2, RatePoint p) {
  const double s1 = snr1.linear();
  const double s2 = snr2.linear();
  if (s2 > s1) {
    throw std::domain_error("gauss_bc_region_contains: order labels so that SNR2 <= SNR1");
  }
  if (!nonneg(p)) return false;
  if (p.r2 > log2_1p(s2)) return false;

  // Largest split the weak user tolerates: solve
  // (1 - a) s2 / (a s2 + 1) = 2^r2 - 1 for a, then give the rest to the
  // strong user. The weak-user bound is decreasing in a, so this split is
  // optimal for r1.
  const double t = std::exp2(p.r2) - 1.0;
  const double alpha = std::clamp((s2 - t) / (s2 * (1.0 + t)), 0.0, 1.0);
  return p.r1 <= log2_1p(alpha * s1);
}

bool within_one_bit_check(RatePoint det_point,
                          const std::function<bool(RatePoint)>& gaussian_region_contains) {
  const RatePoint witness{std::max(det_point.r1 - 1.0, 0.0), std::max(det_point.r2 - 1.0, 0.0)};
  return gaussian_region_contains(witness);
}

}  // namespace detcap
