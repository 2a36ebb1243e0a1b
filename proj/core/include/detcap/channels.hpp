#pragma once

#include <functional>

namespace detcap {

/// Signal-to-noise ratio. Constructible from decibels or a linear power
/// ratio; both representations are stored so that exact linear inputs
/// stay exact. All rates in this library are bits per complex symbol and
/// all logs are base 2.
class SnrDb {
public:
  explicit SnrDb(double db);
  static SnrDb from_linear(double snr);

  double db() const { return db_; }
  double linear() const { return linear_; }

private:
  SnrDb(double db, double linear) : db_(db), linear_(linear) {}
  double db_;
  double linear_;
};

struct RatePoint {
  double r1 = 0.0;
  double r2 = 0.0;
};

/// Number of signal levels above noise: max(0, ceil(log2 SNR)).
int det_level_count(SnrDb snr);

/// log2(1 + SNR).
double awgn_capacity(SnrDb snr);

/// Two-user level-model MAC region, labels ordered so n2 <= n1:
/// r2 <= n2 and r1 + r2 <= n1.
bool det_mac_region_contains(int n1, int n2, RatePoint p);

/// Gaussian MAC region: r_i <= log2(1 + SNR_i), r1 + r2 <= log2(1 + SNR1 + SNR2).
bool gauss_mac_region_contains(SnrDb snr1, SnrDb snr2, RatePoint p);

/// Two-user level-model BC region (weak user on the top n2 levels),
/// labels ordered so n2 <= n1: r2 <= n2 and r1 + r2 <= n1.
bool det_bc_region_contains(int n1, int n2, RatePoint p);

/// Degraded Gaussian BC power-split region, SNR2 <= SNR1: some split
/// a in [0,1] gives r1 <= log2(1 + a SNR1) and
/// r2 <= log2(1 + (1-a) SNR2 / (a SNR2 + 1)). Decided through the exact
/// critical split for the weak user, no iteration.
bool gauss_bc_region_contains(SnrDb snr1, SnrDb snr2, RatePoint p);

/// The canonical one-bit witness: whether ((r1-1)+, (r2-1)+) belongs to
/// the given Gaussian region.
bool within_one_bit_check(RatePoint det_point,
                          const std::function<bool(RatePoint)>& gaussian_region_contains);

}  // namespace detcap
