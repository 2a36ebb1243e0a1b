#include "detcap/relay_channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace detcap {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double log2_1p(double x) { return std::log1p(x) / kLn2; }

void validate(const GaussianRelay& ch) {
  for (double h : {ch.h_sd, ch.h_sr, ch.h_rd}) {
    if (!(h >= 0.0) || !std::isfinite(h)) {
      throw std::invalid_argument("relay: channel magnitudes must be finite and nonnegative");
    }
  }
}

double db_to_magnitude(double db) { return std::pow(10.0, db / 20.0); }

}  // namespace

int det_relay_capacity(int n_sr, int n_sd, int n_rd) {
  if (n_sr < 0 || n_sd < 0 || n_rd < 0) {
    throw std::invalid_argument("det_relay_capacity: negative level count");
  }
  return n_sd + std::min(std::max(n_sr - n_sd, 0), std::max(n_rd - n_sd, 0));
}

double relay_df_rate(const GaussianRelay& ch) {
  validate(ch);
  const double sd2 = ch.h_sd * ch.h_sd;
  const double sr2 = ch.h_sr * ch.h_sr;
  const double rd2 = ch.h_rd * ch.h_rd;
  const double direct = log2_1p(sd2);
  const double forwarded = std::min(log2_1p(sr2), log2_1p(sd2 + rd2));
  return std::max(direct, forwarded);
}

RelayCutset relay_cutset_bound(const GaussianRelay& ch) {
  validate(ch);
  const double sd2 = ch.h_sd * ch.h_sd;
  const double sr2 = ch.h_sr * ch.h_sr;
  const double rd2 = ch.h_rd * ch.h_rd;

  const double broadcast_power = sd2 + sr2;  // first term at rho = 0
  const double mac_power = sd2 + rd2;        // second term at rho = 0
  const double cross = ch.h_sd * ch.h_rd;

  // Inside the logs: u(rho) = (1-rho^2) * broadcast_power falls,
  // v(rho) = mac_power + 2 rho cross rises. No crossing on [0,1] means
  // u(0) <= v(0) and the max-min sits at rho = 0. With a zero cross term
  // v is constant, so correlation cannot help and rho = 0 is optimal too.
  if (broadcast_power <= mac_power || cross == 0.0) {
    return {log2_1p(std::min(broadcast_power, mac_power)), 0.0};
  }

  auto u = [&](double rho) { return (1.0 - rho * rho) * broadcast_power; };
  auto v = [&](double rho) { return mac_power + 2.0 * rho * cross; };

  double lo = 0.0;  // u >= v here
  double hi = 1.0;  // u <= v here (u(1) = 0)
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (u(mid) > v(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // The min's value never overshoots the true crossing from either
  // bracket end, so report the better end.
  const double at_lo = std::min(u(lo), v(lo));
  const double at_hi = std::min(u(hi), v(hi));
  if (at_lo >= at_hi) return {log2_1p(at_lo), lo};
  return {log2_1p(at_hi), hi};
}

GapReport relay_gap(const GaussianRelay& ch) {
  const RelayCutset cutset = relay_cutset_bound(ch);
  const double achievable = relay_df_rate(ch);
  const double raw = cutset.bound - achievable;
  if (raw < -kGapTolerance) {
    throw std::logic_error("relay_gap: achievable rate exceeds the cut-set bound by " +
                           std::to_string(-raw) + " bits");
  }
  return {achievable, cutset.bound, std::max(raw, 0.0), cutset.rho_star};
}

std::vector<SweepPoint> relay_gap_sweep(double sd_db, double lo_db, double hi_db,
                                        double step_db) {
  if (!std::isfinite(sd_db) || !std::isfinite(lo_db) || !std::isfinite(hi_db) ||
      !std::isfinite(step_db)) {
    throw std::invalid_argument("relay_gap_sweep: grid parameters must be finite");
  }
  if (step_db <= 0.0) throw std::invalid_argument("relay_gap_sweep: step must be positive");
  if (lo_db > hi_db) throw std::invalid_argument("relay_gap_sweep: need lo <= hi");

  const std::size_t count =
      static_cast<std::size_t>(std::floor((hi_db - lo_db) / step_db + 1e-9)) + 1;
  const double h_sd = db_to_magnitude(sd_db);

  std::vector<SweepPoint> rows;
  rows.reserve(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    const double sr_db = lo_db + static_cast<double>(i) * step_db;
    for (std::size_t j = 0; j < count; ++j) {
      const double rd_db = lo_db + static_cast<double>(j) * step_db;
      const GaussianRelay ch{h_sd, db_to_magnitude(sr_db), db_to_magnitude(rd_db)};
      rows.push_back({sr_db, rd_db, relay_gap(ch).gap});
    }
  }
  return rows;
}

}  // namespace detcap
