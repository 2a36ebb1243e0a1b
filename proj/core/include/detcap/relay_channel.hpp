#pragma once

#include <vector>

namespace detcap {

/// Numerical tolerance for the constant-gap assertions, in bits.
inline constexpr double kGapTolerance = 1e-9;

/// Gaussian relay channel gains as magnitudes; all formulas square them.
struct GaussianRelay {
  double h_sd = 0.0;
  double h_sr = 0.0;
  double h_rd = 0.0;
};

/// Level-model relay capacity: n_sd + min((n_sr - n_sd)+, (n_rd - n_sd)+).
/// Matches min_cut_capacity of the corresponding 3-node network.
int det_relay_capacity(int n_sr, int n_sd, int n_rd);

/// Best of direct transmission and block-Markov decode-forward:
/// max{ log2(1 + sd^2), min(log2(1 + sr^2), log2(1 + sd^2 + rd^2)) }.
double relay_df_rate(const GaussianRelay& ch);

struct RelayCutset {
  double bound = 0.0;     // bits/symbol
  double rho_star = 0.0;  // maximizing input correlation in [0, 1]
};

/// Cut-set bound max over |rho| <= 1 of
///   min{ log2(1 + (1-rho^2)(sd^2 + sr^2)),
///        log2(1 + sd^2 + rd^2 + 2 rho sd rd) }.
/// The first term falls and the second rises on [0, 1] (negative rho is
/// dominated), so the optimum is the crossing point, found by bisection
/// to 1e-9 in rho; without a crossing the optimum sits at rho = 0.
RelayCutset relay_cutset_bound(const GaussianRelay& ch);

struct GapReport {
  double achievable = 0.0;
  double upper_bound = 0.0;
  double gap = 0.0;       // upper_bound - achievable
  double rho_star = 0.0;
};

/// Decode-forward vs cut-set gap; always within [0, 1 + kGapTolerance].
/// Negative values inside tolerance are clamped to 0; anything below
/// -kGapTolerance throws std::logic_error.
GapReport relay_gap(const GaussianRelay& ch);

struct SweepPoint {
  double sr_db = 0.0;
  double rd_db = 0.0;
  double gap = 0.0;
};

/// Gap over a dB grid of source-relay and relay-destination gains at a
/// fixed direct-link gain. Rows are in row-major order: sr outer, rd
/// inner, both ascending.
std::vector<SweepPoint> relay_gap_sweep(double sd_db, double lo_db, double hi_db, double step_db);

}  // namespace detcap
