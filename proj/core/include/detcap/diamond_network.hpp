#pragma once

#include "detcap/channels.hpp"

namespace detcap {

/// Gaussian diamond network: source -> two relays -> destination, gains
/// as magnitudes. Relays are relabeled at construction so that
/// h_sa1() >= h_sa2(); relays_swapped() records whether that happened so
/// callers can map results back to their own labels.
class GaussianDiamond {
public:
  GaussianDiamond(double h_sa1, double h_sa2, double h_a1d, double h_a2d);

  double h_sa1() const { return h_sa1_; }
  double h_sa2() const { return h_sa2_; }
  double h_a1d() const { return h_a1d_; }
  double h_a2d() const { return h_a2d_; }
  bool relays_swapped() const { return swapped_; }

private:
  double h_sa1_, h_sa2_, h_a1d_, h_a2d_;
  bool swapped_;
};

/// Level-model diamond capacity:
/// min{ max(n_sa1, n_sa2), max(n_a1d, n_a2d), n_sa1 + n_a2d, n_sa2 + n_a1d }.
/// Matches min_cut_capacity of the corresponding 4-node network.
int det_diamond_capacity(int n_sa1, int n_sa2, int n_a1d, int n_a2d);

/// Intersection of the source->relays BC region at power split alpha with
/// the relays->destination MAC region:
///   r1 <= log2(1 + alpha sa1^2)
///   r2 <= log2(1 + (1-alpha) sa2^2 / (alpha sa2^2 + 1))
///   r_i <= log2(1 + a_id^2)
///   r1 + r2 <= log2(1 + a1d^2 + a2d^2)
bool diamond_region_contains(const GaussianDiamond& ch, double alpha, RatePoint p);

struct PdfRate {
  double rate = 0.0;        // bits/symbol
  double alpha_star = 0.0;  // maximizing BC power split
};

/// Best sum rate of the partial-decode-forward region over the power
/// split: for fixed alpha the maximum sum has the closed form
/// min(min(B1, M1) + min(B2, M2), Msum); the outer maximization runs a
/// 1e-3 grid pass and golden-section refinement, accurate to about 1e-9
/// bits at moderate gains.
PdfRate diamond_pdf_rate(const GaussianDiamond& ch);

/// Max sum rate of the relaxed region (weak-relay cap plus a BC sum cap
/// in place of the power split): min over the binding constraint
/// combinations, exact.
double diamond_rstar(const GaussianDiamond& ch);

/// The power split at which the weak user's BC rate equals r2_star - 1:
/// alpha* = (1 + sa2^2 - 2^(r2_star - 1)) / (2^(r2_star - 1) sa2^2).
/// Requires 1 <= r2_star <= log2(1 + sa2^2).
double diamond_alpha_star(const GaussianDiamond& ch, double r2_star);

/// Upper bound on the cut-set bound:
/// min{ log2(1 + sa1^2 + sa2^2), log2(1 + (a1d + a2d)^2),
///      log2(1 + sa1^2) + log2(1 + a2d^2), log2(1 + sa2^2) + log2(1 + a1d^2) }.
double diamond_cutset_bound(const GaussianDiamond& ch);

struct DiamondGapReport {
  double pdf_rate = 0.0;
  double r_star = 0.0;
  double cutset_bound = 0.0;
  double gap = 0.0;  // cutset_bound - pdf_rate
  double alpha_star = 0.0;
  bool relays_swapped = false;
};

/// Gap of partial decode-forward to the cut-set bound, with the
/// intermediate quantities exposed so that the chain
/// 0 <= R* - R_pdf <= 1 and R* >= bound - 1 can be asserted directly.
/// The gap is within [0, 2 + kGapTolerance]; negatives inside tolerance
/// are clamped to 0, below that throws std::logic_error.
DiamondGapReport diamond_gap(const GaussianDiamond& ch);

}  // namespace detcap
