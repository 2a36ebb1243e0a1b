#include "detcap/diamond_network.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "detcap/relay_channel.hpp"

namespace detcap {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double log2_1p(double x) { return std::log1p(x) / kLn2; }

// Per-alpha caps of the BC hop. The weak user's cap uses the algebraic
// form (1 + b) / (1 + alpha b), which is monotone in alpha without
// cancellation.
struct BcCaps {
  double strong;  // log2(1 + alpha sa1^2)
  double weak;    // log2(1 + (1-alpha) sa2^2 / (alpha sa2^2 + 1))
};

BcCaps bc_caps(double sa1_sq, double sa2_sq, double alpha) {
  return {log2_1p(alpha * sa1_sq), log2_1p(sa2_sq) - log2_1p(alpha * sa2_sq)};
}

}  // namespace

GaussianDiamond::GaussianDiamond(double h_sa1, double h_sa2, double h_a1d, double h_a2d)
    : h_sa1_(h_sa1), h_sa2_(h_sa2), h_a1d_(h_a1d), h_a2d_(h_a2d), swapped_(false) {
  for (double h : {h_sa1, h_sa2, h_a1d, h_a2d}) {
    if (!(h >= 0.0) || !std::isfinite(h)) {
      throw std::invalid_argument("diamond: channel magnitudes must be finite and nonnegative");
    }
  }
  if (h_sa1_ < h_sa2_) {
    std::swap(h_sa1_, h_sa2_);
    std::swap(h_a1d_, h_a2d_);
    swapped_ = true;
  }
}

int det_diamond_capacity(int n_sa1, int n_sa2, int n_a1d, int n_a2d) {
  if (n_sa1 < 0 || n_sa2 < 0 || n_a1d < 0 || n_a2d < 0) {
    throw std::invalid_argument("det_diamond_capacity: negative level count");
  }
  return std::min({std::max(n_sa1, n_sa2), std::max(n_a1d, n_a2d), n_sa1 + n_a2d,
                   n_sa2 + n_a1d});
}

bool diamond_region_contains(const GaussianDiamond& ch, double alpha, RatePoint p) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("diamond_region_contains: alpha must lie in [0, 1]");
  }
  if (p.r1 < 0.0 || p.r2 < 0.0) return false;
  const BcCaps bc = bc_caps(ch.h_sa1() * ch.h_sa1(), ch.h_sa2() * ch.h_sa2(), alpha);
  const double m1 = log2_1p(ch.h_a1d() * ch.h_a1d());
  const double m2 = log2_1p(ch.h_a2d() * ch.h_a2d());
  const double m_sum = log2_1p(ch.h_a1d() * ch.h_a1d() + ch.h_a2d() * ch.h_a2d());
  return p.r1 <= bc.strong && p.r2 <= bc.weak && p.r1 <= m1 && p.r2 <= m2 &&
         p.r1 + p.r2 <= m_sum;
}

PdfRate diamond_pdf_rate(const GaussianDiamond& ch) {
  const double sa1_sq = ch.h_sa1() * ch.h_sa1();
  const double sa2_sq = ch.h_sa2() * ch.h_sa2();
  const double m1 = log2_1p(ch.h_a1d() * ch.h_a1d());
  const double m2 = log2_1p(ch.h_a2d() * ch.h_a2d());
  const double m_sum = log2_1p(ch.h_a1d() * ch.h_a1d() + ch.h_a2d() * ch.h_a2d());

  auto sum_rate = [&](double alpha) {
    const BcCaps bc = bc_caps(sa1_sq, sa2_sq, alpha);
    return std::min(std::min(bc.strong, m1) + std::min(bc.weak, m2), m_sum);
  };

  // Coarse pass. The objective rises while the strong user's BC cap is
  // unconstrained and never rises after it saturates, so it is unimodal
  // under the h_sa1 >= h_sa2 labeling and the bracket around the best
  // grid point contains the maximizer.
  constexpr int kGridSteps = 1000;
  double best_alpha = 0.0;
  double best = sum_rate(0.0);
  for (int i = 1; i <= kGridSteps; ++i) {
    const double alpha = static_cast<double>(i) / kGridSteps;
    const double value = sum_rate(alpha);
    if (value > best) {
      best = value;
      best_alpha = alpha;
    }
  }

  double lo = std::max(best_alpha - 1.0 / kGridSteps, 0.0);
  double hi = std::min(best_alpha + 1.0 / kGridSteps, 1.0);
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = sum_rate(x1);
  double f2 = sum_rate(x2);
  for (int iter = 0; iter < 200 && hi - lo > 1e-16; ++iter) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = sum_rate(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = sum_rate(x1);
    }
    const double probe = f1 > f2 ? f1 : f2;
    const double alpha = f1 > f2 ? x1 : x2;
    if (probe > best) {
      best = probe;
      best_alpha = alpha;
    }
  }
  return {best, best_alpha};
}

double diamond_rstar(const GaussianDiamond& ch) {
  const double c1 = log2_1p(ch.h_sa1() * ch.h_sa1());
  const double c2 = log2_1p(ch.h_sa2() * ch.h_sa2());
  const double m1 = log2_1p(ch.h_a1d() * ch.h_a1d());
  const double m2 = log2_1p(ch.h_a2d() * ch.h_a2d());
  const double m_sum = log2_1p(ch.h_a1d() * ch.h_a1d() + ch.h_a2d() * ch.h_a2d());
  // r2 is capped by min(c2, m2), r1 by m1, the sum by min(c1, m_sum).
  return std::min({c1, m_sum, m1 + std::min(c2, m2)});
}

double diamond_alpha_star(const GaussianDiamond& ch, double r2_star) {
  const double sa2_sq = ch.h_sa2() * ch.h_sa2();
  const double c2 = log2_1p(sa2_sq);
  if (!(r2_star >= 1.0)) {
    throw std::domain_error("diamond_alpha_star: needs r2_star >= 1");
  }
  if (r2_star > c2) {
    throw std::domain_error("diamond_alpha_star: r2_star exceeds the weak relay's cap");
  }
  const double half = std::exp2(r2_star - 1.0);
  return std::clamp((1.0 + sa2_sq - half) / (half * sa2_sq), 0.0, 1.0);
}

double diamond_cutset_bound(const GaussianDiamond& ch) {
  const double sa1_sq = ch.h_sa1() * ch.h_sa1();
  const double sa2_sq = ch.h_sa2() * ch.h_sa2();
  const double a1d_sq = ch.h_a1d() * ch.h_a1d();
  const double a2d_sq = ch.h_a2d() * ch.h_a2d();
  const double coherent = (ch.h_a1d() + ch.h_a2d()) * (ch.h_a1d() + ch.h_a2d());
  return std::min({log2_1p(sa1_sq + sa2_sq), log2_1p(coherent),
                   log2_1p(sa1_sq) + log2_1p(a2d_sq), log2_1p(sa2_sq) + log2_1p(a1d_sq)});
}

DiamondGapReport diamond_gap(const GaussianDiamond& ch) {
  const PdfRate pdf = diamond_pdf_rate(ch);
  const double r_star = diamond_rstar(ch);
  const double bound = diamond_cutset_bound(ch);
  const double raw = bound - pdf.rate;
  if (raw < -kGapTolerance) {
    throw std::logic_error("diamond_gap: achievable rate exceeds the cut-set bound by " +
                           std::to_string(-raw) + " bits");
  }
  return {pdf.rate, r_star, bound, std::max(raw, 0.0), pdf.alpha_star, ch.relays_swapped()};
}

}  // namespace detcap
