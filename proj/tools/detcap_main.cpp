// Command-line front end: capacity and cut reports for level-model
// networks, constant-gap sweeps for the Gaussian relay and diamond case
// studies, capacity-region tables, and the random-coding simulator.
//
// Exit codes: 0 success, 1 internal contract violation, 2 usage or parse
// error, 3 network size limit, 4 topology restriction.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "detcap/channels.hpp"
#include "detcap/coding_sim.hpp"
#include "detcap/diamond_network.hpp"
#include "detcap/network.hpp"
#include "detcap/network_format.hpp"
#include "detcap/relay_channel.hpp"
#include "detcap/rng.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeLimit = 3;
constexpr int kExitTopology = 4;

std::string g9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

std::string node_set(const detcap::DetNetwork& net, const std::vector<std::size_t>& nodes) {
  std::string out = "{";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) out += ",";
    out += net.node_name(nodes[i]);
  }
  out += "}";
  return out;
}

std::string cut_string(const detcap::DetNetwork& net, const detcap::Cut& cut) {
  return node_set(net, cut.omega) + " | " + node_set(net, cut.omega_c);
}

double db_to_magnitude(double db) { return std::pow(10.0, db / 20.0); }

int run_capacity(const std::string& file) {
  const detcap::DetNetwork net = detcap::parse_network_file(file);
  const detcap::MinCutResult result = detcap::min_cut_capacity(net);
  std::cout << "capacity: " << result.capacity << "\n";
  std::cout << "q: " << net.levels() << "\n";
  std::cout << "min-cut: " << cut_string(net, result.min_cut) << "\n";
  return kExitOk;
}

int run_cuts(const std::string& file) {
  const detcap::DetNetwork net = detcap::parse_network_file(file);
  std::vector<detcap::Cut> cuts = detcap::enumerate_cuts(net);
  std::sort(cuts.begin(), cuts.end(), [](const detcap::Cut& a, const detcap::Cut& b) {
    return a.value != b.value ? a.value < b.value : a.mask < b.mask;
  });
  const std::size_t min_value = cuts.front().value;
  std::cout << "q: " << net.levels() << "\n";
  std::cout << "cuts: " << cuts.size() << "\n";
  for (const detcap::Cut& cut : cuts) {
    std::cout << "rank " << cut.value << "  " << cut_string(net, cut)
              << (cut.value == min_value ? "  [min]" : "") << "\n";
  }
  return kExitOk;
}

int run_relay_gap(double sd_db, double lo_db, double hi_db, double step_db) {
  const auto rows = detcap::relay_gap_sweep(sd_db, lo_db, hi_db, step_db);
  std::cout << "sr_db,rd_db,gap_bits\n";
  double max_gap = 0.0;
  double total = 0.0;
  for (const auto& row : rows) {
    std::cout << g9(row.sr_db) << "," << g9(row.rd_db) << "," << g9(row.gap) << "\n";
    max_gap = std::max(max_gap, row.gap);
    total += row.gap;
  }
  std::cerr << "summary: max_gap_bits=" << g9(max_gap)
            << " mean_gap_bits=" << g9(total / static_cast<double>(rows.size())) << "\n";
  return kExitOk;
}

int diamond_row(double sa1_db, double sa2_db, double a1d_db, double a2d_db) {
  const detcap::GaussianDiamond ch(db_to_magnitude(sa1_db), db_to_magnitude(sa2_db),
                                   db_to_magnitude(a1d_db), db_to_magnitude(a2d_db));
  const detcap::DiamondGapReport report = detcap::diamond_gap(ch);
  const double tol = detcap::kGapTolerance;
  const double sandwich = report.r_star - report.pdf_rate;
  if (report.gap > 2.0 + tol || sandwich < -tol || sandwich > 1.0 + tol ||
      report.r_star < report.cutset_bound - 1.0 - tol) {
    std::cerr << "internal error: constant-gap chain violated at (" << g9(sa1_db) << ", "
              << g9(sa2_db) << ", " << g9(a1d_db) << ", " << g9(a2d_db) << ") dB: r_pdf="
              << g9(report.pdf_rate) << " r_star=" << g9(report.r_star)
              << " c_bar=" << g9(report.cutset_bound) << "\n";
    return kExitInternal;
  }
  std::cout << g9(sa1_db) << "," << g9(sa2_db) << "," << g9(a1d_db) << "," << g9(a2d_db) << ","
            << (report.relays_swapped ? 1 : 0) << "," << g9(report.pdf_rate) << ","
            << g9(report.r_star) << "," << g9(report.cutset_bound) << "," << g9(report.gap)
            << "\n";
  return kExitOk;
}

int run_diamond_gap(const std::vector<double>& gains_db, unsigned random_count,
                    std::uint64_t seed, double lo_db, double hi_db) {
  if (!gains_db.empty() && random_count > 0) {
    throw CLI::ValidationError("diamond-gap", "give either four gains or --random, not both");
  }
  if (gains_db.empty() && random_count == 0) {
    throw CLI::ValidationError("diamond-gap", "need four dB gains or --random <count>");
  }
  if (lo_db > hi_db) {
    throw CLI::ValidationError("diamond-gap", "need --lo-db <= --hi-db");
  }
  std::cout << "h_sa1_db,h_sa2_db,h_a1d_db,h_a2d_db,swapped,r_pdf,r_star,c_bar,gap_bits\n";
  if (!gains_db.empty()) {
    return diamond_row(gains_db[0], gains_db[1], gains_db[2], gains_db[3]);
  }
  detcap::SplitMix64 rng(seed);
  for (unsigned i = 0; i < random_count; ++i) {
    const double sa1 = rng.next_in(lo_db, hi_db);
    const double sa2 = rng.next_in(lo_db, hi_db);
    const double a1d = rng.next_in(lo_db, hi_db);
    const double a2d = rng.next_in(lo_db, hi_db);
    if (const int rc = diamond_row(sa1, sa2, a1d, a2d); rc != kExitOk) return rc;
  }
  return kExitOk;
}

int run_region(const std::string& kind, int n1, int n2, bool have_levels, double snr1_db,
               double snr2_db, bool have_snrs) {
  if (!have_levels && !have_snrs) {
    throw CLI::ValidationError("region", "need --n1/--n2 and/or --snr1-db/--snr2-db");
  }
  if (have_levels) {
    if (n1 < 0 || n2 < 0) throw CLI::ValidationError("region", "level counts must be >= 0");
    if (n2 > n1) {
      throw CLI::ValidationError("region", "order labels so that n2 <= n1 (user 1 is stronger)");
    }
    std::cout << "# deterministic " << kind << " region: n1=" << n1 << " n2=" << n2 << "\n";
    std::cout << "corner,r1,r2\n";
    // vertices of r2 <= n2, r1 + r2 <= n1 in the nonnegative quadrant
    std::vector<std::pair<int, int>> corners;
    corners.emplace_back(0, n2);
    if (n1 - n2 > 0) corners.emplace_back(n1 - n2, n2);
    if (n2 > 0) corners.emplace_back(n1, 0);
    for (std::size_t i = 0; i < corners.size(); ++i) {
      std::cout << i << "," << corners[i].first << "," << corners[i].second << "\n";
    }
  }
  if (have_snrs) {
    const detcap::SnrDb snr1(snr1_db);
    const detcap::SnrDb snr2(snr2_db);
    if (snr2.linear() > snr1.linear()) {
      throw CLI::ValidationError("region",
                                 "order labels so that snr2 <= snr1 (user 1 is stronger)");
    }
    std::cout << "# gaussian " << kind << " boundary: snr1_db=" << g9(snr1_db)
              << " snr2_db=" << g9(snr2_db) << "\n";
    std::cout << "i,r1,r2\n";
    constexpr int kSamples = 64;
    for (int i = 0; i < kSamples; ++i) {
      const double t = static_cast<double>(i) / (kSamples - 1);
      double r1 = 0.0;
      double r2 = 0.0;
      if (kind == "mac") {
        const double c1 = detcap::awgn_capacity(snr1);
        const double c2 = detcap::awgn_capacity(snr2);
        const double c_sum =
            detcap::awgn_capacity(detcap::SnrDb::from_linear(snr1.linear() + snr2.linear()));
        r2 = c2 * (1.0 - t);
        r1 = std::min(c1, c_sum - r2);
      } else {  // bc: power-split boundary
        const double alpha = t;
        r1 = std::log2(1.0 + alpha * snr1.linear());
        r2 = std::log2(1.0 + (1.0 - alpha) * snr2.linear() / (alpha * snr2.linear() + 1.0));
      }
      std::cout << i << "," << g9(r1) << "," << g9(r2) << "\n";
    }
  }
  return kExitOk;
}

int run_simulate(const std::string& file, const std::vector<std::size_t>& block_lengths,
                 std::size_t trials, std::uint64_t seed) {
  const detcap::DetNetwork net = detcap::parse_network_file(file);
  const detcap::LayeredSchedule sched = detcap::validate_layered(net);
  const detcap::MinCutResult min_cut = detcap::min_cut_capacity(net);
  std::cout << "K,trials,best_rate,mean_rate,capacity\n";
  for (std::size_t k : block_lengths) {
    const detcap::RateEstimate est = detcap::estimate_rate(net, sched, k, trials, seed);
    std::cout << k << "," << trials << "," << g9(est.best_rate) << "," << g9(est.mean_rate)
              << "," << min_cut.capacity << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact capacity analysis for level-model wireless relay networks"};
  app.require_subcommand(1);

  std::string file;
  double sd_db = 0.0;
  double lo_db = -20.0;
  double hi_db = 60.0;
  double step_db = 1.0;
  std::vector<double> gains_db;
  unsigned random_count = 0;
  std::uint64_t seed = 1;
  std::string kind;
  int n1 = 0;
  int n2 = 0;
  double snr1_db = 0.0;
  double snr2_db = 0.0;
  std::vector<std::size_t> block_lengths;
  std::size_t trials = 20;

  auto* capacity = app.add_subcommand("capacity", "Min-cut capacity of a network file");
  capacity->add_option("--file", file, "network file")->required();

  auto* cuts = app.add_subcommand("cuts", "Every cut of a network file with its rank");
  cuts->add_option("--file", file, "network file")->required();

  auto* relay = app.add_subcommand(
      "relay-gap", "CSV sweep of the relay decode-forward gap to the cut-set bound");
  relay->add_option("--sd-db", sd_db, "direct-link gain in dB")->capture_default_str();
  relay->add_option("--lo-db", lo_db, "sweep start in dB")->capture_default_str();
  relay->add_option("--hi-db", hi_db, "sweep end in dB")->capture_default_str();
  relay->add_option("--step-db", step_db, "sweep step in dB")->capture_default_str();

  auto* diamond = app.add_subcommand(
      "diamond-gap", "Partial-decode-forward gap to the cut-set bound for diamond networks");
  diamond->add_option("gains", gains_db, "four gains in dB: sa1 sa2 a1d a2d")->expected(0, 4);
  diamond->add_option("--random", random_count, "number of random instances");
  diamond->add_option("--seed", seed, "random draw seed")->capture_default_str();
  diamond->add_option("--lo-db", lo_db, "random draw lower bound in dB")->capture_default_str();
  diamond->add_option("--hi-db", hi_db, "random draw upper bound in dB")->capture_default_str();

  auto* region = app.add_subcommand("region", "Capacity-region corner points and boundaries");
  region->add_option("--kind", kind, "mac or bc")
      ->required()
      ->check(CLI::IsMember({"mac", "bc"}));
  auto* n1_opt = region->add_option("--n1", n1, "strong user level count");
  auto* n2_opt = region->add_option("--n2", n2, "weak user level count");
  auto* s1_opt = region->add_option("--snr1-db", snr1_db, "strong user SNR in dB");
  auto* s2_opt = region->add_option("--snr2-db", snr2_db, "weak user SNR in dB");
  n1_opt->needs(n2_opt);
  n2_opt->needs(n1_opt);
  s1_opt->needs(s2_opt);
  s2_opt->needs(s1_opt);

  auto* simulate =
      app.add_subcommand("simulate", "Random-coding rate estimates on a layered network");
  simulate->add_option("--file", file, "network file")->required();
  simulate->add_option("--block-k", block_lengths, "block lengths, comma separated")
      ->required()
      ->delimiter(',');
  simulate->add_option("--trials", trials, "seeds per block length")->capture_default_str();
  simulate->add_option("--seed", seed, "first trial seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(capacity)) return run_capacity(file);
    if (app.got_subcommand(cuts)) return run_cuts(file);
    if (app.got_subcommand(relay)) return run_relay_gap(sd_db, lo_db, hi_db, step_db);
    if (app.got_subcommand(diamond)) {
      if (!gains_db.empty() && gains_db.size() != 4) {
        std::cerr << "error: diamond-gap needs exactly four dB gains\n";
        return kExitUsage;
      }
      return run_diamond_gap(gains_db, random_count, seed, lo_db, hi_db);
    }
    if (app.got_subcommand(region)) {
      return run_region(kind, n1, n2, n1_opt->count() > 0, snr1_db, snr2_db,
                        s1_opt->count() > 0);
    }
    if (app.got_subcommand(simulate)) return run_simulate(file, block_lengths, trials, seed);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const detcap::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const detcap::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const detcap::TopologyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTopology;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
