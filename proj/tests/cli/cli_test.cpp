// Exercises the installed command-line surface through a shell: output
// formats, exit codes and error reporting. Takes the binary path as
// argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

int g_failures = 0;

#define EXPECT(cond, what)                                                      \
  do {                                                                          \
    if (!(cond)) {                                                              \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << (what)    \
                << "\n";                                                        \
      ++g_failures;                                                             \
    }                                                                           \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) {
    std::cerr << "[FAIL] popen failed for: " << command << "\n";
    ++g_failures;
    return result;
  }
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string capture_stderr(const std::string& command) {
  return run(command + " 2>&1 1>/dev/null && true").out;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::filesystem::path write_net(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  const auto p2p = write_net("detcap_cli_p2p.net", "node S\nnode D\nsource S\ndest D\nedge S D 4\n");
  const auto relay = write_net("detcap_cli_relay.net",
                               "node S\nnode R\nnode D\nsource S\ndest D\n"
                               "edge S R 3\nedge S D 1\nedge R D 2\n");
  const auto diamond = write_net("detcap_cli_diamond.net",
                                 "node S\nnode A1\nnode A2\nnode D\nsource S\ndest D\n"
                                 "edge S A1 4\nedge S A2 2\nedge A1 D 1\nedge A2 D 3\n");
  const auto bad = write_net("detcap_cli_bad.net",
                             "node S\nnode D\nsource S\ndest D\nedge S X 4\n");
  std::string big = "node S\nnode D\nsource S\ndest D\n";
  for (int i = 0; i < 23; ++i) {
    const std::string r = "R" + std::to_string(i);
    big += "node " + r + "\nedge S " + r + " 1\nedge " + r + " D 1\n";
  }
  const auto oversized = write_net("detcap_cli_big.net", big);

  {
    const auto result = run(cli + " capacity --file " + p2p.string());
    EXPECT(result.exit_code == 0, "capacity exit code");
    EXPECT(contains(result.out, "capacity: 4"), "p2p capacity value");
    EXPECT(contains(result.out, "min-cut: {S} | {D}"), "p2p min cut");
  }
  {
    const auto result = run(cli + " capacity --file " + relay.string());
    EXPECT(result.exit_code == 0, "relay capacity exit code");
    EXPECT(contains(result.out, "capacity: 2"), "relay capacity value");
    EXPECT(contains(result.out, "min-cut: {S,R} | {D}"), "relay min cut tie-break");
  }
  {
    const auto result = run(cli + " cuts --file " + relay.string());
    EXPECT(result.exit_code == 0, "cuts exit code");
    EXPECT(contains(result.out, "rank 2  {S,R} | {D}  [min]"), "cuts min row");
    EXPECT(contains(result.out, "rank 3  {S} | {R,D}"), "cuts other row");
  }
  {
    const auto result = run(cli + " cuts --file " + diamond.string());
    EXPECT(result.exit_code == 0, "diamond cuts exit code");
    EXPECT(contains(result.out, "cuts: 4"), "diamond cut count");
    EXPECT(contains(result.out, "rank 3  {S,A1} | {A2,D}  [min]"), "diamond min cut flagged");
  }
  {
    const auto result = run(cli + " capacity --file " + bad.string());
    EXPECT(result.exit_code == 2, "parse error exit code");
    const auto err = capture_stderr(cli + " capacity --file " + bad.string());
    EXPECT(contains(err, "line 5"), "parse error line number");
  }
  {
    const auto result = run(cli + " capacity --file " + oversized.string());
    EXPECT(result.exit_code == 3, "size limit exit code");
  }
  {
    const auto result = run(cli + " capacity --file /nonexistent_detcap.net");
    EXPECT(result.exit_code == 2, "missing file exit code");
  }
  {
    const auto result = run(cli + " simulate --file " + relay.string() + " --block-k 2");
    EXPECT(result.exit_code == 4, "non-layered simulate exit code");
  }
  {
    const auto result =
        run(cli + " simulate --file " + p2p.string() + " --block-k 1,2,4 --trials 3 --seed 5");
    EXPECT(result.exit_code == 0, "simulate exit code");
    EXPECT(contains(result.out, "K,trials,best_rate,mean_rate,capacity"), "simulate header");
    EXPECT(contains(result.out, "1,3,4,4,4"), "simulate p2p row K=1");
    EXPECT(contains(result.out, "4,3,4,4,4"), "simulate p2p row K=4");
  }
  {
    const auto result = run(cli + " simulate --file " + diamond.string() +
                            " --block-k 2,4,8 --trials 20 --seed 1");
    EXPECT(result.exit_code == 0, "diamond simulate exit code");
    EXPECT(contains(result.out, "2,20,3,2.55,3"), "frozen diamond K=2 row");
    EXPECT(contains(result.out, "4,20,3,2.75,3"), "frozen diamond K=4 row");
    EXPECT(contains(result.out, "8,20,3,2.875,3"), "frozen diamond K=8 row");
  }
  {
    const auto result = run(cli + " relay-gap --sd-db 0 --lo-db 10 --hi-db 10 --step-db 1");
    EXPECT(result.exit_code == 0, "degenerate sweep exit code");
    EXPECT(contains(result.out, "sr_db,rd_db,gap_bits"), "sweep header");
    EXPECT(result.out.find("10,10,") != std::string::npos, "sweep single row");
  }
  {
    const auto result = run(cli + " relay-gap --sd-db 0 --lo-db 0 --hi-db 2 --step-db 0");
    EXPECT(result.exit_code == 2, "zero step exit code");
  }
  {
    const auto result = run(cli + " region --kind mac --n1 5 --n2 2");
    EXPECT(result.exit_code == 0, "region exit code");
    EXPECT(contains(result.out, "corner,r1,r2"), "region header");
    EXPECT(contains(result.out, "0,0,2"), "region corner 0");
    EXPECT(contains(result.out, "1,3,2"), "region corner 1");
    EXPECT(contains(result.out, "2,5,0"), "region corner 2");
  }
  {
    const auto result = run(cli + " region --kind mac --n1 2 --n2 5");
    EXPECT(result.exit_code == 2, "label order exit code");
    const auto err = capture_stderr(cli + " region --kind mac --n1 2 --n2 5");
    EXPECT(contains(err, "n2 <= n1"), "label order message");
  }
  {
    const auto result = run(cli + " region --kind bc --n1 5 --n2 2 --snr1-db 15 --snr2-db 6");
    EXPECT(result.exit_code == 0, "bc region exit code");
    EXPECT(contains(result.out, "i,r1,r2"), "bc boundary header");
    EXPECT(contains(result.out, "63,"), "bc boundary last sample");
  }
  {
    const auto result = run(cli + " diamond-gap 12 8 10 6");
    EXPECT(result.exit_code == 0, "diamond-gap exit code");
    EXPECT(contains(result.out, "h_sa1_db,h_sa2_db,h_a1d_db,h_a2d_db,swapped,r_pdf,r_star,c_bar,gap_bits"),
           "diamond-gap header");
    EXPECT(contains(result.out, "12,8,10,6,0,"), "diamond-gap echoes inputs");
  }
  {
    // the tool itself asserts the constant-gap chain on every row, so a
    // clean exit over 10^4 draws is the check
    const auto result = run(cli + " diamond-gap --random 10000 --seed 7");
    EXPECT(result.exit_code == 0, "random diamond-gap exit code");
    int rows = 0;
    for (char ch : result.out) rows += ch == '\n';
    EXPECT(rows == 10001, "random diamond-gap row count");

    // CSV round-trip: parsing a printed value and reprinting it at 9
    // significant digits reproduces the text exactly
    std::size_t pos = result.out.find('\n') + 1;
    int checked = 0;
    while (pos < result.out.size() && checked < 500) {
      const std::size_t end = result.out.find('\n', pos);
      const std::string line = result.out.substr(pos, end - pos);
      std::size_t field_start = 0;
      while (field_start <= line.size()) {
        std::size_t comma = line.find(',', field_start);
        if (comma == std::string::npos) comma = line.size();
        const std::string field = line.substr(field_start, comma - field_start);
        if (field.find('.') != std::string::npos || field.find('e') != std::string::npos) {
          char buf[40];
          std::snprintf(buf, sizeof buf, "%.9g", std::strtod(field.c_str(), nullptr));
          EXPECT(field == buf, "CSV value round-trip: " + field);
          ++checked;
        }
        field_start = comma + 1;
      }
      if (end == std::string::npos) break;
      pos = end + 1;
    }
    EXPECT(checked >= 100, "round-trip coverage");
  }
  {
    const auto result = run(cli + " diamond-gap");
    EXPECT(result.exit_code == 2, "diamond-gap without input exit code");
  }
  {
    const auto result = run(cli + " nonsense");
    EXPECT(result.exit_code == 2, "unknown command exit code");
  }

  for (const auto& path : {p2p, relay, diamond, bad, oversized}) {
    std::filesystem::remove(path);
  }

  if (g_failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cerr << "cli_tests: " << g_failures << " failed checks\n";
  return 1;
}
