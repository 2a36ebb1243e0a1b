#include "detcap/network_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace detcap {

namespace {

bool valid_id(const std::string& word) {
  if (word.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(word[0]))) return false;
  for (char ch : word) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  }
  return true;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line;
  if (const auto hash = body.find('#'); hash != std::string::npos) body.erase(hash);
  std::istringstream stream(body);
  std::vector<std::string> words;
  std::string word;
  while (stream >> word) words.push_back(word);
  return words;
}

}  // namespace

DetNetwork parse_network(std::istream& in) {
  std::vector<std::string> nodes;
  std::unordered_set<std::string> declared;
  std::string source;
  std::string dest;
  std::vector<Link> links;
  std::set<std::pair<std::string, std::string>> edges_seen;

  auto require_declared = [&](const std::string& id, std::size_t line) {
    if (!declared.count(id)) throw ParseError(line, "undeclared node '" + id + "'");
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto words = tokenize(line);
    if (words.empty()) continue;
    const std::string& directive = words[0];

    if (directive == "node") {
      if (words.size() != 2) throw ParseError(lineno, "expected: node <id>");
      if (!valid_id(words[1])) throw ParseError(lineno, "invalid node id '" + words[1] + "'");
      if (!declared.insert(words[1]).second) {
        throw ParseError(lineno, "node '" + words[1] + "' declared twice");
      }
      nodes.push_back(words[1]);
    } else if (directive == "source") {
      if (words.size() != 2) throw ParseError(lineno, "expected: source <id>");
      if (!source.empty()) throw ParseError(lineno, "source declared twice");
      require_declared(words[1], lineno);
      source = words[1];
    } else if (directive == "dest") {
      if (words.size() != 2) throw ParseError(lineno, "expected: dest <id>");
      if (!dest.empty()) throw ParseError(lineno, "dest declared twice");
      require_declared(words[1], lineno);
      dest = words[1];
    } else if (directive == "edge") {
      if (words.size() != 4) throw ParseError(lineno, "expected: edge <from> <to> <n>");
      require_declared(words[1], lineno);
      require_declared(words[2], lineno);
      if (words[1] == words[2]) {
        throw ParseError(lineno, "self-loop on node '" + words[1] + "'");
      }
      int gain = 0;
      const auto [ptr, ec] =
          std::from_chars(words[3].data(), words[3].data() + words[3].size(), gain);
      if (ec != std::errc{} || ptr != words[3].data() + words[3].size() || gain < 0) {
        throw ParseError(lineno, "gain must be a nonnegative integer, got '" + words[3] + "'");
      }
      if (!edges_seen.emplace(words[1], words[2]).second) {
        throw ParseError(lineno, "duplicate edge " + words[1] + " -> " + words[2]);
      }
      links.push_back(Link{words[1], words[2], gain});
    } else {
      throw ParseError(lineno, "unknown directive '" + directive + "'");
    }
  }

  if (source.empty()) throw ParseError(0, "missing source declaration");
  if (dest.empty()) throw ParseError(0, "missing dest declaration");
  if (source == dest) throw ParseError(0, "source and dest must differ");

  return DetNetwork(std::move(nodes), source, dest, links);
}

DetNetwork parse_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open network file '" + path + "'");
  return parse_network(in);
}

}  // namespace detcap
