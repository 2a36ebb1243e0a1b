#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "detcap/network.hpp"

namespace detcap {

/// Parse failure with the 1-based line it occurred on (0 for end-of-input
/// problems such as a missing declaration).
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Network text format, one directive per line. '#' starts a comment and
/// runs to end of line; blank lines are ignored.
///
///   node <id>             declare a node (order fixes matrix block order)
///   source <id>
///   dest <id>
///   edge <from> <to> <n>  integer gain n >= 0
///
/// Ids are ASCII words of letters, digits and underscores. Re-declared
/// nodes, duplicate edges, references to undeclared nodes, self-loops and
/// malformed directives are errors.
DetNetwork parse_network(std::istream& in);

/// Reads and parses a file; IO failures throw std::runtime_error.
DetNetwork parse_network_file(const std::string& path);

}  // namespace detcap
