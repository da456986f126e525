#pragma once

// Command dispatch for the imcm-tool executable, kept in the library so
// tests can drive it without spawning processes.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace imcm::cli {

struct Request {
  std::string command;  // reduce, equal, tau, abelianize, brunnian, center, table, enumerate, relcheck
  int n = 0;
  /// Empty means the command's default (sphere-mcg for abelianize and
  /// center, disc otherwise).
  std::string flavor;
  std::string format = "text";  // text or json
  std::uint64_t seed = 1;
  /// table/enumerate: im0n, symmetric-inverse, symmetric, sphere
  std::string group = "im0n";
  /// relcheck: a presentation name; empty picks the inverse presentation
  /// matching the flavor.
  std::string presentation;
  std::vector<std::string> words;
};

/// Exit status: 0 success (or "equal"), 1 a negative verdict, 2 an error.
/// Errors print one line to err.
int run(const Request& request, std::ostream& out, std::ostream& err);

/// Full command line, argv[0] included; handles --help.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace imcm::cli
