#pragma once

#include "metagrowth/dim_sequence.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace metagrowth::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  std::uint32_t d = 2;
  std::uint32_t maxN = 12;
  std::string mode = "wplus";
  std::uint32_t boundS = 5;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out;
  // verify
  std::string suite = "presentation";
  std::size_t samples = 200;
  // euler-fit
  std::size_t fitN = 2048;
  double tolerance = 0.1;
  double target = -1.0;  // negative: use d / (d + 1)
  std::string input;
  std::string seriesOut;
  // normalize
  std::string expression;
};

/// Runs one subcommand; returns the process exit code.
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Reads a two-column CSV `n,<name>` with n = 1, 2, ... consecutive.
DimSequence readSequenceCsv(std::istream& in, SequenceKind kind);

}  // namespace metagrowth::cli
