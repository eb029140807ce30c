#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace trient::cli {

// Exit codes used by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kViolations = 1;
inline constexpr int kBadInput = 2;

struct SweepAxis {
  std::string name;
  double start;
  double stop;
  int steps;
};

struct SweepFixed {
  std::string name;
  double value;
};

// Parameter grid for one state family. Axes form a cartesian product with
// the last axis varying fastest; fixed entries pin the remaining knobs.
struct SweepSpec {
  std::string family;  // "ghz" or "w"
  std::vector<SweepAxis> axes;
  std::vector<SweepFixed> fixed;
};

// Parses --param NAME=START:STOP:STEPS and --fix NAME=VALUE strings.
// Throws InvalidParams on malformed input or names foreign to the family.
SweepSpec parse_sweep_spec(const std::string& family,
                           const std::vector<std::string>& params,
                           const std::vector<std::string>& fixes);

int cmd_measure(const std::string& path, const std::string& format,
                std::ostream& out, std::ostream& err);

int cmd_sweep(const SweepSpec& spec, const std::string& out_path,
              std::ostream& err);

int cmd_verify(std::uint64_t seed, int trials, double tol,
               const std::vector<std::string>& suites,
               const std::string& out_path, std::ostream& out,
               std::ostream& err);

int cmd_classify(const std::string& path, std::ostream& out,
                 std::ostream& err);

}  // namespace trient::cli
