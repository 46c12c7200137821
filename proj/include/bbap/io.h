// Instance and solution files.
//
// Both are JSON documents. Instance files carry format_version, t_max,
// belts, flights, a profit source (formula parameters or an explicit table
// of [belt, flight, start, duration, profit] rows) and durations (either the
// generator rule or explicit per-pair sets). Unknown keys are rejected.
// Flight ids in a file are labels; on load flights are sorted by requested
// start time and renumbered, and files written by this library always use
// the sorted numbering.

#ifndef BBAP_IO_H_
#define BBAP_IO_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bbap/instance.h"

namespace bbap {

inline constexpr int kInstanceFormatVersion = 1;
inline constexpr int kSolutionFormatVersion = 1;
// Durations derived from bags and productivity: nominal ceil(bags / rate),
// five values two minutes apart.
inline constexpr std::string_view kDurationRuleName = "nominal-5x2";

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws FormatError on malformed text.
InstanceData ParseInstanceData(std::string_view text);
// Parses and validates (throws FormatError or InvalidInstanceError).
Instance ParseInstance(std::string_view text);
std::string SerializeInstance(const Instance& inst);

// "fnv1a64:" + 16 hex digits of the serialized instance.
std::string InstanceDigest(const Instance& inst);

struct SolverMetadata {
  double ub = 0.0;
  double gap_percent = 0.0;
  std::int64_t nodes = 0;
  double elapsed_seconds = 0.0;
  bool proven_optimal = false;
};

struct SolutionFile {
  std::string instance_digest;
  Solution solution;
  std::optional<SolverMetadata> solver;
};

SolutionFile ParseSolutionFile(std::string_view text);
std::string SerializeSolutionFile(const SolutionFile& file);

std::string ReadFile(const std::string& path);  // throws IoError
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace bbap

#endif  // BBAP_IO_H_
