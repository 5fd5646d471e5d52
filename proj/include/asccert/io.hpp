#pragma once

// JSON documents, LP export and DOT export for the counterexample.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "asccert/certify.hpp"
#include "asccert/construction.hpp"

namespace asccert {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "0.1.0";

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

Json instance_to_json(const Instance& inst);
/// Rebuilds an Instance from its document. Path node sequences are recovered
/// from the links. Throws FormatError on malformed or inconsistent input.
Instance instance_from_json(const Json& doc);

Json trace_to_json(const ReductionTrace& trace);

struct RunInfo {
  std::string strategy;
  double seconds = 0.0;
  std::size_t probe_trials = 0;
  std::uint64_t probe_seed = 0;
  bool probe_ran = false;
  bool probe_ok = true;
  std::size_t probe_found = 0;
  bool strategies_agree = true;
};

Json certificate_to_json(const Certificate& cert, const ReductionResult* reduction,
                         const RunInfo& info);

enum class DotKind { CapGraph, Links };
std::string to_dot(const Instance& inst, DotKind kind);

/// lp_solve-format text of the cover LP with unit costs. Constraints follow
/// the basis-row order Q_1..Q_{k-1}, N_1..N_{n-1}.
std::string to_lp(const Instance& inst);

struct LpConstraint {
  std::string name;
  std::vector<int> vars;  // variable indices, coefficient 1 each
  std::string sense;
  long long rhs = 0;
};

struct LpBound {
  int var = 0;
  long long lo = 0;
  long long hi = 0;
};

struct LpModel {
  std::string direction;  // "min" or "max"
  std::vector<int> objective;
  std::vector<LpConstraint> constraints;
  std::vector<LpBound> bounds;
};

/// Parses the subset of lp_solve syntax produced by to_lp.
LpModel parse_lp(std::string_view text);

/// Human-readable replay of the Q-row reductions.
std::string reduction_report(const Instance& inst, const ReductionResult& reduction);

}  // namespace asccert
