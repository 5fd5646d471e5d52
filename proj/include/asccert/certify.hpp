#pragma once

// Verification of the counterexample: capacities of the listed cuts,
// exactness of the small-cut family, tightness of x*, full rank of the
// basis matrix, and a replay of the row operations that bring the
// Q-rows to the transposed circulant.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "asccert/construction.hpp"
#include "asccert/cuts.hpp"
#include "asccert/exactmath.hpp"

namespace asccert {

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorted link ids.
using LinkSet = std::vector<int>;

struct LabelledCut {
  std::string label;  // "Q_j" or "N_i"
  Cut cut;
};

/// The listed small cuts in basis-row order: Q_1..Q_{k-1}, then N_1..N_{n-1}.
std::vector<LabelledCut> listed_cuts(const Instance& inst);

/// Row index of N_i in the basis matrix (0-based).
std::size_t nested_row(const Instance& inst, int i);

Rat coverage(const Instance& inst, const Cut& cut);

struct CapacityRow {
  std::string label;
  int capacity = 0;
};
using CapacityTable = std::vector<CapacityRow>;

/// Capacities of all listed cuts, without judging them.
CapacityTable listed_capacities(const Instance& inst);

/// Capacity table of the listed cuts. Throws CertificationError naming the
/// first cut whose capacity is not below lambda.
CapacityTable verify_prop1(const Instance& inst);

struct FamilyCheck {
  bool exact = false;
  std::size_t expected = 0;
  std::size_t found = 0;
  std::vector<LabelledCut> missing;  // listed but not enumerated
  std::vector<Cut> surplus;          // enumerated but not listed
};

/// Compares an enumerated family with the listed nested and Q-cuts.
FamilyCheck verify_prop2(const Instance& inst, const CutFamily& family);

struct Certificate {
  int k = 0;
  int n = 0;
  int m = 0;

  bool family_exact = false;
  std::size_t family_size = 0;
  std::size_t expected_family_size = 0;
  std::size_t missing_cuts = 0;
  std::size_t surplus_cuts = 0;

  CapacityTable listed_capacities;
  bool listed_small = false;

  bool basis_consistent = false;  // basis rows are the listed cut incidences
  bool feasible = false;          // coverage >= 1 on every family cut
  bool tight = false;             // basis * x* = 1 on every listed row
  bool bounds_strict = false;     // 0 < x*_f < 1 for all f
  std::size_t rank_A = 0;
  BigInt det_A = 0;
  bool unique_solution = false;   // basis * x = 1 has x* as its only solution

  bool is_basic = false;
  Rat max_coordinate;
  bool below_half = false;

  std::optional<bool> reduction_ok;
  std::vector<std::string> failures;
};

/// Checks that x* is a basic feasible solution of the cover LP over `family`,
/// using the incidence matrix built from `inst` as the basis.
Certificate verify_basic(const Instance& inst, const CutFamily& family);

/// Same, with a caller-supplied basis matrix (rows in listed-cut order).
Certificate verify_basic(const Instance& inst, const CutFamily& family, const IntMatrix& basis);

struct GH {
  int g = 0;
  int h = 0;
  friend bool operator==(const GH&, const GH&) = default;
};

/// g: largest i with N_i disjoint from Q_j; h: smallest i with Q_j inside N_i.
GH q_row_gh(const Instance& inst, int j);

struct QRowReduction {
  int j = 0;
  GH gh;
  std::vector<int> difference;  // chi(Q_j) - chi(N_h) + chi(N_g), per link
  LinkSet halved;               // L' with difference = 2 chi(L')
};

/// Combines the Q_j row with two nested rows; throws ReductionError if the
/// result is not twice the indicator of k/2 links of the lower nested cut.
QRowReduction reduce_q_row(const Instance& inst, int j);

struct MoveStep {
  int h = 0;
  int g = 0;
  LinkSet result;  // L''
};

struct MoveResult {
  LinkSet final_set;
  std::vector<MoveStep> steps;
};

/// Path indices of the links in `links`.
std::vector<int> path_indices(const Instance& inst, const LinkSet& links);

/// Moves a set of k/2 links, held in some nested cut and avoiding the s-t
/// link, down to the links leaving s on the same paths. Throws
/// ReductionError if a step breaks its invariants.
MoveResult move_linkset(const Instance& inst, const LinkSet& start);

struct ReductionTrace {
  int j = 0;
  GH gh;
  LinkSet halved;
  std::vector<MoveStep> steps;
  LinkSet final_set;
  std::vector<int> phi;  // path indices of delta(Q_j)
};

struct ReductionResult {
  IntMatrix reduced;
  std::vector<ReductionTrace> traces;
  BigInt det_reduced = 0;
  bool ok = false;
  std::vector<std::string> failures;
};

/// Applies the Q-row reduction to every Q-row of the basis matrix and checks
/// the resulting block structure.
ReductionResult full_reduction(const Instance& inst);

/// verify_basic followed by full_reduction, with reduction_ok filled in.
struct CertifiedRun {
  Certificate certificate;
  ReductionResult reduction;
};
CertifiedRun certify(const Instance& inst, const CutFamily& family);

}  // namespace asccert
