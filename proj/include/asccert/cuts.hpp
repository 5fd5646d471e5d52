#pragma once

// Cut evaluation and enumeration of every cut below the threshold.
//
// A cut is identified by its canonical side: the side of the partition
// that does not contain node 1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "asccert/construction.hpp"

namespace asccert {

class EnumerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subset of the nodes {1..n} of a graph.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(int n);

  static NodeSet of(int n, std::initializer_list<int> nodes);
  static NodeSet of(int n, const std::vector<int>& nodes);
  /// {first, ..., last}; empty if last < first.
  static NodeSet interval(int n, int first, int last);

  int universe() const { return n_; }
  bool contains(int v) const {
    return v >= 1 && v <= n_ && ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U);
  }
  void insert(int v);
  void erase(int v);

  int count() const;
  bool empty() const { return count() == 0; }
  bool full() const { return count() == n_; }
  NodeSet complement() const;
  std::vector<int> members() const;

  /// Compact text form, e.g. "{2,3,7}".
  std::string str() const;

  friend bool operator==(const NodeSet&, const NodeSet&) = default;
  friend auto operator<=>(const NodeSet& a, const NodeSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

 private:
  void check(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

class Cut {
 public:
  /// Canonicalizes `side` (complements it if it holds node 1) and computes
  /// its capacity in `g`. Throws std::invalid_argument for an empty or full side.
  static Cut from_side(const CapGraph& g, const NodeSet& side);

  const NodeSet& side() const { return side_; }
  int capacity() const { return capacity_; }
  /// Whether a link or edge with these endpoints crosses the cut.
  bool crosses(int u, int v) const { return side_.contains(u) != side_.contains(v); }
  bool crosses(const Link& l) const { return crosses(l.lo, l.hi); }

  friend bool operator==(const Cut& a, const Cut& b) { return a.side_ == b.side_; }
  friend auto operator<=>(const Cut& a, const Cut& b) { return a.side_ <=> b.side_; }

 private:
  Cut(NodeSet side, int capacity) : side_(std::move(side)), capacity_(capacity) {}

  NodeSet side_;
  int capacity_ = 0;
};

struct CutFamily {
  std::set<Cut> cuts;
  int lambda = kLambda;

  std::size_t size() const { return cuts.size(); }
  bool contains(const Cut& c) const { return cuts.count(c) != 0; }
  bool subset_of(const CutFamily& other) const;
  friend bool operator==(const CutFamily& a, const CutFamily& b) { return a.cuts == b.cuts; }
};

/// Boundary of the nested set {1..i}, stored canonically as {i+1..n}.
Cut nested_cut(const CapGraph& g, int i);
Cut qset_cut(const CapGraph& g, const QSet& q);

int cut_capacity(const CapGraph& g, const NodeSet& side);

struct BruteForceOptions {
  int max_nodes = 24;
  unsigned threads = 1;
};

/// Scans all 2^(n-1)-1 canonical sides. Throws EnumerationError when n
/// exceeds options.max_nodes.
CutFamily enumerate_bruteforce(const CapGraph& g, const BruteForceOptions& options = {});

/// Exact branch-and-bound enumeration pruned by max-flow lower bounds.
/// Throws EnumerationError for a disconnected graph.
CutFamily enumerate_flow(const CapGraph& g);

/// Value of a minimum cut separating `sources` from `sinks`. Throws
/// std::invalid_argument when either set is empty or they overlap.
int max_flow(const CapGraph& g, const NodeSet& sources, const NodeSet& sinks);

/// Repeated capacity-weighted random contraction down to two super-nodes.
/// Returns the distinct observed cuts below lambda; deterministic in `seed`.
CutFamily karger_probe(const CapGraph& g, std::size_t trials, std::uint64_t seed);

bool is_connected(const CapGraph& g);

}  // namespace asccert
