#pragma once

// The counterexample family: for an even k >= 4, a capacitated path graph
// with k-1 chords, the Q-set partition of its internal nodes, and a link
// graph made of k internally disjoint s,t-paths.
//
// Nodes are 1-based: s = 1, t = n. Edges and links are stored with lo < hi.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "asccert/exactmath.hpp"

namespace asccert {

inline constexpr int kLambda = 5;

class InvalidK : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  int lo = 0;
  int hi = 0;
  int cap = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct CapGraph {
  int n = 0;
  std::vector<Edge> edges;
  int lambda = kLambda;
  friend bool operator==(const CapGraph&, const CapGraph&) = default;
};

struct QSet {
  int index = 0;
  int first = 0;
  int last = 0;

  bool contains(int v) const { return first <= v && v <= last; }
  int size() const { return last - first + 1; }
  friend bool operator==(const QSet&, const QSet&) = default;
};

struct PathSystem {
  /// paths[i-1] is the node sequence of P_i, from 1 to n.
  std::vector<std::vector<int>> paths;
  /// assignment[j-1] lists (path index, node) for every path meeting Q_j,
  /// ascending in both coordinates.
  std::vector<std::vector<std::pair<int, int>>> assignment;
  friend bool operator==(const PathSystem&, const PathSystem&) = default;
};

struct Link {
  int id = 0;
  int lo = 0;
  int hi = 0;
  int path = 0;

  /// Whether the link lies in the boundary of the nested set {1..i}.
  bool crosses_nested(int i) const { return lo <= i && i < hi; }
  bool crosses_qset(const QSet& q) const { return q.contains(lo) != q.contains(hi); }
  friend bool operator==(const Link&, const Link&) = default;
};

struct Instance {
  int k = 0;
  int n = 0;
  int m = 0;
  CapGraph graph;
  std::vector<QSet> qsets;
  PathSystem paths;
  std::vector<Link> links;  // links[id-1]
  std::vector<Rat> xstar;   // xstar[id-1]

  const Link& link(int id) const { return links.at(static_cast<std::size_t>(id - 1)); }
  const QSet& qset(int j) const { return qsets.at(static_cast<std::size_t>(j - 1)); }
  int half() const { return k / 2; }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws InvalidK unless k is even and at least 4.
void validate_k(int k);

constexpr int node_count(int k) { return 2 + k * (k - 1) / 2; }
constexpr int link_count(int k) { return node_count(k) + k - 2; }

/// Index of the Q-set holding node v: 0 for s, k for t, 1..k-1 otherwise.
int qset_of_node(int k, int v);

/// Capacity of the path edge v_i v_{i+1}, 1 <= i <= n-1.
int edge_capacity(int k, int i);

/// Endpoints of the j-th chord, 1 <= j <= k-1. Chords all have capacity 1.
std::pair<int, int> e2_endpoints(int k, int j);

/// Whether path P_i (1..k-1) has a node in Q_j (1..k-1).
bool path_q_incidence(int k, int i, int j);

/// The (k-1)x(k-1) path/Q-set incidence matrix; circulant with k/2
/// consecutive ones per row.
IntMatrix build_circulant(int k);

PathSystem build_path_system(int k);

Instance build_instance(int k);

/// m x m cut/link incidence: rows Q_1..Q_{k-1} then N_1..N_{n-1}, columns
/// links 1..m.
IntMatrix build_incidence_matrix(const Instance& inst);

}  // namespace asccert
