#include "asccert/construction.hpp"

#include <algorithm>
#include <string>

namespace asccert {

void validate_k(int k) {
  if (k < 4 || k % 2 != 0) {
    throw InvalidK("k must be an even integer >= 4, got " + std::to_string(k));
  }
}

int qset_of_node(int k, int v) {
  const int n = node_count(k);
  if (v < 1 || v > n) {
    throw std::out_of_range("qset_of_node: node " + std::to_string(v) + " out of range");
  }
  if (v == 1) return 0;
  if (v == n) return k;
  const int half = k / 2;
  return (v - 1 + half - 1) / half;
}

int edge_capacity(int k, int i) {
  validate_k(k);
  const int n = node_count(k);
  if (i < 1 || i > n - 1) {
    throw std::out_of_range("edge_capacity: position " + std::to_string(i) +
                            " outside 1.." + std::to_string(n - 1));
  }
  if (i == 1 || i == n - 1) return 2;
  return qset_of_node(k, i) == qset_of_node(k, i + 1) ? 3 : 1;
}

std::pair<int, int> e2_endpoints(int k, int j) {
  validate_k(k);
  if (j < 1 || j > k - 1) {
    throw std::out_of_range("e2_endpoints: chord " + std::to_string(j) + " out of range");
  }
  const int half = k / 2;
  return {1 + (j - 1) * half, 2 + j * half};
}

bool path_q_incidence(int k, int i, int j) {
  const int half = k / 2;
  if (j >= i) return j <= std::min(i + half - 1, k - 1);
  return j <= i - half;
}

IntMatrix build_circulant(int k) {
  validate_k(k);
  const auto size = static_cast<std::size_t>(k - 1);
  IntMatrix apq(size, size);
  for (int i = 1; i <= k - 1; ++i)
    for (int j = 1; j <= k - 1; ++j)
      if (path_q_incidence(k, i, j)) apq(i - 1, j - 1) = 1;
  return apq;
}

PathSystem build_path_system(int k) {
  validate_k(k);
  const int n = node_count(k);
  const int half = k / 2;

  PathSystem ps;
  ps.paths.assign(static_cast<std::size_t>(k), {});
  ps.assignment.assign(static_cast<std::size_t>(k - 1), {});

  // Within each Q-set, the meeting paths (ascending) take its nodes (ascending).
  for (int j = 1; j <= k - 1; ++j) {
    int node = 2 + (j - 1) * half;
    auto& assigned = ps.assignment[static_cast<std::size_t>(j - 1)];
    for (int i = 1; i <= k - 1; ++i) {
      if (path_q_incidence(k, i, j)) assigned.emplace_back(i, node++);
    }
    if (static_cast<int>(assigned.size()) != half) {
      throw std::logic_error("build_path_system: Q-set " + std::to_string(j) + " met by " +
                             std::to_string(assigned.size()) + " paths");
    }
  }

  for (auto& p : ps.paths) p.push_back(1);
  // Q-sets are visited in ascending order, so each path stays increasing.
  for (const auto& assigned : ps.assignment)
    for (const auto& [path, node] : assigned) ps.paths[static_cast<std::size_t>(path - 1)].push_back(node);
  for (auto& p : ps.paths) p.push_back(n);
  return ps;
}

Instance build_instance(int k) {
  validate_k(k);
  Instance inst;
  inst.k = k;
  inst.n = node_count(k);
  inst.m = link_count(k);
  const int n = inst.n;
  const int half = k / 2;

  inst.graph.n = n;
  inst.graph.lambda = kLambda;
  for (int i = 1; i <= n - 1; ++i) inst.graph.edges.push_back({i, i + 1, edge_capacity(k, i)});
  for (int j = 1; j <= k - 1; ++j) {
    const auto [lo, hi] = e2_endpoints(k, j);
    inst.graph.edges.push_back({lo, hi, 1});
  }

  for (int j = 1; j <= k - 1; ++j) {
    const int first = 2 + (j - 1) * half;
    inst.qsets.push_back({j, first, first + half - 1});
  }

  inst.paths = build_path_system(k);

  inst.links.assign(static_cast<std::size_t>(inst.m), {});
  for (int p = 1; p <= k; ++p) {
    const auto& seq = inst.paths.paths[static_cast<std::size_t>(p - 1)];
    // Link leaving s gets the path index; every later link is the forward
    // link of its lower endpoint v_i and gets index k + i - 1.
    inst.links[static_cast<std::size_t>(p - 1)] = {p, seq[0], seq[1], p};
    for (std::size_t e = 1; e + 1 < seq.size(); ++e) {
      const int id = k + seq[e] - 1;
      inst.links[static_cast<std::size_t>(id - 1)] = {id, seq[e], seq[e + 1], p};
    }
  }

  inst.xstar.assign(static_cast<std::size_t>(inst.m), Rat(1, k));
  return inst;
}

IntMatrix build_incidence_matrix(const Instance& inst) {
  const auto m = static_cast<std::size_t>(inst.m);
  IntMatrix a(m, m);
  std::size_t row = 0;
  for (const auto& q : inst.qsets) {
    for (const auto& l : inst.links)
      if (l.crosses_qset(q)) a(row, static_cast<std::size_t>(l.id - 1)) = 1;
    ++row;
  }
  for (int i = 1; i <= inst.n - 1; ++i) {
    for (const auto& l : inst.links)
      if (l.crosses_nested(i)) a(row, static_cast<std::size_t>(l.id - 1)) = 1;
    ++row;
  }
  return a;
}

}  // namespace asccert
