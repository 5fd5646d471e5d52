#include "asccert/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <thread>

namespace asccert {

// ---------------------------------------------------------------- NodeSet

NodeSet::NodeSet(int n) : n_(n), words_(static_cast<std::size_t>(n / 64 + 1), 0) {
  if (n < 0) throw std::invalid_argument("NodeSet: negative universe");
}

NodeSet NodeSet::of(int n, std::initializer_list<int> nodes) {
  NodeSet s(n);
  for (int v : nodes) s.insert(v);
  return s;
}

NodeSet NodeSet::of(int n, const std::vector<int>& nodes) {
  NodeSet s(n);
  for (int v : nodes) s.insert(v);
  return s;
}

NodeSet NodeSet::interval(int n, int first, int last) {
  NodeSet s(n);
  for (int v = first; v <= last; ++v) s.insert(v);
  return s;
}

void NodeSet::check(int v) const {
  if (v < 1 || v > n_) {
    throw std::out_of_range("NodeSet: node " + std::to_string(v) + " outside 1.." +
                            std::to_string(n_));
  }
}

void NodeSet::insert(int v) {
  check(v);
  words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void NodeSet::erase(int v) {
  check(v);
  words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int NodeSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

NodeSet NodeSet::complement() const {
  NodeSet out(n_);
  for (int v = 1; v <= n_; ++v)
    if (!contains(v)) out.insert(v);
  return out;
}

std::vector<int> NodeSet::members() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

std::string NodeSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int v : members()) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

// -------------------------------------------------------------------- Cut

int cut_capacity(const CapGraph& g, const NodeSet& side) {
  if (side.universe() != g.n) {
    throw std::invalid_argument("cut_capacity: node set universe does not match graph");
  }
  if (side.empty() || side.full()) {
    throw std::invalid_argument("cut_capacity: side must be a proper nonempty subset");
  }
  int cap = 0;
  for (const auto& e : g.edges)
    if (side.contains(e.lo) != side.contains(e.hi)) cap += e.cap;
  return cap;
}

Cut Cut::from_side(const CapGraph& g, const NodeSet& side) {
  const int cap = cut_capacity(g, side);
  return side.contains(1) ? Cut(side.complement(), cap) : Cut(side, cap);
}

bool CutFamily::subset_of(const CutFamily& other) const {
  return std::includes(other.cuts.begin(), other.cuts.end(), cuts.begin(), cuts.end());
}

Cut nested_cut(const CapGraph& g, int i) {
  if (i < 1 || i > g.n - 1) {
    throw std::out_of_range("nested_cut: index " + std::to_string(i) + " out of range");
  }
  return Cut::from_side(g, NodeSet::interval(g.n, i + 1, g.n));
}

Cut qset_cut(const CapGraph& g, const QSet& q) {
  return Cut::from_side(g, NodeSet::interval(g.n, q.first, q.last));
}

bool is_connected(const CapGraph& g) {
  if (g.n <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n + 1));
  for (const auto& e : g.edges) {
    if (e.cap <= 0) continue;
    adj[static_cast<std::size_t>(e.lo)].push_back(e.hi);
    adj[static_cast<std::size_t>(e.hi)].push_back(e.lo);
  }
  std::vector<char> seen(static_cast<std::size_t>(g.n + 1), 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.n;
}

// ------------------------------------------------------------ brute force

namespace {

struct Incident {
  int other;
  int cap;
};

// Nodes 2..n map to bits 0..n-2; node 1 is never in a canonical side.
bool in_mask(std::uint64_t mask, int v) {
  return v != 1 && ((mask >> (v - 2)) & 1U);
}

int mask_capacity(const CapGraph& g, std::uint64_t mask) {
  int cap = 0;
  for (const auto& e : g.edges)
    if (in_mask(mask, e.lo) != in_mask(mask, e.hi)) cap += e.cap;
  return cap;
}

// Walks the Gray-code sequence over [lo, hi) and updates the capacity
// incrementally from the single node that flips at each step.
std::vector<std::uint64_t> scan_gray_range(const CapGraph& g,
                                           const std::vector<std::vector<Incident>>& adj,
                                           std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> found;
  if (lo >= hi) return found;
  std::uint64_t mask = lo ^ (lo >> 1);
  int cap = mask_capacity(g, mask);
  if (mask != 0 && cap < g.lambda) found.push_back(mask);
  for (std::uint64_t i = lo + 1; i < hi; ++i) {
    const int bit = std::countr_zero(i);
    const int v = bit + 2;
    const bool v_in = (mask >> bit) & 1U;
    for (const auto& inc : adj[static_cast<std::size_t>(v)]) {
      const bool w_in = in_mask(mask, inc.other);
      cap += (w_in == v_in) ? inc.cap : -inc.cap;
    }
    mask ^= std::uint64_t{1} << bit;
    if (cap < g.lambda) found.push_back(mask);
  }
  return found;
}

}  // namespace

CutFamily enumerate_bruteforce(const CapGraph& g, const BruteForceOptions& options) {
  if (g.n > options.max_nodes) {
    throw EnumerationError("enumerate_bruteforce: n = " + std::to_string(g.n) +
                           " exceeds the brute-force guard of " +
                           std::to_string(options.max_nodes) +
                           " nodes; use flow-bounded enumeration or raise the guard");
  }
  if (g.n < 2) return CutFamily{{}, g.lambda};
  if (g.n - 1 > 63) {
    throw EnumerationError("enumerate_bruteforce: more than 64 nodes is not supported");
  }

  std::vector<std::vector<Incident>> adj(static_cast<std::size_t>(g.n + 1));
  for (const auto& e : g.edges) {
    adj[static_cast<std::size_t>(e.lo)].push_back({e.hi, e.cap});
    adj[static_cast<std::size_t>(e.hi)].push_back({e.lo, e.cap});
  }

  const std::uint64_t total = std::uint64_t{1} << (g.n - 1);
  const unsigned workers =
      static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(options.threads, total)));
  std::vector<std::vector<std::uint64_t>> results(workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;

  if (workers == 1) {
    results[0] = scan_gray_range(g, adj, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min(total, lo + chunk);
      pool.emplace_back([&, w, lo, hi] { results[w] = scan_gray_range(g, adj, lo, hi); });
    }
    for (auto& t : pool) t.join();
  }

  CutFamily family{{}, g.lambda};
  for (const auto& part : results) {
    for (std::uint64_t mask : part) {
      NodeSet side(g.n);
      for (int v = 2; v <= g.n; ++v)
        if (in_mask(mask, v)) side.insert(v);
      family.cuts.insert(Cut::from_side(g, side));
    }
  }
  return family;
}

// --------------------------------------------------------------- max flow

namespace {

class FlowNetwork {
 public:
  explicit FlowNetwork(const CapGraph& g) : n_(g.n), adj_(static_cast<std::size_t>(g.n + 1)) {
    for (const auto& e : g.edges) {
      // An undirected edge is a pair of arcs that are each other's reverse.
      add_arc(e.lo, e.hi, e.cap);
      add_arc(e.hi, e.lo, e.cap);
      arcs_[arcs_.size() - 2].rev = arcs_.size() - 1;
      arcs_[arcs_.size() - 1].rev = arcs_.size() - 2;
    }
  }

  // Edmonds-Karp from every source-side node at once; stops early once the
  // flow reaches `limit`.
  int run(const std::vector<char>& is_source, const std::vector<char>& is_sink, int limit) {
    for (auto& a : arcs_) a.residual = a.cap;
    int flow = 0;
    std::vector<std::size_t> parent_arc(static_cast<std::size_t>(n_ + 1));
    std::vector<char> seen(static_cast<std::size_t>(n_ + 1));
    while (flow < limit) {
      std::fill(seen.begin(), seen.end(), 0);
      std::queue<int> bfs;
      for (int v = 1; v <= n_; ++v) {
        if (is_source[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          bfs.push(v);
        }
      }
      int reached = 0;
      while (!bfs.empty() && reached == 0) {
        const int u = bfs.front();
        bfs.pop();
        for (std::size_t ai : adj_[static_cast<std::size_t>(u)]) {
          const auto& a = arcs_[ai];
          if (a.residual <= 0 || seen[static_cast<std::size_t>(a.to)]) continue;
          seen[static_cast<std::size_t>(a.to)] = 1;
          parent_arc[static_cast<std::size_t>(a.to)] = ai;
          if (is_sink[static_cast<std::size_t>(a.to)]) {
            reached = a.to;
            break;
          }
          bfs.push(a.to);
        }
      }
      if (reached == 0) break;
      int bottleneck = std::numeric_limits<int>::max();
      for (int v = reached; !is_source[static_cast<std::size_t>(v)];) {
        const auto& a = arcs_[parent_arc[static_cast<std::size_t>(v)]];
        bottleneck = std::min(bottleneck, a.residual);
        v = a.from;
      }
      for (int v = reached; !is_source[static_cast<std::size_t>(v)];) {
        auto& a = arcs_[parent_arc[static_cast<std::size_t>(v)]];
        a.residual -= bottleneck;
        arcs_[a.rev].residual += bottleneck;
        v = a.from;
      }
      flow += bottleneck;
    }
    return flow;
  }

 private:
  struct Arc {
    int from;
    int to;
    int cap;
    int residual;
    std::size_t rev;
  };

  void add_arc(int from, int to, int cap) {
    adj_[static_cast<std::size_t>(from)].push_back(arcs_.size());
    arcs_.push_back({from, to, cap, cap, 0});
  }

  int n_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
};

std::vector<char> indicator(const NodeSet& s) {
  std::vector<char> out(static_cast<std::size_t>(s.universe() + 1), 0);
  for (int v : s.members()) out[static_cast<std::size_t>(v)] = 1;
  return out;
}

}  // namespace

int max_flow(const CapGraph& g, const NodeSet& sources, const NodeSet& sinks) {
  if (sources.universe() != g.n || sinks.universe() != g.n) {
    throw std::invalid_argument("max_flow: node set universe does not match graph");
  }
  if (sources.empty() || sinks.empty()) {
    throw std::invalid_argument("max_flow: source and sink sets must be nonempty");
  }
  for (int v : sources.members()) {
    if (sinks.contains(v)) {
      throw std::invalid_argument("max_flow: node " + std::to_string(v) +
                                  " is in both source and sink sets");
    }
  }
  FlowNetwork net(g);
  return net.run(indicator(sources), indicator(sinks), std::numeric_limits<int>::max());
}

// ------------------------------------------------------- branch and bound

namespace {

// Assigns nodes 2..n in order to the side of node 1 (source) or the other
// side (sink). A branch survives only while the min cut separating the
// forced sides stays below lambda.
class BranchAndBound {
 public:
  explicit BranchAndBound(const CapGraph& g)
      : g_(g),
        net_(g),
        source_(static_cast<std::size_t>(g.n + 1), 0),
        sink_(static_cast<std::size_t>(g.n + 1), 0) {
    source_[1] = 1;
    family_.lambda = g.lambda;
  }

  CutFamily run() {
    descend(2, 0);
    return std::move(family_);
  }

 private:
  void descend(int v, int sink_count) {
    if (v > g_.n) {
      if (sink_count == 0) return;
      NodeSet side(g_.n);
      for (int u = 2; u <= g_.n; ++u)
        if (sink_[static_cast<std::size_t>(u)]) side.insert(u);
      Cut c = Cut::from_side(g_, side);
      if (c.capacity() < g_.lambda) family_.cuts.insert(std::move(c));
      return;
    }
    const auto idx = static_cast<std::size_t>(v);

    source_[idx] = 1;
    if (viable(sink_count)) descend(v + 1, sink_count);
    source_[idx] = 0;

    sink_[idx] = 1;
    if (viable(sink_count + 1)) descend(v + 1, sink_count + 1);
    sink_[idx] = 0;
  }

  bool viable(int sink_count) {
    if (sink_count == 0) return true;
    return net_.run(source_, sink_, g_.lambda) < g_.lambda;
  }

  const CapGraph& g_;
  FlowNetwork net_;
  std::vector<char> source_;
  std::vector<char> sink_;
  CutFamily family_;
};

}  // namespace

CutFamily enumerate_flow(const CapGraph& g) {
  if (!is_connected(g)) {
    throw EnumerationError("enumerate_flow: graph is disconnected");
  }
  if (g.n < 2) return CutFamily{{}, g.lambda};
  return BranchAndBound(g).run();
}

// ------------------------------------------------------ random contraction

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    auto& p = parent[static_cast<std::size_t>(v)];
    p = parent[static_cast<std::size_t>(p)];
    v = p;
  }
  return v;
}

}  // namespace

CutFamily karger_probe(const CapGraph& g, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("karger_probe: trials must be >= 1");
  CutFamily family{{}, g.lambda};
  if (g.n < 2) return family;

  const std::size_t edge_count = g.edges.size();
  std::vector<double> key(edge_count);
  std::vector<std::size_t> order(edge_count);
  std::vector<int> parent(static_cast<std::size_t>(g.n + 1));

  for (std::size_t trial = 0; trial < trials; ++trial) {
    // Each trial owns a generator derived from (seed, trial), so the result
    // does not depend on how trials are scheduled.
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(trial)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // Exponential clocks with rate = capacity give a capacity-weighted
    // contraction order.
    for (std::size_t e = 0; e < edge_count; ++e) {
      const double u = 1.0 - unit(rng);  // (0, 1]
      key[e] = -std::log(u) / static_cast<double>(std::max(g.edges[e].cap, 1));
    }
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });

    std::iota(parent.begin(), parent.end(), 0);
    int components = g.n;
    for (std::size_t e : order) {
      if (components <= 2) break;
      if (g.edges[e].cap <= 0) continue;
      const int a = find_root(parent, g.edges[e].lo);
      const int b = find_root(parent, g.edges[e].hi);
      if (a == b) continue;
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }

    const int s_root = find_root(parent, 1);
    NodeSet side(g.n);
    for (int v = 2; v <= g.n; ++v)
      if (find_root(parent, v) != s_root) side.insert(v);
    if (side.empty()) continue;
    Cut c = Cut::from_side(g, side);
    if (c.capacity() < g.lambda) family.cuts.insert(std::move(c));
  }
  return family;
}

}  // namespace asccert
