// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "asccert/certify.hpp"
#include "asccert/construction.hpp"
#include "asccert/cuts.hpp"
#include "oracles.hpp"

using namespace asccert;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    std::ostringstream os;
    os << "took " << secs << " s, limit " << limit_s << " s";
    out.require(false, os.str());
  }
  if (!out.ok) ++failures;
  std::printf("%s %d %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
              out.ok ? "" : ": ", out.detail.c_str());
}

std::string kstr(int k) { return "k=" + std::to_string(k) + ": "; }

std::vector<Certificate> certificates;

}  // namespace

int main() {
  criterion(1, "golden k=4 incidence and circulant matrices", 1.0, [](Outcome& o) {
    const Instance inst = build_instance(4);
    o.require(build_incidence_matrix(inst) == oracle::from_dense(oracle::kGoldenA4), "A differs");
    o.require(build_circulant(4) == IntMatrix{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, "A^PQ differs");
  });

  criterion(2, "circulant det = k/2 and rank = k-1, k in 4..12", 1.0, [](Outcome& o) {
    for (int k = 4; k <= 12; k += 2) {
      const IntMatrix c = build_circulant(k);
      o.require(det_bareiss(c) == k / 2, kstr(k) + "det");
      o.require(rank(c) == static_cast<std::size_t>(k - 1), kstr(k) + "rank");
    }
  });

  criterion(3, "listed cut capacities, k in 4..10", 1.0, [](Outcome& o) {
    for (int k = 4; k <= 10; k += 2) {
      const Instance inst = build_instance(k);
      for (const auto& row : verify_prop1(inst)) {
        const bool q = row.label.front() == 'Q';
        const bool end = row.label == "N_1" || row.label == "N_" + std::to_string(inst.n - 1);
        o.require(row.capacity < kLambda, kstr(k) + row.label + " not small");
        if (q) o.require(row.capacity == 4, kstr(k) + row.label);
        else if (end) o.require(row.capacity == 3, kstr(k) + row.label);
        else o.require(row.capacity == 3 || row.capacity == 4, kstr(k) + row.label);
      }
    }
  });

  criterion(4, "small-cut family: brute force, flow, probe", 300.0, [](Outcome& o) {
    for (int k : {4, 6}) {
      const Instance inst = build_instance(k);
      const auto start = Clock::now();
      const CutFamily brute = enumerate_bruteforce(inst.graph);
      const double secs = std::chrono::duration<double>(Clock::now() - start).count();
      o.require(secs < 1.0, kstr(k) + "brute force over 1 s");
      o.require(brute.size() == static_cast<std::size_t>(inst.n - 1 + k - 1), kstr(k) + "brute size");
      o.require(verify_prop2(inst, brute).exact, kstr(k) + "brute family not the listed one");
      o.require(enumerate_flow(inst.graph) == brute, kstr(k) + "flow differs from brute");
    }
    const Instance i8 = build_instance(8);
    const CutFamily f8 = enumerate_flow(i8.graph);
    o.require(f8.size() == 36, "k=8: flow size");
    o.require(verify_prop2(i8, f8).exact, "k=8: flow family not the listed one");
    for (int k : {8, 10}) {
      const Instance inst = build_instance(k);
      const CutFamily family = enumerate_flow(inst.graph);
      const CutFamily probe = karger_probe(inst.graph, 100000, 1);
      o.require(probe.size() > 0, kstr(k) + "probe found nothing");
      o.require(probe.subset_of(family), kstr(k) + "probe found a cut outside the family");
    }
  });

  criterion(5, "x* is basic with max coordinate 1/k, k in 4..10", 30.0, [](Outcome& o) {
    for (int k = 4; k <= 10; k += 2) {
      const Instance inst = build_instance(k);
      const Certificate c = verify_basic(inst, enumerate_flow(inst.graph));
      o.require(c.is_basic, kstr(k) + "not basic");
      o.require(c.max_coordinate == Rat(1, k), kstr(k) + "max coordinate " + c.max_coordinate.str());
      o.require(c.rank_A == static_cast<std::size_t>(inst.m), kstr(k) + "rank");
      certificates.push_back(c);
    }
    const std::size_t ms[] = {10, 21, 36, 55};
    for (std::size_t i = 0; i < certificates.size(); ++i)
      o.require(certificates[i].rank_A == ms[i], "rank table");
  });

  criterion(6, "k=4 reduction replay", 1.0, [](Outcome& o) {
    const ReductionResult r = full_reduction(build_instance(4));
    o.require(r.ok, "reduction not ok");
    if (r.traces.size() != 3) {
      o.require(false, "trace count");
      return;
    }
    const GH gh[] = {{1, 3}, {3, 5}, {5, 7}};
    const LinkSet halved[] = {{1, 3}, {2, 5}, {6, 8}};
    const std::vector<LinkSet> moves[] = {{}, {{1, 2}}, {{2, 6}, {2, 3}}};
    const std::vector<int> phi[] = {{1, 3}, {1, 2}, {2, 3}};
    for (std::size_t j = 0; j < 3; ++j) {
      const ReductionTrace& t = r.traces[j];
      const std::string row = "Q_" + std::to_string(j + 1) + ": ";
      o.require(t.gh == gh[j], row + "(g,h)");
      o.require(t.halved == halved[j], row + "halved set");
      std::vector<LinkSet> got;
      for (const auto& s : t.steps) got.push_back(s.result);
      o.require(got == moves[j], row + "intermediate sets");
      o.require(t.phi == phi[j], row + "phi");
    }
  });

  criterion(7, "full_reduction block structure, k in 4..10", 10.0, [](Outcome& o) {
    for (int k = 4; k <= 10; k += 2) {
      const Instance inst = build_instance(k);
      const ReductionResult r = full_reduction(inst);
      const auto q = static_cast<std::size_t>(k - 1);
      const auto rest = static_cast<std::size_t>(inst.m) - q;
      o.require(r.ok, kstr(k) + "reduction not ok");
      o.require(r.reduced.block(0, 0, q, q) == build_circulant(k).transpose(), kstr(k) + "top-left");
      o.require(r.reduced.block(0, q, q, rest).is_zero(), kstr(k) + "top-right");
      const IntMatrix a22 = r.reduced.block(q, q, rest, rest);
      o.require(a22.is_lower_triangular(), kstr(k) + "A22 not lower triangular");
      for (std::size_t i = 0; i < rest; ++i) o.require(a22(i, i) == 1, kstr(k) + "A22 diagonal");
    }
  });

  criterion(8, "mutation suite, k in {4,6}", 0.0, [](Outcome& o) {
    constexpr int kPerKind = 25;
    std::mt19937_64 rng(20241019);
    for (int k : {4, 6}) {
      const Instance inst = build_instance(k);
      const CutFamily family = enumerate_flow(inst.graph);
      const IntMatrix basis = build_incidence_matrix(inst);
      const auto m = static_cast<std::size_t>(inst.m);
      std::uniform_int_distribution<std::size_t> coord(0, m - 1);
      std::uniform_int_distribution<int> denom(2, 40);
      std::bernoulli_distribution up(0.5);
      o.require(verify_basic(inst, family, basis).is_basic, kstr(k) + "unmutated run not basic");

      int caught = 0;
      for (int t = 0; t < kPerKind; ++t) {
        Instance mutated = inst;
        const Rat delta(1, denom(rng));
        Rat& x = mutated.xstar[coord(rng)];
        x = up(rng) ? x + delta : x - delta;
        const Certificate c = verify_basic(mutated, family);
        caught += (!c.tight && !c.is_basic) ? 1 : 0;
      }
      o.require(caught == kPerKind, kstr(k) + "x* perturbation undetected");

      caught = 0;
      std::vector<Cut> cuts(family.cuts.begin(), family.cuts.end());
      std::uniform_int_distribution<std::size_t> pick(0, cuts.size() - 1);
      for (int t = 0; t < kPerKind; ++t) {
        CutFamily mutated = family;
        mutated.cuts.erase(cuts[pick(rng)]);
        const Certificate c = verify_basic(inst, mutated);
        caught += (!c.family_exact && !c.is_basic) ? 1 : 0;
      }
      o.require(caught == kPerKind, kstr(k) + "cut removal undetected");

      caught = 0;
      for (int t = 0; t < kPerKind; ++t) {
        IntMatrix mutated = basis;
        BigInt& entry = mutated(coord(rng), coord(rng));
        entry = 1 - entry;
        const Certificate c = verify_basic(inst, family, mutated);
        caught += (!c.basis_consistent && !c.is_basic) ? 1 : 0;
      }
      o.require(caught == kPerKind, kstr(k) + "A entry flip undetected");
    }
  });

  criterion(9, "max coordinate 1/k < 1/2 and decreasing in k", 0.0, [](Outcome& o) {
    o.require(certificates.size() == 4, "certificates from criterion 5 missing");
    for (std::size_t i = 0; i < certificates.size(); ++i) {
      const Certificate& c = certificates[i];
      o.require(c.max_coordinate == Rat(1, c.k), kstr(c.k) + "max coordinate");
      o.require(c.max_coordinate < Rat(1, 2) && c.below_half, kstr(c.k) + "not below 1/2");
      if (i > 0) o.require(c.max_coordinate < certificates[i - 1].max_coordinate, kstr(c.k) + "not decreasing");
    }
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
