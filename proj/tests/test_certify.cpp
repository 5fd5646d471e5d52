#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "asccert/certify.hpp"
#include "asccert/construction.hpp"
#include "asccert/cuts.hpp"
#include "oracles.hpp"

using namespace asccert;

namespace {

bool mentions(const std::vector<std::string>& lines, const std::string& needle) {
  return std::any_of(lines.begin(), lines.end(),
                     [&](const std::string& l) { return l.find(needle) != std::string::npos; });
}

const CapacityRow& row_named(const CapacityTable& t, const std::string& label) {
  return *std::find_if(t.begin(), t.end(), [&](const CapacityRow& r) { return r.label == label; });
}

}  // namespace

TEST_CASE("coverage") {
  const Instance inst = build_instance(4);
  CHECK(coverage(inst, nested_cut(inst.graph, 3)) == Rat(1));
  CHECK(coverage(inst, qset_cut(inst.graph, inst.qset(2))) == Rat(1));
  CHECK(coverage(inst, Cut::from_side(inst.graph, NodeSet::of(8, {8}))) == Rat(1));
  // A big cut: {v3} is crossed by l3 and l6 only.
  CHECK(coverage(inst, Cut::from_side(inst.graph, NodeSet::of(8, {3}))) == Rat(1, 2));
}

TEST_CASE("verify_prop1") {
  const Instance inst = build_instance(4);
  const CapacityTable t = verify_prop1(inst);
  CHECK(t.size() == 10);
  CHECK(row_named(t, "N_1").capacity == 3);
  CHECK(row_named(t, "N_7").capacity == 3);
  CHECK(row_named(t, "N_2").capacity == 4);
  CHECK(row_named(t, "Q_2").capacity == 4);

  Instance broken = inst;
  broken.graph.edges[0].cap = 4;  // v1v2
  try {
    verify_prop1(broken);
    FAIL("expected CertificationError");
  } catch (const CertificationError& e) {
    CHECK(std::string(e.what()).find("Q_1") != std::string::npos);
  }
}

TEST_CASE("verify_prop1 capacities for k in 4..10") {
  for (int k = 4; k <= 10; k += 2) {
    CAPTURE(k);
    const Instance inst = build_instance(k);
    for (const auto& r : verify_prop1(inst)) {
      if (r.label.front() == 'Q') {
        CHECK(r.capacity == 4);
      } else {
        CHECK((r.capacity == 3 || r.capacity == 4));
      }
    }
    const CapacityTable t = listed_capacities(inst);
    CHECK(row_named(t, "N_1").capacity == 3);
    CHECK(row_named(t, "N_" + std::to_string(inst.n - 1)).capacity == 3);
  }
}

TEST_CASE("verify_prop2") {
  const Instance i4 = build_instance(4);
  const CutFamily f4 = enumerate_bruteforce(i4.graph);
  CHECK(verify_prop2(i4, f4).exact);

  const Instance i6 = build_instance(6);
  CHECK(verify_prop2(i6, enumerate_flow(i6.graph)).exact);

  CutFamily missing = f4;
  missing.cuts.erase(qset_cut(i4.graph, i4.qset(3)));
  const FamilyCheck check = verify_prop2(i4, missing);
  CHECK_FALSE(check.exact);
  REQUIRE(check.missing.size() == 1);
  CHECK(check.missing[0].label == "Q_3");
  CHECK(check.surplus.empty());

  CutFamily extra = f4;
  extra.cuts.insert(Cut::from_side(i4.graph, NodeSet::of(8, {3})));
  const FamilyCheck surplus = verify_prop2(i4, extra);
  CHECK_FALSE(surplus.exact);
  CHECK(surplus.surplus.size() == 1);
}

TEST_CASE("verify_basic") {
  const Instance i4 = build_instance(4);
  const Certificate c4 = verify_basic(i4, enumerate_bruteforce(i4.graph));
  CHECK(c4.is_basic);
  CHECK(c4.rank_A == 10);
  CHECK(c4.max_coordinate == Rat(1, 4));
  CHECK(c4.tight);
  CHECK(c4.feasible);
  CHECK(c4.bounds_strict);
  CHECK(c4.unique_solution);
  CHECK(c4.below_half);
  CHECK(c4.failures.empty());

  const Instance i6 = build_instance(6);
  const Certificate c6 = verify_basic(i6, enumerate_bruteforce(i6.graph));
  CHECK(c6.is_basic);
  CHECK(c6.rank_A == 21);
  CHECK(c6.max_coordinate == Rat(1, 6));

  Instance perturbed = i4;
  perturbed.xstar[0] = Rat(1, 2);
  const Certificate bad = verify_basic(perturbed, enumerate_bruteforce(i4.graph));
  CHECK_FALSE(bad.is_basic);
  CHECK_FALSE(bad.tight);
  CHECK(mentions(bad.failures, "row N_1"));
}

TEST_CASE("verify_basic with a supplied basis") {
  const Instance inst = build_instance(4);
  const CutFamily family = enumerate_bruteforce(inst.graph);
  IntMatrix basis = build_incidence_matrix(inst);
  CHECK(verify_basic(inst, family, basis).is_basic);

  basis(2, 9) = 0;  // Q_3, l_10
  const Certificate flipped = verify_basic(inst, family, basis);
  CHECK_FALSE(flipped.is_basic);
  CHECK_FALSE(flipped.basis_consistent);
  CHECK_FALSE(flipped.tight);

  CHECK_FALSE(verify_basic(inst, family, IntMatrix(3, 3)).is_basic);
}

TEST_CASE("q_row_gh") {
  const Instance inst = build_instance(4);
  CHECK(q_row_gh(inst, 1) == GH{1, 3});
  CHECK(q_row_gh(inst, 2) == GH{3, 5});
  CHECK(q_row_gh(inst, 3) == GH{5, 7});
  for (int k = 4; k <= 12; k += 2) {
    const Instance i = build_instance(k);
    for (int j = 1; j <= k - 1; ++j) CHECK(q_row_gh(i, j) == GH{1 + (j - 1) * k / 2, 1 + j * k / 2});
  }
}

TEST_CASE("reduce_q_row") {
  const Instance inst = build_instance(4);
  CHECK(reduce_q_row(inst, 1).halved == LinkSet{1, 3});
  CHECK(reduce_q_row(inst, 2).halved == LinkSet{2, 5});
  CHECK(reduce_q_row(inst, 3).halved == LinkSet{6, 8});
}

TEST_CASE("property: Q-row differences are 0 or 2 and halve to k/2 links") {
  for (int k = 4; k <= 12; k += 2) {
    const Instance inst = build_instance(k);
    for (int j = 1; j <= k - 1; ++j) {
      const QRowReduction red = reduce_q_row(inst, j);
      for (int v : red.difference) CHECK((v == 0 || v == 2));
      CHECK(red.halved.size() == static_cast<std::size_t>(k / 2));
      CHECK_FALSE(std::binary_search(red.halved.begin(), red.halved.end(), k));
    }
  }
}

TEST_CASE("move_linkset") {
  const Instance inst = build_instance(4);

  const MoveResult a = move_linkset(inst, {2, 5});
  CHECK(a.final_set == LinkSet{1, 2});
  REQUIRE(a.steps.size() == 1);
  CHECK(a.steps[0].h == 2);
  CHECK(a.steps[0].g == 1);

  const MoveResult b = move_linkset(inst, {6, 8});
  REQUIRE(b.steps.size() == 2);
  CHECK(b.steps[0].h == 5);
  CHECK(b.steps[0].g == 4);
  CHECK(b.steps[0].result == LinkSet{2, 6});
  CHECK(b.steps[1].h == 3);
  CHECK(b.steps[1].g == 2);
  CHECK(b.steps[1].result == LinkSet{2, 3});
  CHECK(b.final_set == LinkSet{2, 3});

  const MoveResult c = move_linkset(inst, {1, 3});
  CHECK(c.final_set == LinkSet{1, 3});
  CHECK(c.steps.empty());

  CHECK_THROWS_AS(move_linkset(inst, {1, 4}), ReductionError);     // holds the s-t link
  CHECK_THROWS_AS(move_linkset(inst, {1}), ReductionError);        // wrong size
  CHECK_THROWS_AS(move_linkset(inst, {1, 10}), ReductionError);    // in no nested cut
}

TEST_CASE("property: move steps keep the path set and lower h") {
  for (int k = 4; k <= 12; k += 2) {
    const Instance inst = build_instance(k);
    for (int j = 1; j <= k - 1; ++j) {
      const LinkSet start = reduce_q_row(inst, j).halved;
      const MoveResult r = move_linkset(inst, start);
      const auto phi = path_indices(inst, start);
      int last_h = inst.n;
      for (const auto& s : r.steps) {
        CHECK(path_indices(inst, s.result) == phi);
        CHECK(s.h < last_h);
        CHECK(s.g < s.h);
        last_h = s.h;
      }
      CHECK(r.final_set == phi);
    }
  }
}

TEST_CASE("property: every nested cut meets each path exactly once") {
  for (int k = 4; k <= 12; k += 2) {
    const Instance inst = build_instance(k);
    std::vector<int> all(static_cast<std::size_t>(k));
    std::iota(all.begin(), all.end(), 1);
    for (int i = 1; i <= inst.n - 1; ++i) {
      LinkSet crossing;
      for (const auto& l : inst.links)
        if (l.crosses_nested(i)) crossing.push_back(l.id);
      CHECK(crossing.size() == static_cast<std::size_t>(k));
      CHECK(path_indices(inst, crossing) == all);
    }
  }
}

TEST_CASE("full_reduction") {
  const Instance i4 = build_instance(4);
  const ReductionResult r4 = full_reduction(i4);
  CHECK(r4.ok);
  REQUIRE(r4.traces.size() == 3);
  CHECK(r4.traces[0].phi == std::vector<int>{1, 3});
  CHECK(r4.traces[1].phi == std::vector<int>{1, 2});
  CHECK(r4.traces[2].phi == std::vector<int>{2, 3});
  CHECK(r4.reduced.block(0, 0, 3, 3) == oracle::from_dense(oracle::kGoldenAPQ4).transpose());
  CHECK(r4.det_reduced == 2);

  const Instance i8 = build_instance(8);
  const ReductionResult r8 = full_reduction(i8);
  CHECK(r8.ok);
  CHECK(r8.reduced.block(0, 7, 7, static_cast<std::size_t>(i8.m - 7)).is_zero());
  CHECK(rank(build_incidence_matrix(i8)) == static_cast<std::size_t>(i8.m));
}

TEST_CASE("property: determinant and rank facts for k in 4..10") {
  for (int k = 4; k <= 10; k += 2) {
    CAPTURE(k);
    const Instance inst = build_instance(k);
    const IntMatrix a = build_incidence_matrix(inst);
    CHECK(det_bareiss(build_circulant(k)) == k / 2);
    CHECK(rank(a) == static_cast<std::size_t>(inst.m));
    const BigInt det_a = det_bareiss(a);
    CHECK(det_a != 0);
    // Halving k-1 rows scales the determinant by 2^-(k-1).
    CHECK(det_a == (BigInt(k / 2) << (k - 1)));
  }
}

TEST_CASE("certify attaches the reduction verdict") {
  const Instance inst = build_instance(6);
  const CertifiedRun run = certify(inst, enumerate_flow(inst.graph));
  REQUIRE(run.certificate.reduction_ok.has_value());
  CHECK(*run.certificate.reduction_ok);
  CHECK(run.certificate.is_basic);
  CHECK(run.reduction.traces.size() == 5);
  for (const auto& t : run.reduction.traces) CHECK(t.final_set.size() == 3);
}
