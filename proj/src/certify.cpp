#include "asccert/certify.hpp"

#include <algorithm>
#include <sstream>

namespace asccert {

namespace {

std::string set_str(const LinkSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << 'l' << s[i];
  os << '}';
  return os.str();
}

LinkSet nested_links(const Instance& inst, int i) {
  LinkSet out;
  for (const auto& l : inst.links)
    if (l.crosses_nested(i)) out.push_back(l.id);
  return out;
}

LinkSet qset_links(const Instance& inst, const QSet& q) {
  LinkSet out;
  for (const auto& l : inst.links)
    if (l.crosses_qset(q)) out.push_back(l.id);
  return out;
}

bool includes(const LinkSet& outer, const LinkSet& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

LinkSet minus(const LinkSet& a, const LinkSet& b) {
  LinkSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Smallest i with `links` contained in delta(N_i), or 0 if there is none.
int smallest_nested_containing(const Instance& inst, const LinkSet& links) {
  for (int i = 1; i <= inst.n - 1; ++i)
    if (includes(nested_links(inst, i), links)) return i;
  return 0;
}

std::vector<BigInt> indicator_row(const Instance& inst, const LinkSet& links, int scale = 1) {
  std::vector<BigInt> row(static_cast<std::size_t>(inst.m), 0);
  for (int id : links) row[static_cast<std::size_t>(id - 1)] = scale;
  return row;
}

bool row_equals(const IntMatrix& m, std::size_t r, const std::vector<BigInt>& expected) {
  auto row = m.row(r);
  return std::equal(row.begin(), row.end(), expected.begin(), expected.end());
}

// Gauss-Jordan over the rationals. Returns nothing if the system is
// singular or inconsistent.
std::optional<std::vector<Rat>> solve_unique(const IntMatrix& a, const std::vector<Rat>& rhs) {
  const std::size_t n = a.rows();
  if (!a.square() || rhs.size() != n) return std::nullopt;
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = Rat(a(r, c));
    aug[r][n] = rhs[r];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && aug[p][col] == Rat(0)) ++p;
    if (p == n) return std::nullopt;
    std::swap(aug[p], aug[col]);
    const Rat piv = aug[col][col];
    for (auto& v : aug[col]) v /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == Rat(0)) continue;
      const Rat f = aug[r][col];
      for (std::size_t c = col; c <= n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug[r][n];
  return x;
}

}  // namespace

std::vector<LabelledCut> listed_cuts(const Instance& inst) {
  std::vector<LabelledCut> out;
  out.reserve(static_cast<std::size_t>(inst.m));
  for (const auto& q : inst.qsets)
    out.push_back({"Q_" + std::to_string(q.index), qset_cut(inst.graph, q)});
  for (int i = 1; i <= inst.n - 1; ++i)
    out.push_back({"N_" + std::to_string(i), nested_cut(inst.graph, i)});
  return out;
}

std::size_t nested_row(const Instance& inst, int i) {
  return static_cast<std::size_t>(inst.k - 1 + i - 1);
}

Rat coverage(const Instance& inst, const Cut& cut) {
  Rat sum;
  for (const auto& l : inst.links)
    if (cut.crosses(l)) sum += inst.xstar.at(static_cast<std::size_t>(l.id - 1));
  return sum;
}

CapacityTable listed_capacities(const Instance& inst) {
  CapacityTable table;
  for (const auto& lc : listed_cuts(inst)) table.push_back({lc.label, lc.cut.capacity()});
  return table;
}

CapacityTable verify_prop1(const Instance& inst) {
  CapacityTable table = listed_capacities(inst);
  for (const auto& row : table) {
    if (row.capacity >= inst.graph.lambda) {
      throw CertificationError("cut " + row.label + " has capacity " +
                               std::to_string(row.capacity) + ", not below lambda = " +
                               std::to_string(inst.graph.lambda));
    }
  }
  return table;
}

FamilyCheck verify_prop2(const Instance& inst, const CutFamily& family) {
  FamilyCheck check;
  const auto listed = listed_cuts(inst);
  check.expected = listed.size();
  check.found = family.size();

  std::set<Cut> expected;
  for (const auto& lc : listed) {
    expected.insert(lc.cut);
    if (!family.contains(lc.cut)) check.missing.push_back(lc);
  }
  for (const auto& c : family.cuts)
    if (expected.count(c) == 0) check.surplus.push_back(c);
  check.exact = check.missing.empty() && check.surplus.empty();
  return check;
}

Certificate verify_basic(const Instance& inst, const CutFamily& family) {
  return verify_basic(inst, family, build_incidence_matrix(inst));
}

Certificate verify_basic(const Instance& inst, const CutFamily& family, const IntMatrix& basis) {
  Certificate cert;
  cert.k = inst.k;
  cert.n = inst.n;
  cert.m = inst.m;
  const auto m = static_cast<std::size_t>(inst.m);
  auto fail = [&](std::string why) { cert.failures.push_back(std::move(why)); };

  const FamilyCheck fam = verify_prop2(inst, family);
  cert.family_exact = fam.exact;
  cert.family_size = fam.found;
  cert.expected_family_size = fam.expected;
  cert.missing_cuts = fam.missing.size();
  cert.surplus_cuts = fam.surplus.size();
  for (const auto& lc : fam.missing) fail("family: listed cut " + lc.label + " not enumerated");
  for (const auto& c : fam.surplus)
    fail("family: unexpected small cut " + c.side().str() + " (capacity " +
         std::to_string(c.capacity()) + ")");

  cert.listed_capacities = listed_capacities(inst);
  cert.listed_small = true;
  for (const auto& row : cert.listed_capacities) {
    if (row.capacity >= inst.graph.lambda) {
      cert.listed_small = false;
      fail("capacity: " + row.label + " = " + std::to_string(row.capacity));
    }
  }

  if (inst.xstar.size() != m) {
    fail("x*: length " + std::to_string(inst.xstar.size()) + " != m");
    return cert;
  }

  const auto listed = listed_cuts(inst);
  if (basis.rows() != m || basis.cols() != m) {
    fail("basis: shape is not m x m");
  } else {
    cert.basis_consistent = true;
    for (std::size_t r = 0; r < m; ++r) {
      for (const auto& l : inst.links) {
        const BigInt want = listed[r].cut.crosses(l) ? 1 : 0;
        if (basis(r, static_cast<std::size_t>(l.id - 1)) != want) {
          cert.basis_consistent = false;
          fail("basis: row " + listed[r].label + ", column l" + std::to_string(l.id) +
               " does not match the cut incidence");
        }
      }
    }

    cert.tight = true;
    for (std::size_t r = 0; r < m; ++r) {
      Rat lhs;
      for (std::size_t c = 0; c < m; ++c)
        if (basis(r, c) != 0) lhs += Rat(basis(r, c)) * inst.xstar[c];
      if (lhs != Rat(1)) {
        cert.tight = false;
        fail("tight: row " + listed[r].label + " evaluates to " + lhs.str());
      }
    }

    cert.rank_A = rank(basis);
    cert.det_A = det_bareiss(basis);
    if (cert.rank_A != m) fail("rank: " + std::to_string(cert.rank_A) + " < m");

    const auto solution = solve_unique(basis, std::vector<Rat>(m, Rat(1)));
    cert.unique_solution = solution.has_value() && *solution == inst.xstar;
  }

  cert.feasible = true;
  auto check_cover = [&](const Cut& c, const std::string& name) {
    const Rat cov = coverage(inst, c);
    if (cov < Rat(1)) {
      cert.feasible = false;
      fail("feasible: cut " + name + " covered only " + cov.str());
    }
  };
  for (const auto& c : family.cuts) check_cover(c, c.side().str());
  for (const auto& lc : listed) check_cover(lc.cut, lc.label);

  cert.bounds_strict = true;
  for (std::size_t f = 0; f < m; ++f) {
    if (!(Rat(0) < inst.xstar[f] && inst.xstar[f] < Rat(1))) {
      cert.bounds_strict = false;
      fail("bounds: x_" + std::to_string(f + 1) + " = " + inst.xstar[f].str());
    }
  }

  bool any_positive = false;
  for (const auto& v : inst.xstar) {
    if (v > Rat(0) && (!any_positive || v > cert.max_coordinate)) {
      cert.max_coordinate = v;
      any_positive = true;
    }
  }
  cert.below_half = cert.max_coordinate < Rat(1, 2);

  cert.is_basic = cert.family_exact && cert.listed_small && cert.basis_consistent &&
                  cert.feasible && cert.tight && cert.bounds_strict && cert.rank_A == m;
  return cert;
}

GH q_row_gh(const Instance& inst, int j) {
  const QSet& q = inst.qset(j);
  GH gh;
  for (int i = 1; i <= inst.n - 1; ++i) {
    // N_i = {1..i}
    const bool disjoint = i < q.first;
    const bool contains = i >= q.last;
    if (disjoint) gh.g = i;
    if (contains && gh.h == 0) gh.h = i;
  }
  return gh;
}

QRowReduction reduce_q_row(const Instance& inst, int j) {
  QRowReduction red;
  red.j = j;
  red.gh = q_row_gh(inst, j);
  const QSet& q = inst.qset(j);
  const auto tag = "Q-row " + std::to_string(j) + ": ";

  red.difference.assign(static_cast<std::size_t>(inst.m), 0);
  for (const auto& l : inst.links) {
    const int v = (l.crosses_qset(q) ? 1 : 0) - (l.crosses_nested(red.gh.h) ? 1 : 0) +
                  (l.crosses_nested(red.gh.g) ? 1 : 0);
    red.difference[static_cast<std::size_t>(l.id - 1)] = v;
    if (v != 0 && v != 2) {
      throw ReductionError(tag + "entry " + std::to_string(v) + " at l" + std::to_string(l.id));
    }
    if (v == 2) red.halved.push_back(l.id);
  }

  if (static_cast<int>(red.halved.size()) != inst.half()) {
    throw ReductionError(tag + "L' has " + std::to_string(red.halved.size()) + " links");
  }
  if (std::binary_search(red.halved.begin(), red.halved.end(), inst.k)) {
    throw ReductionError(tag + "L' contains the s-t link");
  }
  if (!includes(nested_links(inst, red.gh.g), red.halved)) {
    throw ReductionError(tag + "L' = " + set_str(red.halved) + " not inside delta(N_g)");
  }
  return red;
}

std::vector<int> path_indices(const Instance& inst, const LinkSet& links) {
  std::vector<int> out;
  for (int id : links) out.push_back(inst.link(id).path);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MoveResult move_linkset(const Instance& inst, const LinkSet& start) {
  LinkSet current = start;
  std::sort(current.begin(), current.end());
  if (static_cast<int>(current.size()) != inst.half()) {
    throw ReductionError("move_linkset: expected " + std::to_string(inst.half()) + " links");
  }
  if (std::binary_search(current.begin(), current.end(), inst.k)) {
    throw ReductionError("move_linkset: set contains the s-t link");
  }
  const auto phi = path_indices(inst, current);

  MoveResult result;
  int h = smallest_nested_containing(inst, current);
  if (h == 0) {
    throw ReductionError("move_linkset: " + set_str(current) + " lies in no nested cut");
  }
  for (int iter = 0; h != 1; ++iter) {
    if (iter > inst.n) {
      throw ReductionError("move_linkset: no termination after n steps");
    }
    const LinkSet complement = minus(nested_links(inst, h), current);
    const int g = smallest_nested_containing(inst, complement);
    if (g == 0 || g >= h) {
      throw ReductionError("move_linkset: g = " + std::to_string(g) +
                           " does not decrease h = " + std::to_string(h));
    }
    LinkSet next = minus(nested_links(inst, g), complement);
    if (static_cast<int>(next.size()) != inst.half() ||
        std::binary_search(next.begin(), next.end(), inst.k)) {
      throw ReductionError("move_linkset: L'' = " + set_str(next) + " is malformed");
    }
    if (path_indices(inst, next) != phi) {
      throw ReductionError("move_linkset: step (h=" + std::to_string(h) +
                           ", g=" + std::to_string(g) + ") changed the path set");
    }
    result.steps.push_back({h, g, next});
    current = std::move(next);
    h = smallest_nested_containing(inst, current);
    if (h == 0 || h > g) {
      throw ReductionError("move_linkset: L'' not contained in delta(N_g)");
    }
  }

  // At h = 1 the set sits in delta(s), where link ids equal path indices.
  if (current != phi) {
    throw ReductionError("move_linkset: final set " + set_str(current) +
                         " differs from the links leaving s on its paths");
  }
  result.final_set = std::move(current);
  return result;
}

ReductionResult full_reduction(const Instance& inst) {
  ReductionResult res;
  const IntMatrix a = build_incidence_matrix(inst);
  IntMatrix work = a;
  const auto k = static_cast<std::size_t>(inst.k);
  const auto m = static_cast<std::size_t>(inst.m);

  for (int j = 1; j <= inst.k - 1; ++j) {
    const auto row = static_cast<std::size_t>(j - 1);
    const auto tag = "Q-row " + std::to_string(j) + ": ";
    try {
      ReductionTrace trace;
      trace.j = j;
      const QRowReduction red = reduce_q_row(inst, j);
      trace.gh = red.gh;
      trace.halved = red.halved;

      const RowTerm claim[] = {{-1, nested_row(inst, red.gh.h)}, {1, nested_row(inst, red.gh.g)}};
      work = row_combine(work, row, claim);
      if (!row_equals(work, row, indicator_row(inst, red.halved, 2))) {
        throw ReductionError(tag + "combined row is not 2 chi(L')");
      }
      work = row_divide_exact(work, row, 2);

      MoveResult moved = move_linkset(inst, red.halved);
      for (const auto& step : moved.steps) {
        const RowTerm move[] = {{-1, nested_row(inst, step.h)}, {1, nested_row(inst, step.g)}};
        work = row_combine(work, row, move);
        if (!row_equals(work, row, indicator_row(inst, step.result))) {
          throw ReductionError(tag + "row after step (h=" + std::to_string(step.h) +
                               ", g=" + std::to_string(step.g) + ") is not chi(L'')");
        }
      }
      trace.steps = std::move(moved.steps);
      trace.final_set = std::move(moved.final_set);
      trace.phi = path_indices(inst, qset_links(inst, inst.qset(j)));
      if (trace.final_set != trace.phi) {
        throw ReductionError(tag + "final support " + set_str(trace.final_set) +
                             " differs from the paths crossing Q_j");
      }
      res.traces.push_back(std::move(trace));
    } catch (const ReductionError& e) {
      res.failures.push_back(e.what());
    }
  }

  if (work.block(0, 0, k - 1, k - 1) != build_circulant(inst.k).transpose()) {
    res.failures.push_back("top-left block is not the transposed circulant");
  }
  if (!work.block(0, k - 1, k - 1, m - k + 1).is_zero()) {
    res.failures.push_back("top-right block is not zero");
  }
  const IntMatrix a22 = work.block(k - 1, k - 1, m - k + 1, m - k + 1);
  bool unit_diag = a22.is_lower_triangular();
  for (std::size_t i = 0; i < a22.rows() && unit_diag; ++i) unit_diag = a22(i, i) == 1;
  if (!unit_diag) {
    res.failures.push_back("nested block is not lower-triangular with unit diagonal");
  }

  res.det_reduced = det_bareiss(work);
  if (res.det_reduced != inst.half()) {
    res.failures.push_back("det of reduced matrix is " + res.det_reduced.str() + ", not k/2");
  }
  // Every Q-row was halved once; every other operation adds multiples of rows.
  const BigInt scale = BigInt(1) << (inst.k - 1);
  if (det_bareiss(a) != scale * res.det_reduced) {
    res.failures.push_back("det(A) is not 2^(k-1) times the reduced determinant");
  }
  if (rank(work) != rank(a)) {
    res.failures.push_back("row operations changed the rank");
  }

  res.reduced = std::move(work);
  res.ok = res.failures.empty();
  return res;
}

CertifiedRun certify(const Instance& inst, const CutFamily& family) {
  CertifiedRun run{verify_basic(inst, family), full_reduction(inst)};
  run.certificate.reduction_ok = run.reduction.ok;
  for (const auto& f : run.reduction.failures) run.certificate.failures.push_back("reduction: " + f);
  return run;
}

}  // namespace asccert
