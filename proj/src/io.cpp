#include "asccert/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

namespace asccert {

// ------------------------------------------------------------- instances

Json instance_to_json(const Instance& inst) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["k"] = inst.k;
  doc["n"] = inst.n;
  doc["m"] = inst.m;
  doc["lambda"] = inst.graph.lambda;
  Json edges = Json::array();
  for (const auto& e : inst.graph.edges) edges.push_back({e.lo, e.hi, e.cap});
  doc["edges"] = std::move(edges);
  Json qsets = Json::array();
  for (const auto& q : inst.qsets) qsets.push_back({q.first, q.last});
  doc["qsets"] = std::move(qsets);
  Json links = Json::array();
  for (const auto& l : inst.links) links.push_back({l.id, l.lo, l.hi, l.path});
  doc["links"] = std::move(links);
  Json xstar = Json::array();
  for (const auto& x : inst.xstar) xstar.push_back(x.str());
  doc["xstar"] = std::move(xstar);
  return doc;
}

namespace {

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw FormatError(std::string("instance document: missing field '") + name + "'");
  }
  return doc.at(name);
}

int int_field(const Json& doc, const char* name) {
  const Json& v = field(doc, name);
  if (!v.is_number_integer()) {
    throw FormatError(std::string("instance document: '") + name + "' is not an integer");
  }
  return v.get<int>();
}

std::vector<int> int_tuple(const Json& v, std::size_t arity, const char* what) {
  if (!v.is_array() || v.size() != arity) {
    throw FormatError(std::string("instance document: malformed ") + what + " entry");
  }
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) {
      throw FormatError(std::string("instance document: non-integer in ") + what);
    }
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Instance instance_from_json(const Json& doc) {
  const Json& version = field(doc, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    throw FormatError("instance document: unsupported schema_version");
  }
  Instance inst;
  inst.k = int_field(doc, "k");
  try {
    validate_k(inst.k);
  } catch (const InvalidK& e) {
    throw FormatError(std::string("instance document: ") + e.what());
  }
  inst.n = int_field(doc, "n");
  inst.m = int_field(doc, "m");
  if (inst.n != node_count(inst.k) || inst.m != link_count(inst.k)) {
    throw FormatError("instance document: n or m inconsistent with k");
  }
  inst.graph.n = inst.n;
  inst.graph.lambda = int_field(doc, "lambda");

  for (const auto& e : field(doc, "edges")) {
    const auto t = int_tuple(e, 3, "edge");
    if (t[0] < 1 || t[0] >= t[1] || t[1] > inst.n) {
      throw FormatError("instance document: edge endpoints out of order or range");
    }
    inst.graph.edges.push_back({t[0], t[1], t[2]});
  }

  int index = 0;
  for (const auto& q : field(doc, "qsets")) {
    const auto t = int_tuple(q, 2, "qset");
    inst.qsets.push_back({++index, t[0], t[1]});
  }
  if (index != inst.k - 1) throw FormatError("instance document: expected k-1 Q-sets");

  const Json& links = field(doc, "links");
  if (!links.is_array() || static_cast<int>(links.size()) != inst.m) {
    throw FormatError("instance document: expected m links");
  }
  inst.links.assign(static_cast<std::size_t>(inst.m), {});
  std::vector<char> seen(static_cast<std::size_t>(inst.m), 0);
  for (const auto& l : links) {
    const auto t = int_tuple(l, 4, "link");
    if (t[0] < 1 || t[0] > inst.m || seen[static_cast<std::size_t>(t[0] - 1)]) {
      throw FormatError("instance document: bad or duplicate link id");
    }
    if (t[1] < 1 || t[1] >= t[2] || t[2] > inst.n || t[3] < 1 || t[3] > inst.k) {
      throw FormatError("instance document: link endpoints or path out of range");
    }
    seen[static_cast<std::size_t>(t[0] - 1)] = 1;
    inst.links[static_cast<std::size_t>(t[0] - 1)] = {t[0], t[1], t[2], t[3]};
  }

  const Json& xstar = field(doc, "xstar");
  if (!xstar.is_array() || static_cast<int>(xstar.size()) != inst.m) {
    throw FormatError("instance document: expected m entries in xstar");
  }
  for (const auto& x : xstar) {
    if (!x.is_string()) throw FormatError("instance document: xstar entries must be strings");
    try {
      inst.xstar.push_back(Rat::parse(x.get<std::string>()));
    } catch (const std::exception& e) {
      throw FormatError(std::string("instance document: ") + e.what());
    }
  }

  // Recover each path by chaining its links from s to t.
  inst.paths.paths.assign(static_cast<std::size_t>(inst.k), {});
  for (int p = 1; p <= inst.k; ++p) {
    std::vector<Link> own;
    for (const auto& l : inst.links)
      if (l.path == p) own.push_back(l);
    std::sort(own.begin(), own.end(), [](const Link& a, const Link& b) { return a.lo < b.lo; });
    auto& seq = inst.paths.paths[static_cast<std::size_t>(p - 1)];
    seq.push_back(1);
    for (const auto& l : own) {
      if (l.lo != seq.back()) {
        throw FormatError("instance document: links of path " + std::to_string(p) +
                          " do not form an s,t-path");
      }
      seq.push_back(l.hi);
    }
    if (seq.back() != inst.n) {
      throw FormatError("instance document: path " + std::to_string(p) + " does not reach t");
    }
  }
  inst.paths.assignment.assign(static_cast<std::size_t>(inst.k - 1), {});
  for (const auto& q : inst.qsets) {
    auto& assigned = inst.paths.assignment[static_cast<std::size_t>(q.index - 1)];
    for (int p = 1; p <= inst.k; ++p)
      for (int v : inst.paths.paths[static_cast<std::size_t>(p - 1)])
        if (q.contains(v)) assigned.emplace_back(p, v);
  }
  return inst;
}

// ----------------------------------------------------------- certificates

Json trace_to_json(const ReductionTrace& trace) {
  Json t;
  t["row"] = "Q_" + std::to_string(trace.j);
  t["g"] = trace.gh.g;
  t["h"] = trace.gh.h;
  t["halved"] = trace.halved;
  Json steps = Json::array();
  for (const auto& s : trace.steps) steps.push_back({{"h", s.h}, {"g", s.g}, {"links", s.result}});
  t["steps"] = std::move(steps);
  t["final"] = trace.final_set;
  t["phi"] = trace.phi;
  return t;
}

Json certificate_to_json(const Certificate& cert, const ReductionResult* reduction,
                         const RunInfo& info) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool_version"] = kToolVersion;
  doc["k"] = cert.k;
  doc["n"] = cert.n;
  doc["m"] = cert.m;
  doc["strategy"] = info.strategy;
  doc["seconds"] = info.seconds;

  doc["family"] = {{"exact", cert.family_exact},
                   {"size", cert.family_size},
                   {"expected", cert.expected_family_size},
                   {"missing", cert.missing_cuts},
                   {"surplus", cert.surplus_cuts},
                   {"strategies_agree", info.strategies_agree}};
  Json caps = Json::object();
  for (const auto& row : cert.listed_capacities) caps[row.label] = row.capacity;
  doc["listed_capacities"] = std::move(caps);
  doc["listed_small"] = cert.listed_small;
  doc["basis_consistent"] = cert.basis_consistent;
  doc["feasible"] = cert.feasible;
  doc["tight"] = cert.tight;
  doc["bounds_strict"] = cert.bounds_strict;
  doc["rank_A"] = cert.rank_A;
  doc["det_A"] = cert.det_A.str();
  doc["unique_solution"] = cert.unique_solution;
  doc["is_basic"] = cert.is_basic;
  doc["max_coordinate"] = cert.max_coordinate.str();
  doc["below_half"] = cert.below_half;
  if (cert.reduction_ok.has_value()) {
    doc["reduction_ok"] = *cert.reduction_ok;
  } else {
    doc["reduction_ok"] = nullptr;
  }
  if (info.probe_ran) {
    doc["probe"] = {{"trials", info.probe_trials},
                    {"seed", info.probe_seed},
                    {"found", info.probe_found},
                    {"within_family", info.probe_ok}};
  }
  if (reduction != nullptr) {
    doc["det_reduced"] = reduction->det_reduced.str();
    Json traces = Json::array();
    for (const auto& t : reduction->traces) traces.push_back(trace_to_json(t));
    doc["traces"] = std::move(traces);
  }
  doc["failures"] = cert.failures;
  return doc;
}

// -------------------------------------------------------------------- DOT

namespace {

std::string path_color(int path, int k) {
  static constexpr std::array<const char*, 12> kPalette = {
      "blue",   "red",        "teal",   "brown",     "darkgreen", "orange",
      "purple", "goldenrod",  "magenta", "steelblue", "olive",     "crimson"};
  if (k <= static_cast<int>(kPalette.size())) return kPalette[static_cast<std::size_t>(path - 1)];
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << static_cast<double>(path - 1) / k << " 0.850 0.750";
  return os.str();
}

}  // namespace

std::string to_dot(const Instance& inst, DotKind kind) {
  std::ostringstream os;
  const bool capgraph = kind == DotKind::CapGraph;
  os << "graph " << (capgraph ? "capgraph" : "links") << "_k" << inst.k << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (int v = 1; v <= inst.n; ++v) os << "  v" << v << ";\n";
  for (const auto& q : inst.qsets) {
    os << "  subgraph cluster_Q" << q.index << " {\n";
    os << "    label=\"Q" << q.index << "\";\n";
    os << "   ";
    for (int v = q.first; v <= q.last; ++v) os << " v" << v << ";";
    os << "\n  }\n";
  }
  if (capgraph) {
    for (const auto& e : inst.graph.edges)
      os << "  v" << e.lo << " -- v" << e.hi << " [label=\"" << e.cap << "\"];\n";
  } else {
    for (const auto& l : inst.links)
      os << "  v" << l.lo << " -- v" << l.hi << " [label=\"l" << l.id << "\", color=\""
         << path_color(l.path, inst.k) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

// --------------------------------------------------------------------- LP

std::string to_lp(const Instance& inst) {
  std::ostringstream os;
  os << "/* Cover small cuts LP: k = " << inst.k << ", n = " << inst.n << ", m = " << inst.m
     << ", lambda = " << inst.graph.lambda << " */\n\n";
  os << "/* objective */\n";
  os << "min: ";
  for (int f = 1; f <= inst.m; ++f) os << (f > 1 ? " + " : "") << "x_" << f;
  os << ";\n\n/* constraints */\n";
  for (const auto& lc : listed_cuts(inst)) {
    os << "cut_" << lc.label << ":";
    bool first = true;
    for (const auto& l : inst.links) {
      if (!lc.cut.crosses(l)) continue;
      os << (first ? " " : " + ") << "x_" << l.id;
      first = false;
    }
    os << " >= 1;\n";
  }
  os << "\n/* bounds */\n";
  for (int f = 1; f <= inst.m; ++f) os << "0 <= x_" << f << " <= 1;\n";
  return os.str();
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_var(const std::string& token) {
  if (token.rfind("x_", 0) != 0 || token.size() == 2 ||
      !std::all_of(token.begin() + 2, token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw FormatError("lp: bad variable '" + token + "'");
  }
  return std::stoi(token.substr(2));
}

std::vector<int> parse_sum(const std::string& expr) {
  std::vector<int> vars;
  std::string token;
  std::istringstream is(expr);
  bool want_var = true;
  while (is >> token) {
    if (want_var) {
      vars.push_back(parse_var(token));
    } else if (token != "+") {
      throw FormatError("lp: expected '+' in '" + expr + "'");
    }
    want_var = !want_var;
  }
  if (vars.empty() || want_var) throw FormatError("lp: malformed sum '" + expr + "'");
  return vars;
}

}  // namespace

LpModel parse_lp(std::string_view text) {
  // Strip block comments, then split into ';'-terminated statements.
  std::string body;
  for (std::size_t i = 0; i < text.size();) {
    if (text.compare(i, 2, "/*") == 0) {
      const auto end = text.find("*/", i + 2);
      if (end == std::string_view::npos) throw FormatError("lp: unterminated comment");
      i = end + 2;
      body += ' ';
    } else {
      body += text[i++];
    }
  }

  LpModel model;
  std::size_t start = 0;
  for (std::size_t semi; (semi = body.find(';', start)) != std::string::npos; start = semi + 1) {
    const std::string stmt = trim(std::string_view(body).substr(start, semi - start));
    if (stmt.empty()) continue;

    if (const auto le = stmt.find("<="); le != std::string::npos && stmt.find(':') == std::string::npos) {
      // lo <= x_f <= hi
      const auto le2 = stmt.find("<=", le + 2);
      if (le2 == std::string::npos) throw FormatError("lp: malformed bound '" + stmt + "'");
      LpBound b;
      b.lo = std::stoll(trim(stmt.substr(0, le)));
      b.var = parse_var(trim(stmt.substr(le + 2, le2 - le - 2)));
      b.hi = std::stoll(trim(stmt.substr(le2 + 2)));
      model.bounds.push_back(b);
      continue;
    }

    const auto colon = stmt.find(':');
    if (colon == std::string::npos) throw FormatError("lp: unrecognized statement '" + stmt + "'");
    const std::string name = trim(stmt.substr(0, colon));
    const std::string rest = trim(stmt.substr(colon + 1));
    if (name == "min" || name == "max") {
      if (!model.direction.empty()) throw FormatError("lp: duplicate objective");
      model.direction = name;
      model.objective = parse_sum(rest);
      continue;
    }
    LpConstraint c;
    c.name = name;
    std::size_t op = std::string::npos;
    for (const char* sense : {">=", "<=", "="}) {
      op = rest.find(sense);
      if (op != std::string::npos) {
        c.sense = sense;
        break;
      }
    }
    if (op == std::string::npos) throw FormatError("lp: constraint '" + name + "' has no sense");
    c.vars = parse_sum(trim(rest.substr(0, op)));
    c.rhs = std::stoll(trim(rest.substr(op + c.sense.size())));
    model.constraints.push_back(std::move(c));
  }
  if (!trim(std::string_view(body).substr(start)).empty()) {
    throw FormatError("lp: trailing text without ';'");
  }
  if (model.direction.empty()) throw FormatError("lp: no objective");
  return model;
}

// ----------------------------------------------------------------- report

namespace {

std::string links_str(const LinkSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ",l" : "l") + std::to_string(s[i]);
  return out + "}";
}

std::string ints_str(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

std::string reduction_report(const Instance& inst, const ReductionResult& reduction) {
  std::ostringstream os;
  os << "k = " << inst.k << ", m = " << inst.m << "\n";
  for (const auto& t : reduction.traces) {
    os << "Q_" << t.j << ": (g=" << t.gh.g << ", h=" << t.gh.h << ")\n";
    os << "  step (h=" << t.gh.h << ", g=" << t.gh.g << "): Q-row - N_" << t.gh.h << " + N_"
       << t.gh.g << " = 2 x " << links_str(t.halved) << "\n";
    for (const auto& s : t.steps) {
      os << "  step (h=" << s.h << ", g=" << s.g << "): - N_" << s.h << " + N_" << s.g << " -> "
         << links_str(s.result) << "\n";
    }
    os << "  final " << links_str(t.final_set) << ", paths " << ints_str(t.phi) << "\n";
  }
  os << "det(reduced) = " << reduction.det_reduced << "\n";
  os << "reduction " << (reduction.ok ? "ok" : "FAILED") << "\n";
  for (const auto& f : reduction.failures) os << "  failure: " << f << "\n";
  return os.str();
}

}  // namespace asccert
