// Command-line surface over the lattice engine: catalog listing, per-class
// line counts, the verification suite, Hasse poset emission, and the exact
// tritangent classifier. Text by default, JSON with --json.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "dp1/hasse.hpp"
#include "dp1/pin.hpp"
#include "dp1/tritangent.hpp"
#include "dp1/verify.hpp"

using json = nlohmann::ordered_json;
using namespace dp1;

namespace {

constexpr const char* kVersion = "1.0.0";

json vector_json(const LatticeVector& v) {
  json a = json::array();
  for (int i = 0; i < 9; ++i) a.push_back(v[i]);
  return a;
}

void emit(const std::string& command, bool pass, const json& payload, bool as_json) {
  if (!as_json) return;
  json report;
  report["command"] = command;
  report["status"] = pass ? "pass" : "fail";
  report["version"] = kVersion;
  report["payload"] = payload;
  std::cout << report.dump(2) << "\n";
}

json class_record(const CatalogEntry& entry) {
  json j;
  j["class"] = entry.cls.label;
  j["smith_type"] = entry.cls.smith_type;
  j["eigen_type"] = entry.cls.eigen_type;
  j["real_lines"] = entry.cls.expected_lines;
  j["hyperbolic"] = entry.cls.expected_h;
  j["elliptic"] = entry.cls.expected_e;
  j["h1_dimension"] = entry.cls.expected_h1_dim;
  j["bertini_partner"] = entry.cls.bertini_partner;
  j["witness_roots"] = json::array();
  for (const auto& r : entry.witness) j["witness_roots"].push_back(vector_json(r.vec()));
  j["involution"] = json::array();
  for (const auto& row : entry.sigma.m) j["involution"].push_back(row);
  return j;
}

int cmd_catalog(bool as_json) {
  if (as_json) {
    json payload;
    payload["classes"] = json::array();
    for (const auto& entry : catalog()) payload["classes"].push_back(class_record(entry));
    emit("catalog", true, payload, true);
    return 0;
  }
  std::printf("%-11s %-9s %-6s %6s %6s %5s %4s  %s\n", "class", "smith", "eigen",
              "lines", "hyper", "ell", "h1", "partner");
  for (const auto& entry : catalog()) {
    const auto& c = entry.cls;
    std::printf("%-11s %-9s %-6s %6d %6d %5d %4d  %s\n", c.label.c_str(),
                c.smith_type.c_str(), c.eigen_type.c_str(), c.expected_lines,
                c.expected_h, c.expected_e, c.expected_h1_dim, c.bertini_partner.c_str());
  }
  return 0;
}

int cmd_lines(const std::string& label, bool as_json) {
  const CatalogEntry& entry = catalog_entry(label);
  const SmithModel& model = class_model(label);
  const auto& adm = class_admissible(label);
  LineCount lc = line_counts(model, adm.front().chi);
  if (as_json) {
    json payload;
    payload["class"] = label;
    payload["eigen_type"] = entry.cls.eigen_type;
    payload["real_lines"] = lc.hyperbolic + lc.elliptic;
    payload["hyperbolic"] = lc.hyperbolic;
    payload["elliptic"] = lc.elliptic;
    payload["signed_sum"] = static_cast<long long>(lc.signed_sum);
    payload["admissible_chi_count"] = adm.size();
    payload["special_basis"] = json::array();
    for (const auto& r : adm.front().basis.roots())
      payload["special_basis"].push_back(vector_json(r.vec()));
    emit("lines", true, payload, true);
    return 0;
  }
  std::printf("class %s (eigen type %s)\n", label.c_str(), entry.cls.eigen_type.c_str());
  std::printf("real lines: %d  hyperbolic: %d  elliptic: %d  signed sum: %lld\n",
              lc.hyperbolic + lc.elliptic, lc.hyperbolic, lc.elliptic,
              static_cast<long long>(lc.signed_sum));
  std::printf("admissible quadratic functions: %zu\n", adm.size());
  std::printf("special basis:");
  for (const auto& r : adm.front().basis.roots())
    std::printf(" %s", to_string(r.vec()).c_str());
  std::printf("\n");
  return 0;
}

int cmd_verify(const std::string& group, bool as_json) {
  auto results = run_acceptance(group);
  bool ok = all_passed(results);
  if (as_json) {
    json payload;
    payload["group"] = group;
    payload["criteria"] = json::array();
    for (const auto& r : results) {
      json j;
      j["id"] = r.id;
      j["name"] = r.name;
      j["pass"] = r.pass;
      j["detail"] = r.detail;
      payload["criteria"].push_back(j);
    }
    emit("verify", ok, payload, true);
  } else {
    for (const auto& r : results)
      std::printf("[%s] %2d %-55s %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                  r.detail.c_str());
  }
  return ok ? 0 : 1;
}

int cmd_hasse(const std::string& type, bool emit_matching, bool as_json) {
  static const std::map<std::string, std::string> kWitness = {
      {"E8", "RP2+4T2"}, {"E7", "RP2+3T2"}, {"D6", "RP2+2T2"},
      {"D4", "RP2+Klein"}, {"A1", "RP2+3S2"}};
  auto it = kWitness.find(type);
  if (it == kWitness.end()) throw Error("unknown Hasse type: " + type);
  SimpleSystem s = simple_system(real_roots(catalog_entry(it->second).sigma));
  HassePoset poset = hasse_covers(s);
  json payload;
  payload["type"] = type;
  payload["nodes"] = json::array();
  for (const auto& n : poset.nodes) {
    json j;
    j["root"] = vector_json(n.root.vec());
    j["height"] = n.height;
    payload["nodes"].push_back(j);
  }
  payload["covers"] = json::array();
  for (const auto& [f, g] : poset.covers) payload["covers"].push_back({f, g});
  if (emit_matching) {
    Pairing p = pair_matching(s);
    payload["matching"] = json::array();
    for (const auto& [u, v] : p.pairs) payload["matching"].push_back({u, v});
  }
  if (as_json) {
    emit("hasse", true, payload, true);
    return 0;
  }
  std::printf("type %s: %zu positive roots, %zu covers, top height %d\n", type.c_str(),
              poset.nodes.size(), poset.covers.size(),
              poset.nodes.empty() ? 0 : poset.nodes.back().height);
  if (emit_matching) {
    Pairing p = pair_matching(s);
    std::printf("matching: %zu pairs\n", p.pairs.size());
    for (const auto& [u, v] : p.pairs)
      std::printf("  %s -- %s\n", to_string(poset.nodes[static_cast<size_t>(u)].root.vec()).c_str(),
                  to_string(poset.nodes[static_cast<size_t>(v)].root.vec()).c_str());
  }
  return 0;
}

int cmd_classify(const std::string& p2s, const std::string& p4s, const std::string& p6s,
                 bool as_json) {
  BinaryForm p2 = BinaryForm::parse(2, p2s);
  BinaryForm p4 = BinaryForm::parse(4, p4s);
  BinaryForm p6 = BinaryForm::parse(6, p6s);
  TritangentVerdict v = classify_tritangent(p2, p4, p6);
  if (as_json) {
    json payload;
    payload["side"] = to_string(v.side);
    payload["species"] = to_string(v.species);
    payload["resultant"] = rational_string(v.resultant_value);
    payload["real_tangencies"] = v.real_tangencies;
    payload["positive_real_tangencies"] = v.positive_real_tangencies;
    emit("tritangent classify", true, payload, true);
    return 0;
  }
  std::printf("side: %s\nspecies: %s\nresultant: %s\ntangencies: %d real, %d positive\n",
              to_string(v.side).c_str(), to_string(v.species).c_str(),
              rational_string(v.resultant_value).c_str(), v.real_tangencies,
              v.positive_real_tangencies);
  return 0;
}

int cmd_sextic(const std::string& coeffs, bool as_json) {
  TernarySextic s = TernarySextic::parse(coeffs);
  auto cone = symmetric_to_cone(s);
  if (as_json) {
    json payload;
    payload["p2"] = cone[0].str();
    payload["p4"] = cone[1].str();
    payload["p6"] = cone[2].str();
    emit("sextic symmetric", true, payload, true);
    return 0;
  }
  std::printf("p2: %s\np4: %s\np6: %s\n", cone[0].str().c_str(), cone[1].str().c_str(),
              cone[2].str().c_str());
  return 0;
}

int cmd_nodal(int k, bool as_json) {
  if (k < 0 || k > 8) throw Error("nodal: k must be between 0 and 8");
  // deterministic witness: a chain of k independent roots
  std::vector<Root> nodes;
  for (int i = 1; i <= std::min(k, 7); ++i) {
    LatticeVector v;
    v[i] = 1;
    v[i + 1] = -1;
    nodes.emplace_back(v);
  }
  if (k == 8) nodes.emplace_back(lattice_vector({1, -1, -1, -1, 0, 0, 0, 0, 0}));
  Z count = nodal_signed_count(nodes);
  if (as_json) {
    json payload;
    payload["k"] = k;
    payload["nodes"] = json::array();
    for (const auto& r : nodes) payload["nodes"].push_back(vector_json(r.vec()));
    payload["signed_count"] = static_cast<long long>(count);
    emit("nodal", true, payload, true);
    return 0;
  }
  std::printf("k = %d: signed count of real lines off the nodes = %lld\n", k,
              static_cast<long long>(count));
  return 0;
}

int cmd_table(const std::string& arrangement, bool as_json) {
  TritangentRow row = tritangent_table(arrangement);
  if (as_json) {
    json payload;
    payload["arrangement"] = arrangement;
    payload["total"] = row.total;
    payload["hyperbolic"] = row.hyperbolic;
    payload["elliptic"] = row.elliptic;
    emit("table", true, payload, true);
    return 0;
  }
  std::printf("%s: %d tritangent sections, %d hyperbolic, %d elliptic\n",
              arrangement.c_str(), row.total, row.hyperbolic, row.elliptic);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for real lines on degree-1 del Pezzo surfaces"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON report");

  auto* catalog_cmd = app.add_subcommand("catalog", "list the 11 deformation classes");

  auto* lines_cmd = app.add_subcommand("lines", "line counts for one class");
  std::string class_label;
  lines_cmd->add_option("--class", class_label, "deformation class label")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  bool g_tables = false, g_matching = false, g_pairs = false, g_tritangents = false,
       g_all = false;
  verify_cmd->add_flag("--tables", g_tables, "catalog and count data");
  verify_cmd->add_flag("--matching", g_matching, "Hasse pairing and cancelation");
  verify_cmd->add_flag("--pairs", g_pairs, "Bertini pair invariants");
  verify_cmd->add_flag("--tritangents", g_tritangents, "classifier and nodal counts");
  verify_cmd->add_flag("--all", g_all, "everything (default)");

  auto* hasse_cmd = app.add_subcommand("hasse", "positive-root poset of a type");
  std::string hasse_type;
  bool emit_matching = false;
  hasse_cmd->add_option("--type", hasse_type, "one of E8, E7, D6, D4, A1")->required();
  hasse_cmd->add_flag("--emit-matching", emit_matching, "include the pairing");

  auto* tritangent_cmd = app.add_subcommand("tritangent", "tritangent tools");
  auto* classify_cmd = tritangent_cmd->add_subcommand(
      "classify", "classify the section y = 0 of w^2 = y^3 + p2 y^2 + p4 y + p6");
  std::string p2s, p4s, p6s;
  classify_cmd->add_option("--p2", p2s, "3 rationals, descending powers of x0")->required();
  classify_cmd->add_option("--p4", p4s, "5 rationals")->required();
  classify_cmd->add_option("--p6", p6s, "7 rationals")->required();

  auto* sextic_cmd = app.add_subcommand("sextic", "plane sextic adapters");
  auto* symmetric_cmd =
      sextic_cmd->add_subcommand("symmetric", "cone model of a symmetric sextic");
  std::string sextic_coeffs;
  symmetric_cmd
      ->add_option("--coeffs", sextic_coeffs,
                   "28 rationals grouped by x2-power, descending x0 in each group")
      ->required();

  auto* nodal_cmd = app.add_subcommand("nodal", "signed count for a k-nodal surface");
  int nodal_k = 0;
  nodal_cmd->add_option("--k", nodal_k, "number of nodes (0..8)")->required();

  auto* table_cmd = app.add_subcommand("table", "tritangent counts per arrangement");
  std::string arrangement;
  table_cmd->add_option("--arrangement", arrangement, "<a|0> for a=0..4, <1|1>, <|||>")
      ->required();

  // --json is accepted before or after the subcommand
  for (auto* cmd : {catalog_cmd, lines_cmd, verify_cmd, hasse_cmd, classify_cmd,
                    symmetric_cmd, nodal_cmd, table_cmd})
    cmd->add_flag("--json", as_json, "emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command_name;
  if (*catalog_cmd) command_name = "catalog";
  if (*lines_cmd) command_name = "lines";
  if (*verify_cmd) command_name = "verify";
  if (*hasse_cmd) command_name = "hasse";
  if (*tritangent_cmd) command_name = *classify_cmd ? "tritangent classify" : "tritangent";
  if (*sextic_cmd) command_name = *symmetric_cmd ? "sextic symmetric" : "sextic";
  if (*nodal_cmd) command_name = "nodal";
  if (*table_cmd) command_name = "table";

  try {
    if (*catalog_cmd) return cmd_catalog(as_json);
    if (*lines_cmd) return cmd_lines(class_label, as_json);
    if (*verify_cmd) {
      std::string group = "all";
      if (g_tables) group = "tables";
      if (g_matching) group = "matching";
      if (g_pairs) group = "pairs";
      if (g_tritangents) group = "tritangents";
      if (g_all) group = "all";
      return cmd_verify(group, as_json);
    }
    if (*hasse_cmd) return cmd_hasse(hasse_type, emit_matching, as_json);
    if (*tritangent_cmd) {
      if (*classify_cmd) return cmd_classify(p2s, p4s, p6s, as_json);
      throw Error("tritangent needs a subcommand (classify)");
    }
    if (*sextic_cmd) {
      if (*symmetric_cmd) return cmd_sextic(sextic_coeffs, as_json);
      throw Error("sextic needs a subcommand (symmetric)");
    }
    if (*nodal_cmd) return cmd_nodal(nodal_k, as_json);
    if (*table_cmd) return cmd_table(arrangement, as_json);
  } catch (const Error& e) {
    if (as_json) {
      json payload;
      payload["error"] = e.what();
      emit(command_name, false, payload, true);
    } else {
      std::fprintf(stderr, "error: %s\n", e.what());
    }
    return 2;
  }
  return 2;
}
