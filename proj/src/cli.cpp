#include "tsglab/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "tsglab/certificate.hpp"

namespace tsglab {

namespace {

std::string residue_list(const std::set<int>& residues) {
  std::string out;
  for (int r : residues) out += (out.empty() ? "" : " ") + std::to_string(r);
  return out;
}

std::string column_name(const ClassLabel& label) {
  if (label.order == 2) return label.in_even_subgroup ? "n2" : "n2'";
  return "n" + std::to_string(label.order);
}

}  // namespace

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TSGLAB_SEED")) {
    try {
      std::size_t used = 0;
      const auto seed = std::stoull(env, &used);
      if (used == std::string(env).size()) return seed;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

int cmd_classify(GroupName group, long m, std::ostream& out) {
  Verdict v;
  try {
    v = necessity_check(group, m);
  } catch (const std::domain_error& e) {
    out << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  out << to_string(group) << ", m = " << m << ": " << (v.admissible ? "admissible" : "inadmissible") << "\n";
  out << "  " << v.reason << "\n";
  if (!v.admissible) {
    out << "  violated rule [" << v.violated_rule->id << "]: " << v.violated_rule->statement << "\n";
    out << "  because " << v.violated_rule->reason << "\n";
    return kExitInadmissible;
  }
  for (const auto& w : v.witnesses) out << "  witness " << w.to_string() << "\n";
  const OrbitPlan p = plan(group, m);
  out << "  plan " << p.to_string() << "\n";
  if (p.knotted()) out << "  note: knotted construction; geometry is out of scope, realize exits 4\n";
  return kExitOk;
}

int cmd_table(GroupName group, std::ostream& out) {
  const int order = group_order(group);
  if (group == GroupName::S4) {
    out << "step,rule,statement,residues mod 24\n";
    std::set<int> current;
    const auto a4 = admissible_residues(GroupName::A4);
    for (int r = 0; r < order; ++r)
      if (a4.contains(r)) current.insert(r);
    int step = 1;
    out << step++ << ",a4-subgroup,m mod 12 in {" << residue_list(a4.residues) << "}," << residue_list(current) << "\n";
    for (const auto& rule : rule_set(GroupName::S4)) {
      if (rule.id != "n4zero" && rule.kind != RuleKind::Congruence) continue;
      std::set<int> kept;
      for (int r : current) {
        FixedVertexProfile probe = FixedVertexProfile::zero(group);
        probe.n1 = r;
        if (rule.holds(probe)) kept.insert(r);
      }
      current = kept;
      out << step++ << "," << rule.id << "," << rule.statement << "," << residue_list(current) << "\n";
    }
    return kExitOk;
  }

  // Rows differing only in n3 with the same residue share a line.
  const auto profiles = enumerate_profiles(group);
  const auto& header = profiles.front().entries();
  for (const auto& [label, value] : header) out << column_name(label) << ",";
  out << "m mod " << order << "\n";
  std::vector<std::pair<std::vector<std::string>, int>> rows;
  std::map<std::pair<std::vector<int>, int>, std::size_t> merged;
  for (const auto& p : profiles) {
    std::vector<std::string> cells;
    std::vector<int> key;
    std::size_t n3_index = 0;
    const auto entries = p.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      cells.push_back(std::to_string(entries[i].second));
      if (entries[i].first.order == 3) {
        n3_index = i;
        key.push_back(-1);
      } else {
        key.push_back(entries[i].second);
      }
    }
    const int residue = residue_from_profile(group, p);
    auto [it, inserted] = merged.emplace(std::make_pair(key, residue), rows.size());
    if (inserted) {
      rows.emplace_back(cells, residue);
    } else {
      rows[it->second].first[n3_index] += " or " + cells[n3_index];
    }
  }
  for (const auto& [cells, residue] : rows) {
    for (const auto& c : cells) out << c << ",";
    out << residue << "\n";
  }
  return kExitOk;
}

int cmd_realize(GroupName group, long m, const std::string& out_path, const ModelParams& params, std::ostream& out) {
  OrbitPlan p;
  try {
    p = plan(group, m);
  } catch (const NotAdmissible& e) {
    out << "inadmissible: " << e.what() << "\n";
    return kExitInadmissible;
  } catch (const std::domain_error& e) {
    out << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (p.knotted()) {
    out << "plan " << p.to_string() << " needs a knotted construction whose geometry is out of scope\n";
    return kExitKnotted;
  }
  const VertexAction a = build(p);
  RealizedVertices r;
  try {
    r = realize(a, params);
  } catch (const std::invalid_argument& e) {
    out << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterCollision& e) {
    out << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const HypothesisReport report = full_report(a.action, r);
  if (!report.passed()) {
    out << "realization of " << p.to_string() << " failed its own checks; nothing written\n";
    return kExitCheckFailed;
  }
  write_atomically(out_path, realization_json(a, r, report).dump(1) + "\n");
  out << "wrote " << out_path << ": " << p.to_string() << ", " << m << " vertices, "
      << (report.arcs ? report.arcs->arcs.size() : 0) << " arcs\n";
  return kExitOk;
}

int cmd_verify(const std::string& in_path, std::ostream& out) {
  std::ifstream in(in_path);
  if (!in) {
    out << "error: cannot read " << in_path << "\n";
    return kExitUsage;
  }
  VerifyResult result;
  try {
    result = verify_realization(Json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    out << "schema: not JSON (" << e.what() << ")\n";
    return kExitUsage;
  } catch (const SchemaError& e) {
    out << "schema: " << e.what() << "\n";
    return kExitUsage;
  }
  for (const auto& c : result.checks) out << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
  if (!result.ok()) {
    out << "first failing invariant: " << result.failed() << "\n";
    return kExitCheckFailed;
  }
  out << "certificate verified\n";
  return kExitOk;
}

int cmd_oracle(GroupName group, const OracleOptions& options, std::ostream& out) {
  CongruenceSet oracle;
  try {
    oracle = oracle_residues(group, options);
  } catch (const std::invalid_argument& e) {
    out << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    out << "oracle: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  const CongruenceSet engine = admissible_residues(group);
  out << to_string(group) << "\n";
  out << "oracle residues: " << oracle.to_string() << "\n";
  out << "engine residues: " << engine.to_string() << "\n";
  if (!options.dropped_rules.empty()) {
    out << "dropped rules:";
    for (const auto& id : options.dropped_rules) out << " " << id;
    out << "\n";
  }
  out << "types:";
  for (const auto& t : admissible_types(group, options)) out << " " << t.degree;
  out << "\n";
  const bool equal = oracle == engine;
  out << (equal ? "agree" : "DISAGREE") << "\n";
  return equal ? kExitOk : kExitCheckFailed;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polyhedral symmetry groups of complete graphs in S^3: classify, tabulate, realize, verify"};
  app.require_subcommand(1);

  auto add_group = [](CLI::App* sub, std::string& target) {
    sub->add_option("--group,-g", target, "A4, S4 or A5")->required()->check(CLI::IsMember({"A4", "S4", "A5"}));
  };

  std::string group_text;
  long m = 0;
  auto* classify = app.add_subcommand("classify", "necessity verdict for K_m");
  add_group(classify, group_text);
  classify->add_option("--m,-m", m, "number of vertices")->required();

  auto* table = app.add_subcommand("table", "profile table (A4, A5) or congruence chain (S4) as CSV");
  add_group(table, group_text);

  std::string out_path;
  ModelParams params;
  params.seed = default_seed();
  auto* realize_cmd = app.add_subcommand("realize", "build and certify an embedding of the vertex set");
  add_group(realize_cmd, group_text);
  realize_cmd->add_option("--m,-m", m, "number of vertices")->required();
  realize_cmd->add_option("--out,-o", out_path, "certificate path")->required();
  realize_cmd->add_option("--seed", params.seed, "free-orbit placement seed (default $TSGLAB_SEED or 1)");
  realize_cmd->add_option("--theta", params.theta, "latitude of the V8 copies, in (0, pi/2)");
  realize_cmd->add_option("--t", params.t, "edge parameter, in (0, 1/2)");

  std::string in_path;
  auto* verify = app.add_subcommand("verify", "re-check a certificate");
  verify->add_option("path", in_path, "certificate path")->required();

  OracleOptions oracle_options;
  long max_m = 0;
  auto* oracle = app.add_subcommand("oracle", "brute-force residue derivation compared with the rule engine");
  add_group(oracle, group_text);
  oracle->add_option("--drop-rule", oracle_options.dropped_rules, "remove a rule by id (repeatable)");
  auto* max_m_opt = oracle->add_option("--max-m", max_m, "exclusive upper end of the m window (>= |G|)");
  oracle->add_flag("--with-congruence-rules", oracle_options.with_congruence_rules,
                   "also apply the rules that constrain m directly");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, help);
    (code == 0 ? out : err) << help.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(in_path, out);
    const GroupName group = parse_group_name(group_text);
    if (*classify) return cmd_classify(group, m, out);
    if (*table) return cmd_table(group, out);
    if (*realize_cmd) return cmd_realize(group, m, out_path, params, out);
    if (*oracle) {
      if (*max_m_opt) oracle_options.max_m = max_m;
      return cmd_oracle(group, oracle_options, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tsglab
