// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "tsglab/certificate.hpp"
#include "tsglab/cli.hpp"
#include "tsglab/edges.hpp"

using namespace tsglab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

bool report(const char* id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.pass && limit_s > 0 && s >= limit_s) o.fail("runtime over limit");
  char limit[32] = "no limit";
  if (limit_s > 0) std::snprintf(limit, sizeof limit, "limit %.0f s", limit_s);
  std::printf("%s %s %s (%.2f s, %s)%s%s\n", id, o.pass ? "PASS" : "FAIL", title, s, limit,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  return o.pass;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CongruenceSet residues(int modulus, std::set<int> r) { return {modulus, std::move(r)}; }

const std::map<GroupName, CongruenceSet>& expected_residues() {
  static const std::map<GroupName, CongruenceSet> e{
      {GroupName::A4, residues(12, {0, 1, 4, 5, 8})},
      {GroupName::A5, residues(60, {0, 1, 5, 20})},
      {GroupName::S4, residues(24, {0, 4, 8, 12, 20})},
  };
  return e;
}

// Table rows keyed by residue: allowed (n2, n3[, n5]).
bool in_table(const FixedVertexProfile& p, long m) {
  using Row = std::vector<int>;
  static const std::multimap<int, Row> a4{{0, {0, 0}}, {0, {0, 3}}, {4, {0, 1}}, {8, {0, 2}}, {1, {1, 1}}, {5, {1, 2}}};
  static const std::multimap<int, Row> a5{{0, {0, 0, 0}}, {20, {0, 2, 0}}, {1, {1, 1, 1}}, {5, {1, 2, 0}}};
  if (p.group == GroupName::A4) {
    const auto [lo, hi] = a4.equal_range(static_cast<int>(m % 12));
    return std::any_of(lo, hi, [&](const auto& kv) { return kv.second == Row{p.n2, p.n3}; });
  }
  if (p.group == GroupName::A5) {
    const auto [lo, hi] = a5.equal_range(static_cast<int>(m % 60));
    return std::any_of(lo, hi, [&](const auto& kv) { return kv.second == Row{p.n2, p.n3, p.n5.value_or(-1)}; });
  }
  return false;
}

struct Ref {
  GroupName group;
  long m;
};

const Ref kReferences[] = {
    {GroupName::S4, 24}, {GroupName::S4, 4},  {GroupName::S4, 8},  {GroupName::S4, 12}, {GroupName::S4, 20},
    {GroupName::S4, 28}, {GroupName::A5, 60}, {GroupName::A5, 61}, {GroupName::A5, 5},  {GroupName::A5, 20},
    {GroupName::A5, 80}, {GroupName::A4, 16}, {GroupName::A4, 13}, {GroupName::A4, 17},
};

std::string label(GroupName g, long m) { return std::string(to_string(g)) + " m=" + std::to_string(m); }

void ac1(Outcome& o) {
  for (const char* g : {"A4", "A5", "S4"}) {
    std::ostringstream out;
    cmd_table(parse_group_name(g), out);
    const auto golden = slurp(std::filesystem::path(TSGLAB_FIXTURES) / (std::string("table_") + g + ".csv"));
    if (out.str() != golden) o.fail(std::string("table mismatch for ") + g);
  }
  for (const auto& [g, want] : expected_residues())
    if (admissible_residues(g) != want) o.fail(std::string(to_string(g)) + " residues " + admissible_residues(g).to_string());
  if (o.pass) o.detail = "3 tables byte-identical, residue sets exact";
}

void ac2(Outcome& o) {
  for (const auto& [g, want] : expected_residues()) {
    OracleOptions profile_only;
    profile_only.with_congruence_rules = false;
    const auto got = oracle_residues(g, profile_only);
    if (got != want) o.fail(std::string(to_string(g)) + " oracle gives " + got.to_string());
  }
  for (const auto& rule : profile_rules(GroupName::S4))
    if (rule.kind != RuleKind::Profile) o.fail("profile rule set contains " + rule.id);
  if (o.pass) o.detail = "window [0, 3|G|), S4 from profile caps only";
}

void ac3(Outcome& o) {
  int count = 0, restricted = 0;
  for (GroupName g : {GroupName::A4, GroupName::S4, GroupName::A5}) {
    for (long m = 4; m <= 184; ++m) {
      const Verdict v = necessity_check(g, m);
      if (v.admissible != expected_residues().at(g).contains(m)) o.fail("verdict disagrees at " + label(g, m));
      if (!v.admissible) continue;
      const OrbitPlan p = plan(g, m);
      if (p.knotted()) continue;
      const VertexAction a = build(p);
      ++count;
      if (a.m() != m || !is_faithful(a.action)) o.fail("not faithful at " + label(g, m));
      const auto profile = measured_profile(a);
      const bool witnessed = g == GroupName::S4
                                 ? std::find(v.witnesses.begin(), v.witnesses.end(), profile) != v.witnesses.end()
                                 : in_table(profile, m);
      if (!witnessed) o.fail("profile " + profile.to_string() + " not a witness at " + label(g, m));
      if (burnside_orbit_count(a.built) != p.orbit_count() || orbit_count(a.built) != p.orbit_count())
        o.fail("orbit count at " + label(g, m));
      if (p.restriction != Restriction::None) {
        ++restricted;
        if (!has_free_edge(a)) o.fail("no free edge at " + label(g, m));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " constructions, " + std::to_string(restricted) + " restrictions";
}

void ac4(Outcome& o) {
  double hom = 0, inv = 0;
  for (const auto& ref : kReferences) {
    const auto a = build(plan(ref.group, ref.m));
    const auto r = realize(a);
    const auto& group = *a.action.group;
    hom = std::max(hom, homomorphism_error(group, r.rep));
    inv = std::max(inv, invariance_error(a.action, r));
    if (geometric_profile(a.action, r) != measured_profile(a)) o.fail("profile mismatch at " + label(ref.group, ref.m));
    for (ElementId e = 1; e < group.order(); ++e) {
      const int order = group.element(e).order();
      const bool expect_empty = (r.model == ModelTag::TETRA_FULL_S4 && order == 4) ||
                                (r.model == ModelTag::SIMPLEX4_A5 && order == 5);
      if (r.circles[e].empty != expect_empty) o.fail("fixed-set dichotomy at " + label(ref.group, ref.m));
    }
  }
  if (hom > 1e-8) o.fail("homomorphism error " + std::to_string(hom));
  if (inv > 1e-9) o.fail("invariance error " + std::to_string(inv));
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "14 realizations, max hom %.1e, max inv %.1e", hom, inv);
    o.detail = buf;
  }
}

void ac5(Outcome& o) {
  for (const auto& ref : kReferences) {
    const auto a = build(plan(ref.group, ref.m));
    const auto r = realize(a);
    const auto rep = full_report(a.action, r);
    if (!rep.passed() || !rep.arcs) o.fail("report fails at " + label(ref.group, ref.m));
  }

  {  // vertex moved onto the circle of an element that does not fix it
    const auto a = build(plan(GroupName::S4, 8));
    auto r = realize(a);
    ElementId wrong = 1;
    while (a.action[wrong](0) == 0 || r.circles[wrong].empty) ++wrong;
    r.coords[0] = r.circles[wrong].u;
    if (full_report(a.action, r).passed()) o.fail("wrong-circle fixture accepted");
  }
  {  // edge parameter pushed onto the midpoint
    const auto a = build(plan(GroupName::S4, 12));
    bool rejected = false;
    try {
      realize(a, {std::numbers::pi / 6, 0.5, 1});
    } catch (const ParameterCollision&) {
      rejected = true;
    }
    if (!rejected) o.fail("t = 1/2 accepted");
  }
  {  // a double transposition fixing three extra points
    auto a4 = standard_group(GroupName::A4);
    const GroupAction fixed{a4, 3, std::vector<Permutation>(static_cast<std::size_t>(a4->order()), Permutation::identity(3))};
    const auto action = direct_sum(std::vector<GroupAction>{natural_action(a4), fixed});
    RealizedVertices r;
    r.model = ModelTag::TETRA_ROT_A4;
    r.rep = representation(*a4, ModelTag::TETRA_ROT_A4);
    r.circles.resize(r.rep.size());
    for (ElementId e = 1; e < a4->order(); ++e) r.circles[e] = fixed_set(r.rep[e]);
    for (int i = 0; i < 4; ++i) r.coords.push_back(simplex_corner(4, i));
    for (int i = 0; i < 3; ++i) r.coords.push_back(Vec4::UnitW());
    const auto rep = full_report(action, r);
    if (rep.passed() || rep.h4.pass) o.fail("interchanger-fixes-3 fixture accepted");
  }
  if (o.pass) o.detail = "14 certificates pass h1-h5, 3 corrupted fixtures rejected";
}

void ac6(Outcome& o) {
  struct Case {
    GroupName group;
    long m;
    std::string rule_id;  // empty: residue-not-in-set citation
  };
  const Case cases[] = {
      {GroupName::S4, 7, "m-0mod4"}, {GroupName::S4, 16, "m-not16mod24"}, {GroupName::S4, 21, "m-0mod4"},
      {GroupName::A4, 7, ""},        {GroupName::A4, 11, ""},             {GroupName::A5, 25, ""},
  };
  for (const auto& c : cases) {
    const Verdict v = necessity_check(c.group, c.m);
    std::ostringstream out;
    const int code = cmd_classify(c.group, c.m, out);
    if (v.admissible || code != kExitInadmissible || !v.violated_rule) {
      o.fail("not rejected: " + label(c.group, c.m));
      continue;
    }
    const auto set = admissible_residues(c.group);
    const auto r = std::to_string(c.m % set.modulus);
    if (!c.rule_id.empty()) {
      if (v.violated_rule->id != c.rule_id) o.fail("cites " + v.violated_rule->id + " at " + label(c.group, c.m));
    } else if (v.reason.find("m ≡ " + r + " (mod " + std::to_string(set.modulus) + ") is not in") == std::string::npos) {
      o.fail("reason lacks the residue citation at " + label(c.group, c.m));
    }
  }
  if (necessity_check(GroupName::S4, 16).violated_rule->statement != "m ≢ 16 (mod 24)") o.fail("S4 16 statement");
  if (o.pass) o.detail = "S4 7/16/21, A4 7/11, A5 25 rejected with the expected citations";
}

}  // namespace

int main() {
  bool all = true;
  all &= report("AC1", "table reproduction", 1, ac1);
  all &= report("AC2", "oracle equivalence", 60, ac2);
  all &= report("AC3", "construction soundness", 30, ac3);
  all &= report("AC4", "geometric fidelity", 10, ac4);
  all &= report("AC5", "edge-hypothesis certificates", 10, ac5);
  all &= report("AC6", "negative classification", 0, ac6);
  return all ? 0 : 1;
}
