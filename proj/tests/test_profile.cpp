#include "doctest.h"

#include <algorithm>

#include "tsglab/profile.hpp"

using namespace tsglab;

namespace {

FixedVertexProfile a4(int n2, int n3) {
  auto p = FixedVertexProfile::zero(GroupName::A4);
  p.n2 = n2;
  p.n3 = n3;
  return p;
}

FixedVertexProfile a5(int n2, int n3, int n5) {
  auto p = FixedVertexProfile::zero(GroupName::A5);
  p.n2 = n2;
  p.n3 = n3;
  p.n5 = n5;
  return p;
}

// Burnside residue written out by hand for each group.
int hand_residue(GroupName g, const FixedVertexProfile& p) {
  int weight = 0;
  switch (g) {
    case GroupName::A4: weight = 3 * p.n2 + 8 * p.n3; break;
    case GroupName::S4: weight = 3 * p.n2 + 6 * *p.n2p + 8 * p.n3 + 6 * *p.n4; break;
    case GroupName::A5: weight = 15 * p.n2 + 20 * p.n3 + 24 * *p.n5; break;
  }
  const int order = group_order(g);
  return ((-weight) % order + order) % order;
}

}  // namespace

TEST_CASE("rule lists") {
  const auto a4_rules = rule_set(GroupName::A4);
  CHECK(a4_rules.size() == 5);
  const auto a5_rules = rule_set(GroupName::A5);
  CHECK(std::any_of(a5_rules.begin(), a5_rules.end(), [](const LemmaRule& r) { return r.statement == "n_5 ≠ 2"; }));
  const auto s4_rules = rule_set(GroupName::S4);
  CHECK(std::any_of(s4_rules.begin(), s4_rules.end(), [](const LemmaRule& r) { return r.id == "n4zero"; }));
  for (const auto& rules : {a4_rules, a5_rules, s4_rules}) {
    for (const auto& r : rules) {
      CHECK_FALSE(r.id.empty());
      CHECK_FALSE(r.statement.empty());
      CHECK_FALSE(r.reason.empty());
    }
  }
  const std::vector<std::string> drop{"n5ne2"};
  CHECK(without_rules(a5_rules, drop).size() == a5_rules.size() - 1);
  const std::vector<std::string> bogus{"nope"};
  CHECK_THROWS_AS(without_rules(a5_rules, bogus), std::invalid_argument);
}

TEST_CASE("profile tables") {
  const auto a4_table = enumerate_profiles(GroupName::A4);
  const std::vector<FixedVertexProfile> a4_expected{a4(0, 0), a4(0, 1), a4(0, 2), a4(0, 3), a4(1, 1), a4(1, 2)};
  CHECK(a4_table == a4_expected);

  const auto a5_table = enumerate_profiles(GroupName::A5);
  const std::vector<FixedVertexProfile> a5_expected{a5(0, 0, 0), a5(0, 2, 0), a5(1, 1, 1), a5(1, 2, 0)};
  CHECK(a5_table == a5_expected);
  CHECK(std::find(a5_table.begin(), a5_table.end(), a5(0, 1, 0)) == a5_table.end());

  CHECK_THROWS_AS(enumerate_profiles(GroupName::S4), std::invalid_argument);
}

TEST_CASE("residues") {
  CHECK(residue_from_profile(GroupName::A4, a4(0, 1)) == 4);
  CHECK(residue_from_profile(GroupName::A4, a4(0, 0)) == 0);
  CHECK(residue_from_profile(GroupName::A4, a4(0, 3)) == 0);
  CHECK(residue_from_profile(GroupName::A5, a5(1, 1, 1)) == 1);
  CHECK(residue_from_profile(GroupName::A5, a5(1, 2, 0)) == 5);
  CHECK(residue_from_profile(GroupName::A5, a5(0, 2, 0)) == 20);

  // Whole box against the hand-written formulas.
  for (int n2 = 0; n2 <= 3; ++n2)
    for (int n3 = 0; n3 <= 3; ++n3) {
      CHECK(residue_from_profile(GroupName::A4, a4(n2, n3)) == hand_residue(GroupName::A4, a4(n2, n3)));
      for (int n5 = 0; n5 <= 3; ++n5)
        CHECK(residue_from_profile(GroupName::A5, a5(n2, n3, n5)) == hand_residue(GroupName::A5, a5(n2, n3, n5)));
    }
  auto s = FixedVertexProfile::zero(GroupName::S4);
  s.n2p = 2;
  s.n3 = 1;
  CHECK(residue_from_profile(GroupName::S4, s) == hand_residue(GroupName::S4, s));
}

TEST_CASE("admissible residue sets") {
  CHECK(admissible_residues(GroupName::A4) == CongruenceSet{12, {0, 1, 4, 5, 8}});
  CHECK(admissible_residues(GroupName::A5) == CongruenceSet{60, {0, 1, 5, 20}});
  CHECK(admissible_residues(GroupName::S4) == CongruenceSet{24, {0, 4, 8, 12, 20}});
  CHECK(admissible_residues(GroupName::S4).to_string() == "{0, 4, 8, 12, 20} (mod 24)");

  // A5 residues reduce into the A4 set.
  const auto a4_set = admissible_residues(GroupName::A4);
  for (int r : admissible_residues(GroupName::A5).residues) CHECK(a4_set.contains(r));
}

TEST_CASE("necessity verdicts") {
  CHECK_THROWS_AS(necessity_check(GroupName::A4, 3), std::domain_error);

  const auto s16 = necessity_check(GroupName::S4, 16);
  CHECK_FALSE(s16.admissible);
  REQUIRE(s16.violated_rule);
  CHECK(s16.violated_rule->statement == "m ≢ 16 (mod 24)");
  for (long m : {7L, 21L}) {
    const auto v = necessity_check(GroupName::S4, m);
    CHECK_FALSE(v.admissible);
    REQUIRE(v.violated_rule);
    CHECK(v.violated_rule->id == "m-0mod4");
  }

  const auto a16 = necessity_check(GroupName::A4, 16);
  CHECK(a16.admissible);
  CHECK(a16.witnesses.size() == 1);
  CHECK_FALSE(a16.violated_rule);

  const auto a65 = necessity_check(GroupName::A5, 65);
  CHECK(a65.admissible);
  REQUIRE(a65.witnesses.size() == 1);
  auto w = a5(1, 2, 0);
  w.n1 = 65;
  CHECK(a65.witnesses[0] == w);

  for (long m : {7L, 11L}) {
    const auto v = necessity_check(GroupName::A4, m);
    CHECK_FALSE(v.admissible);
    REQUIRE(v.violated_rule);
    CHECK(v.violated_rule->id == "cap-inv2");
    CHECK(v.reason.find("is not in {0, 1, 4, 5, 8} (mod 12)") != std::string::npos);
  }
  const auto a25 = necessity_check(GroupName::A5, 25);
  CHECK_FALSE(a25.admissible);
  REQUIRE(a25.violated_rule);
  CHECK(a25.violated_rule->id == "single-fix-global");
  CHECK(a25.reason.find("is not in {0, 1, 5, 20} (mod 60)") != std::string::npos);

  // Consistency with the residue sets over two full periods.
  for (GroupName g : {GroupName::A4, GroupName::S4, GroupName::A5}) {
    const auto set = admissible_residues(g);
    for (long m = 4; m < 4 + 2 * set.modulus; ++m) {
      const auto v = necessity_check(g, m);
      CHECK(v.admissible == set.contains(m));
      CHECK(v.admissible == !v.witnesses.empty());
      CHECK(v.admissible != v.violated_rule.has_value());
    }
  }
}

TEST_CASE("profile validation") {
  CHECK_NOTHROW(a4(1, 2).validate());
  CHECK_THROWS_AS(a4(3, 0).validate(), std::domain_error);
  CHECK_THROWS_AS(a4(0, 4).validate(), std::domain_error);
  auto bad = a4(0, 0);
  bad.n5 = 0;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
  CHECK(a4(1, 2).to_string() == "(n2, n3) = (1, 2)");
}
