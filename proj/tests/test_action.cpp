#include "doctest.h"

#include <algorithm>

#include "tsglab/action.hpp"

using namespace tsglab;

namespace {

FixedVertexProfile expect(GroupName g, long m, int n2, int n3, std::optional<int> n2p = {}, std::optional<int> n4 = {},
                          std::optional<int> n5 = {}) {
  FixedVertexProfile p = FixedVertexProfile::zero(g);
  p.n1 = m;
  p.n2 = n2;
  p.n3 = n3;
  if (n2p) p.n2p = n2p;
  if (n4) p.n4 = n4;
  if (n5) p.n5 = n5;
  return p;
}

}  // namespace

TEST_CASE("plans follow the residue of m") {
  const auto s52 = plan(GroupName::S4, 52);
  CHECK(s52.parts == std::vector<PlanPart>{{PartKind::Free, 2, {}}, {PartKind::V4, 1, {}}});
  CHECK(s52.model == ModelTag::TETRA_FULL_S4);
  CHECK(plan(GroupName::S4, 4).parts == std::vector<PlanPart>{{PartKind::V4, 1, {}}});

  const auto a80 = plan(GroupName::A5, 80);
  CHECK(a80.parts == std::vector<PlanPart>{{PartKind::Free, 1, {}}, {PartKind::W20, 1, {}}});

  const auto a16 = plan(GroupName::A4, 16);
  CHECK(a16.parts == std::vector<PlanPart>{{PartKind::Free, 1, {}}, {PartKind::V4, 1, {}}});
  CHECK(a16.model == ModelTag::TETRA_ROT_A4);
  CHECK(a16.restriction == Restriction::None);

  const auto a5 = plan(GroupName::A4, 5);
  CHECK(a5.knotted());
  CHECK(a5.parts[0].knot_tag == "m5");
  CHECK(plan(GroupName::A4, 4).parts[0].knot_tag == "m4");

  CHECK(plan(GroupName::A4, 8).restriction == Restriction::A4_of_S4);
  CHECK(plan(GroupName::A4, 61).restriction == Restriction::A4_of_A5);
  CHECK(plan(GroupName::A4, 65).restriction == Restriction::A4_of_A5);
  CHECK(plan(GroupName::A4, 13).restriction == Restriction::None);
  CHECK(plan(GroupName::A4, 17).parts.size() == 3);

  CHECK_THROWS_AS(plan(GroupName::S4, 16), NotAdmissible);
  CHECK_THROWS_AS(plan(GroupName::A4, 7), NotAdmissible);
  CHECK_THROWS_AS(plan(GroupName::A4, 3), std::domain_error);
}

TEST_CASE("measured profiles") {
  CHECK(measured_profile(build(plan(GroupName::S4, 4))) == expect(GroupName::S4, 4, 0, 1, 2, 0));
  CHECK(measured_profile(build(plan(GroupName::S4, 8))) == expect(GroupName::S4, 8, 0, 2, 0, 0));
  CHECK(measured_profile(build(plan(GroupName::A5, 5))) == expect(GroupName::A5, 5, 1, 2, {}, {}, 0));
  CHECK(measured_profile(build(plan(GroupName::A5, 61))) == expect(GroupName::A5, 61, 1, 1, {}, {}, 1));
  CHECK(measured_profile(build(plan(GroupName::A4, 13))) == expect(GroupName::A4, 13, 1, 1));
  CHECK(measured_profile(build(plan(GroupName::S4, 24))) == expect(GroupName::S4, 24, 0, 0, 0, 0));
}

TEST_CASE("free edges") {
  CHECK(has_free_edge(build(plan(GroupName::S4, 8))));
  CHECK(has_free_edge(build(plan(GroupName::A4, 8))));
  CHECK(has_free_edge(build(plan(GroupName::S4, 28))));
  CHECK(has_free_edge(build(plan(GroupName::A4, 4))));  // point stabilizers are 3-cycle groups meeting trivially
}

TEST_CASE("restricted plans use the chosen A4 subgroups") {
  auto a5 = standard_group(GroupName::A5);
  const auto sub = a4_in_a5();
  CHECK(sub.size() == 12);
  for (ElementId e : sub) CHECK(a5->element(e)(4) == 4);
  CHECK(a4_in_s4().size() == 12);
  const auto built = build(plan(GroupName::A4, 65));
  CHECK(built.action.group->order() == 12);
  CHECK(built.built.group->order() == 60);
  CHECK(measured_profile(built) == expect(GroupName::A4, 65, 1, 2));
}

TEST_CASE("every admissible construction up to 184") {
  for (GroupName g : {GroupName::A4, GroupName::S4, GroupName::A5}) {
    for (long m = 4; m <= 184; ++m) {
      const Verdict v = necessity_check(g, m);
      if (!v.admissible) continue;
      const OrbitPlan p = plan(g, m);
      const VertexAction a = build(p);
      CAPTURE(p.to_string());
      CHECK(a.m() == m);
      CHECK(is_faithful(a.action));
      const auto profile = measured_profile(a);
      CHECK(std::find(v.witnesses.begin(), v.witnesses.end(), profile) != v.witnesses.end());
      CHECK(burnside_orbit_count(a.built) == p.orbit_count());
      CHECK(orbit_count(a.built) == p.orbit_count());
      if (p.restriction != Restriction::None) {
        CHECK(has_free_edge(a));
        CHECK(first_violation(rule_set(GroupName::A4), profile) == nullptr);
      }
    }
  }
}
