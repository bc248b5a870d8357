#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "tsglab/perm.hpp"

using namespace tsglab;

namespace {

// Independent fixed-count oracle: g fixes the coset xH iff x⁻¹gx ∈ H.
int fixed_cosets_by_enumeration(const PermGroup& g, const ElementSet& h, ElementId e) {
  int fixed = 0;
  for (ElementId x = 0; x < g.order(); ++x) {
    const ElementId c = g.multiply(g.multiply(g.inverse(x), e), x);
    if (std::binary_search(h.begin(), h.end(), c)) ++fixed;
  }
  return fixed / static_cast<int>(h.size());
}

ElementSet subgroup_by_cycles(const PermGroup& g, const std::vector<std::vector<std::vector<int>>>& gens) {
  std::vector<ElementId> ids;
  for (const auto& cycles : gens) ids.push_back(g.find(Permutation::from_cycles(g.degree(), cycles)));
  return g.closure(ids);
}

}  // namespace

TEST_CASE("permutation basics") {
  const auto a = Permutation::from_cycles(4, {{0, 1, 2}});
  const auto b = Permutation::from_cycles(4, {{0, 1}});
  CHECK((a * b)(0) == a(b(0)));
  CHECK(a.order() == 3);
  CHECK(a.is_even());
  CHECK_FALSE(b.is_even());
  CHECK((a * a.inverse()).is_identity());
  CHECK(b.fixed_points() == 2);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK(a.cycle_string() == "(0 1 2)");
}

TEST_CASE("standard groups have the expected class sizes") {
  auto sizes = [](GroupName name) {
    auto g = standard_group(name);
    std::map<ClassLabel, int> out;
    for (ElementId e = 0; e < g->order(); ++e) ++out[g->class_of(e)];
    return out;
  };
  const auto a4 = sizes(GroupName::A4);
  CHECK(a4.at({1, true}) == 1);
  CHECK(a4.at({2, true}) == 3);
  CHECK(a4.at({3, true}) == 8);

  const auto s4 = sizes(GroupName::S4);
  CHECK(s4.size() == 5);
  CHECK(s4.at({2, true}) == 3);
  CHECK(s4.at({2, false}) == 6);
  CHECK(s4.at({3, true}) == 8);
  CHECK(s4.at({4, false}) == 6);

  const auto a5 = sizes(GroupName::A5);
  CHECK(a5.at({2, true}) == 15);
  CHECK(a5.at({3, true}) == 20);
  CHECK(a5.at({5, true}) == 24);

  for (GroupName name : {GroupName::A4, GroupName::S4, GroupName::A5}) {
    auto g = standard_group(name);
    CHECK(g->order() == group_order(name));
    CHECK(g->element(0).is_identity());
    for (ElementId x = 0; x < g->order(); ++x) {
      CHECK(g->multiply(x, g->inverse(x)) == 0);
      for (ElementId y = 0; y < g->order(); ++y) {
        REQUIRE(g->element(g->multiply(x, y)) == g->element(x) * g->element(y));
      }
    }
  }
}

TEST_CASE("subgroup classes agree with exhaustive subset search on A4") {
  auto g = standard_group(GroupName::A4);
  // Every subset containing the identity, tested for closure.
  std::vector<ElementSet> all;
  for (unsigned mask = 0; mask < (1u << 11); ++mask) {
    ElementSet s{0};
    for (int i = 0; i < 11; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    if (g->is_subgroup(s)) all.push_back(s);
  }
  CHECK(all.size() == 10);  // 1, three D1, four Z3, V4, A4
  std::set<ElementSet> classes;
  for (const auto& s : all) {
    ElementSet canonical = s;
    for (ElementId x = 0; x < g->order(); ++x) canonical = std::min(canonical, g->conjugate_set(s, x));
    classes.insert(canonical);
  }
  const auto reps = subgroups_up_to_conjugacy(*g);
  CHECK(reps.size() == classes.size());
  std::multiset<std::size_t> orders;
  for (const auto& r : reps) orders.insert(r.size());
  CHECK(orders == std::multiset<std::size_t>{1, 2, 3, 4, 12});
}

TEST_CASE("subgroup classes of S4 and A5") {
  auto s4 = standard_group(GroupName::S4);
  const auto reps = subgroups_up_to_conjugacy(*s4);
  CHECK(reps.size() == 11);
  CHECK(std::count_if(reps.begin(), reps.end(), [](const ElementSet& s) { return s.size() == 2; }) == 2);

  auto a5 = standard_group(GroupName::A5);
  const auto a5_reps = subgroups_up_to_conjugacy(*a5);
  CHECK(a5_reps.size() == 9);
  CHECK(std::any_of(a5_reps.begin(), a5_reps.end(), [](const ElementSet& s) { return s.size() == 12; }));
}

TEST_CASE("coset actions") {
  auto s4 = standard_group(GroupName::S4);
  const ElementSet point_stab = subgroup_by_cycles(*s4, {{{0, 1, 2}}, {{0, 1}}});
  CHECK(point_stab.size() == 6);
  const auto natural = coset_action(s4, point_stab);
  CHECK(natural.m == 4);
  CHECK(burnside_orbit_count(natural) == 1);
  CHECK(is_faithful(natural));

  const ElementSet c3 = subgroup_by_cycles(*s4, {{{0, 1, 2}}});
  const auto v8 = coset_action(s4, c3);
  CHECK(v8.m == 8);
  for (ElementId e = 0; e < s4->order(); ++e) {
    CHECK(fixed_count(v8, e) == fixed_cosets_by_enumeration(*s4, c3, e));
  }
  const ElementId three_cycle = s4->find(Permutation::from_cycles(4, {{0, 1, 2}}));
  CHECK(fixed_count(v8, three_cycle) == 2);
  std::vector<int> fixed;
  for (int v = 0; v < v8.m; ++v)
    if (v8[three_cycle](v) == v) fixed.push_back(v);
  REQUIRE(fixed.size() == 2);
  CHECK(pair_stabilizer(v8, fixed[0], fixed[1]) == c3);

  auto a5 = standard_group(GroupName::A5);
  const ElementSet a5c3 = subgroup_by_cycles(*a5, {{{0, 1, 2}}});
  const auto w20 = coset_action(a5, a5c3);
  CHECK(w20.m == 20);
  CHECK(burnside_orbit_count(w20) == 1);
  int total = 0;
  for (ElementId e = 0; e < a5->order(); ++e) total += fixed_count(w20, e);
  CHECK(total == 60);

  CHECK_THROWS_AS(coset_action(s4, ElementSet{0, three_cycle}), std::invalid_argument);
}

TEST_CASE("faithfulness and orbit counts") {
  auto s4 = standard_group(GroupName::S4);
  const auto regular = coset_action(s4, ElementSet{0});
  CHECK(is_faithful(regular));
  CHECK(pair_stabilizer(regular, 0, 1) == ElementSet{0});

  // S4 acting on 3 points through the quotient by its normal V4, i.e. on
  // cosets of a dihedral subgroup of order 8.
  const ElementSet d8 = subgroup_by_cycles(*s4, {{{0, 1, 2, 3}}, {{0, 2}}});
  CHECK(d8.size() == 8);
  const auto quotient = coset_action(s4, d8);
  CHECK(quotient.m == 3);
  CHECK_FALSE(is_faithful(quotient));

  const std::vector<GroupAction> parts{regular, regular};
  const auto doubled = direct_sum(parts);
  CHECK(doubled.m == 48);
  CHECK(burnside_orbit_count(doubled) == 2);
  CHECK(orbit_count(doubled) == 2);
  check_homomorphism(doubled);

  auto a5 = standard_group(GroupName::A5);
  const auto nat5 = natural_action(a5);
  CHECK(burnside_orbit_count(nat5) == 1);
  CHECK(pair_stabilizer(nat5, 3, 4) == subgroup_by_cycles(*a5, {{{0, 1, 2}}}));
  CHECK_THROWS_AS(pair_stabilizer(nat5, 2, 2), std::invalid_argument);
  CHECK(fixed_count(nat5, 0) == 5);
}

TEST_CASE("homomorphism holds on random products") {
  auto a5 = standard_group(GroupName::A5);
  const auto w = coset_action(a5, subgroup_by_cycles(*a5, {{{0, 1}, {2, 3}}}));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, a5->order() - 1);
  for (int i = 0; i < 200; ++i) {
    const int x = pick(rng);
    const int y = pick(rng);
    CHECK(w[a5->multiply(x, y)] == w[x] * w[y]);
  }
}

TEST_CASE("restriction to the A4 subgroup of A5") {
  auto a5 = standard_group(GroupName::A5);
  const ElementSet a4 = subgroup_by_cycles(*a5, {{{0, 1}, {2, 3}}, {{0, 1, 2}}});
  CHECK(a4.size() == 12);
  std::vector<ElementId> parents;
  const auto r = restrict_action(natural_action(a5), GroupName::A4, a4, &parents);
  CHECK(r.group->order() == 12);
  CHECK(orbit_count(r) == 2);
  CHECK(burnside_orbit_count(r) == 2);
  for (ElementId e = 0; e < r.group->order(); ++e) CHECK(r.group->element(e) == a5->element(parents[e]));
}
