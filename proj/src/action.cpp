#include "tsglab/action.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tsglab {

namespace {

constexpr std::pair<PartKind, std::string_view> kPartNames[] = {
    {PartKind::Free, "Free"},           {PartKind::V4, "V4"},   {PartKind::V8, "V8"},
    {PartKind::V12, "V12"},             {PartKind::W5, "W5"},   {PartKind::W20, "W20"},
    {PartKind::FixedPoint, "FixedPoint"}, {PartKind::KnottedSpecial, "KnottedSpecial"},
};
constexpr std::pair<ModelTag, std::string_view> kModelNames[] = {
    {ModelTag::TETRA_FULL_S4, "TETRA_FULL_S4"}, {ModelTag::TETRA_ROT_A4, "TETRA_ROT_A4"},
    {ModelTag::SIMPLEX4_A5, "SIMPLEX4_A5"},     {ModelTag::DODECA_ROT_A5, "DODECA_ROT_A5"},
    {ModelTag::KNOTTED, "KNOTTED"},
};
constexpr std::pair<Restriction, std::string_view> kRestrictionNames[] = {
    {Restriction::None, "none"}, {Restriction::A4_of_S4, "A4-of-S4"}, {Restriction::A4_of_A5, "A4-of-A5"}};

template <class T, std::size_t N>
std::string_view name_of(const std::pair<T, std::string_view> (&table)[N], T value) {
  for (const auto& [v, name] : table)
    if (v == value) return name;
  return "?";
}

template <class T, std::size_t N>
T parse_name(const std::pair<T, std::string_view> (&table)[N], std::string_view text, const char* what) {
  for (const auto& [v, name] : table)
    if (name == text) return v;
  throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(text) + "'");
}

ElementSet generated(const PermGroup& g, const std::vector<std::vector<std::vector<int>>>& cycles) {
  std::vector<ElementId> ids;
  for (const auto& c : cycles) ids.push_back(g.find(Permutation::from_cycles(g.degree(), c)));
  return g.closure(ids);
}

int part_size(GroupName build_group, const PlanPart& part) {
  switch (part.kind) {
    case PartKind::Free: return group_order(build_group) * part.count;
    case PartKind::V4: return 4;
    case PartKind::V8: return 8;
    case PartKind::V12: return 12;
    case PartKind::W5: return 5;
    case PartKind::W20: return 20;
    case PartKind::FixedPoint: return 1;
    case PartKind::KnottedSpecial: return part.knot_tag == "m5" ? 5 : 4;
  }
  return 0;
}

std::vector<PlanPart> free_parts(long n) {
  if (n == 0) return {};
  return {PlanPart{PartKind::Free, static_cast<int>(n), {}}};
}

OrbitPlan s4_plan(long m) {
  OrbitPlan p{GroupName::S4, m, free_parts(m / 24), ModelTag::TETRA_FULL_S4, Restriction::None};
  switch (m % 24) {
    case 0: break;
    case 4: p.parts.push_back(PlanPart{PartKind::V4, 1, {}}); break;
    case 8: p.parts.push_back(PlanPart{PartKind::V8, 1, {}}); break;
    case 12: p.parts.push_back(PlanPart{PartKind::V12, 1, {}}); break;
    case 20:
      p.parts.push_back(PlanPart{PartKind::V8, 1, {}});
      p.parts.push_back(PlanPart{PartKind::V12, 1, {}});
      break;
    default: throw std::logic_error("no S4 construction for this residue");
  }
  return p;
}

OrbitPlan a5_plan(long m) {
  OrbitPlan p{GroupName::A5, m, free_parts(m / 60), ModelTag::DODECA_ROT_A5, Restriction::None};
  switch (m % 60) {
    case 0: break;
    case 1: p.parts.push_back(PlanPart{PartKind::FixedPoint, 1, {}}); break;
    case 5:
      p.parts.push_back(PlanPart{PartKind::W5, 1, {}});
      p.model = ModelTag::SIMPLEX4_A5;
      break;
    case 20:
      p.parts.push_back(PlanPart{PartKind::W20, 1, {}});
      p.model = ModelTag::SIMPLEX4_A5;
      break;
    default: throw std::logic_error("no A5 construction for this residue");
  }
  return p;
}

OrbitPlan a4_plan(long m) {
  if (m == 4 || m == 5) {
    return OrbitPlan{GroupName::A4, m, {PlanPart{PartKind::KnottedSpecial, 1, m == 4 ? "m4" : "m5"}},
                     ModelTag::KNOTTED, Restriction::None};
  }
  const long k24 = m % 24;
  if (k24 == 0 || k24 == 4 || k24 == 8 || k24 == 12 || k24 == 20) {
    OrbitPlan p = s4_plan(m);
    p.group = GroupName::A4;
    p.restriction = Restriction::A4_of_S4;
    return p;
  }
  if (k24 == 16) {
    // m = 12(2n+1) + 4
    OrbitPlan p{GroupName::A4, m, free_parts((m - 4) / 12), ModelTag::TETRA_ROT_A4, Restriction::None};
    p.parts.push_back(PlanPart{PartKind::V4, 1, {}});
    return p;
  }
  const long k12 = m % 12;
  if ((k12 == 1 || k12 == 5) && m > 60 && m % 60 == k12) {
    OrbitPlan p = a5_plan(m);
    p.group = GroupName::A4;
    p.restriction = Restriction::A4_of_A5;
    return p;
  }
  OrbitPlan p{GroupName::A4, m, free_parts(m / 12), ModelTag::TETRA_ROT_A4, Restriction::None};
  if (k12 == 5) p.parts.push_back(PlanPart{PartKind::V4, 1, {}});
  if (k12 == 1 || k12 == 5) {
    p.parts.push_back(PlanPart{PartKind::FixedPoint, 1, {}});
    return p;
  }
  throw std::logic_error("no A4 construction for this residue");
}

}  // namespace

std::string_view to_string(PartKind kind) { return name_of(kPartNames, kind); }
std::string_view to_string(ModelTag tag) { return name_of(kModelNames, tag); }
std::string_view to_string(Restriction r) { return name_of(kRestrictionNames, r); }
PartKind parse_part_kind(std::string_view text) { return parse_name(kPartNames, text, "part kind"); }
ModelTag parse_model_tag(std::string_view text) { return parse_name(kModelNames, text, "model"); }
Restriction parse_restriction(std::string_view text) { return parse_name(kRestrictionNames, text, "restriction"); }

GroupName OrbitPlan::build_group() const {
  switch (restriction) {
    case Restriction::A4_of_S4: return GroupName::S4;
    case Restriction::A4_of_A5: return GroupName::A5;
    case Restriction::None: break;
  }
  return group;
}

int OrbitPlan::orbit_count() const {
  int total = 0;
  for (const auto& part : parts) {
    if (part.kind == PartKind::Free) total += part.count;
    else if (part.kind == PartKind::KnottedSpecial) total += part.knot_tag == "m5" ? 2 : 1;
    else ++total;
  }
  return total;
}

std::string OrbitPlan::to_string() const {
  std::ostringstream out;
  out << tsglab::to_string(group) << " m=" << m << ": ";
  bool first = true;
  for (const auto& part : parts) {
    out << (first ? "" : " + ") << tsglab::to_string(part.kind);
    if (part.kind == PartKind::Free) out << "(" << part.count << ")";
    if (part.kind == PartKind::KnottedSpecial) out << "(" << part.knot_tag << ")";
    first = false;
  }
  if (first) out << "∅";
  out << " [" << tsglab::to_string(model);
  if (restriction != Restriction::None) out << ", restricted " << tsglab::to_string(restriction);
  out << "]";
  return out.str();
}

ElementSet a4_in_a5() {
  return generated(*standard_group(GroupName::A5), {{{0, 1}, {2, 3}}, {{0, 1, 2}}});
}

ElementSet a4_in_s4() {
  auto g = standard_group(GroupName::S4);
  ElementSet out;
  for (ElementId e = 0; e < g->order(); ++e)
    if (g->element(e).is_even()) out.push_back(e);
  return out;
}

OrbitPlan plan(GroupName group, long m) {
  const Verdict verdict = necessity_check(group, m);
  if (!verdict.admissible) throw NotAdmissible(verdict.reason);
  OrbitPlan p;
  switch (group) {
    case GroupName::S4: p = s4_plan(m); break;
    case GroupName::A5: p = a5_plan(m); break;
    case GroupName::A4: p = a4_plan(m); break;
  }
  long total = 0;
  for (const auto& part : p.parts) total += part_size(p.build_group(), part);
  if (total != m) throw std::logic_error("plan part sizes do not sum to m");
  return p;
}

VertexAction build(const OrbitPlan& p) {
  const GroupName built_name = p.knotted() ? GroupName::A4 : p.build_group();
  auto g = standard_group(built_name);

  // Base-vertex stabilizers, chosen to match the geometric base points.
  auto stabilizer_for = [&](PartKind kind) -> ElementSet {
    switch (kind) {
      case PartKind::Free: return {0};
      case PartKind::FixedPoint: {
        ElementSet all(static_cast<std::size_t>(g->order()));
        for (ElementId e = 0; e < g->order(); ++e) all[static_cast<std::size_t>(e)] = e;
        return all;
      }
      case PartKind::V4:
        if (built_name == GroupName::A4) return generated(*g, {{{0, 1, 2}}});
        return generated(*g, {{{0, 1, 2}}, {{0, 1}}});
      case PartKind::V8: return generated(*g, {{{0, 1, 2}}});
      case PartKind::V12: return generated(*g, {{{0, 1}}});
      case PartKind::W5: return generated(*g, {{{0, 1, 2}}, {{0, 1}, {2, 3}}});
      case PartKind::W20: return generated(*g, {{{0, 1, 2}}});
      case PartKind::KnottedSpecial: break;
    }
    throw std::logic_error("no stabilizer for knotted parts");
  };

  std::vector<PartKind> orbit_kinds;
  for (const auto& part : p.parts) {
    if (part.kind == PartKind::Free) {
      orbit_kinds.insert(orbit_kinds.end(), static_cast<std::size_t>(part.count), PartKind::Free);
    } else if (part.kind == PartKind::KnottedSpecial) {
      orbit_kinds.push_back(PartKind::V4);
      if (part.knot_tag == "m5") orbit_kinds.push_back(PartKind::FixedPoint);
    } else {
      orbit_kinds.push_back(part.kind);
    }
  }

  VertexAction out;
  out.plan = p;
  std::vector<GroupAction> pieces;
  int next_vertex = 0;
  for (PartKind kind : orbit_kinds) {
    Orbit orbit;
    orbit.kind = kind;
    orbit.first_vertex = next_vertex;
    orbit.stabilizer = stabilizer_for(kind);
    pieces.push_back(coset_action(g, orbit.stabilizer, &orbit.reps));
    orbit.size = pieces.back().m;
    next_vertex += orbit.size;
    out.vertex_orbit.insert(out.vertex_orbit.end(), static_cast<std::size_t>(orbit.size),
                            static_cast<int>(out.orbits.size()));
    out.orbits.push_back(std::move(orbit));
  }
  out.built = direct_sum(pieces);

  switch (p.restriction) {
    case Restriction::None:
      out.action = out.built;
      out.parent_ids.resize(static_cast<std::size_t>(g->order()));
      for (ElementId e = 0; e < g->order(); ++e) out.parent_ids[static_cast<std::size_t>(e)] = e;
      break;
    case Restriction::A4_of_S4:
      out.action = restrict_action(out.built, GroupName::A4, a4_in_s4(), &out.parent_ids);
      break;
    case Restriction::A4_of_A5:
      out.action = restrict_action(out.built, GroupName::A4, a4_in_a5(), &out.parent_ids);
      break;
  }
  check_homomorphism(out.action);
  if (!is_faithful(out.action)) throw std::logic_error("built action is not faithful: " + p.to_string());
  return out;
}

FixedVertexProfile measured_profile(const GroupAction& action) {
  const auto& g = *action.group;
  std::map<ClassLabel, int> counts;
  for (ElementId e = 1; e < g.order(); ++e) {
    const int fixed = fixed_count(action, e);
    auto [it, inserted] = counts.emplace(g.class_of(e), fixed);
    if (!inserted && it->second != fixed) {
      throw std::logic_error("elements of class " + to_string(g.class_of(e)) + " fix different vertex counts");
    }
  }
  return FixedVertexProfile::from_counts(g.name(), counts, action.m);
}

bool has_free_edge(const GroupAction& action) {
  const auto masks = stabilizer_masks(action);
  for (int u = 0; u < action.m; ++u)
    for (int v = u + 1; v < action.m; ++v)
      if ((masks[static_cast<std::size_t>(u)] & masks[static_cast<std::size_t>(v)]) == 1u) return true;
  return false;
}

}  // namespace tsglab
