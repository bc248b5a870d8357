#include "tsglab/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unistd.h>

namespace tsglab {

namespace {

Json verdict_json(const HypothesisVerdict& v) { return Json{{"pass", v.pass}, {"detail", v.detail}}; }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("field '") + key + "' has the wrong type");
  }
}

std::vector<double> numbers(const Json& j, const char* key, std::size_t size) {
  auto out = get<std::vector<double>>(j, key);
  if (out.size() != size) {
    throw SchemaError(std::string("field '") + key + "' needs " + std::to_string(size) + " numbers");
  }
  return out;
}

Permutation permutation(const Json& j, const char* key, std::optional<int> degree) {
  auto images = get<std::vector<int>>(j, key);
  if (degree && static_cast<int>(images.size()) != *degree) throw SchemaError(std::string("field '") + key + "' has the wrong length");
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument&) {
    throw SchemaError(std::string("field '") + key + "' is not a permutation");
  }
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

Json profile_json(const FixedVertexProfile& p) {
  Json j;
  if (p.n1) j["n1"] = *p.n1;
  j["n2"] = p.n2;
  if (p.n2p) j["n2p"] = *p.n2p;
  j["n3"] = p.n3;
  if (p.n4) j["n4"] = *p.n4;
  if (p.n5) j["n5"] = *p.n5;
  return j;
}

Json realization_json(const VertexAction& a, const RealizedVertices& r, const HypothesisReport& report) {
  Json j;
  j["schema"] = kRealizationSchema;
  j["group"] = std::string(to_string(a.plan.group));
  j["m"] = a.m();

  Json parts = Json::array();
  for (const auto& part : a.plan.parts) {
    Json pj{{"kind", std::string(to_string(part.kind))}};
    if (part.kind == PartKind::Free) pj["count"] = part.count;
    parts.push_back(pj);
  }
  j["plan"] = Json{{"parts", parts}, {"restriction", std::string(to_string(a.plan.restriction))}};
  j["model"] = Json{{"tag", std::string(to_string(r.model))},
                    {"theta", r.params.theta},
                    {"t", r.params.t},
                    {"seed", r.params.seed}};

  Json elements = Json::array();
  const auto& g = *a.action.group;
  for (ElementId e = 0; e < g.order(); ++e) {
    std::vector<double> matrix;
    for (int row = 0; row < 4; ++row)
      for (int col = 0; col < 4; ++col) matrix.push_back(r.rep[static_cast<std::size_t>(e)](row, col));
    elements.push_back(Json{{"id", e},
                            {"perm", g.element(e).images()},
                            {"order", g.element(e).order()},
                            {"matrix", matrix},
                            {"vertex_images", a.action[e].images()}});
  }
  j["elements"] = elements;

  Json vertices = Json::array();
  for (int v = 0; v < a.m(); ++v) {
    const Vec4& x = r.coords[static_cast<std::size_t>(v)];
    vertices.push_back(Json{{"id", v},
                            {"part", std::string(to_string(a.orbits[static_cast<std::size_t>(a.vertex_orbit[static_cast<std::size_t>(v)])].kind))},
                            {"coords", {x(0), x(1), x(2), x(3)}}});
  }
  j["vertices"] = vertices;

  Json arcs = Json::array();
  if (report.arcs) {
    for (const auto& arc : report.arcs->arcs) {
      std::vector<double> frame;
      for (int i = 0; i < 4; ++i) frame.push_back(arc.frame_u(i));
      for (int i = 0; i < 4; ++i) frame.push_back(arc.frame_w(i));
      arcs.push_back(Json{{"pair", {arc.pair.first, arc.pair.second}},
                          {"circle_element", arc.circle_element},
                          {"frame", frame},
                          {"start", arc.start},
                          {"end", arc.end}});
    }
  }
  j["arcs"] = arcs;

  j["report"] = Json{{"h1", verdict_json(report.h1)},
                     {"h2", verdict_json(report.h2)},
                     {"h3", verdict_json(report.h3)},
                     {"h4", verdict_json(report.h4)},
                     {"h5", verdict_json(report.h5)},
                     {"profile", profile_json(measured_profile(a))},
                     {"burnside", burnside_orbit_count(a.action)}};
  return j;
}

VerifyResult verify_realization(const Json& file) {
  VerifyResult result;
  auto record = [&](const char* name, bool pass, std::string detail) {
    result.checks.push_back({name, pass, std::move(detail)});
    return pass;
  };

  // -- schema
  if (get<std::string>(file, "schema") != kRealizationSchema) throw SchemaError("unknown schema version");
  GroupName group;
  try {
    group = parse_group_name(get<std::string>(file, "group"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  const long m = get<long>(file, "m");
  if (m < 1) throw SchemaError("m must be positive");
  const auto& model = field(file, "model");
  RealizedVertices r;
  try {
    r.model = parse_model_tag(get<std::string>(model, "tag"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  r.params.theta = get<double>(model, "theta");
  r.params.t = get<double>(model, "t");
  r.params.seed = get<std::uint64_t>(model, "seed");

  const auto& elements = field(file, "elements");
  if (!elements.is_array() || elements.empty()) throw SchemaError("'elements' must be a non-empty array");
  std::vector<Permutation> perms;
  std::vector<Permutation> images;
  std::vector<Mat4> matrices;
  std::optional<int> letters;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& e = elements[i];
    if (get<long>(e, "id") != static_cast<long>(i)) throw SchemaError("element ids must be 0..n-1 in order");
    perms.push_back(permutation(e, "perm", letters));
    letters = perms.back().degree();
    images.push_back(permutation(e, "vertex_images", static_cast<int>(m)));
    const auto entries = numbers(e, "matrix", 16);
    Mat4 mat;
    for (int k = 0; k < 16; ++k) mat(k / 4, k % 4) = entries[static_cast<std::size_t>(k)];
    matrices.push_back(mat);
    (void)get<int>(e, "order");
  }
  const auto& vertices = field(file, "vertices");
  if (!vertices.is_array() || vertices.size() != static_cast<std::size_t>(m)) throw SchemaError("'vertices' must hold m entries");
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (get<long>(vertices[v], "id") != static_cast<long>(v)) throw SchemaError("vertex ids must be 0..m-1 in order");
    (void)get<std::string>(vertices[v], "part");
    const auto c = numbers(vertices[v], "coords", 4);
    r.coords.emplace_back(c[0], c[1], c[2], c[3]);
  }
  ArcAssignment arcs;
  const auto& arc_list = field(file, "arcs");
  if (!arc_list.is_array()) throw SchemaError("'arcs' must be an array");
  for (const auto& aj : arc_list) {
    Arc arc;
    const auto pair = get<std::vector<int>>(aj, "pair");
    if (pair.size() != 2 || pair[0] < 0 || pair[1] >= m || pair[0] >= pair[1]) throw SchemaError("bad arc pair");
    arc.pair = {pair[0], pair[1]};
    arc.circle_element = get<int>(aj, "circle_element");
    if (arc.circle_element < 0 || arc.circle_element >= static_cast<int>(elements.size())) throw SchemaError("bad arc circle element");
    const auto frame = numbers(aj, "frame", 8);
    arc.frame_u = Vec4(frame[0], frame[1], frame[2], frame[3]);
    arc.frame_w = Vec4(frame[4], frame[5], frame[6], frame[7]);
    arc.start = get<double>(aj, "start");
    arc.end = get<double>(aj, "end");
    arcs.arcs.push_back(arc);
  }
  const auto& report = field(file, "report");
  for (const char* h : {"h1", "h2", "h3", "h4", "h5"}) (void)get<bool>(field(report, h), "pass");
  const long stated_burnside = get<long>(report, "burnside");
  const Json stated_profile = field(report, "profile");
  record("schema", true, kRealizationSchema);

  // -- group closure: the listed permutations form the named group
  std::shared_ptr<const PermGroup> g;
  try {
    g = std::make_shared<const PermGroup>(PermGroup::generate(group, perms));
  } catch (const std::exception& e) {
    return record("group-closure", false, e.what()), result;
  }
  std::vector<ElementId> to_group(perms.size());
  std::vector<bool> seen(static_cast<std::size_t>(g->order()), false);
  bool closed = g->order() == group_order(group) && static_cast<int>(perms.size()) == g->order();
  for (std::size_t i = 0; closed && i < perms.size(); ++i) {
    to_group[i] = g->find(perms[i]);
    closed = !seen[static_cast<std::size_t>(to_group[i])];
    seen[static_cast<std::size_t>(to_group[i])] = true;
  }
  if (!record("group-closure", closed,
              closed ? std::to_string(g->order()) + " elements"
                     : "listed permutations do not form " + std::string(to_string(group)) + " exactly once each")) {
    return result;
  }

  GroupAction action{g, static_cast<int>(m), std::vector<Permutation>(perms.size())};
  r.rep.resize(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    action.act[static_cast<std::size_t>(to_group[i])] = images[i];
    r.rep[static_cast<std::size_t>(to_group[i])] = matrices[i];
  }
  for (auto& arc : arcs.arcs) arc.circle_element = to_group[static_cast<std::size_t>(arc.circle_element)];

  // -- homomorphism and faithfulness of the vertex action
  try {
    check_homomorphism(action);
  } catch (const std::logic_error& e) {
    return record("homomorphism", false, e.what()), result;
  }
  record("homomorphism", true, "vertex action respects products");
  if (!record("faithful", is_faithful(action), "distinct elements act differently")) return result;

  // -- matrices
  const double ortho = orthogonality_error(r.rep);
  if (!record("orthogonality", ortho <= 1e-9, "max |MᵀM - I|, |det - 1| = " + fmt(ortho))) return result;
  const double hom = homomorphism_error(*g, r.rep);
  if (!record("representation", hom <= 1e-8, "max |M(xy) - M(x)M(y)| = " + fmt(hom))) return result;
  r.circles.resize(r.rep.size());
  try {
    for (ElementId e = 1; e < g->order(); ++e) r.circles[static_cast<std::size_t>(e)] = fixed_set(r.rep[static_cast<std::size_t>(e)]);
  } catch (const std::exception& e) {
    return record("representation", false, std::string("fixed set: ") + e.what()), result;
  }

  // -- coordinates
  const double inv = invariance_error(action, r);
  if (!record("invariance", inv <= 1e-9, "max |M(g)x_v - x_g(v)| = " + fmt(inv))) return result;
  double norm_err = 0.0;
  for (const auto& x : r.coords) norm_err = std::max(norm_err, std::abs(x.norm() - 1.0));
  if (!record("unit-norm", norm_err <= 1e-9, "max | |x| - 1 | = " + fmt(norm_err))) return result;
  const double sep = r.coords.size() > 1 ? min_vertex_distance(r.coords) : 1.0;
  if (!record("separation", sep >= 1e-6, "min vertex distance = " + fmt(sep))) return result;

  // -- profile
  try {
    const auto combinatorial = measured_profile(action);
    const auto geometric = geometric_profile(action, r);
    const auto witnesses = necessity_check(group, m).witnesses;
    const bool witnessed = std::find(witnesses.begin(), witnesses.end(), combinatorial) != witnesses.end();
    const bool pass = combinatorial == geometric && profile_json(combinatorial) == stated_profile && witnessed;
    if (!record("profile", pass,
                combinatorial.to_string() + (combinatorial == geometric ? "" : " vs geometric " + geometric.to_string()) +
                    (witnessed ? "" : ", not a witness for this m"))) {
      return result;
    }
  } catch (const std::exception& e) {
    return record("profile", false, e.what()), result;
  }

  // -- Burnside
  try {
    const int count = burnside_orbit_count(action);
    if (!record("burnside", count == orbit_count(action) && count == stated_burnside,
                std::to_string(count) + " orbits")) {
      return result;
    }
  } catch (const std::logic_error& e) {
    return record("burnside", false, e.what()), result;
  }

  // -- edge hypotheses, with the file's own arcs
  const std::pair<const char*, HypothesisVerdict> hypotheses[] = {
      {"h1", check_h1(action, r)},
      {"h2", check_h2(action, r, arcs)},
      {"h3", check_h3(action, r, arcs)},
      {"h4", check_h4(action)},
      {"h5", check_h5(action, r)},
  };
  for (const auto& [name, verdict] : hypotheses) {
    if (!record(name, verdict.pass, verdict.detail)) return result;
  }
  return result;
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  const auto tmp = dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move certificate into place: " + ec.message());
  }
}

}  // namespace tsglab
