#include "lpcusp/json_io.hpp"

#include <fstream>
#include <sstream>

#include "lpcusp/error.hpp"

namespace lpcusp {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(where + ": missing field \"" + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ValidationError(where + ": expected an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + ": expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::string str(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ValidationError(where + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError("malformed JSON in " + source + " at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ValidationError("expected a rational as an integer or \"p/q\" string");
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_number_integer()) return Cyclotomic(j.get<long>());
  if (j.is_string()) return Cyclotomic::parse(j.get<std::string>());
  int e = as_int(field(j, "e", "cyclotomic"), "cyclotomic.e");
  if (e < 1) throw ValidationError("cyclotomic.e must be positive");
  const auto& coeffs = field(j, "coeffs", "cyclotomic");
  if (!coeffs.is_array()) throw ValidationError("cyclotomic.coeffs: expected an array");
  std::vector<Rational> dense(static_cast<std::size_t>(e), Rational(0));
  for (const auto& c : coeffs) {
    if (!c.is_array() || c.size() != 2) throw ValidationError("cyclotomic.coeffs: entries are [i, \"p/q\"]");
    int i = as_int(c[0], "cyclotomic.coeffs index");
    if (i < 0 || i >= e) throw ValidationError("cyclotomic.coeffs: index out of range");
    dense[static_cast<std::size_t>(i)] += rational_from_json(c[1]);
  }
  return Cyclotomic::from_dense(e, std::move(dense));
}

Json cyclotomic_to_json(const Cyclotomic& c) {
  auto n = c.normalized();
  Json coeffs = Json::array();
  const auto& cs = n.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (sgn(cs[i]) != 0) coeffs.push_back(Json::array({static_cast<int>(i), to_string(cs[i])}));
  return {{"e", n.conductor()}, {"coeffs", coeffs}};
}

RootOfUnity root_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ValidationError("root of unity: expected [m, k]");
  return RootOfUnity(as_int(j[0], "root order"), as_int(j[1], "root exponent"));
}

Json root_to_json(const RootOfUnity& r) { return Json::array({r.order, r.exponent}); }

GroupPtr group_from_json(const Json& j) {
  std::string kind = str(field(j, "kind", "group"), "group.kind");
  if (kind == "perm") {
    std::vector<Perm> gens;
    for (const auto& g : field(j, "generators", "group")) gens.push_back(int_list(g, "group.generators"));
    return FiniteGroup::from_perms(gens);
  }
  if (kind == "monomial") {
    auto dim = static_cast<std::size_t>(as_int(field(j, "dim", "group"), "group.dim"));
    std::vector<MonomialMatrix> gens;
    for (const auto& g : field(j, "generators", "group")) {
      std::vector<std::tuple<int, int, Cyclotomic>> entries;
      for (const auto& e : g) {
        if (!e.is_array() || e.size() != 3) throw ValidationError("group.generators: entries are [row, col, value]");
        entries.emplace_back(as_int(e[0], "row"), as_int(e[1], "col"), cyclotomic_from_json(e[2]));
      }
      gens.push_back(monomial_from_entries(dim, entries));
    }
    return FiniteGroup::from_monomials(gens);
  }
  if (kind == "table") {
    std::vector<std::vector<int>> t;
    for (const auto& row : field(j, "table", "group")) t.push_back(int_list(row, "group.table"));
    return FiniteGroup::from_table(t);
  }
  if (kind == "named") {
    std::string name = str(field(j, "name", "group"), "group.name");
    int n = j.contains("n") ? as_int(j["n"], "group.n") : 0;
    if (name == "cyclic") return FiniteGroup::cyclic(n);
    if (name == "dihedral") return FiniteGroup::dihedral(n);
    if (name == "symmetric") return FiniteGroup::symmetric(n);
    if (name == "alternating") return FiniteGroup::alternating(n);
    if (name == "quaternion") return FiniteGroup::quaternion();
    if (name == "elementary2") return FiniteGroup::elementary_abelian2(n);
    throw ValidationError("group.name: unknown named group '" + name + "'");
  }
  throw ValidationError("group.kind must be perm, monomial, table or named");
}

Json group_to_json(const FiniteGroup& g, bool with_table) {
  Json out{{"name", g.name()}, {"order", g.order()}, {"abelian", g.is_abelian()}};
  Json classes = Json::array();
  for (const auto& c : g.classes())
    classes.push_back({{"representative", c.front()}, {"size", c.size()}, {"element_order", g.element_order(c.front())}});
  out["classes"] = classes;
  out["generators"] = g.generators();
  if (with_table) {
    Json t = Json::array();
    for (std::size_t a = 0; a < g.order(); ++a) {
      Json row = Json::array();
      for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.mul(static_cast<int>(a), static_cast<int>(b)));
      t.push_back(row);
    }
    out["table"] = t;
  }
  return out;
}

SubgroupHandle subgroup_from_json(const GroupPtr& g, const Json& j) {
  auto check = [&](const std::vector<int>& v) {
    for (int x : v)
      if (x < 0 || static_cast<std::size_t>(x) >= g->order()) throw ValidationError("subgroup: element index out of range");
    return v;
  };
  if (j.is_array()) return generated_subgroup(g, check(int_list(j, "subgroup")));
  if (j.contains("elements")) return make_subgroup(g, check(int_list(j["elements"], "subgroup.elements")));
  return generated_subgroup(g, check(int_list(field(j, "generators", "subgroup"), "subgroup.generators")));
}

namespace {

std::vector<std::tuple<int, int, int>> sparse_values(const Json& j, const std::string& where) {
  std::vector<std::tuple<int, int, int>> out;
  if (!j.is_array()) throw ValidationError(where + ": expected [[a, b, k], ...]");
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != 3) throw ValidationError(where + ": entries are [a, b, k]");
    out.emplace_back(as_int(v[0], where), as_int(v[1], where), as_int(v[2], where));
  }
  return out;
}

}  // namespace

TwoCocycle cocycle_from_json(const Json& j, GroupPtr g) {
  if (!g) g = group_from_json(field(j, "group", "cocycle"));
  int m = as_int(field(j, "m", "cocycle"), "cocycle.m");
  if (m < 1) throw ValidationError("cocycle.m must be positive");
  return TwoCocycle::from_sparse(g, m, j.contains("values") ? sparse_values(j["values"], "cocycle.values") : std::vector<std::tuple<int, int, int>>{});
}

Json cocycle_to_json(const TwoCocycle& c) {
  Json values = Json::array();
  auto n = static_cast<int>(c.group()->order());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (c.exponent(a, b) != 0) values.push_back(Json::array({a, b, c.exponent(a, b)}));
  return {{"m", c.m()}, {"values", values}};
}

CycloMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("matrix: expected a list of rows");
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ValidationError("matrix: rows must be arrays");
    std::vector<Cyclotomic> row;
    for (const auto& x : r) row.push_back(cyclotomic_from_json(x));
    rows.push_back(std::move(row));
  }
  return CycloMatrix::from_rows(rows);
}

Json matrix_to_json(const CycloMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    out.push_back(row);
  }
  return out;
}

Json character_table_to_json(const GroupPtr& g) {
  Json rows = Json::array();
  for (const auto& chi : character_table(g)) {
    Json row = Json::array();
    for (const auto& v : chi.values) row.push_back(v.to_string());
    rows.push_back(row);
  }
  Json reps = Json::array();
  for (const auto& c : g->classes()) reps.push_back(c.front());
  return {{"class_representatives", reps}, {"characters", rows}};
}

ActionDatum action_datum_from_json(const Json& j) {
  auto gamma = group_from_json(field(j, "gamma", "action datum"));
  std::vector<std::string> labels;
  for (const auto& l : field(j, "labels", "action datum")) labels.push_back(str(l, "labels"));
  std::vector<int> action;
  const auto& rows = field(j, "action", "action datum");
  if (!rows.is_array() || rows.size() != gamma->order())
    throw ValidationError("action: need one row per element of gamma (" + std::to_string(gamma->order()) + ")");
  for (std::size_t g = 0; g < rows.size(); ++g) {
    auto row = int_list(rows[g], "action[" + std::to_string(g) + "]");
    if (row.size() != labels.size()) throw ValidationError("action[" + std::to_string(g) + "]: need one entry per point");
    action.insert(action.end(), row.begin(), row.end());
  }
  auto d = ActionDatum::make(std::move(labels), gamma, std::move(action));
  if (j.contains("kappa"))
    for (const auto& k : j["kappa"]) {
      int x = as_int(field(k, "x", "kappa"), "kappa.x");
      if (x < 0 || static_cast<std::size_t>(x) >= d.size()) throw ValidationError("kappa.x out of range");
      const auto& sg = d.stabilizer_groups[static_cast<std::size_t>(x)].group;
      d.set_kappa(x, cocycle_from_json(k, sg));
    }
  if (j.contains("scalars"))
    for (const auto& s : j["scalars"]) {
      std::vector<RootOfUnity> vals;
      for (const auto& v : field(s, "values", "scalars")) vals.push_back(root_from_json(v));
      d.set_scalars(as_int(field(s, "g", "scalars"), "scalars.g"), as_int(field(s, "x", "scalars"), "scalars.x"), std::move(vals));
    }
  return d;
}

Json extended_quotient_to_json(const ActionDatum& d, const ExtendedQuotient& q) {
  Json pts = Json::array();
  for (const auto& p : q.points) {
    Json tr = Json::array();
    for (const auto& t : p.traces) tr.push_back(t.to_string());
    pts.push_back({{"x", d.labels[static_cast<std::size_t>(p.x)]}, {"rho", p.rho}, {"dim", p.dim}, {"orbit_size", p.orbit_size}, {"traces", tr}});
  }
  Json orbits = Json::array();
  for (std::size_t i = 0; i < q.x_orbits.size(); ++i) {
    Json labels = Json::array();
    for (int x : q.x_orbits[i]) labels.push_back(d.labels[static_cast<std::size_t>(x)]);
    orbits.push_back({{"points", labels}, {"fiber_size", q.fiber_sizes[i]}});
  }
  return {{"size", q.points.size()}, {"orbits", orbits}, {"points", pts}};
}

SectionDatum section_datum_from_json(const Json& j) {
  SectionDatum d;
  d.ambient = group_from_json(field(j, "group", "section datum"));
  d.normal = subgroup_from_json(d.ambient, field(j, "normal", "section datum"));
  auto ng = as_group(d.normal).group;
  const auto& eps = field(j, "eps", "section datum");
  if (!eps.is_object()) throw ValidationError("eps: expected {\"<element>\": matrix}");
  std::vector<CycloMatrix> mats(d.normal.order());
  std::vector<char> have(d.normal.order(), 0);
  for (const auto& [key, m] : eps.items()) {
    int g = 0;
    try {
      g = std::stoi(key);
    } catch (const std::exception&) {
      throw ValidationError("eps: keys are element indices, got '" + key + "'");
    }
    int pos = d.normal.position(g);
    if (pos < 0) throw ValidationError("eps: element " + key + " is not in the normal subgroup");
    mats[static_cast<std::size_t>(pos)] = matrix_from_json(m);
    have[static_cast<std::size_t>(pos)] = 1;
  }
  for (std::size_t i = 0; i < have.size(); ++i)
    if (!have[i]) throw ValidationError("eps: missing matrix for element " + std::to_string(d.normal.elements[i]));
  d.eps = MatrixRep(ng, mats);
  if (!d.eps.is_homomorphism()) throw ValidationError("eps is not a representation of the normal subgroup");
  d.representatives = int_list(field(j, "representatives", "section datum"), "representatives");
  return d;
}

namespace {

GroupKindL parse_kind(const std::string& s) {
  if (s == "GLinner" || s == "GL" || s == "SL" || s == "SLinner") return GroupKindL::GLinner;
  if (s == "Sp" || s == "C") return GroupKindL::Sp;
  if (s == "SO_odd" || s == "SOodd" || s == "B") return GroupKindL::SOodd;
  if (s == "SO_even" || s == "SOeven" || s == "D") return GroupKindL::SOeven;
  if (s == "U") return GroupKindL::U;
  throw ValidationError("group.type: unknown type '" + s + "'");
}

Twist twist_from_json(const Json& j) {
  Twist t;
  if (j.is_null()) return t;
  if (j.contains("s")) t.s = rational_from_json(j["s"]);
  if (j.contains("zeta")) t.zeta = root_from_json(j["zeta"]);
  return t;
}

Json twist_to_json(const Twist& t) { return {{"s", to_string(t.s)}, {"zeta", root_to_json(t.zeta)}}; }

}  // namespace

GroupDescriptor group_descriptor_from_json(const Json& j) {
  GroupDescriptor g;
  g.kind = parse_kind(str(field(j, "type", "group"), "group.type"));
  g.n = as_int(field(j, "n", "group"), "group.n");
  if (j.contains("d")) g.d = as_int(j["d"], "group.d");
  return g;
}

Json group_descriptor_to_json(const GroupDescriptor& g) {
  Json out{{"type", to_string(g.kind)}, {"n", g.n}};
  if (g.kind == GroupKindL::GLinner) out["d"] = g.d;
  return out;
}

LParameter lparameter_from_json(const Json& j) {
  LParameter phi;
  phi.group = group_descriptor_from_json(field(j, "group", "parameter"));
  const auto& blocks = field(j, "blocks", "parameter");
  if (!blocks.is_array()) throw ValidationError("parameter.blocks: expected an array");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::string w = "blocks[" + std::to_string(i) + "]";
    const auto& b = blocks[i];
    Block blk;
    blk.label.core = str(field(b, "core", w), w + ".core");
    blk.label.id = b.contains("id") ? str(b["id"], w + ".id") : blk.label.core;
    blk.label.dim = b.contains("dim") ? as_int(b["dim"], w + ".dim") : 1;
    blk.label.duality = b.contains("duality") ? parse_duality(str(b["duality"], w + ".duality")) : Duality::None;
    blk.label.twist = b.contains("twist") ? twist_from_json(b["twist"]) : Twist{};
    blk.a = b.contains("a") ? as_int(b["a"], w + ".a") : 1;
    blk.mult = b.contains("mult") ? as_int(b["mult"], w + ".mult") : 1;
    phi.blocks.push_back(blk);
  }
  return phi;
}

Json lparameter_to_json(const LParameter& phi) {
  Json blocks = Json::array();
  for (const auto& b : phi.blocks)
    blocks.push_back({{"core", b.label.core},
                      {"dim", b.label.dim},
                      {"duality", to_string(b.label.duality)},
                      {"twist", twist_to_json(b.label.twist)},
                      {"a", b.a},
                      {"mult", b.mult}});
  return {{"group", group_descriptor_to_json(phi.group)}, {"blocks", blocks}};
}

ParsedParameter enhanced_parameter_from_json(const Json& j) {
  ParsedParameter out;
  out.p.phi = lparameter_from_json(j);
  if (!j.contains("enhancement")) return out;
  const auto& e = j["enhancement"];
  if (e.contains("signs")) {
    if (!e["signs"].is_object()) throw ValidationError("enhancement.signs: expected {\"z:core:a\": +-1}");
    for (const auto& [key, v] : e["signs"].items()) {
      auto c1 = key.find(':'), c2 = key.rfind(':');
      if (key.rfind("z:", 0) != 0 || c1 == c2) throw ValidationError("enhancement.signs: keys look like z:core:a, got '" + key + "'");
      int a = 0;
      try {
        a = std::stoi(key.substr(c2 + 1));
      } catch (const std::exception&) {
        throw ValidationError("enhancement.signs: bad block size in '" + key + "'");
      }
      out.p.rho.signs[{key.substr(c1 + 1, c2 - c1 - 1), a}] = as_int(v, "enhancement.signs");
    }
  }
  if (e.contains("cyclic")) out.p.rho.cyclic = as_int(e["cyclic"], "enhancement.cyclic");
  if (e.contains("zeta_center") && !e["zeta_center"].is_null()) out.zeta_center = root_from_json(e["zeta_center"]);
  return out;
}

Json enhancement_to_json(const Enhancement& rho) {
  Json signs = Json::object();
  for (const auto& [k, v] : rho.signs) signs["z:" + k.first + ":" + std::to_string(k.second)] = v;
  return {{"signs", signs}, {"cyclic", rho.cyclic}};
}

Json enhanced_parameter_to_json(const EnhancedParameter& p) {
  Json out = lparameter_to_json(p.phi);
  out["enhancement"] = enhancement_to_json(p.rho);
  return out;
}

Json cuspidal_datum_to_json(const CuspidalDatum& cd) {
  return {{"group", group_descriptor_to_json(cd.group)},
          {"levi", cd.levi},
          {"tail_n", cd.tail_n},
          {"on_levi", enhanced_parameter_to_json(cd.on_levi)}};
}

Json inertial_class_to_json(const InertialClass& ic) {
  Json factors = Json::array();
  for (const auto& f : ic.factors) factors.push_back({{"core", f.core}, {"dim", f.dim}, {"a", f.a}, {"duality", to_string(f.duality)}});
  Json tail = Json::array();
  for (const auto& b : ic.tail) tail.push_back({{"core", b.label.core}, {"a", b.a}, {"mult", b.mult}});
  return {{"group", group_descriptor_to_json(ic.group)},
          {"factors", factors},
          {"tail", tail},
          {"tail_enhancement", enhancement_to_json(ic.tail_rho)},
          {"cyclic", ic.cyclic},
          {"w_order", ic.w->order()}};
}

Json component_quotient_to_json(const ComponentQuotient& cq) {
  Json pts = Json::array();
  for (const auto& p : cq.points) {
    Json tw = Json::array();
    for (const auto& t : p.twists) tw.push_back(twist_to_json(t));
    Json item{{"twists", tw}, {"dim", p.point.dim}, {"orbit_size", p.point.orbit_size}};
    if (p.parameter) item["parameter"] = enhanced_parameter_to_json(*p.parameter);
    pts.push_back(item);
  }
  return {{"w_order", cq.datum.gamma->order()},
          {"cocycle_trivial", cq.cocycle_trivial},
          {"x_size", cq.datum.size()},
          {"fiber_total", cq.quotient.points.size()},
          {"points", pts}};
}

SpringerTable springer_table_from_json(const Json& j) {
  SpringerTable t;
  const Json* entries = &j;
  if (j.is_object()) {
    t.type = parse_classical_type(str(field(j, "type", "springer table"), "type"));
    t.n = as_int(field(j, "n", "springer table"), "n");
    entries = &field(j, "entries", "springer table");
  }
  if (!entries->is_array()) throw ValidationError("springer table: expected a list of entries");
  for (std::size_t i = 0; i < entries->size(); ++i) {
    const auto& e = (*entries)[i];
    std::string w = "entries[" + std::to_string(i) + "]";
    SpringerEntry se;
    se.lambda = make_partition(int_list(field(e, "lambda", w), w + ".lambda"));
    se.eta = int_list(field(e, "eta_signs", w), w + ".eta_signs");
    const auto& s = field(e, "support", w);
    se.gl_count = as_int(field(s, "levi", w + ".support"), w + ".support.levi");
    se.tail_v = s.contains("v") ? make_partition(int_list(s["v"], w + ".support.v")) : Partition{};
    se.tail_signs = s.contains("qeps") ? int_list(s["qeps"], w + ".support.qeps") : SignPattern{};
    if (!j.is_object()) {
      t.type = parse_classical_type(str(field(e, "type", w), w + ".type"));
      t.n = total(se.lambda);
    }
    if (total(se.lambda) != t.n) throw ValidationError(w + ": lambda has the wrong size");
    t.entries.push_back(std::move(se));
  }
  return t;
}

Json springer_table_to_json(const SpringerTable& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries)
    entries.push_back({{"lambda", e.lambda}, {"eta_signs", e.eta}, {"support", {{"levi", e.gl_count}, {"v", e.tail_v}, {"qeps", e.tail_signs}}}});
  return {{"type", to_string(t.type)}, {"n", t.n}, {"entries", entries}};
}

Json census_to_json(const CensusResult& r) {
  auto terms = [](const std::vector<CensusTerm>& ts) {
    Json out = Json::array();
    for (const auto& t : ts) out.push_back({{"term", t.label}, {"value", t.value}});
    return out;
  };
  return {{"type", to_string(r.type)}, {"n", r.n}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ok", r.ok()},
          {"lhs_terms", terms(r.lhs_terms)}, {"rhs_terms", terms(r.rhs_terms)}};
}

Json cuspidal_pair_to_json(const CuspidalPair& p) {
  Json out{{"lambda", p.lambda}, {"depth", p.depth}, {"signs", p.signs}, {"restricted", p.restricted}};
  if (p.type == ClassicalType::SLmod) out["central_order"] = p.central_order;
  return out;
}

Json json_schemas() {
  Json cyclo = {{"oneOf", Json::array({{{"type", "string"}, {"description", "c0 + c1*z(e)^1 + ..."}},
                                       {{"type", "object"}, {"required", {"e", "coeffs"}}}})}};
  Json group = {{"type", "object"},
                {"required", {"kind"}},
                {"properties",
                 {{"kind", {{"enum", {"perm", "monomial", "table", "named"}}}},
                  {"generators", {{"type", "array"}}},
                  {"dim", {{"type", "integer"}}},
                  {"table", {{"type", "array"}}},
                  {"name", {{"enum", {"cyclic", "dihedral", "symmetric", "alternating", "quaternion", "elementary2"}}}},
                  {"n", {{"type", "integer"}}}}}};
  Json cocycle = {{"type", "object"},
                  {"required", {"m"}},
                  {"properties", {{"group", {{"$ref", "#/group"}}}, {"m", {{"type", "integer"}}}, {"values", {{"description", "[[a, b, k], ...]"}}}}}};
  Json datum = {{"type", "object"},
                {"required", {"gamma", "labels", "action"}},
                {"properties",
                 {{"gamma", {{"$ref", "#/group"}}},
                  {"labels", {{"type", "array"}}},
                  {"action", {{"description", "one row per group element: the image of each point"}}},
                  {"kappa", {{"description", "[{x, m, values}] on isotropy positions"}}},
                  {"scalars", {{"description", "[{g, x, values: [[m, k], ...]}]"}}}}}};
  Json section = {{"type", "object"},
                  {"required", {"group", "normal", "eps", "representatives"}},
                  {"properties",
                   {{"group", {{"$ref", "#/group"}}},
                    {"normal", {{"description", "generators or {elements}"}}},
                    {"eps", {{"description", "{\"<element>\": matrix of cyclotomics}"}}},
                    {"representatives", {{"type", "array"}}}}}};
  Json param = {{"type", "object"},
                {"required", {"group", "blocks"}},
                {"properties",
                 {{"group", {{"required", {"type", "n"}}, {"properties", {{"type", {{"enum", {"GLinner", "Sp", "SO_odd", "SO_even", "U"}}}}, {"n", {{"type", "integer"}}}, {"d", {{"type", "integer"}}}}}}},
                  {"blocks", {{"type", "array"}, {"items", {{"required", {"core"}}, {"properties", {{"core", {{"type", "string"}}}, {"dim", {{"type", "integer"}}}, {"duality", {{"enum", {"orth", "symp", "conj-orth", "conj-symp", "none"}}}}, {"twist", {{"properties", {{"s", {{"type", "string"}}}, {"zeta", {{"description", "[m, k]"}}}}}}}, {"a", {{"type", "integer"}}}, {"mult", {{"type", "integer"}}}}}}}}},
                  {"enhancement", {{"properties", {{"signs", {{"description", "{\"z:core:a\": +-1}"}}}, {"cyclic", {{"type", "integer"}}}, {"zeta_center", {{"description", "[m, k]"}}}}}}}}}};
  Json table = {{"type", "object"},
                {"required", {"type", "n", "entries"}},
                {"properties", {{"entries", {{"items", {{"required", {"lambda", "eta_signs", "support"}}, {"properties", {{"support", {{"required", {"levi"}}, {"properties", {{"levi", {{"type", "integer"}}}, {"v", {{"type", "array"}}}, {"qeps", {{"type", "array"}}}}}}}}}}}}}}}};
  return {{"cyclotomic", cyclo}, {"group", group}, {"cocycle", cocycle}, {"action_datum", datum},
          {"section_datum", section}, {"parameter", param}, {"springer_table", table}};
}

}  // namespace lpcusp
