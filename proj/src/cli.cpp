#include "lpcusp/cli.hpp"

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lpcusp/builtin_cases.hpp"
#include "lpcusp/error.hpp"
#include "lpcusp/json_io.hpp"

namespace lpcusp {

namespace {

/// Collects every input that influences a report, for the digest.
struct Inputs {
  std::string text;

  Json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    text += path + '\n' + ss.str() + '\n';
    return parse_json(ss.str(), path);
  }
};

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

/// Natural-representation size from a Lie rank: A_r -> GL_{r+1}, GL rank r -> GL_r, B_r -> SO_{2r+1}, C_r -> Sp_{2r}, D_r -> SO_{2r}.
int size_from_rank(const std::string& type_text, ClassicalType t, int rank) {
  switch (t) {
    case ClassicalType::GL: return type_text == "A" ? rank + 1 : rank;
    case ClassicalType::SLmod: return rank + 1;
    case ClassicalType::SO_odd: return 2 * rank + 1;
    default: return 2 * rank;
  }
}

Json centralizer_json(const LParameter& phi) {
  Json out = Json::array();
  for (const auto& f : centralizer_factors(phi))
    out.push_back({{"core", f.core}, {"type", to_string(f.type)}, {"dim", f.dim}, {"lambda", f.lambda}});
  return out;
}

Json classify(const ParsedParameter& pp, const std::vector<SpringerTable>& tables) {
  Json r;
  LParameter v;
  try {
    v = validate(pp.p.phi);
  } catch (const ValidationError& e) {
    return {{"valid", false}, {"error", e.what()}};
  }
  EnhancedParameter p{v, pp.p.rho};
  auto t = s_group(v);
  r["valid"] = true;
  r["parameter"] = lparameter_to_json(v);
  r["discrete"] = is_discrete(v);
  r["bounded"] = is_bounded(v);
  r["cuspidal"] = is_cuspidal(p);
  r["relevant"] = is_relevant(p, pp.zeta_center);
  r["s_group_order"] = t.s_group->order();
  r["r_group_order"] = t.r_group.group->order();
  r["central_character"] = root_to_json(central_character(v, p.rho));
  r["centralizer"] = centralizer_json(v);
  try {
    auto cd = cuspidal_support(p, tables);
    r["cuspidal_support"] = cuspidal_datum_to_json(cd);
    r["bernstein_component"] = inertial_class_to_json(inertial_class(cd));
  } catch (const NotSupported& e) {
    r["cuspidal_support"] = {{"not_supported", e.what()}};
  }
  return r;
}

std::vector<SpringerTable> load_tables(Inputs& in, const std::vector<std::string>& files) {
  std::vector<SpringerTable> out;
  for (const auto& f : files) {
    auto j = in.load(f);
    if (j.is_array() && !j.empty() && j[0].contains("entries"))
      for (const auto& t : j) out.push_back(springer_table_from_json(t));
    else
      out.push_back(springer_table_from_json(j));
  }
  return out;
}

Json clifford_report_json(const CliffordReport& rep, const NormalPair& np) {
  Json orbits = Json::array();
  for (std::size_t i = 0; i < rep.orbits.size(); ++i)
    orbits.push_back({{"orbit", rep.orbits[i].orbit},
                      {"stabilizer_order", rep.orbits[i].stabilizer.order()},
                      {"kappa", cocycle_to_json(rep.kappas[i])},
                      {"kappa_trivial_class", static_cast<bool>(rep.kappa_trivial_class[i])}});
  Json matches = Json::array();
  std::size_t sum = 0;
  for (const auto& m : rep.matches) {
    matches.push_back({{"orbit", m.orbit}, {"tau", m.tau}, {"dim", m.dim}, {"target", m.target}});
    sum += m.dim * m.dim;
  }
  return {{"normal_order", np.n.order()},
          {"orbits", orbits},
          {"matches", matches},
          {"irreps", rep.targets.size()},
          {"sum_dim_squared", sum}};
}

Json tga_json(const std::vector<TGAIrrep>& irr) {
  Json out = Json::array();
  for (const auto& r : irr) {
    Json tr = Json::array();
    for (const auto& t : r.traces) tr.push_back(t.to_string());
    out.push_back({{"dim", r.dim}, {"traces", tr}});
  }
  return out;
}

Json error_json(const std::string& kind, const std::string& msg) { return {{"error", kind}, {"message", msg}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for the generalized Springer correspondence and cuspidal enhanced L-parameters"};
  app.set_help_all_flag("--help-all");
  app.fallthrough();
  bool compact = false, schema = false;
  app.add_flag("--compact", compact, "Single-line JSON output");
  app.add_flag("--schema", schema, "Print the JSON input schemas");

  std::string group_file, normal_file, cocycle_file, in_file, section_file, type_text = "C", case_name;
  std::vector<std::string> table_files;
  bool with_table = false, matrices = false, characters_only = false;
  int rank = -1, n = -1, k = 0, jobs = 1;

  auto* group = app.add_subcommand("group", "Group summary: order, classes, generators");
  group->add_option("--group", group_file, "Group JSON")->required();
  group->add_flag("--table", with_table, "Include the multiplication table");

  auto* reps = app.add_subcommand("reps", "Character table (and optionally irreducible matrices)");
  reps->add_option("--group", group_file, "Group JSON")->required();
  reps->add_flag("--matrices", matrices, "Include images of the generators");

  auto* clifford = app.add_subcommand("clifford", "Clifford theory");
  auto* analyze = clifford->add_subcommand("analyze", "Orbits, intertwiner cocycles and the Clifford matching");
  analyze->add_option("--group", group_file, "Group JSON")->required();
  analyze->add_option("--normal", normal_file, "Normal subgroup JSON")->required();
  analyze->add_option("--cocycle", cocycle_file, "Cocycle on the quotient group");
  clifford->require_subcommand(1);

  auto* tga = app.add_subcommand("tga", "Twisted group algebras");
  auto* tga_irreps = tga->add_subcommand("irreps", "Irreducible modules of K[G, c]");
  tga_irreps->add_option("--cocycle", cocycle_file, "Cocycle JSON")->required();
  tga_irreps->add_option("--group", group_file, "Group JSON (overrides the embedded group)");
  tga_irreps->add_flag("--characters-only", characters_only, "Traces only");
  tga->require_subcommand(1);

  auto* extquot = app.add_subcommand("extquot", "Twisted extended quotients");
  auto* build = extquot->add_subcommand("build", "Build (X//Gamma)_kappa");
  build->add_option("--in", in_file, "Action datum JSON")->required();
  extquot->require_subcommand(1);

  auto* springer = app.add_subcommand("springer", "Unipotent classes and generalized Springer data");
  auto add_type = [&](CLI::App* c) {
    c->add_option("--type", type_text, "GL, A, SL, Sp, C, SO_odd, B, SO_even, D, O");
    c->add_option("--rank", rank, "Lie rank");
    c->add_option("--n", n, "Size of the natural representation (overrides --rank)");
    c->add_option("--k", k, "SLmod: order of the central quotient");
  };
  auto* census_cmd = springer->add_subcommand("census", "Counting identity for the generalized Springer correspondence");
  add_type(census_cmd);
  auto* cuspidal_cmd = springer->add_subcommand("cuspidal", "Cuspidal pairs");
  add_type(cuspidal_cmd);
  auto* classes_cmd = springer->add_subcommand("classes", "Unipotent classes with component groups");
  add_type(classes_cmd);
  auto* table_cmd = springer->add_subcommand("table", "Forced entries of the generalized Springer table");
  add_type(table_cmd);
  auto* cocycle_cmd = springer->add_subcommand("cocycle", "Section cocycle and the intertwiner cocycle comparison");
  cocycle_cmd->add_option("--section", section_file, "Section datum JSON")->required();
  springer->require_subcommand(1);

  auto* lparam = app.add_subcommand("lparam", "Enhanced L-parameters");
  auto* classify_cmd = lparam->add_subcommand("classify", "Discreteness, cuspidality, cuspidal support");
  classify_cmd->add_option("--in", in_file, "Parameter JSON")->required();
  classify_cmd->add_option("--tables", table_files, "Springer table JSON files");
  auto* component_cmd = lparam->add_subcommand("component", "Bernstein component and its extended quotient");
  component_cmd->add_option("--in", in_file, "Parameter JSON")->required();
  component_cmd->add_option("--tables", table_files, "Springer table JSON files");
  auto* batch_cmd = lparam->add_subcommand("batch", "Classify a JSON list of parameters");
  batch_cmd->add_option("--in", in_file, "JSON list of parameters")->required();
  batch_cmd->add_option("--tables", table_files, "Springer table JSON files");
  batch_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  lparam->require_subcommand(1);

  auto* examples = app.add_subcommand("examples", "Run the built-in worked examples");
  examples->add_option("--case", case_name, "A, B, cusp-inner, cusp-unitary or census");

  std::vector<std::string> argv_store{"lpcusp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << error_json("usage", e.what()).dump() << "\n";
    return kExitValidation;
  }

  auto emit = [&](const std::string& command, const Inputs& in, Json result) {
    Json report{{"command", command}, {"inputs_digest", fnv1a(command + '\n' + in.text)}, {"exact", true}, {"result", std::move(result)}};
    out << (compact ? report.dump() : report.dump(2)) << "\n";
  };

  try {
    Inputs in;
    std::string echo;
    for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;
    if (schema) {
      out << json_schemas().dump(compact ? -1 : 2) << "\n";
      return kExitOk;
    }
    auto type_size = [&]() {
      auto t = parse_classical_type(type_text);
      if (n < 0 && rank < 0) throw ValidationError("give --rank or --n");
      return std::make_pair(t, n >= 0 ? n : size_from_rank(type_text, t, rank));
    };
    if (group->parsed()) {
      auto g = group_from_json(in.load(group_file));
      emit(echo, in, group_to_json(*g, with_table));
    } else if (reps->parsed()) {
      auto g = group_from_json(in.load(group_file));
      Json r = character_table_to_json(g);
      if (matrices) {
        Json irr = Json::array();
        for (const auto& rho : irreps_matrices(g)) {
          Json gens = Json::array();
          for (int s : g->generators()) gens.push_back(matrix_to_json(rho(s)));
          irr.push_back({{"dim", rho.dim()}, {"generator_images", gens}});
        }
        r["irreps"] = irr;
        r["generators"] = g->generators();
      }
      emit(echo, in, r);
    } else if (analyze->parsed()) {
      auto g = group_from_json(in.load(group_file));
      auto nsub = subgroup_from_json(g, in.load(normal_file));
      auto np = NormalPair::make(g, nsub);
      std::optional<TwoCocycle> natural;
      if (!cocycle_file.empty()) natural = cocycle_from_json(in.load(cocycle_file), quotient(g, nsub).group);
      emit(echo, in, clifford_report_json(clifford_bijection(g, nsub, natural), np));
    } else if (tga_irreps->parsed()) {
      auto cj = in.load(cocycle_file);
      GroupPtr g = group_file.empty() ? nullptr : group_from_json(in.load(group_file));
      auto c = cocycle_from_json(cj, g);
      emit(echo, in, {{"group_order", c.group()->order()}, {"m", c.m()}, {"irreps", tga_json(twisted_irreps(c, characters_only ? 0 : kDefaultMatrixBound))}});
    } else if (build->parsed()) {
      auto d = action_datum_from_json(in.load(in_file));
      emit(echo, in, extended_quotient_to_json(d, build_extended_quotient(d)));
    } else if (census_cmd->parsed()) {
      auto [t, size] = type_size();
      emit(echo, in, census_to_json(census(t, size)));
    } else if (cuspidal_cmd->parsed()) {
      auto [t, size] = type_size();
      Json pairs = Json::array();
      for (const auto& p : cuspidal_pairs(t, size, k)) pairs.push_back(cuspidal_pair_to_json(p));
      emit(echo, in, {{"type", to_string(t)}, {"n", size}, {"pairs", pairs}});
    } else if (classes_cmd->parsed()) {
      auto [t, size] = type_size();
      Json cls = Json::array();
      for (const auto& u : unipotent_classes(t, size, k)) {
        auto cg = component_group(t, u.lambda, k);
        cls.push_back({{"lambda", u.lambda}, {"component_group_order", cg.group->order()},
                       {"identity_part_order", cg.identity_part.order()}, {"generators", cg.generator_names}});
      }
      emit(echo, in, {{"type", to_string(t)}, {"n", size}, {"classes", cls}});
    } else if (table_cmd->parsed()) {
      auto [t, size] = type_size();
      emit(echo, in, springer_table_to_json(builtin_springer_table(t, size)));
    } else if (cocycle_cmd->parsed()) {
      auto sd = section_datum_from_json(in.load(section_file));
      auto sc = cocycle_from_section(sd);
      auto rep = compare_section_cocycles(sd);
      emit(echo, in,
           {{"quotient_order", sc.quotient.group->order()},
            {"natural", cocycle_to_json(sc.natural)},
            {"natural_trivial", rep.natural_trivial},
            {"kappa", cocycle_to_json(rep.kappa)},
            {"kappa_trivial", rep.kappa_trivial},
            {"kappa_matches_natural_inverse", rep.matches_inverse},
            {"kappa_matches_natural", rep.matches_direct},
            {"twisted_irreps", tga_json(twisted_irreps(sc.natural, 0))}});
    } else if (classify_cmd->parsed()) {
      auto pp = enhanced_parameter_from_json(in.load(in_file));
      emit(echo, in, classify(pp, load_tables(in, table_files)));
    } else if (component_cmd->parsed()) {
      auto pp = enhanced_parameter_from_json(in.load(in_file));
      auto ic = bernstein_component(pp.p, load_tables(in, table_files));
      Json r = inertial_class_to_json(ic);
      r["extended_quotient"] = component_quotient_to_json(component_extended_quotient(ic));
      emit(echo, in, r);
    } else if (batch_cmd->parsed()) {
      auto list = in.load(in_file);
      if (!list.is_array()) throw ValidationError(in_file + ": expected a JSON list of parameters");
      auto tables = load_tables(in, table_files);
      std::vector<Json> results(list.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i = next++; i < list.size(); i = next++) {
          try {
            results[i] = classify(enhanced_parameter_from_json(list[i]), tables);
          } catch (const NotSupported& e) {
            results[i] = {{"valid", true}, {"not_supported", e.what()}};
          } catch (const Error& e) {
            results[i] = {{"valid", false}, {"error", e.what()}};
          }
        }
      };
      std::vector<std::thread> pool;
      for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
      worker();
      for (auto& th : pool) th.join();
      Json arr = Json::array();
      for (auto& r : results) arr.push_back(std::move(r));
      emit(echo, in, arr);
    } else if (examples->parsed()) {
      std::vector<std::string> names = case_name.empty() ? builtin_case_names() : std::vector<std::string>{case_name};
      Json arr = Json::array();
      bool all = true;
      for (const auto& name : names) {
        auto c = run_builtin_case(name);
        all = all && c.pass;
        arr.push_back({{"case", c.name}, {"status", c.pass ? "pass" : "fail"}, {"report", c.report}});
      }
      emit(echo, in, arr);
      return all ? kExitOk : kExitFailure;
    } else {
      out << app.help();
      return args.empty() ? kExitOk : kExitValidation;
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << error_json("validation", e.what()).dump() << "\n";
    return kExitValidation;
  } catch (const NotSupported& e) {
    err << error_json("not_supported", e.what()).dump() << "\n";
    return kExitNotSupported;
  } catch (const BoundExceeded& e) {
    err << error_json("bound_exceeded", e.what()).dump() << "\n";
    return kExitNotSupported;
  } catch (const std::exception& e) {
    err << error_json("internal", e.what()).dump() << "\n";
    return kExitFailure;
  }
}

}  // namespace lpcusp
