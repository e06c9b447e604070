#include "lpcusp/builtin_cases.hpp"

#include <functional>
#include <numeric>

#include "lpcusp/error.hpp"

namespace lpcusp {

namespace {

struct Block2 {
  int col0, col1;
  RootOfUnity v0, v1;
};

const Block2 kMinusOne{0, 1, {2, 1}, {2, 1}};
const Block2 kDiagI{0, 1, {4, 1}, {4, 3}};
const Block2 kAntiI{1, 0, {4, 1}, {4, 1}};
const Block2 kRot{1, 0, {2, 1}, {}};

/// first (x) blockwise signs on the other four 2x2 blocks, followed by the block permutation sigma.
MonomialMatrix block_matrix(const Block2& first, const std::vector<int>& signs, const std::vector<int>& sigma) {
  MonomialMatrix m;
  m.col = {first.col0, first.col1};
  m.val = {first.v0, first.v1};
  for (int b = 1; b < 5; ++b)
    for (int r = 0; r < 2; ++r) {
      m.col.push_back(2 * sigma[static_cast<std::size_t>(b)] + r);
      m.val.push_back(signs[static_cast<std::size_t>(b - 1)] < 0 ? RootOfUnity(2, 1) : RootOfUnity());
    }
  return m;
}

const std::vector<int> kId{0, 1, 2, 3, 4};

int element_of(const GroupPtr& g, const MonomialMatrix& m) {
  auto e = g->find_matrix(m);
  if (!e) throw Error("matrix is not in the group");
  return *e;
}

bool first_block_equal(const MonomialMatrix& a, const MonomialMatrix& b) {
  return a.col[0] == b.col[0] && a.col[1] == b.col[1] && a.val[0] == b.val[0] && a.val[1] == b.val[1];
}

CaseReport case_a() {
  CaseReport out{"A", true, Json::object()};
  auto check = [&](const char* key, bool ok, Json value) {
    out.report[key] = {{"value", std::move(value)}, {"ok", ok}};
    out.pass = out.pass && ok;
  };
  auto q = example_a_group();
  check("order", q->order() == 8, q->order());
  check("classes", q->classes().size() == 5, q->classes().size());
  auto minus = element_of(q, block_matrix(kMinusOne, {1, 1, 1, 1}, kId));
  auto n = make_subgroup(q, {0, minus});
  auto qr = quotient(q, n);
  bool klein = qr.group->order() == 4 && qr.group->is_abelian();
  for (std::size_t g = 0; g < qr.group->order(); ++g) klein = klein && qr.group->element_order(static_cast<int>(g)) <= 2;
  check("quotient_klein", klein, qr.group->order());

  auto np = NormalPair::make(q, n);
  auto ng = np.n_group.group;
  MatrixRep eps(ng, {CycloMatrix::identity(1), CycloMatrix::scalar(1, Cyclotomic(-1))});
  int idx = irrep_index_of(np, eps);
  auto cd = intertwiner_cocycle(np, idx);
  bool kappa_nontrivial = !cohomologous(cd.kappa, TwoCocycle::trivial(cd.quotient)).has_value();
  check("kappa_nontrivial", kappa_nontrivial, cocycle_to_json(cd.kappa));

  auto sd = example_a_section();
  auto sc = cocycle_from_section(sd);
  // Q -> A_G(u) is the identity on the first block.
  std::vector<int> image;
  for (int rep : cd.reps) {
    const auto& m = q->matrices()[static_cast<std::size_t>(rep)];
    int hit = -1;
    for (std::size_t r = 0; r < sd.ambient->order(); ++r)
      if (first_block_equal(m, sd.ambient->matrices()[r])) hit = static_cast<int>(r);
    if (hit < 0) throw Error("example A: no element of Z_G(u) with the same first block");
    image.push_back(sc.quotient.projection(hit));
  }
  auto iso = make_hom(cd.quotient, sc.quotient.group, image);
  bool inverse_match = cohomologous(cd.kappa, pullback(sc.natural.inverse(), iso)).has_value();
  check("kappa_matches_natural_inverse", inverse_match, cocycle_to_json(sc.natural));

  auto irr = twisted_irreps(sc.natural);
  check("twisted_irreps", irr.size() == 1 && irr[0].dim == 2, irr.size() == 1 ? irr[0].dim : irr.size());

  auto rep = clifford_bijection(q, n, std::nullopt);
  std::size_t over = 0, dim = 0;
  for (const auto& m : rep.matches)
    if (std::find(m.orbit.begin(), m.orbit.end(), idx) != m.orbit.end()) {
      ++over;
      dim = m.dim;
    }
  check("irreps_over_eps", over == 1 && dim == 2, Json{{"count", over}, {"dim", dim}});
  return out;
}

CaseReport case_b() {
  CaseReport out{"B", true, Json::object()};
  auto cq = component_extended_quotient(example_a_section(), "SL_5(D)");
  bool klein = cq.datum.gamma->order() == 4 && cq.datum.gamma->is_abelian();
  for (std::size_t g = 0; g < cq.datum.gamma->order(); ++g) klein = klein && cq.datum.gamma->element_order(static_cast<int>(g)) <= 2;
  out.report = component_quotient_to_json(cq);
  out.report["w_klein"] = klein;
  out.pass = klein && !cq.cocycle_trivial && cq.quotient.points.size() == 1;
  return out;
}

/// Parameters of GLinner(n, d) built from a partition of n: each part p split as dim * a.
void for_each_gl_parameter(int n, int d, const std::function<void(const EnhancedParameter&)>& f) {
  for (const auto& parts : partitions(n)) {
    std::vector<std::vector<int>> divs;
    for (int p : parts) {
      std::vector<int> ds;
      for (int a = 1; a <= p; ++a)
        if (p % a == 0) ds.push_back(a);
      divs.push_back(ds);
    }
    std::vector<std::size_t> pick(parts.size(), 0);
    while (true) {
      for (bool shared : {false, true}) {
        if (shared && parts.size() == 1) continue;
        LParameter phi{{GroupKindL::GLinner, n, d}, {}};
        long g = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          int a = divs[i][pick[i]];
          std::string core = shared ? "c" : "c" + std::to_string(i);
          int dim = shared ? 1 : parts[i] / a;
          if (shared && parts[i] / a != 1) {
            g = -1;
            break;
          }
          phi.blocks.push_back({{core, dim, Duality::None, core, {}}, a, 1});
          g = gcd_long(g, a);
        }
        if (g <= 0) continue;
        for (long j = 0; j < g; ++j) f({phi, {{}, j}});
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == divs[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
}

CaseReport case_cusp_inner() {
  CaseReport out{"cusp-inner", true, Json::object()};
  long checked = 0, cuspidal = 0;
  Json mismatches = Json::array();
  for (int n = 1; n <= 12; ++n)
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      for_each_gl_parameter(n, d, [&](const EnhancedParameter& p) {
        auto v = validate(p.phi);
        long g = 0;
        for (const auto& b : v.blocks) g = gcd_long(g, b.a);
        long j = mod_floor(p.rho.cyclic, g), ord = j == 0 ? 1 : g / gcd_long(j, g);
        bool expect = v.blocks.size() == 1 && v.blocks[0].mult == 1 && v.blocks[0].a == d && ord == d;
        bool got = is_cuspidal(p);
        ++checked;
        cuspidal += got;
        if (got != expect && mismatches.size() < 10) mismatches.push_back(enhanced_parameter_to_json(p));
      });
    }
  // GL_1(D), d = 2: exactly chi (x) S_2 with the order-2 enhancement.
  Json gl1d = Json::array();
  for_each_gl_parameter(2, 2, [&](const EnhancedParameter& p) {
    if (is_cuspidal(p)) gl1d.push_back(enhanced_parameter_to_json(p));
  });
  bool gl1d_ok = gl1d.size() == 1;
  for (const auto& p : gl1d) gl1d_ok = gl1d_ok && p["blocks"][0]["a"] == 2 && p["enhancement"]["cyclic"] == 1;
  out.report = {{"checked", checked}, {"cuspidal", cuspidal}, {"mismatches", mismatches}, {"gl1_d", gl1d}};
  out.pass = mismatches.empty() && gl1d_ok;
  return out;
}

CaseReport case_unitary() {
  CaseReport out{"cusp-unitary", true, Json::object()};
  long checked = 0, cuspidal = 0;
  Json mismatches = Json::array();
  for (int n = 1; n <= 8; ++n) {
    // Cores: o (conj-orth, dim 1) and s (conj-symp, dim 1), each with a set of distinct a's.
    for (int mo = 0; mo < (1 << n); ++mo)
      for (int ms = 0; ms < (1 << n); ++ms) {
        int size = 0;
        for (int a = 1; a <= n; ++a) size += (mo >> (a - 1) & 1) * a + (ms >> (a - 1) & 1) * a;
        if (size != n) continue;
        LParameter phi{{GroupKindL::U, n, 1}, {}};
        for (int a = 1; a <= n; ++a) {
          if (mo >> (a - 1) & 1) phi.blocks.push_back({{"o", 1, Duality::ConjOrth, "o", {}}, a, 1});
          if (ms >> (a - 1) & 1) phi.blocks.push_back({{"s", 1, Duality::ConjSymp, "s", {}}, a, 1});
        }
        try {
          validate(phi);
        } catch (const ValidationError&) {
          continue;
        }
        auto t = s_group(phi);
        auto r = t.generator_names.size();
        for (int signs = 0; signs < (1 << r); ++signs) {
          Enhancement rho;
          for (std::size_t i = 0; i < r; ++i) rho.signs[t.generator_names[i]] = signs >> i & 1 ? -1 : 1;
          auto sign = [&](const std::string& c, int a) { return rho.signs.count({c, a}) ? rho.signs[{c, a}] : 1; };
          // The a's form start, start + 2, ..., consecutive signs differ, and z_2 acts by -1.
          auto staircase = [&](int mask, int start, const std::string& c) {
            int d = __builtin_popcount(static_cast<unsigned>(mask)), want = 0;
            for (int k = 0; k < d; ++k) want |= 1 << (start + 2 * k - 1);
            if (mask != want) return false;
            for (int k = 1; k < d; ++k)
              if (sign(c, start + 2 * k) != -sign(c, start + 2 * k - 2)) return false;
            return start == 1 || d == 0 || sign(c, 2) == -1;
          };
          bool expect = staircase(mo, 1, "o") && staircase(ms, 2, "s");
          bool got = is_cuspidal({phi, rho});
          ++checked;
          cuspidal += got;
          if (got != expect && mismatches.size() < 10) mismatches.push_back(enhanced_parameter_to_json({phi, rho}));
        }
      }
  }
  out.report = {{"checked", checked}, {"cuspidal", cuspidal}, {"mismatches", mismatches}};
  out.pass = mismatches.empty();
  return out;
}

CaseReport case_census() {
  CaseReport out{"census", true, Json::array()};
  auto run = [&](ClassicalType t, int lo, int hi, int step) {
    for (int n = lo; n <= hi; n += step) {
      auto r = census(t, n);
      out.report.push_back({{"type", to_string(t)}, {"n", n}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ok", r.ok()}});
      out.pass = out.pass && r.ok();
    }
  };
  run(ClassicalType::Sp, 2, 16, 2);
  run(ClassicalType::SO_odd, 1, 17, 2);
  run(ClassicalType::GL, 1, 20, 1);
  return out;
}

}  // namespace

GroupPtr example_a_group() {
  return FiniteGroup::from_monomials({block_matrix(kDiagI, {1, 1, -1, -1}, kId), block_matrix(kAntiI, {1, -1, 1, -1}, kId),
                                      block_matrix(kRot, {1, -1, -1, 1}, kId)});
}

SectionDatum example_a_section() {
  std::vector<MonomialMatrix> reps{block_matrix(kDiagI, {1, 1, 1, 1}, {0, 2, 1, 4, 3}),
                                   block_matrix(kAntiI, {1, 1, 1, 1}, {0, 3, 4, 1, 2}),
                                   block_matrix(kRot, {1, 1, 1, 1}, {0, 4, 3, 2, 1})};
  SectionDatum d;
  d.ambient = FiniteGroup::from_monomials(reps);
  int minus = element_of(d.ambient, block_matrix(kMinusOne, {1, 1, 1, 1}, kId));
  d.normal = make_subgroup(d.ambient, {0, minus});
  d.eps = MatrixRep(as_group(d.normal).group, {CycloMatrix::identity(1), CycloMatrix::scalar(1, Cyclotomic(-1))});
  d.representatives = {0};
  for (const auto& m : reps) d.representatives.push_back(element_of(d.ambient, m));
  return d;
}

std::vector<std::string> builtin_case_names() { return {"A", "B", "cusp-inner", "cusp-unitary", "census"}; }

CaseReport run_builtin_case(const std::string& name) {
  if (name == "A") return case_a();
  if (name == "B") return case_b();
  if (name == "cusp-inner") return case_cusp_inner();
  if (name == "cusp-unitary") return case_unitary();
  if (name == "census") return case_census();
  throw ValidationError("unknown example '" + name + "'; known: A, B, cusp-inner, cusp-unitary, census");
}

}  // namespace lpcusp
