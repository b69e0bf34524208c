// Command-line front end: generate bases for grade-pure solution spaces and
// their unions, verify stored basis files, print dimension tables, and run a
// built-in property self-test.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size cap.

#include "gtb/ck.hpp"
#include "gtb/fischer.hpp"
#include "gtb/gt_basis.hpp"
#include "gtb/io.hpp"
#include "gtb/special_poly.hpp"
#include "gtb/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace gtb;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeCap = 3;

// ---------------------------------------------------------------------------
// generate

struct GenerateConfig {
  int m = 0;
  int k = 0;
  int grade = -1;
  std::vector<int> grade_set;
  std::string algebra = "complex";
  std::string format = "json";
  std::string out;
  bool normalize = false;
};

int run_generate(const GenerateConfig& cfg) {
  if (cfg.grade < 0 && cfg.grade_set.empty()) {
    std::cerr << "generate: exactly one of --grade or --set is required\n";
    return kExitUsage;
  }
  AlgebraMode mode =
      cfg.algebra == "real" ? AlgebraMode::real_mode : AlgebraMode::complex_mode;

  Basis basis;
  if (cfg.grade >= 0) {
    if (cfg.grade > cfg.m) {
      std::cerr << "generate: --grade must lie between 0 and --dim\n";
      return kExitUsage;
    }
    basis = gt_basis_hodge(cfg.m, cfg.k, cfg.grade, mode);
  } else {
    std::set<int> S(cfg.grade_set.begin(), cfg.grade_set.end());
    for (int s : S)
      if (s < 0 || s > cfg.m) {
        std::cerr << "generate: --set entries must lie between 0 and --dim\n";
        return kExitUsage;
      }
    basis = gmt_basis(cfg.m, cfg.k, S, mode);
  }
  if (cfg.normalize) normalize_basis(basis);

  std::string payload;
  if (cfg.format == "json")
    payload = basis_to_json(basis).dump(2) + "\n";
  else
    payload = basis_to_text(basis, cfg.format == "latex");

  if (cfg.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "generate: cannot write " << cfg.out << "\n";
      return kExitVerification;
    }
    f << payload;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::string& path) {
  ordered_json report;
  report["file"] = path;
  Basis b;
  try {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file");
    b = basis_from_json(ordered_json::parse(in));
  } catch (const std::exception& e) {
    report["error"] = e.what();
    report["ok"] = false;
    std::cout << report.dump(2) << "\n";
    return kExitVerification;
  }

  const int m = b.meta.m, k = b.meta.k;

  // A union-system file with an empty grade set holds one cross slice: the
  // elements that complete the flanking single-grade spaces to a full basis
  // of the union system.  Recover the center grade from the stored elements.
  std::set<int> allowed = b.meta.S;
  int slice_grade = -1;
  if (b.meta.kind == BasisKind::gmt && allowed.empty() && !b.elements.empty()) {
    std::set<int> seen;
    for (const auto& el : b.elements)
      for (int g : el.poly.grades()) seen.insert(g);
    if (seen.size() == 2 && *seen.rbegin() - *seen.begin() == 2) {
      slice_grade = *seen.begin() + 1;
      allowed = seen;
      report["slice_grade"] = slice_grade;
    }
  }

  bool membership = true;
  bool real_ok = true;
  for (const auto& el : b.elements) {
    int deg = -1;
    bool good = el.poly.is_homogeneous(&deg) && (el.poly.is_zero() || deg == k);
    switch (b.meta.kind) {
      case BasisKind::hodge:
        good = good && in_Hks(el.poly, m, k, b.meta.s);
        break;
      case BasisKind::riesz:
        good = good && in_Hks(el.poly, m, k, 1);
        break;
      case BasisKind::harmonic:
        good = good && laplacian(el.poly).is_zero() && el.poly.grades() == std::set<int>{0};
        break;
      case BasisKind::gmt: {
        good = good && is_monogenic(el.poly);
        for (int g : el.poly.grades()) good = good && allowed.count(g) > 0;
        break;
      }
    }
    if (!good) membership = false;
    if (b.meta.mode == AlgebraMode::real_mode && !el.poly.is_real()) real_ok = false;
  }

  int expected = 0;
  switch (b.meta.kind) {
    case BasisKind::hodge: expected = nullspace_dim_hodge(m, k, b.meta.s); break;
    case BasisKind::riesz: expected = nullspace_dim_hodge(m, k, 1); break;
    case BasisKind::harmonic: expected = harmonic_dim_oracle(m, k); break;
    case BasisKind::gmt:
      if (slice_grade >= 0)
        expected = nullspace_dim_gmt(m, k, allowed) -
                   nullspace_dim_hodge(m, k, slice_grade - 1) -
                   nullspace_dim_hodge(m, k, slice_grade + 1);
      else
        expected = nullspace_dim_gmt(m, k, b.meta.S);
      break;
  }
  bool cardinality = static_cast<int>(b.elements.size()) == expected;

  bool gram_fischer = true, gram_l2 = true, independent = true;
  if (!b.elements.empty()) {
    gram_fischer = gram_check(b.polys(), InnerKind::fischer).ok();
    gram_l2 = gram_check(b.polys(), InnerKind::l2).ok();
    independent = linearly_independent(b.polys());
    if (slice_grade >= 0 && independent) {
      // The slice must stay independent of the flanking single-grade spaces.
      GtCache cache;
      auto all = b.polys();
      for (int g : {slice_grade - 1, slice_grade + 1})
        for (const auto& el : gt_basis_hodge(m, k, g, b.meta.mode, &cache).elements)
          all.push_back(el.poly);
      independent = linearly_independent(all);
    }
  }

  bool ok = membership && real_ok && cardinality && gram_fischer && gram_l2 && independent;
  report["count"] = b.elements.size();
  report["expected_count"] = expected;
  report["checks"] = ordered_json{{"membership", membership},
                                  {"coefficient_field", real_ok},
                                  {"cardinality", cardinality},
                                  {"gram_fischer", gram_fischer},
                                  {"gram_l2", gram_l2},
                                  {"independent", independent}};
  report["ok"] = ok;
  std::cout << report.dump(2) << "\n";
  return ok ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// dims

int run_dims(int m, int k) {
  std::cout << "# dims m=" << m << " k=" << k << "\n";
  for (int s = 0; s <= m; ++s)
    std::cout << "s=" << s << ": " << nullspace_dim_hodge(m, k, s) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// selftest

std::mt19937& rng() {
  static std::mt19937 gen(424243u);
  return gen;
}

MVPolynomial rand_poly_all(int m, int k) {
  auto monos = monomials_of_degree(m, k);
  std::set<int> grades;
  for (int s = 0; s <= m; ++s) grades.insert(s);
  auto blades = blades_of_grades(m, grades);
  std::uniform_int_distribution<std::size_t> mi(0, monos.size() - 1);
  std::uniform_int_distribution<std::size_t> bi(0, blades.size() - 1);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  MVPolynomial p(m);
  for (int t = 0; t < 8; ++t)
    p.add_term(monos[mi(rng())], blades[bi(rng())],
               Scalar(rational_of(num(rng()), den(rng())), rational_of(num(rng()), den(rng()))));
  return p;
}

bool section_operator_identities(int max_dim) {
  for (int m = 2; m <= max_dim; ++m) {
    auto Dp = op_dirac_plus();
    auto Dm = op_dirac_minus();
    auto Xw = op_x_wedge();
    auto Xb = op_x_bullet();
    auto Z = OperatorExpr::zero();
    const std::vector<std::pair<OperatorExpr, OperatorExpr>> pairs = {
        {anticommutator(Xw, Xw), Z},
        {anticommutator(Xb, Xb), Z},
        {anticommutator(Xw, Xb), op_x_power(2)},
        {anticommutator(Dp, Dp), Z},
        {anticommutator(Dm, Dm), Z},
        {anticommutator(Dp, Dm), Scalar(-1) * op_laplacian()},
        {anticommutator(Xb, Dp), Scalar(-1) * op_weighted_euler_a()},
        {anticommutator(Xw, Dm), Scalar(-1) * op_weighted_euler_b()},
        {anticommutator(Xb, Dm), Z},
        {anticommutator(Xw, Dp), Z},
        {commutator(Dp, compose(op_x_power(1), Xb)), compose(Xw, op_weighted_euler_a())},
        {commutator(Dm, compose(op_x_power(1), Xw)), compose(Xb, op_weighted_euler_b())},
        {commutator(Dp, op_x_power(2)), Scalar(-2) * Xw},
        {commutator(Dm, op_x_power(2)), Scalar(-2) * Xb},
    };
    for (const auto& [f, g] : pairs)
      for (int k = 0; k <= 3; ++k)
        for (int t = 0; t < 4; ++t) {
          auto p = rand_poly_all(m, k);
          if (!(f(p) == g(p))) return false;
        }
  }
  return true;
}

bool section_extension_round_trips(int max_dim) {
  for (int m = 2; m <= max_dim; ++m)
    for (int k = 0; k <= 2; ++k)
      for (int s = 1; s <= m - 1; ++s)
        for (int t = 0; t < 8; ++t) {
          auto seed_u = rand_poly_all(m - 1, k).grade_projection(s).embed(m);
          auto seed_v = rand_poly_all(m - 1, k).grade_projection(s - 1).embed(m);
          InitialDatum d(m, k, s, proj_plus(seed_u, m - 1), proj_minus(seed_v, m - 1));
          auto closed = ck_extend_hodge(d);
          if (!(closed == ck_extend_generic(d.combined()))) return false;
          if (!(closed.restrict_last() == d.combined())) return false;
        }
  return true;
}

bool section_cardinalities(int max_dim) {
  GtCache cache;
  for (int m = 2; m <= max_dim; ++m)
    for (int k = 0; k <= 3; ++k)
      for (int s = 0; s <= m; ++s)
        if (static_cast<int>(cache.hodge(m, k, s).size()) != nullspace_dim_hodge(m, k, s))
          return false;
  return true;
}

bool section_orthogonality(int max_dim, bool inject_fault) {
  GtCache cache;
  for (int m = 2; m <= max_dim; ++m)
    for (int k = 0; k <= 2; ++k)
      for (int s = 0; s <= m; ++s) {
        auto b = gt_basis_hodge(m, k, s, AlgebraMode::complex_mode, &cache);
        if (b.elements.empty()) continue;
        auto polys = b.polys();
        if (inject_fault && m == 3 && k == 1 && s == 1 && polys.size() >= 2) {
          // Deliberately break orthogonality to prove the check can fail.
          polys[0] += polys[1];
          polys[1] = polys[0] - polys[1];
        }
        for (auto kind : {InnerKind::fischer, InnerKind::l2})
          if (!gram_check(polys, kind).ok()) return false;
      }
  auto u = gmt_basis(3, 2, {0, 1, 2, 3}, AlgebraMode::complex_mode);
  for (auto kind : {InnerKind::fischer, InnerKind::l2})
    if (!gram_check(u.polys(), kind).ok()) return false;
  return true;
}

// The smallest explicit bases, entered as closed forms; the constructed bases
// must reproduce them up to nonzero scalars (order-free matching).
bool section_pinned_forms() {
  auto matches = [](const std::vector<BasisElement>& got,
                    const std::vector<MVPolynomial>& want) {
    if (got.size() != want.size()) return false;
    std::vector<bool> used(want.size(), false);
    for (const auto& el : got) {
      const auto* lead = el.poly.leading_term();
      if (!lead) return false;
      bool found = false;
      for (std::size_t j = 0; j < want.size() && !found; ++j) {
        if (used[j]) continue;
        Scalar q = want[j].coeff(lead->first.mono, lead->first.blade) * lead->second.inverse();
        if (!q.is_zero() && want[j] == el.poly * q) used[j] = found = true;
      }
      if (!found) return false;
    }
    return true;
  };

  auto zp = z_plus(3), zm = z_minus(3);
  auto Wp = MVPolynomial::constant(w_plus(3));
  auto Wm = MVPolynomial::constant(w_minus(3));
  auto x3 = MVPolynomial::variable(3, 3);
  auto E3 = MVPolynomial::constant(Multivector::e(3, {3}));
  auto E12 = MVPolynomial::constant(Multivector::e(3, {1, 2}));
  Scalar I = Scalar::i();
  Scalar half = Scalar::of(1, 2);

  GtCache cache;
  if (!matches(gt_basis_hodge(3, 0, 1, AlgebraMode::complex_mode, &cache).elements,
               {Wp, Wm, E3}))
    return false;
  if (!matches(gt_basis_hodge(3, 1, 1, AlgebraMode::complex_mode, &cache).elements,
               {zp * Wp, zm * Wm, half * (zm * Wp + zp * Wm) - 2 * x3 * E3,
                -(zp * E3) - x3 * Wp, -(zm * E3) - x3 * Wm}))
    return false;
  if (!matches(gmt_v_elements(3, 1, 1, &cache),
               {-2 * zp + x3 * Wp * E3 - I * zp * E12, -2 * zm + x3 * Wm * E3 + I * zm * E12,
                -2 * x3 - half * ((zm * Wp + zp * Wm) * E3)}))
    return false;
  return true;
}

int run_selftest(bool quick, bool inject_fault) {
  const int max_dim = quick ? 3 : 4;
  struct Section {
    const char* name;
    bool ok;
  };
  std::vector<Section> sections;
  sections.push_back({"operator identities", section_operator_identities(max_dim)});
  sections.push_back({"extension round trips", section_extension_round_trips(max_dim)});
  sections.push_back({"cardinality vs nullspace", section_cardinalities(max_dim)});
  sections.push_back({"orthogonality", section_orthogonality(max_dim, inject_fault)});
  sections.push_back({"pinned closed forms", section_pinned_forms()});

  bool all_ok = true;
  for (const auto& s : sections) {
    std::cout << (s.ok ? "[ok]   " : "[FAIL] ") << s.name << "\n";
    all_ok = all_ok && s.ok;
  }
  std::cout << (all_ok ? "selftest passed" : "selftest failed") << "\n";
  return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bases for grade-pure polynomial solution spaces and their unions"};
  app.require_subcommand(1);

  GenerateConfig gen_cfg;
  auto* gen = app.add_subcommand("generate", "Construct a basis and emit it");
  gen->add_option("--dim", gen_cfg.m, "ambient dimension (>= 2)")->required()->check(CLI::Range(2, 16));
  gen->add_option("--degree", gen_cfg.k, "homogeneity degree (>= 0)")->required()->check(CLI::NonNegativeNumber);
  auto* grade_opt = gen->add_option("--grade", gen_cfg.grade, "single value grade s (0..dim)")
                        ->check(CLI::Range(0, 16));
  auto* set_opt = gen->add_option("--set", gen_cfg.grade_set, "comma-separated grade set for a union system")->delimiter(',');
  grade_opt->excludes(set_opt);
  set_opt->excludes(grade_opt);
  gen->add_option("--algebra", gen_cfg.algebra, "coefficient field of the basis")
      ->check(CLI::IsMember({"complex", "real"}))
      ->capture_default_str();
  gen->add_option("--format", gen_cfg.format, "output format")
      ->check(CLI::IsMember({"json", "text", "latex"}))
      ->capture_default_str();
  gen->add_option("--out", gen_cfg.out, "write output to this file instead of stdout");
  gen->add_flag("--normalize", gen_cfg.normalize, "rescale each element to leading coefficient 1");

  std::string verify_path;
  auto* ver = app.add_subcommand("verify", "Check a stored basis file");
  ver->add_option("path", verify_path, "basis JSON file")->required();

  int dims_m = 0, dims_k = 0;
  auto* dims = app.add_subcommand("dims", "Print the solution-space dimensions for all grades");
  dims->add_option("--dim", dims_m, "ambient dimension (>= 2)")->required()->check(CLI::Range(2, 16));
  dims->add_option("--degree", dims_k, "homogeneity degree (>= 0)")->required()->check(CLI::NonNegativeNumber);

  bool quick = false, inject_fault = false;
  auto* self = app.add_subcommand("selftest", "Run the built-in property matrix");
  self->add_flag("--quick", quick, "restrict to dimension 3");
  self->add_flag("--inject-fault", inject_fault, "corrupt one input to prove checks can fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_generate(gen_cfg);
    if (ver->parsed()) return run_verify(verify_path);
    if (dims->parsed()) return run_dims(dims_m, dims_k);
    if (self->parsed()) return run_selftest(quick, inject_fault);
  } catch (const SizeCapExceeded& e) {
    std::cerr << "size cap exceeded: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
