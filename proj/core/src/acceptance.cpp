#include "invlab/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "invlab/catalog.hpp"
#include "invlab/experiment.hpp"
#include "invlab/fourier.hpp"
#include "invlab/laplace.hpp"
#include "invlab/parallel.hpp"
#include "invlab/semigroup.hpp"

namespace invlab {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.str().empty()) detail << "; ";
    detail << (ok ? "" : "FAILED: ") << what;
  }
  void note(const std::string& what) {
    if (!detail.str().empty()) detail << "; ";
    detail << what;
  }
};

// ------------------------------------------------------------------ 1
CriterionResult c1_kernel_closed_forms(const AcceptanceOptions& opts) {
  Check ck;
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> uR(1.0, 32.0), ur(0.05, 5.0);
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-10;
  cfg.rel_tol = 1e-10;

  double worst1 = 0.0, worst2 = 0.0;
  for (int i = 0; i < 50; ++i) {
    double R = uR(rng), r = ur(rng);
    // n = 1: (1/2pi) int_{-R}^{R} cos(r k) dk
    double oracle = integrate_finite([r](double k) { return std::cos(r * k); }, -R, R, cfg).value /
                    (2.0 * M_PI);
    worst1 = std::max(worst1, std::abs(dirichlet_1d(R, r) - oracle));
  }
  for (int i = 0; i < 50; ++i) {
    double R = uR(rng), r = ur(rng);
    // n = 2: (2pi)^{-2} int_0^R rho [int_0^{2pi} cos(rho r cos th) dth] drho,
    // inner integral by the (spectrally exact) trapezoid rule.
    const int M = 512;
    auto inner = [&](double rho) {
      double s = 0.0;
      for (int m = 0; m < M; ++m) s += std::cos(rho * r * std::cos(2.0 * M_PI * m / M));
      return rho * s * (2.0 * M_PI / M);
    };
    double oracle =
        integrate_weighted_panels([](double) { return 1.0; }, inner, M_PI / (r + 1.0), 0.0, R,
                                  cfg)
            .value /
        std::pow(2.0 * M_PI, 2);
    worst2 = std::max(worst2, std::abs(dirichlet_2d(R, r) - oracle));
  }
  ck.require(worst1 <= 1e-6, "1-D closed form vs ball integral, worst " + fmt(worst1));
  ck.require(worst2 <= 1e-6, "2-D closed form vs ball integral, worst " + fmt(worst2));
  return {1, "kernel closed forms (1-D and 2-D vs ball-integral quadrature)", ck.pass,
          ck.detail.str()};
}

// ------------------------------------------------------------------ 2
CriterionResult c2_recursion(const AcceptanceOptions& opts) {
  Check ck;
  std::mt19937_64 rng(opts.seed + 1);
  std::uniform_real_distribution<double> uR(1.0, 64.0), ur(0.05, 5.0);
  double worst3 = 0.0, worst5 = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double R = uR(rng), r = ur(rng);
    double u = R * r;
    double hand3 = (std::sin(u) - u * std::cos(u)) / (2.0 * M_PI * M_PI * r * r * r);
    double hand5 = ((3.0 - u * u) * std::sin(u) - 3.0 * u * std::cos(u)) /
                   (4.0 * std::pow(M_PI, 3) * std::pow(r, 5));
    double scale3 = std::pow(R, 3) / std::pow(1.0 + u, 2.0);
    double scale5 = std::pow(R, 5) / std::pow(1.0 + u, 3.0);
    double e3 = std::abs(dirichlet_nd({3, R}, r) - hand3) / std::max({std::abs(hand3), scale3});
    double e5 = std::abs(dirichlet_nd({5, R}, r) - hand5) / std::max({std::abs(hand5), scale5});
    worst3 = std::max(worst3, e3);
    worst5 = std::max(worst5, e5);
  }
  ck.require(worst3 <= 1e-10, "n=3 closed form, worst rel " + fmt(worst3));
  ck.require(worst5 <= 1e-10, "n=5 closed form, worst rel " + fmt(worst5));
  return {2, "kernel recursion vs hand-derived closed forms (n=3,5)", ck.pass, ck.detail.str()};
}

// ------------------------------------------------------------------ 3
CriterionResult c3_sine_integral(const AcceptanceOptions&) {
  Check ck;
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-10;
  cfg.rel_tol = 1e-10;
  const double Rs[3] = {1e2, 1e3, 1e4};
  const double tols[3] = {2e-2, 2e-3, 2e-4};
  for (int i = 0; i < 3; ++i) {
    double v = integrate_oscillatory([](double s) { return 1.0 / s; }, Rs[i], 0.0, 1.0, cfg).value;
    double dev = std::abs(v - M_PI / 2.0);
    ck.require(dev <= tols[i], "R=" + fmt(Rs[i]) + " dev " + fmt(dev) + " <= " + fmt(tols[i]));
  }
  return {3, "sine-integral limits toward pi/2", ck.pass, ck.detail.str()};
}

// ------------------------------------------------------------------ 4
CriterionResult c4_decomposition_identity(const AcceptanceOptions& opts) {
  Check ck;
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-8;
  cfg.rel_tol = 1e-8;
  std::mt19937_64 rng(opts.seed + 2);
  std::uniform_real_distribution<double> ux(-0.5, 0.5);

  struct Case {
    TestFunction F;
    Point x;
  };
  std::vector<Case> cases;
  for (int i = 0; i < 3; ++i) {
    TestFunction F = random_bump_poly(2, opts.seed + 10 + i);
    Point x(2);
    x << ux(rng), ux(rng);
    cases.push_back({F, x});
  }
  for (int i = 0; i < 3; ++i) {
    TestFunction F = random_bump_poly(3, opts.seed + 20 + i);
    Point x(3);
    x << ux(rng), ux(rng), ux(rng);
    cases.push_back({F, x});
  }
  for (int i = 0; i < 2; ++i) cases.push_back({random_radial_profile(4, opts.seed + 30 + i), Point::Zero(4)});
  for (int i = 0; i < 2; ++i) cases.push_back({random_radial_profile(5, opts.seed + 40 + i), Point::Zero(5)});

  double worst = 0.0;
  for (const auto& c : cases) {
    DecompositionPlan plan = derive_constants(c.F.n);
    SphereRule rule = make_sphere_rule(c.F.n, 16);
    for (double R : {2.0, 8.0, 32.0}) {
      Vec radial = partial_sum_radial(c.F, c.x, R, rule, cfg);
      Decomposition dec = decompose_partial_sum(c.F, c.x, R, plan, rule, cfg);
      double err = (dec.sum() - radial).norm() / (1.0 + radial.norm());
      worst = std::max(worst, err);
    }
  }
  ck.require(worst <= 1e-5, "10 random smooth functions, n in {2,3,4,5}, worst " + fmt(worst));
  return {4, "decomposition identity head+middle+tail = radial partial sum", ck.pass,
          ck.detail.str()};
}

// ------------------------------------------------------------------ 5
CriterionResult c5_constant_recovery(const AcceptanceOptions&) {
  Check ck;
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-10;
  cfg.rel_tol = 1e-10;
  const double R = 8.0;
  for (int n : {2, 3, 4, 5}) {
    TestFunction F = gaussian_nd(n);
    SphereRule rule = make_sphere_rule(n, 16);
    Point x = Point::Zero(n);
    Vec sr = partial_sum_radial(F, x, R, rule, cfg);
    bool odd = (n % 2 == 1);
    auto wins = F.majorant.windows(1e-12, 0.0, 1e9);
    double lead = 0.0;
    for (const auto& w : wins) {
      auto weight = [&](double r) {
        return odd ? std::sin(R * r) / (M_PI * r) : R * bessel_j1(R * r);
      };
      lead += integrate_weighted_panels(weight,
                                        [&](double r) { return F.radial_profile(0, r); },
                                        M_PI / R, w.a, w.b, cfg)
                  .value;
    }
    // Pointwise inversion pins S_R -> F(0) = 1 while the leading integral
    // tends to F(0)/2 (odd) resp. F(0) (even), so C = S_R / lead in both
    // parities, with targets 2 and 1.
    double measured = sr[0] / lead;
    double expected = odd ? 2.0 : 1.0;
    ck.require(std::abs(measured - expected) <= 1e-3,
               "n=" + std::to_string(n) + " measured " + fmt(measured) + " target " +
                   fmt(expected));
  }
  return {5, "leading decomposition constants from the Gaussian experiment", ck.pass,
          ck.detail.str()};
}

// ------------------------------------------------------------------ 6
CriterionResult c6_tail_bound(const AcceptanceOptions& opts) {
  Check ck;
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-10;
  cfg.rel_tol = 1e-10;
  std::vector<double> sweep{4, 8, 16, 32, 64, 128, 256};
  for (int n : {1, 3}) {
    TestFunction F = gaussian_nd(n);
    DecompositionPlan plan = derive_constants(n);
    SphereRule rule = make_sphere_rule(n, 20);
    Box K;
    K.lo = Point::Constant(n, -1.0);
    K.hi = Point::Constant(n, 1.0);
    auto rows = tail_bound_check(F, K, sweep, plan, rule, cfg, n == 1 ? 9 : 3);
    double first = std::max(rows.front().ratio, 1e-12);
    bool bounded = true;
    for (const auto& r : rows) bounded = bounded && std::isfinite(r.ratio) && r.ratio <= 2.0 * first;
    ck.require(bounded, "n=" + std::to_string(n) + " ratio(R_min)=" + fmt(rows.front().ratio) +
                            ", no growth beyond 2x across R in [4,256]");
    // L1 recovery through the shell reduction.
    double l1 = l1_norm(F, rule, cfg);
    double closed = std::pow(M_PI, 0.5 * n);
    ck.require(std::abs(l1 - closed) <= 1e-8 * closed,
               "n=" + std::to_string(n) + " L1 recovery err " + fmt(std::abs(l1 - closed)));
    (void)opts;
  }
  return {6, "kernel tail bound: R-uniform boundedness of the scaled tail", ck.pass,
          ck.detail.str()};
}

// ------------------------------------------------------------------ 7
CriterionResult c7_uniform_inversion(const AcceptanceOptions& opts) {
  Check ck;
  ExperimentOpts eopts;
  eopts.quad.abs_tol = 1e-9;
  eopts.quad.rel_tol = 1e-9;
  eopts.jobs = opts.jobs;

  {  // Gaussian on [-1,1]
    eopts.grid_per_dim = 41;
    eopts.threshold = 1e-3;
    auto rep = uniform_inversion_experiment(*catalog_get("gaussian_1d").function, box1(-1.0, 1.0),
                                            {16, 64, 256}, InversionEngine::Radial, eopts);
    ck.require(rep.sup_errors.back() <= 1e-3,
               "gaussian 1-D err(R=256) = " + fmt(rep.sup_errors.back()));
  }
  {  // Gaussian on [-1,1]^3
    Box K;
    K.lo = Point::Constant(3, -1.0);
    K.hi = Point::Constant(3, 1.0);
    eopts.grid_per_dim = 4;
    eopts.threshold = 1e-3;
    eopts.sphere_resolution = 24;
    auto rep = uniform_inversion_experiment(*catalog_get("gaussian_3d").function, K, {16, 64, 256},
                                            InversionEngine::Radial, eopts);
    ck.require(rep.sup_errors.back() <= 1e-3,
               "gaussian 3-D err(R=256) = " + fmt(rep.sup_errors.back()));
  }
  {  // Hoelder-1/2 entry: the spec-level target 1e-2 at R=512
    eopts.grid_per_dim = 81;
    eopts.threshold = 1e-2;
    auto rep = uniform_inversion_experiment(*catalog_get("holder_half").function, box1(-2.0, 2.0),
                                            {64, 128, 256, 512}, InversionEngine::Radial, eopts);
    ck.require(rep.sup_errors.back() <= 1e-2,
               "holder-1/2 err(R=512) = " + fmt(rep.sup_errors.back()) + " vs 1e-2");
    auto rep2 = uniform_inversion_experiment(*catalog_get("holder_half").function, box1(-2.0, 2.0),
                                             {8192}, InversionEngine::Radial, eopts);
    ck.note("informational: err(R=8192) = " + fmt(rep2.sup_errors.back()) +
            " (cusp error ~0.8 R^{-1/2})");
  }
  {  // step function: contrast on a jump-containing window, locality away from it
    eopts.grid_per_dim = 81;
    eopts.threshold = 0.05;
    std::vector<double> sweep{16, 64, 256, 1024, 4096, 8192};
    auto rep = uniform_inversion_experiment(*catalog_get("step_function").function,
                                            box1(-2.0, 2.0), sweep, InversionEngine::Radial, eopts);
    bool stays = true;
    for (double e : rep.sup_errors) stays = stays && e >= 0.05;
    ck.require(stays, "step on [-2,2]: sup error stays >= 0.05 for all R (jump in grid)");
    eopts.grid_per_dim = 41;
    auto rep2 = uniform_inversion_experiment(*catalog_get("step_function").function,
                                             box1(0.5, 0.9), sweep, InversionEngine::Radial, eopts);
    double best = *std::min_element(rep2.sup_errors.begin(), rep2.sup_errors.end());
    ck.require(best <= 1e-3, "step on [0.5,0.9]: min err " + fmt(best) + " <= 1e-3");
  }
  return {7, "uniform Fourier inversion (Gaussian 1-D/3-D, Hoelder-1/2, Gibbs contrast)", ck.pass,
          ck.detail.str()};
}

// ------------------------------------------------------------------ 8
CriterionResult c8_bridge(const AcceptanceOptions&) {
  Check ck;
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-9;
  cfg.rel_tol = 1e-9;
  const std::vector<double> ts{0.5, 1.0, 2.0};
  struct Item {
    const char* id;
    double omega;
  };
  for (const auto& item : {Item{"weierstrass_damped", 0.0}, Item{"te_exp", 0.0},
                           Item{"exp_decay", 0.0}, Item{"const_one", 0.5},
                           Item{"lacunary_resonant", 0.0}, Item{"cusp_chain", 0.0}}) {
    const TestFunction& F = *catalog_get(item.id).function;
    auto rows = fourier_laplace_bridge(F, item.omega, 200.0, ts, cfg);
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, r.difference);
    ck.require(worst <= 1e-5, std::string(item.id) + " max diff " + fmt(worst));
  }
  return {8, "Bromwich partial equals e^{omega t} x 1-D Fourier partial of the damped extension",
          ck.pass, ck.detail.str()};
}

// ------------------------------------------------------------------ 9
CriterionResult c9_weierstrass(const AcceptanceOptions& opts) {
  Check ck;
  LaplaceExperimentOpts lopts;
  lopts.grid_points = 101;
  lopts.threshold = 1e-2;
  lopts.quad.abs_tol = 1e-8;
  lopts.quad.rel_tol = 1e-8;
  lopts.jobs = opts.jobs;
  auto rep = laplace_inversion_experiment(*catalog_get("weierstrass_damped").function, 0.0, 1.0,
                                          0.0, {16, 32, 64, 128, 256, 512, 1024}, lopts);
  ck.require(rep.sup_errors.back() <= 1e-2,
             "sup error on [0,1] at R=1024: " + fmt(rep.sup_errors.back()));
  bool monotone = true;
  for (std::size_t i = 1; i < rep.sup_errors.size(); ++i)
    monotone = monotone && rep.sup_errors[i] <= rep.sup_errors[i - 1];
  ck.require(monotone, "errors decrease monotonically over octave windows");
  std::ostringstream curve;
  curve << "errors:";
  for (double e : rep.sup_errors) curve << ' ' << fmt(e);
  ck.note(curve.str());
  return {9, "damped Weierstrass showcase (beyond-Lipschitz inversion)", ck.pass, ck.detail.str()};
}

// ------------------------------------------------------------------ 10
CriterionResult c10_cesaro(const AcceptanceOptions& opts) {
  Check ck;
  LaplaceExperimentOpts lopts;
  lopts.grid_points = 101;
  lopts.quad.abs_tol = 1e-8;
  lopts.quad.rel_tol = 1e-8;
  lopts.jobs = opts.jobs;
  const TestFunction& F = *catalog_get("lacunary_resonant").function;
  std::vector<double> sweep{128, 256, 512, 1024};
  lopts.cesaro = false;
  auto plain = laplace_inversion_experiment(F, 0.0, 1.0, 0.0, sweep, lopts);
  lopts.cesaro = true;
  auto ces = laplace_inversion_experiment(F, 0.0, 1.0, 0.0, sweep, lopts);
  double ratio = ces.sup_errors.back() / plain.sup_errors.back();
  ck.require(ratio <= 0.5, "Cesaro/plain error ratio at R=1024: " + fmt(ratio) + " (plain " +
                               fmt(plain.sup_errors.back()) + ", Cesaro " +
                               fmt(ces.sup_errors.back()) + ")");

  // Fejer reweighting equivalence at small R by brute-force iterated quadrature.
  const TestFunction& G = *catalog_get("exp_decay").function;
  TransformHandle h = TransformHandle::closed_form(G.laplace, *G.growth_bound, 1);
  QuadratureConfig q;
  q.abs_tol = 1e-11;
  q.rel_tol = 1e-11;
  Vec a = cesaro_partial(h, 0.0, 4.0, 1.0, q);
  Vec b = cesaro_partial_iterated(h, 0.0, 4.0, 1.0, q);
  ck.require((a - b).norm() <= 1e-8, "Fejer reweighting vs iterated integral: diff " +
                                         fmt((a - b).norm()));
  return {10, "Cesaro means beat plain inversion on the resonant lacunary entry", ck.pass,
          ck.detail.str()};
}

// ------------------------------------------------------------------ 11
CriterionResult c11_scalar_identity(const AcceptanceOptions&) {
  Check ck;
  for (double w0 : {-1.0, -0.25}) {
    TransformHandle h = TransformHandle::closed_form(
        [w0](Complex lambda) { return cvec1(1.0 / (lambda - w0)); }, w0, 1);
    BromwichConfig bc;
    bc.omega = 0.0;
    bc.R = 512.0;
    // [0,2] with the start rule for F(0) = 1 != 0: a = 0.25 * 2 = 0.5.
    for (int i = 0; i <= 12; ++i) bc.t_grid.push_back(0.5 + 1.5 * i / 12.0);
    bc.quad.abs_tol = 1e-9;
    bc.quad.rel_tol = 1e-9;
    auto out = bromwich_partial(h, bc);
    double sup = 0.0;
    for (std::size_t i = 0; i < bc.t_grid.size(); ++i)
      sup = std::max(sup, std::abs(out.values[i][0] - std::exp(w0 * bc.t_grid[i])));
    ck.require(sup <= 1e-3, "omega0=" + fmt(w0) + " sup err " + fmt(sup) + " on [0.5,2]");
    ck.require(out.imag_residue <= 1e-8, "imag residue " + fmt(out.imag_residue));
  }
  return {11, "scalar identity: Bromwich of 1/(lambda-omega0) reproduces e^{omega0 t}", ck.pass,
          ck.detail.str()};
}

// ------------------------------------------------------------------ 12
CriterionResult c12_semigroup(const AcceptanceOptions& opts) {
  Check ck;
  SemigroupExperimentOpts sopts;
  sopts.grid_points = 39;
  sopts.threshold = 1e-3;
  sopts.quad.abs_tol = 1e-9;
  sopts.quad.rel_tol = 1e-9;
  sopts.jobs = opts.jobs;

  for (const char* id : {"diag_decay", "damped_rotation"}) {
    const auto& e = catalog_get(id);
    auto plain = semigroup_inversion_experiment(*e.system, e.system_x, 1.0, 0.0, 0.1, 2.0, {512},
                                                InversionMode::Plain, sopts);
    ck.require(plain.x_norm.sup_errors[0] <= 1e-3,
               std::string(id) + " plain [0.1,2] err " + fmt(plain.x_norm.sup_errors[0]));
    auto wz = semigroup_inversion_experiment(*e.system, e.system_x, 1.0, 0.0, 0.1, 2.0, {512},
                                             InversionMode::WithZero, sopts);
    ck.require(wz.x_norm.sup_errors[0] <= 1e-3,
               std::string(id) + " with_zero [0.1,2] err " + fmt(wz.x_norm.sup_errors[0]));
    auto wz0 = semigroup_inversion_experiment(*e.system, e.system_x, 1.0, 0.0, 0.0, 2.0, {512},
                                              InversionMode::WithZero, sopts);
    ck.require(wz0.x_norm.sup_errors[0] <= 1e-3,
               std::string(id) + " with_zero [0,2] err " + fmt(wz0.x_norm.sup_errors[0]));
    auto plain4k = semigroup_inversion_experiment(*e.system, e.system_x, 1.0, 0.0, 0.1, 2.0,
                                                  {4096}, InversionMode::Plain, sopts);
    ck.note("informational: " + std::string(id) +
            " plain err(R=4096) = " + fmt(plain4k.x_norm.sup_errors[0]));
  }

  // Favard norm of x under A = -I equals ||x|| (attained as t -> 0).
  const auto& dd = catalog_get("diag_decay");
  FavardEstimate fe = favard_norm(*dd.system, dd.system_x, 1.0);
  ck.require(std::abs(fe.norm_estimate - dd.system_x.norm()) <= 1e-6,
             "Favard F_1 norm for A=-I: " + fmt(fe.norm_estimate));

  // Scalar Hoelder constant sup (e^{-t1} - e^{-t2})/|t1 - t2| = 1.
  Eigen::MatrixXd A1(1, 1);
  A1 << -1.0;
  SemigroupSystem scalar = SemigroupSystem::from_matrix(A1);
  Vec x1 = vec1(1.0);
  HolderConstants hc = holder_constant_check(scalar, x1, 1.0, 0.5, 0.0, 2.0, opts.seed);
  ck.require(std::abs(hc.x_norm_constant - 1.0) <= 1e-6,
             "scalar Hoelder constant " + fmt(hc.x_norm_constant));
  return {12, "semigroup inversion modes, Favard norm, Hoelder constants", ck.pass,
          ck.detail.str()};
}

// ------------------------------------------------------------------ 13
CriterionResult c13_determinism(const AcceptanceOptions& opts) {
  Check ck;
  ExperimentConfig cfg;
  cfg.kind = "laplace_inversion";
  cfg.function_id = "te_exp";
  cfg.a = 0.0;
  cfg.b = 2.0;
  cfg.grid_points = 11;
  cfg.R_sweep = {16, 32, 64};
  cfg.threshold = 0.05;
  cfg.seed = opts.seed;

  auto emit = [&]() {
    ReportRecord rec = run_experiment(cfg);
    std::ostringstream os;
    emit_report_json(rec, os);
    std::ostringstream cs;
    emit_report_csv(rec, cs);
    return os.str() + "\n---\n" + cs.str();
  };
  std::string first = emit();
  std::string second = emit();
  ck.require(first == second, "two runs of the same config emit byte-identical reports");

  ExperimentConfig kb;
  kb.kind = "kernel_bound";
  kb.kernel_n = 2;
  kb.seed = opts.seed;
  ReportRecord r1 = run_experiment(kb);
  ReportRecord r2 = run_experiment(kb);
  std::ostringstream s1, s2;
  emit_report_json(r1, s1);
  emit_report_json(r2, s2);
  ck.require(s1.str() == s2.str(), "kernel_bound reports byte-identical");

  if (!opts.out_dir.empty()) {
    ReportRecord rec = run_experiment(cfg);
    write_report_file(rec, opts.out_dir + "/determinism_check.json", "json");
    write_report_file(rec, opts.out_dir + "/determinism_check.csv", "csv");
    ck.note("reports written under " + opts.out_dir);
  }
  return {13, "determinism: byte-identical reports for a fixed seed", ck.pass, ck.detail.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  using Fn = CriterionResult (*)(const AcceptanceOptions&);
  const Fn fns[] = {c1_kernel_closed_forms, c2_recursion,        c3_sine_integral,
                    c4_decomposition_identity, c5_constant_recovery, c6_tail_bound,
                    c7_uniform_inversion,   c8_bridge,           c9_weierstrass,
                    c10_cesaro,             c11_scalar_identity, c12_semigroup,
                    c13_determinism};
  std::vector<CriterionResult> out;
  for (Fn fn : fns) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r = fn(opts);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

int print_acceptance(const std::vector<CriterionResult>& results) {
  int failures = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    std::printf("criterion %2d [%s] %s (%.1fs)\n    %s\n", r.id, r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds, r.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failures);
  return failures;
}

}  // namespace invlab
