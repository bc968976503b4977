#include "invlab/catalog.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace invlab {
namespace {

// d^j/du^j e^{-u^2} = (-1)^j H_j(u) e^{-u^2}
double hermite_deriv(int j, double u) {
  double h0 = 1.0, h1 = 2.0 * u, h = (j == 0) ? 1.0 : h1;
  for (int m = 1; m < j; ++m) {
    double h2 = 2.0 * u * h1 - 2.0 * m * h0;
    h0 = h1;
    h1 = h2;
    h = h2;
  }
  return ((j % 2) ? -h : h) * std::exp(-u * u);
}

Vec gauss_partial(const MultiIndex& a, const Point& y) {
  double v = 1.0;
  for (int d = 0; d < y.size(); ++d) v *= hermite_deriv(a[d], y[d]);
  return vec1(v);
}

constexpr int kBumpTrainTerms = 40;
constexpr int kStaircaseTerms = 30;
constexpr int kWeierstrassTerms = 10000;

double bump_train_value(double t) {
  double s = 0.0;
  for (int n = 1; n <= kBumpTrainTerms; ++n) {
    double u = t - std::exp(static_cast<double>(n));
    if (u < -9.0) break;  // centers increase; later bumps are farther right
    if (u > 9.0) continue;
    s += std::exp(-u * u) / (static_cast<double>(n) * n);
  }
  return s;
}

double bump_train_deriv(double t) {
  double s = 0.0;
  for (int n = 1; n <= kBumpTrainTerms; ++n) {
    double u = t - std::exp(static_cast<double>(n));
    if (u < -9.0) break;
    if (u > 9.0) continue;
    s += -2.0 * u * std::exp(-u * u) / (static_cast<double>(n) * n);
  }
  return s;
}

double staircase_term(double t, int k, int deriv) {
  double w = std::pow(2.0, -std::abs(k));
  double u = (t - k) / w;
  if (std::abs(u) >= 1.0) return 0.0;
  double amp = 1.0 / std::sqrt(static_cast<double>(std::abs(k)));
  if (deriv == 0) return amp * smooth_bump(u);
  return amp * smooth_bump_d1(u) / w;
}

double staircase_value(double t, int deriv) {
  // Bump widths are < 1/2, so only the nearest integer can contribute.
  int k = static_cast<int>(std::lround(t));
  if (k == 0 || std::abs(k) > kStaircaseTerms) return 0.0;
  return staircase_term(t, k, deriv);
}

double weierstrass_sum(double t, int terms) {
  double s = 0.0;
  for (int n = 1; n <= terms; ++n) {
    double nn = static_cast<double>(n) * n;
    s += std::sin(nn * t) / nn;
  }
  return s;
}

CVec weierstrass_laplace(Complex lambda, int terms) {
  Complex z = (lambda + 1.0) * (lambda + 1.0);
  Complex s = 0.0;
  double z_mag = std::abs(z);
  for (int n = 1; n <= terms; ++n) {
    double n4 = std::pow(static_cast<double>(n), 4);
    Complex term = 1.0 / (z + n4);
    s += term;
    if (n4 > 4.0 * z_mag && std::abs(term) < 1e-17) break;
  }
  return cvec1(s);
}

const double kLacunaryRate = 0.02;
constexpr int kLacunaryTerms = 5;

double lacunary_value(double t) {
  double s = 0.0;
  for (int m = 1; m <= kLacunaryTerms; ++m)
    s += std::sin(std::pow(4.0, m) * t) / (static_cast<double>(m) * m);
  return std::exp(-kLacunaryRate * t) * s;
}

CVec lacunary_laplace(Complex lambda) {
  Complex z = lambda + kLacunaryRate;
  Complex s = 0.0;
  for (int m = 1; m <= kLacunaryTerms; ++m) {
    double freq = std::pow(4.0, m);
    s += freq / ((z * z + freq * freq) * (static_cast<double>(m) * m));
  }
  return cvec1(s);
}

double cusp_chain_value(double t) {
  if (t <= 0.0) return 0.0;
  return std::exp(-t) * std::sqrt(std::abs(std::sin(1.0 / (t + 0.1)))) * t;
}

TestFunction scalar_function(std::string id, std::function<double(double)> f) {
  TestFunction F;
  F.id = std::move(id);
  F.n = 1;
  F.d = 1;
  F.value = [f = std::move(f)](const Point& p) { return vec1(f(p[0])); };
  return F;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;

  {
    CatalogEntry e;
    e.id = "gaussian_1d";
    e.origin = "Gaussian reference function";
    e.expected_class = "smooth";
    e.expected_verdicts = {{"fourier_uniform", "pass"}};
    e.function = gaussian_nd(1);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "gaussian_3d";
    e.origin = "Gaussian reference function";
    e.expected_class = "smooth";
    e.expected_verdicts = {{"fourier_uniform", "pass"}};
    e.function = gaussian_nd(3);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "step_function";
    e.origin = "indicator of [-1,1]; jump discontinuity";
    e.expected_class = "discontinuous";
    e.expected_verdicts = {{"fourier_uniform", "contrast"}};
    TestFunction F = scalar_function("step_function",
                                     [](double t) { return std::abs(t) <= 1.0 ? 1.0 : 0.0; });
    F.majorant = compact_majorant(1, 1.0);
    F.fourier = [](const Point& k) {
      double kk = k[0];
      double v = (std::abs(kk) < 1e-12) ? 2.0 : 2.0 * std::sin(kk) / kk;
      return cvec1(Complex(v, 0.0));
    };
    F.fourier_freq_hint = 1.0;
    e.function = std::move(F);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "holder_half";
    e.origin = "square-root cusp at the origin under a Gaussian envelope";
    e.expected_class = "Hoelder";
    e.expected_verdicts = {{"fourier_uniform", "pass"}};
    TestFunction F = scalar_function("holder_half", [](double t) {
      return std::exp(-t * t) * std::sqrt(std::abs(std::sin(t)));
    });
    F.holder_alpha = 0.5;
    F.holder_const = 1.1;
    F.majorant = gaussian_majorant(1, 1.0, 0.5);
    e.function = std::move(F);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "bump_train";
    e.origin = "Gaussian bump train with exponentially spaced centers";
    e.expected_class = "Lipschitz";
    e.expected_verdicts = {{"fourier_uniform", "pass"}};
    TestFunction F = scalar_function("bump_train", bump_train_value);
    F.max_deriv = 1;
    F.partial = [](const MultiIndex& a, const Point& p) {
      return vec1(a[0] == 0 ? bump_train_value(p[0]) : bump_train_deriv(p[0]));
    };
    F.holder_alpha = 1.0;
    F.holder_const = 0.9;
    Majorant m;
    m.bound = [](double r, double kappa) {
      double best = 0.0;
      for (int n = 1; n <= kBumpTrainTerms; ++n) {
        double u = std::max(0.0, std::abs(r - std::exp(static_cast<double>(n))) - kappa);
        best = std::max(best, std::exp(-u * u) / (static_cast<double>(n) * n));
      }
      return best;
    };
    m.l1_tail = [](double T, double kappa) {
      double s = 0.0;
      for (int n = 1; n <= kBumpTrainTerms; ++n)
        if (std::exp(static_cast<double>(n)) + kappa + 9.0 >= T)
          s += std::sqrt(M_PI) / (static_cast<double>(n) * n);
      return s;
    };
    m.windows = [](double eps, double kappa, double r_max) {
      std::vector<Interval> w;
      w.push_back({0.0, std::min(r_max, kappa + 9.0)});  // region reachable from x itself
      for (int n = 1; n <= kBumpTrainTerms; ++n) {
        double amp = 1.0 / (static_cast<double>(n) * n);
        if (amp <= eps) break;
        double c = std::exp(static_cast<double>(n));
        double u = std::sqrt(std::log(amp / eps)) + 1.0;
        double lo = std::max(0.0, c - kappa - u), hi = std::min(r_max, c + kappa + u);
        if (hi <= lo) continue;
        if (!w.empty() && lo <= w.back().b)
          w.back().b = std::max(w.back().b, hi);
        else
          w.push_back({lo, hi});
      }
      return w;
    };
    F.majorant = std::move(m);
    e.function = std::move(F);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "staircase";
    e.origin = "dyadic plateaus of height |k|^{-1/2} at the integers";
    e.expected_class = "Hoelder";
    e.expected_verdicts = {{"fourier_uniform", "pass"}};
    TestFunction F = scalar_function("staircase", [](double t) { return staircase_value(t, 0); });
    F.max_deriv = 1;
    F.partial = [](const MultiIndex& a, const Point& p) {
      return vec1(staircase_value(p[0], a[0]));
    };
    F.holder_alpha = 1.0;
    F.holder_const = 8.0;
    Majorant m;
    double reach = kStaircaseTerms + 1.0;
    m.bound = [](double r, double kappa) {
      int k = static_cast<int>(std::lround(r));
      double best = 0.0;
      for (int kk = std::max(1, k - 1); kk <= k + 1 && kk <= kStaircaseTerms; ++kk) {
        if (std::abs(r - kk) <= kappa + std::pow(2.0, -kk))
          best = std::max(best, 1.0 / std::sqrt(static_cast<double>(kk)));
      }
      return best;
    };
    m.l1_tail = [reach](double T, double kappa) {
      if (T >= reach + kappa) return 0.0;
      double s = 0.0;
      for (int k = 1; k <= kStaircaseTerms; ++k)
        if (k + kappa + 1.0 >= T) s += 2.0 * std::pow(2.0, -k) / std::sqrt(static_cast<double>(k));
      return 2.0 * s;  // both signs of k
    };
    m.windows = [reach](double, double kappa, double r_max) {
      std::vector<Interval> w{{0.0, std::min(r_max, reach + kappa)}};
      return w;
    };
    F.majorant = std::move(m);
    e.function = std::move(F);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "weierstrass_damped";
    e.origin = "damped Weierstrass-type lacunary sine series (fixed 10^4-term truncation)";
    e.expected_class = "Hoelder";
    e.expected_verdicts = {{"laplace_inversion", "pass"}, {"laplace_bridge", "pass"}};
    TestFunction F = scalar_function("weierstrass_damped", [](double t) {
      return std::exp(-t) * weierstrass_sum(t, kWeierstrassTerms);
    });
    F.growth_bound = -1.0;
    F.growth_scale = 1.6449340668482264;  // sum n^{-2}
    F.zero_at_origin = true;
    F.holder_alpha = 0.5;
    F.holder_const = 3.0;
    F.laplace = [](Complex lambda) { return weierstrass_laplace(lambda, kWeierstrassTerms); };
    e.function = std::move(F);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "te_exp";
    e.origin = "t e^{-t}";
    e.expected_class = "Lipschitz";
    e.expected_verdicts = {{"laplace_inversion", "pass"}};
    TestFunction F = scalar_function("te_exp", [](double t) { return t * std::exp(-t); });
    F.growth_bound = -0.9;
    F.growth_scale = 3.7;
    F.zero_at_origin = true;
    F.holder_alpha = 1.0;
    F.holder_const = 1.0;
    F.laplace = [](Complex lambda) { return cvec1(1.0 / ((lambda + 1.0) * (lambda + 1.0))); };
    e.function = std::move(F);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "exp_decay";
    e.origin = "e^{-t}";
    e.expected_class = "Lipschitz";
    e.expected_verdicts = {{"laplace_inversion", "pass"}, {"laplace_bridge", "pass"}};
    TestFunction F = scalar_function("exp_decay", [](double t) { return std::exp(-t); });
    F.growth_bound = -1.0;
    F.growth_scale = 1.0;
    F.zero_at_origin = false;
    F.holder_alpha = 1.0;
    F.holder_const = 1.0;
    F.laplace = [](Complex lambda) { return cvec1(1.0 / (lambda + 1.0)); };
    e.function = std::move(F);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "const_one";
    e.origin = "constant 1 (nonzero value at t = 0)";
    e.expected_class = "Lipschitz";
    e.expected_verdicts = {{"laplace_inversion", "contrast"}};
    TestFunction F = scalar_function("const_one", [](double) { return 1.0; });
    F.growth_bound = 0.0;
    F.growth_scale = 1.0;
    F.zero_at_origin = false;
    F.laplace = [](Complex lambda) { return cvec1(1.0 / lambda); };
    e.function = std::move(F);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "lacunary_resonant";
    e.origin = "lacunary sine series resonant with the sweep cap (merely-continuous limit family)";
    e.expected_class = "continuous";
    e.expected_verdicts = {{"cesaro_compare", "pass"}};
    TestFunction F = scalar_function("lacunary_resonant", lacunary_value);
    F.growth_bound = -kLacunaryRate;
    F.growth_scale = 1.4636;
    F.zero_at_origin = true;
    F.laplace = lacunary_laplace;
    e.function = std::move(F);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "cusp_chain";
    e.origin = "square-root cusps accumulating toward the left endpoint";
    e.expected_class = "Hoelder";
    e.expected_verdicts = {{"laplace_inversion", "pass"}};
    TestFunction F = scalar_function("cusp_chain", cusp_chain_value);
    F.growth_bound = -0.9;
    F.growth_scale = 3.7;
    F.zero_at_origin = true;
    F.holder_alpha = 0.5;
    F.holder_const = 1.0;
    e.function = std::move(F);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "diag_decay";
    e.origin = "A = -I";
    e.expected_class = "system";
    e.expected_verdicts = {{"semigroup_inversion", "pass"}};
    e.system = SemigroupSystem::from_matrix(-Eigen::MatrixXd::Identity(2, 2));
    e.system_x = Vec(2);
    e.system_x << 1.0, 0.0;
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "damped_rotation";
    e.origin = "damped rotation, eigenvalues -1 +- 5i";
    e.expected_class = "system";
    e.expected_verdicts = {{"semigroup_inversion", "pass"}};
    Eigen::MatrixXd A(2, 2);
    A << -1.0, 5.0, -5.0, -1.0;
    e.system = SemigroupSystem::from_matrix(A);
    e.system_x = Vec(2);
    e.system_x << 1.0, 0.0;
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "jordan_block";
    e.origin = "defective eigenvalue -1 (Jordan block)";
    e.expected_class = "system";
    e.expected_verdicts = {{"semigroup_inversion", "pass"}};
    Eigen::MatrixXd A(2, 2);
    A << -1.0, 1.0, 0.0, -1.0;
    e.system = SemigroupSystem::from_matrix(A);
    e.system_x = Vec(2);
    e.system_x << 0.0, 1.0;
    cat.push_back(std::move(e));
  }
  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

const CatalogEntry& catalog_get(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw std::domain_error("catalog: unknown id '" + id + "'");
}

std::vector<std::string> catalog_list(const std::string& filter) {
  std::vector<std::string> out;
  for (const auto& e : catalog()) {
    if (!filter.empty() && e.id.find(filter) == std::string::npos) continue;
    out.push_back(e.id + "  [" + e.expected_class + "]  " + e.origin);
  }
  return out;
}

TestFunction gaussian_nd(int n) {
  TestFunction F;
  F.id = "gaussian_" + std::to_string(n) + "d";
  F.n = n;
  F.d = 1;
  F.max_deriv = 4;
  F.value = [](const Point& y) { return vec1(std::exp(-y.squaredNorm())); };
  F.partial = gauss_partial;
  F.holder_alpha = 1.0;
  F.holder_const = 0.86;
  F.majorant = gaussian_majorant(n, 8.0, 1.5);
  F.fourier = [n](const Point& k) {
    return cvec1(Complex(std::pow(M_PI, 0.5 * n) * std::exp(-0.25 * k.squaredNorm()), 0.0));
  };
  F.radial_profile = [](int j, double r) { return hermite_deriv(j, r); };
  return F;
}

TestFunction gaussian_shifted_1d(double center) {
  TestFunction F;
  F.id = "gaussian_shifted";
  F.n = 1;
  F.d = 1;
  F.max_deriv = 4;
  F.value = [center](const Point& y) {
    double u = y[0] - center;
    return vec1(std::exp(-u * u));
  };
  F.partial = [center](const MultiIndex& a, const Point& y) {
    return vec1(hermite_deriv(a[0], y[0] - center));
  };
  F.majorant = gaussian_majorant(1, 8.0, 1.5 + std::abs(center));
  F.fourier = [center](const Point& k) {
    double kk = k[0];
    double mag = std::sqrt(M_PI) * std::exp(-0.25 * kk * kk);
    return cvec1(mag * Complex(std::cos(center * kk), -std::sin(center * kk)));
  };
  F.fourier_freq_hint = std::abs(center);
  return F;
}

TestFunction random_bump_poly(int n, std::uint64_t seed) {
  if (n < 2 || n > 3) throw std::domain_error("random_bump_poly: n in {2,3}");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const double s0 = 2.0;
  std::vector<double> lin(n), quad(n * n);
  double c0 = uni(rng);
  for (auto& v : lin) v = uni(rng);
  for (auto& v : quad) v = uni(rng);

  auto poly = [=](const Point& y) {
    double p = c0;
    for (int i = 0; i < n; ++i) p += lin[i] * y[i];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p += quad[i * n + j] * y[i] * y[j];
    return p;
  };
  auto poly_grad = [=](int d, const Point& y) {
    double g = lin[d];
    for (int i = 0; i < n; ++i) g += (quad[d * n + i] + quad[i * n + d]) * y[i];
    return g;
  };

  TestFunction F;
  F.id = "random_bump_poly_" + std::to_string(n) + "d_" + std::to_string(seed);
  F.n = n;
  F.d = 1;
  F.max_deriv = 1;
  F.value = [=](const Point& y) {
    double r = y.norm() / s0;
    if (r >= 1.0) return vec1(0.0);
    return vec1(poly(y) * smooth_bump(r));
  };
  F.partial = [=](const MultiIndex& a, const Point& y) {
    int order = 0, dir = 0;
    for (int i = 0; i < n; ++i) {
      order += a[i];
      if (a[i] > 0) dir = i;
    }
    if (order == 0) return F.value(y);
    double rn = y.norm();
    double r = rn / s0;
    if (r >= 1.0) return vec1(0.0);
    double b = smooth_bump(r);
    double db_dyi = (rn < 1e-14) ? 0.0 : smooth_bump_d1(r) * y[dir] / (rn * s0);
    return vec1(poly_grad(dir, y) * b + poly(y) * db_dyi);
  };
  F.majorant = compact_majorant(n, s0, 12.0);
  return F;
}

TestFunction random_radial_profile(int n, std::uint64_t seed) {
  if (n < 2 || n > 5) throw std::domain_error("random_radial_profile: n in {2..5}");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const double s0 = 2.0;
  const double q0 = uni(rng), q1 = uni(rng), q2 = uni(rng);

  // u(r) = q(r^2) * bump(r / s0), radial about the origin; exact profile
  // derivatives via the chain rule.
  auto q = [=](double rr) { return q0 + q1 * rr + q2 * rr * rr; };
  auto dq = [=](double rr) { return q1 + 2.0 * q2 * rr; };
  auto profile = [=](int j, double r) {
    double u = r / s0;
    if (u >= 1.0) return 0.0;
    double rr = r * r;
    double b = smooth_bump(u), b1 = smooth_bump_d1(u) / s0, b2 = smooth_bump_d2(u) / (s0 * s0);
    double f = q(rr), f1 = dq(rr) * 2.0 * r, f2 = dq(rr) * 2.0 + 4.0 * q2 * rr * 2.0;
    switch (j) {
      case 0: return f * b;
      case 1: return f1 * b + f * b1;
      case 2: return f2 * b + 2.0 * f1 * b1 + f * b2;
      default: throw std::domain_error("random_radial_profile: derivative order > 2");
    }
  };

  TestFunction F;
  F.id = "random_radial_" + std::to_string(n) + "d_" + std::to_string(seed);
  F.n = n;
  F.d = 1;
  F.max_deriv = 2;
  F.value = [=](const Point& y) { return vec1(profile(0, y.norm())); };
  F.radial_profile = profile;
  F.majorant = compact_majorant(n, s0, 4.0);
  return F;
}

WeierstrassEval weierstrass_eval(double t, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("weierstrass_eval: tol must be positive");
  int N = static_cast<int>(std::ceil(1.0 / tol));
  WeierstrassEval out;
  out.terms = N;
  out.value = weierstrass_sum(t, N);
  return out;
}

double smooth_bump(double u) {
  if (std::abs(u) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

double smooth_bump_d1(double u) {
  if (std::abs(u) >= 1.0) return 0.0;
  double w = 1.0 - u * u;
  double g1 = -2.0 * u / (w * w);
  return g1 * smooth_bump(u);
}

double smooth_bump_d2(double u) {
  if (std::abs(u) >= 1.0) return 0.0;
  double w = 1.0 - u * u;
  double g1 = -2.0 * u / (w * w);
  double g2 = -2.0 / (w * w) - 8.0 * u * u / (w * w * w);
  return (g2 + g1 * g1) * smooth_bump(u);
}

}  // namespace invlab
