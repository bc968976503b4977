#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invlab/semigroup.hpp"
#include "invlab/test_function.hpp"

namespace invlab {

struct CatalogEntry {
  std::string id;
  std::string origin;          // mathematical provenance of the entry
  std::string expected_class;  // Lipschitz | Hoelder | continuous | discontinuous | smooth | system
  std::map<std::string, std::string> expected_verdicts;  // experiment kind -> pass|fail|contrast
  std::optional<TestFunction> function;
  std::optional<SemigroupSystem> system;
  Vec system_x;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_get(const std::string& id);
std::vector<std::string> catalog_list(const std::string& filter = "");

// Factories shared by the catalog and the test suites.
TestFunction gaussian_nd(int n);
TestFunction gaussian_shifted_1d(double center);
TestFunction random_bump_poly(int n, std::uint64_t seed);      // n in {2,3}, first derivatives
TestFunction random_radial_profile(int n, std::uint64_t seed); // n in {2..5}, exact profile at 0

struct WeierstrassEval {
  double value = 0.0;
  int terms = 0;
};
// Partial sum of sum_n sin(n^2 t)/n^2 with tail bound sum_{n>N} n^{-2} <= 1/N <= tol.
WeierstrassEval weierstrass_eval(double t, double tol);

// Smooth bump e^{1 - 1/(1-u^2)} on |u| < 1 and its first two derivatives.
double smooth_bump(double u);
double smooth_bump_d1(double u);
double smooth_bump_d2(double u);

}  // namespace invlab
