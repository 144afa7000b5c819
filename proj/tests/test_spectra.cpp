#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "encov/canonical.hpp"
#include "encov/error.hpp"
#include "encov/families.hpp"
#include "encov/graph6.hpp"
#include "encov/spectra.hpp"
#include "oracles.hpp"

using namespace encov;

namespace {

Graph fam(const std::string& s) { return make(parse_family_spec(s)); }

void check_values(const std::vector<double>& got, std::vector<double> want, double tol) {
  std::sort(want.rbegin(), want.rend());
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

}  // namespace

TEST_CASE("small spectra") {
  check_values(eigenvalues(fam("complete(2)")).values, {1, -1}, 1e-10);
  check_values(eigenvalues(fam("cycle(4)")).values, {2, 0, 0, -2}, 1e-10);
  check_values(eigenvalues(fam("complete(4)")).values, {3, -1, -1, -1}, 1e-10);
  CHECK(energy(fam("star(4)")).energy == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(energy(fam("star(4)")).method == EnergyMethod::numeric);
}

TEST_CASE("energy is zero exactly on edgeless graphs") {
  CHECK(energy(empty_graph(5)).energy == 0.0);
  CHECK(energy(empty_graph(1)).energy == 0.0);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const Graph g = oracle::random_graph(rng, 2 + t % 9, 0.3);
    const double e = energy(g).energy;
    CHECK(e >= 0.0);
    CHECK((e > 1e-9) == (g.size() > 0));
  }
}

TEST_CASE("energies agree with an external LAPACK reference") {
  std::size_t count = 0;
  for (const auto& line : oracle::read_lines(std::string(ENCOV_TEST_DATA) + "/atlas_energy.txt")) {
    std::istringstream in(line);
    std::string g6;
    double expected = 0;
    in >> g6 >> expected;
    CHECK(std::abs(energy(parse_graph6(g6)).energy - expected) <= 1e-8);
    ++count;
  }
  CHECK(count == 1252);
}

TEST_CASE("trace and Frobenius identities on all graphs n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n, false)) {
      const Spectrum s = eigenvalues(g);
      double sum = 0, sq = 0;
      for (double x : s.values) {
        sum += x;
        sq += x * x;
      }
      CHECK(std::abs(sum) <= 1e-8);
      CHECK(std::abs(sq - 2.0 * static_cast<double>(g.size())) <= 1e-7);
      CHECK(std::is_sorted(s.values.rbegin(), s.values.rend()));
    }
  }
}

TEST_CASE("cycle closed forms n = 3..40") {
  for (int n = 3; n <= 40; ++n) {
    const EnergyValue cf = cycle_energy_closed_form(n);
    CHECK(cf.method == EnergyMethod::closed_form);
    CHECK(std::abs(energy(fam("cycle(" + std::to_string(n) + ")")).energy - cf.energy) <= 1e-8);
    // circulant spectrum 2 cos(2 pi k / n) as a second reference
    double circ = 0;
    for (int k = 0; k < n; ++k) circ += std::abs(2.0 * std::cos(2.0 * M_PI * k / n));
    CHECK(std::abs(circ - cf.energy) <= 1e-9);
  }
  CHECK_THROWS_AS(cycle_energy_closed_form(2), Error);
}

TEST_CASE("family closed forms match the numeric solver") {
  auto agree = [](const std::string& spec) {
    const FamilySpec f = parse_family_spec(spec);
    const double closed = family_energy_closed_form(f).energy;
    const double numeric = energy(make(f)).energy;
    INFO(spec);
    CHECK(std::abs(closed - numeric) <= 1e-8);
  };
  for (int n = 1; n <= 12; ++n) agree("complete(" + std::to_string(n) + ")");
  for (int p = 1; p <= 8; ++p)
    for (int q = 1; q <= 8; ++q) agree("complete_bipartite(" + std::to_string(p) + "," + std::to_string(q) + ")");
  for (int k = 1; k <= 100; ++k) agree("star(" + std::to_string(k) + ")");
  for (int n = 3; n <= 12; ++n) agree("cycle(" + std::to_string(n) + ")");
  for (int m = 1; m <= 5; ++m)
    for (int n = 3; n <= 12; ++n) {
      agree("generalized_wheel(" + std::to_string(m) + "," + std::to_string(n) + ")");
      agree("wheel(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  for (int n = 3; n <= 12; ++n) agree("wheel(" + std::to_string(n) + ")");
  for (int n = 2; n <= 10; ++n) agree("kn_times_k2(" + std::to_string(n) + ")");

  CHECK(family_energy_closed_form(parse_family_spec("star(9)")).energy == doctest::Approx(6.0));
  CHECK(family_energy_closed_form(parse_family_spec("complete(5)")).energy == doctest::Approx(8.0));

  auto code = [](const std::string& spec) {
    try {
      family_energy_closed_form(parse_family_spec(spec));
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::io_error;
  };
  CHECK(code("path(4)") == Errc::unsupported_family);
  CHECK(code("flower(3,4)") == Errc::unsupported_family);
  CHECK(code("g_pq(1,1)") == Errc::unsupported_family);
  // the 4(n-1) form does not cover K_1 x K_2 = K_2
  CHECK(code("kn_times_k2(1)") == Errc::bad_parameter);
}

TEST_CASE("join spectrum law for generalized wheels") {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 3; n <= 12; ++n) {
      const double r = std::sqrt(static_cast<double>(m) * n + 1.0);
      std::vector<double> want{1 + r, 1 - r};
      auto cyc = eigenvalues(fam("cycle(" + std::to_string(n) + ")")).values;
      // drop one copy of the eigenvalue 2 (the largest)
      want.insert(want.end(), cyc.begin() + 1, cyc.end());
      for (int i = 0; i < m - 1; ++i) want.push_back(0.0);
      const auto got = eigenvalues(fam("generalized_wheel(" + std::to_string(m) + "," + std::to_string(n) + ")")).values;
      check_values(got, want, 1e-8);
    }
  }
}

TEST_CASE("energy is additive over disjoint unions") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const Graph a = oracle::random_graph(rng, 1 + t % 8, 0.5);
    const Graph b = oracle::random_graph(rng, 1 + (t * 5) % 9, 0.4);
    CHECK(std::abs(energy(disjoint_union(a, b)).energy - energy(a).energy - energy(b).energy) <= 1e-8);
  }
}

TEST_CASE("dense symmetric solver") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int n : {1, 2, 5, 20, 60}) {
    std::vector<double> a(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = u(rng);
    double trace = 0, frob = 0;
    for (int i = 0; i < n; ++i) trace += a[i * n + i];
    for (double x : a) frob += x * x;
    const auto ev = symmetric_eigenvalues(a, n);
    double s = 0, sq = 0;
    for (double x : ev) {
      s += x;
      sq += x * x;
    }
    CHECK(std::abs(s - trace) <= 1e-9);
    CHECK(std::abs(sq - frob) <= 1e-9);
  }
  // [[2,1],[1,2]] has eigenvalues 3 and 1
  check_values(symmetric_eigenvalues({2, 1, 1, 2}, 2), {3, 1}, 1e-12);
}

TEST_CASE("solver limits") {
  JacobiOptions tight;
  tight.max_sweeps = 0;
  try {
    eigenvalues(fam("cycle(5)"), tight);
    FAIL("expected non-convergence");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_convergence);
  }
  JacobiOptions small;
  small.max_order = 3;
  try {
    eigenvalues(fam("cycle(4)"), small);
    FAIL("expected too_large");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_large);
  }
  CHECK(eigenvalues(fam("cycle(100)")).values.size() == 100);
}
