#include "encov/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "encov/error.hpp"
#include "encov/families.hpp"

namespace encov {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) sum += a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n,
                                          const JacobiOptions& opts) {
  auto at = [&a, n](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  int sweep = 0;
  while (off_diagonal_norm(a, n) >= opts.tol) {
    if (sweep++ == opts.max_sweeps) {
      throw Error(Errc::non_convergence, "Jacobi sweep budget of " +
                                             std::to_string(opts.max_sweeps) + " exhausted");
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        // Rotation angle that zeroes a[p][q] (stable tangent formula).
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = at(i, i);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

Spectrum eigenvalues(const Graph& g, const JacobiOptions& opts) {
  const int n = g.order();
  if (n > opts.max_order) {
    throw Error(Errc::too_large, "eigensolver capped at " + std::to_string(opts.max_order) +
                                     " vertices");
  }
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (const Edge& e : g.edges()) {
    a[static_cast<std::size_t>(e.u) * n + e.v] = 1.0;
    a[static_cast<std::size_t>(e.v) * n + e.u] = 1.0;
  }
  return Spectrum{symmetric_eigenvalues(std::move(a), n, opts), opts.tol};
}

double energy_of(const Spectrum& s) {
  double total = 0.0;
  for (double x : s.values) total += std::abs(x);
  return total;
}

EnergyValue energy(const Graph& g, const JacobiOptions& opts) {
  if (g.size() == 0) return {0.0, EnergyMethod::numeric};
  return {energy_of(eigenvalues(g, opts)), EnergyMethod::numeric};
}

EnergyValue cycle_energy_closed_form(int n) {
  if (n < 3) throw Error(Errc::bad_parameter, "cycle needs at least 3 vertices");
  constexpr double pi = std::numbers::pi;
  double e = 0.0;
  if (n % 4 == 0) {
    e = 4.0 * std::cos(pi / n) / std::sin(pi / n);
  } else if (n % 4 == 2) {
    e = 4.0 / std::sin(pi / n);
  } else {
    e = 2.0 / std::sin(pi / (2.0 * n));
  }
  return {e, EnergyMethod::closed_form};
}

EnergyValue family_energy_closed_form(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  auto closed = [](double e) { return EnergyValue{e, EnergyMethod::closed_form}; };
  switch (spec.kind) {
    case FamilyKind::complete:
      return closed(2.0 * (p[0] - 1));
    case FamilyKind::complete_bipartite:
      return closed(2.0 * std::sqrt(static_cast<double>(p[0]) * p[1]));
    case FamilyKind::star:
      return closed(2.0 * std::sqrt(static_cast<double>(p[0])));
    case FamilyKind::cycle:
      return cycle_energy_closed_form(p[0]);
    case FamilyKind::wheel:
    case FamilyKind::generalized_wheel: {
      const auto [m, n] = wheel_parameters(spec);
      return closed(cycle_energy_closed_form(n).energy +
                    2.0 * std::sqrt(static_cast<double>(m) * n + 1.0) - 2.0);
    }
    case FamilyKind::kn_times_k2:
      if (p[0] < 2) {
        throw Error(Errc::bad_parameter, "K_n x K_2 closed form 4(n-1) needs n >= 2");
      }
      return closed(4.0 * (p[0] - 1));
    default:
      throw Error(Errc::unsupported_family,
                  "no closed-form energy for " + to_string(spec) + "; use the numeric path");
  }
}

}  // namespace encov
