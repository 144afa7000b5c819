#pragma once

#include <vector>

#include "encov/graph.hpp"

namespace encov {

struct FamilySpec;

/// Adjacency eigenvalues, sorted descending.
struct Spectrum {
  std::vector<double> values;
  /// Off-diagonal convergence threshold the solver ran with.
  double tol = 0.0;
};

enum class EnergyMethod { numeric, closed_form };

struct EnergyValue {
  double energy = 0.0;
  EnergyMethod method = EnergyMethod::numeric;
};

struct JacobiOptions {
  double tol = 1e-10;
  int max_sweeps = 100;
  int max_order = 512;
};

/// Eigenvalues of a dense symmetric matrix (row-major, n x n) by cyclic
/// Jacobi rotations, iterated until the off-diagonal Frobenius norm drops
/// below opts.tol. Throws Error{non_convergence} when the sweep budget runs
/// out. Returned values are sorted descending.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n,
                                          const JacobiOptions& opts = {});

/// Throws Error{too_large} past opts.max_order vertices.
Spectrum eigenvalues(const Graph& g, const JacobiOptions& opts = {});

/// Sum of absolute adjacency eigenvalues.
EnergyValue energy(const Graph& g, const JacobiOptions& opts = {});
double energy_of(const Spectrum& s);

/// Energy of C_n from the three closed forms (n mod 4 == 0, n mod 4 == 2,
/// n odd). Throws Error{bad_parameter} for n < 3.
EnergyValue cycle_energy_closed_form(int n);

/// Closed-form energy for complete, complete bipartite, star, cycle,
/// generalized wheel and K_n x K_2 specs. Throws Error{unsupported_family}
/// for families that only have the numeric path.
EnergyValue family_energy_closed_form(const FamilySpec& spec);

}  // namespace encov
