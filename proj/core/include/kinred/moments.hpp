#pragma once

#include <utility>
#include <vector>

#include "kinred/grid.hpp"

namespace kinred {

// Nonnegative phase-space density with positive total mass.
struct DistributionFunction {
  PhaseField f;
  bool strictly_positive = false;
  double min_value = 0.0;
};

// Validates finiteness, nonnegativity and positive total mass.
DistributionFunction make_distribution(PhaseField field);

// Same, but clamps negative values to 0 first (spectral interpolation can
// undershoot slightly). Returns the quadrature mass removed by clamping.
std::pair<DistributionFunction, double> make_distribution_clamped(
    PhaseField field);

// Momentum density and generalized entropy densities (m, s_0..s_A) on the
// q grid; s[0] is the mass density.
struct HydroState {
  const PhaseGrid* grid = nullptr;
  int A = 0;
  std::vector<SpatialField> m;  // n components
  std::vector<SpatialField> s;  // A+1 densities
};

// y_a(x) = x (log x)^a with the removable singularity y_a(0) = 0; y_0(x) = x.
// Tiny arguments clamp the log at 1e-300 so that underflowing Maxwellian
// tails evaluate smoothly to 0.
double y_a(double x, int a);

// d/dx of y_a: (log x)^a + a (log x)^(a-1).
double y_a_prime(double x, int a);

std::vector<SpatialField> momentum_density(const DistributionFunction& f);

// s_a[f](q) = integral over p of f (log f)^a.
SpatialField generalized_entropy_density(const DistributionFunction& f, int a);

// rho_xi[f](q) = integral over p of f^(1+xi); xi restricted to [-0.5, 1].
// At xi = 0 this is the mass density.
SpatialField tsallis_density(const DistributionFunction& f, double xi);

HydroState poisson_map_JA(const DistributionFunction& f, int A);

// Components m[f] and integral of f^(1+a); f of any sign is accepted since
// only integer powers appear.
HydroState poisson_map_Jpol(const PhaseField& f, int A);

// u = m/rho and theta = (1/(n rho)) * integral of |p-u|^2 f. Requires
// rho > 0 everywhere.
std::pair<std::vector<SpatialField>, SpatialField> kinetic_velocity_temperature(
    const DistributionFunction& f);

// s~_a = s_a + sum_{b<a} s_b Lambda[b][a], m unchanged. Lambda is an
// (A+1)x(A+1) row-major matrix that must vanish on and below the diagonal.
HydroState gauge_shift(const HydroState& st, const std::vector<double>& Lambda);

// Strict upper part of (I + Lambda)^-1; gauge_shift with it undoes the shift.
std::vector<double> inverse_gauge(const std::vector<double>& Lambda, int A);

// Pair of smooth bumps (B(p-c) + B(p+c))/2, constant in q, n = 1 only.
// B has support [-width/2, width/2]; c >= 1 keeps the supports disjoint, and
// all generalized entropies are independent of c while theta grows with it.
DistributionFunction bimodal_counterexample(const PhaseGrid& g, double c,
                                            double width = 1.0);

}  // namespace kinred
