#pragma once

#include <array>
#include <utility>
#include <vector>

#include "kinred/grid.hpp"
#include "kinred/moments.hpp"

namespace kinred {

// Domain-averaged density, velocity and temperature.
struct MeanState {
  double rho0 = 0.0;
  std::array<double, 2> u0{0.0, 0.0};
  double theta0 = 0.0;
};

// Gaussian in p with the given moment fields:
// rho/(2 pi theta)^(n/2) * exp(-|p-u|^2 / (2 theta)). theta must be positive.
DistributionFunction maxwellian_field(const PhaseGrid& g,
                                      const SpatialField& rho,
                                      const std::vector<SpatialField>& u,
                                      const SpatialField& theta);

DistributionFunction uniform_maxwellian(const PhaseGrid& g, double rho0,
                                        const std::array<double, 2>& u0,
                                        double theta0);

// Maxwellian with the same mass density, mean velocity and kinetic
// temperature as f.
DistributionFunction local_maxwellian(const DistributionFunction& f);

MeanState mean_state(const DistributionFunction& f);

// Global Maxwellian built from the domain means of f. Only meaningful on the
// torus, which is the only domain the grid represents.
std::pair<DistributionFunction, MeanState> global_maxwellian(
    const DistributionFunction& f);

// r[f1|f2](q) = integral over p of (f1 log(f1/f2) + f1 - f2), nonnegative.
// The integrand is evaluated as y_1(f1) - f1 log f2 + f1 - f2 so both terms
// vanish smoothly as f1 -> 0.
SpatialField relative_entropy_density(const DistributionFunction& f1,
                                      const DistributionFunction& f2);
double relative_entropy_total(const DistributionFunction& f1,
                              const DistributionFunction& f2);

// Ideal monatomic gas: T(rho, s) = rho^(2/n) / (2 pi e) * exp(-(2/n) s/rho).
double eos_temperature(double rho, double s, int n);
SpatialField eos_temperature_field(const SpatialField& rho,
                                   const SpatialField& s, int n);

// theta[f] = T(rho, s[f_m]) = T(rho, s[f]) exp((2/n) r[f|f_m]/rho), and
// theta >= T(rho, s[f]) with equality only at a local Maxwellian.
struct ThetaIdentityReport {
  SpatialField theta;
  SpatialField T_from_sm;
  SpatialField T_scaled;
  double max_residual = 0.0;       // max |mismatch| / max theta
  double min_theta_minus_T = 0.0;  // min over q of theta - T(rho, s[f])
};
ThetaIdentityReport theta_identity_check(const DistributionFunction& f);

// h(z) = (1+z) log(1+z) - z and k(z) = z - log(1+z); series below |z| = 1e-4
// where the direct forms lose digits.
double convex_h(double z);
double convex_k(double z);

}  // namespace kinred
