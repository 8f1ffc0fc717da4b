#pragma once

#include <optional>

#include "kinred/hamiltonians.hpp"
#include "kinred/maxwellian.hpp"
#include "kinred/moments.hpp"

namespace kinred {

// Constants of motion entering the a-priori estimates. R_in splits exactly
// into R_m + R_M (entropy against the local Maxwellian plus local against
// global). Phi0 and S_in exist only in electrostatic mode, where
// theta0 <= Phi0 and R_in <= S_in.
struct ConservedSet {
  MeanState mean;
  double H = 0.0;
  double R_in = 0.0;
  double R_m = 0.0;
  double R_M = 0.0;
  std::optional<double> Phi0;
  std::optional<double> S_in;
};

ConservedSet conserved_set(const DistributionFunction& f,
                           const CouplingConstants& c);

enum class BoundStatus { pass, fail, not_applicable };

// delta_h <= 2 theta0 R_in (neutral) or <= 2 Phi0 S_in (electrostatic), with
// 1e-12 absolute slack for quadrature round-off. The self-gravitating sign
// admits no such bound, so that mode reports not_applicable.
struct BoundCheck {
  double delta_h = 0.0;
  double bound_rhs = 0.0;
  double margin = 0.0;  // bound_rhs - delta_h
  BoundStatus status = BoundStatus::pass;
};

BoundCheck check_bound(const DistributionFunction& f,
                       const CouplingConstants& c);

// R_in by its closed form: integral of f log f plus
// rho0 vol (-log rho0 + (n/2) log theta0 + (n/2) log(2 pi e)).
double maxwellian_cross_entropy(const DistributionFunction& f);

}  // namespace kinred
