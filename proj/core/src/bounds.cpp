#include "kinred/bounds.hpp"

#include <cmath>
#include <limits>

namespace kinred {

ConservedSet conserved_set(const DistributionFunction& f,
                           const CouplingConstants& c) {
  const PhaseGrid& g = *f.f.grid;
  ConservedSet cs;
  DistributionFunction fm = local_maxwellian(f);
  auto [fM, mean] = global_maxwellian(f);
  cs.mean = mean;
  cs.R_m = relative_entropy_total(f, fm);
  cs.R_M = relative_entropy_total(fm, fM);
  cs.R_in = relative_entropy_total(f, fM);
  cs.H = h_total(f, c);
  if (c.mode == CouplingMode::electrostatic) {
    const double vol = std::pow(g.Lq, g.n);
    double usq = 0.0;
    for (int i = 0; i < g.n; ++i) usq += mean.u0[i] * mean.u0[i];
    const double Phi0 = (2.0 * cs.H / (vol * mean.rho0) - usq) / g.n;
    cs.Phi0 = Phi0;
    const double s1_total = integrate_q(generalized_entropy_density(f, 1));
    cs.S_in = s1_total +
              mean.rho0 * vol *
                  (-std::log(mean.rho0) + 0.5 * g.n * std::log(Phi0) +
                   0.5 * g.n * std::log(2.0 * M_PI * M_E));
  }
  return cs;
}

BoundCheck check_bound(const DistributionFunction& f,
                       const CouplingConstants& c) {
  const double slack = 1e-12;
  ConservedSet cs = conserved_set(f, c);
  BoundCheck b;
  b.delta_h = delta_h(f);
  switch (c.mode) {
    case CouplingMode::neutral:
      b.bound_rhs = 2.0 * cs.mean.theta0 * cs.R_in;
      break;
    case CouplingMode::electrostatic:
      b.bound_rhs = 2.0 * (*cs.Phi0) * (*cs.S_in);
      break;
    case CouplingMode::selfgravitating:
      b.bound_rhs = std::numeric_limits<double>::quiet_NaN();
      b.margin = std::numeric_limits<double>::quiet_NaN();
      b.status = BoundStatus::not_applicable;
      return b;
  }
  b.margin = b.bound_rhs - b.delta_h;
  b.status = (b.delta_h <= b.bound_rhs + slack) ? BoundStatus::pass
                                                : BoundStatus::fail;
  return b;
}

double maxwellian_cross_entropy(const DistributionFunction& f) {
  const PhaseGrid& g = *f.f.grid;
  MeanState mean = mean_state(f);
  const double vol = std::pow(g.Lq, g.n);
  const double s1_total = integrate_q(generalized_entropy_density(f, 1));
  return s1_total + mean.rho0 * vol *
                        (-std::log(mean.rho0) +
                         0.5 * g.n * std::log(mean.theta0) +
                         0.5 * g.n * std::log(2.0 * M_PI * M_E));
}

}  // namespace kinred
