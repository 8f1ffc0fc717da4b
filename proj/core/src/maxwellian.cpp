#include "kinred/maxwellian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kinred {

DistributionFunction maxwellian_field(const PhaseGrid& g,
                                      const SpatialField& rho,
                                      const std::vector<SpatialField>& u,
                                      const SpatialField& theta) {
  if (static_cast<int>(u.size()) != g.n)
    throw std::invalid_argument("velocity needs one component per dimension");
  const std::size_t nq = g.nq_total(), np = g.np_total();
  PhaseField f = make_phase_field(g);
  for (std::size_t qi = 0; qi < nq; ++qi) {
    const double th = theta.v[qi];
    if (!(th > 0.0))
      throw std::invalid_argument("Maxwellian needs positive temperature");
    const double norm = rho.v[qi] / std::pow(2.0 * M_PI * th, 0.5 * g.n);
    double* row = f.v.data() + qi * np;
    for (std::size_t pi = 0; pi < np; ++pi) {
      double sq = 0.0;
      for (int c = 0; c < g.n; ++c) {
        const double d = g.pcoord(pi, c) - u[c].v[qi];
        sq += d * d;
      }
      row[pi] = norm * std::exp(-sq / (2.0 * th));
    }
  }
  return make_distribution(std::move(f));
}

DistributionFunction uniform_maxwellian(const PhaseGrid& g, double rho0,
                                        const std::array<double, 2>& u0,
                                        double theta0) {
  SpatialField rho = make_spatial_field(g, rho0);
  SpatialField th = make_spatial_field(g, theta0);
  std::vector<SpatialField> u;
  for (int c = 0; c < g.n; ++c) u.push_back(make_spatial_field(g, u0[c]));
  return maxwellian_field(g, rho, u, th);
}

DistributionFunction local_maxwellian(const DistributionFunction& f) {
  const PhaseGrid& g = *f.f.grid;
  auto [u, theta] = kinetic_velocity_temperature(f);
  SpatialField rho = generalized_entropy_density(f, 0);
  return maxwellian_field(g, rho, u, theta);
}

MeanState mean_state(const DistributionFunction& f) {
  const PhaseGrid& g = *f.f.grid;
  const double vol = std::pow(g.Lq, g.n);
  const std::size_t nq = g.nq_total(), np = g.np_total();
  const double w = g.wq() * g.wp();
  double mass = 0.0, p2 = 0.0;
  std::array<double, 2> mom{0.0, 0.0};
  for (std::size_t qi = 0; qi < nq; ++qi) {
    const double* row = f.f.v.data() + qi * np;
    for (std::size_t pi = 0; pi < np; ++pi) {
      const double val = row[pi];
      mass += val;
      double sq = 0.0;
      for (int c = 0; c < g.n; ++c) {
        const double pc = g.pcoord(pi, c);
        mom[c] += pc * val;
        sq += pc * pc;
      }
      p2 += sq * val;
    }
  }
  mass *= w;
  p2 *= w;
  for (int c = 0; c < g.n; ++c) mom[c] *= w;

  MeanState ms;
  ms.rho0 = mass / vol;
  if (!(ms.rho0 > 0.0))
    throw std::invalid_argument("mean mass density must be positive");
  double usq = 0.0;
  for (int c = 0; c < g.n; ++c) {
    ms.u0[c] = mom[c] / (ms.rho0 * vol);
    usq += ms.u0[c] * ms.u0[c];
  }
  ms.theta0 = (p2 / vol / ms.rho0 - usq) / g.n;
  return ms;
}

std::pair<DistributionFunction, MeanState> global_maxwellian(
    const DistributionFunction& f) {
  const PhaseGrid& g = *f.f.grid;
  MeanState ms = mean_state(f);
  return {uniform_maxwellian(g, ms.rho0, ms.u0, ms.theta0), ms};
}

SpatialField relative_entropy_density(const DistributionFunction& f1,
                                      const DistributionFunction& f2) {
  const PhaseGrid& g = *f1.f.grid;
  if (!g.same_layout(*f2.f.grid))
    throw std::invalid_argument("relative entropy needs a common grid");
  const std::size_t nq = g.nq_total(), np = g.np_total();
  double f1max = 0.0;
  for (double x : f1.f.v) f1max = std::max(f1max, x);
  SpatialField out = make_spatial_field(g);
  for (std::size_t qi = 0; qi < nq; ++qi) {
    const double* a = f1.f.v.data() + qi * np;
    const double* b = f2.f.v.data() + qi * np;
    double acc = 0.0;
    for (std::size_t pi = 0; pi < np; ++pi) {
      const double x = a[pi], y = b[pi];
      double term = y_a(x, 1) + x - y;
      if (x > 0.0) {
        if (y < 1e-300 && x > 1e-12 * f1max) warnings::vanishing_reference()++;
        term -= x * std::log(std::max(y, 1e-300));
      }
      acc += term;
    }
    out.v[qi] = acc * g.wp();
  }
  return out;
}

double relative_entropy_total(const DistributionFunction& f1,
                              const DistributionFunction& f2) {
  return integrate_q(relative_entropy_density(f1, f2));
}

double eos_temperature(double rho, double s, int n) {
  if (!(rho > 0.0)) throw std::invalid_argument("eos needs rho > 0");
  return std::pow(rho, 2.0 / n) / (2.0 * M_PI * M_E) *
         std::exp(-2.0 * s / (n * rho));
}

SpatialField eos_temperature_field(const SpatialField& rho,
                                   const SpatialField& s, int n) {
  SpatialField out = make_spatial_field(*rho.grid);
  for (std::size_t qi = 0; qi < out.v.size(); ++qi)
    out.v[qi] = eos_temperature(rho.v[qi], s.v[qi], n);
  return out;
}

ThetaIdentityReport theta_identity_check(const DistributionFunction& f) {
  const PhaseGrid& g = *f.f.grid;
  const int n = g.n;
  SpatialField rho = generalized_entropy_density(f, 0);
  SpatialField s = generalized_entropy_density(f, 1);
  auto [u, theta] = kinetic_velocity_temperature(f);
  DistributionFunction fm = maxwellian_field(g, rho, u, theta);
  SpatialField sm = generalized_entropy_density(fm, 1);
  SpatialField r = relative_entropy_density(f, fm);

  ThetaIdentityReport rep;
  rep.theta = theta;
  rep.T_from_sm = eos_temperature_field(rho, sm, n);
  rep.T_scaled = make_spatial_field(g);
  double thmax = 0.0;
  for (double t : theta.v) thmax = std::max(thmax, std::abs(t));
  double resid = 0.0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t qi = 0; qi < rho.v.size(); ++qi) {
    const double T = eos_temperature(rho.v[qi], s.v[qi], n);
    rep.T_scaled.v[qi] = T * std::exp(2.0 * r.v[qi] / (n * rho.v[qi]));
    resid = std::max(resid, std::abs(theta.v[qi] - rep.T_from_sm.v[qi]));
    resid = std::max(resid, std::abs(theta.v[qi] - rep.T_scaled.v[qi]));
    min_gap = std::min(min_gap, theta.v[qi] - T);
  }
  rep.max_residual = resid / std::max(thmax, 1e-300);
  rep.min_theta_minus_T = min_gap;
  return rep;
}

double convex_h(double z) {
  if (z <= -1.0) throw std::invalid_argument("h(z) needs z > -1");
  if (std::abs(z) < 1e-4)
    return z * z * (0.5 + z * (-1.0 / 6.0 + z * (1.0 / 12.0)));
  return (1.0 + z) * std::log1p(z) - z;
}

double convex_k(double z) {
  if (z <= -1.0) throw std::invalid_argument("k(z) needs z > -1");
  if (std::abs(z) < 1e-4)
    return z * z * (0.5 + z * (-1.0 / 3.0 + z * (1.0 / 4.0)));
  return z - std::log1p(z);
}

}  // namespace kinred
