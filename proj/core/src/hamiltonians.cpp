#include "kinred/hamiltonians.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "kinred/spectral.hpp"

namespace kinred {

CouplingConstants neutral_coupling() { return {}; }

CouplingConstants electrostatic_coupling(double e2) {
  if (e2 < 0.0) throw std::invalid_argument("e2 must be >= 0");
  CouplingConstants c;
  c.mode = CouplingMode::electrostatic;
  c.e2 = e2;
  return c;
}

CouplingConstants selfgravitating_coupling(double G) {
  if (G < 0.0) throw std::invalid_argument("G must be >= 0");
  CouplingConstants c;
  c.mode = CouplingMode::selfgravitating;
  c.Ggrav = G;
  return c;
}

double h_kinetic(const DistributionFunction& d) {
  const PhaseGrid& g = *d.f.grid;
  const std::size_t nq = g.nq_total(), np = g.np_total();
  double acc = 0.0;
  for (std::size_t qi = 0; qi < nq; ++qi) {
    const double* row = d.f.v.data() + qi * np;
    for (std::size_t pi = 0; pi < np; ++pi) {
      double sq = 0.0;
      for (int c = 0; c < g.n; ++c) {
        const double pc = g.pcoord(pi, c);
        sq += pc * pc;
      }
      acc += 0.5 * sq * row[pi];
    }
  }
  return acc * g.wq() * g.wp();
}

double h_fluids(const HydroState& state) {
  if (state.A < 1)
    throw std::invalid_argument("h_fluids needs the entropy density (A >= 1)");
  const PhaseGrid& g = *state.grid;
  const int n = g.n;
  double acc = 0.0;
  for (std::size_t qi = 0; qi < state.s[0].v.size(); ++qi) {
    const double rho = state.s[0].v[qi];
    if (!(rho > 0.0)) throw std::invalid_argument("h_fluids needs rho > 0");
    double msq = 0.0;
    for (int c = 0; c < n; ++c) msq += state.m[c].v[qi] * state.m[c].v[qi];
    const double T = eos_temperature(rho, state.s[1].v[qi], n);
    acc += 0.5 * msq / rho + 0.5 * n * rho * T;
  }
  return acc * g.wq();
}

double delta_h(const DistributionFunction& f) {
  const PhaseGrid& g = *f.f.grid;
  const int n = g.n;
  SpatialField rho = generalized_entropy_density(f, 0);
  auto [u, theta] = kinetic_velocity_temperature(f);
  DistributionFunction fm = maxwellian_field(g, rho, u, theta);
  SpatialField r = relative_entropy_density(f, fm);
  double acc = 0.0;
  for (std::size_t qi = 0; qi < rho.v.size(); ++qi) {
    const double x = 2.0 * r.v[qi] / (n * rho.v[qi]);
    acc += rho.v[qi] * theta.v[qi] * (-std::expm1(-x));
  }
  return 0.5 * n * acc * g.wq();
}

std::pair<SpatialField, double> greens_solve(const SpatialField& rho,
                                             double coupling) {
  const PhaseGrid& g = *rho.grid;
  const std::size_t nq = g.nq_total();
  // forward transform of rho on the q grid
  std::vector<std::complex<double>> hat(nq);
  for (std::size_t i = 0; i < nq; ++i) hat[i] = rho.v[i];
  if (g.n == 1) {
    spectral::fft(hat.data(), g.Nq, -1);
    for (int k = 0; k < g.Nq; ++k) {
      const double kk = spectral::wavenumber(k, g.Nq, g.Lq);
      hat[k] = (kk == 0.0) ? 0.0 : hat[k] * (coupling / (kk * kk));
    }
    spectral::fft(hat.data(), g.Nq, +1);
  } else {
    // 2-d transform: rows then columns
    std::vector<std::complex<double>> line(g.Nq);
    for (int r = 0; r < g.Nq; ++r)
      spectral::fft(hat.data() + static_cast<std::size_t>(r) * g.Nq, g.Nq, -1);
    for (int c = 0; c < g.Nq; ++c) {
      for (int r = 0; r < g.Nq; ++r)
        line[r] = hat[static_cast<std::size_t>(r) * g.Nq + c];
      spectral::fft(line.data(), g.Nq, -1);
      for (int r = 0; r < g.Nq; ++r)
        hat[static_cast<std::size_t>(r) * g.Nq + c] = line[r];
    }
    for (int r = 0; r < g.Nq; ++r)
      for (int c = 0; c < g.Nq; ++c) {
        const double k0 = spectral::wavenumber(r, g.Nq, g.Lq);
        const double k1 = spectral::wavenumber(c, g.Nq, g.Lq);
        const double k2 = k0 * k0 + k1 * k1;
        auto& h = hat[static_cast<std::size_t>(r) * g.Nq + c];
        h = (k2 == 0.0) ? 0.0 : h * (coupling / k2);
      }
    for (int c = 0; c < g.Nq; ++c) {
      for (int r = 0; r < g.Nq; ++r)
        line[r] = hat[static_cast<std::size_t>(r) * g.Nq + c];
      spectral::fft(line.data(), g.Nq, +1);
      for (int r = 0; r < g.Nq; ++r)
        hat[static_cast<std::size_t>(r) * g.Nq + c] = line[r];
    }
    for (int r = 0; r < g.Nq; ++r)
      spectral::fft(hat.data() + static_cast<std::size_t>(r) * g.Nq, g.Nq, +1);
  }
  SpatialField phi = make_spatial_field(g);
  for (std::size_t i = 0; i < nq; ++i) phi.v[i] = hat[i].real();

  double rho_mean = 0.0;
  for (double x : rho.v) rho_mean += x;
  rho_mean /= static_cast<double>(nq);
  double energy = 0.0;
  for (std::size_t i = 0; i < nq; ++i)
    energy += (rho.v[i] - rho_mean) * phi.v[i];
  energy *= 0.5 * g.wq();
  return {std::move(phi), energy};
}

double h_static(const SpatialField& rho, double coupling) {
  return greens_solve(rho, coupling).second;
}

double h_vlasov(const DistributionFunction& f, const CouplingConstants& c) {
  if (c.mode == CouplingMode::selfgravitating)
    throw std::invalid_argument("h_vlasov needs neutral or electrostatic mode");
  SpatialField rho = generalized_entropy_density(f, 0);
  return h_kinetic(f) + h_static(rho, c.signed_coupling());
}

double h_selfgrav(const DistributionFunction& f, const CouplingConstants& c) {
  if (c.mode != CouplingMode::selfgravitating)
    throw std::invalid_argument("h_selfgrav needs self-gravitating mode");
  SpatialField rho = generalized_entropy_density(f, 0);
  return h_kinetic(f) + h_static(rho, c.signed_coupling());
}

double h_total(const DistributionFunction& f, const CouplingConstants& c) {
  switch (c.mode) {
    case CouplingMode::neutral: return h_kinetic(f);
    case CouplingMode::electrostatic: return h_vlasov(f, c);
    case CouplingMode::selfgravitating: return h_selfgrav(f, c);
  }
  return h_kinetic(f);
}

}  // namespace kinred
