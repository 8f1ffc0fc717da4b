#pragma once

#include <utility>

#include "kinred/grid.hpp"
#include "kinred/maxwellian.hpp"
#include "kinred/moments.hpp"

namespace kinred {

enum class CouplingMode { neutral, electrostatic, selfgravitating };

// Electrostatic runs couple with +e^2, self-gravitating ones with -G.
struct CouplingConstants {
  CouplingMode mode = CouplingMode::neutral;
  double e2 = 0.0;
  double Ggrav = 0.0;

  double signed_coupling() const {
    switch (mode) {
      case CouplingMode::electrostatic: return e2;
      case CouplingMode::selfgravitating: return -Ggrav;
      default: return 0.0;
    }
  }
};

CouplingConstants neutral_coupling();
CouplingConstants electrostatic_coupling(double e2);
CouplingConstants selfgravitating_coupling(double G);

// integral of |p|^2/2 f; equals integral of (|m|^2/(2 rho) + (n/2) rho theta)
// with the same quadrature.
double h_kinetic(const DistributionFunction& f);

// integral of (|m|^2/(2 rho) + (n/2) rho T(rho, s_1)); needs A >= 1.
double h_fluids(const HydroState& state);

// (n/2) integral of rho theta (1 - exp(-(2/n) r[f|f_m]/rho)); nonnegative,
// equal to h_kinetic(f) - h_fluids of the A=1 image.
double delta_h(const DistributionFunction& f);

// Solves -laplacian(phi) = coupling * (rho - mean rho) spectrally with a
// zero-mean potential; energy = (1/2) integral (rho - mean rho) phi.
std::pair<SpatialField, double> greens_solve(const SpatialField& rho,
                                             double coupling);

// Potential energy (coupling/2) * double integral rho rho' G.
double h_static(const SpatialField& rho, double coupling);

double h_vlasov(const DistributionFunction& f, const CouplingConstants& c);
double h_selfgrav(const DistributionFunction& f, const CouplingConstants& c);

// Hamiltonian matching the coupling mode (kinetic / Vlasov / self-grav).
double h_total(const DistributionFunction& f, const CouplingConstants& c);

}  // namespace kinred
