#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kinred/bounds.hpp"
#include "kinred/grid.hpp"
#include "kinred/hamiltonians.hpp"
#include "kinred/moments.hpp"

namespace kinred {

struct SolverAbort : std::runtime_error {
  double t;
  SolverAbort(const std::string& msg, double when)
      : std::runtime_error(msg), t(when) {}
};

// f(q, p) <- f(q - p dt, p), realized exactly per p node by Fourier phase
// shifts; exact for band-limited f. Interpolation can undershoot slightly,
// so the result is clamped at 0; the removed mass is reported through
// clamped_mass when given.
DistributionFunction free_stream_step(const DistributionFunction& f, double dt,
                                      double* clamped_mass = nullptr);

// Strang splitting: half free-stream, full momentum kick by -dt dphi/dq with
// phi from the spectral Poisson solve on rho[f], half free-stream.
// Second order in dt; n = 1 only.
DistributionFunction vlasov_poisson_step(const DistributionFunction& f,
                                         double dt,
                                         const CouplingConstants& c,
                                         double* clamped_mass = nullptr);

// Conservative variables (rho, m, s) of the 1-d compressible Euler system.
struct EulerState {
  const PhaseGrid* grid = nullptr;
  SpatialField rho, m, s;
};

// Finite-volume update in conservation form with fluxes
// (m, m^2/rho + P, (m/rho) s), P = rho T(rho, s), Rusanov interface flux
// with wave speed |u| + sqrt(gamma T) (gamma = 1 + 2/n), two-stage SSP
// time stepping. Aborts on nonpositive density or temperature.
EulerState euler_step(const EulerState& state, double dt);

enum class ScenarioKind { free_stream, vlasov, selfgrav, euler };

// Named initial-condition families:
//   "uniform_maxwellian"    rho0, u0, theta0
//   "perturbed_maxwellian"  f_M(p) (1 + eps cos(k q))  (Landau-type)
//   "bimodal"               bump pair at +/- c
//   "acoustic"              small right-moving Euler pulse
//   "euler_from_maxwellian" Euler state from the (m, rho, s) image of
//                           perturbed Maxwellian data
struct Scenario {
  PhaseGrid grid;
  ScenarioKind kind = ScenarioKind::free_stream;
  std::string initial = "perturbed_maxwellian";
  double rho0 = 1.0, theta0 = 1.0;
  std::array<double, 2> u0{0.0, 0.0};
  double eps = 0.01;
  int mode_k = 1;
  double bimodal_c = 1.0;
  CouplingConstants couplings;
  double dt = 1.0 / 64.0;
  double t_end = 1.0;
  int sample_every = 8;  // diagnostic cadence in steps
};

struct DiagnosticSeries {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::map<std::string, double> summary;  // final conservation errors etc.
};

// dt must respect dt <= 0.5 dq / Pmax for kinetic runs (splitting-error
// bookkeeping; the semi-Lagrangian steps themselves are unconditionally
// stable). Euler runs use the given dt capped by CFL 0.45.
DiagnosticSeries run_simulation(const Scenario& sc);

DistributionFunction make_initial_distribution(const Scenario& sc);
EulerState make_initial_euler(const Scenario& sc);

}  // namespace kinred
