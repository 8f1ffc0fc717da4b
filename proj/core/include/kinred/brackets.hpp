#pragma once

#include <cstdint>
#include <vector>

#include "kinred/grid.hpp"
#include "kinred/moments.hpp"

namespace kinred {

// Which fibre-integral map is being verified: the generalized-entropy map
// (s_a from f (log f)^a), the one-parameter Tsallis map (f^(1+xi)), or the
// integer-power map (f^(1+a)).
enum class MapVariant { JA, Jxi, Jpol };

// Linear functional on the hydrodynamic variables, represented by the fields
// it pairs against: n velocity components u and one g per entropy slot (a
// single g in the xi variant).
struct LinearTestFunctional {
  std::vector<SpatialField> u;
  std::vector<SpatialField> g;
};

struct BracketReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  int Nq = 0;
  int Np = 0;
};

// <state, (u, g)> = integral of (sum_i m_i u^i + sum_a s_a g_a).
double functional_value(const LinearTestFunctional& F, const HydroState& st);

// delta(F o J)/delta f as a phase-space field:
//   JA:   u.p + sum_a g_a y_a'(f)
//   Jxi:  u.p + (1+xi) f^xi g
//   Jpol: u.p + sum_a (1+a) f^a g_a
PhaseField kt_variational_derivative(const LinearTestFunctional& F,
                                     const DistributionFunction& f,
                                     MapVariant variant, double xi = 0.0);

// Spectral realization of da/dq^i db/dp_i - db/dq^i da/dp_i.
PhaseField canonical_bracket(const PhaseField& a, const PhaseField& b);

// Kinetic Lie-Poisson bracket of two pulled-back functionals:
// integral of f {dF/df, dG/df}.
double kt_bracket(const LinearTestFunctional& F, const LinearTestFunctional& G,
                  const DistributionFunction& f, MapVariant variant,
                  double xi = 0.0);

// Fluid-side Lie-Poisson bracket of two linear functionals at the state:
// -<m, [u,v]> - sum_a <s_a, L_u h_a - L_v g_a>.
double lie_poisson_bracket_sA(const LinearTestFunctional& F,
                              const LinearTestFunctional& G,
                              const HydroState& st);

// Negative-control hooks; either one must make the verifier fail loudly.
struct VerifyOptions {
  bool corrupt_rhs = false;  // scales the fluid side by 1.01
  bool corrupt_map = false;  // replaces the s_1 image by the integral of f^2
};

// Evaluates both sides of the Poisson-map identity for one (F, G, f) triple.
// A is used by the JA/Jpol variants, xi by the Jxi variant.
BracketReport verify_poisson_map(const LinearTestFunctional& F,
                                 const LinearTestFunctional& G,
                                 const DistributionFunction& f,
                                 MapVariant variant, int A, double xi,
                                 const VerifyOptions& opts = {});

// Seeded band-limited test-data generation. The dominant band sits at low
// wavenumbers; a trace component near the band limit makes the quadrature
// error resolution-dependent, so halving the spacing visibly shrinks it.
// All draws are grid-independent: the same seed gives the same continuum
// fields on any grid that resolves them.
struct TrialOptions {
  int kq_main = 4;
  int kp_main = 8;
  int kq_high_lo = 18, kq_high_hi = 21;
  int kp_high_lo = 38, kp_high_hi = 42;
  double amp_high = 2e-4;
  double perturbation = 0.4;   // relative Maxwellian modulation, < 1
  double theta_min = 0.9, theta_max = 1.1;
};

LinearTestFunctional random_functional(const PhaseGrid& g, int nslots,
                                       std::uint64_t seed,
                                       const TrialOptions& opts = {});

// Strictly positive distribution: Maxwellian times (1 + enveloped
// band-limited modulation). The envelope removes q-dependence at the p
// boundary so fibre boundary terms cancel.
DistributionFunction random_positive_f(const PhaseGrid& g, std::uint64_t seed,
                                       const TrialOptions& opts = {});

}  // namespace kinred
