#include "kinred/brackets.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace kinred {

namespace {

double int_pow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gauss(std::mt19937_64& rng) {
  const double a = std::max(u01(rng), 1e-16);
  const double b = u01(rng);
  return std::sqrt(-2.0 * std::log(a)) * std::cos(2.0 * M_PI * b);
}

void check_sizes(const LinearTestFunctional& F, const HydroState& st) {
  if (F.u.size() != st.m.size() || F.g.size() != st.s.size())
    throw std::invalid_argument("functional/state component mismatch");
}

}  // namespace

double functional_value(const LinearTestFunctional& F, const HydroState& st) {
  check_sizes(F, st);
  const PhaseGrid& g = *st.grid;
  double acc = 0.0;
  for (std::size_t qi = 0; qi < g.nq_total(); ++qi) {
    double v = 0.0;
    for (std::size_t c = 0; c < F.u.size(); ++c)
      v += st.m[c].v[qi] * F.u[c].v[qi];
    for (std::size_t a = 0; a < F.g.size(); ++a)
      v += st.s[a].v[qi] * F.g[a].v[qi];
    acc += v;
  }
  return acc * g.wq();
}

PhaseField kt_variational_derivative(const LinearTestFunctional& F,
                                     const DistributionFunction& d,
                                     MapVariant variant, double xi) {
  const PhaseGrid& g = *d.f.grid;
  if (static_cast<int>(F.u.size()) != g.n)
    throw std::invalid_argument("functional u needs n components");
  PhaseField out = make_phase_field(g);
  const std::size_t nq = g.nq_total(), np = g.np_total();
  for (std::size_t qi = 0; qi < nq; ++qi) {
    const double* frow = d.f.v.data() + qi * np;
    double* orow = out.v.data() + qi * np;
    for (std::size_t pi = 0; pi < np; ++pi) {
      double v = 0.0;
      for (int c = 0; c < g.n; ++c) v += F.u[c].v[qi] * g.pcoord(pi, c);
      switch (variant) {
        case MapVariant::JA:
          for (std::size_t a = 0; a < F.g.size(); ++a)
            v += F.g[a].v[qi] * y_a_prime(frow[pi], static_cast<int>(a));
          break;
        case MapVariant::Jxi:
          v += F.g[0].v[qi] * (1.0 + xi) * std::pow(frow[pi], xi);
          break;
        case MapVariant::Jpol:
          for (std::size_t a = 0; a < F.g.size(); ++a)
            v += F.g[a].v[qi] * (1.0 + static_cast<double>(a)) *
                 int_pow(frow[pi], static_cast<int>(a));
          break;
      }
      orow[pi] = v;
    }
  }
  return out;
}

PhaseField canonical_bracket(const PhaseField& a, const PhaseField& b) {
  const PhaseGrid& g = *a.grid;
  if (!g.same_layout(*b.grid))
    throw std::invalid_argument("canonical bracket needs a common grid");
  PhaseField out = make_phase_field(g);
  for (int ax = 0; ax < g.n; ++ax) {
    PhaseField aq = ddq(a, ax), ap = ddp(a, ax);
    PhaseField bq = ddq(b, ax), bp = ddp(b, ax);
    for (std::size_t i = 0; i < out.v.size(); ++i)
      out.v[i] += aq.v[i] * bp.v[i] - bq.v[i] * ap.v[i];
  }
  return out;
}

double kt_bracket(const LinearTestFunctional& F, const LinearTestFunctional& G,
                  const DistributionFunction& d, MapVariant variant,
                  double xi) {
  PhaseField dF = kt_variational_derivative(F, d, variant, xi);
  PhaseField dG = kt_variational_derivative(G, d, variant, xi);
  PhaseField br = canonical_bracket(dF, dG);
  for (std::size_t i = 0; i < br.v.size(); ++i) br.v[i] *= d.f.v[i];
  return integrate_qp(br);
}

double lie_poisson_bracket_sA(const LinearTestFunctional& F,
                              const LinearTestFunctional& G,
                              const HydroState& st) {
  check_sizes(F, st);
  check_sizes(G, st);
  const PhaseGrid& g = *st.grid;
  const int n = g.n;

  // spectral q-derivatives of every functional field
  std::vector<std::vector<SpatialField>> du(n), dv(n);  // du[c][j] = d_j u^c
  for (int c = 0; c < n; ++c)
    for (int j = 0; j < n; ++j) {
      du[c].push_back(ddq(F.u[c], j));
      dv[c].push_back(ddq(G.u[c], j));
    }
  std::vector<std::vector<SpatialField>> dg(F.g.size()), dh(G.g.size());
  for (std::size_t a = 0; a < F.g.size(); ++a)
    for (int j = 0; j < n; ++j) {
      dg[a].push_back(ddq(F.g[a], j));
      dh[a].push_back(ddq(G.g[a], j));
    }

  double acc = 0.0;
  for (std::size_t qi = 0; qi < g.nq_total(); ++qi) {
    double v = 0.0;
    // <m, [u, v]> with [u,v]^c = u^j d_j v^c - v^j d_j u^c
    for (int c = 0; c < n; ++c) {
      double lie = 0.0;
      for (int j = 0; j < n; ++j)
        lie += F.u[j].v[qi] * dv[c][j].v[qi] - G.u[j].v[qi] * du[c][j].v[qi];
      v += st.m[c].v[qi] * lie;
    }
    // sum_a <s_a, L_u h_a - L_v g_a>
    for (std::size_t a = 0; a < F.g.size(); ++a) {
      double lie = 0.0;
      for (int j = 0; j < n; ++j)
        lie += F.u[j].v[qi] * dh[a][j].v[qi] - G.u[j].v[qi] * dg[a][j].v[qi];
      v += st.s[a].v[qi] * lie;
    }
    acc += v;
  }
  return -acc * g.wq();
}

BracketReport verify_poisson_map(const LinearTestFunctional& F,
                                 const LinearTestFunctional& G,
                                 const DistributionFunction& f,
                                 MapVariant variant, int A, double xi,
                                 const VerifyOptions& opts) {
  const PhaseGrid& g = *f.f.grid;
  HydroState st;
  switch (variant) {
    case MapVariant::JA:
      st = poisson_map_JA(f, A);
      break;
    case MapVariant::Jxi: {
      st.grid = &g;
      st.A = 0;
      st.m = momentum_density(f);
      st.s.push_back(tsallis_density(f, xi));
      break;
    }
    case MapVariant::Jpol:
      st = poisson_map_Jpol(f.f, A);
      break;
  }
  if (opts.corrupt_map && st.s.size() > 1) st.s[1] = tsallis_density(f, 1.0);

  BracketReport rep;
  rep.Nq = g.Nq;
  rep.Np = g.Np;
  rep.lhs = kt_bracket(F, G, f, variant, xi);
  rep.rhs = lie_poisson_bracket_sA(F, G, st);
  if (opts.corrupt_rhs) rep.rhs *= 1.01;
  rep.abs_err = std::abs(rep.lhs - rep.rhs);
  rep.rel_err =
      rep.abs_err / std::max({std::abs(rep.lhs), std::abs(rep.rhs), 1e-30});
  return rep;
}

namespace {

// Band-limited trigonometric field on the q grid from grid-independent draws.
SpatialField random_q_field(const PhaseGrid& g, std::mt19937_64& rng,
                            const TrialOptions& o) {
  SpatialField out = make_spatial_field(g);
  struct Mode {
    double amp, phase;
    int k0, k1;
  };
  std::vector<Mode> modes;
  auto push_band = [&](int lo, int hi, double amp_scale) {
    for (int k0 = (g.n == 1 ? lo : 0); k0 <= (g.n == 1 ? hi : hi); ++k0) {
      if (g.n == 1) {
        modes.push_back({gauss(rng) * amp_scale / (1.0 + k0), 2.0 * M_PI * u01(rng), k0, 0});
      } else {
        for (int k1 = lo; k1 <= hi; ++k1)
          modes.push_back({gauss(rng) * amp_scale / (1.0 + k0 + k1),
                           2.0 * M_PI * u01(rng), k0, k1});
      }
    }
  };
  push_band(0, o.kq_main, 1.0);
  // near-limit trace, n=1 only (the 2-d smoke grids stay fully resolved)
  if (g.n == 1)
    for (int k = o.kq_high_lo; k <= o.kq_high_hi; ++k)
      modes.push_back({gauss(rng) * o.amp_high, 2.0 * M_PI * u01(rng), k, 0});

  const double kq = 2.0 * M_PI / g.Lq;
  for (std::size_t qi = 0; qi < g.nq_total(); ++qi) {
    double v = 0.0;
    const double q0 = g.qcoord(qi, 0);
    const double q1 = (g.n == 2) ? g.qcoord(qi, 1) : 0.0;
    for (const Mode& m : modes)
      v += m.amp * std::cos(kq * (m.k0 * q0 + m.k1 * q1) + m.phase);
    out.v[qi] = v;
  }
  return out;
}

}  // namespace

LinearTestFunctional random_functional(const PhaseGrid& g, int nslots,
                                       std::uint64_t seed,
                                       const TrialOptions& opts) {
  std::mt19937_64 rng(seed);
  LinearTestFunctional F;
  for (int c = 0; c < g.n; ++c) F.u.push_back(random_q_field(g, rng, opts));
  for (int a = 0; a < nslots; ++a) F.g.push_back(random_q_field(g, rng, opts));
  return F;
}

DistributionFunction random_positive_f(const PhaseGrid& g, std::uint64_t seed,
                                       const TrialOptions& opts) {
  std::mt19937_64 rng(seed);
  const double theta =
      opts.theta_min + (opts.theta_max - opts.theta_min) * u01(rng);

  struct PMode {
    double amp, phase;
    int jq0, jq1, jp0, jp1;
  };
  std::vector<PMode> modes;
  double amp_sum = 0.0;
  auto push = [&](int jq0, int jq1, int jp0, int jp1, double scale) {
    PMode m;
    m.amp = gauss(rng) * scale / (1.0 + jq0 + jq1 + 0.25 * (jp0 + jp1));
    m.phase = 2.0 * M_PI * u01(rng);
    m.jq0 = jq0;
    m.jq1 = jq1;
    m.jp0 = jp0;
    m.jp1 = jp1;
    modes.push_back(m);
    amp_sum += std::abs(m.amp);
  };
  if (g.n == 1) {
    for (int jq = 0; jq <= opts.kq_main; ++jq)
      for (int jp = 0; jp <= opts.kp_main; ++jp) {
        if (jq == 0 && jp == 0) continue;
        push(jq, 0, jp, 0, 1.0);
      }
    for (int jq = opts.kq_high_lo; jq <= opts.kq_high_hi; ++jq)
      push(jq, 0, 1, 0, opts.amp_high);
    for (int jp = opts.kp_high_lo; jp <= opts.kp_high_hi; ++jp)
      push(1, 0, jp, 0, opts.amp_high);
  } else {
    for (int jq0 = 0; jq0 <= 2; ++jq0)
      for (int jq1 = 0; jq1 <= 2; ++jq1)
        for (int jp0 = 0; jp0 <= 3; ++jp0)
          for (int jp1 = 0; jp1 <= 3; ++jp1) {
            if (jq0 + jq1 + jp0 + jp1 == 0) continue;
            push(jq0, jq1, jp0, jp1, 1.0);
          }
  }

  const double kq = 2.0 * M_PI / g.Lq;
  const double kp = M_PI / g.Pmax;  // fundamental of period 2 Pmax
  const double theta_env = 3.5;     // kills q-dependence at the p boundary
  const double amp = opts.perturbation / std::max(amp_sum, 1e-300);

  PhaseField f = make_phase_field(g);
  const std::size_t nq = g.nq_total(), np = g.np_total();
  const double norm = 1.0 / std::pow(2.0 * M_PI * theta, 0.5 * g.n);
  for (std::size_t qi = 0; qi < nq; ++qi) {
    const double q0 = g.qcoord(qi, 0);
    const double q1 = (g.n == 2) ? g.qcoord(qi, 1) : 0.0;
    double* row = f.v.data() + qi * np;
    for (std::size_t pi = 0; pi < np; ++pi) {
      const double p0 = g.pcoord(pi, 0);
      const double p1 = (g.n == 2) ? g.pcoord(pi, 1) : 0.0;
      const double psq = p0 * p0 + p1 * p1;
      double pert = 0.0;
      for (const PMode& m : modes)
        pert += m.amp * std::cos(kq * (m.jq0 * q0 + m.jq1 * q1) +
                                 kp * (m.jp0 * p0 + m.jp1 * p1) + m.phase);
      const double env = std::exp(-psq / (2.0 * theta_env));
      row[pi] = norm * std::exp(-psq / (2.0 * theta)) *
                (1.0 + amp * env * pert);
    }
  }
  return make_distribution(std::move(f));
}

}  // namespace kinred
