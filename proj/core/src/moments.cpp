#include "kinred/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kinred {

namespace {

double int_pow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

void require_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) throw std::invalid_argument("field has non-finite values");
}

}  // namespace

DistributionFunction make_distribution(PhaseField field) {
  require_finite(field.v);
  double mn = field.v.empty() ? 0.0 : field.v[0];
  for (double x : field.v) mn = std::min(mn, x);
  if (mn < 0.0)
    throw std::invalid_argument("distribution function must be nonnegative");
  DistributionFunction d;
  d.f = std::move(field);
  d.min_value = mn;
  d.strictly_positive = mn > 0.0;
  if (integrate_qp(d.f) <= 0.0)
    throw std::invalid_argument("distribution function must have positive mass");
  return d;
}

std::pair<DistributionFunction, double> make_distribution_clamped(
    PhaseField field) {
  require_finite(field.v);
  const PhaseGrid& g = *field.grid;
  double clamped = 0.0;
  for (double& x : field.v) {
    if (x < 0.0) {
      clamped -= x;
      x = 0.0;
    }
  }
  clamped *= g.wq() * g.wp();
  return {make_distribution(std::move(field)), clamped};
}

double y_a(double x, int a) {
  if (x < 0.0) throw std::invalid_argument("y_a requires x >= 0");
  if (a < 0) return 0.0;
  if (a == 0) return x;
  if (x == 0.0) return 0.0;
  if (x < 1e-300) warnings::log_underflow()++;
  const double lx = std::log(std::max(x, 1e-300));
  return x * int_pow(lx, a);
}

double y_a_prime(double x, int a) {
  if (x < 0.0) throw std::invalid_argument("y_a_prime requires x >= 0");
  if (a < 0) return 0.0;
  if (a == 0) return 1.0;
  if (x < 1e-300) warnings::log_underflow()++;
  const double lx = std::log(std::max(x, 1e-300));
  return int_pow(lx, a) + a * int_pow(lx, a - 1);
}

std::vector<SpatialField> momentum_density(const DistributionFunction& d) {
  const PhaseGrid& g = *d.f.grid;
  const std::size_t nq = g.nq_total(), np = g.np_total();
  std::vector<SpatialField> m;
  for (int c = 0; c < g.n; ++c) m.push_back(make_spatial_field(g));
  for (std::size_t qi = 0; qi < nq; ++qi) {
    const double* row = d.f.v.data() + qi * np;
    for (int c = 0; c < g.n; ++c) {
      double acc = 0.0;
      for (std::size_t pi = 0; pi < np; ++pi) acc += g.pcoord(pi, c) * row[pi];
      m[c].v[qi] = acc * g.wp();
    }
  }
  return m;
}

SpatialField generalized_entropy_density(const DistributionFunction& d, int a) {
  if (a < 0) throw std::invalid_argument("entropy order must be >= 0");
  const PhaseGrid& g = *d.f.grid;
  SpatialField out = make_spatial_field(g);
  const std::size_t nq = g.nq_total(), np = g.np_total();
  for (std::size_t qi = 0; qi < nq; ++qi) {
    const double* row = d.f.v.data() + qi * np;
    double acc = 0.0;
    for (std::size_t pi = 0; pi < np; ++pi) acc += y_a(row[pi], a);
    out.v[qi] = acc * g.wp();
  }
  return out;
}

SpatialField tsallis_density(const DistributionFunction& d, double xi) {
  if (xi < -0.5 || xi > 1.0)
    throw std::invalid_argument("xi must lie in [-0.5, 1]");
  const PhaseGrid& g = *d.f.grid;
  SpatialField out = make_spatial_field(g);
  const std::size_t nq = g.nq_total(), np = g.np_total();
  const double ex = 1.0 + xi;
  for (std::size_t qi = 0; qi < nq; ++qi) {
    const double* row = d.f.v.data() + qi * np;
    double acc = 0.0;
    for (std::size_t pi = 0; pi < np; ++pi) acc += std::pow(row[pi], ex);
    out.v[qi] = acc * g.wp();
  }
  return out;
}

HydroState poisson_map_JA(const DistributionFunction& d, int A) {
  if (A < 0) throw std::invalid_argument("entropy order A must be >= 0");
  HydroState st;
  st.grid = d.f.grid;
  st.A = A;
  st.m = momentum_density(d);
  for (int a = 0; a <= A; ++a) st.s.push_back(generalized_entropy_density(d, a));
  return st;
}

HydroState poisson_map_Jpol(const PhaseField& f, int A) {
  if (A < 0) throw std::invalid_argument("order A must be >= 0");
  const PhaseGrid& g = *f.grid;
  HydroState st;
  st.grid = &g;
  st.A = A;
  const std::size_t nq = g.nq_total(), np = g.np_total();
  for (int c = 0; c < g.n; ++c) st.m.push_back(make_spatial_field(g));
  for (std::size_t qi = 0; qi < nq; ++qi) {
    const double* row = f.v.data() + qi * np;
    for (int c = 0; c < g.n; ++c) {
      double acc = 0.0;
      for (std::size_t pi = 0; pi < np; ++pi) acc += g.pcoord(pi, c) * row[pi];
      st.m[c].v[qi] = acc * g.wp();
    }
  }
  for (int a = 0; a <= A; ++a) {
    SpatialField sa = make_spatial_field(g);
    for (std::size_t qi = 0; qi < nq; ++qi) {
      const double* row = f.v.data() + qi * np;
      double acc = 0.0;
      for (std::size_t pi = 0; pi < np; ++pi) acc += int_pow(row[pi], 1 + a);
      sa.v[qi] = acc * g.wp();
    }
    st.s.push_back(std::move(sa));
  }
  return st;
}

std::pair<std::vector<SpatialField>, SpatialField> kinetic_velocity_temperature(
    const DistributionFunction& d) {
  const PhaseGrid& g = *d.f.grid;
  const std::size_t nq = g.nq_total(), np = g.np_total();
  std::vector<SpatialField> m = momentum_density(d);
  SpatialField rho = generalized_entropy_density(d, 0);
  for (double r : rho.v)
    if (!(r > 0.0))
      throw std::invalid_argument("mass density must be positive everywhere");

  std::vector<SpatialField> u;
  for (int c = 0; c < g.n; ++c) {
    SpatialField uc = make_spatial_field(g);
    for (std::size_t qi = 0; qi < nq; ++qi) uc.v[qi] = m[c].v[qi] / rho.v[qi];
    u.push_back(std::move(uc));
  }

  // theta = (int |p|^2 f - rho |u|^2) / (n rho); this is the centered second
  // moment evaluated with the same quadrature as the raw moments.
  SpatialField theta = make_spatial_field(g);
  for (std::size_t qi = 0; qi < nq; ++qi) {
    const double* row = d.f.v.data() + qi * np;
    double p2 = 0.0;
    for (std::size_t pi = 0; pi < np; ++pi) {
      double sq = 0.0;
      for (int c = 0; c < g.n; ++c) {
        const double pc = g.pcoord(pi, c);
        sq += pc * pc;
      }
      p2 += sq * row[pi];
    }
    p2 *= g.wp();
    double usq = 0.0;
    for (int c = 0; c < g.n; ++c) usq += u[c].v[qi] * u[c].v[qi];
    theta.v[qi] = (p2 - rho.v[qi] * usq) / (g.n * rho.v[qi]);
  }
  return {std::move(u), std::move(theta)};
}

HydroState gauge_shift(const HydroState& st, const std::vector<double>& Lambda) {
  const int dim = st.A + 1;
  if (Lambda.size() != static_cast<std::size_t>(dim * dim))
    throw std::invalid_argument("Lambda must be (A+1)x(A+1)");
  for (int b = 0; b < dim; ++b)
    for (int a = 0; a <= b; ++a)
      if (Lambda[static_cast<std::size_t>(b) * dim + a] != 0.0)
        throw std::invalid_argument("Lambda must be strictly upper triangular");
  HydroState out = st;
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < a; ++b) {
      const double lam = Lambda[static_cast<std::size_t>(b) * dim + a];
      if (lam == 0.0) continue;
      for (std::size_t qi = 0; qi < st.s[a].v.size(); ++qi)
        out.s[a].v[qi] += st.s[b].v[qi] * lam;
    }
  }
  return out;
}

std::vector<double> inverse_gauge(const std::vector<double>& Lambda, int A) {
  const int dim = A + 1;
  if (Lambda.size() != static_cast<std::size_t>(dim * dim))
    throw std::invalid_argument("Lambda must be (A+1)x(A+1)");
  // (I + Lambda)^-1 = sum_k (-Lambda)^k, Lambda nilpotent.
  std::vector<double> inv(Lambda.size(), 0.0);
  std::vector<double> term(Lambda.size(), 0.0);
  for (int i = 0; i < dim; ++i) term[static_cast<std::size_t>(i) * dim + i] = 1.0;
  std::vector<double> acc = term;  // identity
  for (int k = 1; k < dim; ++k) {
    std::vector<double> next(Lambda.size(), 0.0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        double s = 0.0;
        for (int l = 0; l < dim; ++l)
          s += term[static_cast<std::size_t>(i) * dim + l] *
               (-Lambda[static_cast<std::size_t>(l) * dim + j]);
        next[static_cast<std::size_t>(i) * dim + j] = s;
      }
    term = next;
    for (std::size_t idx = 0; idx < acc.size(); ++idx) acc[idx] += term[idx];
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      inv[static_cast<std::size_t>(i) * dim + j] =
          acc[static_cast<std::size_t>(i) * dim + j] - (i == j ? 1.0 : 0.0);
  return inv;
}

DistributionFunction bimodal_counterexample(const PhaseGrid& g, double c,
                                            double width) {
  if (g.n != 1)
    throw std::invalid_argument("bimodal counterexample is a 1-d construction");
  if (c < 1.0) throw std::invalid_argument("bump separation c must be >= 1");
  if (!(width > 0.0) || width > 1.0)
    throw std::invalid_argument("bump width must lie in (0, 1]");
  if (c + width / 2.0 >= g.Pmax)
    throw std::invalid_argument("bumps must fit inside the p domain");
  auto bump = [width](double x) {
    const double t = 2.0 * x / width;
    if (std::abs(t) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - t * t));
  };
  PhaseField f = make_phase_field(g);
  const std::size_t nq = g.nq_total(), np = g.np_total();
  for (std::size_t pi = 0; pi < np; ++pi) {
    const double p = g.pcoord(pi, 0);
    const double val = 0.5 * (bump(p - c) + bump(p + c));
    for (std::size_t qi = 0; qi < nq; ++qi) f.v[qi * np + pi] = val;
  }
  return make_distribution(std::move(f));
}

}  // namespace kinred
