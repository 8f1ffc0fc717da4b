#include "kinred/grid.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>

#include "kinred/spectral.hpp"

namespace kinred {

namespace warnings {
std::atomic<long>& boundary_decay() {
  static std::atomic<long> c{0};
  return c;
}
std::atomic<long>& log_underflow() {
  static std::atomic<long> c{0};
  return c;
}
std::atomic<long>& vanishing_reference() {
  static std::atomic<long> c{0};
  return c;
}
std::atomic<long>& anisotropy() {
  static std::atomic<long> c{0};
  return c;
}
void reset_all() {
  boundary_decay() = 0;
  log_underflow() = 0;
  vanishing_reference() = 0;
  anisotropy() = 0;
}
}  // namespace warnings

namespace {

bool power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::size_t PhaseGrid::nq_total() const {
  return ipow(static_cast<std::size_t>(Nq), n);
}
std::size_t PhaseGrid::np_total() const {
  return ipow(static_cast<std::size_t>(Np), n);
}

double PhaseGrid::wq() const { return std::pow(dq, n); }
double PhaseGrid::wp() const { return std::pow(dp, n); }

double PhaseGrid::qcoord(std::size_t qi, int axis) const {
  std::size_t idx = qi;
  for (int a = n - 1; a > axis; --a) idx /= static_cast<std::size_t>(Nq);
  idx %= static_cast<std::size_t>(Nq);
  return static_cast<double>(idx) * dq;
}

double PhaseGrid::pcoord(std::size_t pi, int axis) const {
  std::size_t idx = pi;
  for (int a = n - 1; a > axis; --a) idx /= static_cast<std::size_t>(Np);
  idx %= static_cast<std::size_t>(Np);
  return -Pmax + (static_cast<double>(idx) + 0.5) * dp;
}

PhaseGrid make_phase_grid(int n, double Lq, int Nq, double Pmax, int Np) {
  if (n != 1 && n != 2)
    throw std::invalid_argument("phase grid dimension must be 1 or 2");
  if (Nq < 8 || !power_of_two(Nq))
    throw std::invalid_argument("Nq must be a power of two >= 8");
  if (Np < 8 || !power_of_two(Np))
    throw std::invalid_argument("Np must be a power of two >= 8");
  if (!(Lq > 0.0) || !(Pmax > 0.0))
    throw std::invalid_argument("Lq and Pmax must be positive");
  PhaseGrid g;
  g.n = n;
  g.Lq = Lq;
  g.Nq = Nq;
  g.Pmax = Pmax;
  g.Np = Np;
  g.dq = Lq / Nq;
  g.dp = 2.0 * Pmax / Np;
  return g;
}

PhaseField make_phase_field(const PhaseGrid& g) {
  PhaseField f;
  f.grid = &g;
  f.v.assign(g.size(), 0.0);
  return f;
}

SpatialField make_spatial_field(const PhaseGrid& g, double value) {
  SpatialField f;
  f.grid = &g;
  f.v.assign(g.nq_total(), value);
  return f;
}

SpatialField integrate_p(const PhaseField& f) {
  const PhaseGrid& g = *f.grid;
  SpatialField out = make_spatial_field(g);
  const std::size_t nq = g.nq_total(), np = g.np_total();
  const double wp = g.wp();
  for (std::size_t qi = 0; qi < nq; ++qi) {
    double acc = 0.0;
    const double* row = f.v.data() + qi * np;
    for (std::size_t pi = 0; pi < np; ++pi) acc += row[pi];
    out.v[qi] = acc * wp;
  }
  return out;
}

double integrate_qp(const PhaseField& f) {
  const PhaseGrid& g = *f.grid;
  double acc = 0.0;
  for (double x : f.v) acc += x;
  return acc * g.wq() * g.wp();
}

double integrate_q(const SpatialField& f) {
  double acc = 0.0;
  for (double x : f.v) acc += x;
  return acc * f.grid->wq();
}

namespace {

// Applies a spectral line operation along one axis of a multi-index block.
// For a block of extent N along the axis with the given stride, lines are
// gathered into a contiguous buffer, transformed, and scattered back.
// op(line_spectrum, line_index) acts on the forward DFT of the line and the
// inverse transform is applied afterwards.
template <class Op>
void spectral_lines(double* data, std::size_t total, int N, std::size_t stride,
                    Op&& op) {
  std::vector<std::complex<double>> line(static_cast<std::size_t>(N));
  const std::size_t nlines = total / static_cast<std::size_t>(N);
  // Decompose flat index = outer*stride*N + inner, inner < stride.
  for (std::size_t l = 0; l < nlines; ++l) {
    const std::size_t outer = l / stride;
    const std::size_t inner = l % stride;
    const std::size_t base = outer * stride * static_cast<std::size_t>(N) + inner;
    for (int k = 0; k < N; ++k)
      line[static_cast<std::size_t>(k)] = data[base + static_cast<std::size_t>(k) * stride];
    spectral::fft(line.data(), N, -1);
    op(line.data(), base);
    spectral::fft(line.data(), N, +1);
    for (int k = 0; k < N; ++k)
      data[base + static_cast<std::size_t>(k) * stride] = line[static_cast<std::size_t>(k)].real();
  }
}

// stride of q-axis `axis` in the flattened (q, p) layout
std::size_t q_axis_stride(const PhaseGrid& g, int axis) {
  std::size_t s = g.np_total();
  for (int a = g.n - 1; a > axis; --a) s *= static_cast<std::size_t>(g.Nq);
  return s;
}

std::size_t p_axis_stride(const PhaseGrid& g, int axis) {
  std::size_t s = 1;
  for (int a = g.n - 1; a > axis; --a) s *= static_cast<std::size_t>(g.Np);
  return s;
}

void check_axis(const PhaseGrid& g, int axis) {
  if (axis < 0 || axis >= g.n) throw std::invalid_argument("axis out of range");
}

}  // namespace

double p_boundary_amplitude(const PhaseField& f) {
  const PhaseGrid& g = *f.grid;
  double fmax = 0.0;
  for (double x : f.v) fmax = std::max(fmax, std::abs(x));
  if (fmax == 0.0) return 0.0;
  const std::size_t np = g.np_total();
  double bmax = 0.0;
  for (std::size_t qi = 0; qi < g.nq_total(); ++qi) {
    const double* row = f.v.data() + qi * np;
    for (int axis = 0; axis < g.n; ++axis) {
      const std::size_t stride = p_axis_stride(g, axis);
      for (std::size_t pi = 0; pi < np; ++pi) {
        const std::size_t idx = (pi / stride) % static_cast<std::size_t>(g.Np);
        if (idx == 0 || idx == static_cast<std::size_t>(g.Np - 1))
          bmax = std::max(bmax, std::abs(row[pi]));
      }
    }
  }
  return bmax / fmax;
}

PhaseField ddq(const PhaseField& f, int axis) {
  const PhaseGrid& g = *f.grid;
  check_axis(g, axis);
  PhaseField out = f;
  const std::size_t stride = q_axis_stride(g, axis);
  spectral_lines(out.v.data(), g.size(), g.Nq, stride,
                 [&](std::complex<double>* hat, std::size_t) {
                   for (int k = 0; k < g.Nq; ++k) {
                     const double kk = spectral::wavenumber(k, g.Nq, g.Lq);
                     hat[k] *= std::complex<double>(0.0, kk);
                   }
                 });
  return out;
}

SpatialField ddq(const SpatialField& f, int axis) {
  const PhaseGrid& g = *f.grid;
  check_axis(g, axis);
  SpatialField out = f;
  std::size_t stride = 1;
  for (int a = g.n - 1; a > axis; --a) stride *= static_cast<std::size_t>(g.Nq);
  spectral_lines(out.v.data(), g.nq_total(), g.Nq, stride,
                 [&](std::complex<double>* hat, std::size_t) {
                   for (int k = 0; k < g.Nq; ++k) {
                     const double kk = spectral::wavenumber(k, g.Nq, g.Lq);
                     hat[k] *= std::complex<double>(0.0, kk);
                   }
                 });
  return out;
}

PhaseField ddp(const PhaseField& f, int axis) {
  const PhaseGrid& g = *f.grid;
  check_axis(g, axis);
  if (p_boundary_amplitude(f) > 1e-10) warnings::boundary_decay()++;
  PhaseField out = f;
  const std::size_t np = g.np_total();
  const std::size_t stride = p_axis_stride(g, axis);
  const double period = 2.0 * g.Pmax;
  // p lines live inside each q block
  for (std::size_t qi = 0; qi < g.nq_total(); ++qi) {
    spectral_lines(out.v.data() + qi * np, np, g.Np, stride,
                   [&](std::complex<double>* hat, std::size_t) {
                     for (int k = 0; k < g.Np; ++k) {
                       const double kk = spectral::wavenumber(k, g.Np, period);
                       hat[k] *= std::complex<double>(0.0, kk);
                     }
                   });
  }
  return out;
}

PhaseField shift_q(const PhaseField& f, int axis,
                   const std::vector<double>& shift_per_pnode) {
  const PhaseGrid& g = *f.grid;
  check_axis(g, axis);
  if (shift_per_pnode.size() != g.np_total())
    throw std::invalid_argument("shift_q: one shift per p node required");
  PhaseField out = f;
  const std::size_t stride = q_axis_stride(g, axis);
  const std::size_t np = g.np_total();
  spectral_lines(out.v.data(), g.size(), g.Nq, stride,
                 [&](std::complex<double>* hat, std::size_t base) {
                   const double s = shift_per_pnode[base % np];
                   for (int k = 0; k < g.Nq; ++k) {
                     const double kk = spectral::wavenumber(k, g.Nq, g.Lq);
                     hat[k] *= std::exp(std::complex<double>(0.0, -kk * s));
                   }
                 });
  return out;
}

PhaseField shift_p(const PhaseField& f, int axis,
                   const std::vector<double>& shift_per_qnode) {
  const PhaseGrid& g = *f.grid;
  check_axis(g, axis);
  if (shift_per_qnode.size() != g.nq_total())
    throw std::invalid_argument("shift_p: one shift per q node required");
  PhaseField out = f;
  const std::size_t np = g.np_total();
  const std::size_t stride = p_axis_stride(g, axis);
  const double period = 2.0 * g.Pmax;
  for (std::size_t qi = 0; qi < g.nq_total(); ++qi) {
    const double s = shift_per_qnode[qi];
    spectral_lines(out.v.data() + qi * np, np, g.Np, stride,
                   [&](std::complex<double>* hat, std::size_t) {
                     for (int k = 0; k < g.Np; ++k) {
                       const double kk = spectral::wavenumber(k, g.Np, period);
                       hat[k] *= std::exp(std::complex<double>(0.0, -kk * s));
                     }
                   });
  }
  return out;
}

}  // namespace kinred
