#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <vector>

namespace kinred {

// Uniform discretization of T^n x R^n phase space, n in {1,2}.
//
// q nodes: q_i = i*dq on [0, Lq) per axis, periodic.
// p nodes: p_j = -Pmax + (j + 1/2)*dp per axis. The midpoint offset keeps the
// node set reflection-symmetric about p = 0 (odd integrands cancel exactly)
// and the periodic identification of +/-Pmax leaves Np nodes of equal weight,
// so the quadrature is the periodic trapezoid rule with total weight 2*Pmax.
//
// All quadrature weights are uniform: wq = dq^n, wp = dp^n per node.
struct PhaseGrid {
  int n = 1;
  double Lq = 2.0 * M_PI;
  int Nq = 64;
  double Pmax = 8.0;
  int Np = 128;
  double dq = 0.0;
  double dp = 0.0;

  std::size_t nq_total() const;
  std::size_t np_total() const;
  std::size_t size() const { return nq_total() * np_total(); }

  double wq() const;
  double wp() const;

  // axis 0 is the slowest-varying index component.
  double qcoord(std::size_t qi, int axis) const;
  double pcoord(std::size_t pi, int axis) const;

  std::size_t index(std::size_t qi, std::size_t pi) const {
    return qi * np_total() + pi;
  }

  bool same_layout(const PhaseGrid& o) const {
    return n == o.n && Nq == o.Nq && Np == o.Np && Lq == o.Lq &&
           Pmax == o.Pmax;
  }
};

// Scalar field on the full phase grid, row-major with q outer and p inner.
struct PhaseField {
  const PhaseGrid* grid = nullptr;
  std::vector<double> v;
};

// Scalar field on the q grid.
struct SpatialField {
  const PhaseGrid* grid = nullptr;
  std::vector<double> v;
};

PhaseGrid make_phase_grid(int n, double Lq, int Nq, double Pmax, int Np);

PhaseField make_phase_field(const PhaseGrid& g);
SpatialField make_spatial_field(const PhaseGrid& g, double value = 0.0);

// Fibre integrals and full quadrature. All are plain weighted sums and are
// linear in the field.
SpatialField integrate_p(const PhaseField& f);
double integrate_qp(const PhaseField& f);
double integrate_q(const SpatialField& f);

// Spectral (discrete Fourier) derivatives. ddq treats the q direction as the
// periodic torus direction. ddp treats [-Pmax, Pmax] as periodic, which is
// valid only for fields decaying below tolerance at the p boundary; a
// boundary-decay warning is counted when |f| at the outermost p layer exceeds
// 1e-10 * max|f|.
PhaseField ddq(const PhaseField& f, int axis = 0);
SpatialField ddq(const SpatialField& f, int axis = 0);
PhaseField ddp(const PhaseField& f, int axis = 0);

// Spectral translations, exact for band-limited fields.
// shift_q: out(q, p) = f(q - s(p) * e_axis, p), s given per p node.
// shift_p: out(q, p) = f(q, p - s(q) * e_axis), s given per q node.
PhaseField shift_q(const PhaseField& f, int axis,
                   const std::vector<double>& shift_per_pnode);
PhaseField shift_p(const PhaseField& f, int axis,
                   const std::vector<double>& shift_per_qnode);

// max |f| over the outermost p layers divided by max |f| overall; 0 for the
// zero field. Values above 1e-10 mean spectral p-operations see wrap-around.
double p_boundary_amplitude(const PhaseField& f);

namespace warnings {
std::atomic<long>& boundary_decay();
std::atomic<long>& log_underflow();
std::atomic<long>& vanishing_reference();
std::atomic<long>& anisotropy();
void reset_all();
}  // namespace warnings

}  // namespace kinred
