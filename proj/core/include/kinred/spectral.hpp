#pragma once

#include <complex>

namespace kinred::spectral {

// In-place complex DFT of power-of-two length. sign = -1 is the forward
// transform, sign = +1 the inverse; the inverse is normalized by 1/n.
// Thread-safe: plans are cached per length behind a mutex, execution is
// concurrent.
void fft(std::complex<double>* data, int n, int sign);

// Fourier wavenumber for mode index k on a periodic interval of length L.
// Indices above n/2 map to negative frequencies; the Nyquist mode (k = n/2)
// is reported as 0 so that spectral derivatives of real fields stay real.
double wavenumber(int k, int n, double length);

}  // namespace kinred::spectral
