#pragma once

#include "radgas/field.hpp"

namespace radgas {

/// Number of threads used by FFT plans and elementwise kernels.
/// Defaults to 1; the RADGAS_THREADS environment variable overrides it once
/// at first use.  Calling set_threads before any transform pins it explicitly.
int fft_threads();
void set_fft_threads(int n);

/// Discrete analogue of the Fourier transform int e^{-i x.xi} f dx.
/// Forward carries no prefactor: a constant field c maps to coeffs[0] = c*N^n.
SpectralField forward_transform(const Field& f);

/// Inverse DFT with the 1/N^n prefactor.  Requires Hermitian-symmetric
/// coefficients: an imaginary residue above 1e-10 of the field magnitude
/// raises SymmetryError, anything below is truncated.
Field inverse_transform(const SpectralField& F);

/// Unchecked complex-to-complex inverse (1/N^n prefactor), internal building
/// block for operations that establish realness by construction.
void inverse_transform_raw(const SpectralField& F, std::vector<std::complex<double>>& out);

}  // namespace radgas
