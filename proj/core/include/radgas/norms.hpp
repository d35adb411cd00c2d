#pragma once

#include "radgas/field.hpp"

namespace radgas {

/// Compensated (Kahan) sum; norm reductions are deterministic and accurate.
double stable_sum(const std::vector<double>& terms);

double l1_norm(const Field& u);
double l2_norm(const Field& u);
double linf_norm(const Field& u);

/// Weighted L^1 norm  int (1+|x|)^gamma |u| dx  with |x| measured from the
/// box center.
double weighted_l1_norm(const Field& u, double gamma);

/// Parseval route: ||u||_L2 from the spectrum, dx^n/N^n sum |u_hat|^2.
double l2_norm(const SpectralField& U);

/// L2 norm of the totality of k-th order derivatives,
/// ( sum_{|a|=k, ordered} ||d^a u||^2 )^{1/2} = || |xi|^k u_hat ||_L2.
double derivative_seminorm(const SpectralField& U, int k);
double derivative_seminorm(const Field& u, int k);

/// H^s norm: ( sum_{k<=s} ||d^k u||_L2^2 )^{1/2}, computed spectrally.
double sobolev_norm(const SpectralField& U, int s);
double sobolev_norm(const Field& u, int s);

/// Norms of q = -(1-Delta)^{-1} grad u computed directly from u's spectrum:
/// |q_hat|^2 summed over components is |xi|^2/(1+|xi|^2)^2 |u_hat|^2.
double q_derivative_seminorm(const SpectralField& U, int k);
double q_sobolev_norm(const SpectralField& U, int s);

double linf_norm(const VectorField& v);
double sobolev_norm(const VectorField& v, int s);

}  // namespace radgas
