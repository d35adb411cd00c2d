#include "radgas/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "radgas/errors.hpp"

namespace radgas {

namespace {

int g_threads = 0;  // 0 = not initialized yet

// Plans are cached per (dim, N, sign).  FFTW_ESTIMATE keeps planning cheap
// and bit-deterministic; FFTW_UNALIGNED lets one plan serve any buffer.
struct PlanKey {
  int dim;
  int n;
  int sign;
  bool operator<(const PlanKey& o) const {
    return std::tie(dim, n, sign) < std::tie(o.dim, o.n, o.sign);
  }
};

std::map<PlanKey, fftw_plan> g_plans;
std::mutex g_mutex;

void init_threads_locked() {
  if (g_threads > 0) return;
  int n = 1;
  if (const char* env = std::getenv("RADGAS_THREADS")) {
    n = std::atoi(env);
    if (n < 1) n = 1;
  }
  if (n > 1) {
    fftw_init_threads();
    fftw_plan_with_nthreads(n);
  }
  g_threads = n;
}

fftw_plan plan_for(const Grid& grid, int sign) {
  std::lock_guard<std::mutex> lock(g_mutex);
  init_threads_locked();
  PlanKey key{grid.dim(), grid.points_per_axis(), sign};
  auto it = g_plans.find(key);
  if (it != g_plans.end()) return it->second;

  std::vector<std::complex<double>> scratch_in(grid.total_points());
  std::vector<std::complex<double>> scratch_out(grid.total_points());
  int dims[3] = {grid.points_per_axis(), grid.points_per_axis(), grid.points_per_axis()};
  fftw_plan p = fftw_plan_dft(
      grid.dim(), dims, reinterpret_cast<fftw_complex*>(scratch_in.data()),
      reinterpret_cast<fftw_complex*>(scratch_out.data()), sign,
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p) throw NumericalError("fftw plan creation failed");
  g_plans.emplace(key, p);
  return p;
}

void execute(const Grid& grid, int sign, const std::complex<double>* in,
             std::complex<double>* out) {
  fftw_plan p = plan_for(grid, sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

}  // namespace

int fft_threads() {
  std::lock_guard<std::mutex> lock(g_mutex);
  init_threads_locked();
  return g_threads;
}

void set_fft_threads(int n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (g_threads > 0) return;  // plans exist, keep the original setting
  if (n < 1) n = 1;
  if (n > 1) {
    fftw_init_threads();
    fftw_plan_with_nthreads(n);
  }
  g_threads = n;
}

SpectralField forward_transform(const Field& f) {
  if (!f.finite()) throw NumericalError("forward_transform: field contains NaN/Inf");
  std::vector<std::complex<double>> in(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) in[i] = f.values[i];
  SpectralField out(f.grid);
  execute(f.grid, FFTW_FORWARD, in.data(), out.coeffs.data());
  return out;
}

void inverse_transform_raw(const SpectralField& F, std::vector<std::complex<double>>& out) {
  out.resize(F.size());
  execute(F.grid, FFTW_BACKWARD, F.coeffs.data(), out.data());
  const double scale = 1.0 / static_cast<double>(F.grid.total_points());
  for (auto& z : out) z *= scale;
}

Field inverse_transform(const SpectralField& F) {
  std::vector<std::complex<double>> buf;
  inverse_transform_raw(F, buf);
  double max_re = 0.0, max_im = 0.0;
  for (const auto& z : buf) {
    max_re = std::max(max_re, std::abs(z.real()));
    max_im = std::max(max_im, std::abs(z.imag()));
  }
  if (max_im > 1e-10 * std::max(max_re, 1e-300))
    throw SymmetryError("inverse_transform: imaginary residue " + std::to_string(max_im) +
                        " exceeds 1e-10 of field magnitude " + std::to_string(max_re) +
                        " (coefficients are not Hermitian-symmetric)");
  Field out(F.grid);
  for (std::size_t i = 0; i < buf.size(); ++i) out.values[i] = buf[i].real();
  return out;
}

}  // namespace radgas
