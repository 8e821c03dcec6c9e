#include "charkin/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace charkin {

bool is_quantum(Ordering o) {
  return o == Ordering::kNormal || o == Ordering::kSymmetric || o == Ordering::kAntinormal;
}

const char* ordering_name(Ordering o) {
  switch (o) {
    case Ordering::kNormal: return "normal";
    case Ordering::kSymmetric: return "symmetric";
    case Ordering::kAntinormal: return "antinormal";
    case Ordering::kClassical: return "classical";
    case Ordering::kWigner: return "wigner";
  }
  return "?";
}

Ordering ordering_from_name(const std::string& name) {
  if (name == "normal") return Ordering::kNormal;
  if (name == "symmetric") return Ordering::kSymmetric;
  if (name == "antinormal") return Ordering::kAntinormal;
  if (name == "classical") return Ordering::kClassical;
  if (name == "wigner") return Ordering::kWigner;
  throw ConfigError("unknown ordering: " + name);
}

PhaseGrid::PhaseGrid(const GridSpec& spec) : spec_(spec) {
  uint32_t n = spec_.dims;
  if (n < 1 || n > 2) throw ConfigError("grid dims must be 1 or 2");
  if (spec_.points.size() != n || spec_.extent_lambda.size() != n || spec_.extent_mu.size() != n)
    throw ConfigError("grid parameter arrays must have one entry per dimension");
  if (!(spec_.hbar > 0.0)) throw ConfigError("hbar must be positive");
  if (!(spec_.omega > 0.0)) throw ConfigError("omega must be positive");
  for (uint32_t d = 0; d < n; ++d) {
    if (spec_.points[d] == 0) throw ConfigError("grid size must be positive");
    if (spec_.points[d] % 2 != 0) throw ConfigError("odd grid size: G must be even");
    if (!(spec_.extent_lambda[d] > 0.0) || !(spec_.extent_mu[d] > 0.0))
      throw ConfigError("grid extents must be positive");
  }

  dl_.resize(n);
  dm_.resize(n);
  dx_.resize(n);
  dp_.resize(n);
  for (uint32_t d = 0; d < n; ++d) {
    double g = spec_.points[d];
    dl_[d] = 2.0 * spec_.extent_lambda[d] / g;
    dm_[d] = 2.0 * spec_.extent_mu[d] / g;
    dx_[d] = 2.0 * kPi / (g * dl_[d]);
    dp_[d] = 2.0 * kPi / (g * dm_[d]);
  }

  std::size_t na = axis_count();
  stride_.resize(na);
  size_ = 1;
  for (std::size_t a = na; a-- > 0;) {
    stride_[a] = size_;
    size_ *= axis_size(a);
  }

  std::size_t origin = 0;
  for (std::size_t a = 0; a < na; ++a) origin += (axis_size(a) / 2) * stride_[a];
  origin_ = origin;

  cell_lm_ = 1.0;
  cell_xp_ = 1.0;
  for (uint32_t d = 0; d < n; ++d) {
    cell_lm_ *= dl_[d] * dm_[d];
    cell_xp_ *= dx_[d] * dp_[d];
  }
}

std::shared_ptr<const PhaseGrid> PhaseGrid::create(const GridSpec& spec) {
  return std::shared_ptr<const PhaseGrid>(new PhaseGrid(spec));
}

void PhaseGrid::unflatten(std::size_t flat, std::size_t* axis_idx) const {
  for (std::size_t a = 0; a < axis_count(); ++a) {
    axis_idx[a] = flat / stride_[a];
    flat %= stride_[a];
  }
}

std::size_t PhaseGrid::flatten(const std::size_t* axis_idx) const {
  std::size_t f = 0;
  for (std::size_t a = 0; a < axis_count(); ++a) f += axis_idx[a] * stride_[a];
  return f;
}

void PhaseGrid::node(std::size_t flat, double* lam, double* mu) const {
  std::size_t idx[4];
  unflatten(flat, idx);
  for (uint32_t d = 0; d < dims(); ++d) {
    lam[d] = lambda_at(d, idx[d]);
    mu[d] = mu_at(d, idx[dims() + d]);
  }
}

void PhaseGrid::node_xp(std::size_t flat, double* x, double* p) const {
  std::size_t idx[4];
  unflatten(flat, idx);
  for (uint32_t d = 0; d < dims(); ++d) {
    x[d] = x_at(d, idx[d]);
    p[d] = p_at(d, idx[dims() + d]);
  }
}

double PhaseGrid::xi(std::size_t flat, cplx* xi_out) const {
  double lam[2], mu[2];
  node(flat, lam, mu);
  double s = std::sqrt(hbar() / (2.0 * omega()));
  double n2 = 0.0;
  for (uint32_t d = 0; d < dims(); ++d) {
    cplx z = s * cplx(lam[d], -omega() * mu[d]);
    if (xi_out) xi_out[d] = z;
    n2 += std::norm(z);
  }
  return n2;
}

double PhaseGrid::xi_norm2(std::size_t flat) const { return xi(flat, nullptr); }

double PhaseGrid::max_xi_norm2() const {
  double n2 = 0.0;
  for (uint32_t d = 0; d < dims(); ++d) {
    double l = spec_.extent_lambda[d];
    double m = spec_.extent_mu[d];
    n2 += (hbar() / (2.0 * omega())) * (l * l + omega() * omega() * m * m);
  }
  return n2;
}

std::size_t PhaseGrid::reflected_index(std::size_t flat) const {
  std::size_t idx[4];
  unflatten(flat, idx);
  std::size_t out = 0;
  for (std::size_t a = 0; a < axis_count(); ++a) {
    std::size_t g = axis_size(a);
    out += ((g - idx[a]) % g) * stride_[a];
  }
  return out;
}

bool PhaseGrid::same_layout(const PhaseGrid& o) const {
  return spec_.dims == o.spec_.dims && spec_.points == o.spec_.points &&
         spec_.extent_lambda == o.spec_.extent_lambda && spec_.extent_mu == o.spec_.extent_mu &&
         spec_.hbar == o.spec_.hbar && spec_.omega == o.spec_.omega;
}

void CharField::require_finite() const {
  for (const cplx& z : data)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw NumericError("field contains a non-finite sample");
}

GridSpec make_grid_spec_1d(uint32_t g, double extent, double hbar, double omega) {
  GridSpec s;
  s.dims = 1;
  s.points = {g};
  s.extent_lambda = {extent};
  s.extent_mu = {extent};
  s.hbar = hbar;
  s.omega = omega;
  return s;
}

// ---------------------------------------------------------------------------
// FFT machinery. Plans are cached per (shape, direction) and executed on
// caller buffers (FFTW_UNALIGNED keeps new-array execution valid).
// ---------------------------------------------------------------------------

namespace {

std::mutex g_fftw_mutex;

fftw_plan get_plan(const std::vector<int>& dims, int sign) {
  static std::map<std::pair<std::vector<int>, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(g_fftw_mutex);
  auto key = std::make_pair(dims, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::size_t n = 1;
  for (int d : dims) n *= d;
  std::vector<cplx> buf(n);
  fftw_plan p = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(),
                              reinterpret_cast<fftw_complex*>(buf.data()),
                              reinterpret_cast<fftw_complex*>(buf.data()), sign,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.emplace(key, p);
  return p;
}

std::vector<int> fft_dims(const PhaseGrid& grid) {
  std::vector<int> dims(grid.axis_count());
  for (std::size_t a = 0; a < dims.size(); ++a) dims[a] = static_cast<int>(grid.axis_size(a));
  return dims;
}

void run_fft(const PhaseGrid& grid, std::vector<cplx>& inout, int sign) {
  fftw_plan p = get_plan(fft_dims(grid), sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(inout.data()),
                   reinterpret_cast<fftw_complex*>(inout.data()));
}

/// Multiplies element i by (−1)^{Σ_a k_a(i)} (the centered-grid twiddle).
void apply_parity(const PhaseGrid& grid, std::vector<cplx>& v) {
  std::size_t idx[4];
  for (std::size_t i = 0; i < v.size(); ++i) {
    grid.unflatten(i, idx);
    std::size_t s = 0;
    for (std::size_t a = 0; a < grid.axis_count(); ++a) s += idx[a];
    if (s & 1) v[i] = -v[i];
  }
}

double center_phase_sign(const PhaseGrid& grid) {
  // Π_axes e^{∓iπ G_a/2} is real for even G: (−1)^{Σ G_a/2}.
  std::size_t s = 0;
  for (std::size_t a = 0; a < grid.axis_count(); ++a) s += grid.axis_size(a) / 2;
  return (s & 1) ? -1.0 : 1.0;
}

}  // namespace

std::vector<cplx> fourier_to_phase(const PhaseGrid& grid, const std::vector<cplx>& data) {
  if (data.size() != grid.size()) throw ConfigError("field size does not match grid");
  std::vector<cplx> out = data;
  apply_parity(grid, out);
  run_fft(grid, out, FFTW_FORWARD);
  apply_parity(grid, out);
  double scale = center_phase_sign(grid) * grid.cell_lambda_mu();
  for (uint32_t d = 0; d < grid.dims(); ++d) scale /= (2.0 * kPi) * (2.0 * kPi);
  for (cplx& z : out) z *= scale;
  return out;
}

std::vector<cplx> fourier_from_phase(const PhaseGrid& grid, const std::vector<cplx>& data) {
  if (data.size() != grid.size()) throw ConfigError("field size does not match grid");
  std::vector<cplx> out = data;
  apply_parity(grid, out);
  run_fft(grid, out, FFTW_BACKWARD);
  apply_parity(grid, out);
  double scale = center_phase_sign(grid) * grid.cell_x_p();
  for (cplx& z : out) z *= scale;
  return out;
}

namespace {

std::vector<cplx> spectral_derivative_impl(const PhaseGrid& grid, const std::vector<cplx>& data,
                                           const std::vector<int>& orders, bool xp_side) {
  if (data.size() != grid.size()) throw ConfigError("field size does not match grid");
  if (orders.size() != grid.axis_count()) throw ConfigError("one derivative order per axis required");
  std::vector<cplx> out = data;
  run_fft(grid, out, FFTW_FORWARD);

  // Per-axis wavenumber tables (fftfreq layout), Nyquist zeroed for odd orders.
  std::vector<std::vector<cplx>> fac(grid.axis_count());
  for (std::size_t a = 0; a < grid.axis_count(); ++a) {
    std::size_t g = grid.axis_size(a);
    uint32_t d = static_cast<uint32_t>(a % grid.dims());
    double delta;
    if (xp_side)
      delta = (a < grid.dims()) ? grid.delta_x(d) : grid.delta_p(d);
    else
      delta = (a < grid.dims()) ? grid.delta_lambda(d) : grid.delta_mu(d);
    fac[a].resize(g, cplx(1.0, 0.0));
    if (orders[a] == 0) continue;
    for (std::size_t m = 0; m < g; ++m) {
      double mm = (m < g / 2) ? static_cast<double>(m) : static_cast<double>(m) - static_cast<double>(g);
      double kappa = 2.0 * kPi * mm / (static_cast<double>(g) * delta);
      if (m == g / 2 && (orders[a] % 2 != 0)) {
        fac[a][m] = 0.0;
      } else {
        cplx ik(0.0, kappa);
        cplx f = 1.0;
        for (int q = 0; q < orders[a]; ++q) f *= ik;
        fac[a][m] = f;
      }
    }
  }

  std::size_t idx[4];
  double inv_n = 1.0 / static_cast<double>(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    grid.unflatten(i, idx);
    cplx f = inv_n;
    for (std::size_t a = 0; a < grid.axis_count(); ++a)
      if (orders[a] != 0) f *= fac[a][idx[a]];
    out[i] *= f;
  }
  run_fft(grid, out, FFTW_BACKWARD);
  return out;
}

}  // namespace

std::vector<cplx> spectral_derivative(const PhaseGrid& grid, const std::vector<cplx>& data,
                                      const std::vector<int>& orders) {
  return spectral_derivative_impl(grid, data, orders, false);
}

std::vector<cplx> spectral_derivative_xp(const PhaseGrid& grid, const std::vector<cplx>& data,
                                         const std::vector<int>& orders) {
  return spectral_derivative_impl(grid, data, orders, true);
}

}  // namespace charkin
