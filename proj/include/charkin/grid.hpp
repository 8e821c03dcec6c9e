#pragma once

#include <memory>

#include "charkin/common.hpp"

namespace charkin {

/// Operator-ordering tag carried by every characteristic-function field.
enum class Ordering : uint8_t {
  kNormal = 0,
  kSymmetric = 1,
  kAntinormal = 2,
  kClassical = 3,
  kWigner = 4,  // dump tag for (x,p)-side fields
};

bool is_quantum(Ordering o);
const char* ordering_name(Ordering o);
Ordering ordering_from_name(const std::string& name);

struct GridSpec {
  uint32_t dims = 1;
  std::vector<uint32_t> points;         // G[i], even, per dimension
  std::vector<double> extent_lambda;    // L_λ[i]
  std::vector<double> extent_mu;        // L_μ[i]
  double hbar = 1.0;
  double omega = 1.0;
};

/// Uniform grid over (λ, μ) ∈ ℝ^{2N} and its Fourier-dual (x, p) grid.
///
/// Axis order of fields is row-major (λ_1 … λ_N, μ_1 … μ_N), each axis of
/// length G[i]. Nodes are λ_k = −L_λ + k·Δλ (the origin is node k = G/2),
/// and the dual grid satisfies Δx·Δλ = 2π/G per axis.
class PhaseGrid {
 public:
  static std::shared_ptr<const PhaseGrid> create(const GridSpec& spec);

  uint32_t dims() const { return spec_.dims; }
  uint32_t points(uint32_t dim) const { return spec_.points[dim]; }
  double hbar() const { return spec_.hbar; }
  double omega() const { return spec_.omega; }
  const GridSpec& spec() const { return spec_; }

  std::size_t axis_count() const { return 2 * spec_.dims; }  // λ axes then μ axes
  std::size_t axis_size(std::size_t axis) const { return spec_.points[axis % spec_.dims]; }
  std::size_t size() const { return size_; }  // ∏ G[i]²

  double delta_lambda(uint32_t dim) const { return dl_[dim]; }
  double delta_mu(uint32_t dim) const { return dm_[dim]; }
  double delta_x(uint32_t dim) const { return dx_[dim]; }
  double delta_p(uint32_t dim) const { return dp_[dim]; }

  double lambda_at(uint32_t dim, std::size_t k) const { return -spec_.extent_lambda[dim] + dl_[dim] * k; }
  double mu_at(uint32_t dim, std::size_t k) const { return -spec_.extent_mu[dim] + dm_[dim] * k; }
  double x_at(uint32_t dim, std::size_t k) const { return dx_[dim] * (static_cast<double>(k) - spec_.points[dim] / 2); }
  double p_at(uint32_t dim, std::size_t k) const { return dp_[dim] * (static_cast<double>(k) - spec_.points[dim] / 2); }

  /// Volume elements.
  double cell_lambda_mu() const { return cell_lm_; }
  double cell_x_p() const { return cell_xp_; }

  /// Decompose flat index into per-axis indices (λ axes first).
  void unflatten(std::size_t flat, std::size_t* axis_idx) const;
  std::size_t flatten(const std::size_t* axis_idx) const;
  std::size_t origin_index() const { return origin_; }

  /// Node coordinates: λ[dims], μ[dims] for flat index.
  void node(std::size_t flat, double* lam, double* mu) const;
  /// Dual node coordinates x[dims], p[dims].
  void node_xp(std::size_t flat, double* x, double* p) const;

  /// ξ_i = √(ħ/2ω)(λ_i − iωμ_i) at a node; returns Σ|ξ_i|².
  double xi(std::size_t flat, cplx* xi_out) const;
  double xi_norm2(std::size_t flat) const;
  /// Largest Σ|ξ_i|² over the whole grid (attained at the corner).
  double max_xi_norm2() const;

  /// Index of the periodically point-reflected node (k ↦ (G−k) mod G per axis).
  std::size_t reflected_index(std::size_t flat) const;

  bool same_layout(const PhaseGrid& o) const;

 private:
  explicit PhaseGrid(const GridSpec& spec);

  GridSpec spec_;
  std::vector<double> dl_, dm_, dx_, dp_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 0;
  std::size_t origin_ = 0;
  double cell_lm_ = 1.0, cell_xp_ = 1.0;
};

using GridPtr = std::shared_ptr<const PhaseGrid>;

/// Complex samples of a characteristic function on a PhaseGrid.
struct CharField {
  GridPtr grid;
  std::vector<cplx> data;  // row-major over (λ axes, μ axes)
  Ordering ordering = Ordering::kSymmetric;
  bool truncation_warning = false;  // set when sampled outside the oracle validity radius

  CharField() = default;
  CharField(GridPtr g, Ordering o) : grid(std::move(g)), data(grid->size()), ordering(o) {}

  cplx& at(std::size_t i) { return data[i]; }
  const cplx& at(std::size_t i) const { return data[i]; }
  cplx origin_value() const { return data[grid->origin_index()]; }

  void require_finite() const;
};

GridSpec make_grid_spec_1d(uint32_t g, double extent, double hbar, double omega);

// ---------------------------------------------------------------------------
// Fourier transforms between the (λ,μ) grid and its (x,p) dual.
//
// Convention: F(x,p) = (2π)^{-2N} Σ C(λ,μ) e^{−i(λ·x+μ·p)} Δλ…Δμ…, so a
// field with C(0,0)=1 maps to unit total mass Σ F Δx…Δp… = C(0,0) exactly.
// fourier_from_phase is the exact discrete inverse.
// ---------------------------------------------------------------------------

std::vector<cplx> fourier_to_phase(const PhaseGrid& grid, const std::vector<cplx>& data);
std::vector<cplx> fourier_from_phase(const PhaseGrid& grid, const std::vector<cplx>& data);

/// Spectral mixed derivative ∂^{orders[axis]} applied over the (λ,μ) axes.
/// Odd-order axes have their Nyquist mode zeroed.
std::vector<cplx> spectral_derivative(const PhaseGrid& grid, const std::vector<cplx>& data,
                                      const std::vector<int>& orders);

/// Same, acting on an (x,p)-side field (identical dual pairing, axis i of the
/// x side is dual to λ axis i etc., so the wavenumbers are the λ/μ nodes).
std::vector<cplx> spectral_derivative_xp(const PhaseGrid& grid, const std::vector<cplx>& data,
                                         const std::vector<int>& orders);

}  // namespace charkin
