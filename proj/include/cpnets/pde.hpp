#pragma once

// Reference solvers and data generators. Fields are stored with the channel
// axis last: [nx x c] in 1D, [nx x ny x c] in 2D (x index outermost) and
// [cells x c] on finite-volume meshes.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpnets/fv.hpp"
#include "cpnets/tensor.hpp"

namespace cpnets {

enum class BoundaryKind { periodic, dirichlet, mixed };

struct GridSpec {
  std::size_t dims = 1;
  std::size_t nx = 3;
  std::size_t ny = 1;
  double dx = 1.0;
  double dy = 1.0;
  double dt = 1.0;
  BoundaryKind boundary = BoundaryKind::periodic;
  std::vector<double> boundary_values;

  void validate() const;
};

struct Trajectory {
  GridSpec grid;
  std::vector<std::string> channels;
  std::vector<Tensor> frames;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;
  std::string kind;
  // First step whose state was non-finite or exceeded the divergence bound.
  std::optional<std::size_t> diverged_at;

  std::size_t size() const { return frames.size(); }
  void validate() const;
};

void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj);
Trajectory read_trajectory(const std::filesystem::path& dir);
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);

// --- 1D diffusion ---------------------------------------------------------

struct Diffusion1dSpec {
  double nu = 1.0;
  double dt = 5e-5;
  double dx = 0.01;
  double length = 1.0;
  std::size_t steps = 2000;
  double u_left = 0.0;
  double u_right = 1.0;
  bool allow_unstable = false;

  double courant() const { return nu * dt / (dx * dx); }
  std::size_t points() const;
};

/// Interior increment C(u[i-1] - 2u[i] + u[i+1]); end points get zero.
Tensor diffusion1d_increment(const Tensor& u, double c);
/// Zero interior with the two Dirichlet end values; includes the IC frame.
Trajectory solve_diffusion1d(const Diffusion1dSpec& spec);

// --- 2D advection-diffusion (periodic, first-order upwind) ----------------

struct AdvDiff2dSpec {
  double ax = 1.0;
  double ay = 0.0;
  double nu = 0.0;
  double dx = 0.02;
  double dy = 0.02;
  double dt = 0.001;
  std::size_t nx = 51;
  std::size_t ny = 51;
  std::size_t steps = 2;

  void check_stable() const;
};

Tensor advdiff2d_increment(const Tensor& u, const AdvDiff2dSpec& spec);
Trajectory solve_advdiff2d(const AdvDiff2dSpec& spec, const Tensor& u0);

struct FrameSpec {
  double lo = 0.25;
  double hi = 0.75;
  std::size_t thickness = 3;
  long offset_x = 0;
  long offset_y = 0;
};

/// Indicator of a square ring; shape [nx x ny x 1].
Tensor rect_frame_ic(std::size_t nx, std::size_t ny, const FrameSpec& spec = {});
/// Periodic roll: out(i,j) = in(i - sx, j - sy).
Tensor periodic_shift(const Tensor& field, long sx, long sy);

// --- 2D viscous Burgers (periodic FTCS) -----------------------------------

struct Burgers2dSpec {
  double nu = 0.01;
  double dx = 0.02;
  double dy = 0.02;
  double dt = 0.001;
  std::size_t steps = 1;

  void check_stable(const Tensor& u) const;
};

/// Coefficients of the increment written as four stencil terms.
struct Burgers2dCoefficients {
  Tensor p1;  // -dt/(2dx) u, [nx x ny]
  Tensor p2;  // -dt/(2dy) v, [nx x ny]
  double p3 = 0.0;  // nu dt/dx^2
  double p4 = 0.0;  // nu dt/dy^2
};

Burgers2dCoefficients burgers2d_coefficients(const Tensor& u, const Burgers2dSpec& spec);
Tensor burgers2d_increment(const Tensor& u, const Burgers2dSpec& spec);
/// Throws with the step index if the state turns non-finite.
Trajectory solve_burgers2d(const Burgers2dSpec& spec, const Tensor& u0);
/// u(x,y) = 2g/max|g| + c per component, sampled at (i/nx, j/ny).
Tensor sample_burgers2d_ic(std::uint64_t seed, std::size_t nx, std::size_t ny, int modes = 4);

// --- 1D viscous Burgers and closure data ----------------------------------

enum class EnergyLaw { as_printed, min_variant };
EnergyLaw parse_energy_law(const std::string& s);

struct Burgers1dSpectralSpec {
  double nu = 0.01;
  double length = 6.283185307179586;
  double out_dt = 0.0075;
  std::size_t substeps = 16;
  std::size_t frames = 267;
};

/// u(x,0) = sum_{k=1..8} sqrt(2E(k)) sin(kx + beta_k), [n x 1].
Tensor sample_burgers1d_ic(std::uint64_t seed, std::size_t n = 2048, EnergyLaw law = EnergyLaw::as_printed);
double ic_energy(int k, EnergyLaw law);
/// Fourier-Galerkin with 2/3 dealiasing and RK4; frames include the IC.
Trajectory solve_burgers1d_spectral(const Tensor& u0, const Burgers1dSpectralSpec& spec = {});

Tensor box_filter(const Tensor& u_high, std::size_t n_low);
Trajectory box_filter(const Trajectory& high, std::size_t n_low);

/// Periodic central differences.
Tensor ddx_central(const Tensor& u, double dx);
Tensor d2dx2_central(const Tensor& u, double dx);

/// Residual of the coarse equation u_t + u u_x - nu u_xx for every frame
/// (forward time difference, backward on the last frame).
std::vector<Tensor> coarse_residual(const Trajectory& ubar, double nu);
/// Closure that makes the explicit coarse update reproduce `ubar` exactly.
std::vector<Tensor> closure_truth(const Trajectory& ubar, double nu);

using ClosureFn = std::function<Tensor(const Tensor& u, std::size_t step)>;

struct ClosedRunSpec {
  double nu = 0.01;
  double dt = 0.0075;
  double dx = 6.283185307179586 / 32;
  std::size_t steps = 266;
  double blowup = 10.0;  // |u| beyond this counts as divergence
};

/// Forward Euler on u_t = -u u_x + nu u_xx - C(u). Stops at divergence.
Trajectory solve_closed_burgers1d(const Tensor& u0, const ClosedRunSpec& spec, const ClosureFn& closure);

// --- Unstructured FV advection-diffusion ----------------------------------

struct FvBoundarySpec {
  // Inlet value as a function of time (Dirichlet); outlet is zero-gradient;
  // every other type has zero normal flux and zero-gradient advection.
  std::function<double(double)> inlet = [](double) { return 1.0; };
  std::string inlet_type = "inlet";
  std::string outlet_type = "outlet";
};

struct FvAdvDiffSpec {
  Vec2 a{1.0, 0.0};
  double nu = 0.0;
  double dt = 0.01;
  std::size_t steps = 1;
};

Tensor fv_advdiff_increment(const FvMesh& mesh, const Tensor& q, const FvAdvDiffSpec& spec, const FvBoundarySpec& bc,
                            double t);
/// Max over cells of dt/volume * (inflow + diffusive conductance); must be <= 1.
double fv_stability_number(const FvMesh& mesh, const FvAdvDiffSpec& spec, const FvBoundarySpec& bc = {});
Trajectory solve_fv_advdiff(const FvMesh& mesh, const FvAdvDiffSpec& spec, const FvBoundarySpec& bc, const Tensor& q0);

}  // namespace cpnets
