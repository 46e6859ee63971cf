#pragma once

// Finite-volume meshes and the graph CP-GNet runs on: one node per cell, two
// directed edges per interior face, one typed ghost edge per constrained
// boundary face.

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cpnets/layers.hpp"
#include "cpnets/tensor.hpp"

namespace cpnets {

using Vec2 = std::array<double, 2>;

struct FvCell {
  Vec2 x{};
  double volume = 0.0;
};

struct FvFace {
  std::size_t c0 = 0;
  long c1 = -1;  // -1 on boundary faces
  double area = 0.0;
  Vec2 center{};
  Vec2 normal{};  // unit, pointing out of c0
  Vec2 shift{};   // added to c1's center to get its image across a periodic seam
  std::string type;  // boundary type name; empty for interior faces

  bool boundary() const { return c1 < 0; }
};

struct FvMesh {
  std::vector<FvCell> cells;
  std::vector<FvFace> faces;

  void validate() const;
  /// Boundary type names in first-appearance order.
  std::vector<std::string> boundary_types() const;
  std::size_t count_faces(const std::string& type) const;
};

/// Periodic or walled Cartesian mesh with row-major cells (i along x). Walled
/// meshes tag their sides "left", "right", "bottom", "top".
FvMesh make_cartesian_mesh(std::size_t nx, std::size_t ny, double dx, double dy, bool periodic);

struct ChannelMeshSpec {
  // Column widths and row heights; dyadic defaults keep coordinate arithmetic exact.
  std::vector<double> widths;
  std::vector<double> heights;
  // Cells whose centers fall inside [x0,x1]x[y0,y1] are removed to form an obstacle.
  Vec2 obstacle_lo{0.75, 0.375};
  Vec2 obstacle_hi{1.0, 0.625};
  bool obstacle = true;

  static ChannelMeshSpec defaults();
};

/// Graded channel on [0,2]x[0,1] with faces typed inlet (x=0), outlet (x=2),
/// symmetry (top and bottom) and wall (obstacle).
FvMesh make_channel_mesh(const ChannelMeshSpec& spec = ChannelMeshSpec::defaults());

/// Relabels cells so old cell i becomes perm[i]; faces keep their order.
FvMesh permute_cells(const FvMesh& mesh, const std::vector<std::size_t>& perm);
FvMesh translate_mesh(const FvMesh& mesh, Vec2 offset);

struct FvGraph {
  std::size_t n_nodes = 0;
  // Interior directed edge k carries a message from src[k] into dst[k].
  std::vector<std::size_t> dst;
  std::vector<std::size_t> src;
  std::vector<Vec2> edge_vec;       // (x_dst - x_src) / |x_dst - x_src|
  std::vector<double> edge_weight;  // A / volume(dst)
  std::vector<std::string> boundary_types;  // registry of constrained types
  std::vector<std::size_t> ghost_node;
  std::vector<std::size_t> ghost_type;  // index into boundary_types
  std::vector<std::size_t> ghost_face;
  std::vector<Vec2> ghost_vec;
  std::vector<double> ghost_weight;
  std::vector<std::size_t> known_nodes;  // sorted, unique

  std::size_t n_edges() const { return dst.size(); }
  std::size_t n_ghosts() const { return ghost_node.size(); }
  MpTopology topology() const;
  Tensor edge_features() const;   // [n_edges x 2]
  Tensor ghost_features() const;  // [n_ghosts x 2]
  bool is_known(std::size_t node) const;
};

struct GhostOptions {
  bool unit_norm = true;
  bool flux_weight = true;  // w = A/volume when true, 1 otherwise
};

FvGraph build_graph(const FvMesh& mesh);
void add_ghost_edges(FvGraph& graph, const FvMesh& mesh, const std::vector<std::string>& types,
                     const GhostOptions& opts = {});
void mark_known_value_nodes(FvGraph& graph, const FvMesh& mesh, const std::vector<std::string>& types);

struct ScalingSpec {
  std::vector<std::string> channels;
  std::vector<double> scale;  // C_c per channel
  double c_delta = 0.01;

  void validate() const;
  std::size_t index(const std::string& channel) const;
};

/// q [n x channels] / C_c.
Tensor normalize(const Tensor& q, const ScalingSpec& spec);
Tensor denormalize(const Tensor& qn, const ScalingSpec& spec);
/// dq / (C_c C_delta) and its inverse.
Tensor normalize_increment(const Tensor& dq, const ScalingSpec& spec);
Tensor denormalize_increment(const Tensor& dqn, const ScalingSpec& spec);
/// Looks channels up by name so callers can pass fields in any order.
Tensor normalize_named(const Tensor& q, const std::vector<std::string>& channels, const ScalingSpec& spec);

void write_mesh(const std::filesystem::path& path, const FvMesh& mesh);
FvMesh read_mesh(const std::filesystem::path& path);
void write_graph_csv(const std::filesystem::path& path, const FvGraph& graph);

}  // namespace cpnets
