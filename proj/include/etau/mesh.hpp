#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <vector>

#include "etau/geometry.hpp"

namespace etau {

/// Triangulated rows x cols parameter grid. Vertex (i, j) is stored at i * cols + j;
/// with periodic columns, column cols-1 connects back to column 0.
struct SurfaceMesh {
    Model model = Model::HalfSpace;
    int rows = 0;
    int cols = 0;
    bool periodic_cols = false;
    std::vector<AmbientPoint> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<FrameComponents> normals;
    std::vector<double> nu;

    const AmbientPoint& at(int i, int j) const { return vertices[static_cast<std::size_t>(i) * cols + j]; }
};

using GridVertexFn = std::function<AmbientPoint(int i, int j)>;

/// Builds the vertex grid and triangles, then fills normals and nu.
SurfaceMesh make_grid_mesh(Model m, int rows, int cols, bool periodic_cols, const GridVertexFn& vertex,
                           const SpaceParams& sp);

/// Unit normal from grid tangents: N = G^{-1} n / sqrt(n^T G^{-1} n), n = T_i x T_j.
void compute_normals(SurfaceMesh& mesh, const SpaceParams& sp);

/// Metric length of the straight coordinate segment between two vertices.
double edge_length(const SurfaceMesh& mesh, int v0, int v1, const SpaceParams& sp);

void write_obj(std::ostream& os, const SurfaceMesh& mesh);
void write_nu_csv(std::ostream& os, const SurfaceMesh& mesh);

}  // namespace etau
