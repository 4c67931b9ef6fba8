#include "etau/mesh.hpp"

#include <cmath>
#include <ostream>

namespace etau {

namespace {

// Second-order derivative of the vertex coordinates along one grid direction.
Vec3 grid_derivative(const SurfaceMesh& m, int i, int j, bool along_rows) {
    const int n = along_rows ? m.rows : m.cols;
    const int k = along_rows ? i : j;
    const bool periodic = !along_rows && m.periodic_cols;
    const auto get = [&](int kk) {
        if (periodic) kk = ((kk % n) + n) % n;
        return along_rows ? m.at(kk, j).coords() : m.at(i, kk).coords();
    };
    if (periodic || (k > 0 && k + 1 < n)) return 0.5 * (get(k + 1) - get(k - 1));
    if (k == 0) return -1.5 * get(0) + 2.0 * get(1) - 0.5 * get(2);
    return 1.5 * get(k) - 2.0 * get(k - 1) + 0.5 * get(k - 2);
}

}  // namespace

SurfaceMesh make_grid_mesh(Model m, int rows, int cols, bool periodic_cols, const GridVertexFn& vertex,
                           const SpaceParams& sp) {
    if (rows < 3 || cols < 3) throw ParameterError("mesh resolution must be at least 3 x 3");
    SurfaceMesh mesh;
    mesh.model = m;
    mesh.rows = rows;
    mesh.cols = cols;
    mesh.periodic_cols = periodic_cols;
    mesh.vertices.reserve(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            AmbientPoint p = vertex(i, j);
            if (p.model() != m) throw ParameterError("mesh vertex in the wrong model");
            validate(p);
            mesh.vertices.push_back(p);
        }
    const int jmax = periodic_cols ? cols : cols - 1;
    for (int i = 0; i + 1 < rows; ++i)
        for (int j = 0; j < jmax; ++j) {
            const int j1 = (j + 1) % cols;
            const int a = i * cols + j, b = i * cols + j1, c = (i + 1) * cols + j, d = (i + 1) * cols + j1;
            mesh.triangles.push_back({a, b, d});
            mesh.triangles.push_back({a, d, c});
        }
    compute_normals(mesh, sp);
    return mesh;
}

void compute_normals(SurfaceMesh& mesh, const SpaceParams& sp) {
    mesh.normals.assign(mesh.vertices.size(), {});
    mesh.nu.assign(mesh.vertices.size(), 0.0);
    for (int i = 0; i < mesh.rows; ++i)
        for (int j = 0; j < mesh.cols; ++j) {
            const std::size_t k = static_cast<std::size_t>(i) * mesh.cols + j;
            const AmbientPoint& p = mesh.vertices[k];
            const Vec3 n = grid_derivative(mesh, i, j, true).cross(grid_derivative(mesh, i, j, false));
            const Mat3 ginv = metric_at(p, sp).inverse();
            const double q = n.dot(ginv * n);
            if (!(q > 0.0)) continue;
            const Vec3 N = ginv * n / std::sqrt(q);
            mesh.normals[k] = frame_components({p, N.x(), N.y(), N.z()}, sp);
            mesh.nu[k] = n.z() / std::sqrt(q);
        }
}

double edge_length(const SurfaceMesh& mesh, int v0, int v1, const SpaceParams& sp) {
    return segment_length(mesh.vertices.at(v0), mesh.vertices.at(v1), sp, 4);
}

void write_obj(std::ostream& os, const SurfaceMesh& mesh) {
    os.precision(17);
    os << "# model " << to_string(mesh.model) << "\n";
    for (const auto& v : mesh.vertices) os << "v " << v.base.x << ' ' << v.base.y << ' ' << v.t << '\n';
    for (const auto& f : mesh.triangles) os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

void write_nu_csv(std::ostream& os, const SurfaceMesh& mesh) {
    os.precision(17);
    os << "vertex,x,y,t,n1,n2,n3,nu\n";
    for (std::size_t k = 0; k < mesh.vertices.size(); ++k) {
        const auto& v = mesh.vertices[k];
        const auto& n = mesh.normals[k];
        os << k << ',' << v.base.x << ',' << v.base.y << ',' << v.t << ',' << n.a1 << ',' << n.a2 << ',' << n.a3
           << ',' << mesh.nu[k] << '\n';
    }
}

}  // namespace etau
