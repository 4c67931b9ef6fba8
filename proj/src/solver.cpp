#include "etau/solver.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>

namespace etau {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

struct Unknowns {
    std::vector<int> id;  // per node, -1 if fixed
    std::vector<std::size_t> node;
};

Unknowns number_interior(const GraphDomain& d) {
    Unknowns u;
    u.id.assign(d.size(), -1);
    for (int j = 0; j < d.ny; ++j)
        for (int i = 0; i < d.nx; ++i)
            if (d.interior(i, j)) {
                u.id[d.index(i, j)] = static_cast<int>(u.node.size());
                u.node.push_back(d.index(i, j));
            }
    return u;
}

struct FaceFlux {
    double F;      // normal flux component
    double dFdn;   // derivative w.r.t. the normal difference quotient
    double dFdt;   // derivative w.r.t. the tangential difference quotient
};

// Flux through a face; `along_x` selects lambda a / W (x-face) or lambda b / W (y-face).
FaceFlux face_flux(const BasePoint& at, double p, double q, bool along_x, const SpaceParams& sp) {
    const double l = conformal_factor(at);
    const auto [A, B] = connection_coefficients(at, sp);
    const double a = -(p + A) / l, b = -(q + B) / l;
    const double W = std::sqrt(1.0 + a * a + b * b);
    const double W3 = W * W * W;
    if (along_x) return {l * a / W, -(1.0 + b * b) / W3, a * b / W3};
    return {l * b / W, -(1.0 + a * a) / W3, a * b / W3};
}

// Residual H at every unknown; fills the Jacobian when `jac` is non-null.
Eigen::VectorXd residual(const GraphFunction& u, const Unknowns& un, const SpaceParams& sp, SpMat* jac) {
    const GraphDomain& d = u.domain;
    const double hx = d.hx(), hy = d.hy();
    Eigen::VectorXd R(static_cast<Eigen::Index>(un.node.size()));
    std::vector<Triplet> trip;
    if (jac) trip.reserve(un.node.size() * 13);
    for (std::size_t k = 0; k < un.node.size(); ++k) {
        const int i = static_cast<int>(un.node[k] % d.nx);
        const int j = static_cast<int>(un.node[k] / d.nx);
        const BasePoint c = d.node(i, j);
        const double l = conformal_factor(c);
        const double scale = 1.0 / (2.0 * l * l);
        double div = 0.0;
        const auto add = [&](int ii, int jj, double w) {
            const int col = un.id[d.index(ii, jj)];
            if (jac && col >= 0) trip.emplace_back(static_cast<int>(k), col, w * scale);
        };
        for (int s : {-1, 1}) {
            const int il = s > 0 ? i : i - 1;
            const double px = (u(il + 1, j) - u(il, j)) / hx;
            const double qx = (u(il, j + 1) + u(il + 1, j + 1) - u(il, j - 1) - u(il + 1, j - 1)) / (4.0 * hy);
            const FaceFlux fx = face_flux({d.model, c.x + 0.5 * s * hx, c.y}, px, qx, true, sp);
            div += s * fx.F / hx;
            if (jac) {
                const double wn = s * fx.dFdn / hx, wt = s * fx.dFdt / hx;
                add(il + 1, j, wn / hx);
                add(il, j, -wn / hx);
                for (int m : {il, il + 1}) {
                    add(m, j + 1, wt / (4.0 * hy));
                    add(m, j - 1, -wt / (4.0 * hy));
                }
            }
            const int jl = s > 0 ? j : j - 1;
            const double qy = (u(i, jl + 1) - u(i, jl)) / hy;
            const double py = (u(i + 1, jl) + u(i + 1, jl + 1) - u(i - 1, jl) - u(i - 1, jl + 1)) / (4.0 * hx);
            const FaceFlux fy = face_flux({d.model, c.x, c.y + 0.5 * s * hy}, py, qy, false, sp);
            div += s * fy.F / hy;
            if (jac) {
                const double wn = s * fy.dFdn / hy, wt = s * fy.dFdt / hy;
                add(i, jl + 1, wn / hy);
                add(i, jl, -wn / hy);
                for (int m : {jl, jl + 1}) {
                    add(i + 1, m, wt / (4.0 * hx));
                    add(i - 1, m, -wt / (4.0 * hx));
                }
            }
        }
        R[static_cast<Eigen::Index>(k)] = div * scale;
    }
    if (jac) {
        jac->resize(R.size(), R.size());
        jac->setFromTriplets(trip.begin(), trip.end());
    }
    return R;
}

void update(GraphFunction& u, const Unknowns& un, const Eigen::VectorXd& step, double alpha) {
    for (std::size_t k = 0; k < un.node.size(); ++k) u.values[un.node[k]] += alpha * step[static_cast<Eigen::Index>(k)];
}

double max_abs(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

void check_data(const GraphFunction& g) {
    const GraphDomain& d = g.domain;
    for (int j = 0; j < d.ny; ++j)
        for (int i = 0; i < d.nx; ++i)
            if (d.in_mask(i, j) && !d.interior(i, j) && !std::isfinite(g(i, j)))
                throw ParameterError("solve_dirichlet: boundary values must be finite");
}

}  // namespace

GraphFunction harmonic_extension(const GraphFunction& boundary) {
    check_data(boundary);
    const GraphDomain& d = boundary.domain;
    const Unknowns un = number_interior(d);
    GraphFunction u = boundary;
    if (un.node.empty()) return u;
    const double ax = 1.0 / (d.hx() * d.hx()), ay = 1.0 / (d.hy() * d.hy());
    std::vector<Triplet> trip;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(un.node.size()));
    for (std::size_t k = 0; k < un.node.size(); ++k) {
        const int i = static_cast<int>(un.node[k] % d.nx), j = static_cast<int>(un.node[k] / d.nx);
        trip.emplace_back(static_cast<int>(k), static_cast<int>(k), -2.0 * (ax + ay));
        const int nb[4][2] = {{i + 1, j}, {i - 1, j}, {i, j + 1}, {i, j - 1}};
        for (int n = 0; n < 4; ++n) {
            const double w = n < 2 ? ax : ay;
            const std::size_t idx = d.index(nb[n][0], nb[n][1]);
            if (un.id[idx] >= 0) trip.emplace_back(static_cast<int>(k), un.id[idx], w);
            else rhs[static_cast<Eigen::Index>(k)] -= w * boundary.values[idx];
        }
    }
    SpMat L(rhs.size(), rhs.size());
    L.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseLU<SpMat> lu;
    lu.compute(L);
    const Eigen::VectorXd x = lu.solve(rhs);
    for (std::size_t k = 0; k < un.node.size(); ++k) u.values[un.node[k]] = x[static_cast<Eigen::Index>(k)];
    return u;
}

GraphFunction newton_step(const GraphFunction& u, const SpaceParams& sp) {
    const Unknowns un = number_interior(u.domain);
    SpMat J;
    const Eigen::VectorXd R = residual(u, un, sp, &J);
    Eigen::SparseLU<SpMat> lu;
    lu.compute(J);
    if (lu.info() != Eigen::Success) throw std::runtime_error("newton_step: singular Jacobian");
    GraphFunction out = u;
    update(out, un, lu.solve(-R), 1.0);
    return out;
}

SolveReport solve_dirichlet(const GraphFunction& boundary, const SpaceParams& sp, const SolverOptions& opt) {
    check_data(boundary);
    const Unknowns un = number_interior(boundary.domain);
    SolveReport rep;
    rep.solution = opt.harmonic_initial_guess ? harmonic_extension(boundary) : boundary;
    GraphFunction& u = rep.solution;
    if (!opt.harmonic_initial_guess)
        for (std::size_t n : un.node)
            if (!std::isfinite(u.values[n])) u.values[n] = 0.0;
    if (un.node.empty()) {
        rep.converged = true;
        rep.message = "no interior nodes";
        return rep;
    }
    SpMat J;
    Eigen::VectorXd R = residual(u, un, sp, &J);
    rep.residual_history.push_back(max_abs(R));
    while (rep.iterations < opt.max_iterations) {
        if (max_abs(R) < opt.tolerance) break;
        ++rep.iterations;
        Eigen::SparseLU<SpMat> lu;
        lu.compute(J);
        const double r0 = R.norm();
        bool accepted = false;
        if (lu.info() == Eigen::Success) {
            const Eigen::VectorXd step = lu.solve(-R);
            double alpha = 1.0;
            for (int h = 0; h <= opt.max_halvings && step.allFinite(); ++h, alpha *= 0.5) {
                GraphFunction trial = u;
                update(trial, un, step, alpha);
                const Eigen::VectorXd Rt = residual(trial, un, sp, nullptr);
                if (Rt.allFinite() && Rt.norm() <= (1.0 - 1e-4 * alpha) * r0) {
                    u = std::move(trial);
                    accepted = true;
                    break;
                }
            }
        }
        if (!accepted) {
            // steepest descent on 0.5 |R|^2
            rep.used_descent = true;
            for (int it = 0; it < opt.descent_iterations; ++it) {
                const Eigen::VectorXd g = J.transpose() * R;
                const double gg = g.squaredNorm();
                if (!(gg > 0.0)) break;
                const Eigen::VectorXd Jg = J * g;
                double alpha = gg / std::max(Jg.squaredNorm(), 1e-300);
                bool moved = false;
                for (int h = 0; h <= opt.max_halvings; ++h, alpha *= 0.5) {
                    GraphFunction trial = u;
                    update(trial, un, -g, alpha);
                    const Eigen::VectorXd Rt = residual(trial, un, sp, nullptr);
                    if (Rt.allFinite() && Rt.squaredNorm() < R.squaredNorm() - 1e-4 * alpha * gg) {
                        u = std::move(trial);
                        moved = true;
                        break;
                    }
                }
                R = residual(u, un, sp, &J);
                if (!moved) break;
                accepted = true;
            }
        }
        R = residual(u, un, sp, &J);
        rep.residual_history.push_back(max_abs(R));
        if (!accepted) {
            rep.message = "line search failed to reduce the residual";
            break;
        }
    }
    rep.final_residual = max_abs(R);
    rep.converged = rep.final_residual < opt.tolerance;
    if (rep.converged) rep.message = "converged";
    else if (rep.message.empty()) rep.message = "maximum iterations reached";
    return rep;
}

}  // namespace etau
