#pragma once

#include <string>
#include <vector>

#include "etau/graph.hpp"

namespace etau {

struct SolverOptions {
    int max_iterations = 50;
    double tolerance = 1e-10;  // on max |H| over interior nodes
    int max_halvings = 20;
    int descent_iterations = 200;
    bool harmonic_initial_guess = true;
};

struct SolveReport {
    GraphFunction solution;
    bool converged = false;
    int iterations = 0;
    bool used_descent = false;
    std::vector<double> residual_history;  // max |H| after each iteration, starting with the initial guess
    double final_residual = 0.0;
    std::string message;
};

/// Minimal graph with the Dirichlet data held by `boundary` on non-interior mask nodes.
/// Damped Newton on the discrete operator of mean_curvature with Armijo backtracking;
/// when backtracking stalls, steepest-descent steps on the squared residual take over.
SolveReport solve_dirichlet(const GraphFunction& boundary, const SpaceParams& sp, const SolverOptions& opt = {});

/// Discrete harmonic extension of the non-interior data (five-point Laplacian).
GraphFunction harmonic_extension(const GraphFunction& boundary);

/// One undamped Newton step from u.
GraphFunction newton_step(const GraphFunction& u, const SpaceParams& sp);

}  // namespace etau
