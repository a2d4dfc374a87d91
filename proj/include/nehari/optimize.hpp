#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nehari/fibering.hpp"

namespace nehari {

struct SolverConfig {
    Branch branch = Branch::plus;
    int max_iters = 20000;
    double step_init = 1.0;
    double step_shrink = 0.5;
    double tol_energy = 1e-10; ///< relative energy stall threshold
    double tol_grad = 1e-6;    ///< residual threshold, scaled by 1 + |energy|
    int restarts = 2;          ///< random restarts in addition to the bump start
    std::uint64_t seed = 12345;

    void validate() const;
};

struct SolveResult {
    Field u;
    double energy = 0.0;
    double nehari_residual = 0.0;
    double d_value = 0.0;
    double grad_norm = 0.0; ///< weak residual norm relative to the operator norm
    int iterations = 0;
    bool converged = false;
    int restart_index = -1;
    double max_iterate_norm = 0.0;
    std::vector<double> energy_trace; ///< accepted energies, strictly decreasing
};

/// Minimizes the energy over the requested manifold component by
/// ray-projected preconditioned descent. Runs the bump start plus
/// `restarts` seeded random starts and returns the lowest converged energy
/// (ties broken by restart index); if nothing converged, the best iterate
/// with converged=false. Throws InfeasibleRayError when every start fails
/// to project (lambda too large for all sampled directions).
SolveResult minimize_on_branch(const Mesh& mesh, const WeightField& weights,
                               const ProblemParams& params, const SolverConfig& config);

struct StepOutcome {
    bool accepted = false;
    Field u;            ///< projected trial when accepted
    double energy = 0.0;
};

/// One descent trial from a point on the branch: form the preconditioned
/// gradient direction d, take v = |u - step*d| clamped to the positivity
/// floor, project v back onto the branch, and accept only a sufficient
/// energy decrease. Rejection (projection miss, zero trial, or no decrease)
/// is reported, not thrown.
StepOutcome descent_step(const Mesh& mesh, const WeightField& weights,
                         const ProblemParams& params, const Field& u_on_branch,
                         double step, Branch branch);

/// Product-of-coordinate-bumps start direction, normalized to unit maximum.
Field bump_field(const Mesh& mesh);

/// Uniform random interior values in (0.1, 1), zero boundary.
Field random_positive_field(const Mesh& mesh, std::mt19937_64& rng);

/// Engine-portable uniform double in [0, 1).
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace nehari
