#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nehari/fibering.hpp"
#include "nehari/optimize.hpp"

namespace nehari {

struct WeakResidual {
    std::vector<double> residual;  ///< energy gradient per interior basis function
    double weak_residual_rel = 0.0; ///< ||residual|| / ||operator_apply(u)||
};

/// Residual of the discrete weak formulation at u. Small values certify
///   <A(u), phi_i> = integral a u^{-gamma} phi_i + lambda integral u^{r-1} phi_i
/// for every interior basis function.
WeakResidual weak_residual(const Mesh& mesh, const WeightField& weights,
                           const ProblemParams& params, const Field& u);

struct Positivity {
    double min_interior = 0.0;
    double max_value = 0.0;
};

Positivity check_positivity(const Mesh& mesh, const Field& u);

/// Sampled upper bound on the paper-level critical parameter: the minimum
/// per-direction lambda_crit over the bump direction and n_directions
/// seeded random positive directions. Only an upper bound restricted to the
/// sampled rays.
double estimate_lambda_star(const Mesh& mesh, const WeightField& weights,
                            const ProblemParams& params, int n_directions,
                            std::uint64_t seed);

struct IdentityCheck {
    std::string name;
    double max_rel_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Runs every assembly and fibering identity on seeded random fields over
/// the given mesh and weights. Failures are reported in the list, never
/// thrown. Deterministic order and content for a fixed seed.
std::vector<IdentityCheck> run_invariant_suite(const Mesh& mesh, const WeightField& weights,
                                               const ProblemParams& params, std::uint64_t seed);

/// Per-field verification record.
struct VerificationReport {
    double weak_residual_rel = 0.0;
    double min_interior = 0.0;
    double max_value = 0.0;
    double energy = 0.0;
    NehariClass cls;
    std::vector<IdentityCheck> identity_checks; ///< per-solution identities
    double lambda_star_estimate = 0.0;          ///< filled by callers that sampled it
};

/// Verifies a candidate solution: weak residual, positivity, classification,
/// and the Nehari energy identity at 1e-8 relative.
VerificationReport verify_solution(const Mesh& mesh, const WeightField& weights,
                                   const ProblemParams& params, const Field& u);

} // namespace nehari
