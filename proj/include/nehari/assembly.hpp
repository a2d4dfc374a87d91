#pragma once

#include <vector>

#include "nehari/mesh.hpp"
#include "nehari/problem.hpp"

namespace nehari {

/// Kernel selection. `parallel` runs element loops under OpenMP with a
/// fixed-order reduction, so results are bit-identical to `serial` and
/// reproducible for any thread count. `serial` is the single-pass
/// reference implementation kept for testing and benchmarking.
enum class Exec { serial, parallel };

/// Gradient term of the energy: integral of xi |grad u|^p. Exact for P1
/// fields with per-element weights.
double integral_gradient_p(const Mesh& mesh, const WeightField& weights,
                           const ProblemParams& params, const Field& u,
                           Exec exec = Exec::parallel);

/// Singular term: integral of a |u|^{1-gamma}, fixed Gauss rule.
double integral_singular(const Mesh& mesh, const WeightField& weights,
                         const ProblemParams& params, const Field& u,
                         Exec exec = Exec::parallel);

/// Power term: integral of |u|^r, fixed Gauss rule (exact for integer r
/// within the rule's degree).
double integral_r(const Mesh& mesh, const ProblemParams& params, const Field& u,
                  Exec exec = Exec::parallel);

/// Energy value (1/p) B - (1/(1-gamma)) A - (lambda/r) R of the three
/// integrals above; zero for the zero field.
double energy(const Mesh& mesh, const WeightField& weights,
              const ProblemParams& params, const Field& u,
              Exec exec = Exec::parallel);

/// Weighted p-Laplace operator action <A(u), phi_i> for every interior
/// basis function, ordered like interior_indices(mesh). Exact for P1.
std::vector<double> operator_apply(const Mesh& mesh, const WeightField& weights,
                                   const ProblemParams& params, const Field& u,
                                   Exec exec = Exec::parallel);

/// Directional derivative of the energy per interior basis function:
///   <A(u), phi_i> - integral a u^{-gamma} phi_i - lambda integral u^{r-1} phi_i.
/// Requires every interior nodal value at or above positivity_floor(u);
/// throws SingularityGuardError otherwise.
std::vector<double> energy_gradient(const Mesh& mesh, const WeightField& weights,
                                    const ProblemParams& params, const Field& u,
                                    Exec exec = Exec::parallel);

} // namespace nehari
