#pragma once

#include "nehari/assembly.hpp"
#include "nehari/mesh.hpp"
#include "nehari/problem.hpp"

namespace nehari {

/// The three integrals that fix the energy along the ray {t u : t > 0}:
///   grad_int  = integral xi |grad u|^p
///   sing_int  = integral a |u|^{1-gamma}
///   power_int = integral |u|^r
/// Every fibering quantity is computed from this triple, never by
/// re-integrating a scaled field, so ray homogeneity is exact.
struct RayScalars {
    double grad_int = 0.0;
    double sing_int = 0.0;
    double power_int = 0.0;
};

RayScalars ray_scalars(const Mesh& mesh, const WeightField& weights,
                       const ProblemParams& params, const Field& u,
                       Exec exec = Exec::parallel);

// Scalar fibering functions. All require t > 0 and positive scalars and
// throw std::domain_error otherwise.

/// eta(t) = t^{p-r} grad_int - t^{1-gamma-r} sing_int. Tends to -inf as
/// t -> 0+ and to 0+ as t -> inf; positive exactly on (t_hat, inf).
double eta(double grad_int, double sing_int, const ProblemParams& params, double t);
/// Analytic derivative of eta.
double eta_prime(double grad_int, double sing_int, const ProblemParams& params, double t);
/// Zero crossing of eta: (sing_int / grad_int)^{1/(p+gamma-1)}.
double t_hat(double grad_int, double sing_int, const ProblemParams& params);
/// Unique maximizer of eta:
///   [ (r+gamma-1) sing_int / ((r-p) grad_int) ]^{1/(p+gamma-1)}.
double t_zero(double grad_int, double sing_int, const ProblemParams& params);

/// Energy along the ray: psi(t) = energy(t u) expressed in the scalars.
double psi(const RayScalars& s, const ProblemParams& params, double t);
double psi_prime(const RayScalars& s, const ProblemParams& params, double t);
double psi_double_prime(const RayScalars& s, const ProblemParams& params, double t);

/// Intersections of the ray with the Nehari set: solutions of
/// eta(t) = lambda * power_int.
struct FiberingRoots {
    enum class Kind {
        two_roots,      ///< t1 < t_zero < t2
        degenerate,     ///< level meets the maximum of eta; t1 == t2 == t_zero
        no_intersection ///< level above the maximum of eta
    };
    Kind kind = Kind::no_intersection;
    double t1 = 0.0;
    double t2 = 0.0;
};

FiberingRoots fibering_roots(const RayScalars& s, const ProblemParams& params);

/// Largest lambda for which the ray through this direction meets the
/// Nehari set: eta(t_zero) / power_int.
double lambda_crit(const RayScalars& s, const ProblemParams& params);

/// Full per-direction record.
struct FiberingAnalysis {
    RayScalars scalars;
    double t_hat = 0.0;
    double t_zero = 0.0;
    double lambda_crit = 0.0;
    FiberingRoots roots;
};

FiberingAnalysis analyze_direction(const Mesh& mesh, const WeightField& weights,
                                   const ProblemParams& params, const Field& u,
                                   Exec exec = Exec::parallel);
FiberingAnalysis analyze_scalars(const RayScalars& s, const ProblemParams& params);

/// Manifold membership and the sign split of the Nehari set.
enum class NehariTag { not_on_manifold, n_plus, n_zero, n_minus };

struct NehariClass {
    NehariTag tag = NehariTag::not_on_manifold;
    /// grad_int - sing_int - lambda * power_int; zero on the manifold.
    double nehari_residual = 0.0;
    /// (p+gamma-1) grad_int - lambda (r+gamma-1) power_int; its sign picks
    /// the manifold component.
    double d_value = 0.0;
};

/// Classifies a nonzero field. Membership tolerance is
/// 1e-8 * max(grad_int, sing_int, lambda*power_int); the component
/// tolerance is 1e-10 * (p+gamma-1) * grad_int.
NehariClass classify(const Mesh& mesh, const WeightField& weights,
                     const ProblemParams& params, const Field& u,
                     Exec exec = Exec::parallel);

enum class Branch { plus, minus };

/// Projects a nonzero field onto the requested manifold component along its
/// ray: t1*u for plus, t2*u for minus. Throws NoIntersectionError when the
/// ray misses the manifold (lambda at or above the direction's critical value).
Field project(const Mesh& mesh, const WeightField& weights,
              const ProblemParams& params, const Field& u, Branch branch,
              Exec exec = Exec::parallel);

} // namespace nehari
