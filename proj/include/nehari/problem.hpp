#pragma once

#include <vector>

#include "nehari/mesh.hpp"

namespace nehari {

/// Exponents and parameter of the Dirichlet problem
///   -div(xi |grad u|^{p-2} grad u) = a u^{-gamma} + lambda u^{r-1},  u|_bdry = 0,
/// subject to 0 < gamma < 1 < p < r < p* and lambda > 0.
struct ProblemParams {
    double p = 2.0;
    double gamma = 0.5;
    double r = 4.0;
    double lambda = 1.0;

    /// Critical Sobolev exponent: N p / (N - p) for p < N, infinity otherwise.
    double critical_exponent(int dimension) const;
    /// Throws InvalidInputError unless the exponent chain holds for this dimension.
    void validate(int dimension) const;
};

/// Per-element diffusion weight xi and reaction weight a. Element-wise
/// constants, so both may be discontinuous across element interfaces.
struct WeightField {
    std::vector<double> xi;
    std::vector<double> a;
    double xi0 = 0.0; ///< declared lower bound, 0 < xi0 <= min(xi)

    static WeightField constant(const Mesh& mesh, double xi_value, double a_value);
    /// xi and a jump at x = x_split (element centroids decide the side).
    static WeightField step_x(const Mesh& mesh, double x_split,
                              double xi_left, double xi_right,
                              double a_left, double a_right);
    void validate(const Mesh& mesh) const;
};

/// Nodal coefficient vector of a P1 function, zero at boundary nodes.
struct Field {
    std::vector<double> values;
};

Field zero_field(const Mesh& mesh);
/// Throws InvalidInputError on size mismatch, nonzero boundary values,
/// or non-finite entries.
void validate_field(const Mesh& mesh, const Field& u);

double max_abs_value(const Field& u);
/// Floor below which nodal values are too small for u^{-gamma} terms:
/// 1e-10 times the largest nodal value.
double positivity_floor(const Field& u);

Field scaled(const Field& u, double c);

} // namespace nehari
