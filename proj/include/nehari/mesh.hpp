#pragma once

#include <string>
#include <vector>

namespace nehari {

/// Simplicial mesh of an interval (1D) or an axis-aligned rectangle (2D)
/// with homogeneous Dirichlet boundary flags. P1 elements throughout:
/// segments in 1D, triangles in 2D. Immutable after construction and safe
/// to share read-only across threads.
///
/// Nodes are stored in lexicographic coordinate order. Per-element measures
/// and shape-function gradients are precomputed so assembly never touches
/// geometry twice.
struct Mesh {
    int dimension = 0;                    ///< 1 or 2
    std::vector<double> node_coords;      ///< dimension-strided coordinates
    std::vector<int> elem_nodes;          ///< (dimension+1)-strided node indices
    std::vector<int> boundary_nodes;      ///< ascending node indices
    std::vector<char> is_boundary;        ///< per-node flag
    std::vector<double> element_measures; ///< per-element length/area, > 0
    std::vector<double> shape_grads;      ///< per element: (dim+1) x dim gradients

    int n_nodes() const { return static_cast<int>(is_boundary.size()); }
    int n_elements() const { return static_cast<int>(element_measures.size()); }
    int nodes_per_element() const { return dimension + 1; }

    double coord(int node, int d) const { return node_coords[static_cast<size_t>(node) * dimension + d]; }
    int elem_node(int e, int k) const { return elem_nodes[static_cast<size_t>(e) * nodes_per_element() + k]; }
    /// d-th component of the gradient of local basis function k on element e.
    double shape_grad(int e, int k, int d) const {
        const int npe = nodes_per_element();
        return shape_grads[(static_cast<size_t>(e) * npe + k) * dimension + d];
    }

    double domain_measure() const;
};

/// Uniform mesh of (x_left, x_right) with n_cells segments.
Mesh build_interval_mesh(double x_left, double x_right, int n_cells);

/// Structured triangulation of [x0,x1] x [y0,y1]; each of the nx*ny grid
/// cells is split into two triangles.
Mesh build_rect_mesh(double x0, double x1, double y0, double y1, int nx, int ny);

/// Node indices not on the Dirichlet boundary, ascending.
std::vector<int> interior_indices(const Mesh& mesh);

// Plain-text mesh exchange format:
//   dim n_nodes n_elements
//   <n_nodes coordinate lines>
//   <n_elements node-index lines>
//   <one line of ascending boundary node indices>
std::string mesh_to_text(const Mesh& mesh);
Mesh mesh_from_text(const std::string& text);
void write_mesh(const Mesh& mesh, const std::string& path);
Mesh read_mesh(const std::string& path);

} // namespace nehari
