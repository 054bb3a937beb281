#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "singcurve/semigroup.hpp"
#include "singcurve/series.hpp"

namespace singcurve {

// Dual graph of an embedded resolution of a plane curve singularity:
// a tree of exceptional components with self-intersections, plus
// branch-labelled arrows for the strict transforms.
class DualGraph {
public:
    struct Vertex {
        int id;
        long long self_int;
    };
    struct Arrow {
        int vertex;  // vertex id
        int branch;  // 1..r
    };

    DualGraph(int r, std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges,
              std::vector<Arrow> arrows);

    int branch_count() const { return r_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    int size() const { return static_cast<int>(vertices_.size()); }
    int index_of(int id) const;  // throws MalformedGraph on unknown id
    int edge_degree(int idx) const;
    int arrow_count(int idx) const;

    // Intersection matrix: self-intersections on the diagonal, 1 for
    // adjacent vertices.
    std::vector<std::vector<long long>> intersection_matrix() const;

    // Tree shape, negative definiteness, arrow labelling; throws
    // MalformedGraph.
    void validate() const;

private:
    int r_;
    std::vector<Vertex> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Arrow> arrows_;
};

// Per-vertex multiplicity vectors of the branch equations lifted to the
// resolution, indexed in vertex order.
struct MultiplicityTable {
    std::vector<std::vector<long long>> per_branch;  // [vertex][branch 0..r-1]
    std::vector<long long> total;                    // [vertex]
};

MultiplicityTable solve_multiplicities(const DualGraph& g);

// chi of the smooth part of each component: 2 - edge degree - arrows.
std::vector<long long> euler_smooth_parts(const DualGraph& g);

// One-variable A'Campo product over total multiplicities.
ProductForm acampo_zeta(const DualGraph& g);

// Multi-variable product over multiplicity vectors.  For r > 1 `poly` holds
// the certified polynomial expansion; for r = 1 only the form is returned.
struct AlexanderResult {
    ProductForm form;
    std::optional<IntPolynomial> poly;
};

AlexanderResult alexander_polynomial(const DualGraph& g);

DualGraph blowup_free_point(const DualGraph& g, int vertex_id);
DualGraph blowup_edge(const DualGraph& g, std::pair<int, int> e);

// Minimal embedded resolution graph of an irreducible branch, synthesized by
// simulating blowups on a parameterization derived from the characteristic
// exponents.  Postconditions (dead-end/star multiplicities) are checked.
DualGraph graph_from_branch(const CharExponents& ce);

}  // namespace singcurve
