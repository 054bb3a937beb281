#include "singcurve/graph.hpp"

#include <algorithm>
#include <queue>

#include "singcurve/errors.hpp"
#include "singcurve/linalg.hpp"

namespace singcurve {

DualGraph::DualGraph(int r, std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges,
                     std::vector<Arrow> arrows)
    : r_(r), vertices_(std::move(vertices)), edges_(std::move(edges)), arrows_(std::move(arrows)) {
    validate();
}

int DualGraph::index_of(int id) const {
    for (int i = 0; i < size(); ++i)
        if (vertices_[i].id == id) return i;
    throw MalformedGraph("unknown vertex id " + std::to_string(id));
}

int DualGraph::edge_degree(int idx) const {
    int id = vertices_[idx].id;
    int d = 0;
    for (const auto& [a, b] : edges_)
        if (a == id || b == id) ++d;
    return d;
}

int DualGraph::arrow_count(int idx) const {
    int id = vertices_[idx].id;
    int d = 0;
    for (const auto& a : arrows_)
        if (a.vertex == id) ++d;
    return d;
}

std::vector<std::vector<long long>> DualGraph::intersection_matrix() const {
    const int n = size();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = vertices_[i].self_int;
    for (const auto& [a, b] : edges_) {
        int i = index_of(a), j = index_of(b);
        m[i][j] = 1;
        m[j][i] = 1;
    }
    return m;
}

void DualGraph::validate() const {
    if (r_ < 1) throw MalformedGraph("branch count must be >= 1");
    if (vertices_.empty()) throw MalformedGraph("empty graph");
    for (const auto& v : vertices_)
        if (v.self_int >= 0)
            throw MalformedGraph("self-intersection must be negative at vertex " +
                                 std::to_string(v.id));
    for (size_t i = 0; i < vertices_.size(); ++i)
        for (size_t j = i + 1; j < vertices_.size(); ++j)
            if (vertices_[i].id == vertices_[j].id)
                throw MalformedGraph("duplicate vertex id " + std::to_string(vertices_[i].id));

    if (edges_.size() != vertices_.size() - 1)
        throw MalformedGraph("not a tree: |edges| != |vertices| - 1");
    for (const auto& [a, b] : edges_) {
        if (a == b) throw MalformedGraph("self-loop at vertex " + std::to_string(a));
        index_of(a);
        index_of(b);
    }

    // Connectivity.
    std::vector<char> seen(size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (const auto& [a, b] : edges_) {
            int ia = index_of(a), ib = index_of(b);
            int other = -1;
            if (ia == i) other = ib;
            if (ib == i) other = ia;
            if (other >= 0 && !seen[other]) {
                seen[other] = 1;
                ++reached;
                q.push(other);
            }
        }
    }
    if (reached != size()) throw MalformedGraph("graph is disconnected");

    std::vector<int> arrow_counts(r_ + 1, 0);
    for (const auto& a : arrows_) {
        index_of(a.vertex);
        if (a.branch < 1 || a.branch > r_)
            throw MalformedGraph("arrow branch index out of range: " + std::to_string(a.branch));
        ++arrow_counts[a.branch];
    }
    for (int b = 1; b <= r_; ++b)
        if (arrow_counts[b] != 1)
            throw MalformedGraph("branch " + std::to_string(b) + " has " +
                                 std::to_string(arrow_counts[b]) + " arrows");

    if (!is_negative_definite(intersection_matrix()))
        throw MalformedGraph("intersection matrix is not negative definite");
}

MultiplicityTable solve_multiplicities(const DualGraph& g) {
    const int n = g.size();
    auto a = g.intersection_matrix();
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<long>(a[i][j]);

    MultiplicityTable table;
    table.per_branch.assign(n, std::vector<long long>(g.branch_count(), 0));
    table.total.assign(n, 0);

    for (int br = 1; br <= g.branch_count(); ++br) {
        std::vector<mpq_class> rhs(n, 0);
        for (const auto& ar : g.arrows())
            if (ar.branch == br) rhs[g.index_of(ar.vertex)] -= 1;
        auto sol = solve_linear(m, rhs);
        if (!sol) throw MalformedGraph("singular intersection matrix");
        for (int i = 0; i < n; ++i) {
            const mpq_class& x = (*sol)[i];
            if (x.get_den() != 1)
                throw MalformedGraph("non-integral multiplicity at vertex index " +
                                     std::to_string(i));
            if (x <= 0)
                throw MalformedGraph("non-positive multiplicity at vertex index " +
                                     std::to_string(i));
            if (!x.get_num().fits_slong_p())
                throw MalformedGraph("multiplicity overflow");
            table.per_branch[i][br - 1] = x.get_num().get_si();
        }
    }
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < g.branch_count(); ++b) table.total[i] += table.per_branch[i][b];

    // Residual check: A * m^{(i)} + arrow incidence = 0 exactly.
    for (int br = 1; br <= g.branch_count(); ++br)
        for (int i = 0; i < n; ++i) {
            long long acc = 0;
            for (int j = 0; j < n; ++j) acc += a[i][j] * table.per_branch[j][br - 1];
            for (const auto& ar : g.arrows())
                if (ar.branch == br && g.index_of(ar.vertex) == i) acc += 1;
            if (acc != 0) throw MalformedGraph("nonzero residual in multiplicity system");
        }
    return table;
}

std::vector<long long> euler_smooth_parts(const DualGraph& g) {
    std::vector<long long> chi(g.size());
    for (int i = 0; i < g.size(); ++i) chi[i] = 2 - g.edge_degree(i) - g.arrow_count(i);
    return chi;
}

ProductForm acampo_zeta(const DualGraph& g) {
    auto mult = solve_multiplicities(g);
    auto chi = euler_smooth_parts(g);
    ProductForm pf(1);
    for (int i = 0; i < g.size(); ++i) {
        if (chi[i] == 0) continue;
        pf.push_factor(MultiIndex{mult.total[i]}, -chi[i]);
    }
    return pf;
}

AlexanderResult alexander_polynomial(const DualGraph& g) {
    auto mult = solve_multiplicities(g);
    auto chi = euler_smooth_parts(g);
    const int r = g.branch_count();

    ProductForm form(r);
    for (int i = 0; i < g.size(); ++i) {
        if (chi[i] == 0) continue;
        form.push_factor(MultiIndex(std::vector<long long>(mult.per_branch[i].begin(),
                                                           mult.per_branch[i].end())),
                         -chi[i]);
    }
    AlexanderResult res{form, std::nullopt};
    if (r == 1) return res;

    // Certify polynomiality by exact division: numerator factors have
    // positive exponent, denominator factors negative.
    IntPolynomial num = IntPolynomial::one(r);
    IntPolynomial den = IntPolynomial::one(r);
    for (const auto& f : form.factors()) {
        IntPolynomial base = IntPolynomial::one(r) -
                             IntPolynomial::monomial(r, f.m, 1);
        for (long long k = 0; k < std::abs(f.e); ++k) {
            if (f.e > 0)
                num = num * base;
            else
                den = den * base;
        }
    }
    IntPolynomial poly(r);
    try {
        poly = exact_divide(num, den);
    } catch (const NotDivisibleError&) {
        throw NonPolynomialError("multi-variable product does not expand to a polynomial");
    }
    for (const auto& [v, c] : poly.terms())
        if (!v.geq_zero()) throw NonPolynomialError("negative exponent in expansion");
    if (poly.coeff(MultiIndex::zeros(r)) != 1)
        throw NonPolynomialError("value at the origin is not 1");
    res.poly = poly;
    return res;
}

DualGraph blowup_free_point(const DualGraph& g, int vertex_id) {
    int idx = g.index_of(vertex_id);
    auto vertices = g.vertices();
    auto edges = g.edges();
    vertices[idx].self_int -= 1;
    int new_id = 0;
    for (const auto& v : vertices) new_id = std::max(new_id, v.id);
    ++new_id;
    vertices.push_back({new_id, -1});
    edges.emplace_back(vertex_id, new_id);
    return DualGraph(g.branch_count(), vertices, edges, g.arrows());
}

DualGraph blowup_edge(const DualGraph& g, std::pair<int, int> e) {
    auto edges = g.edges();
    auto it = std::find_if(edges.begin(), edges.end(), [&](const std::pair<int, int>& x) {
        return (x.first == e.first && x.second == e.second) ||
               (x.first == e.second && x.second == e.first);
    });
    if (it == edges.end()) throw MalformedGraph("edge not present");
    edges.erase(it);

    auto vertices = g.vertices();
    vertices[g.index_of(e.first)].self_int -= 1;
    vertices[g.index_of(e.second)].self_int -= 1;
    int new_id = 0;
    for (const auto& v : vertices) new_id = std::max(new_id, v.id);
    ++new_id;
    vertices.push_back({new_id, -1});
    edges.emplace_back(e.first, new_id);
    edges.emplace_back(e.second, new_id);
    return DualGraph(g.branch_count(), vertices, edges, g.arrows());
}

}  // namespace singcurve
