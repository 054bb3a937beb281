#include <algorithm>

#include "singcurve/errors.hpp"
#include "singcurve/graph.hpp"
#include "singcurve/tau_series.hpp"

namespace singcurve {

namespace {

struct BuilderVertex {
    int id;
    long long self_int;
};

// Builds the minimal embedded resolution graph by blowing up points along the
// strict transform of the branch.  The branch is carried as a truncated
// parameterization; at every stage at most two divisors pass through the
// current point, tracked by their local equations x = 0 and y = 0.
class SynthesisState {
public:
    SynthesisState(TauSeries x, TauSeries y) : x_(std::move(x)), y_(std::move(y)) {}

    DualGraph run() {
        int guard = 0;
        while (true) {
            if (++guard > 4096) throw SynthesisError("blowup sequence does not terminate");
            long long a = x_.ord();
            long long b = y_.ord();
            if (a == kInfinity && b == kInfinity)
                throw SynthesisError("branch parameterization vanished");

            // Done: smooth branch transverse to exactly one divisor, away
            // from the corners of the exceptional divisor.
            if (div_x_ >= 0 && div_y_ < 0 && a == 1) return finish(div_x_);
            if (div_y_ >= 0 && div_x_ < 0 && b == 1) return finish(div_y_);

            if (a <= b)
                blowup_x_chart();
            else
                blowup_y_chart();
        }
    }

private:
    DualGraph finish(int arrow_vertex) {
        std::vector<DualGraph::Vertex> vs;
        vs.reserve(vertices_.size());
        for (const auto& v : vertices_) vs.push_back({v.id, v.self_int});
        return DualGraph(1, vs, edges_, {{arrow_vertex, 1}});
    }

    int new_vertex() {
        int id = next_id_++;
        vertices_.push_back({id, -1});
        return id;
    }

    void attach_new_vertex(int n) {
        for (int d : {div_x_, div_y_}) {
            if (d < 0) continue;
            for (auto& v : vertices_)
                if (v.id == d) v.self_int -= 1;
            edges_.emplace_back(d, n);
        }
        if (div_x_ >= 0 && div_y_ >= 0) {
            auto it = std::find_if(edges_.begin(), edges_.end(), [&](const auto& e) {
                return (e.first == div_x_ && e.second == div_y_) ||
                       (e.first == div_y_ && e.second == div_x_);
            });
            if (it != edges_.end()) edges_.erase(it);
        }
    }

    // Chart x = x1, y = x1*y1: the new exceptional component is {x1 = 0}.
    void blowup_x_chart() {
        int n = new_vertex();
        attach_new_vertex(n);
        TauSeries y1 = y_.divided_by(x_);
        if (y1.ord() == 0) {
            y1 = y1 - TauSeries::monomial(0, y1.coeff(0), y1.trunc());
            div_y_ = -1;
        }
        // else the strict transform of the old {y = 0} still passes through.
        y_ = std::move(y1);
        div_x_ = n;
    }

    // Chart x = x1*y1, y = y1: the new exceptional component is {y1 = 0}.
    void blowup_y_chart() {
        int n = new_vertex();
        attach_new_vertex(n);
        TauSeries x1 = x_.divided_by(y_);
        if (x1.ord() == 0) {
            x1 = x1 - TauSeries::monomial(0, x1.coeff(0), x1.trunc());
            div_x_ = -1;
        }
        x_ = std::move(x1);
        div_y_ = n;
    }

    TauSeries x_, y_;
    int div_x_ = -1;  // vertex id with local equation x = 0, or -1
    int div_y_ = -1;
    int next_id_ = 1;
    std::vector<BuilderVertex> vertices_;
    std::vector<std::pair<int, int>> edges_;
};

}  // namespace

DualGraph graph_from_branch(const CharExponents& ce) {
    ce.validate();
    auto data = branch_data_from_char_exponents(ce);

    const long long b0 = ce.beta[0];
    const long long bs = ce.beta.back();
    const long long trunc = 4 * b0 * bs + 64;

    TauSeries x = TauSeries::monomial(b0, 1, trunc);
    TauSeries y(trunc);
    for (size_t j = 1; j < ce.beta.size(); ++j) y.set_coeff(ce.beta[j], 1);

    DualGraph g = [&] {
        if (ce.pairs() == 0 && b0 == 1) {
            // Smooth branch: a single blowup gives the one-vertex graph.
            return DualGraph(1, {{1, -1}}, {}, {{1, 1}});
        }
        SynthesisState state(std::move(x), std::move(y));
        return state.run();
    }();

    // Postconditions against the semigroup data: dead ends carry the minimal
    // generators, star points the star multiplicities, all other vertices
    // have chi = 0.
    auto mult = solve_multiplicities(g);
    auto chi = euler_smooth_parts(g);
    std::vector<long long> dead, star;
    for (int i = 0; i < g.size(); ++i) {
        if (chi[i] == 1)
            dead.push_back(mult.total[i]);
        else if (chi[i] == -1)
            star.push_back(mult.total[i]);
        else if (chi[i] != 0)
            throw SynthesisError("unexpected smooth-part Euler characteristic");
    }
    std::sort(dead.begin(), dead.end());
    std::sort(star.begin(), star.end());
    std::vector<long long> want_dead = data.gens;
    std::vector<long long> want_star = data.star;
    std::sort(want_dead.begin(), want_dead.end());
    std::sort(want_star.begin(), want_star.end());
    if (dead != want_dead) throw SynthesisError("dead-end multiplicities do not match generators");
    if (star != want_star) throw SynthesisError("star multiplicities do not match");
    return g;
}

}  // namespace singcurve
