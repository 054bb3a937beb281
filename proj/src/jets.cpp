#include "singcurve/jets.hpp"

#include <algorithm>
#include <cstdlib>

#include "singcurve/errors.hpp"
#include "singcurve/linalg.hpp"

namespace singcurve {

// --- BranchParam ----------------------------------------------------------

BranchParam::BranchParam(std::vector<std::pair<long long, mpq_class>> x_terms,
                         std::vector<std::pair<long long, mpq_class>> y_terms)
    : x_terms_(std::move(x_terms)), y_terms_(std::move(y_terms)) {
    long long o = param_order();
    if (o == kInfinity || o < 1)
        throw FixtureError("branch parameterization must have positive order");
}

static TauSeries materialize(const std::vector<std::pair<long long, mpq_class>>& terms,
                             long long trunc) {
    TauSeries s(trunc);
    for (const auto& [e, c] : terms)
        if (e <= trunc) s.set_coeff(e, s.coeff(e) + c);
    return s;
}

TauSeries BranchParam::x(long long trunc) const { return materialize(x_terms_, trunc); }
TauSeries BranchParam::y(long long trunc) const { return materialize(y_terms_, trunc); }

static long long poly_order(const std::vector<std::pair<long long, mpq_class>>& terms) {
    long long o = kInfinity;
    for (const auto& [e, c] : terms)
        if (c != 0) o = std::min(o, e);
    return o;
}

static long long poly_degree(const std::vector<std::pair<long long, mpq_class>>& terms) {
    long long d = 0;
    for (const auto& [e, c] : terms)
        if (c != 0) d = std::max(d, e);
    return d;
}

long long BranchParam::param_order() const {
    return std::min(poly_order(x_terms_), poly_order(y_terms_));
}

long long BranchParam::param_degree() const {
    return std::max(poly_degree(x_terms_), poly_degree(y_terms_));
}

// --- Germ -----------------------------------------------------------------

void Germ::add_term(long long i, long long j, const mpq_class& c) {
    if (c == 0) return;
    mpq_class& slot = terms_[{i, j}];
    slot += c;
    if (slot == 0) terms_.erase({i, j});
}

long long Germ::total_degree() const {
    long long d = 0;
    for (const auto& [ij, c] : terms_) d = std::max(d, ij.first + ij.second);
    return d;
}

Germ Germ::monomial(long long i, long long j, const mpq_class& c) {
    Germ g;
    g.add_term(i, j, c);
    return g;
}

Germ Germ::operator+(const Germ& o) const {
    Germ res = *this;
    for (const auto& [ij, c] : o.terms_) res.add_term(ij.first, ij.second, c);
    return res;
}

Germ Germ::operator*(const Germ& o) const {
    Germ res;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            res.add_term(a.first + b.first, a.second + b.second, ca * cb);
    return res;
}

// --- CurveModel -----------------------------------------------------------

CurveModel::CurveModel(std::vector<BranchParam> branches) : branches_(std::move(branches)) {
    if (branches_.empty()) throw FixtureError("curve model needs at least one branch");
}

// --- order and leading ----------------------------------------------------

namespace {

// g composed with the branch parameterization, exact up to tau^trunc.
TauSeries compose(const Germ& g, const BranchParam& b, long long trunc) {
    TauSeries xs = b.x(trunc);
    TauSeries ys = b.y(trunc);
    // Cache powers as they are needed.
    std::vector<TauSeries> xp{TauSeries::monomial(0, 1, trunc)};
    std::vector<TauSeries> yp{TauSeries::monomial(0, 1, trunc)};
    auto power = [&](std::vector<TauSeries>& cache, const TauSeries& base,
                     long long k) -> const TauSeries& {
        while (static_cast<long long>(cache.size()) <= k) cache.push_back(cache.back() * base);
        return cache[k];
    };
    TauSeries acc(trunc);
    for (const auto& [ij, c] : g.terms()) {
        TauSeries term = power(xp, xs, ij.first) * power(yp, ys, ij.second);
        acc = acc + term.scaled(c);
    }
    return acc;
}

}  // namespace

OrderLeading order_and_leading(const Germ& g, const BranchParam& b, long long trunc) {
    // Both g and the parameterization are polynomial, so the composition is
    // a polynomial in tau of degree at most deg(g) * max param degree;
    // materializing up to that bound makes the infinity verdict certain.
    long long bound = g.total_degree() * std::max<long long>(1, b.param_degree());
    TauSeries comp = compose(g, b, std::max(trunc, bound));
    long long o = comp.ord();
    if (o == kInfinity) return {kInfinity, 0};
    if (2 * o >= trunc)
        throw PrecisionError("order " + std::to_string(o) +
                             " too close to truncation bound " + std::to_string(trunc));
    return {o, comp.coeff(o)};
}

// --- jet subspace dimension -----------------------------------------------

long long jet_subspace_dim(const CurveModel& curve, const MultiIndex& v, long long n_deg) {
    if (v.arity() != curve.branch_count()) throw ArityError("valuation vector arity mismatch");
    if (!v.is_finite()) throw ArityError("valuation vector must be finite");

    std::vector<std::pair<long long, long long>> monomials;
    for (long long i = 0; i <= n_deg; ++i)
        for (long long j = 0; i + j <= n_deg; ++j) monomials.emplace_back(i, j);
    const int cols = static_cast<int>(monomials.size());

    long long max_v = 0;
    for (int i = 0; i < v.arity(); ++i) max_v = std::max(max_v, v[i]);
    const long long trunc = std::max<long long>(max_v + 1, 1);

    // One row per vanishing condition: coefficient of tau^k of the monomial
    // composed with branch i must vanish, k < v_i.
    std::vector<std::vector<mpq_class>> rows;
    for (int br = 0; br < curve.branch_count(); ++br) {
        if (v[br] <= 0) continue;
        std::vector<TauSeries> comp;
        comp.reserve(cols);
        for (const auto& [i, j] : monomials)
            comp.push_back(compose(Germ::monomial(i, j), curve.branch(br), trunc));
        for (long long k = 0; k < v[br]; ++k) {
            std::vector<mpq_class> row(cols);
            for (int c = 0; c < cols; ++c) row[c] = comp[c].coeff(k);
            rows.push_back(std::move(row));
        }
    }

    RationalMatrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return cols - exact_rank(std::move(m));
}

// --- c(v) and fiber reports -----------------------------------------------

JetConfig JetConfig::from_env() {
    JetConfig cfg;
    if (const char* s = std::getenv("SINGCURVE_PRECISION_CAP")) {
        long long cap = std::atoll(s);
        if (cap > 0) cfg.jet_cap = cap;
    }
    return cfg;
}

namespace {

long long starting_jet_degree(const MultiIndex& v) {
    long long max_v = 1;
    for (int i = 0; i < v.arity(); ++i) max_v = std::max(max_v, v[i]);
    return 2 * (1 + max_v);
}

}  // namespace

long long c_of_v(const CurveModel& curve, const MultiIndex& v, const JetConfig& cfg) {
    MultiIndex v1 = v + MultiIndex::ones(v.arity());
    auto value = [&](long long n) {
        return jet_subspace_dim(curve, v, n) - jet_subspace_dim(curve, v1, n);
    };
    long long n = starting_jet_degree(v1);
    long long prev = value(n);
    while (n < cfg.jet_cap) {
        ++n;
        long long cur = value(n);
        if (cur == prev) return cur;
        prev = cur;
    }
    throw PrecisionError("c(v) did not stabilize below jet cap " + std::to_string(cfg.jet_cap) +
                         " at v=" + v.to_string());
}

FiberReport fiber_report(const CurveModel& curve, const MultiIndex& v, const JetConfig& cfg) {
    const int r = curve.branch_count();
    if (!v.geq_zero() || !v.is_finite())
        throw ArityError("fiber report needs finite nonnegative v");

    std::vector<std::vector<int>> subsets;
    for (int mask = 0; mask < (1 << r); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < r; ++i)
            if (mask & (1 << i)) subset.push_back(i);
        subsets.push_back(std::move(subset));
    }

    MultiIndex vfull = v + MultiIndex::ones(r);
    auto dims_at = [&](long long n) {
        long long base = jet_subspace_dim(curve, vfull, n);
        std::vector<long long> d;
        d.reserve(subsets.size());
        for (const auto& subset : subsets) {
            MultiIndex vi = v;
            for (int i : subset) ++vi[i];
            d.push_back(jet_subspace_dim(curve, vi, n) - base);
        }
        return d;
    };

    long long n = starting_jet_degree(vfull);
    auto prev = dims_at(n);
    while (true) {
        if (n >= cfg.jet_cap)
            throw PrecisionError("fiber dims did not stabilize below jet cap at v=" +
                                 v.to_string());
        ++n;
        auto cur = dims_at(n);
        if (cur == prev) break;
        prev = std::move(cur);
    }

    FiberReport rep;
    rep.v = v;
    long long chi = 0;
    for (size_t s = 0; s < subsets.size(); ++s) {
        rep.dims[subsets[s]] = prev[s];
        chi += (subsets[s].size() % 2 == 0 ? 1 : -1) * prev[s];
    }
    rep.chi_pf = chi;
    rep.cv = rep.dims[{}];
    return rep;
}

bool jet_determinacy_check(const CurveModel& curve, const Germ& g, const MultiIndex& v,
                           const JetConfig& cfg) {
    (void)cfg;
    long long max_v = 0;
    for (int i = 0; i < v.arity(); ++i) {
        if (v[i] == kInfinity) return false;  // pre: all finite
        max_v = std::max(max_v, v[i]);
    }
    const long long k = 1 + max_v;
    const long long trunc = 2 * max_v + 8;

    std::vector<OrderLeading> base;
    for (int i = 0; i < curve.branch_count(); ++i)
        base.push_back(order_and_leading(g, curve.branch(i), trunc));

    // Deterministic sample of perturbations with all monomials of degree >= k.
    std::vector<Germ> samples;
    for (long long d = k; d <= k + 2; ++d)
        for (long long a = 0; a <= d; ++a) {
            Germ h = Germ::monomial(a, d - a, mpq_class(static_cast<long>(2 * a + 3), 5));
            samples.push_back(h);
            samples.push_back(Germ::monomial(a, d - a, -1) +
                              Germ::monomial(d - a, a, mpq_class(1, 7)));
        }

    for (const auto& h : samples) {
        Germ gh = g + h;
        for (int i = 0; i < curve.branch_count(); ++i) {
            auto ol = order_and_leading(gh, curve.branch(i), trunc);
            if (ol.order != base[i].order) return false;
            if (base[i].order != kInfinity && ol.leading != base[i].leading) return false;
        }
    }
    return true;
}

}  // namespace singcurve
