#include "singcurve/poincare.hpp"

#include <algorithm>

#include "singcurve/errors.hpp"

namespace singcurve {

std::string PoincareObject::to_string() const {
    if (poly) return poly->to_string();
    if (series) return series->to_string();
    return "<empty>";
}

LaurentWindow build_laurent_window(const CurveModel& curve, const MultiIndex& lo,
                                   const MultiIndex& hi, const JetConfig& cfg) {
    const int r = curve.branch_count();
    if (lo.arity() != r || hi.arity() != r) throw ArityError("window arity mismatch");
    for (int i = 0; i < r; ++i)
        if (lo[i] > 0 || hi[i] < 0) throw MarginError("window must contain the origin box");

    LaurentWindow lw;
    lw.r = r;
    lw.lo = lo;
    lw.hi = hi;
    BoxIter it(lo, hi);
    do {
        lw.values[it.current()] = c_of_v(curve, it.current(), cfg);
    } while (it.next());

    // Negative-direction stabilization must be visible: the two outermost
    // shells in each negative direction agree.
    for (int i = 0; i < r; ++i) {
        BoxIter shell(lo, hi);
        do {
            MultiIndex v = shell.current();
            if (v[i] != lo[i]) continue;
            MultiIndex w = v;
            ++w[i];
            if (lw.at(v) != lw.at(w))
                throw MarginError("stabilization not visible at " + v.to_string() +
                                  "; widen lo in direction " + std::to_string(i + 1));
        } while (shell.next());
    }
    return lw;
}

IntPolynomial p_prime(const LaurentWindow& lw) {
    const int r = lw.r;
    IntPolynomial p(r);
    MultiIndex inner_lo = lw.lo + MultiIndex::ones(r);
    BoxIter it(inner_lo, lw.hi);
    do {
        const MultiIndex& w = it.current();
        // coefficient of t^w in L * prod(t_i - 1)
        mpz_class coef = 0;
        for (int mask = 0; mask < (1 << r); ++mask) {
            MultiIndex v = w;
            int bits = 0;
            for (int i = 0; i < r; ++i)
                if (mask & (1 << i)) {
                    --v[i];
                    ++bits;
                }
            long long sign = ((r - bits) % 2 == 0) ? 1 : -1;
            coef += static_cast<long>(sign * lw.at(v));
        }
        p.add_term(w, coef);
    } while (it.next());

    // Support must be strictly interior: zero on every boundary shell.
    for (const auto& [w, c] : p.terms())
        for (int i = 0; i < r; ++i)
            if (w[i] == inner_lo[i] || w[i] == lw.hi[i])
                throw MarginError("nonzero boundary coefficient of P' at " + w.to_string());
    return p;
}

PoincareObject poincare_from_jets(const LaurentWindow& lw) {
    IntPolynomial pp = p_prime(lw);
    PoincareObject res;
    if (lw.r > 1) {
        IntPolynomial den =
            IntPolynomial::monomial(lw.r, MultiIndex::ones(lw.r), 1) - IntPolynomial::one(lw.r);
        // Non-divisibility here contradicts the structural divisibility claim
        // and signals a bug upstream, so the error is allowed to escape.
        res.poly = exact_divide(pp, den);
        return res;
    }
    TruncatedSeries s(1, lw.hi);
    BoxIter it(MultiIndex::zeros(1), lw.hi);
    do {
        s.add_term(it.current(), static_cast<long>(lw.at(it.current())));
    } while (it.next());
    res.series = std::move(s);
    return res;
}

PoincareObject x_series(const CurveModel& curve, const MultiIndex& hi, const JetConfig& cfg) {
    const int r = curve.branch_count();
    PoincareObject res;
    IntPolynomial acc(r);
    BoxIter it(MultiIndex::zeros(r), hi);
    do {
        auto rep = fiber_report(curve, it.current(), cfg);
        acc.add_term(it.current(), static_cast<long>(rep.chi_pf));
    } while (it.next());

    if (r > 1) {
        for (const auto& [v, c] : acc.terms())
            for (int i = 0; i < r; ++i)
                if (v[i] == hi[i])
                    throw MarginError("nonzero boundary coefficient of X at " + v.to_string());
        res.poly = std::move(acc);
    } else {
        res.series = acc.truncate(hi);
    }
    return res;
}

PoincareObject euler_integral(const CurveModel& curve, const MultiIndex& hi, IntegralMode mode,
                              const JetConfig& cfg) {
    PoincareObject x = x_series(curve, hi, cfg);
    if (mode == IntegralMode::multivariate) return x;
    PoincareObject res;
    if (x.poly)
        res.series = specialize_diagonal(x.poly->truncate(hi));
    else
        res.series = specialize_diagonal(*x.series);
    return res;
}

bool VerifyReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const VerifyEntry& e) { return e.pass; });
}

std::string VerifyReport::to_string() const {
    std::string s;
    for (const auto& e : entries)
        s += (e.pass ? "PASS " : "FAIL ") + e.name + (e.detail.empty() ? "" : "  [" + e.detail + "]") +
             "\n";
    return s;
}

MultiIndex default_window(const DualGraph& graph, long long margin) {
    auto mult = solve_multiplicities(graph);
    MultiIndex hi = MultiIndex::zeros(graph.branch_count());
    for (int i = 0; i < graph.size(); ++i)
        for (int b = 0; b < graph.branch_count(); ++b)
            hi[b] = std::max(hi[b], mult.per_branch[i][b]);
    for (int b = 0; b < graph.branch_count(); ++b) hi[b] += margin;
    return hi;
}

namespace {

VerifyEntry compare_polys(const std::string& name, const IntPolynomial& a, const IntPolynomial& b,
                          const std::string& window_note) {
    VerifyEntry e{name, false, ""};
    IntPolynomial diff = a - b;
    if (diff.is_zero()) {
        e.pass = true;
        e.detail = window_note;
    } else {
        e.detail = "first discrepancy at " + diff.terms().begin()->first.to_string() + "; " +
                   window_note;
    }
    return e;
}

VerifyEntry compare_series(const std::string& name, const TruncatedSeries& a,
                           const TruncatedSeries& b, const std::string& window_note) {
    VerifyEntry e{name, false, ""};
    if (a.agrees_with(b)) {
        e.pass = true;
        e.detail = window_note;
        return e;
    }
    MultiIndex w = a.window();
    for (int i = 0; i < w.arity(); ++i) w[i] = std::min(w[i], b.window()[i]);
    BoxIter it(MultiIndex::zeros(w.arity()), w);
    do {
        if (a.coeff(it.current()) != b.coeff(it.current())) {
            e.detail = "first discrepancy at " + it.current().to_string() + "; " + window_note;
            return e;
        }
    } while (it.next());
    e.detail = "disagreement outside scanned window; " + window_note;
    return e;
}

}  // namespace

VerifyReport verify_curve(const CurveModel& curve, const DualGraph& graph, const JetConfig& cfg) {
    VerifyReport report;
    const int r = curve.branch_count();
    if (graph.branch_count() != r)
        throw ArityError("curve and graph disagree on the number of branches");

    MultiIndex hi = default_window(graph);
    MultiIndex lo = MultiIndex::constant(r, -2);
    const std::string wnote = "window " + lo.to_string() + ".." + hi.to_string();

    LaurentWindow lw = build_laurent_window(curve, lo, hi, cfg);
    PoincareObject p = poincare_from_jets(lw);
    PoincareObject x = x_series(curve, hi, cfg);
    AlexanderResult alex = alexander_polynomial(graph);
    ProductForm zeta = acampo_zeta(graph);
    long long diag_bound = hi.norm();

    if (r == 1) {
        TruncatedSeries zeta_exp = expand_product_form(zeta, hi);
        report.entries.push_back(
            compare_series("thm1_poincare_equals_zeta", *p.series, zeta_exp, wnote));
        report.entries.push_back(compare_series("thm2_x_equals_p", *x.series, *p.series, wnote));
    } else {
        report.entries.push_back(compare_polys("thm4_alexander_equals_x", *alex.poly, *x.poly, wnote));
        report.entries.push_back(compare_polys("thm4_x_equals_p", *x.poly, *p.poly, wnote));
        report.entries.push_back(compare_polys("thm2_x_equals_p", *x.poly, *p.poly, wnote));
        TruncatedSeries diag =
            specialize_diagonal(*alex.poly).truncate(MultiIndex{diag_bound});
        TruncatedSeries zeta_exp = expand_product_form(specialize_diagonal(zeta),
                                                       MultiIndex{diag_bound});
        report.entries.push_back(
            compare_series("diagonal_alexander_equals_zeta", diag, zeta_exp, wnote));
    }
    return report;
}

}  // namespace singcurve
