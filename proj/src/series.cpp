#include "singcurve/series.hpp"

#include <algorithm>
#include <sstream>

#include "singcurve/errors.hpp"

namespace singcurve {

namespace {

void check_same_arity(int a, int b, const char* what) {
    if (a != b)
        throw ArityError(std::string(what) + ": arity mismatch " + std::to_string(a) + " vs " +
                         std::to_string(b));
}

MultiIndex min_window(const MultiIndex& a, const MultiIndex& b) {
    a.check_arity(b);
    MultiIndex w = a;
    for (int i = 0; i < w.arity(); ++i) w[i] = std::min(a[i], b[i]);
    return w;
}

std::string term_to_string(const MultiIndex& v, const mpz_class& c) {
    std::ostringstream os;
    os << c.get_str();
    for (int i = 0; i < v.arity(); ++i) {
        if (v[i] == 0) continue;
        os << "*t" << (i + 1) << "^" << v[i];
    }
    return os.str();
}

std::string terms_to_string(const std::map<MultiIndex, mpz_class>& terms) {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [v, c] : terms) {
        if (!first) s += " + ";
        s += term_to_string(v, c);
        first = false;
    }
    return s;
}

}  // namespace

// --- TruncatedSeries ------------------------------------------------------

TruncatedSeries::TruncatedSeries(int r, MultiIndex window) : r_(r), window_(std::move(window)) {
    if (r_ < 1) throw ArityError("series arity must be >= 1");
    if (window_.arity() != r_) throw ArityError("window arity mismatch");
    if (!window_.is_finite() || !window_.geq_zero())
        throw ArityError("window must be finite and nonnegative");
}

mpz_class TruncatedSeries::coeff(const MultiIndex& v) const {
    auto it = coeffs_.find(v);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

void TruncatedSeries::add_term(const MultiIndex& v, const mpz_class& c) {
    if (c == 0) return;
    if (!v.is_finite()) return;  // t^inf = 0
    if (!v.geq_zero() || !v.leq(window_)) return;
    mpz_class& slot = coeffs_[v];
    slot += c;
    if (slot == 0) coeffs_.erase(v);
}

TruncatedSeries TruncatedSeries::restricted(const MultiIndex& window) const {
    TruncatedSeries res(r_, min_window(window_, window));
    for (const auto& [v, c] : coeffs_) res.add_term(v, c);
    return res;
}

TruncatedSeries TruncatedSeries::one(int r, const MultiIndex& window) {
    TruncatedSeries s(r, window);
    s.add_term(MultiIndex::zeros(r), 1);
    return s;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& o) const {
    if (r_ != o.r_) return false;
    MultiIndex w = min_window(window_, o.window_);
    return restricted(w).coeffs() == o.restricted(w).coeffs();
}

std::string TruncatedSeries::to_string() const { return terms_to_string(coeffs_); }

// --- IntPolynomial --------------------------------------------------------

mpz_class IntPolynomial::coeff(const MultiIndex& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void IntPolynomial::add_term(const MultiIndex& v, const mpz_class& c) {
    if (c == 0) return;
    if (v.arity() != r_) throw ArityError("polynomial term arity mismatch");
    if (!v.is_finite()) return;  // t^inf = 0
    mpz_class& slot = terms_[v];
    slot += c;
    if (slot == 0) terms_.erase(v);
}

IntPolynomial IntPolynomial::monomial(int r, const MultiIndex& v, const mpz_class& c) {
    IntPolynomial p(r);
    p.add_term(v, c);
    return p;
}

IntPolynomial IntPolynomial::one(int r) { return monomial(r, MultiIndex::zeros(r), 1); }

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    check_same_arity(r_, o.r_, "poly add");
    IntPolynomial res(*this);
    for (const auto& [v, c] : o.terms_) res.add_term(v, c);
    return res;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    check_same_arity(r_, o.r_, "poly sub");
    IntPolynomial res(*this);
    for (const auto& [v, c] : o.terms_) res.add_term(v, -c);
    return res;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    check_same_arity(r_, o.r_, "poly mul");
    IntPolynomial res(r_);
    for (const auto& [va, ca] : terms_)
        for (const auto& [vb, cb] : o.terms_) res.add_term(va + vb, ca * cb);
    return res;
}

TruncatedSeries IntPolynomial::truncate(const MultiIndex& window) const {
    TruncatedSeries s(r_, window);
    for (const auto& [v, c] : terms_) s.add_term(v, c);
    return s;
}

std::string IntPolynomial::to_string() const { return terms_to_string(terms_); }

// --- ProductForm ----------------------------------------------------------

void ProductForm::set_prefactor(const mpz_class& coef, const MultiIndex& exp) {
    if (exp.arity() != r_) throw ArityError("prefactor arity mismatch");
    prefactor_coef_ = coef;
    prefactor_exp_ = exp;
}

void ProductForm::push_factor(const MultiIndex& m, long long e) {
    if (m.arity() != r_) throw ArityError("factor arity mismatch");
    if (e == 0) return;
    for (auto& f : factors_) {
        if (f.m == m) {
            f.e += e;
            if (f.e == 0) {
                f = factors_.back();
                factors_.pop_back();
            }
            return;
        }
    }
    factors_.push_back({m, e});
}

ProductForm ProductForm::operator*(const ProductForm& o) const {
    check_same_arity(r_, o.r_, "product form mul");
    ProductForm res(*this);
    res.prefactor_coef_ *= o.prefactor_coef_;
    res.prefactor_exp_ = res.prefactor_exp_ + o.prefactor_exp_;
    for (const auto& f : o.factors_) res.push_factor(f.m, f.e);
    return res;
}

std::string ProductForm::to_string() const {
    std::ostringstream os;
    os << "[" << prefactor_coef_.get_str() << ", " << prefactor_exp_.to_string() << "]";
    // Sort by exponent vector so the serialization is canonical.
    std::vector<Factor> sorted = factors_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Factor& a, const Factor& b) { return a.m < b.m; });
    for (const auto& f : sorted)
        os << " * (1 - t^" << f.m.to_string() << ")^" << f.e;
    return os.str();
}

// --- operations -----------------------------------------------------------

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b,
                           const MultiIndex& window) {
    check_same_arity(a.arity(), b.arity(), "series mul");
    TruncatedSeries res(a.arity(), min_window(window, min_window(a.window(), b.window())));
    for (const auto& [va, ca] : a.coeffs()) {
        if (!va.leq(res.window())) continue;
        for (const auto& [vb, cb] : b.coeffs()) res.add_term(va + vb, ca * cb);
    }
    return res;
}

namespace {

// Multiplies s by (1 - t^m)^e within s's window.
TruncatedSeries apply_factor(TruncatedSeries s, const MultiIndex& m, long long e) {
    const MultiIndex& w = s.window();
    if (!m.is_finite()) return s;  // t^inf = 0, factor is 1
    if (e > 0) {
        TruncatedSeries binom(s.arity(), w);
        binom.add_term(MultiIndex::zeros(s.arity()), 1);
        binom.add_term(m, -1);
        for (long long i = 0; i < e; ++i) s = series_mul(s, binom, w);
        return s;
    }
    // (1 - t^m)^{-1} = sum_{k>=0} t^{km}; km stays in the window for only
    // finitely many k because m >= 0, m != 0.
    TruncatedSeries geo(s.arity(), w);
    MultiIndex km = MultiIndex::zeros(s.arity());
    while (km.leq(w)) {
        geo.add_term(km, 1);
        km = km + m;
    }
    for (long long i = 0; i < -e; ++i) s = series_mul(s, geo, w);
    return s;
}

}  // namespace

TruncatedSeries expand_product_form(const ProductForm& pf, const MultiIndex& window) {
    for (const auto& f : pf.factors()) {
        if (f.m.is_zero()) throw DegenerateFactorError("factor with m = 0");
        if (!f.m.geq_zero()) throw DegenerateFactorError("factor with negative exponent vector");
    }
    TruncatedSeries s(pf.arity(), window);
    s.add_term(pf.prefactor_exp(), pf.prefactor_coef());
    for (const auto& f : pf.factors()) s = apply_factor(std::move(s), f.m, f.e);
    return s;
}

IntPolynomial exact_divide(const IntPolynomial& num, const IntPolynomial& den) {
    check_same_arity(num.arity(), den.arity(), "exact divide");
    if (den.is_zero()) throw NotDivisibleError("division by zero polynomial");

    // Lex division by the largest monomial of den.  The leading monomial of
    // the remainder strictly decreases, so a divisible input terminates after
    // at most |support(q)| * |support(den)| cancellations; the step cap
    // catches the non-divisible runaway case.
    const auto lead_den = std::prev(den.terms().end());
    IntPolynomial q(num.arity());
    IntPolynomial rem = num;
    long long steps = 0;
    const long long step_cap =
        1000 * (static_cast<long long>(num.terms().size()) + 1) *
        (static_cast<long long>(den.terms().size()) + 1);
    while (!rem.is_zero()) {
        if (++steps > step_cap) throw NotDivisibleError("division does not terminate");
        const auto lead_rem = std::prev(rem.terms().end());
        mpz_class c = lead_rem->second / lead_den->second;
        if (c * lead_den->second != lead_rem->second)
            throw NotDivisibleError("leading coefficient not divisible");
        MultiIndex shift = lead_rem->first - lead_den->first;
        IntPolynomial t = IntPolynomial::monomial(num.arity(), shift, c);
        q = q + t;
        rem = rem - t * den;
        // A non-divisible input eventually pushes the leading monomial below
        // every monomial of num in lex order without reaching zero.
    }
    return q;
}

TruncatedSeries symmetric_power_series(long long c, long long bound) {
    TruncatedSeries s(1, MultiIndex{bound});
    // binom(c+k-1, k) via the recurrence b_{k+1} = b_k * (c+k) / (k+1),
    // valid for any integer c (signed-binomial convention).
    mpq_class b = 1;
    for (long long k = 0; k <= bound; ++k) {
        if (b.get_den() != 1) throw std::logic_error("non-integral binomial");
        s.add_term(MultiIndex{k}, b.get_num());
        b *= mpq_class(static_cast<long>(c + k), static_cast<long>(k + 1));
        b.canonicalize();
    }
    return s;
}

ProductForm specialize_diagonal(const ProductForm& pf) {
    ProductForm res(1);
    res.set_prefactor(pf.prefactor_coef(), MultiIndex{pf.prefactor_exp().norm()});
    for (const auto& f : pf.factors()) res.push_factor(MultiIndex{f.m.norm()}, f.e);
    return res;
}

IntPolynomial specialize_diagonal(const IntPolynomial& p) {
    IntPolynomial res(1);
    for (const auto& [v, c] : p.terms()) res.add_term(MultiIndex{v.norm()}, c);
    return res;
}

TruncatedSeries specialize_diagonal(const TruncatedSeries& s) {
    long long w = s.window()[0];
    for (int i = 1; i < s.arity(); ++i) w = std::min(w, s.window()[i]);
    TruncatedSeries res(1, MultiIndex{w});
    for (const auto& [v, c] : s.coeffs()) res.add_term(MultiIndex{v.norm()}, c);
    return res;
}

}  // namespace singcurve
