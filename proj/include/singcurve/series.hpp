#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singcurve/multi_index.hpp"

namespace singcurve {

// Exact-integer-coefficient power series truncated to a box window [0, window].
// Absent keys denote zero; keys outside the window are never stored.
class TruncatedSeries {
public:
    TruncatedSeries(int r, MultiIndex window);

    int arity() const { return r_; }
    const MultiIndex& window() const { return window_; }
    const std::map<MultiIndex, mpz_class>& coeffs() const { return coeffs_; }

    mpz_class coeff(const MultiIndex& v) const;
    // Drops the term silently when v lies outside the window or is infinite.
    void add_term(const MultiIndex& v, const mpz_class& c);

    TruncatedSeries restricted(const MultiIndex& window) const;

    static TruncatedSeries one(int r, const MultiIndex& window);

    // Exact equality on the common (componentwise min) window.
    bool agrees_with(const TruncatedSeries& o) const;

    std::string to_string() const;

private:
    int r_;
    MultiIndex window_;
    std::map<MultiIndex, mpz_class> coeffs_;
};

// Laurent polynomial with exact integer coefficients and finite support;
// negative exponents are allowed.  Zero coefficients are never stored.
class IntPolynomial {
public:
    explicit IntPolynomial(int r) : r_(r) {}

    int arity() const { return r_; }
    const std::map<MultiIndex, mpz_class>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    mpz_class coeff(const MultiIndex& v) const;
    void add_term(const MultiIndex& v, const mpz_class& c);

    static IntPolynomial monomial(int r, const MultiIndex& v, const mpz_class& c);
    static IntPolynomial one(int r);

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;

    bool operator==(const IntPolynomial& o) const { return r_ == o.r_ && terms_ == o.terms_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    TruncatedSeries truncate(const MultiIndex& window) const;

    std::string to_string() const;

private:
    int r_;
    std::map<MultiIndex, mpz_class> terms_;
};

// Formal product  coef * t^exp * PROD_k (1 - t^{m_k})^{e_k}.
// Factors with equal m are merged on insertion; zero exponents are dropped.
// Two ProductForms compare only through expansion to a common window.
class ProductForm {
public:
    struct Factor {
        MultiIndex m;
        long long e;
    };

    explicit ProductForm(int r)
        : r_(r), prefactor_coef_(1), prefactor_exp_(MultiIndex::zeros(r)) {}

    int arity() const { return r_; }
    const mpz_class& prefactor_coef() const { return prefactor_coef_; }
    const MultiIndex& prefactor_exp() const { return prefactor_exp_; }
    const std::vector<Factor>& factors() const { return factors_; }

    void set_prefactor(const mpz_class& coef, const MultiIndex& exp);
    // Multiplies in (1 - t^m)^e.
    void push_factor(const MultiIndex& m, long long e);

    // Factor-list concatenation (product of the represented functions).
    ProductForm operator*(const ProductForm& o) const;

    std::string to_string() const;

private:
    int r_;
    mpz_class prefactor_coef_;
    MultiIndex prefactor_exp_;
    std::vector<Factor> factors_;
};

// --- operations -----------------------------------------------------------

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b,
                           const MultiIndex& window);

TruncatedSeries expand_product_form(const ProductForm& pf, const MultiIndex& window);

// Exact quotient num/den; throws NotDivisibleError when the division leaves
// a remainder.
IntPolynomial exact_divide(const IntPolynomial& num, const IntPolynomial& den);

// sum_k binom(c+k-1, k) t^k for k <= bound; equals the expansion of (1-t)^{-c}.
TruncatedSeries symmetric_power_series(long long c, long long bound);

// t_i := t for all i.
ProductForm specialize_diagonal(const ProductForm& pf);
IntPolynomial specialize_diagonal(const IntPolynomial& p);
TruncatedSeries specialize_diagonal(const TruncatedSeries& s);

}  // namespace singcurve
