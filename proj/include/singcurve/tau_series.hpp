#pragma once

#include <gmpxx.h>

#include <vector>

#include "singcurve/errors.hpp"
#include "singcurve/multi_index.hpp"

namespace singcurve {

// Truncated power series in one variable tau with exact rational
// coefficients; coefficients are valid for exponents 0..trunc().
class TauSeries {
public:
    explicit TauSeries(long long trunc) : coeffs_(trunc + 1, 0) {}

    long long trunc() const { return static_cast<long long>(coeffs_.size()) - 1; }
    const mpq_class& coeff(long long k) const { return coeffs_[k]; }

    void set_coeff(long long k, const mpq_class& c) {
        if (k <= trunc()) coeffs_[k] = c;
    }

    static TauSeries monomial(long long exp, const mpq_class& c, long long trunc) {
        TauSeries s(trunc);
        s.set_coeff(exp, c);
        return s;
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    // Order of the first nonzero coefficient; kInfinity when none is visible
    // within the truncation (the caller decides whether that is certain).
    long long ord() const {
        for (long long k = 0; k <= trunc(); ++k)
            if (coeffs_[k] != 0) return k;
        return kInfinity;
    }

    mpq_class leading() const {
        long long o = ord();
        return o == kInfinity ? mpq_class(0) : coeffs_[o];
    }

    TauSeries operator+(const TauSeries& o) const {
        TauSeries r(std::min(trunc(), o.trunc()));
        for (long long k = 0; k <= r.trunc(); ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
        return r;
    }

    TauSeries operator-(const TauSeries& o) const {
        TauSeries r(std::min(trunc(), o.trunc()));
        for (long long k = 0; k <= r.trunc(); ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
        return r;
    }

    TauSeries operator*(const TauSeries& o) const {
        TauSeries r(std::min(trunc(), o.trunc()));
        for (long long i = 0; i <= r.trunc(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (long long j = 0; i + j <= r.trunc(); ++j) {
                if (o.coeffs_[j] == 0) continue;
                r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
            }
        }
        return r;
    }

    TauSeries scaled(const mpq_class& c) const {
        TauSeries r = *this;
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }

    // Quotient *this / o, defined when ord(o) <= ord(*this); the result is
    // valid to truncation trunc() - ord(o).
    TauSeries divided_by(const TauSeries& o) const {
        long long ob = o.ord();
        if (ob == kInfinity) throw PrecisionError("division by (apparently) zero tau-series");
        long long oa = ord();
        if (oa != kInfinity && oa < ob)
            throw PrecisionError("tau-series quotient would have a pole");
        long long rt = std::min(trunc(), o.trunc()) - ob;
        if (rt < 0) throw PrecisionError("tau-series truncation exhausted");
        // Shift both down by ob, then multiply by the inverse of the unit.
        TauSeries num(rt), unit(rt);
        for (long long k = 0; k <= rt; ++k) {
            num.coeffs_[k] = coeffs_[k + ob];
            unit.coeffs_[k] = o.coeffs_[k + ob];
        }
        TauSeries inv(rt);
        inv.coeffs_[0] = 1 / unit.coeffs_[0];
        for (long long k = 1; k <= rt; ++k) {
            mpq_class acc = 0;
            for (long long j = 1; j <= k; ++j) acc += unit.coeffs_[j] * inv.coeffs_[k - j];
            inv.coeffs_[k] = -acc / unit.coeffs_[0];
        }
        return num * inv;
    }

private:
    std::vector<mpq_class> coeffs_;
};

}  // namespace singcurve
