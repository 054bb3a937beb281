#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "singcurve/multi_index.hpp"
#include "singcurve/tau_series.hpp"

namespace singcurve {

// Truncated parameterization of one branch: exact polynomial data in tau,
// materialized as truncated series at any requested order.
class BranchParam {
public:
    // term lists of (exponent, coefficient) pairs
    BranchParam(std::vector<std::pair<long long, mpq_class>> x_terms,
                std::vector<std::pair<long long, mpq_class>> y_terms);

    TauSeries x(long long trunc) const;
    TauSeries y(long long trunc) const;

    // Smallest of the two orders; positive by the invariant.
    long long param_order() const;
    // Largest tau-exponent appearing in either coordinate.
    long long param_degree() const;

private:
    std::vector<std::pair<long long, mpq_class>> x_terms_, y_terms_;
};

// Polynomial germ in two variables with exact rational coefficients,
// keyed by (deg_x, deg_y).
class Germ {
public:
    Germ() = default;

    const std::map<std::pair<long long, long long>, mpq_class>& terms() const { return terms_; }
    void add_term(long long i, long long j, const mpq_class& c);
    long long total_degree() const;
    bool is_zero() const { return terms_.empty(); }

    static Germ monomial(long long i, long long j, const mpq_class& c = 1);

    Germ operator+(const Germ& o) const;
    Germ operator*(const Germ& o) const;

private:
    std::map<std::pair<long long, long long>, mpq_class> terms_;
};

class CurveModel {
public:
    explicit CurveModel(std::vector<BranchParam> branches);

    int branch_count() const { return static_cast<int>(branches_.size()); }
    const BranchParam& branch(int i) const { return branches_[i]; }

private:
    std::vector<BranchParam> branches_;
};

struct OrderLeading {
    long long order;     // kInfinity when g vanishes on the branch
    mpq_class leading;   // undefined (0) for infinite order
};

// Order and leading coefficient of g along a branch; `trunc` is the
// certainty bound (orders beyond trunc/2 are refused with PrecisionError,
// all coefficients zero up to trunc reports infinity).
OrderLeading order_and_leading(const Germ& g, const BranchParam& b, long long trunc);

struct FiberReport {
    MultiIndex v;
    std::map<std::vector<int>, long long> dims;  // subset I (sorted indices) -> dim
    long long chi_pf = 0;
    long long cv = 0;
};

// Precision ladder configuration; `cap` bounds the jet degree the ladder may
// reach (also settable through SINGCURVE_PRECISION_CAP).
struct JetConfig {
    long long jet_cap = 256;
    static JetConfig from_env();
};

// dim { g : deg g <= N, v_i(g) >= v_i for all i }, by exact rank of the
// vanishing-constraint matrix.
long long jet_subspace_dim(const CurveModel& curve, const MultiIndex& v, long long n_deg);

// dim J(v)/J(v+1), stabilized over the jet degree.
long long c_of_v(const CurveModel& curve, const MultiIndex& v, const JetConfig& cfg = {});

FiberReport fiber_report(const CurveModel& curve, const MultiIndex& v,
                         const JetConfig& cfg = {});

// True iff adding any of the sampled perturbations with monomial degree
// >= 1 + max v_i leaves order and leading coefficient unchanged.
bool jet_determinacy_check(const CurveModel& curve, const Germ& g, const MultiIndex& v,
                           const JetConfig& cfg = {});

}  // namespace singcurve
