#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singcurve/graph.hpp"
#include "singcurve/jets.hpp"
#include "singcurve/series.hpp"

namespace singcurve {

// Window of jet-quotient dimensions c(v) over the box [lo, hi].
struct LaurentWindow {
    int r = 1;
    MultiIndex lo, hi;
    std::map<MultiIndex, long long> values;

    long long at(const MultiIndex& v) const {
        auto it = values.find(v);
        if (it == values.end()) throw MarginError("c(v) queried outside window at " + v.to_string());
        return it->second;
    }
};

// Polynomial for r > 1, series for r = 1.
struct PoincareObject {
    std::optional<IntPolynomial> poly;
    std::optional<TruncatedSeries> series;

    std::string to_string() const;
};

LaurentWindow build_laurent_window(const CurveModel& curve, const MultiIndex& lo,
                                   const MultiIndex& hi, const JetConfig& cfg = {});

// L * prod(t_i - 1); support certified strictly interior to the window.
IntPolynomial p_prime(const LaurentWindow& lw);

PoincareObject poincare_from_jets(const LaurentWindow& lw);

PoincareObject x_series(const CurveModel& curve, const MultiIndex& hi, const JetConfig& cfg = {});

enum class IntegralMode { multivariate, diagonal };

PoincareObject euler_integral(const CurveModel& curve, const MultiIndex& hi, IntegralMode mode,
                              const JetConfig& cfg = {});

struct VerifyEntry {
    std::string name;
    bool pass = false;
    std::string detail;  // witnessing window / first discrepancy
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    bool all_pass() const;
    std::string to_string() const;
};

// Runs the cross-pipeline coincidence checks for a paired curve/graph
// fixture describing the same singularity.
VerifyReport verify_curve(const CurveModel& curve, const DualGraph& graph,
                          const JetConfig& cfg = {});

// Window heuristic shared with the CLI: componentwise max branch
// multiplicity over the graph, plus margin.
MultiIndex default_window(const DualGraph& graph, long long margin = 2);

}  // namespace singcurve
