#pragma once

#include <optional>
#include <vector>

#include "singcurve/series.hpp"

namespace singcurve {

// Characteristic (Puiseux) exponents (beta_0, ..., beta_s) of an irreducible
// plane branch; beta_0 is the multiplicity.
struct CharExponents {
    std::vector<long long> beta;

    int pairs() const { return static_cast<int>(beta.size()) - 1; }
    void validate() const;  // throws InvalidCharExponents
};

// Minimal generators, star multiplicities and conductor of the semigroup of
// values of an irreducible branch.
struct BranchSemigroupData {
    std::vector<long long> gens;   // (gbar_0, ..., gbar_s)
    std::vector<long long> star;   // (abar_1, ..., abar_s)
    std::vector<long long> n;      // abar_j = (n_j + 1) * gbar_j
    long long conductor = 0;
};

struct SemigroupElements {
    std::vector<long long> elements;  // sorted, all members <= bound
    long long bound = 0;
    long long conductor = 0;

    bool contains(long long v) const;
    std::vector<long long> gaps() const;
};

// Generator sequence of a semigroup of pole orders at infinity.
struct SemigroupAtInfinity {
    std::vector<long long> delta;
};

struct InfinityPoincare {
    TruncatedSeries series;             // sum_{i in Gamma, i <= window} t^i
    IntPolynomial q;                    // gap-complement polynomial below the conductor
    long long conductor = 0;            // series = q + t^c/(1-t)
    std::optional<ProductForm> closed;  // present only for free delta-sequences
};

SemigroupElements enumerate_semigroup(const std::vector<long long>& gens, long long bound);

BranchSemigroupData branch_data_from_char_exponents(const CharExponents& ce);

// Eq.-style closed form prod(1 - t^{abar_j}) / prod(1 - t^{gbar_j}).
ProductForm poincare_closed_form(const BranchSemigroupData& data);

// Unique representation v = k_0*gbar_0 + sum k_j*gbar_j with 0 <= k_j <= n_j,
// or nullopt iff v is a gap.
std::optional<std::vector<long long>> unique_representation(long long v,
                                                            const BranchSemigroupData& data);

InfinityPoincare poincare_at_infinity(const SemigroupAtInfinity& gamma, long long window);

}  // namespace singcurve
