#include "singcurve/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "singcurve/errors.hpp"

namespace singcurve {

void CharExponents::validate() const {
    if (beta.empty()) throw InvalidCharExponents("empty exponent list");
    if (beta[0] < 1) throw InvalidCharExponents("multiplicity must be positive");
    long long e = beta[0];
    for (size_t j = 1; j < beta.size(); ++j) {
        if (beta[j] <= beta[j - 1])
            throw InvalidCharExponents("exponents must strictly increase");
        long long e_next = std::gcd(e, beta[j]);
        if (e_next >= e)
            throw InvalidCharExponents("gcd sequence must strictly decrease");
        e = e_next;
    }
    if (e != 1) throw InvalidCharExponents("gcd of all exponents must be 1");
}

bool SemigroupElements::contains(long long v) const {
    if (v < 0) return false;
    if (v >= conductor) return true;
    return std::binary_search(elements.begin(), elements.end(), v);
}

std::vector<long long> SemigroupElements::gaps() const {
    std::vector<long long> g;
    for (long long v = 0; v < conductor; ++v)
        if (!std::binary_search(elements.begin(), elements.end(), v)) g.push_back(v);
    return g;
}

SemigroupElements enumerate_semigroup(const std::vector<long long>& gens, long long bound) {
    if (gens.empty()) throw NotCofinite("no generators");
    long long g = 0;
    for (long long x : gens) {
        if (x < 1) throw NotCofinite("generators must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1) throw NotCofinite("gcd of generators is " + std::to_string(g));

    const long long maxgen = *std::max_element(gens.begin(), gens.end());
    long long limit = std::max<long long>(bound, maxgen);

    // Extend until the conductor is certified by a run of max(gens)
    // consecutive members.
    while (true) {
        std::vector<char> in(limit + 1, 0);
        in[0] = 1;
        for (long long v = 0; v <= limit; ++v) {
            if (!in[v]) continue;
            for (long long x : gens)
                if (v + x <= limit) in[v + x] = 1;
        }
        long long run = 0;
        long long conductor = -1;
        for (long long v = 0; v <= limit; ++v) {
            run = in[v] ? run + 1 : 0;
            if (run >= maxgen + 1) {
                conductor = v - run + 1;
                break;
            }
        }
        if (conductor >= 0) {
            SemigroupElements res;
            res.bound = std::max(bound, limit);
            res.conductor = conductor;
            for (long long v = 0; v <= limit; ++v)
                if (in[v]) res.elements.push_back(v);
            return res;
        }
        limit *= 2;
    }
}

BranchSemigroupData branch_data_from_char_exponents(const CharExponents& ce) {
    ce.validate();
    const auto& beta = ce.beta;
    const int s = ce.pairs();

    std::vector<long long> e(s + 1);
    e[0] = beta[0];
    for (int j = 1; j <= s; ++j) e[j] = std::gcd(e[j - 1], beta[j]);

    BranchSemigroupData data;
    data.gens.resize(s + 1);
    data.gens[0] = beta[0];
    if (s >= 1) data.gens[1] = beta[1];
    for (int j = 1; j < s; ++j)
        data.gens[j + 1] = (e[j - 1] / e[j]) * data.gens[j] + beta[j + 1] - beta[j];
    for (int j = 1; j <= s; ++j) {
        data.n.push_back(e[j - 1] / e[j] - 1);
        data.star.push_back((data.n.back() + 1) * data.gens[j]);
    }

    auto en = enumerate_semigroup(data.gens, 0);
    data.conductor = en.conductor;

    // Unique-representation invariant, brute force up to the conductor.
    for (long long v = 0; v <= data.conductor; ++v) {
        bool member = en.contains(v);
        auto rep = unique_representation(v, data);
        if (member != rep.has_value())
            throw InvalidCharExponents("unique representation mismatch at v=" + std::to_string(v));
    }
    return data;
}

ProductForm poincare_closed_form(const BranchSemigroupData& data) {
    ProductForm pf(1);
    for (long long a : data.star) pf.push_factor(MultiIndex{a}, 1);
    for (long long b : data.gens) pf.push_factor(MultiIndex{b}, -1);
    return pf;
}

std::optional<std::vector<long long>> unique_representation(long long v,
                                                            const BranchSemigroupData& data) {
    if (v < 0) return std::nullopt;
    const int s = static_cast<int>(data.n.size());
    std::vector<long long> k(s + 1, 0);
    // Enumerate the bounded coordinates k_1..k_s; the product of the ranges
    // equals beta_0, so this stays small.
    std::optional<std::vector<long long>> found;
    std::vector<long long> cur(s, 0);
    while (true) {
        long long rest = v;
        for (int j = 0; j < s; ++j) rest -= cur[j] * data.gens[j + 1];
        if (rest >= 0 && rest % data.gens[0] == 0) {
            std::vector<long long> rep;
            rep.push_back(rest / data.gens[0]);
            rep.insert(rep.end(), cur.begin(), cur.end());
            if (found)
                throw InvalidCharExponents("representation not unique at v=" + std::to_string(v));
            found = rep;
        }
        int j = s - 1;
        while (j >= 0 && cur[j] == data.n[j]) cur[j--] = 0;
        if (j < 0) break;
        ++cur[j];
    }
    return found;
}

namespace {

// A delta-sequence is free (telescopic) when, for each j >= 1,
// (d_{j-1}/d_j) * delta_j lies in the semigroup generated by the previous
// deltas; in that case the Poincare series has a closed product form.
std::optional<ProductForm> free_closed_form(const std::vector<long long>& delta) {
    if (delta.size() < 2) {
        if (delta.size() == 1 && delta[0] == 1) {
            ProductForm pf(1);
            pf.push_factor(MultiIndex{1}, -1);
            return pf;
        }
        return std::nullopt;
    }
    std::vector<long long> d(delta.size());
    d[0] = delta[0];
    for (size_t j = 1; j < delta.size(); ++j) d[j] = std::gcd(d[j - 1], delta[j]);
    ProductForm pf(1);
    pf.push_factor(MultiIndex{delta[0]}, -1);
    for (size_t j = 1; j < delta.size(); ++j) {
        long long nj = d[j - 1] / d[j];
        long long target = nj * delta[j];
        // Membership in <delta_0..delta_{j-1}> by bounded enumeration; the
        // prefix gcd is d_{j-1}, so scale down first.
        if (target % d[j - 1] != 0) return std::nullopt;
        std::vector<long long> prev(delta.begin(), delta.begin() + j);
        for (auto& x : prev) x /= d[j - 1];
        auto en = enumerate_semigroup(prev, target / d[j - 1]);
        if (!en.contains(target / d[j - 1])) return std::nullopt;
        pf.push_factor(MultiIndex{target}, 1);
        pf.push_factor(MultiIndex{delta[j]}, -1);
    }
    return pf;
}

}  // namespace

InfinityPoincare poincare_at_infinity(const SemigroupAtInfinity& gamma, long long window) {
    auto en = enumerate_semigroup(gamma.delta, std::max(window, 1LL));

    TruncatedSeries series(1, MultiIndex{window});
    for (long long v : en.elements) series.add_term(MultiIndex{v}, 1);
    for (long long v = en.bound + 1; v <= window; ++v) series.add_term(MultiIndex{v}, 1);

    IntPolynomial q(1);
    for (long long v : en.elements)
        if (v < en.conductor) q.add_term(MultiIndex{v}, 1);

    InfinityPoincare res{std::move(series), std::move(q), en.conductor, std::nullopt};

    if (auto pf = free_closed_form(gamma.delta)) {
        // Emit the closed form only when its expansion matches the enumeration.
        auto exp = expand_product_form(*pf, MultiIndex{window});
        if (exp.agrees_with(res.series)) res.closed = pf;
    }
    return res;
}

}  // namespace singcurve
