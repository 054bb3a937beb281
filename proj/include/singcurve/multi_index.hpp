#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "singcurve/errors.hpp"

namespace singcurve {

// Sentinel for an infinite component of an exponent vector.
inline constexpr long long kInfinity = std::numeric_limits<long long>::max();

// Exponent vector in Z^r with an explicit per-component infinity.
// Addition saturates at infinity; comparison is componentwise.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<long long> entries) : entries_(std::move(entries)) {}
    MultiIndex(std::initializer_list<long long> entries) : entries_(entries) {}

    static MultiIndex zeros(int r) { return MultiIndex(std::vector<long long>(r, 0)); }
    static MultiIndex ones(int r) { return MultiIndex(std::vector<long long>(r, 1)); }
    static MultiIndex constant(int r, long long c) { return MultiIndex(std::vector<long long>(r, c)); }

    int arity() const { return static_cast<int>(entries_.size()); }
    long long operator[](int i) const { return entries_[i]; }
    long long& operator[](int i) { return entries_[i]; }
    const std::vector<long long>& entries() const { return entries_; }

    bool is_finite() const {
        for (long long e : entries_)
            if (e == kInfinity) return false;
        return true;
    }

    bool is_zero() const {
        for (long long e : entries_)
            if (e != 0) return false;
        return true;
    }

    // Sum of components; infinite if any component is.
    long long norm() const {
        long long s = 0;
        for (long long e : entries_) {
            if (e == kInfinity) return kInfinity;
            s += e;
        }
        return s;
    }

    MultiIndex operator+(const MultiIndex& o) const {
        check_arity(o);
        MultiIndex res(*this);
        for (int i = 0; i < arity(); ++i)
            res.entries_[i] = (entries_[i] == kInfinity || o.entries_[i] == kInfinity)
                                  ? kInfinity
                                  : entries_[i] + o.entries_[i];
        return res;
    }

    // Defined only when both operands are finite in every component.
    MultiIndex operator-(const MultiIndex& o) const {
        check_arity(o);
        MultiIndex res(*this);
        for (int i = 0; i < arity(); ++i) res.entries_[i] = entries_[i] - o.entries_[i];
        return res;
    }

    MultiIndex scaled(long long k) const {
        MultiIndex res(*this);
        for (auto& e : res.entries_)
            if (e != kInfinity) e *= k;
        return res;
    }

    // Componentwise partial order.
    bool leq(const MultiIndex& o) const {
        check_arity(o);
        for (int i = 0; i < arity(); ++i)
            if (entries_[i] > o.entries_[i]) return false;
        return true;
    }

    bool geq_zero() const {
        for (long long e : entries_)
            if (e < 0) return false;
        return true;
    }

    bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }
    bool operator!=(const MultiIndex& o) const { return entries_ != o.entries_; }

    // Lexicographic total order, used as the map key order everywhere.
    bool operator<(const MultiIndex& o) const { return entries_ < o.entries_; }

    void check_arity(const MultiIndex& o) const {
        if (arity() != o.arity())
            throw ArityError("arity mismatch: " + std::to_string(arity()) + " vs " +
                             std::to_string(o.arity()));
    }

    std::string to_string() const {
        std::string s = "(";
        for (int i = 0; i < arity(); ++i) {
            if (i) s += ",";
            s += entries_[i] == kInfinity ? std::string("inf") : std::to_string(entries_[i]);
        }
        return s + ")";
    }

private:
    std::vector<long long> entries_;
};

// Iterates over all v in the box [lo, hi] (componentwise, all finite).
// Usage: BoxIter it(lo, hi); do { ... it.current() ... } while (it.next());
class BoxIter {
public:
    BoxIter(const MultiIndex& lo, const MultiIndex& hi) : lo_(lo), hi_(hi), cur_(lo) {
        lo_.check_arity(hi_);
        empty_ = !lo_.leq(hi_);
    }

    bool valid() const { return !empty_; }
    const MultiIndex& current() const { return cur_; }

    bool next() {
        if (empty_) return false;
        for (int i = cur_.arity() - 1; i >= 0; --i) {
            if (cur_[i] < hi_[i]) {
                ++cur_[i];
                for (int j = i + 1; j < cur_.arity(); ++j) cur_[j] = lo_[j];
                return true;
            }
        }
        return false;
    }

private:
    MultiIndex lo_, hi_, cur_;
    bool empty_ = false;
};

}  // namespace singcurve
