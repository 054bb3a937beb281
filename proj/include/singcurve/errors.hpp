#pragma once

#include <stdexcept>
#include <string>

namespace singcurve {

struct ArityError : std::runtime_error {
    explicit ArityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateFactorError : std::runtime_error {
    explicit DegenerateFactorError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotDivisibleError : std::runtime_error {
    explicit NotDivisibleError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidCharExponents : std::runtime_error {
    explicit InvalidCharExponents(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotCofinite : std::runtime_error {
    explicit NotCofinite(const std::string& msg) : std::runtime_error(msg) {}
};

struct MalformedGraph : std::runtime_error {
    explicit MalformedGraph(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonPolynomialError : std::runtime_error {
    explicit NonPolynomialError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SynthesisError : std::runtime_error {
    explicit SynthesisError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MarginError : std::runtime_error {
    explicit MarginError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FixtureError : std::runtime_error {
    explicit FixtureError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace singcurve
