#pragma once

#include <optional>
#include <string>

#include "singcurve/graph.hpp"
#include "singcurve/jets.hpp"
#include "singcurve/semigroup.hpp"

namespace singcurve {

// One fixture file: any combination of payloads describing (pieces of) a
// singularity.  Payloads appearing together are taken to describe the same
// singularity.
struct FixtureBundle {
    std::string name;
    std::optional<CharExponents> char_exponents;
    std::optional<CurveModel> curve;
    std::optional<DualGraph> graph;
    std::optional<SemigroupAtInfinity> delta_sequence;

    bool has_payload() const {
        return char_exponents || curve || graph || delta_sequence;
    }
};

// Parses a fixture file; throws FixtureError on malformed input and
// MalformedGraph when an embedded graph fails validation.
FixtureBundle load_fixture(const std::string& path);

}  // namespace singcurve
