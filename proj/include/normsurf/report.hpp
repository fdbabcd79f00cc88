// Full analysis of a contraction scenario, with text and machine renderings.
//
// The machine format is JSON with alphabetically ordered keys, schema tag
// "normsurf-report/1", and all rationals rendered as strings. parse_machine
// inverts emit_machine exactly, and re-emitting a parsed report reproduces
// the input byte for byte.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normsurf/contraction.hpp"
#include "normsurf/positivity.hpp"
#include "normsurf/scenario.hpp"

namespace normsurf {

struct ModelSummary {
    std::string kind;        // "blowup_plane" | "ruled" | "explicit"
    long long rank = 0;
    std::vector<std::string> basis; // lattice basis labels
    std::string description;
    Rational chi0;
    bool operator==(const ModelSummary&) const = default;
};

struct Report {
    std::string scenario_name;
    ModelSummary model;
    SingularityReport singularities;
    RatVec anticanonical_coeffs;    // pullback coefficients on the contracted curves
    RatVec anticanonical_total;     // pi^*(-K_X) in lattice basis coordinates
    Rational k_squared;             // (-K_X)^2 = K_X^2
    PositivityReport anticanonical; // -K_X against the declared test classes
    bool numerical_del_pezzo = false;
    std::optional<PositivityReport> log_anticanonical; // -(K_X + B_X), if B given
    TheoremICheck theorem_i;
    bool operator==(const Report&) const = default;
};

Report analyze(const ResolvedScenario& rs);
Report analyze(const Scenario& scenario);

std::string emit_text(const Report& r);
std::string emit_machine(const Report& r);
Report parse_machine(const std::string& json_text);

} // namespace normsurf
