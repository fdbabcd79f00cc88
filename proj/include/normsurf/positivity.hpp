// Anticanonical and log-anticanonical positivity on the contracted surface.
//
// Every verdict here is scoped to a declared list of curve classes; it is a
// statement about those classes only, never about the full cone of curves.
// The reports record the tested values so a failing class is always
// exhibited with its pairing.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normsurf/contraction.hpp"

namespace normsurf {

enum class PositivityVerdict { StrictlyPositive, NefNotStrict, NotNef };

std::string to_string(PositivityVerdict v);
PositivityVerdict positivity_verdict_from_string(const std::string& s);

struct LabeledClass {
    std::string label;
    DivisorClass cls;
};

struct PositivityEntry {
    std::string label;
    Rational value;

    bool operator==(const PositivityEntry&) const = default;
};

struct PositivityReport {
    std::string tested;                    // description of the tested divisor
    std::vector<PositivityEntry> per_class;
    PositivityVerdict verdict = PositivityVerdict::StrictlyPositive;
    std::optional<std::string> witness;    // failing class when not strictly positive
    Rational self_intersection;

    bool operator==(const PositivityReport&) const = default;
};

// pullback of -K_Y, i.e. pi^*(-K_X).
PullbackResult anticanonical_on_X(const ContractionConfig& config);

// K_X^2 = intersect_on_X(K_Y, K_Y).
Rational k_squared_on_X(const ContractionConfig& config);

// Pairs -K_X against each declared class (classes equal to an exceptional
// curve are rejected). verdict: STRICTLY_POSITIVE when every value is > 0,
// NEF_NOT_STRICT when all are >= 0 and some value is 0, NOT_NEF otherwise;
// the witness is the first zero resp. first negative entry.
PositivityReport strict_nef_report(const ContractionConfig& config,
                                   const std::vector<LabeledClass>& classes);

struct DelPezzoVerdict {
    bool numerical_del_pezzo = false;
    PositivityReport report;
};

// (-K_X)^2 > 0 and -K_X strictly positive over the declared classes.
DelPezzoVerdict numerical_delpezzo(const ContractionConfig& config,
                                   const std::vector<LabeledClass>& classes);

// Same report for -(K_Y + B) where B is the boundary's class on Y. A zero
// boundary gives exactly strict_nef_report. The boundary must not be one of
// the contracted curves; log terminality of the pair is not checked here.
PositivityReport log_strict_nef(const ContractionConfig& config,
                                const DivisorClass& boundary,
                                const std::vector<LabeledClass>& classes);

// Closed form a^2 e for the self-intersection of the contracted canonical
// class in the ruled case, cross-checked internally against the lattice:
// D = a*C0 + (a e)*F satisfies D.C0 = 0, D.F = a, D^2 = a^2 e. Requires
// a > 0 and e >= 1.
Rational ruled_case_ksq(const Rational& a, long long e);

enum class TheoremIVerdict { Consistent, NotApplicable, Violation };

std::string to_string(TheoremIVerdict v);
TheoremIVerdict theorem_i_verdict_from_string(const std::string& s);

struct TheoremICheck {
    TheoremIVerdict verdict = TheoremIVerdict::NotApplicable;
    PositivityReport report; // full witness data
    Rational k_squared;

    bool operator==(const TheoremICheck&) const = default;
};

// Consistency instance of "strictly nef anticanonical implies (-K)^2 > 0".
// STRICTLY_POSITIVE over a nonempty class list with k^2 <= 0 yields
// Violation: against a generating list of curve classes that means an
// implementation bug; against a partial list it only shows the list misses
// curves. An empty list carries no evidence and yields NotApplicable.
TheoremICheck theorem_i_instance_check(const ContractionConfig& config,
                                       const std::vector<LabeledClass>& classes);

} // namespace normsurf
