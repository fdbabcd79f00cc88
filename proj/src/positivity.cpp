#include "normsurf/positivity.hpp"

namespace normsurf {

std::string to_string(PositivityVerdict v) {
    switch (v) {
    case PositivityVerdict::StrictlyPositive: return "STRICTLY_POSITIVE";
    case PositivityVerdict::NefNotStrict: return "NEF_NOT_STRICT";
    case PositivityVerdict::NotNef: return "NOT_NEF";
    }
    throw InternalError("unhandled positivity verdict");
}

PositivityVerdict positivity_verdict_from_string(const std::string& s) {
    if (s == "STRICTLY_POSITIVE") return PositivityVerdict::StrictlyPositive;
    if (s == "NEF_NOT_STRICT") return PositivityVerdict::NefNotStrict;
    if (s == "NOT_NEF") return PositivityVerdict::NotNef;
    throw ParseError("unknown positivity verdict \"" + s + "\"");
}

std::string to_string(TheoremIVerdict v) {
    switch (v) {
    case TheoremIVerdict::Consistent: return "CONSISTENT";
    case TheoremIVerdict::NotApplicable: return "NOT_APPLICABLE";
    case TheoremIVerdict::Violation: return "VIOLATION";
    }
    throw InternalError("unhandled theorem verdict");
}

TheoremIVerdict theorem_i_verdict_from_string(const std::string& s) {
    if (s == "CONSISTENT") return TheoremIVerdict::Consistent;
    if (s == "NOT_APPLICABLE") return TheoremIVerdict::NotApplicable;
    if (s == "VIOLATION") return TheoremIVerdict::Violation;
    throw ParseError("unknown theorem verdict \"" + s + "\"");
}

PullbackResult anticanonical_on_X(const ContractionConfig& config) {
    return mumford_pullback(-canonical_class(config.lattice), config);
}

Rational k_squared_on_X(const ContractionConfig& config) {
    const DivisorClass k = canonical_class(config.lattice);
    return intersect_on_X(k, k, config);
}

namespace {

void reject_contracted(const ContractionConfig& config,
                       const LabeledClass& lc) {
    for (std::size_t i = 0; i < config.exceptional.size(); ++i) {
        if (lc.cls == config.exceptional[i]) {
            throw ExceptionalClassError(
                "class \"" + lc.label + "\" is the contracted curve " +
                config.curve_labels[i] + "; it maps to a point, not a curve");
        }
    }
}

// Pairs `total` (already orthogonal to the exceptional span) against each
// declared class and classifies the value list.
PositivityReport scoped_report(const ContractionConfig& config,
                               const DivisorClass& minus_total,
                               std::string tested,
                               const std::vector<LabeledClass>& classes) {
    PositivityReport report;
    report.tested = std::move(tested);
    report.self_intersection = inner(minus_total, minus_total);

    std::optional<std::string> first_zero;
    std::optional<std::string> first_negative;
    for (const LabeledClass& lc : classes) {
        reject_contracted(config, lc);
        const Rational value = inner(minus_total, lc.cls);
        report.per_class.push_back({lc.label, value});
        if (value == 0 && !first_zero) first_zero = lc.label;
        if (value < 0 && !first_negative) first_negative = lc.label;
    }

    if (first_negative) {
        report.verdict = PositivityVerdict::NotNef;
        report.witness = first_negative;
    } else if (first_zero) {
        report.verdict = PositivityVerdict::NefNotStrict;
        report.witness = first_zero;
    } else {
        report.verdict = PositivityVerdict::StrictlyPositive;
    }
    return report;
}

} // namespace

PositivityReport strict_nef_report(const ContractionConfig& config,
                                   const std::vector<LabeledClass>& classes) {
    const PullbackResult anti = anticanonical_on_X(config);
    return scoped_report(config, anti.total, "-K_X", classes);
}

DelPezzoVerdict numerical_delpezzo(const ContractionConfig& config,
                                   const std::vector<LabeledClass>& classes) {
    DelPezzoVerdict verdict;
    verdict.report = strict_nef_report(config, classes);
    verdict.numerical_del_pezzo =
        verdict.report.self_intersection > 0 &&
        verdict.report.verdict == PositivityVerdict::StrictlyPositive;
    return verdict;
}

PositivityReport log_strict_nef(const ContractionConfig& config,
                                const DivisorClass& boundary,
                                const std::vector<LabeledClass>& classes) {
    if (boundary.lattice().get() != config.lattice.get()) {
        throw LatticeMismatchError("boundary lives on a different lattice than "
                                   "the contraction");
    }
    for (std::size_t i = 0; i < config.exceptional.size(); ++i) {
        if (boundary == config.exceptional[i]) {
            throw ExceptionalClassError("boundary is the contracted curve " +
                                        config.curve_labels[i]);
        }
    }
    if (boundary.is_zero()) {
        return strict_nef_report(config, classes);
    }
    const DivisorClass log_canonical = canonical_class(config.lattice) + boundary;
    const PullbackResult pulled = mumford_pullback(log_canonical, config);
    return scoped_report(config, -pulled.total, "-(K_X + B)", classes);
}

Rational ruled_case_ksq(const Rational& a, long long e) {
    if (a <= 0) {
        throw ValidationError("ruled-case coefficient must be positive, got " +
                              to_string(a));
    }
    if (e < 1) {
        throw ValidationError("ruled-case invariant e must be at least 1, got " +
                              std::to_string(e));
    }
    const Rational closed_form = a * a * e;

    // The claim is lattice arithmetic, so replay it on the lattice.
    const SurfaceModel model = ruled_surface(0, e);
    const DivisorClass c0 = basis_class(model.lattice, 0);
    const DivisorClass f = basis_class(model.lattice, 1);
    const DivisorClass d = a * c0 + (a * e) * f;
    if (inner(d, c0) != 0 || inner(d, f) != a || inner(d, d) != closed_form) {
        throw InternalError("ruled-case closed form disagrees with the lattice");
    }
    return closed_form;
}

TheoremICheck theorem_i_instance_check(const ContractionConfig& config,
                                       const std::vector<LabeledClass>& classes) {
    TheoremICheck check;
    check.report = strict_nef_report(config, classes);
    check.k_squared = check.report.self_intersection;

    if (classes.empty() ||
        check.report.verdict != PositivityVerdict::StrictlyPositive) {
        // No evidence for the hypothesis: either nothing was tested or
        // strict positivity already fails on the declared classes.
        check.verdict = TheoremIVerdict::NotApplicable;
    } else if (check.k_squared > 0) {
        check.verdict = TheoremIVerdict::Consistent;
    } else {
        check.verdict = TheoremIVerdict::Violation;
    }
    return check;
}

} // namespace normsurf
