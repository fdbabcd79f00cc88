#include "normsurf/contraction.hpp"

#include <algorithm>
#include <utility>

namespace normsurf {

namespace {

void require_component(const ContractionConfig& config, std::size_t component_index) {
    if (component_index >= config.components.size()) {
        throw ValidationError("component index " + std::to_string(component_index) +
                              " out of range; configuration has " +
                              std::to_string(config.components.size()) + " components");
    }
}

// rhs[j] = sign * (d . E_j), solved against the exceptional Gram matrix.
RatVec solve_against_curves(const DivisorClass& d,
                            const ContractionConfig& config,
                            int sign) {
    RatVec rhs(config.exceptional.size());
    for (std::size_t j = 0; j < config.exceptional.size(); ++j) {
        rhs[j] = sign * inner(d, config.exceptional[j]);
    }
    return solve_symmetric(config.exc_gram, rhs);
}

} // namespace

ContractionConfig validate_contraction(const LatticePtr& lattice,
                                       std::vector<DivisorClass> exceptional,
                                       std::vector<std::string> curve_labels) {
    if (!lattice) {
        throw ValidationError("contraction needs a lattice");
    }
    if (exceptional.empty()) {
        throw ValidationError("contraction needs at least one exceptional curve");
    }
    for (std::size_t i = 0; i < exceptional.size(); ++i) {
        if (exceptional[i].lattice().get() != lattice.get()) {
            throw LatticeMismatchError("exceptional curve " + std::to_string(i) +
                                       " lives on a different lattice than the model");
        }
        if (exceptional[i].is_zero()) {
            throw ValidationError("exceptional curve " + std::to_string(i) + " is zero");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (exceptional[i] == exceptional[j]) {
                throw ValidationError("exceptional curves " + std::to_string(j) +
                                      " and " + std::to_string(i) +
                                      " are the same class");
            }
        }
    }

    if (curve_labels.empty()) {
        curve_labels.reserve(exceptional.size());
        for (std::size_t i = 0; i < exceptional.size(); ++i) {
            curve_labels.push_back("E" + std::to_string(i));
        }
    } else if (curve_labels.size() != exceptional.size()) {
        throw ValidationError("got " + std::to_string(curve_labels.size()) +
                              " curve labels for " + std::to_string(exceptional.size()) +
                              " exceptional curves");
    }
    for (std::size_t i = 0; i < curve_labels.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (curve_labels[i] == curve_labels[j]) {
                throw ValidationError("duplicate curve label \"" + curve_labels[i] + "\"");
            }
        }
    }

    const std::size_t n = exceptional.size();
    RatMat exc_gram(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            exc_gram[i][j] = exc_gram[j][i] = inner(exceptional[i], exceptional[j]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (exc_gram[i][j] < 0) {
                throw NegativeCrossTermError(
                    "curves " + curve_labels[i] + " and " + curve_labels[j] +
                    " meet negatively (" + to_string(exc_gram[i][j]) +
                    "); distinct contracted curves must meet nonnegatively");
            }
        }
    }
    if (!is_negative_definite(exc_gram)) {
        throw NotNegativeDefiniteError(
            "configuration is not contractible: intersection matrix " +
            format_matrix(exc_gram) + " is not negative definite");
    }

    // Connected components of the dual graph, each sorted, listed by their
    // smallest member.
    std::vector<std::vector<std::size_t>> components;
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> comp;
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::size_t w = 0; w < n; ++w) {
                if (!seen[w] && w != v && exc_gram[v][w] != 0) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }

    ContractionConfig config;
    config.lattice = lattice;
    config.exceptional = std::move(exceptional);
    config.curve_labels = std::move(curve_labels);
    config.exc_gram = std::move(exc_gram);
    config.components = std::move(components);
    return config;
}

PullbackResult mumford_pullback(const DivisorClass& d, const ContractionConfig& config) {
    if (d.lattice().get() != config.lattice.get()) {
        throw LatticeMismatchError("divisor lives on a different lattice than "
                                   "the contraction");
    }
    const RatVec a = solve_against_curves(d, config, -1);
    DivisorClass total = d;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total = total + a[i] * config.exceptional[i];
    }
    return PullbackResult{std::move(total), a};
}

Rational intersect_on_X(const DivisorClass& a,
                        const DivisorClass& b,
                        const ContractionConfig& config) {
    return inner(mumford_pullback(a, config).total, mumford_pullback(b, config).total);
}

RatVec discrepancies(const ContractionConfig& config) {
    const DivisorClass k = canonical_class(config.lattice);
    return solve_against_curves(k, config, +1);
}

bool is_minimal_configuration(const ContractionConfig& config) {
    for (const DivisorClass& e : config.exceptional) {
        if (inner(e, e) == -1 && arithmetic_genus(e) == 0) return false;
    }
    return true;
}

bool is_du_val(const ContractionConfig& config, std::size_t component_index) {
    require_component(config, component_index);
    const RatVec alpha = discrepancies(config);
    for (std::size_t i : config.components[component_index]) {
        if (alpha[i] != 0) return false;
    }
    return true;
}

FundamentalCycle fundamental_cycle(const ContractionConfig& config,
                                   std::size_t component_index) {
    require_component(config, component_index);
    const std::vector<std::size_t>& comp = config.components[component_index];
    const std::size_t m = comp.size();

    std::vector<long long> mult(m, 1);
    const auto pairing_with = [&](std::size_t pos) {
        Rational v = 0;
        for (std::size_t i = 0; i < m; ++i) {
            v += mult[i] * config.exc_gram[comp[i]][comp[pos]];
        }
        return v;
    };

    for (;;) {
        bool bumped = false;
        for (std::size_t pos = 0; pos < m; ++pos) {
            if (pairing_with(pos) > 0) {
                ++mult[pos];
                bumped = true;
                break;
            }
        }
        if (!bumped) break;
    }

    DivisorClass z = zero_class(config.lattice);
    for (std::size_t i = 0; i < m; ++i) {
        z = z + Rational(mult[i]) * config.exceptional[comp[i]];
    }
    FundamentalCycle cycle;
    cycle.multiplicities = std::move(mult);
    cycle.pa = arithmetic_genus(z);
    return cycle;
}

bool is_rational_singularity(const ContractionConfig& config,
                             std::size_t component_index) {
    return fundamental_cycle(config, component_index).pa == 0;
}

Integer cartier_index_numerical(const DivisorClass& d, const ContractionConfig& config) {
    for (const Rational& c : d.coeffs()) {
        if (!is_integral(c)) {
            throw ValidationError("numerical Cartier index needs an integral "
                                  "divisor; got coefficient " + to_string(c));
        }
    }
    return denominator_lcm(mumford_pullback(d, config).exceptional_coeffs);
}

SingularityReport analyze_singularities(const ContractionConfig& config) {
    const RatVec alpha = discrepancies(config);

    SingularityReport report;
    report.components.reserve(config.components.size());
    for (std::size_t ci = 0; ci < config.components.size(); ++ci) {
        const std::vector<std::size_t>& comp = config.components[ci];
        ComponentReport cr;
        cr.curve_indices = comp;
        cr.minimal = true;
        for (std::size_t i : comp) {
            cr.curve_labels.push_back(config.curve_labels[i]);
            cr.genera.push_back(arithmetic_genus(config.exceptional[i]));
            cr.discrepancies.push_back(alpha[i]);
            if (inner(config.exceptional[i], config.exceptional[i]) == -1 &&
                cr.genera.back() == 0) {
                cr.minimal = false;
            }
        }
        const FundamentalCycle cycle = fundamental_cycle(config, ci);
        cr.fundamental_cycle = cycle.multiplicities;
        cr.pa_fundamental = cycle.pa;
        cr.du_val = is_du_val(config, ci);
        cr.rational = cycle.pa == 0;
        cr.cartier_index_k = denominator_lcm(cr.discrepancies);
        report.components.push_back(std::move(cr));
    }
    return report;
}

} // namespace normsurf
