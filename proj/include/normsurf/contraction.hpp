// The contraction pi: Y -> X of a negative-definite configuration of curve
// classes, and everything intersection-theoretic that happens on X.
//
// Conventions used throughout (G = Gram matrix of the exceptional classes):
//
//   mumford_pullback(D): total = D + sum a_i E_i with total.E_j = 0 for
//     every j, so G a = -(D.E_j)_j. Exceptional summands already present in
//     D are absorbed into a, i.e. total only sees D modulo the exceptional
//     span.
//
//   discrepancies: K_Y = pi^*K_X + sum alpha_i E_i, so G alpha = (K.E_j)_j
//     and alpha = -a(K_Y).
//
// Distinct exceptional curves must meet nonnegatively and the configuration
// must be negative definite; both are validated once, at construction.
// Connected components of the intersection graph correspond to the singular
// points of X and every per-point question is solved per component.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "normsurf/models.hpp"

namespace normsurf {

struct ContractionConfig {
    LatticePtr lattice;
    std::vector<DivisorClass> exceptional;
    std::vector<std::string> curve_labels;          // one per exceptional curve
    RatMat exc_gram;                                // pairwise intersections
    std::vector<std::vector<std::size_t>> components; // sorted index partition
};

// Validates and assembles a configuration. curve_labels defaults to
// "E0", "E1", ... when empty.
ContractionConfig validate_contraction(const LatticePtr& lattice,
                                       std::vector<DivisorClass> exceptional,
                                       std::vector<std::string> curve_labels = {});

struct PullbackResult {
    DivisorClass total;
    RatVec exceptional_coeffs; // a_i, one per exceptional curve
};

PullbackResult mumford_pullback(const DivisorClass& d, const ContractionConfig& config);

// inner(pullback(a).total, pullback(b).total): the induced pairing on X.
Rational intersect_on_X(const DivisorClass& a,
                        const DivisorClass& b,
                        const ContractionConfig& config);

// alpha_i with K_Y = pi^*K_X + sum alpha_i E_i; <= 0 on minimal resolutions.
RatVec discrepancies(const ContractionConfig& config);

// True iff no exceptional curve is a genus-0 curve of self-intersection -1.
bool is_minimal_configuration(const ContractionConfig& config);

// True iff every discrepancy of the component vanishes. For configurations
// of honest curve classes this is equivalent to "every curve in the
// component has genus 0 and self-intersection -2".
bool is_du_val(const ContractionConfig& config, std::size_t component_index);

struct FundamentalCycle {
    // Multiplicity per member of the component, aligned with
    // config.components[component_index].
    std::vector<long long> multiplicities;
    Rational pa; // arithmetic genus 1 + (Z^2 + Z.K)/2 of the cycle
};

// Laufer's computation: start from the reduced sum over the component and,
// while some E_j meets the cycle positively, add the lowest-indexed such
// E_j. Negative definiteness guarantees termination.
FundamentalCycle fundamental_cycle(const ContractionConfig& config,
                                   std::size_t component_index);

// Artin's numerical criterion: rational iff p_a(Z) = 0.
bool is_rational_singularity(const ContractionConfig& config,
                             std::size_t component_index);

// Least m >= 1 such that m * pullback(D) has integer exceptional
// coefficients. A lower bound for the true Cartier index of the
// pushforward of D; D itself must have integer coefficients.
Integer cartier_index_numerical(const DivisorClass& d, const ContractionConfig& config);

struct ComponentReport {
    std::vector<std::size_t> curve_indices; // into config.exceptional
    std::vector<std::string> curve_labels;
    RatVec genera;                 // arithmetic genus per curve
    RatVec discrepancies;          // per curve
    std::vector<long long> fundamental_cycle;
    Rational pa_fundamental;
    bool du_val = false;
    bool rational = false;
    bool minimal = false;          // no genus-0 (-1)-curve in this component
    Integer cartier_index_k = 1;   // numerical index of K_X at this point

    bool operator==(const ComponentReport&) const = default;
};

struct SingularityReport {
    std::vector<ComponentReport> components;

    bool operator==(const SingularityReport&) const = default;
};

SingularityReport analyze_singularities(const ContractionConfig& config);

} // namespace normsurf
