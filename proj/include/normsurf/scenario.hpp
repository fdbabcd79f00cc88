// Scenario ingestion: the JSON schema for analysis inputs, plus the
// built-in scenarios.
//
// Schema (all rationals are strings like "-5/3" or "2"; JSON integers are
// also accepted; floats never are):
//
//   {
//     "name": "example-b",
//     "model": {"type": "ruled", "g": 2, "e": 3},
//            | {"type": "blowup_plane", "n": 12}
//            | {"type": "explicit", "rank": 2, "gram": [[..], ..],
//               "canonical": [..], "chi0": "1", "labels": ["E0", ..]},
//     "exceptional": [ <class-spec>, ... ],     // nonempty
//     "test_classes": [ <class-spec>, ... ],    // optional
//     "boundary": {"label": "B", "coeff": "1/2", <class-spec body>}  // optional
//   }
//
// A class-spec is {"label": "C0", "coeffs": ["1", "0"]} or, on blowup_plane
// models, {"label": "L", "plane_curve": {"degree": 1, "mults": [1, 1]}}.
// The boundary coefficient must lie in [0, 1).

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "normsurf/models.hpp"
#include "normsurf/positivity.hpp"

namespace normsurf {

struct PlaneCurveSpec {
    long long degree = 0;
    std::vector<long long> mults;
};

struct ClassSpec {
    std::optional<std::string> label;
    std::variant<RatVec, PlaneCurveSpec> data;
};

struct ModelSpec {
    ModelKind kind = ModelKind::Explicit;
    long long n = 0;  // blowup_plane
    long long g = 0;  // ruled
    long long e = 0;  // ruled
    // explicit
    RatMat gram;
    RatVec canonical;
    Rational chi0;
    std::vector<std::string> labels;
};

struct BoundarySpec {
    std::string label;
    Rational coeff; // in [0, 1)
    ClassSpec cls;
};

struct Scenario {
    std::string name;
    ModelSpec model;
    std::vector<ClassSpec> exceptional;
    std::vector<ClassSpec> test_classes;
    std::optional<BoundarySpec> boundary;
};

// Parsing raises ParseError with the offending field path in the message.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

// Instantiated scenario pieces, ready for analysis.
struct ResolvedScenario {
    Scenario scenario;
    SurfaceModel model;
    std::vector<DivisorClass> exceptional;
    std::vector<std::string> exceptional_labels;
    std::vector<LabeledClass> test_classes;
    std::optional<DivisorClass> boundary; // scaled by its coefficient
    std::optional<std::string> boundary_label;
};

ResolvedScenario resolve_scenario(const Scenario& scenario);

// Built-ins. example-a takes the section invariant e (default 2; e >= 2).
const std::vector<std::string>& builtin_names();
Scenario builtin_scenario(const std::string& name,
                          std::optional<long long> e_param = std::nullopt);

} // namespace normsurf
