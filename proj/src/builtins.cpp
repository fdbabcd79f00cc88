// Built-in scenarios, embedded verbatim as scenario-file data. The only
// parameter is example-a's section invariant e: applying it rewrites the
// model's "e" and keeps the disjoint section C1 = C0 + e*F in step.

#include "normsurf/scenario.hpp"

namespace normsurf {

namespace {

constexpr const char* kExampleA = R"({
  "name": "example-a",
  "model": {"type": "ruled", "g": 0, "e": 2},
  "exceptional": [
    {"label": "C0", "coeffs": ["1", "0"]}
  ],
  "test_classes": [
    {"label": "F", "coeffs": ["0", "1"]},
    {"label": "C1", "coeffs": ["1", "2"]}
  ]
})";

constexpr const char* kExampleB = R"({
  "name": "example-b",
  "model": {"type": "ruled", "g": 2, "e": 3},
  "exceptional": [
    {"label": "C0", "coeffs": ["1", "0"]}
  ],
  "test_classes": [
    {"label": "F", "coeffs": ["0", "1"]},
    {"label": "C1", "coeffs": ["1", "3"]}
  ]
})";

constexpr const char* kRemark1 = R"({
  "name": "remark-1",
  "model": {"type": "blowup_plane", "n": 12},
  "exceptional": [
    {"label": "C", "plane_curve": {"degree": 3, "mults": [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]}}
  ],
  "test_classes": [
    {"label": "H", "coeffs": ["1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]},
    {"label": "e1", "coeffs": ["0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]},
    {"label": "L12", "plane_curve": {"degree": 1, "mults": [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]}}
  ]
})";

constexpr const char* kDuvalA1 = R"({
  "name": "duval-a1",
  "model": {"type": "blowup_plane", "n": 2},
  "exceptional": [
    {"label": "E0", "coeffs": ["0", "1", "-1"]}
  ],
  "test_classes": [
    {"label": "H", "coeffs": ["1", "0", "0"]}
  ]
})";

constexpr const char* kDuvalA2 = R"({
  "name": "duval-a2",
  "model": {"type": "blowup_plane", "n": 3},
  "exceptional": [
    {"label": "E0", "coeffs": ["0", "1", "-1", "0"]},
    {"label": "E1", "coeffs": ["0", "0", "1", "-1"]}
  ],
  "test_classes": [
    {"label": "H", "coeffs": ["1", "0", "0", "0"]}
  ]
})";

constexpr const char* kDuvalD4 = R"({
  "name": "duval-d4",
  "model": {"type": "blowup_plane", "n": 6},
  "exceptional": [
    {"label": "E0", "coeffs": ["1", "-1", "-1", "-1", "0", "0", "0"]},
    {"label": "E1", "coeffs": ["0", "1", "0", "0", "-1", "0", "0"]},
    {"label": "E2", "coeffs": ["0", "0", "1", "0", "0", "-1", "0"]},
    {"label": "E3", "coeffs": ["0", "0", "0", "1", "0", "0", "-1"]}
  ],
  "test_classes": [
    {"label": "H", "coeffs": ["1", "0", "0", "0", "0", "0", "0"]},
    {"label": "e4", "coeffs": ["0", "0", "0", "0", "1", "0", "0"]}
  ]
})";

struct BuiltinEntry {
    const char* name;
    const char* text;
};

constexpr BuiltinEntry kBuiltins[] = {
    {"example-a", kExampleA}, {"example-b", kExampleB}, {"remark-1", kRemark1},
    {"duval-a1", kDuvalA1},   {"duval-a2", kDuvalA2},   {"duval-d4", kDuvalD4},
};

} // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const BuiltinEntry& entry : kBuiltins) out.emplace_back(entry.name);
        return out;
    }();
    return names;
}

Scenario builtin_scenario(const std::string& name,
                          std::optional<long long> e_param) {
    const char* text = nullptr;
    for (const BuiltinEntry& entry : kBuiltins) {
        if (name == entry.name) {
            text = entry.text;
            break;
        }
    }
    if (!text) {
        std::string known;
        for (const BuiltinEntry& entry : kBuiltins) {
            if (!known.empty()) known += ", ";
            known += entry.name;
        }
        throw ValidationError("unknown builtin \"" + name + "\" (known: " + known + ")");
    }

    Scenario scenario = parse_scenario(text);
    if (e_param) {
        if (name != "example-a") {
            throw ValidationError("builtin \"" + name +
                                  "\" does not take the e parameter");
        }
        if (*e_param < 2) {
            throw ValidationError("example-a needs e >= 2, got " +
                                  std::to_string(*e_param));
        }
        scenario.model.e = *e_param;
        for (ClassSpec& spec : scenario.test_classes) {
            if (spec.label == "C1") {
                spec.data = RatVec{Rational(1), Rational(*e_param)};
            }
        }
    }
    return scenario;
}

} // namespace normsurf
