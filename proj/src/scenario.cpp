#include "normsurf/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json_util.hpp"

namespace normsurf {

namespace {

using nlohmann::json;
using namespace jsonutil;

ClassSpec parse_class_spec(const json& v, const std::string& path) {
    require_object(v, path);
    check_keys(v, path, {"label", "coeffs", "plane_curve"});
    ClassSpec spec;
    if (v.contains("label")) {
        spec.label = string_field(v["label"], path + ".label");
    }
    const bool has_coeffs = v.contains("coeffs");
    const bool has_curve = v.contains("plane_curve");
    if (has_coeffs == has_curve) {
        fail(path, "expected exactly one of \"coeffs\" and \"plane_curve\"");
    }
    if (has_coeffs) {
        spec.data = rational_vector(v["coeffs"], path + ".coeffs");
    } else {
        const json& pc = require_object(v["plane_curve"], path + ".plane_curve");
        check_keys(pc, path + ".plane_curve", {"degree", "mults"});
        PlaneCurveSpec curve;
        curve.degree = int_field(require_field(pc, "degree", path + ".plane_curve"),
                                 path + ".plane_curve.degree");
        const json& mults = require_array(
            require_field(pc, "mults", path + ".plane_curve"),
            path + ".plane_curve.mults");
        for (std::size_t i = 0; i < mults.size(); ++i) {
            curve.mults.push_back(int_field(
                mults[i], path + ".plane_curve.mults[" + std::to_string(i) + "]"));
        }
        spec.data = std::move(curve);
    }
    return spec;
}

ModelSpec parse_model(const json& v, const std::string& path) {
    require_object(v, path);
    const std::string type =
        string_field(require_field(v, "type", path), path + ".type");

    ModelSpec model;
    if (type == "blowup_plane") {
        check_keys(v, path, {"type", "n"});
        model.kind = ModelKind::BlowupPlane;
        model.n = int_field(require_field(v, "n", path), path + ".n");
    } else if (type == "ruled") {
        check_keys(v, path, {"type", "g", "e"});
        model.kind = ModelKind::Ruled;
        model.g = int_field(require_field(v, "g", path), path + ".g");
        model.e = int_field(require_field(v, "e", path), path + ".e");
    } else if (type == "explicit") {
        check_keys(v, path, {"type", "rank", "gram", "canonical", "chi0", "labels"});
        model.kind = ModelKind::Explicit;
        const json& gram = require_array(require_field(v, "gram", path), path + ".gram");
        for (std::size_t i = 0; i < gram.size(); ++i) {
            model.gram.push_back(
                rational_vector(gram[i], path + ".gram[" + std::to_string(i) + "]"));
        }
        model.canonical = rational_vector(require_field(v, "canonical", path),
                                          path + ".canonical");
        model.chi0 = rational_field(require_field(v, "chi0", path), path + ".chi0");
        if (v.contains("rank")) {
            const long long rank = int_field(v["rank"], path + ".rank");
            if (rank < 0 || static_cast<std::size_t>(rank) != model.gram.size()) {
                fail(path + ".rank", "declared rank " + std::to_string(rank) +
                                         " does not match a " +
                                         std::to_string(model.gram.size()) +
                                         "-row gram matrix");
            }
        }
        if (v.contains("labels")) {
            const json& labels = require_array(v["labels"], path + ".labels");
            for (std::size_t i = 0; i < labels.size(); ++i) {
                model.labels.push_back(string_field(
                    labels[i], path + ".labels[" + std::to_string(i) + "]"));
            }
        }
    } else {
        fail(path + ".type", "unknown model type \"" + type +
                                 "\" (expected blowup_plane, ruled, or explicit)");
    }
    return model;
}

} // namespace

Scenario parse_scenario(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    require_object(root, "scenario");
    check_keys(root, "scenario",
               {"name", "model", "exceptional", "test_classes", "boundary"});

    Scenario scenario;
    if (root.contains("name")) {
        scenario.name = string_field(root["name"], "name");
    }
    scenario.model = parse_model(require_field(root, "model", "scenario"), "model");

    const json& exc = require_array(require_field(root, "exceptional", "scenario"),
                                    "exceptional");
    if (exc.empty()) fail("exceptional", "must list at least one curve");
    for (std::size_t i = 0; i < exc.size(); ++i) {
        scenario.exceptional.push_back(
            parse_class_spec(exc[i], "exceptional[" + std::to_string(i) + "]"));
    }

    if (root.contains("test_classes")) {
        const json& tc = require_array(root["test_classes"], "test_classes");
        for (std::size_t i = 0; i < tc.size(); ++i) {
            scenario.test_classes.push_back(
                parse_class_spec(tc[i], "test_classes[" + std::to_string(i) + "]"));
        }
    }

    if (root.contains("boundary")) {
        const json& b = require_object(root["boundary"], "boundary");
        check_keys(b, "boundary", {"label", "coeff", "coeffs", "plane_curve"});
        BoundarySpec boundary;
        boundary.label = b.contains("label")
                             ? string_field(b["label"], "boundary.label")
                             : std::string("B");
        boundary.coeff = rational_field(require_field(b, "coeff", "boundary"),
                                        "boundary.coeff");
        json body = b;
        body.erase("coeff");
        if (body.contains("label")) body.erase("label");
        boundary.cls = parse_class_spec(body, "boundary");
        scenario.boundary = std::move(boundary);
    }
    return scenario;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open scenario file \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

namespace {

DivisorClass resolve_class(const ClassSpec& spec,
                           const SurfaceModel& model,
                           const std::string& path) {
    if (const auto* coeffs = std::get_if<RatVec>(&spec.data)) {
        if (coeffs->size() != model.lattice->rank()) {
            fail(path + ".coeffs",
                 "expected " + std::to_string(model.lattice->rank()) +
                     " coefficients, got " + std::to_string(coeffs->size()));
        }
        return DivisorClass(model.lattice, *coeffs);
    }
    const auto& curve = std::get<PlaneCurveSpec>(spec.data);
    if (model.kind != ModelKind::BlowupPlane) {
        fail(path + ".plane_curve", "plane curves need a blowup_plane model");
    }
    if (curve.mults.size() != static_cast<std::size_t>(model.blowup_points)) {
        fail(path + ".plane_curve.mults",
             "expected " + std::to_string(model.blowup_points) +
                 " multiplicities, got " + std::to_string(curve.mults.size()));
    }
    return plane_curve_class(model, curve.degree, curve.mults);
}

SurfaceModel build_model(const ModelSpec& spec) {
    switch (spec.kind) {
    case ModelKind::BlowupPlane:
        return blowup_plane(spec.n);
    case ModelKind::Ruled:
        return ruled_surface(spec.g, spec.e);
    case ModelKind::Explicit: {
        std::vector<std::string> labels = spec.labels;
        if (labels.empty()) {
            for (std::size_t i = 0; i < spec.gram.size(); ++i) {
                labels.push_back("v" + std::to_string(i));
            }
        }
        return explicit_model(spec.gram, std::move(labels), spec.canonical, spec.chi0);
    }
    }
    throw InternalError("unhandled model kind");
}

} // namespace

ResolvedScenario resolve_scenario(const Scenario& scenario) {
    ResolvedScenario rs{scenario, build_model(scenario.model), {}, {}, {}, {}, {}};

    for (std::size_t i = 0; i < scenario.exceptional.size(); ++i) {
        const ClassSpec& spec = scenario.exceptional[i];
        rs.exceptional.push_back(
            resolve_class(spec, rs.model, "exceptional[" + std::to_string(i) + "]"));
        rs.exceptional_labels.push_back(
            spec.label.value_or("E" + std::to_string(i)));
    }

    for (std::size_t i = 0; i < scenario.test_classes.size(); ++i) {
        const ClassSpec& spec = scenario.test_classes[i];
        rs.test_classes.push_back(LabeledClass{
            spec.label.value_or("C" + std::to_string(i)),
            resolve_class(spec, rs.model, "test_classes[" + std::to_string(i) + "]")});
    }

    if (scenario.boundary) {
        const BoundarySpec& b = *scenario.boundary;
        if (b.coeff < 0 || b.coeff >= 1) {
            throw ValidationError("boundary coefficient must lie in [0, 1), got " +
                                  to_string(b.coeff));
        }
        rs.boundary = b.coeff * resolve_class(b.cls, rs.model, "boundary");
        rs.boundary_label = b.label;
    }
    return rs;
}

} // namespace normsurf
