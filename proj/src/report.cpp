#include "normsurf/report.hpp"

#include <algorithm>
#include <sstream>

#include "json_util.hpp"

namespace normsurf {

namespace {

using nlohmann::json;
using namespace jsonutil;

std::string kind_name(ModelKind kind) {
    switch (kind) {
    case ModelKind::BlowupPlane: return "blowup_plane";
    case ModelKind::Ruled: return "ruled";
    case ModelKind::Explicit: return "explicit";
    }
    throw InternalError("unhandled model kind");
}

} // namespace

Report analyze(const ResolvedScenario& rs) {
    const ContractionConfig config = validate_contraction(
        rs.model.lattice, rs.exceptional, rs.exceptional_labels);

    Report r;
    r.scenario_name = rs.scenario.name;
    r.model.kind = kind_name(rs.model.kind);
    r.model.rank = static_cast<long long>(rs.model.lattice->rank());
    r.model.basis = rs.model.lattice->labels();
    r.model.description = rs.model.description;
    r.model.chi0 = rs.model.chi0;

    r.singularities = analyze_singularities(config);

    const PullbackResult anti = anticanonical_on_X(config);
    r.anticanonical_coeffs = anti.exceptional_coeffs;
    r.anticanonical_total = anti.total.coeffs();
    r.k_squared = inner(anti.total, anti.total);

    const DelPezzoVerdict dp = numerical_delpezzo(config, rs.test_classes);
    r.anticanonical = dp.report;
    r.numerical_del_pezzo = dp.numerical_del_pezzo;

    if (rs.boundary) {
        r.log_anticanonical = log_strict_nef(config, *rs.boundary, rs.test_classes);
    }
    r.theorem_i = theorem_i_instance_check(config, rs.test_classes);
    return r;
}

Report analyze(const Scenario& scenario) {
    return analyze(resolve_scenario(scenario));
}

namespace {

// "2E0 + E1 + E2 + E3" style rendering of an integer cycle.
std::string format_cycle(const std::vector<long long>& mults,
                         const std::vector<std::string>& labels) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < mults.size(); ++i) {
        if (mults[i] == 0) continue;
        if (!first) out << " + ";
        if (mults[i] != 1) out << mults[i];
        out << labels[i];
        first = false;
    }
    if (first) return "0";
    return out.str();
}

std::string pad(const std::string& s, std::size_t width) {
    if (s.size() >= width) return s;
    return s + std::string(width - s.size(), ' ');
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void emit_positivity_text(std::ostringstream& out,
                          const PositivityReport& p,
                          const std::string& heading) {
    out << heading << " values on declared classes:\n";
    if (p.per_class.empty()) {
        out << "  (no test classes declared; nothing is certified)\n";
    } else {
        std::size_t width = 5;
        for (const PositivityEntry& e : p.per_class) {
            width = std::max(width, e.label.size());
        }
        out << "  " << pad("class", width) << "  value\n";
        for (const PositivityEntry& e : p.per_class) {
            out << "  " << pad(e.label, width) << "  " << to_string(e.value) << "\n";
        }
    }
    out << "  verdict: " << to_string(p.verdict);
    if (p.witness) out << "  (witness: " << *p.witness << ")";
    out << "\n";
    out << "  scope: the verdict covers the " << p.per_class.size()
        << " declared class" << (p.per_class.size() == 1 ? "" : "es")
        << " above, not the full curve cone\n";
}

json positivity_to_json(const PositivityReport& p) {
    json j;
    j["tested"] = p.tested;
    json per = json::array();
    for (const PositivityEntry& e : p.per_class) {
        per.push_back(json{{"label", e.label}, {"value", to_string(e.value)}});
    }
    j["per_class"] = std::move(per);
    j["verdict"] = to_string(p.verdict);
    if (p.witness) j["witness"] = *p.witness;
    j["self_intersection"] = to_string(p.self_intersection);
    return j;
}

PositivityReport positivity_from_json(const json& v, const std::string& path) {
    require_object(v, path);
    check_keys(v, path, {"tested", "per_class", "verdict", "witness",
                         "self_intersection"});
    PositivityReport p;
    p.tested = string_field(require_field(v, "tested", path), path + ".tested");
    const json& per = require_array(require_field(v, "per_class", path),
                                    path + ".per_class");
    for (std::size_t i = 0; i < per.size(); ++i) {
        const std::string entry_path = path + ".per_class[" + std::to_string(i) + "]";
        require_object(per[i], entry_path);
        check_keys(per[i], entry_path, {"label", "value"});
        PositivityEntry e;
        e.label = string_field(require_field(per[i], "label", entry_path),
                               entry_path + ".label");
        e.value = rational_field(require_field(per[i], "value", entry_path),
                                 entry_path + ".value");
        p.per_class.push_back(std::move(e));
    }
    p.verdict = positivity_verdict_from_string(
        string_field(require_field(v, "verdict", path), path + ".verdict"));
    if (v.contains("witness")) {
        p.witness = string_field(v["witness"], path + ".witness");
    }
    p.self_intersection = rational_field(
        require_field(v, "self_intersection", path), path + ".self_intersection");
    return p;
}

json component_to_json(const ComponentReport& c) {
    json j;
    json indices = json::array();
    for (std::size_t i : c.curve_indices) {
        indices.push_back(static_cast<long long>(i));
    }
    j["curve_indices"] = std::move(indices);
    j["curves"] = c.curve_labels;
    json genera = json::array();
    for (const Rational& g : c.genera) genera.push_back(to_string(g));
    j["genera"] = std::move(genera);
    json alphas = json::array();
    for (const Rational& a : c.discrepancies) alphas.push_back(to_string(a));
    j["discrepancies"] = std::move(alphas);
    j["fundamental_cycle"] = c.fundamental_cycle;
    j["pa_fundamental"] = to_string(c.pa_fundamental);
    j["is_du_val"] = c.du_val;
    j["is_rational"] = c.rational;
    j["is_minimal"] = c.minimal;
    j["cartier_index_K"] = to_string(c.cartier_index_k);
    return j;
}

ComponentReport component_from_json(const json& v, const std::string& path) {
    require_object(v, path);
    check_keys(v, path,
               {"curve_indices", "curves", "genera", "discrepancies",
                "fundamental_cycle", "pa_fundamental", "is_du_val", "is_rational",
                "is_minimal", "cartier_index_K"});
    ComponentReport c;
    const json& indices = require_array(require_field(v, "curve_indices", path),
                                        path + ".curve_indices");
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const long long value =
            int_field(indices[i], path + ".curve_indices[" + std::to_string(i) + "]");
        if (value < 0) {
            fail(path + ".curve_indices[" + std::to_string(i) + "]",
                 "expected a nonnegative index");
        }
        c.curve_indices.push_back(static_cast<std::size_t>(value));
    }
    const json& curves = require_array(require_field(v, "curves", path),
                                       path + ".curves");
    for (std::size_t i = 0; i < curves.size(); ++i) {
        c.curve_labels.push_back(
            string_field(curves[i], path + ".curves[" + std::to_string(i) + "]"));
    }
    c.genera = rational_vector(require_field(v, "genera", path), path + ".genera");
    c.discrepancies = rational_vector(require_field(v, "discrepancies", path),
                                      path + ".discrepancies");
    const json& cycle = require_array(require_field(v, "fundamental_cycle", path),
                                      path + ".fundamental_cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        c.fundamental_cycle.push_back(
            int_field(cycle[i], path + ".fundamental_cycle[" + std::to_string(i) + "]"));
    }
    c.pa_fundamental = rational_field(require_field(v, "pa_fundamental", path),
                                      path + ".pa_fundamental");
    c.du_val = bool_field(require_field(v, "is_du_val", path), path + ".is_du_val");
    c.rational = bool_field(require_field(v, "is_rational", path),
                            path + ".is_rational");
    c.minimal = bool_field(require_field(v, "is_minimal", path), path + ".is_minimal");
    const Rational index = rational_field(require_field(v, "cartier_index_K", path),
                                          path + ".cartier_index_K");
    if (!is_integral(index) || index < 1) {
        fail(path + ".cartier_index_K", "expected a positive integer");
    }
    c.cartier_index_k = numerator(index);
    return c;
}

json strings_array(const RatVec& values) {
    json out = json::array();
    for (const Rational& v : values) out.push_back(to_string(v));
    return out;
}

constexpr const char* kSchemaTag = "normsurf-report/1";

} // namespace

std::string emit_text(const Report& r) {
    std::ostringstream out;
    out << "scenario: " << r.scenario_name << "\n";
    out << "model: " << r.model.description << "\n";
    out << "  kind: " << r.model.kind << "   rank: " << r.model.rank
        << "   chi(O_Y): " << to_string(r.model.chi0) << "\n";
    out << "  basis:";
    for (const std::string& b : r.model.basis) out << " " << b;
    out << "\n\n";

    out << "singular points: " << r.singularities.components.size() << "\n";
    for (std::size_t ci = 0; ci < r.singularities.components.size(); ++ci) {
        const ComponentReport& c = r.singularities.components[ci];
        out << "  point " << (ci + 1) << ":\n";
        std::size_t width = 5;
        for (const std::string& label : c.curve_labels) {
            width = std::max(width, label.size());
        }
        std::size_t genus_width = 5;
        for (const Rational& g : c.genera) {
            genus_width = std::max(genus_width, to_string(g).size());
        }
        out << "    " << pad("curve", width) << "  " << pad("genus", genus_width)
            << "  discrepancy\n";
        for (std::size_t i = 0; i < c.curve_labels.size(); ++i) {
            out << "    " << pad(c.curve_labels[i], width) << "  "
                << pad(to_string(c.genera[i]), genus_width) << "  "
                << to_string(c.discrepancies[i]) << "\n";
        }
        out << "    fundamental cycle: "
            << format_cycle(c.fundamental_cycle, c.curve_labels)
            << "   (p_a = " << to_string(c.pa_fundamental) << ")\n";
        out << "    du_val: " << yes_no(c.du_val)
            << "   rational: " << yes_no(c.rational)
            << "   minimal: " << yes_no(c.minimal)
            << "   cartier_index_K: " << to_string(c.cartier_index_k) << "\n";
    }
    out << "\n";

    out << "pi^*(-K_X) on Y: " << format_class(r.anticanonical_total, r.model.basis)
        << "\n";
    out << "  correction coefficients:";
    for (const Rational& a : r.anticanonical_coeffs) out << " " << to_string(a);
    out << "\n";
    out << "(-K_X)^2: " << to_string(r.k_squared) << "\n";
    out << "numerical del Pezzo: " << yes_no(r.numerical_del_pezzo) << "\n\n";

    emit_positivity_text(out, r.anticanonical, r.anticanonical.tested);
    if (r.log_anticanonical) {
        out << "\n";
        emit_positivity_text(out, *r.log_anticanonical, r.log_anticanonical->tested);
    }
    out << "\n";
    out << "theorem_i (strictly positive " << r.anticanonical.tested
        << " on declared classes forces (-K_X)^2 > 0): "
        << to_string(r.theorem_i.verdict) << "\n";
    return out.str();
}

std::string emit_machine(const Report& r) {
    json j;
    j["schema"] = kSchemaTag;
    j["scenario"] = r.scenario_name;

    json model;
    model["kind"] = r.model.kind;
    model["rank"] = r.model.rank;
    model["basis"] = r.model.basis;
    model["description"] = r.model.description;
    model["chi0"] = to_string(r.model.chi0);
    j["model"] = std::move(model);

    json components = json::array();
    for (const ComponentReport& c : r.singularities.components) {
        components.push_back(component_to_json(c));
    }
    j["singularities"] = std::move(components);

    j["anticanonical_coeffs"] = strings_array(r.anticanonical_coeffs);
    j["anticanonical_total"] = strings_array(r.anticanonical_total);
    j["k_squared"] = to_string(r.k_squared);
    j["anticanonical"] = positivity_to_json(r.anticanonical);
    j["numerical_del_pezzo"] = r.numerical_del_pezzo;
    if (r.log_anticanonical) {
        j["log_anticanonical"] = positivity_to_json(*r.log_anticanonical);
    }

    json theorem;
    theorem["verdict"] = to_string(r.theorem_i.verdict);
    theorem["report"] = positivity_to_json(r.theorem_i.report);
    theorem["k_squared"] = to_string(r.theorem_i.k_squared);
    j["theorem_i"] = std::move(theorem);

    return j.dump(2) + "\n";
}

Report parse_machine(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    require_object(root, "report");
    check_keys(root, "report",
               {"schema", "scenario", "model", "singularities",
                "anticanonical_coeffs", "anticanonical_total", "k_squared",
                "anticanonical", "numerical_del_pezzo", "log_anticanonical",
                "theorem_i"});

    const std::string schema =
        string_field(require_field(root, "schema", "report"), "schema");
    if (schema != kSchemaTag) {
        fail("schema", "unsupported report schema \"" + schema + "\"");
    }

    Report r;
    r.scenario_name =
        string_field(require_field(root, "scenario", "report"), "scenario");

    const json& model = require_object(require_field(root, "model", "report"), "model");
    check_keys(model, "model", {"kind", "rank", "basis", "description", "chi0"});
    r.model.kind = string_field(require_field(model, "kind", "model"), "model.kind");
    r.model.rank = int_field(require_field(model, "rank", "model"), "model.rank");
    const json& basis = require_array(require_field(model, "basis", "model"),
                                      "model.basis");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        r.model.basis.push_back(
            string_field(basis[i], "model.basis[" + std::to_string(i) + "]"));
    }
    r.model.description = string_field(require_field(model, "description", "model"),
                                       "model.description");
    r.model.chi0 = rational_field(require_field(model, "chi0", "model"), "model.chi0");

    const json& components = require_array(
        require_field(root, "singularities", "report"), "singularities");
    for (std::size_t i = 0; i < components.size(); ++i) {
        r.singularities.components.push_back(component_from_json(
            components[i], "singularities[" + std::to_string(i) + "]"));
    }

    r.anticanonical_coeffs = rational_vector(
        require_field(root, "anticanonical_coeffs", "report"), "anticanonical_coeffs");
    r.anticanonical_total = rational_vector(
        require_field(root, "anticanonical_total", "report"), "anticanonical_total");
    r.k_squared = rational_field(require_field(root, "k_squared", "report"),
                                 "k_squared");
    r.anticanonical = positivity_from_json(
        require_field(root, "anticanonical", "report"), "anticanonical");
    r.numerical_del_pezzo = bool_field(
        require_field(root, "numerical_del_pezzo", "report"), "numerical_del_pezzo");
    if (root.contains("log_anticanonical")) {
        r.log_anticanonical =
            positivity_from_json(root["log_anticanonical"], "log_anticanonical");
    }

    const json& theorem = require_object(require_field(root, "theorem_i", "report"),
                                         "theorem_i");
    check_keys(theorem, "theorem_i", {"verdict", "report", "k_squared"});
    r.theorem_i.verdict = theorem_i_verdict_from_string(string_field(
        require_field(theorem, "verdict", "theorem_i"), "theorem_i.verdict"));
    r.theorem_i.report = positivity_from_json(
        require_field(theorem, "report", "theorem_i"), "theorem_i.report");
    r.theorem_i.k_squared = rational_field(
        require_field(theorem, "k_squared", "theorem_i"), "theorem_i.k_squared");
    return r;
}

} // namespace normsurf
