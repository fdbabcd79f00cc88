#include "normsurf/normsurf_c.h"

#include <cstring>
#include <string>
#include <utility>

#include "normsurf/report.hpp"

struct nsf_report {
    normsurf::Report report;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
nsf_status guarded(Fn&& fn) noexcept {
    try {
        return fn();
    } catch (const normsurf::ParseError& e) {
        g_last_error = e.what();
        return NSF_ERROR_PARSE;
    } catch (const normsurf::ValidationError& e) {
        g_last_error = e.what();
        return NSF_ERROR_VALIDATION;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return NSF_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return NSF_ERROR_INTERNAL;
    }
}

nsf_status invalid_argument(const char* what) {
    g_last_error = what;
    return NSF_ERROR_ARGUMENT;
}

nsf_status deliver(normsurf::Report&& report, nsf_report** out_report) {
    *out_report = new nsf_report{std::move(report)};
    return NSF_OK;
}

} // namespace

extern "C" {

const char* nsf_version(void) { return "1.0.0"; }

const char* nsf_last_error(void) { return g_last_error.c_str(); }

nsf_status nsf_analyze_file(const char* path, nsf_report** out_report) {
    if (!path || !out_report) return invalid_argument("null argument");
    *out_report = nullptr;
    return guarded([&] {
        return deliver(normsurf::analyze(normsurf::load_scenario_file(path)),
                       out_report);
    });
}

nsf_status nsf_analyze_text(const char* json_text, nsf_report** out_report) {
    if (!json_text || !out_report) return invalid_argument("null argument");
    *out_report = nullptr;
    return guarded([&] {
        return deliver(normsurf::analyze(normsurf::parse_scenario(json_text)),
                       out_report);
    });
}

nsf_status nsf_analyze_builtin(const char* name, long e_param,
                               nsf_report** out_report) {
    if (!name || !out_report) return invalid_argument("null argument");
    *out_report = nullptr;
    return guarded([&] {
        std::optional<long long> e;
        if (e_param >= 0) e = e_param;
        return deliver(normsurf::analyze(normsurf::builtin_scenario(name, e)),
                       out_report);
    });
}

nsf_status nsf_builtin_names(char** out_names) {
    if (!out_names) return invalid_argument("null argument");
    *out_names = nullptr;
    return guarded([&] {
        std::string joined;
        for (const std::string& name : normsurf::builtin_names()) {
            joined += name;
            joined += '\n';
        }
        *out_names = dup_string(joined);
        return NSF_OK;
    });
}

nsf_status nsf_report_render(const nsf_report* report, nsf_format format,
                             char** out_text) {
    if (!report || !out_text) return invalid_argument("null argument");
    *out_text = nullptr;
    if (format != NSF_FORMAT_TEXT && format != NSF_FORMAT_MACHINE) {
        return invalid_argument("unknown render format");
    }
    return guarded([&] {
        *out_text = dup_string(format == NSF_FORMAT_TEXT
                                   ? normsurf::emit_text(report->report)
                                   : normsurf::emit_machine(report->report));
        return NSF_OK;
    });
}

void nsf_report_free(nsf_report* report) { delete report; }

void nsf_string_free(char* s) { delete[] s; }

} // extern "C"
