// Command-line front end. Talks to the library exclusively through the C
// API, so it doubles as a smoke test of the shared-library surface.
//
// Exit codes: 0 success, 1 validation error, 2 parse error (malformed
// scenario file or unusable command line).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "normsurf/normsurf_c.h"

namespace {

int report_failure(nsf_status status) {
    std::cerr << "error: " << nsf_last_error() << "\n";
    switch (status) {
    case NSF_ERROR_VALIDATION: return 1;
    case NSF_ERROR_PARSE: return 2;
    default: return 1;
    }
}

int write_output(const char* text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file \"" << out_path << "\"\n";
        return 1;
    }
    out << text;
    if (!out.good()) {
        std::cerr << "error: failed writing \"" << out_path << "\"\n";
        return 1;
    }
    return 0;
}

int render_and_write(nsf_report* report, const std::string& format,
                     const std::string& out_path) {
    char* text = nullptr;
    const nsf_format fmt =
        format == "machine" ? NSF_FORMAT_MACHINE : NSF_FORMAT_TEXT;
    const nsf_status status = nsf_report_render(report, fmt, &text);
    if (status != NSF_OK) {
        nsf_report_free(report);
        return report_failure(status);
    }
    const int code = write_output(text, out_path);
    nsf_string_free(text);
    nsf_report_free(report);
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection theory for contracted surface configurations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("normsurf ") + nsf_version());

    std::string scenario_path;
    std::string builtin_name;
    long long e_param = -1;
    std::string format = "text";
    std::string out_path;

    const auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "machine"}))
            ->capture_default_str();
        cmd->add_option("--out", out_path, "write the report to this file");
    };

    CLI::App* analyze =
        app.add_subcommand("analyze", "analyze a scenario file");
    analyze->add_option("file", scenario_path, "scenario file (JSON)")->required();
    add_output_flags(analyze);

    CLI::App* builtin =
        app.add_subcommand("builtin", "analyze a built-in scenario");
    builtin->add_option("name", builtin_name, "built-in scenario name")->required();
    builtin->add_option("--e", e_param,
                        "section invariant for example-a (e >= 2, default 2)");
    add_output_flags(builtin);

    CLI::App* list =
        app.add_subcommand("list-builtins", "list built-in scenario names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (list->parsed()) {
        char* names = nullptr;
        const nsf_status status = nsf_builtin_names(&names);
        if (status != NSF_OK) return report_failure(status);
        std::cout << names;
        nsf_string_free(names);
        return 0;
    }

    nsf_report* report = nullptr;
    nsf_status status;
    if (analyze->parsed()) {
        status = nsf_analyze_file(scenario_path.c_str(), &report);
    } else {
        status = nsf_analyze_builtin(builtin_name.c_str(),
                                     static_cast<long>(e_param), &report);
    }
    if (status != NSF_OK) return report_failure(status);
    return render_and_write(report, format, out_path);
}
