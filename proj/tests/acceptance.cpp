// Acceptance gate: nine end-to-end criteria, each printed as a single
// PASS/FAIL line with its elapsed time. Exit status is the number of
// failing criteria. Run as:
//
//   acceptance --cli <path-to-cli> --scenarios <scenario-dir>
//
// Criteria with time budgets enforce them here, in wall-clock seconds.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "normsurf/report.hpp"
#include "support/oracle.hpp"

using namespace normsurf;
using namespace normsurf::testsupport;

namespace {

std::string g_cli_path;
std::string g_scenario_dir;
int g_failures = 0;

struct Checker {
    std::string details;
    bool ok = true;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            details = what;
        }
    }
};

void run_criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<void(Checker&)>& body) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (budget_seconds > 0 && elapsed >= budget_seconds) {
        c.require(false, "exceeded " + std::to_string(budget_seconds) +
                             "s budget at " + std::to_string(elapsed) + "s");
    }
    if (c.ok) {
        std::printf("PASS criterion %d: %s (%.3fs)\n", number, title.c_str(),
                    elapsed);
    } else {
        std::printf("FAIL criterion %d: %s (%.3fs): %s\n", number, title.c_str(),
                    elapsed, c.details.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

std::string rat(const Rational& r) { return to_string(r); }

// --- criterion bodies ------------------------------------------------------

void criterion_1(Checker& c) {
    const Report r = analyze(builtin_scenario("example-b"));
    const ComponentReport& comp = r.singularities.components.at(0);
    c.require(comp.discrepancies == RatVec{make_rational(-5, 3)},
              "discrepancy != -5/3");
    c.require(comp.cartier_index_k == 3, "Cartier index of K != 3");
    c.require(r.k_squared == make_rational(1, 3), "K_X^2 != 1/3");
    c.require(r.anticanonical.per_class.at(0).label == "F" &&
                  r.anticanonical.per_class.at(0).value == make_rational(1, 3),
              "fiber value != 1/3");
    c.require(!comp.du_val, "reported du Val");
    c.require(!comp.rational, "reported rational");
    c.require(comp.pa_fundamental == 2, "p_a(Z) != 2");
    c.require(comp.genera == RatVec{Rational(2)}, "genus of C0 != 2");
}

void criterion_2(Checker& c) {
    for (long long e = 2; e <= 5; ++e) {
        const Report r = analyze(builtin_scenario("example-a", e));
        const ComponentReport& comp = r.singularities.components.at(0);
        c.require(comp.discrepancies == RatVec{make_rational(2 - e, e)},
                  "e=" + std::to_string(e) + ": discrepancy != (2-e)/e");
        c.require(r.k_squared == make_rational((e + 2) * (e + 2), e),
                  "e=" + std::to_string(e) + ": K_X^2 != (e+2)^2/e");
        c.require(r.anticanonical.per_class.at(0).value == make_rational(e + 2, e),
                  "e=" + std::to_string(e) + ": -K_X.F != (e+2)/e");
        c.require(r.numerical_del_pezzo,
                  "e=" + std::to_string(e) + ": not numerically del Pezzo");
        c.require(comp.du_val == (e == 2),
                  "e=" + std::to_string(e) + ": du Val flag wrong");
        if (e == 2) {
            c.require(r.k_squared == 8, "e=2: K_X^2 != 8");
        }
    }
}

void criterion_3(Checker& c) {
    const Report r = analyze(builtin_scenario("remark-1"));
    c.require(r.anticanonical_total == RatVec(13, Rational(0)),
              "pi^*K_X has a nonzero coefficient");
    c.require(r.k_squared == 0, "K_X^2 != 0");
    c.require(r.anticanonical.verdict == PositivityVerdict::NefNotStrict,
              "verdict != NEF_NOT_STRICT");
    c.require(r.anticanonical.per_class.size() == 3, "expected 3 test classes");
    const ComponentReport& comp = r.singularities.components.at(0);
    c.require(!comp.rational, "reported rational");
    c.require(comp.pa_fundamental == 1, "p_a(Z) != 1");
    c.require(r.theorem_i.verdict == TheoremIVerdict::NotApplicable,
              "theorem_i verdict != NOT_APPLICABLE");
}

void criterion_4(Checker& c) {
    for (long long p = 1; p <= 24; ++p) {
        for (long long q = 1; q <= 6; ++q) {
            const Rational a = make_rational(p, q);
            for (long long e = 1; e <= 6; ++e) {
                const Rational closed = ruled_case_ksq(a, e);
                // Independent route: the contracted class on the lattice.
                const SurfaceModel m = ruled_surface(0, e);
                const DivisorClass d(m.lattice, {a, a * Rational(e)});
                if (closed != inner(d, d) || closed != a * a * Rational(e)) {
                    c.require(false, "mismatch at a=" + rat(a) +
                                         ", e=" + std::to_string(e));
                    return;
                }
            }
        }
    }
}

void criterion_5(Checker& c) {
    std::mt19937_64 rng(50001);
    int configs = 0;
    while (configs < 500) {
        const RandomConfig rc = random_tree_config(rng, 8, -5, -2);
        const ContractionConfig config =
            validate_contraction(rc.model.lattice, rc.exceptional);
        const DivisorClass d = random_class(rng, rc, 4);
        const PullbackResult pull = mumford_pullback(d, config);

        const std::size_t n = rc.exceptional.size();
        const RatMat& gram = rc.model.lattice->gram();
        RatVec rhs(n);
        for (std::size_t j = 0; j < n; ++j) {
            Rational dot = 0;
            for (std::size_t i = 0; i < gram.size(); ++i) {
                dot += d.coeffs()[i] * gram[i][j + 1];
            }
            rhs[j] = -dot;
        }
        if (pull.exceptional_coeffs != cramer_solve(config.exc_gram, rhs)) {
            c.require(false, "solver disagrees with Cramer on config " +
                                 std::to_string(configs));
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            Rational dot = 0;
            for (std::size_t i = 0; i < gram.size(); ++i) {
                dot += pull.total.coeffs()[i] * gram[i][j + 1];
            }
            if (dot != 0) {
                c.require(false, "pullback not orthogonal on config " +
                                     std::to_string(configs));
                return;
            }
        }
        ++configs;
    }
}

void criterion_6(Checker& c) {
    std::mt19937_64 rng(60001);
    int minimal_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const RandomConfig rc = random_tree_config(rng, 7, -5, -1);
        const ContractionConfig config =
            validate_contraction(rc.model.lattice, rc.exceptional);
        if (!is_minimal_configuration(config)) continue;
        ++minimal_seen;
        for (const Rational& alpha : discrepancies(config)) {
            if (alpha > 0) {
                c.require(false, "positive discrepancy " + rat(alpha) +
                                     " on a minimal configuration");
                return;
            }
        }
    }
    c.require(minimal_seen >= 100, "corpus produced too few minimal configs");
}

void criterion_7(Checker& c) {
    // Hand-checked rational double points.
    const SurfaceModel b2 = blowup_plane(2);
    const ContractionConfig a1 = validate_contraction(
        b2.lattice, {basis_class(b2.lattice, 1) - basis_class(b2.lattice, 2)});
    const FundamentalCycle za1 = fundamental_cycle(a1, 0);
    c.require(za1.multiplicities == std::vector<long long>{1} && za1.pa == 0,
              "A1 cycle wrong");

    const SurfaceModel b3 = blowup_plane(3);
    const ContractionConfig a2 = validate_contraction(
        b3.lattice, {basis_class(b3.lattice, 1) - basis_class(b3.lattice, 2),
                     basis_class(b3.lattice, 2) - basis_class(b3.lattice, 3)});
    const FundamentalCycle za2 = fundamental_cycle(a2, 0);
    c.require(za2.multiplicities == std::vector<long long>{1, 1} && za2.pa == 0,
              "A2 cycle wrong");

    const Report d4 = analyze(builtin_scenario("duval-d4"));
    c.require(d4.singularities.components.at(0).fundamental_cycle ==
                      std::vector<long long>{2, 1, 1, 1} &&
                  d4.singularities.components.at(0).pa_fundamental == 0,
              "D4 cycle != 2E0 + E1 + E2 + E3 with p_a 0");

    const Report rem = analyze(builtin_scenario("remark-1"));
    c.require(rem.singularities.components.at(0).pa_fundamental == 1,
              "p_a(Z) != 1 on the elliptic contraction");

    // Exhaustive minimality at small rank: the computed cycle is the least
    // anti-nef cycle >= the reduced one, checked against full enumeration.
    std::mt19937_64 rng(70001);
    for (int trial = 0; trial < 60; ++trial) {
        const RandomConfig rc = random_tree_config(rng, 5, -5, -2);
        const ContractionConfig config =
            validate_contraction(rc.model.lattice, rc.exceptional);
        for (std::size_t comp = 0; comp < config.components.size(); ++comp) {
            const auto& members = config.components[comp];
            const FundamentalCycle z = fundamental_cycle(config, comp);
            const auto anti_nef = [&](const std::vector<long long>& mult) {
                for (std::size_t j = 0; j < members.size(); ++j) {
                    Rational pairing = 0;
                    for (std::size_t i = 0; i < members.size(); ++i) {
                        pairing += Rational(mult[i]) *
                                   config.exc_gram[members[i]][members[j]];
                    }
                    if (pairing > 0) return false;
                }
                return true;
            };
            if (!anti_nef(z.multiplicities)) {
                c.require(false, "computed cycle is not anti-nef");
                return;
            }
            // Enumerate every vector 1 <= v <= z componentwise; the cycle
            // must be the unique anti-nef minimum.
            std::vector<long long> v(members.size(), 1);
            for (;;) {
                if (anti_nef(v) && v != z.multiplicities) {
                    bool below = true;
                    for (std::size_t i = 0; i < v.size(); ++i) {
                        if (v[i] > z.multiplicities[i]) below = false;
                    }
                    if (below) {
                        c.require(false, "found a smaller anti-nef cycle");
                        return;
                    }
                }
                std::size_t pos = 0;
                while (pos < v.size() && v[pos] == z.multiplicities[pos]) {
                    v[pos] = 1;
                    ++pos;
                }
                if (pos == v.size()) break;
                ++v[pos];
            }
        }
    }
}

void criterion_8(Checker& c) {
    const auto check_instance = [&](const ContractionConfig& config,
                                    const std::vector<LabeledClass>& classes,
                                    const std::string& tag) {
        const TheoremICheck t = theorem_i_instance_check(config, classes);
        if (t.verdict == TheoremIVerdict::Violation) {
            c.require(false,
                      tag + ": strictly positive verdict with K_X^2 = " +
                          rat(t.k_squared) + " <= 0 (witnessed violation)");
            return false;
        }
        if (t.report.verdict == PositivityVerdict::StrictlyPositive &&
            t.k_squared <= 0 && !classes.empty()) {
            c.require(false, tag + ": verdict bookkeeping is inconsistent");
            return false;
        }
        return true;
    };

    // Built-ins.
    for (const std::string& name : builtin_names()) {
        const Report r = analyze(builtin_scenario(name));
        if (r.theorem_i.verdict == TheoremIVerdict::Violation) {
            c.require(false, name + ": violation reported");
            return;
        }
    }

    // Ruled sections over varying base genus and twisting.
    for (long long g = 0; g <= 3; ++g) {
        for (long long e = 1; e <= 6; ++e) {
            const SurfaceModel m = ruled_surface(g, e);
            const ContractionConfig config =
                validate_contraction(m.lattice, {basis_class(m.lattice, 0)});
            const std::vector<LabeledClass> classes{
                {"F", basis_class(m.lattice, 1)}};
            if (!check_instance(config, classes,
                                "ruled g=" + std::to_string(g) +
                                    " e=" + std::to_string(e))) {
                return;
            }
        }
    }

    // Randomized du Val chains inside blowups, tested against H and a line.
    std::mt19937_64 rng(80001);
    for (int trial = 0; trial < 60; ++trial) {
        const long long n = rand_range(rng, 2, 8);
        const SurfaceModel b = blowup_plane(n);
        const long long len = rand_range(rng, 1, n - 1);
        std::vector<DivisorClass> curves;
        for (long long i = 1; i <= len; ++i) {
            curves.push_back(basis_class(b.lattice, static_cast<std::size_t>(i)) -
                             basis_class(b.lattice, static_cast<std::size_t>(i + 1)));
        }
        const ContractionConfig config =
            validate_contraction(b.lattice, std::move(curves));
        std::vector<LabeledClass> classes{{"H", basis_class(b.lattice, 0)}};
        if (!check_instance(config, classes, "chain n=" + std::to_string(n))) {
            return;
        }
    }
}

int run_cli(const std::string& args, std::string* output = nullptr) {
    const std::string out_file = "acceptance_cli_out.tmp";
    const std::string command =
        "'" + g_cli_path + "' " + args + " > " + out_file + " 2>&1";
    const int status = std::system(command.c_str());
    if (output) {
        std::ifstream in(out_file, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        *output = ss.str();
    }
    std::remove(out_file.c_str());
    if (status < 0) return -1;
    return WEXITSTATUS(status);
}

void criterion_9(Checker& c) {
    // Library-level round trip, byte for byte, for every builtin.
    for (const std::string& name : builtin_names()) {
        const Report r = analyze(builtin_scenario(name));
        const std::string machine = emit_machine(r);
        const Report back = parse_machine(machine);
        if (!(back == r) || emit_machine(back) != machine) {
            c.require(false, name + ": machine format does not round-trip");
            return;
        }
    }

    // The CLI must agree with the library byte for byte.
    std::string cli_machine;
    if (run_cli("builtin example-b --format machine", &cli_machine) != 0) {
        c.require(false, "CLI failed on a valid builtin");
        return;
    }
    c.require(cli_machine == emit_machine(analyze(builtin_scenario("example-b"))),
              "CLI machine output differs from the library's");

    // Exit codes: 0 valid, 1 not contractible, 2 malformed.
    const std::string good = g_scenario_dir + "/example-b.json";
    c.require(run_cli("analyze '" + good + "'") == 0, "valid scenario exit != 0");

    const std::string bad_math = "acceptance_bad_math.tmp.json";
    {
        std::ofstream out(bad_math);
        out << R"({"model": {"type": "blowup_plane", "n": 1},
                   "exceptional": [{"coeffs": ["1", "0"]}]})";
    }
    c.require(run_cli("analyze " + bad_math) == 1,
              "non-contractible scenario exit != 1");
    std::remove(bad_math.c_str());

    const std::string bad_syntax = "acceptance_bad_syntax.tmp.json";
    {
        std::ofstream out(bad_syntax);
        out << "{ this is not json";
    }
    c.require(run_cli("analyze " + bad_syntax) == 2, "malformed scenario exit != 2");
    std::remove(bad_syntax.c_str());
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--cli") {
            g_cli_path = argv[i + 1];
        } else if (flag == "--scenarios") {
            g_scenario_dir = argv[i + 1];
        } else {
            std::cerr << "unknown flag: " << flag << "\n";
            return 2;
        }
    }
    if (g_cli_path.empty() || g_scenario_dir.empty()) {
        std::cerr << "usage: acceptance --cli <path> --scenarios <dir>\n";
        return 2;
    }

    run_criterion(1, "genus-2 section invariants are exact", 1.0, criterion_1);
    run_criterion(2, "cone family invariants for e in 2..5", 1.0, criterion_2);
    run_criterion(3, "numerically trivial contraction invariants", 1.0,
                  criterion_3);
    run_criterion(4, "closed form matches the lattice on the (a, e) grid", 5.0,
                  criterion_4);
    run_criterion(5, "500 random tree configs solve exactly", 10.0, criterion_5);
    run_criterion(6, "minimal corpus has nonpositive discrepancies", 0,
                  criterion_6);
    run_criterion(7, "fundamental cycles match hand computations", 0,
                  criterion_7);
    run_criterion(8, "no strictly positive verdict with K_X^2 <= 0", 10.0,
                  criterion_8);
    run_criterion(9, "machine format and CLI exit codes", 0, criterion_9);

    if (g_failures == 0) {
        std::printf("all 9 acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria failed\n", g_failures);
    }
    return g_failures == 0 ? 0 : 1;
}
