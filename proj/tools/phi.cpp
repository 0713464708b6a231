// Command-line front end: evaluate the invariants on graph6 input, run the
// verification suites, enumerate chord diagrams, and benchmark the evaluators.
//
// Exit codes: 0 success / verified, 1 internal error or failed verification,
// 2 input error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "phi/chords.hpp"
#include "phi/enumerate.hpp"
#include "phi/invariants.hpp"
#include "phi/report.hpp"
#include "phi/verify.hpp"
#include "phi/version.hpp"

namespace {

using nlohmann::json;

int default_threads() {
    if (const char* env = std::getenv("PHI_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

struct EvalRecord {
    std::string input;
    bool ok = false;
    std::string error;
    int n = 0, edges = 0;
    std::string phi_exact, phi_decimal, psi_exact, evaluator;
    int agree = -1;  // -1 unknown (psi not computed), else 0/1
};

EvalRecord eval_line(const std::string& line, const std::string& evaluator,
                     const phi::EvalLimits& lim) {
    EvalRecord rec;
    rec.input = line;
    try {
        phi::Graph g = phi::from_graph6(line);
        rec.n = g.n;
        rec.edges = g.edge_count();
        std::string chosen = evaluator;
        if (chosen == "auto")
            chosen = (!lim.subset_max_n || g.n <= lim.subset_max_n) ? "eulerian" : "delcont";
        phi::Dyadic value;
        if (chosen == "direct")
            value = phi::phi_direct(g, lim);
        else if (chosen == "eulerian")
            value = phi::phi_eulerian(g, lim);
        else if (chosen == "components")
            value = phi::phi_components(g, lim);
        else if (chosen == "delcont")
            value = phi::phi_delcont(g, lim);
        else
            throw std::invalid_argument("unknown evaluator: " + chosen);
        rec.evaluator = chosen;
        rec.phi_exact = phi::to_pow2_string(value);
        rec.phi_decimal = phi::to_decimal_string(value);
        if (!lim.subset_max_n || g.n <= lim.subset_max_n) {
            phi::Dyadic q = phi::psi(g, lim);
            rec.psi_exact = phi::to_pow2_string(q);
            rec.agree = (q == value) ? 1 : 0;
        }
        rec.ok = true;
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

int cmd_eval(const std::string& file, const std::string& fmt, const std::string& evaluator) {
    std::ifstream fin;
    std::istream* in = &std::cin;
    if (file != "-") {
        fin.open(file);
        if (!fin) {
            std::cerr << "phi eval: cannot open " << file << "\n";
            return 2;
        }
        in = &fin;
    }
    std::vector<EvalRecord> records;
    std::string line;
    while (std::getline(*in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        records.push_back(eval_line(line, evaluator, phi::kDefaultLimits));
    }
    bool any_error = false;
    auto agree_str = [](int a) { return a < 0 ? std::string("n/a") : std::string(a ? "yes" : "no"); };
    if (fmt == "json") {
        json out = json::array();
        for (const auto& r : records) {
            json j;
            j["graph6"] = r.input;
            if (r.ok) {
                j["n"] = r.n;
                j["edges"] = r.edges;
                j["phi_exact"] = r.phi_exact;
                j["phi_decimal"] = r.phi_decimal;
                j["psi_exact"] = r.psi_exact.empty() ? json() : json(r.psi_exact);
                j["evaluator"] = r.evaluator;
                j["agree"] = r.agree < 0 ? json() : json(r.agree == 1);
            } else {
                j["error"] = r.error;
                any_error = true;
            }
            out.push_back(j);
        }
        std::cout << out.dump(2) << "\n";
    } else if (fmt == "csv") {
        std::cout << "graph6,n,edges,phi_exact,phi_decimal,psi_exact,evaluator,agree\n";
        for (const auto& r : records) {
            if (!r.ok) {
                std::cerr << "error: " << r.input << ": " << r.error << "\n";
                any_error = true;
                continue;
            }
            std::cout << r.input << ',' << r.n << ',' << r.edges << ',' << r.phi_exact << ','
                      << r.phi_decimal << ',' << r.psi_exact << ',' << r.evaluator << ','
                      << agree_str(r.agree) << "\n";
        }
    } else {
        for (const auto& r : records) {
            if (!r.ok) {
                std::cerr << "error: " << r.input << ": " << r.error << "\n";
                any_error = true;
                continue;
            }
            std::cout << r.input << "  n=" << r.n << " m=" << r.edges << "  phi=" << r.phi_exact
                      << " (" << r.phi_decimal << ")  psi=" << (r.psi_exact.empty() ? "n/a" : r.psi_exact)
                      << "  evaluator=" << r.evaluator << "  agree=" << agree_str(r.agree) << "\n";
        }
    }
    return any_error ? 2 : 0;
}

int cmd_verify(const std::string& suite, const phi::VerifyOptions& opt, const std::string& fmt,
               bool timing) {
    auto names = phi::suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "phi verify: unknown suite '" << suite << "'\n";
        return 2;
    }
    auto results = phi::run_verify(suite, opt);
    if (fmt == "csv")
        std::cout << phi::verify_report_csv(results);
    else
        std::cout << phi::verify_report_string(suite, results, opt, timing);
    return phi::verify_exit_code(results);
}

int cmd_chords(const std::string& action, int nchords, const std::string& fmt) {
    json rows = json::array();
    for (int n = 1; n <= nchords; ++n) {
        for (const phi::ChordDiagram& d : phi::enumerate_diagrams(n)) {
            json row;
            row["word"] = phi::to_word(d);
            row["chords"] = n;
            if (action == "eval") {
                phi::Graph ig = phi::intersection_graph(d);
                phi::Dyadic w = phi::w_at_c38(d);
                phi::Dyadic p = phi::phi_eulerian(ig);
                row["intersection_graph6"] = phi::to_graph6(ig);
                row["w_exact"] = phi::to_pow2_string(w);
                row["phi_exact"] = phi::to_pow2_string(p);
                row["agree"] = (w == p);
            }
            rows.push_back(row);
        }
    }
    if (fmt == "json") {
        std::cout << rows.dump(2) << "\n";
    } else {
        for (const auto& row : rows) {
            std::cout << row["word"].get<std::string>();
            if (action == "eval")
                std::cout << "  gamma=" << row["intersection_graph6"].get<std::string>()
                          << "  w=" << row["w_exact"].get<std::string>()
                          << "  phi=" << row["phi_exact"].get<std::string>()
                          << "  agree=" << (row["agree"].get<bool>() ? "yes" : "no");
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_bench(int max_n, std::uint64_t seed, const std::string& fmt) {
    struct Row {
        int n;
        double density;
        int edges;
        std::string evaluator, status;
        double median_ms = 0;
    };
    std::vector<Row> rows;
    bool all_agree = true;
    for (int n = 6; n <= std::min(max_n, 24); n += 2) {
        for (double density : {0.25, 0.5, 0.75}) {
            std::mt19937_64 rng(phi::mix64(seed ^ (n * 131ULL + static_cast<int>(density * 100))));
            std::uniform_real_distribution<double> coin(0.0, 1.0);
            phi::Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (coin(rng) < density) g.set_edge(u, v);
            phi::EvalLimits lim;
            lim.delcont_max_nodes = 2'000'000;  // keep dense instances from running away
            std::vector<std::pair<std::string, std::function<phi::Dyadic()>>> evals = {
                {"direct", [&] { return phi::phi_direct(g, lim); }},
                {"eulerian", [&] { return phi::phi_eulerian(g, lim); }},
                {"components", [&] { return phi::phi_components(g, lim); }},
                {"delcont", [&] { return phi::phi_delcont(g, lim); }},
            };
            std::vector<phi::Dyadic> values;
            for (auto& [name, fn] : evals) {
                Row row{n, density, g.edge_count(), name, "ok"};
                try {
                    std::vector<double> times;
                    phi::Dyadic value;
                    for (int rep = 0; rep < 3; ++rep) {
                        auto t0 = std::chrono::steady_clock::now();
                        value = fn();
                        times.push_back(std::chrono::duration<double, std::milli>(
                                            std::chrono::steady_clock::now() - t0)
                                            .count());
                    }
                    std::sort(times.begin(), times.end());
                    row.median_ms = times[1];
                    values.push_back(value);
                } catch (const phi::GuardError& e) {
                    row.status = std::string("guard: ") + e.what();
                }
                rows.push_back(row);
            }
            for (std::size_t i = 1; i < values.size(); ++i)
                if (!(values[i] == values[0])) all_agree = false;
        }
    }
    if (fmt == "json") {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"n", r.n},
                           {"density", r.density},
                           {"edges", r.edges},
                           {"evaluator", r.evaluator},
                           {"status", r.status},
                           {"median_ms", r.median_ms}});
        std::cout << json{{"rows", out}, {"all_agree", all_agree}, {"seed", seed}}.dump(2) << "\n";
    } else {
        std::cout << "n  density  edges  evaluator   median_ms  status\n";
        char buf[160];
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%-2d %-8.2f %-6d %-11s %-10.3f %s\n", r.n, r.density,
                          r.edges, r.evaluator.c_str(), r.median_ms, r.status.c_str());
            std::cout << buf;
        }
        std::cout << "agreement on all benched instances: " << (all_agree ? "yes" : "NO") << "\n";
    }
    return all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 4-invariant and sl(2) weight-system toolkit"};
    app.set_version_flag("--version", PHI_VERSION);
    app.require_subcommand(1);

    // eval
    std::string eval_file = "-", eval_fmt = "text", eval_evaluator = "auto";
    auto* eval = app.add_subcommand("eval", "evaluate phi and psi on graph6 input");
    eval->add_option("file", eval_file, "graph6 input file, '-' for stdin");
    eval->add_option("--fmt", eval_fmt, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    eval->add_option("--evaluator", eval_evaluator, "phi algorithm")
        ->check(CLI::IsMember({"auto", "direct", "eulerian", "components", "delcont"}));

    // verify
    std::string verify_suite, verify_fmt = "json";
    phi::VerifyOptions vopt;
    vopt.threads = default_threads();
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", verify_suite, "delcont|fourT|sixT|triangle|dcv|cv|bound|bridge|conjecture|all")
        ->required();
    verify->add_option("--max-n", vopt.max_n, "largest vertex count swept");
    verify->add_option("--max-chords", vopt.max_chords, "largest diagram order (bridge suite)");
    verify->add_option("--samples", vopt.samples, "randomized instance count");
    verify->add_option("--seed", vopt.seed, "RNG seed, echoed in the report");
    verify->add_option("--threads,-j", vopt.threads, "worker threads (default $PHI_THREADS or 1)");
    verify->add_flag("--timing", timing, "include wall times in the report");
    verify->add_option("--fmt", verify_fmt, "output format")->check(CLI::IsMember({"json", "csv"}));

    // chords
    std::string chords_action, chords_fmt = "text";
    int nchords = 4;
    auto* chords = app.add_subcommand("chords", "enumerate or evaluate chord diagrams");
    chords->add_option("action", chords_action, "enumerate|eval")
        ->required()
        ->check(CLI::IsMember({"enumerate", "eval"}));
    chords->add_option("--chords", nchords, "maximum diagram order");
    chords->add_option("--fmt", chords_fmt, "output format")->check(CLI::IsMember({"json", "text"}));

    // bench
    int bench_max_n = 16;
    std::uint64_t bench_seed = 1;
    std::string bench_fmt = "text";
    auto* bench = app.add_subcommand("bench", "time the four phi evaluators on random graphs");
    bench->add_option("--max-n", bench_max_n, "largest vertex count");
    bench->add_option("--seed", bench_seed, "RNG seed");
    bench->add_option("--fmt", bench_fmt, "output format")->check(CLI::IsMember({"json", "text"}));

    // scan-conjecture
    phi::VerifyOptions sopt;
    sopt.max_n = 6;
    sopt.threads = default_threads();
    auto* scan = app.add_subcommand("scan-conjecture", "list classes where phi differs from psi");
    scan->add_option("--max-n", sopt.max_n, "largest vertex count (<= 8)");
    scan->add_option("--seed", sopt.seed, "echoed in the report");
    scan->add_option("--threads,-j", sopt.threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_file, eval_fmt, eval_evaluator);
        if (verify->parsed()) return cmd_verify(verify_suite, vopt, verify_fmt, timing);
        if (chords->parsed()) {
            if (nchords > 6) {
                std::cerr << "phi chords: diagram order capped at 6\n";
                return 2;
            }
            return cmd_chords(chords_action, nchords, chords_fmt);
        }
        if (bench->parsed()) return cmd_bench(bench_max_n, bench_seed, bench_fmt);
        if (scan->parsed()) {
            auto results = phi::run_verify("conjecture", sopt);
            std::cout << phi::verify_report_string("conjecture", results, sopt);
            return 0;  // findings are reported, never fatal
        }
    } catch (const phi::FormatError& e) {
        std::cerr << "phi: " << e.what() << "\n";
        return 2;
    } catch (const phi::GuardError& e) {
        std::cerr << "phi: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "phi: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "phi: internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
