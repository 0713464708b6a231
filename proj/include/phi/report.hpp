#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "phi/verify.hpp"
#include "phi/version.hpp"

namespace phi {

// Reports always echo tool version, config, seed and instance counts. Wall
// times are opt-in so that fixed-seed runs stay byte-identical.
inline nlohmann::json verify_report_json(const std::string& suite,
                                         const std::vector<SuiteResult>& results,
                                         const VerifyOptions& opt, bool timing) {
    nlohmann::json j;
    j["tool"] = {{"name", "phi"}, {"version", PHI_VERSION}};
    j["config"] = {{"suite", suite},       {"max_n", opt.max_n},   {"max_chords", opt.max_chords},
                   {"samples", opt.samples}, {"seed", opt.seed},   {"threads", opt.threads}};
    std::uint64_t total_instances = 0, total_failures = 0;
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json s;
        s["suite"] = r.name;
        s["instances_checked"] = r.instances;
        s["report_only"] = r.report_only;
        nlohmann::json fails = nlohmann::json::array();
        for (const auto& f : r.failures) fails.push_back({{"instance", f.instance}, {"detail", f.detail}});
        s["failures"] = fails;
        if (timing) s["wall_ms"] = r.wall_ms;
        suites.push_back(s);
        total_instances += r.instances;
        if (!r.report_only) total_failures += r.failures.size();
    }
    j["suites"] = suites;
    j["totals"] = {{"instances_checked", total_instances}, {"failures", total_failures}};
    return j;
}

inline std::string verify_report_string(const std::string& suite,
                                        const std::vector<SuiteResult>& results,
                                        const VerifyOptions& opt, bool timing = false) {
    return verify_report_json(suite, results, opt, timing).dump(2) + "\n";
}

inline std::string verify_report_csv(const std::vector<SuiteResult>& results) {
    std::string out = "suite,instances_checked,failures,report_only\n";
    for (const auto& r : results)
        out += r.name + "," + std::to_string(r.instances) + "," + std::to_string(r.failures.size()) +
               "," + (r.report_only ? "1" : "0") + "\n";
    return out;
}

// 0 when every asserted suite is clean; report-only suites never fail it.
inline int verify_exit_code(const std::vector<SuiteResult>& results) {
    for (const auto& r : results)
        if (!r.report_only && !r.failures.empty()) return 1;
    return 0;
}

}  // namespace phi
