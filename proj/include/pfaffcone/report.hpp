/*
   Copyright 2026 The pfaffcone Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PFAFFCONE_REPORT_HPP
#define PFAFFCONE_REPORT_HPP

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "version.hpp"

namespace pfaffcone {

/// One pass/fail record.
struct VerificationReport {
    std::string identity;
    int ell = 0;
    std::string method;  // "symbolic" | "randomized" | "numeric"
    bool pass = false;
    std::optional<std::string> witness;
    double timing_ms = 0.0;
    nlohmann::json details;  // optional extra data, omitted when null
};

/// Result of one CLI command. Timings live under their own key so structured
/// output can be compared byte-for-byte after dropping it.
struct RunReport {
    std::string command;
    nlohmann::json options = nlohmann::json::object();
    int k = 0;
    int ell = 0;
    std::vector<VerificationReport> checks;
    nlohmann::json results = nlohmann::json::object();
    double total_ms = 0.0;

    bool overall_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command;
        j["version"] = PFAFFCONE_VERSION;
        j["options"] = options;
        if (ell > 0) {
            j["k"] = k;
            j["ell"] = ell;
            j["nvars"] = ell * (2 * ell - 1);
        }
        nlohmann::json list = nlohmann::json::array();
        nlohmann::json timings = nlohmann::json::object();
        for (const auto& c : checks) {
            nlohmann::json e = {{"identity", c.identity}, {"ell", c.ell}, {"method", c.method}, {"pass", c.pass}};
            if (c.witness) e["witness"] = *c.witness;
            if (!c.details.is_null()) e["details"] = c.details;
            list.push_back(std::move(e));
            timings[c.identity] = c.timing_ms;
        }
        timings["total"] = total_ms;
        j["checks"] = std::move(list);
        j["results"] = results;
        j["pass"] = overall_pass();
        j["timings_ms"] = std::move(timings);
        return j;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "pfaffcone " << PFAFFCONE_VERSION << " : " << command << "\n";
        if (ell > 0)
            os << "k = " << k << "  (l = k+1 = " << ell << ", n = " << ell * (2 * ell - 1) << " variables)\n";
        if (!options.empty()) {
            os << "options:";
            for (const auto& [key, value] : options.items()) os << " " << key << "=" << value.dump();
            os << "\n";
        }
        for (const auto& c : checks) {
            char timing[32];
            std::snprintf(timing, sizeof timing, "%.1f ms", c.timing_ms);
            os << (c.pass ? "[PASS] " : "[FAIL] ") << c.identity << "  (" << c.method << ", " << timing << ")\n";
            if (c.witness) os << "       witness: " << *c.witness << "\n";
        }
        for (const auto& [key, value] : results.items())
            os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        os << "overall: " << (overall_pass() ? "PASS" : "FAIL") << "\n";
        return os.str();
    }
};

/// Runs `fn` (returning bool), recording pass flag and wall time.
template <class Fn>
VerificationReport timed_check(std::string identity, int ell, std::string method, Fn&& fn) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.ell = ell;
    r.method = std::move(method);
    auto t0 = std::chrono::steady_clock::now();
    r.pass = fn(r);
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace pfaffcone

#endif  // PFAFFCONE_REPORT_HPP
