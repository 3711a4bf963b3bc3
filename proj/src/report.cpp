#include "prism/report.hpp"

#include <stdexcept>

#include <json.hpp>

#include "prism/kernels.hpp"

namespace prism {

void VerificationReport::pass(const std::string& check, const std::string& detail) {
    items.push_back({check, Status::Pass, detail, 0});
}

void VerificationReport::fail(const std::string& check, const std::string& detail) {
    if (detail.empty()) throw std::logic_error("fail items must carry a counterexample payload");
    items.push_back({check, Status::Fail, detail, 0});
}

void VerificationReport::note(const std::string& check, const std::string& detail) {
    items.push_back({check, Status::Note, detail, 0});
}

void VerificationReport::require(const std::string& check, bool ok, const std::string& counterexample) {
    if (ok) pass(check);
    else fail(check, counterexample.empty() ? "identity does not hold" : counterexample);
}

bool VerificationReport::ok() const { return fail_count() == 0; }

int VerificationReport::fail_count() const {
    int n = 0;
    for (const auto& it : items)
        if (it.status == Status::Fail) ++n;
    return n;
}

void VerificationReport::merge(const VerificationReport& other) {
    for (const auto& it : other.items) {
        ReportItem copy = it;
        if (!other.suite.empty() && other.suite != suite) copy.check = other.suite + ": " + it.check;
        items.push_back(std::move(copy));
    }
}

namespace {

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "report-only";
    }
}

}  // namespace

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["suite"] = suite;
    j["seed"] = seed;
    j["ok"] = ok();
    j["toolchain"] = {
#if defined(__clang__)
        {"compiler", "clang " __clang_version__},
#elif defined(__GNUC__)
        {"compiler", "gcc " __VERSION__},
#else
        {"compiler", "unknown"},
#endif
        {"simd", kern::using_avx2() ? "avx2" : "scalar"},
    };
    j["items"] = nlohmann::json::array();
    for (const auto& it : items) {
        nlohmann::json ji;
        ji["check"] = it.check;
        ji["status"] = status_name(it.status);
        if (!it.detail.empty()) ji["detail"] = it.detail;
        if (it.ms > 0) ji["ms"] = it.ms;
        j["items"].push_back(std::move(ji));
    }
    return j.dump(2);
}

std::string VerificationReport::to_text() const {
    std::string out;
    out += "suite: " + suite + (seed ? " (seed " + std::to_string(seed) + ")" : "") + "\n";
    for (const auto& it : items) {
        out += "  [";
        out += status_name(it.status);
        out += "] ";
        out += it.check;
        if (!it.detail.empty()) out += "  -- " + it.detail;
        out += "\n";
    }
    out += ok() ? "result: all checks passed\n"
                : "result: " + std::to_string(fail_count()) + " check(s) FAILED\n";
    return out;
}

}  // namespace prism
