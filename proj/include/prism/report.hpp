#pragma once

// Structured pass/fail record of checked identities.  "fail" items must
// carry a counterexample payload; "note" items are report-only and never
// affect exit codes (used for observations the underlying theory does not
// guarantee at finite scale).

#include <cstdint>
#include <string>
#include <vector>

namespace prism {

enum class Status { Pass, Fail, Note };

struct ReportItem {
    std::string check;   // self-describing identity label
    Status status;
    std::string detail;  // counterexample payload / computed values
    double ms = 0;
};

struct VerificationReport {
    std::string suite;
    uint64_t seed = 0;
    std::vector<ReportItem> items;

    void pass(const std::string& check, const std::string& detail = "");
    void fail(const std::string& check, const std::string& detail);
    void note(const std::string& check, const std::string& detail);
    // record `ok` as pass, or fail with the payload
    void require(const std::string& check, bool ok, const std::string& counterexample = "");

    bool ok() const;  // no Fail items
    int fail_count() const;
    void merge(const VerificationReport& other);

    std::string to_json() const;  // versioned schema, includes toolchain metadata
    std::string to_text() const;
};

}  // namespace prism
