#pragma once

// Executable law suite: every algebraic law the system claims, each checked
// against fixed witnesses through the public operations (most via the
// expression language, so a law run exercises the whole stack). The suite is
// what `calpanic laws` prints; all-pass is the library's self-check.

#include <string>
#include <vector>

namespace calpanic {

struct LawCheck {
    std::string id;        // short slug, e.g. "add-noncommutative"
    std::string statement; // the law in words
    std::string witness;   // the values that demonstrate it
    bool passed = false;
};

struct LawReport {
    std::vector<LawCheck> entries;

    bool all_passed() const;
};

LawReport run_law_suite();

// Fixed-width table, one row per law, witness lines indented beneath.
std::string format_law_table(const LawReport& report);

} // namespace calpanic
