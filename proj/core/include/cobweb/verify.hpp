#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cobweb/charpoly.hpp"
#include "cobweb/oracle.hpp"
#include "cobweb/polynomial.hpp"
#include "cobweb/sequence.hpp"

namespace cobweb {

struct VerifyOptions {
    std::uint64_t max_interval = 1'000'000;
};

struct VerifyEntry {
    std::size_t n = 0;
    IntPolynomial closed;
    IntPolynomial recurrence;
    // Empty when the brute-force leg hit the resource cap and was skipped.
    std::optional<IntPolynomial> bruteforce;
    bool agree = false;  // every computed pair equal
};

// Three-way cross-validation of chi_m for every m <= n, plus the Whitney
// and mobius tables from the closed-form and brute-force sides.
struct VerificationReport {
    std::string spec_name;
    std::size_t n = 0;
    std::vector<VerifyEntry> entries;  // m = 0..n
    ClosedFormTables closed_tables;
    std::optional<MobiusTable> brute_mobius;    // empty above the cap
    std::optional<WhitneyTable> brute_whitney;  // empty above the cap
    bool tables_agree = true;
    bool pass = false;
};

// Runs all three implementations.  A brute-force resource error downgrades
// that leg to skipped; the closed-form and recurrence legs always run.
VerificationReport verify(const SequenceSpec& spec, std::size_t n,
                          const VerifyOptions& options = {});

// Process exit status a report maps to: 0 pass, 1 any disagreement.
int report_exit_code(const VerificationReport& report);

}  // namespace cobweb
