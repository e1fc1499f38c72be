#include "cobweb/verify.hpp"

#include <utility>

#include "cobweb/errors.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

VerificationReport verify(const SequenceSpec& spec, std::size_t n,
                          const VerifyOptions& options) {
    const OracleLimits limits{options.max_interval};

    VerificationReport report;
    report.spec_name = spec.name.empty() ? render(spec) : spec.name;
    report.n = n;
    report.entries.reserve(n + 1);

    bool all_agree = true;
    for (std::size_t m = 0; m <= n; ++m) {
        VerifyEntry entry;
        entry.n = m;
        entry.closed = charpoly_closed(spec, m);
        entry.recurrence = charpoly_recurrence(spec, m);
        try {
            entry.bruteforce = charpoly_bruteforce(CobwebPoset(spec, m), limits);
        } catch (const resource_limit_error&) {
            entry.bruteforce = std::nullopt;
        }
        entry.agree = entry.closed == entry.recurrence &&
                      (!entry.bruteforce.has_value() || *entry.bruteforce == entry.closed);
        all_agree = all_agree && entry.agree;
        report.entries.push_back(std::move(entry));
    }

    report.closed_tables = whitney_closed(spec, n);
    try {
        const CobwebPoset poset(spec, n);
        report.brute_mobius = mobius_table_bruteforce(poset, limits);
        report.brute_whitney = whitney_bruteforce(poset, limits);
    } catch (const resource_limit_error&) {
        report.brute_mobius = std::nullopt;
        report.brute_whitney = std::nullopt;
    }
    if (report.brute_mobius.has_value()) {
        report.tables_agree =
            report.brute_mobius->mu_by_rank == report.closed_tables.mu_closed &&
            report.brute_whitney->first_kind == report.closed_tables.w_closed;
        for (std::size_t k = 0; k <= n && report.tables_agree; ++k) {
            report.tables_agree = report.brute_whitney->second_kind[k] == evaluate(spec, k);
        }
    }

    report.pass = all_agree && report.tables_agree;
    return report;
}

int report_exit_code(const VerificationReport& report) {
    return report.pass ? 0 : 1;
}

}  // namespace cobweb
