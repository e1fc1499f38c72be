#include "cobweb/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace cobweb {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json coefficient_strings(std::size_t n, const IntPolynomial& p) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i <= n; ++i) {
        arr.push_back(p.coefficient(i).get_str());
    }
    return arr;
}

std::string pad_left(const std::string& text, std::size_t width) {
    return text.size() >= width ? text : std::string(width - text.size(), ' ') + text;
}

std::string pad_right(const std::string& text, std::size_t width) {
    return text.size() >= width ? text : text + std::string(width - text.size(), ' ');
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
    if (text == "text") return OutputFormat::text;
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    if (text == "dot") return OutputFormat::dot;
    throw std::invalid_argument("unrecognized output format '" + std::string(text) + "'");
}

std::string render_charpoly_json(std::size_t n, const IntPolynomial& chi) {
    ordered_json doc;
    doc["n"] = n;
    doc["coefficients"] = coefficient_strings(n, chi);
    return doc.dump();
}

std::string render_whitney_text(std::string_view seq_name,
                                std::span<const std::uint64_t> second_kind,
                                std::span<const mpz_class> first_kind) {
    std::vector<std::string> k_col{"k"}, W_col{"W_k"}, w_col{"w_k"};
    for (std::size_t k = 0; k < second_kind.size(); ++k) {
        k_col.push_back(std::to_string(k));
        W_col.push_back(std::to_string(second_kind[k]));
        w_col.push_back(first_kind[k].get_str());
    }
    const auto width = [](const std::vector<std::string>& col) {
        std::size_t w = 0;
        for (const auto& cell : col) w = std::max(w, cell.size());
        return w;
    };
    const std::size_t kw = width(k_col), Ww = width(W_col), ww = width(w_col);

    std::ostringstream os;
    os << "seq: " << seq_name << "\n";
    for (std::size_t row = 0; row < k_col.size(); ++row) {
        os << "  " << pad_left(k_col[row], kw) << "  " << pad_left(W_col[row], Ww) << "  "
           << pad_left(w_col[row], ww) << "\n";
    }
    return os.str();
}

std::string render_whitney_json(std::string_view seq_name,
                                std::span<const std::uint64_t> second_kind,
                                std::span<const mpz_class> first_kind) {
    ordered_json doc;
    doc["seq"] = std::string(seq_name);
    doc["n"] = second_kind.empty() ? 0 : second_kind.size() - 1;
    ordered_json rows = ordered_json::array();
    for (std::size_t k = 0; k < second_kind.size(); ++k) {
        ordered_json row;
        row["k"] = k;
        row["W"] = std::to_string(second_kind[k]);
        row["w"] = first_kind[k].get_str();
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc.dump();
}

std::string render_whitney_csv(std::span<const std::uint64_t> second_kind,
                               std::span<const mpz_class> first_kind) {
    std::ostringstream os;
    os << "k,W_k,w_k\n";
    for (std::size_t k = 0; k < second_kind.size(); ++k) {
        os << k << ',' << second_kind[k] << ',' << first_kind[k].get_str() << "\n";
    }
    return os.str();
}

std::string render_report_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "seq: " << report.spec_name << "\n";
    os << "n: " << report.n << "\n";

    const std::size_t m_width = std::max<std::size_t>(1, std::to_string(report.n).size());
    os << "  " << pad_left("m", m_width) << "  recurrence  bruteforce  agree  closed form\n";
    for (const VerifyEntry& entry : report.entries) {
        const std::string recurrence = entry.recurrence == entry.closed ? "ok" : "differs";
        const std::string bruteforce =
            !entry.bruteforce.has_value() ? "skipped"
            : (*entry.bruteforce == entry.closed ? "ok" : "differs");
        os << "  " << pad_left(std::to_string(entry.n), m_width) << "  "
           << pad_right(recurrence, 10) << "  " << pad_right(bruteforce, 10) << "  "
           << pad_right(entry.agree ? "yes" : "no", 5) << "  " << to_string(entry.closed)
           << "\n";
    }
    os << "tables: "
       << (!report.brute_mobius.has_value() ? "skipped"
                                            : (report.tables_agree ? "ok" : "differs"))
       << "\n";
    os << "status: " << (report.pass ? "pass" : "fail") << "\n";
    return os.str();
}

std::string render_report_json(const VerificationReport& report) {
    ordered_json doc;
    doc["spec_name"] = report.spec_name;
    doc["n"] = report.n;
    ordered_json per_n = ordered_json::array();
    for (const VerifyEntry& entry : report.entries) {
        ordered_json item;
        item["n"] = entry.n;
        item["closed"] = coefficient_strings(entry.n, entry.closed);
        item["recurrence"] = coefficient_strings(entry.n, entry.recurrence);
        if (entry.bruteforce.has_value()) {
            item["bruteforce"] = coefficient_strings(entry.n, *entry.bruteforce);
        } else {
            item["bruteforce"] = "skipped";
        }
        item["agree"] = entry.agree;
        per_n.push_back(std::move(item));
    }
    doc["per_n"] = std::move(per_n);
    doc["status"] = report.pass ? "pass" : "fail";
    return doc.dump();
}

}  // namespace cobweb
