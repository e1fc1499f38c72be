#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "cobweb/polynomial.hpp"
#include "cobweb/verify.hpp"

namespace cobweb {

enum class OutputFormat { text, json, csv, dot };

// "text" | "json" | "csv" | "dot"; anything else is std::invalid_argument.
OutputFormat parse_format(std::string_view text);

// {"n":..., "coefficients":["c0",...,"cn"]} with exactly n+1 coefficients,
// ascending powers, decimal strings so arbitrary precision survives any
// JSON reader.
std::string render_charpoly_json(std::size_t n, const IntPolynomial& chi);

// Aligned k / W_k / w_k table with the sequence name on top.
std::string render_whitney_text(std::string_view seq_name,
                                std::span<const std::uint64_t> second_kind,
                                std::span<const mpz_class> first_kind);
std::string render_whitney_json(std::string_view seq_name,
                                std::span<const std::uint64_t> second_kind,
                                std::span<const mpz_class> first_kind);
// Columns k,W_k,w_k; values as decimal text.
std::string render_whitney_csv(std::span<const std::uint64_t> second_kind,
                               std::span<const mpz_class> first_kind);

std::string render_report_text(const VerificationReport& report);
std::string render_report_json(const VerificationReport& report);

}  // namespace cobweb
