#include "cobweb/sequence.hpp"

#include <charconv>
#include <stdexcept>

namespace cobweb {

namespace {

std::uint64_t parse_u64(std::string_view token, std::string_view what) {
    std::uint64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument(std::string(what) + " '" + std::string(token) +
                                    "' is not a non-negative integer");
    }
    return value;
}

std::vector<std::uint64_t> split_u64(std::string_view csv) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = csv.find(',', start);
        const std::string_view token =
            comma == std::string_view::npos ? csv.substr(start) : csv.substr(start, comma - start);
        out.push_back(parse_u64(token, "list entry"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

// Enforces the explicit-list invariants and drops a Fibonacci-style
// leading zero so that entry 0 is always 1.
std::vector<std::uint64_t> normalize_explicit(std::vector<std::uint64_t> values) {
    if (values[0] > 1) {
        throw std::domain_error("explicit list entry 0 must be 0 or 1, got " +
                                std::to_string(values[0]));
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] == 0) {
            throw std::domain_error("zero level size at index " + std::to_string(i));
        }
    }
    if (values[0] == 0) {
        values.erase(values.begin());
    }
    if (values.empty() || values[0] != 1) {
        throw std::domain_error("explicit list must start with 1 (or 0,1) so that F_0 = 1");
    }
    return values;
}

std::uint64_t checked_double(std::size_t n, std::uint64_t offset, const char* label) {
    std::uint64_t twice = 0;
    if (__builtin_mul_overflow(static_cast<std::uint64_t>(n), std::uint64_t{2}, &twice) ||
        __builtin_add_overflow(twice, offset, &twice)) {
        throw std::overflow_error(std::string(label) + " level size exceeds 64 bits at index " +
                                  std::to_string(n));
    }
    return twice;
}

}  // namespace

SequenceSpec parse_sequence(std::string_view text) {
    SequenceSpec spec;
    if (text == "fib") {
        spec.kind = SequenceKind::fibonacci;
    } else if (text == "nat") {
        spec.kind = SequenceKind::naturals;
    } else if (text == "odd") {
        spec.kind = SequenceKind::odd;
    } else if (text == "even") {
        spec.kind = SequenceKind::even;
    } else if (text.starts_with("const:")) {
        spec.kind = SequenceKind::constant;
        spec.constant = parse_u64(text.substr(6), "constant");
        if (spec.constant == 0) {
            throw std::domain_error("const:0 would make every level past 0 empty");
        }
    } else if (text.starts_with("list:")) {
        spec.kind = SequenceKind::explicit_list;
        spec.values = normalize_explicit(split_u64(text.substr(5)));
    } else {
        throw std::invalid_argument("unrecognized sequence spec '" + std::string(text) + "'");
    }
    spec.name = render(spec);
    return spec;
}

std::string render(const SequenceSpec& spec) {
    switch (spec.kind) {
        case SequenceKind::fibonacci: return "fib";
        case SequenceKind::naturals: return "nat";
        case SequenceKind::odd: return "odd";
        case SequenceKind::even: return "even";
        case SequenceKind::constant: return "const:" + std::to_string(spec.constant);
        case SequenceKind::explicit_list: {
            std::string out = "list:";
            for (std::size_t i = 0; i < spec.values.size(); ++i) {
                if (i > 0) out += ',';
                out += std::to_string(spec.values[i]);
            }
            return out;
        }
    }
    throw std::logic_error("unhandled sequence kind");
}

std::uint64_t evaluate(const SequenceSpec& spec, std::size_t n) {
    switch (spec.kind) {
        case SequenceKind::fibonacci: {
            // normalized: 1, 1, 2, 3, 5, ...
            if (n <= 1) return 1;
            std::uint64_t a = 1, b = 1;
            for (std::size_t i = 2; i <= n; ++i) {
                std::uint64_t next = 0;
                if (__builtin_add_overflow(a, b, &next)) {
                    throw std::overflow_error("fibonacci level size exceeds 64 bits at index " +
                                              std::to_string(n));
                }
                a = b;
                b = next;
            }
            return b;
        }
        case SequenceKind::naturals: {
            std::uint64_t value = 0;
            if (__builtin_add_overflow(static_cast<std::uint64_t>(n), std::uint64_t{1}, &value)) {
                throw std::overflow_error("naturals level size exceeds 64 bits at index " +
                                          std::to_string(n));
            }
            return value;
        }
        case SequenceKind::odd:
            return checked_double(n, 1, "odd");
        case SequenceKind::even:
            return n == 0 ? 1 : checked_double(n, 0, "even");
        case SequenceKind::constant:
            return n == 0 ? 1 : spec.constant;
        case SequenceKind::explicit_list:
            if (n >= spec.values.size()) {
                throw std::out_of_range("index " + std::to_string(n) +
                                        " is out of range for an explicit sequence of length " +
                                        std::to_string(spec.values.size()));
            }
            return spec.values[n];
    }
    throw std::logic_error("unhandled sequence kind");
}

}  // namespace cobweb
