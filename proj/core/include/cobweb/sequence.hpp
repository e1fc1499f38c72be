#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cobweb {

// A level-size ("designating") sequence {F_n}: F_0 = 1 after normalization
// and F_n >= 1 for every materialized n >= 1.
enum class SequenceKind { fibonacci, naturals, odd, even, constant, explicit_list };

struct SequenceSpec {
    SequenceKind kind = SequenceKind::fibonacci;
    std::uint64_t constant = 0;          // parameter of const:<k>
    std::vector<std::uint64_t> values;   // explicit entries, already normalized
    std::string name;                    // canonical spec text, e.g. "const:3"

    bool operator==(const SequenceSpec&) const = default;
};

// Parses the spec mini-language:
//
//   fib | nat | odd | even | const:<k> | list:<c0,c1,...>
//
// nat is F_n = n+1, odd is F_n = 2n+1, even is F_n = 2n for n >= 1 and
// const:k is F_n = k for n >= 1; every kind has F_0 = 1.  A leading 0 in a
// list (the Fibonacci-style exceptional head) is dropped and the entries
// re-indexed, so list:0,1,1,2 and list:1,1,2 are the same sequence.
//
// Throws std::invalid_argument for malformed text (naming the offending
// token) and std::domain_error for sequences with an empty level, e.g.
// const:0 or list:1,0,5.
SequenceSpec parse_sequence(std::string_view text);

// Canonical mini-language text; parse_sequence(render(s)) reproduces s.
std::string render(const SequenceSpec& spec);

// F_n.  Pure and deterministic.  Throws std::out_of_range past the end of
// an explicit list and std::overflow_error once a value no longer fits in
// 64 bits (Fibonacci overflows at n = 93).
std::uint64_t evaluate(const SequenceSpec& spec, std::size_t n);

}  // namespace cobweb
