#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "cobweb/polynomial.hpp"
#include "cobweb/sequence.hpp"

namespace cobweb {

// Product-formula counterparts of the brute-force tables.  The rank-k value
// of mu(0, .) is (-1)^k (F_1 - 1)(F_2 - 1)...(F_{k-1} - 1); everything else
// follows from it with one extra factor per rank.

struct ClosedFormTables {
    std::size_t n = 0;
    std::vector<mpz_class> mu_closed;  // rank-k value of mu(0, .)
    std::vector<mpz_class> w_closed;   // Whitney numbers of the first kind
    // products[k] = (F_1 - 1)...(F_{k-1} - 1); products[0] and products[1]
    // are the empty product 1.
    std::vector<mpz_class> products;
};

mpz_class mobius_closed(const SequenceSpec& spec, std::size_t k);

// All three columns in one pass, extending the running product by one
// factor per rank.
ClosedFormTables whitney_closed(const SequenceSpec& spec, std::size_t n);

// chi_n(t) = t^n + sum over k >= 1 of w_k t^{n-k}; chi_0 = 1.
IntPolynomial charpoly_closed(const SequenceSpec& spec, std::size_t n);

// Same polynomial built iteratively: chi_0 = 1, chi_1 = t - F_1, and each
// step appends the next first-kind Whitney number as the constant term of
// t * chi_{n-1}.
IntPolynomial charpoly_recurrence(const SequenceSpec& spec, std::size_t n);

}  // namespace cobweb
