#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "cobweb/polynomial.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

// Ground truth computed straight from the incidence-algebra definitions:
// mu(x,x) = 1 and mu(x,y) = -sum of mu(x,z) over x <= z < y.  Nothing here
// uses the product formulas, so these results can audit them.
//
// Two tiers:
//   - a rank-aggregated recursion.  Within any interval of this poset the
//     vertices of one level are interchangeable, so one value per rank
//     suffices and a whole level enters the running sum as size * value;
//   - a fully materialized per-vertex recursion for small posets, driven
//     purely by the order predicate.  mobius_table_bruteforce runs it as a
//     cross-check whenever the poset is small enough, which certifies the
//     aggregation step instead of assuming level interchangeability.

struct OracleLimits {
    // Computations refuse with resource_limit_error rather than materialize
    // an interval with more elements than this.
    std::uint64_t max_interval = 1'000'000;
    // Vertex-count bound under which mobius_table_bruteforce also runs the
    // materialized tier as a cross-check (it is quadratic, so it stays off
    // for large posets).
    std::uint64_t validation_cap = 1024;
};

struct MobiusTable {
    std::size_t poset_n = 0;
    // mu(0, x) for any x of rank k; mu_by_rank[0] = 1.
    std::vector<mpz_class> mu_by_rank;
    // Per-vertex values raw[s][j-1] = mu(0, <j,s>) when the materialized
    // tier ran; checked to be constant along each rank.
    std::optional<std::vector<std::vector<mpz_class>>> raw;
    bool rank_uniform_verified = false;
};

struct WhitneyTable {
    std::size_t n = 0;
    std::vector<mpz_class> first_kind;       // w_0 .. w_n
    std::vector<std::uint64_t> second_kind;  // W_0 .. W_n (= level sizes)
};

// mu(x, y) by recursion over the interval [x, y].  Throws std::domain_error
// unless x <= y and resource_limit_error when the interval exceeds the cap.
mpz_class mobius_bruteforce(const CobwebPoset& p, Vertex x, Vertex y,
                            const OracleLimits& limits = {});

// The materialized tier on its own: mu(0, v) for every vertex, level-major.
std::vector<std::vector<mpz_class>> mobius_per_vertex(const CobwebPoset& p,
                                                      const OracleLimits& limits = {});

MobiusTable mobius_table_bruteforce(const CobwebPoset& p, const OracleLimits& limits = {});

// First kind by summing mu(0, .) over each rank, second kind by counting
// rank occupancy.
WhitneyTable whitney_bruteforce(const CobwebPoset& p, const OracleLimits& limits = {});

// chi_n built from the brute-force Whitney numbers: coefficient of t^{n-k}
// is w_k.  Monic of degree n.
IntPolynomial charpoly_bruteforce(const CobwebPoset& p, const OracleLimits& limits = {});

}  // namespace cobweb
