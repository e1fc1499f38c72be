#include "cobweb/oracle.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "cobweb/errors.hpp"

namespace cobweb {

namespace {

mpz_class interval_cardinality(const CobwebPoset& p, Vertex x, Vertex y) {
    if (x == y) return 1;
    mpz_class total = 2;  // x and y; their level-mates are incomparable to them
    for (std::size_t s = x.level + 1; s < y.level; ++s) {
        total += mpz_class(p.level_size(s));
    }
    return total;
}

void check_cap(const mpz_class& needed, std::uint64_t cap, const char* what) {
    if (needed > cap) {
        throw resource_limit_error(std::string(what) + " has " + needed.get_str() +
                                   " elements, above the cap of " + std::to_string(cap));
    }
}

}  // namespace

mpz_class mobius_bruteforce(const CobwebPoset& p, Vertex x, Vertex y,
                            const OracleLimits& limits) {
    if (!p.less_equal(x, y)) {
        throw std::domain_error("mobius(x, y) requires x <= y");
    }
    if (x == y) return 1;
    check_cap(interval_cardinality(p, x, y), limits.max_interval, "the interval [x, y]");
    // One value per rank: running accumulates sum of mu(x, z) over every z
    // strictly below the level being filled in.
    mpz_class running = 1;  // mu(x, x); x is alone at its level inside [x, y]
    for (std::size_t s = x.level + 1; s < y.level; ++s) {
        const mpz_class level_value = -running;
        running += level_value * mpz_class(p.level_size(s));
    }
    return -running;
}

std::vector<std::vector<mpz_class>> mobius_per_vertex(const CobwebPoset& p,
                                                      const OracleLimits& limits) {
    check_cap(p.vertex_count(), limits.max_interval, "the per-vertex table");
    const std::vector<Vertex> vertices = p.all_vertices(limits.max_interval);
    const Vertex root = p.minimum();

    std::vector<std::vector<mpz_class>> mu(p.top_level() + 1);
    for (std::size_t s = 0; s <= p.top_level(); ++s) {
        mu[s].assign(static_cast<std::size_t>(p.level_size(s)), mpz_class(0));
    }
    // all_vertices is level-ascending, a linear extension of the order, so
    // every z < y is filled in before y.
    for (const Vertex& y : vertices) {
        if (y == root) {
            mu[0][0] = 1;
            continue;
        }
        mpz_class sum = 0;
        for (const Vertex& z : vertices) {
            if (p.less_equal(root, z) && p.less(z, y)) {
                sum += mu[z.level][z.position - 1];
            }
        }
        mu[y.level][y.position - 1] = -sum;
    }
    return mu;
}

MobiusTable mobius_table_bruteforce(const CobwebPoset& p, const OracleLimits& limits) {
    check_cap(p.vertex_count(), limits.max_interval, "the poset");

    MobiusTable table;
    table.poset_n = p.top_level();
    table.mu_by_rank.resize(p.top_level() + 1);
    table.mu_by_rank[0] = 1;
    mpz_class running = 1;
    for (std::size_t k = 1; k <= p.top_level(); ++k) {
        table.mu_by_rank[k] = -running;
        running += table.mu_by_rank[k] * mpz_class(p.level_size(k));
    }

    if (p.vertex_count() <= limits.validation_cap) {
        auto raw = mobius_per_vertex(p, limits);
        for (std::size_t s = 0; s <= p.top_level(); ++s) {
            for (const mpz_class& value : raw[s]) {
                if (value != table.mu_by_rank[s]) {
                    throw std::logic_error(
                        "per-vertex mobius disagrees with the rank aggregation at rank " +
                        std::to_string(s));
                }
            }
        }
        table.raw = std::move(raw);
        table.rank_uniform_verified = true;
    }
    return table;
}

WhitneyTable whitney_bruteforce(const CobwebPoset& p, const OracleLimits& limits) {
    const MobiusTable mobius = mobius_table_bruteforce(p, limits);
    WhitneyTable table;
    table.n = p.top_level();
    table.second_kind = p.level_sizes();
    table.first_kind.reserve(table.n + 1);
    for (std::size_t k = 0; k <= table.n; ++k) {
        table.first_kind.push_back(mobius.mu_by_rank[k] * mpz_class(p.level_size(k)));
    }
    return table;
}

IntPolynomial charpoly_bruteforce(const CobwebPoset& p, const OracleLimits& limits) {
    WhitneyTable whitney = whitney_bruteforce(p, limits);
    std::vector<mpz_class> ascending(whitney.n + 1);
    for (std::size_t k = 0; k <= whitney.n; ++k) {
        ascending[whitney.n - k] = std::move(whitney.first_kind[k]);
    }
    return IntPolynomial(std::move(ascending));
}

}  // namespace cobweb
