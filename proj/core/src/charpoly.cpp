#include "cobweb/charpoly.hpp"

#include <utility>

namespace cobweb {

mpz_class mobius_closed(const SequenceSpec& spec, std::size_t k) {
    if (k == 0) return 1;
    mpz_class product = 1;
    for (std::size_t i = 1; i < k; ++i) {
        product *= mpz_class(evaluate(spec, i)) - 1;
    }
    return k % 2 == 0 ? product : mpz_class(-product);
}

ClosedFormTables whitney_closed(const SequenceSpec& spec, std::size_t n) {
    ClosedFormTables tables;
    tables.n = n;
    tables.mu_closed.resize(n + 1);
    tables.w_closed.resize(n + 1);
    tables.products.resize(n + 1);
    tables.mu_closed[0] = 1;
    tables.w_closed[0] = 1;
    tables.products[0] = 1;

    mpz_class product = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k >= 2) product *= mpz_class(evaluate(spec, k - 1)) - 1;
        tables.products[k] = product;
        tables.mu_closed[k] = k % 2 == 0 ? product : mpz_class(-product);
        tables.w_closed[k] = tables.mu_closed[k] * mpz_class(evaluate(spec, k));
    }
    return tables;
}

IntPolynomial charpoly_closed(const SequenceSpec& spec, std::size_t n) {
    ClosedFormTables tables = whitney_closed(spec, n);
    std::vector<mpz_class> ascending(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        ascending[n - k] = std::move(tables.w_closed[k]);
    }
    return IntPolynomial(std::move(ascending));
}

IntPolynomial charpoly_recurrence(const SequenceSpec& spec, std::size_t n) {
    if (n == 0) return IntPolynomial::constant(1);
    IntPolynomial chi{-mpz_class(evaluate(spec, 1)), 1};
    mpz_class product = 1;  // (F_1 - 1)...(F_{m-1} - 1), grown one factor per step
    for (std::size_t m = 2; m <= n; ++m) {
        product *= mpz_class(evaluate(spec, m - 1)) - 1;
        mpz_class tail = mpz_class(evaluate(spec, m)) * product;
        if (m % 2 != 0) tail = -tail;
        chi = chi.times_t() + IntPolynomial::constant(std::move(tail));
    }
    return chi;
}

}  // namespace cobweb
