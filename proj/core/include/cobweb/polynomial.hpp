#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cobweb {

// Dense polynomial in t with exact integer coefficients; coefficient i
// belongs to t^i.  Always canonical: no trailing zero coefficients, and
// the zero polynomial keeps an empty coefficient vector and no degree.
class IntPolynomial {
public:
    IntPolynomial() = default;  // the zero polynomial
    IntPolynomial(std::initializer_list<mpz_class> ascending);
    explicit IntPolynomial(std::vector<mpz_class> ascending);

    static IntPolynomial constant(mpz_class c);
    static IntPolynomial monomial(std::size_t degree, mpz_class c = 1);

    const std::vector<mpz_class>& coefficients() const { return coeffs_; }
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    // Coefficient of t^i; zero beyond the stored range.
    mpz_class coefficient(std::size_t i) const;

    // Multiplication by t (index shift by one).
    IntPolynomial times_t() const;
    // Exact Horner evaluation.
    mpz_class eval(const mpz_class& point) const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    bool operator==(const IntPolynomial&) const = default;

private:
    void canonicalize();

    std::vector<mpz_class> coeffs_;
};

// Descending powers with explicit signs, zero terms and unit coefficients
// omitted: "t^2 - 3t + 10", "t - 1", "1"; the zero polynomial is "0".
std::string to_string(const IntPolynomial& p);
std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace cobweb
