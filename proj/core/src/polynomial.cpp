#include "cobweb/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace cobweb {

IntPolynomial::IntPolynomial(std::initializer_list<mpz_class> ascending)
    : coeffs_(ascending) {
    canonicalize();
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) {
    canonicalize();
}

IntPolynomial IntPolynomial::constant(mpz_class c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, mpz_class c) {
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(degree + 1, mpz_class(0));
        p.coeffs_[degree] = std::move(c);
    }
    return p;
}

std::optional<std::size_t> IntPolynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

mpz_class IntPolynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

IntPolynomial IntPolynomial::times_t() const {
    if (is_zero()) return {};
    IntPolynomial p;
    p.coeffs_.reserve(coeffs_.size() + 1);
    p.coeffs_.push_back(0);
    p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return p;
}

mpz_class IntPolynomial::eval(const mpz_class& point) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * point + *it;
    }
    return acc;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial p;
    p.coeffs_.reserve(coeffs_.size());
    for (const mpz_class& c : coeffs_) p.coeffs_.push_back(-c);
    return p;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial p;
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    p.coeffs_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        p.coeffs_[i] = a.coefficient(i) + b.coefficient(i);
    }
    p.canonicalize();
    return p;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
}

void IntPolynomial::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    const auto& coeffs = p.coefficients();
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const mpz_class& c = coeffs[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const mpz_class magnitude = abs(c);
        if (magnitude != 1 || i == 0) out += magnitude.get_str();
        if (i >= 1) {
            out += 't';
            if (i >= 2) out += '^' + std::to_string(i);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    return os << to_string(p);
}

}  // namespace cobweb
