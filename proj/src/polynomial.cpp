#include "eil/polynomial.hpp"

#include <stdexcept>

namespace eil {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::one_minus_t_pow(int k) {
    if (k < 0) throw std::invalid_argument("negative power of (1-t)");
    // binomial expansion with alternating signs
    std::vector<BigInt> c(static_cast<std::size_t>(k) + 1);
    c[0] = 1;
    for (std::size_t i = 1; i < c.size(); ++i)
        c[i] = -c[i - 1] * (k - static_cast<int>(i) + 1) / static_cast<int>(i);
    return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPolynomial::evaluate_one() const {
    BigInt total = 0;
    for (const BigInt& c : coeffs_) total += c;
    return total;
}

IntPolynomial IntPolynomial::shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<BigInt> c(static_cast<std::size_t>(k), 0);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divided_by_one_minus_t() const {
    if (is_zero()) return *this;
    if (evaluate_one() != 0)
        throw std::invalid_argument("polynomial not divisible by (1-t)");
    // p = (1-t) q  =>  q_i = p_i + q_{i-1}
    std::vector<BigInt> q(coeffs_.size() - 1);
    BigInt carry = 0;
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
        carry += coeffs_[i];
        q[i] = carry;
    }
    return IntPolynomial(std::move(q));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        bool unit = (mag == 1) && i > 0;
        if (!unit) s += mag.str();
        if (i > 0) {
            if (!unit) s += "*";
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace eil
