#ifndef EIL_POLYNOMIAL_HPP
#define EIL_POLYNOMIAL_HPP

#include "eil/bigint.hpp"

#include <limits>
#include <string>
#include <vector>

namespace eil {

// Dense polynomial over the exact integers, index = degree, trailing zeros
// trimmed. The zero polynomial stores no coefficients and reports the
// -infinity degree sentinel.
class IntPolynomial {
public:
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    static IntPolynomial constant(BigInt c);
    static IntPolynomial one_minus_t_pow(int k);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt evaluate_one() const;
    BigInt leading_coefficient() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

    // * t^k
    IntPolynomial shifted(int k) const;
    // exact division; requires evaluate_one() == 0
    IntPolynomial divided_by_one_minus_t() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    // ascending form, e.g. "1 + 8*t + 11*t^2"
    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

} // namespace eil

#endif
