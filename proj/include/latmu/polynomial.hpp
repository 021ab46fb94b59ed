#pragma once

#include <string>
#include <vector>

namespace latmu {

// Exact integer polynomial; coefficients[k] multiplies t^k.
struct IntegerPolynomial {
    std::vector<long long> coefficients;  // constant term first, trimmed

    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<long long> c) : coefficients(std::move(c)) {
        trim();
    }

    int degree() const;  // -1 for the zero polynomial
    long long coeff(int k) const;
    long long eval(long long t) const;
    void trim();

    IntegerPolynomial operator+(const IntegerPolynomial& o) const;
    IntegerPolynomial operator*(const IntegerPolynomial& o) const;
    bool operator==(const IntegerPolynomial&) const = default;

    static IntegerPolynomial constant(long long c);
    static IntegerPolynomial monomial(long long c, int k);
    // t - root
    static IntegerPolynomial linear_root(long long root);
    static IntegerPolynomial from_roots(const std::vector<long long>& roots);

    // descending powers, e.g. "t^3-5t^2+7t-3"
    std::string expanded_str() const;
};

// "(t-1)^2*(t-3)" with roots ascending; root 0 prints as "t" / "t^k".
std::string factored_str(const std::vector<long long>& roots);

}  // namespace latmu
