#include "latmu/polynomial.hpp"

#include <algorithm>
#include <map>

namespace latmu {

void IntegerPolynomial::trim() {
    while (!coefficients.empty() && coefficients.back() == 0)
        coefficients.pop_back();
}

int IntegerPolynomial::degree() const {
    return static_cast<int>(coefficients.size()) - 1;
}

long long IntegerPolynomial::coeff(int k) const {
    return (k >= 0 && k <= degree()) ? coefficients[static_cast<size_t>(k)] : 0;
}

long long IntegerPolynomial::eval(long long t) const {
    long long v = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        v = v * t + *it;
    return v;
}

IntegerPolynomial IntegerPolynomial::operator+(const IntegerPolynomial& o) const {
    std::vector<long long> c(std::max(coefficients.size(), o.coefficients.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& o) const {
    if (coefficients.empty() || o.coefficients.empty()) return {};
    std::vector<long long> c(coefficients.size() + o.coefficients.size() - 1, 0);
    for (size_t i = 0; i < coefficients.size(); ++i)
        for (size_t j = 0; j < o.coefficients.size(); ++j)
            c[i + j] += coefficients[i] * o.coefficients[j];
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial IntegerPolynomial::constant(long long c) {
    return IntegerPolynomial({c});
}

IntegerPolynomial IntegerPolynomial::monomial(long long c, int k) {
    std::vector<long long> v(static_cast<size_t>(k) + 1, 0);
    v.back() = c;
    return IntegerPolynomial(std::move(v));
}

IntegerPolynomial IntegerPolynomial::linear_root(long long root) {
    return IntegerPolynomial({-root, 1});
}

IntegerPolynomial IntegerPolynomial::from_roots(const std::vector<long long>& roots) {
    IntegerPolynomial p = constant(1);
    for (long long r : roots) p = p * linear_root(r);
    return p;
}

std::string IntegerPolynomial::expanded_str() const {
    if (coefficients.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const long long c = coeff(k);
        if (c == 0) continue;
        if (!s.empty())
            s += c > 0 ? "+" : "-";
        else if (c < 0)
            s += "-";
        const long long a = c < 0 ? -c : c;
        if (a != 1 || k == 0) s += std::to_string(a);
        if (k >= 1) s += "t";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
}

std::string factored_str(const std::vector<long long>& roots) {
    if (roots.empty()) return "1";
    std::map<long long, int> mult;
    for (long long r : roots) ++mult[r];
    std::string s;
    for (auto [r, m] : mult) {
        if (!s.empty()) s += "*";
        s += r == 0 ? "t" : "(t-" + std::to_string(r) + ")";
        if (m > 1) s += "^" + std::to_string(m);
    }
    return s;
}

}  // namespace latmu
