#include "khoma/laurent.hpp"

namespace khoma {

Laurent Laurent::monomial(std::int64_t coeff, int exponent) {
    Laurent p;
    p.add_term(coeff, exponent);
    return p;
}

Laurent Laurent::circle_weight() {
    Laurent p;
    p.add_term(-1, 2);
    p.add_term(-1, -2);
    return p;
}

std::int64_t Laurent::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

void Laurent::add_term(std::int64_t coeff, int exponent) {
    if (coeff == 0)
        return;
    auto it = coeffs_.find(exponent);
    if (it == coeffs_.end()) {
        coeffs_.emplace(exponent, coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0)
        coeffs_.erase(it);
}

Laurent& Laurent::operator+=(const Laurent& other) {
    for (const auto& [e, c] : other.coeffs_)
        add_term(c, e);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) {
    for (const auto& [e, c] : other.coeffs_)
        add_term(checked_mul(c, -1), e);
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent p;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            int e;
            if (__builtin_add_overflow(ea, eb, &e))
                throw overflow_error("exponent overflow in multiplication");
            p.add_term(checked_mul(ca, cb), e);
        }
    return p;
}

Laurent& Laurent::operator*=(const Laurent& other) {
    *this = *this * other;
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent p;
    for (const auto& [e, c] : coeffs_)
        p.coeffs_.emplace(e, -c);
    return p;
}

Laurent Laurent::pow(int k) const {
    if (k < 0)
        throw error("Laurent::pow: negative exponent");
    Laurent r = laurent_one();
    for (int i = 0; i < k; ++i)
        r *= *this;
    return r;
}

} // namespace khoma
