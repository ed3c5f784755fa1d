#ifndef KHOMA_LAURENT_HPP
#define KHOMA_LAURENT_HPP

#include <cstdint>
#include <map>

#include "khoma/checked.hpp"

namespace khoma {

// Laurent polynomial in one variable A with exact integer coefficients.
// Zero coefficients are never stored, so operator== is structural equality.
class Laurent {
  public:
    Laurent() = default;

    static Laurent monomial(std::int64_t coeff, int exponent);

    // -A^2 - A^-2, the weight of one extra circle in a state sum.
    static Laurent circle_weight();

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t coeff(int exponent) const;
    const std::map<int, std::int64_t>& terms() const { return coeffs_; }

    void add_term(std::int64_t coeff, int exponent);

    Laurent& operator+=(const Laurent& other);
    Laurent& operator-=(const Laurent& other);
    Laurent& operator*=(const Laurent& other);

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);

    Laurent operator-() const;

    // Non-negative integer powers only.
    Laurent pow(int k) const;

    bool operator==(const Laurent& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const Laurent& other) const { return !(*this == other); }

  private:
    std::map<int, std::int64_t> coeffs_; // exponent -> nonzero coefficient
};

inline Laurent laurent_one() { return Laurent::monomial(1, 0); }

} // namespace khoma

#endif
