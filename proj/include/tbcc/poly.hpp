// Binary polynomials in the delay operator D, packed into a 64-bit mask.
#pragma once

#include <cstdint>
#include <string>

#include "tbcc/errors.hpp"

namespace tbcc {

// Degrees stay tiny here (memory plus a handful of sections), so one word of
// coefficients is plenty; operations guard the bound.
inline constexpr int kMaxPolyDegree = 62;

class Poly {
  public:
    constexpr Poly() = default;

    static Poly zero() { return Poly{}; }
    static Poly one() { return from_mask(1); }
    static Poly monomial(int d);
    static Poly from_mask(std::uint64_t mask);

    // "1+D+D^2", "D^3", "1", "0"; also accepts "D^0" and "D^1".
    static Poly parse(const std::string& text);

    std::uint64_t mask() const { return m_; }
    bool is_zero() const { return m_ == 0; }
    bool coeff(int d) const;

    // Largest exponent with a set coefficient; -1 for the zero polynomial.
    int degree() const;
    // Smallest exponent with a set coefficient; -1 for zero. This is the
    // monomial factor D^low_degree dividing the polynomial.
    int low_degree() const;

    Poly operator+(const Poly& o) const { return from_mask(m_ ^ o.m_); }
    Poly& operator+=(const Poly& o) {
        m_ ^= o.m_;
        return *this;
    }
    Poly operator*(const Poly& o) const;

    // Multiply / exact-divide by D^k.
    Poly times_monomial(int k) const;
    Poly divide_monomial(int k) const;  // NonDivisibleError when not a factor

    // Coefficient reversal inside a degree window: D^w * p(1/D).
    Poly reversed(int window) const;

    bool divides(const Poly& divisor) const;  // divisor | *this
    static Poly gcd(Poly x, Poly y);
    // Quotient and remainder of *this by d (d nonzero).
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    bool operator==(const Poly&) const = default;
    bool operator<(const Poly& o) const { return m_ < o.m_; }

    std::string to_string() const;

  private:
    std::uint64_t m_ = 0;
};

}  // namespace tbcc
