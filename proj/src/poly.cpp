#include "tbcc/poly.hpp"

#include <bit>
#include <cctype>

namespace tbcc {

Poly Poly::monomial(int d) {
    if (d < 0 || d > kMaxPolyDegree) {
        throw DimensionError("monomial degree out of range: " + std::to_string(d));
    }
    return from_mask(std::uint64_t{1} << d);
}

Poly Poly::from_mask(std::uint64_t mask) {
    if (mask >> (kMaxPolyDegree + 1)) {
        throw DimensionError("polynomial degree exceeds supported range");
    }
    Poly p;
    p.m_ = mask;
    return p;
}

bool Poly::coeff(int d) const {
    if (d < 0 || d > kMaxPolyDegree) {
        return false;
    }
    return (m_ >> d) & 1u;
}

int Poly::degree() const {
    if (m_ == 0) {
        return -1;
    }
    return 63 - std::countl_zero(m_);
}

int Poly::low_degree() const {
    if (m_ == 0) {
        return -1;
    }
    return std::countr_zero(m_);
}

Poly Poly::operator*(const Poly& o) const {
    if (m_ == 0 || o.m_ == 0) {
        return zero();
    }
    if (degree() + o.degree() > kMaxPolyDegree) {
        throw DimensionError("polynomial product degree exceeds supported range");
    }
    std::uint64_t acc = 0;
    std::uint64_t a = m_;
    int shift = 0;
    while (a) {
        if (a & 1u) {
            acc ^= o.m_ << shift;
        }
        a >>= 1;
        ++shift;
    }
    return from_mask(acc);
}

Poly Poly::times_monomial(int k) const {
    if (m_ == 0) {
        return zero();
    }
    if (degree() + k > kMaxPolyDegree) {
        throw DimensionError("monomial multiple exceeds supported degree range");
    }
    return from_mask(m_ << k);
}

Poly Poly::divide_monomial(int k) const {
    if (k == 0 || m_ == 0) {
        return *this;
    }
    if (low_degree() < k) {
        throw NonDivisibleError("polynomial " + to_string() +
                                " not divisible by D^" + std::to_string(k));
    }
    return from_mask(m_ >> k);
}

Poly Poly::reversed(int window) const {
    if (m_ == 0) {
        return zero();
    }
    if (degree() > window) {
        throw DimensionError("reversal window smaller than degree");
    }
    std::uint64_t out = 0;
    for (int d = 0; d <= window; ++d) {
        if ((m_ >> d) & 1u) {
            out |= std::uint64_t{1} << (window - d);
        }
    }
    return from_mask(out);
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) {
        throw DimensionError("polynomial division by zero");
    }
    std::uint64_t rem = m_;
    std::uint64_t quot = 0;
    int dd = d.degree();
    while (rem != 0) {
        int rd = 63 - std::countl_zero(rem);
        if (rd < dd) {
            break;
        }
        quot |= std::uint64_t{1} << (rd - dd);
        rem ^= d.m_ << (rd - dd);
    }
    return {from_mask(quot), from_mask(rem)};
}

bool Poly::divides(const Poly& divisor) const {
    if (divisor.is_zero()) {
        return is_zero();
    }
    return divmod(divisor).second.is_zero();
}

Poly Poly::gcd(Poly x, Poly y) {
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x;
}

Poly Poly::parse(const std::string& text) {
    // Terms separated by '+': "1", "D", or "D^k". Whitespace is ignored.
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    if (s.empty()) {
        throw ParseError("empty polynomial");
    }
    if (s == "0") {
        return zero();
    }
    std::uint64_t mask = 0;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (term.empty()) {
            throw ParseError("empty term in polynomial: " + text);
        }
        int d;
        if (term == "1") {
            d = 0;
        } else if (term == "D") {
            d = 1;
        } else if (term.size() > 2 && term[0] == 'D' && term[1] == '^') {
            d = 0;
            for (std::size_t i = 2; i < term.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(term[i]))) {
                    throw ParseError("bad exponent in term: " + term);
                }
                d = d * 10 + (term[i] - '0');
                if (d > kMaxPolyDegree) {
                    throw ParseError("exponent out of range in term: " + term);
                }
            }
        } else {
            throw ParseError("bad polynomial term: " + term);
        }
        mask ^= std::uint64_t{1} << d;  // repeated terms cancel over GF(2)
        pos = next == std::string::npos ? s.size() : next + 1;
    }
    return from_mask(mask);
}

std::string Poly::to_string() const {
    if (m_ == 0) {
        return "0";
    }
    std::string out;
    for (int d = 0; d <= degree(); ++d) {
        if (!coeff(d)) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        if (d == 0) {
            out += "1";
        } else if (d == 1) {
            out += "D";
        } else {
            out += "D^" + std::to_string(d);
        }
    }
    return out;
}

}  // namespace tbcc
