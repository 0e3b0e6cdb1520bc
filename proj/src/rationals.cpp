#include "expdio/rationals.hpp"

#include <limits>
#include <stdexcept>

namespace expdio {

RationalSolution rational_solution(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("rational_solution: n must be >= 1");
    if (n == std::numeric_limits<std::uint64_t>::max()) {
        throw std::invalid_argument("rational_solution: n + 1 must fit in 64 bits");
    }

    // n and n+1 are coprime, so these quotients are already in lowest terms;
    // cpp_rational normalizes anyway. The guard inside big_pow caps n.
    const BigInt num_x = big_pow(n + 1, BigInt(n));
    const BigInt den_x = big_pow(n, BigInt(n));
    const BigInt num_y = num_x * (n + 1);
    const BigInt den_y = den_x * n;

    RationalSolution s;
    s.n = n;
    s.x = Rational(num_x, den_x);
    s.y = Rational(num_y, den_y);
    return s;
}

bool verify_rational_solution(const RationalSolution& s) {
    if (s.n == 0 || s.x <= 0 || s.y <= 0) return false;
    // For x = r^n and y = r^(n+1) with r = (n+1)/n, the equation x^y = y^x
    // reduces to n*y = (n+1)*x; any deviation in x or y breaks it.
    const Rational lhs = Rational(BigInt(s.n)) * s.y;
    const Rational rhs = Rational(BigInt(s.n) + 1) * s.x;
    return lhs == rhs;
}

bool is_proper_rational(const Rational& r) {
    return boost::multiprecision::denominator(r) > 1;
}

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace expdio
