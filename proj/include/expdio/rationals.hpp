#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "expdio/exactpow.hpp"

namespace expdio {

/// Exact rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// The n-th rational solution of x^y = y^x with x < y:
///   x = ((n+1)/n)^n,  y = ((n+1)/n)^(n+1).
/// n = 1 gives the lone integer point (2, 4); every larger n gives a pair of
/// proper rationals (n and n+1 are coprime, so the powers stay reduced).
struct RationalSolution {
    std::uint64_t n = 1;
    Rational x;
    Rational y;
};

/// Builds the n-th solution exactly. n >= 1; the guard bounds how large the
/// materialized powers (n+1)^(n+1) may grow.
RationalSolution rational_solution(std::uint64_t n);

/// True iff s satisfies the defining identity n*y = (n+1)*x, which for
/// x = r^n, y = r^(n+1), r = (n+1)/n is algebraically equivalent to
/// x^y = y^x. Exact rational arithmetic throughout; a tampered coordinate
/// fails the identity.
bool verify_rational_solution(const RationalSolution& s);

/// True iff r is not an integer (reduced denominator > 1).
bool is_proper_rational(const Rational& r);

/// "p/q" in lowest terms, or just "p" for integers.
std::string to_string(const Rational& r);

}  // namespace expdio
