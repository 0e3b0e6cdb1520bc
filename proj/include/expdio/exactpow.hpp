#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace expdio {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when an exponent or a result would exceed the guard bit limit.
/// The guard exists to turn runaway power towers into a reported error
/// instead of an unbounded allocation.
class ExponentTooLarge : public std::runtime_error {
public:
    explicit ExponentTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Process-wide guard: maximum permitted bit-length for exponents and for
/// values materialized by big_pow. Default 1'048'576 bits (2^20).
std::uint64_t guard_bits();
void set_guard_bits(std::uint64_t bits);

inline constexpr std::uint64_t kDefaultGuardBits = 1u << 20;

/// Bits needed to represent v (0 for v == 0). v must be non-negative.
std::uint64_t bit_length(const BigInt& v);

/// Prime -> multiplicity map of a positive integer. Empty map represents 1.
struct Factorization {
    std::map<std::uint64_t, BigInt> factors;

    bool operator==(const Factorization&) const = default;
};

/// base^exponent, never materialized. base >= 1, exponent >= 1.
struct PowerExpr {
    std::uint64_t base = 1;
    BigInt exponent = 1;
};

/// Normal form of a PowerExpr: prime -> multiplicity(base) * exponent.
/// Two PowerExprs denote the same integer iff their canonical forms are equal.
struct CanonicalPower {
    std::map<std::uint64_t, BigInt> factors;

    bool operator==(const CanonicalPower&) const = default;
};

/// Deterministic trial division up to sqrt(n). n >= 1; factorize(1) is empty.
Factorization factorize(std::uint64_t n);

/// Multiplies every base-factor multiplicity by the exponent, exactly.
/// Throws ExponentTooLarge if the exponent's bit-length exceeds the guard.
CanonicalPower canonicalize(const PowerExpr& p);

/// True iff lhs and rhs denote the same integer. Never evaluates the powers.
bool power_equal(const PowerExpr& lhs, const PowerExpr& rhs);

/// Exact base^exp by square-and-multiply. Direct-evaluation oracle for small
/// cases. Throws ExponentTooLarge once the result would exceed the guard.
BigInt big_pow(std::uint64_t base, const BigInt& exp);

}  // namespace expdio
