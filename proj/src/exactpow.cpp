#include "expdio/exactpow.hpp"

#include <atomic>

namespace expdio {

namespace {

std::atomic<std::uint64_t> g_guard_bits{kDefaultGuardBits};

[[noreturn]] void throw_too_large(const BigInt& needed, std::uint64_t limit) {
    throw ExponentTooLarge("needs " + needed.str() + " bits, guard limit is " +
                           std::to_string(limit) + " bits");
}

}  // namespace

std::uint64_t guard_bits() { return g_guard_bits.load(std::memory_order_relaxed); }

void set_guard_bits(std::uint64_t bits) {
    if (bits == 0) throw std::invalid_argument("guard limit must be >= 1 bit");
    g_guard_bits.store(bits, std::memory_order_relaxed);
}

std::uint64_t bit_length(const BigInt& v) {
    if (v.is_zero()) return 0;
    return boost::multiprecision::msb(v) + 1;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: argument must be >= 1");
    Factorization f;
    for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
        while (n % d == 0) {
            f.factors[d] += 1;
            n /= d;
        }
    }
    if (n > 1) f.factors[n] += 1;
    return f;
}

CanonicalPower canonicalize(const PowerExpr& p) {
    if (p.base == 0) throw std::invalid_argument("canonicalize: base must be >= 1");
    if (p.exponent < 1) throw std::invalid_argument("canonicalize: exponent must be >= 1");
    const std::uint64_t limit = guard_bits();
    if (bit_length(p.exponent) > limit) throw_too_large(BigInt(bit_length(p.exponent)), limit);

    CanonicalPower c;
    if (p.base == 1) return c;
    for (const auto& [prime, mult] : factorize(p.base).factors) {
        c.factors.emplace(prime, mult * p.exponent);
    }
    return c;
}

bool power_equal(const PowerExpr& lhs, const PowerExpr& rhs) {
    return canonicalize(lhs) == canonicalize(rhs);
}

BigInt big_pow(std::uint64_t base, const BigInt& exp) {
    if (base == 0) throw std::invalid_argument("big_pow: base must be >= 1");
    if (exp < 0) throw std::invalid_argument("big_pow: exponent must be >= 0");
    if (base == 1 || exp.is_zero()) return 1;

    const std::uint64_t limit = guard_bits();
    // base >= 2 here, so the result needs at least (bits(base)-1)*exp + 1 bits;
    // rejecting on that lower bound keeps enormous exponents cheap.
    const BigInt at_least = (bit_length(BigInt(base)) - 1) * exp + 1;
    if (at_least > limit) throw_too_large(at_least, limit);

    BigInt result = 1;
    BigInt square = base;
    BigInt e = exp;
    while (true) {
        if (boost::multiprecision::bit_test(e, 0)) {
            result *= square;
            if (bit_length(result) > limit) throw_too_large(BigInt(bit_length(result)), limit);
        }
        e >>= 1;
        if (e.is_zero()) break;
        square *= square;
        // a squared factor that already busts the guard will be folded into
        // the result by a remaining one-bit of e
        if (bit_length(square) > limit) throw_too_large(BigInt(bit_length(square)), limit);
    }
    return result;
}

}  // namespace expdio
