#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "expdio/exactpow.hpp"

namespace expdio {

/// The five three-variable equations plus the two-variable key equation:
///   E1: x^(y^z) = x^(y*z)
///   E2: x^(y^z) = x^(z^y)
///   E3: x^(y^z) = y^(x*z)
///   E4: x^(y*z) = y^(x*z)
///   E5: x^(y^z) = z^(x*y)
///   Key2: x^y = y^x  (pairs, not triples)
enum class EquationId { E1, E2, E3, E4, E5, Key2 };

struct Triple {
    std::uint64_t x = 1;
    std::uint64_t y = 1;
    std::uint64_t z = 1;

    auto operator<=>(const Triple&) const = default;
};

struct Pair {
    std::uint64_t x = 1;
    std::uint64_t y = 1;

    auto operator<=>(const Pair&) const = default;
};

/// "e1".."e5", "key2".
std::string_view equation_tag(EquationId eq);

/// Parses a tag, case-insensitively. Unknown tags yield nullopt.
std::optional<EquationId> equation_from_tag(std::string_view tag);

/// Left and right sides of eq at t as unevaluated powers. Tower exponents
/// (y^z, z^y) are computed exactly in arbitrary precision. eq must not be
/// Key2; every component of t must be >= 1.
std::pair<PowerExpr, PowerExpr> sides(EquationId eq, const Triple& t);

/// True iff t solves eq, decided without evaluating either side.
bool satisfies(EquationId eq, const Triple& t);

/// True iff x^y = y^x exactly.
bool satisfies_pair(const Pair& p);

}  // namespace expdio
