#include "expdio/equations.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace expdio {

namespace {

void require_positive(const Triple& t) {
    if (t.x == 0 || t.y == 0 || t.z == 0) {
        throw std::invalid_argument("triple components must be >= 1");
    }
}

}  // namespace

std::string_view equation_tag(EquationId eq) {
    switch (eq) {
        case EquationId::E1: return "e1";
        case EquationId::E2: return "e2";
        case EquationId::E3: return "e3";
        case EquationId::E4: return "e4";
        case EquationId::E5: return "e5";
        case EquationId::Key2: return "key2";
    }
    throw std::invalid_argument("unknown equation id");
}

std::optional<EquationId> equation_from_tag(std::string_view tag) {
    std::string lower;
    lower.reserve(tag.size());
    for (char ch : tag) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (lower == "e1") return EquationId::E1;
    if (lower == "e2") return EquationId::E2;
    if (lower == "e3") return EquationId::E3;
    if (lower == "e4") return EquationId::E4;
    if (lower == "e5") return EquationId::E5;
    if (lower == "key2") return EquationId::Key2;
    return std::nullopt;
}

std::pair<PowerExpr, PowerExpr> sides(EquationId eq, const Triple& t) {
    require_positive(t);
    const BigInt x = t.x, y = t.y, z = t.z;
    switch (eq) {
        case EquationId::E1:
            return {PowerExpr{t.x, big_pow(t.y, z)}, PowerExpr{t.x, y * z}};
        case EquationId::E2:
            return {PowerExpr{t.x, big_pow(t.y, z)}, PowerExpr{t.x, big_pow(t.z, y)}};
        case EquationId::E3:
            return {PowerExpr{t.x, big_pow(t.y, z)}, PowerExpr{t.y, x * z}};
        case EquationId::E4:
            return {PowerExpr{t.x, y * z}, PowerExpr{t.y, x * z}};
        case EquationId::E5:
            return {PowerExpr{t.x, big_pow(t.y, z)}, PowerExpr{t.z, x * y}};
        case EquationId::Key2:
            break;
    }
    throw std::invalid_argument("sides: equation must be one of e1..e5");
}

bool satisfies(EquationId eq, const Triple& t) {
    const auto [lhs, rhs] = sides(eq, t);
    return power_equal(lhs, rhs);
}

bool satisfies_pair(const Pair& p) {
    if (p.x == 0 || p.y == 0) throw std::invalid_argument("pair components must be >= 1");
    return power_equal(PowerExpr{p.x, BigInt(p.y)}, PowerExpr{p.y, BigInt(p.x)});
}

}  // namespace expdio
