#include "expdio/families.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace expdio {

namespace {

// b^e == target, bailing out as soon as the partial product passes target.
// Never overflows; at most ~64 iterations since b >= 2 doubles the product.
bool pow_equals(std::uint64_t b, std::uint64_t e, std::uint64_t target) {
    if (b == 1) return target == 1;
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (v > target / b) return false;
        v *= b;
    }
    return v == target;
}

void require_positive(const Triple& t) {
    if (t.x == 0 || t.y == 0 || t.z == 0) {
        throw std::invalid_argument("triple components must be >= 1");
    }
}

constexpr std::array kE1Families = {FamilyId::T1_S1, FamilyId::T1_S2, FamilyId::T1_S3};
constexpr std::array kE2Families = {FamilyId::T2_S1, FamilyId::T2_S2, FamilyId::T2_S3,
                                    FamilyId::T2_S4, FamilyId::T2_S5};
constexpr std::array kE3Families = {FamilyId::T3_S1, FamilyId::T3_S2, FamilyId::T3_S3,
                                    FamilyId::T3_S4, FamilyId::T3_S5, FamilyId::T3_S6};
constexpr std::array kE4Families = {FamilyId::T4_S1, FamilyId::T4_S2, FamilyId::T4_S3,
                                    FamilyId::T4_S4, FamilyId::T4_S5, FamilyId::T4_S6,
                                    FamilyId::T4_S7};
constexpr std::array kE5Families = {FamilyId::T5_A, FamilyId::T5_B, FamilyId::T5_C};
constexpr std::array kKey2Families = {FamilyId::R2_S1, FamilyId::R2_S2, FamilyId::R2_S3};

}  // namespace

std::string_view family_name(FamilyId id) {
    switch (id) {
        case FamilyId::T1_S1: return "T1.S1";
        case FamilyId::T1_S2: return "T1.S2";
        case FamilyId::T1_S3: return "T1.S3";
        case FamilyId::T2_S1: return "T2.S1";
        case FamilyId::T2_S2: return "T2.S2";
        case FamilyId::T2_S3: return "T2.S3";
        case FamilyId::T2_S4: return "T2.S4";
        case FamilyId::T2_S5: return "T2.S5";
        case FamilyId::T3_S1: return "T3.S1";
        case FamilyId::T3_S2: return "T3.S2";
        case FamilyId::T3_S3: return "T3.S3";
        case FamilyId::T3_S4: return "T3.S4";
        case FamilyId::T3_S5: return "T3.S5";
        case FamilyId::T3_S6: return "T3.S6";
        case FamilyId::T4_S1: return "T4.S1";
        case FamilyId::T4_S2: return "T4.S2";
        case FamilyId::T4_S3: return "T4.S3";
        case FamilyId::T4_S4: return "T4.S4";
        case FamilyId::T4_S5: return "T4.S5";
        case FamilyId::T4_S6: return "T4.S6";
        case FamilyId::T4_S7: return "T4.S7";
        case FamilyId::T5_A: return "T5.A";
        case FamilyId::T5_B: return "T5.B";
        case FamilyId::T5_C: return "T5.C";
        case FamilyId::R2_S1: return "R2.S1";
        case FamilyId::R2_S2: return "R2.S2";
        case FamilyId::R2_S3: return "R2.S3";
    }
    throw UnknownFamily("unrecognized family id");
}

std::optional<FamilyId> family_from_name(std::string_view name) {
    for (EquationId eq : {EquationId::E1, EquationId::E2, EquationId::E3, EquationId::E4,
                          EquationId::E5, EquationId::Key2}) {
        for (FamilyId id : families_of(eq)) {
            if (family_name(id) == name) return id;
        }
    }
    return std::nullopt;
}

EquationId family_equation(FamilyId id) {
    switch (id) {
        case FamilyId::T1_S1:
        case FamilyId::T1_S2:
        case FamilyId::T1_S3: return EquationId::E1;
        case FamilyId::T2_S1:
        case FamilyId::T2_S2:
        case FamilyId::T2_S3:
        case FamilyId::T2_S4:
        case FamilyId::T2_S5: return EquationId::E2;
        case FamilyId::T3_S1:
        case FamilyId::T3_S2:
        case FamilyId::T3_S3:
        case FamilyId::T3_S4:
        case FamilyId::T3_S5:
        case FamilyId::T3_S6: return EquationId::E3;
        case FamilyId::T4_S1:
        case FamilyId::T4_S2:
        case FamilyId::T4_S3:
        case FamilyId::T4_S4:
        case FamilyId::T4_S5:
        case FamilyId::T4_S6:
        case FamilyId::T4_S7: return EquationId::E4;
        case FamilyId::T5_A:
        case FamilyId::T5_B:
        case FamilyId::T5_C: return EquationId::E5;
        case FamilyId::R2_S1:
        case FamilyId::R2_S2:
        case FamilyId::R2_S3: return EquationId::Key2;
    }
    throw UnknownFamily("unrecognized family id");
}

std::span<const FamilyId> families_of(EquationId eq) {
    switch (eq) {
        case EquationId::E1: return kE1Families;
        case EquationId::E2: return kE2Families;
        case EquationId::E3: return kE3Families;
        case EquationId::E4: return kE4Families;
        case EquationId::E5: return kE5Families;
        case EquationId::Key2: return kKey2Families;
    }
    throw std::invalid_argument("unknown equation id");
}

bool family_contains(FamilyId id, const Triple& t) {
    require_positive(t);
    switch (id) {
        case FamilyId::T1_S1: return t.x == 1;
        case FamilyId::T1_S2: return t.x >= 2 && t.z == 1;
        case FamilyId::T1_S3: return t.x >= 2 && t.y == 2 && t.z == 2;

        case FamilyId::T2_S1: return t.x == 1;
        case FamilyId::T2_S2: return t.x >= 2 && t.y == 1 && t.z == 1;
        case FamilyId::T2_S3: return t.x >= 2 && t.y >= 2 && t.y == t.z;
        case FamilyId::T2_S4: return t.x >= 2 && t.y == 4 && t.z == 2;
        case FamilyId::T2_S5: return t.x >= 2 && t.y == 2 && t.z == 4;

        case FamilyId::T3_S1: return t.x == 1 && t.y == 1;
        case FamilyId::T3_S2: return t.x >= 2 && t.x == t.y && t.z == 1;
        case FamilyId::T3_S3: return t == Triple{4, 2, 1};
        case FamilyId::T3_S4: return t == Triple{2, 4, 1};
        case FamilyId::T3_S5: return t.y >= 2 && t.z >= 2 && pow_equals(t.y, t.z, t.x);
        case FamilyId::T3_S6: return t == Triple{2, 2, 2};

        case FamilyId::T4_S1: return t.x == 1 && t.y == 1;
        case FamilyId::T4_S2: return t.x >= 2 && t.x == t.y && t.z == 1;
        case FamilyId::T4_S3: return t == Triple{4, 2, 1};
        case FamilyId::T4_S4: return t == Triple{2, 4, 1};
        case FamilyId::T4_S5: return t.x >= 2 && t.x == t.y && t.z >= 2;
        case FamilyId::T4_S6: return t.x == 4 && t.y == 2 && t.z >= 2;
        case FamilyId::T4_S7: return t.x == 2 && t.y == 4 && t.z >= 2;

        case FamilyId::T5_A: return t.x == 1 && t.z == 1;
        case FamilyId::T5_B: return t == Triple{2, 2, 2};
        case FamilyId::T5_C: return t.y >= 2 && t.y == t.z && pow_equals(t.y, t.y, t.x);

        case FamilyId::R2_S1:
        case FamilyId::R2_S2:
        case FamilyId::R2_S3:
            throw UnknownFamily(std::string(family_name(id)) + " is a pair family");
    }
    throw UnknownFamily("unrecognized family id");
}

bool family_contains(FamilyId id, const Pair& p) {
    if (p.x == 0 || p.y == 0) throw std::invalid_argument("pair components must be >= 1");
    switch (id) {
        case FamilyId::R2_S1: return p.x == p.y;
        case FamilyId::R2_S2: return p == Pair{4, 2};
        case FamilyId::R2_S3: return p == Pair{2, 4};
        default:
            throw UnknownFamily(std::string(family_name(id)) + " is a triple family");
    }
}

std::vector<Triple> family_members(FamilyId id, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be >= 1");
    const std::uint64_t n = bound;
    std::vector<Triple> out;
    switch (id) {
        case FamilyId::T1_S1:
        case FamilyId::T2_S1:
            for (std::uint64_t b = 1; b <= n; ++b)
                for (std::uint64_t c = 1; c <= n; ++c) out.push_back({1, b, c});
            break;
        case FamilyId::T1_S2:
            for (std::uint64_t a = 2; a <= n; ++a)
                for (std::uint64_t b = 1; b <= n; ++b) out.push_back({a, b, 1});
            break;
        case FamilyId::T1_S3:
            if (n >= 2)
                for (std::uint64_t a = 2; a <= n; ++a) out.push_back({a, 2, 2});
            break;
        case FamilyId::T2_S2:
            for (std::uint64_t a = 2; a <= n; ++a) out.push_back({a, 1, 1});
            break;
        case FamilyId::T2_S3:
            for (std::uint64_t a = 2; a <= n; ++a)
                for (std::uint64_t b = 2; b <= n; ++b) out.push_back({a, b, b});
            break;
        case FamilyId::T2_S4:
            if (n >= 4)
                for (std::uint64_t a = 2; a <= n; ++a) out.push_back({a, 4, 2});
            break;
        case FamilyId::T2_S5:
            if (n >= 4)
                for (std::uint64_t a = 2; a <= n; ++a) out.push_back({a, 2, 4});
            break;
        case FamilyId::T3_S1:
        case FamilyId::T4_S1:
            for (std::uint64_t c = 1; c <= n; ++c) out.push_back({1, 1, c});
            break;
        case FamilyId::T3_S2:
        case FamilyId::T4_S2:
            for (std::uint64_t a = 2; a <= n; ++a) out.push_back({a, a, 1});
            break;
        case FamilyId::T3_S3:
        case FamilyId::T4_S3:
            if (n >= 4) out.push_back({4, 2, 1});
            break;
        case FamilyId::T3_S4:
        case FamilyId::T4_S4:
            if (n >= 4) out.push_back({2, 4, 1});
            break;
        case FamilyId::T3_S5:
            // x = b^c is built up multiplicatively, never factorized.
            for (std::uint64_t b = 2; b <= n; ++b) {
                for (std::uint64_t c = 2; c <= n; ++c) {
                    std::uint64_t x = 1;
                    bool fits = true;
                    for (std::uint64_t i = 0; i < c && fits; ++i) {
                        fits = x <= n / b;
                        if (fits) x *= b;
                    }
                    if (!fits) break;  // larger c only grows x
                    out.push_back({x, b, c});
                }
            }
            break;
        case FamilyId::T3_S6:
            if (n >= 2) out.push_back({2, 2, 2});
            break;
        case FamilyId::T4_S5:
            for (std::uint64_t a = 2; a <= n; ++a)
                for (std::uint64_t c = 2; c <= n; ++c) out.push_back({a, a, c});
            break;
        case FamilyId::T4_S6:
            if (n >= 4)
                for (std::uint64_t c = 2; c <= n; ++c) out.push_back({4, 2, c});
            break;
        case FamilyId::T4_S7:
            if (n >= 4)
                for (std::uint64_t c = 2; c <= n; ++c) out.push_back({2, 4, c});
            break;
        case FamilyId::T5_A:
            for (std::uint64_t b = 1; b <= n; ++b) out.push_back({1, b, 1});
            break;
        case FamilyId::T5_B:
            if (n >= 2) out.push_back({2, 2, 2});
            break;
        case FamilyId::T5_C:
            for (std::uint64_t b = 2; b <= n; ++b) {
                std::uint64_t x = 1;
                bool fits = true;
                for (std::uint64_t i = 0; i < b && fits; ++i) {
                    fits = x <= n / b;
                    if (fits) x *= b;
                }
                if (!fits) break;
                out.push_back({x, b, b});
            }
            break;
        case FamilyId::R2_S1:
        case FamilyId::R2_S2:
        case FamilyId::R2_S3:
            throw UnknownFamily(std::string(family_name(id)) + " is a pair family");
        default:
            throw UnknownFamily("unrecognized family id");
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Pair> family_members_pairs(FamilyId id, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be >= 1");
    std::vector<Pair> out;
    switch (id) {
        case FamilyId::R2_S1:
            for (std::uint64_t a = 1; a <= bound; ++a) out.push_back({a, a});
            break;
        case FamilyId::R2_S2:
            if (bound >= 4) out.push_back({4, 2});
            break;
        case FamilyId::R2_S3:
            if (bound >= 4) out.push_back({2, 4});
            break;
        default:
            throw UnknownFamily(std::string(family_name(id)) + " is a triple family");
    }
    return out;
}

std::vector<FamilyId> classify(EquationId eq, const Triple& t) {
    require_positive(t);
    if (eq == EquationId::Key2) {
        throw std::invalid_argument("classify takes a triple equation (e1..e5)");
    }
    std::vector<FamilyId> out;
    for (FamilyId id : families_of(eq)) {
        if (family_contains(id, t)) out.push_back(id);
    }
    return out;
}

std::vector<Triple> union_members(EquationId eq, std::uint64_t bound) {
    if (eq == EquationId::Key2) {
        throw std::invalid_argument("union_members takes a triple equation (e1..e5)");
    }
    std::vector<Triple> out;
    for (FamilyId id : families_of(eq)) {
        auto part = family_members(id, bound);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Pair> result2_members(std::uint64_t bound) {
    std::vector<Pair> out;
    for (FamilyId id : families_of(EquationId::Key2)) {
        auto part = family_members_pairs(id, bound);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace expdio
