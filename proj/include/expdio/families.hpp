#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "expdio/equations.hpp"

namespace expdio {

/// Closed-form solution families, one per set in the classifications:
///
///   e1: T1.S1=(1,b,c)           T1.S2=(a,b,1) a>=2     T1.S3=(a,2,2) a>=2
///   e2: T2.S1=(1,b,c)           T2.S2=(a,1,1) a>=2     T2.S3=(a,b,b) a,b>=2
///       T2.S4=(a,4,2) a>=2      T2.S5=(a,2,4) a>=2
///   e3: T3.S1=(1,1,c)           T3.S2=(a,a,1) a>=2     T3.S3={(4,2,1)}
///       T3.S4={(2,4,1)}         T3.S5=(b^c,b,c) b,c>=2 T3.S6={(2,2,2)}
///   e4: T4.S1=(1,1,c)           T4.S2=(a,a,1) a>=2     T4.S3={(4,2,1)}
///       T4.S4={(2,4,1)}         T4.S5=(a,a,c) a,c>=2   T4.S6=(4,2,c) c>=2
///       T4.S7=(2,4,c) c>=2
///   e5: T5.A=(1,b,1)            T5.B={(2,2,2)}         T5.C=(b^b,b,b) b>=2
///   key2: R2.S1=(a,a)           R2.S2={(4,2)}          R2.S3={(2,4)}
enum class FamilyId {
    T1_S1, T1_S2, T1_S3,
    T2_S1, T2_S2, T2_S3, T2_S4, T2_S5,
    T3_S1, T3_S2, T3_S3, T3_S4, T3_S5, T3_S6,
    T4_S1, T4_S2, T4_S3, T4_S4, T4_S5, T4_S6, T4_S7,
    T5_A, T5_B, T5_C,
    R2_S1, R2_S2, R2_S3,
};

class UnknownFamily : public std::invalid_argument {
public:
    explicit UnknownFamily(const std::string& what) : std::invalid_argument(what) {}
};

/// "T1.S1" .. "T5.C", "R2.S1" .. "R2.S3".
std::string_view family_name(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);

/// The equation whose solution set the family belongs to (R2.* -> Key2).
EquationId family_equation(FamilyId id);

/// All families of eq's classification, in S1..Sn order.
/// Key2 yields the R2 pair families.
std::span<const FamilyId> families_of(EquationId eq);

/// Membership predicates. Triple overload rejects R2 families and vice versa.
bool family_contains(FamilyId id, const Triple& t);
bool family_contains(FamilyId id, const Pair& p);

/// Exact member set with every coordinate in [1, bound], sorted
/// lexicographically. Throws UnknownFamily for pair families.
std::vector<Triple> family_members(FamilyId id, std::uint64_t bound);

/// In-box members of a pair family. Throws UnknownFamily for triple families.
std::vector<Pair> family_members_pairs(FamilyId id, std::uint64_t bound);

/// Every family of eq's classification containing t; empty means "not a
/// listed solution" (cross-check with satisfies to spot unlisted solutions).
std::vector<FamilyId> classify(EquationId eq, const Triple& t);

/// Deduplicated, sorted union of all family members of eq within the box.
std::vector<Triple> union_members(EquationId eq, std::uint64_t bound);

/// Key-equation solutions claimed by the R2 families within [1..bound]^2:
/// the diagonal plus (4,2) and (2,4).
std::vector<Pair> result2_members(std::uint64_t bound);

}  // namespace expdio
