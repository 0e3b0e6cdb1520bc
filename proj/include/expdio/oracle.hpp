#pragma once

#include <cstdint>
#include <vector>

#include "expdio/equations.hpp"
#include "expdio/families.hpp"

namespace expdio {

/// Outcome of comparing brute-force enumeration against the closed-form
/// families of one equation over the box [1..bound]^3.
struct VerificationReport {
    EquationId equation = EquationId::E1;
    std::uint64_t bound = 1;
    std::uint64_t oracle_count = 0;  // brute-force solutions in the box
    std::uint64_t family_count = 0;  // distinct family members in the box
    std::vector<Triple> missing;     // solutions covered by no family
    std::vector<Triple> extra;       // family members failing the equation
    bool verified = false;           // missing and extra both empty
};

/// Same comparison for the two-variable key equation x^y = y^x over
/// [1..bound]^2: brute force vs. the diagonal plus (2,4) and (4,2).
struct PairVerificationReport {
    std::uint64_t bound = 1;
    std::uint64_t oracle_count = 0;
    std::uint64_t family_count = 0;
    std::vector<Pair> missing;
    std::vector<Pair> extra;
    bool verified = false;
};

/// E5 solutions in the box with all coordinates >= 2 and pairwise distinct:
/// the one corner of the solution set no closed-form family covers.
struct OpenSearchReport {
    std::uint64_t bound = 2;
    std::vector<Triple> hits;
};

/// Every solution of eq in [1..bound]^3, sorted lexicographically.
/// workers = 0 picks the hardware thread count; the result is identical for
/// every worker count. Throws ExponentTooLarge past the guard and
/// std::invalid_argument for bound 0 or a pair equation.
std::vector<Triple> enumerate_solutions(EquationId eq, std::uint64_t bound,
                                        unsigned workers = 0);

/// Brute force vs. family union. A correct classification yields
/// verified = true for e1-e4; the e5 families are knowingly partial, so for
/// e5 any uncovered solutions land in missing rather than signalling a bug.
/// Every disputed triple is re-checked by direct evaluation where the guard
/// permits; a disagreement between the two engines throws std::logic_error.
VerificationReport verify_theorem(EquationId eq, std::uint64_t bound,
                                  unsigned workers = 0);

/// Brute force of x^y = y^x over [1..bound]^2 vs. its claimed solution set.
PairVerificationReport verify_result2(std::uint64_t bound);

/// Exact check of three power inequalities over the given ranges:
///   (i)  b^(n-1) > n  for 3 <= b <= max_base, 2 <= n <= max_n
///   (ii) 2^(n-1) > n  for 3 <= n <= max_n   (false at n = 2: 2 > 2 fails)
///   (iii) c^n    > n  for 2 <= c <= max_base, 1 <= n <= max_n
/// Requires max_n >= 3 and max_base >= 3.
bool check_lemma1(std::uint64_t max_n, std::uint64_t max_base);

/// Scan for E5 solutions with pairwise-distinct coordinates >= 2. An empty
/// hit list is an observation about the box, not a theorem. bound >= 2.
OpenSearchReport search_eq5_open(std::uint64_t bound, unsigned workers = 0);

/// Confirms for every b in [2, max_b] that both sides of E5 at (b^b, b, b)
/// canonicalize identically, to the primes of b with each multiplicity
/// scaled by b^(b+1). max_b >= 2; b^b must fit in 64 bits.
bool verify_identity_9(std::uint64_t max_b);

}  // namespace expdio
