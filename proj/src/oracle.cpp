#include "expdio/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

namespace expdio {

namespace {

// Direct evaluation of both sides, materializing the powers. nullopt when
// the values would blow past the guard; used only to cross-check disputes.
std::optional<bool> satisfies_direct(EquationId eq, const Triple& t) {
    try {
        auto [lhs, rhs] = sides(eq, t);
        return big_pow(lhs.base, lhs.exponent) == big_pow(rhs.base, rhs.exponent);
    } catch (const ExponentTooLarge&) {
        return std::nullopt;
    }
}

void recheck_disputes(EquationId eq, const std::vector<Triple>& disputed, bool expected) {
    for (const Triple& t : disputed) {
        if (auto direct = satisfies_direct(eq, t); direct && *direct != expected) {
            throw std::logic_error(
                "canonical and direct evaluation disagree on a disputed triple");
        }
    }
}

}  // namespace

std::vector<Triple> enumerate_solutions(EquationId eq, std::uint64_t bound,
                                        unsigned workers) {
    if (bound == 0) throw std::invalid_argument("bound must be >= 1");
    if (eq == EquationId::Key2) {
        throw std::invalid_argument("enumerate_solutions takes a triple equation (e1..e5)");
    }
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers > bound) workers = static_cast<unsigned>(bound);

    // One slice per x value. Each slice is filled in ascending (y, z) order,
    // so it is born sorted; concatenating slices in x order yields the full
    // lexicographically sorted set no matter how x values land on workers.
    std::vector<std::vector<Triple>> slices(bound);
    std::atomic<std::uint64_t> next{1};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto scan = [&]() {
        try {
            for (std::uint64_t x = next.fetch_add(1); x <= bound; x = next.fetch_add(1)) {
                if (failed.load()) return;
                std::vector<Triple>& slice = slices[x - 1];
                for (std::uint64_t y = 1; y <= bound; ++y) {
                    for (std::uint64_t z = 1; z <= bound; ++z) {
                        if (satisfies(eq, {x, y, z})) slice.push_back({x, y, z});
                    }
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            failed.store(true);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(scan);
    scan();
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    std::vector<Triple> out;
    for (const auto& slice : slices) out.insert(out.end(), slice.begin(), slice.end());
    return out;
}

VerificationReport verify_theorem(EquationId eq, std::uint64_t bound, unsigned workers) {
    std::vector<Triple> oracle = enumerate_solutions(eq, bound, workers);
    std::vector<Triple> family = union_members(eq, bound);

    VerificationReport report;
    report.equation = eq;
    report.bound = bound;
    report.oracle_count = oracle.size();
    report.family_count = family.size();
    std::set_difference(oracle.begin(), oracle.end(), family.begin(), family.end(),
                        std::back_inserter(report.missing));
    std::set_difference(family.begin(), family.end(), oracle.begin(), oracle.end(),
                        std::back_inserter(report.extra));
    report.verified = report.missing.empty() && report.extra.empty();

    // Disputes are where bugs would hide, so settle them with the slow
    // independent engine before reporting.
    recheck_disputes(eq, report.missing, true);
    recheck_disputes(eq, report.extra, false);
    return report;
}

PairVerificationReport verify_result2(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be >= 1");

    std::vector<Pair> oracle;
    for (std::uint64_t x = 1; x <= bound; ++x) {
        for (std::uint64_t y = 1; y <= bound; ++y) {
            if (satisfies_pair({x, y})) oracle.push_back({x, y});
        }
    }
    std::vector<Pair> family = result2_members(bound);

    PairVerificationReport report;
    report.bound = bound;
    report.oracle_count = oracle.size();
    report.family_count = family.size();
    std::set_difference(oracle.begin(), oracle.end(), family.begin(), family.end(),
                        std::back_inserter(report.missing));
    std::set_difference(family.begin(), family.end(), oracle.begin(), oracle.end(),
                        std::back_inserter(report.extra));
    report.verified = report.missing.empty() && report.extra.empty();
    return report;
}

bool check_lemma1(std::uint64_t max_n, std::uint64_t max_base) {
    if (max_n < 3 || max_base < 3) {
        throw std::invalid_argument("check_lemma1: max_n and max_base must be >= 3");
    }
    for (std::uint64_t b = 3; b <= max_base; ++b) {
        for (std::uint64_t n = 2; n <= max_n; ++n) {
            if (big_pow(b, BigInt(n - 1)) <= n) return false;
        }
    }
    for (std::uint64_t n = 3; n <= max_n; ++n) {
        if (big_pow(2, BigInt(n - 1)) <= n) return false;
    }
    for (std::uint64_t c = 2; c <= max_base; ++c) {
        for (std::uint64_t n = 1; n <= max_n; ++n) {
            if (big_pow(c, BigInt(n)) <= n) return false;
        }
    }
    return true;
}

OpenSearchReport search_eq5_open(std::uint64_t bound, unsigned workers) {
    if (bound < 2) throw std::invalid_argument("search_eq5_open: bound must be >= 2");

    OpenSearchReport report;
    report.bound = bound;
    for (const Triple& t : enumerate_solutions(EquationId::E5, bound, workers)) {
        const bool all_ge2 = t.x >= 2 && t.y >= 2 && t.z >= 2;
        const bool distinct = t.x != t.y && t.y != t.z && t.x != t.z;
        if (all_ge2 && distinct) report.hits.push_back(t);
    }
    return report;
}

bool verify_identity_9(std::uint64_t max_b) {
    if (max_b < 2) throw std::invalid_argument("verify_identity_9: max_b must be >= 2");
    for (std::uint64_t b = 2; b <= max_b; ++b) {
        std::uint64_t x = 1;  // b^b, the first coordinate of the family member
        for (std::uint64_t i = 0; i < b; ++i) {
            if (x > std::numeric_limits<std::uint64_t>::max() / b) {
                throw std::invalid_argument("verify_identity_9: b^b exceeds 64 bits");
            }
            x *= b;
        }
        auto [lhs, rhs] = sides(EquationId::E5, {x, b, b});

        // Both sides must equal b to the power b^(b+1), prime by prime.
        const BigInt scale = big_pow(b, BigInt(b) + 1);
        CanonicalPower expected;
        for (const auto& [prime, mult] : factorize(b).factors) {
            expected.factors[prime] = mult * scale;
        }
        if (canonicalize(lhs) != expected || canonicalize(rhs) != expected) return false;
    }
    return true;
}

}  // namespace expdio
