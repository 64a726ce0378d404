#pragma once

#include "walkmat/certificate.hpp"
#include "walkmat/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace walkmat {

// Membership record for the family of even-order graphs with
// |det W| = 2^{n/2} and |a0| = 1.
struct FStarReport {
    std::size_t n = 0;
    bool n_even = false;
    Int walk_det;
    Int a0;
    bool member = false;

    json to_json() const {
        return json{{"n", n},
                    {"n_even", n_even},
                    {"walk_det", dec(walk_det)},
                    {"a0", dec(a0)},
                    {"member", member}};
    }
};

FStarReport fstar_check(const Graph& g);

enum class WangStatus { holds, fails, unknown };

std::string to_string(WangStatus s);

// Classifies d = 2^{-floor(n/2)} det W(G): "holds" when d is odd and
// square-free (established by full factorization), "fails" when d is zero,
// even, or has a repeated prime factor, "unknown" when the factorization
// budget runs out first. factor_budget caps the Pollard-rho iterations.
WangStatus wang_classify(const Int& d, std::uint64_t factor_budget);

WangStatus wang_condition(const Graph& g, std::uint64_t factor_budget = 1'000'000);

// |a0(G)| = 1 implies |a0(G o P_m)| = 1. Precondition violations yield a
// certificate with params.status = "skipped" (pass stays true so batches
// are unaffected).
Certificate verify_constant_term_preservation(const Graph& g, std::size_t m);

// One growth trajectory: seed, the attached path orders, and the membership
// report at every step. counterexample is set (and growth stops) if a step
// ever leaves the family.
struct FamilyRecord {
    std::string seed;
    std::vector<std::size_t> depths;
    std::vector<std::pair<std::string, FStarReport>> members;
    std::optional<Certificate> counterexample;

    json to_json() const;
};

// Iterates g <- g o P_m over depths (each >= 2), recording graph6 and the
// membership report per step. Throws DomainError if the seed is not a
// member or a step would exceed max_vertices.
FamilyRecord grow_family(const Graph& seed, const std::vector<std::size_t>& depths,
                         std::size_t max_vertices = 200);

// One corpus line: either a report or a parse error message.
struct ScanEntry {
    std::size_t line_no = 0; // 1-based
    std::string graph6;
    std::optional<FStarReport> report;
    std::string error;

    json to_json() const;
};

// Membership reports for every nonempty line, in input order. Lines are
// distributed over `workers` threads; per-line failures become error
// entries and the scan continues.
std::vector<ScanEntry> scan_corpus(const std::vector<std::string>& lines, unsigned workers = 1);

} // namespace walkmat
