#pragma once

/**
 * @file certifier.hpp
 * @brief Certificate search for quadratic recurrences.
 *
 * Case3 instances go through the residue-symbol construction: pick an odd
 * prime n, solve for target exponents at the pivot primes, then look for the
 * smallest prime r = 1 (mod n) outside T whose symbols vanish at every other
 * prime of T and hit the targets (up to a nonzero scalar) at the pivots. For
 * such r the symbol of C is trivial and the symbol of B is not, so C^k = B
 * (mod r) has no solution. The hit is then re-checked by a full period scan,
 * which is the only thing a certificate's soundness rests on.
 *
 * Instances outside the theorem's hypotheses can fall back to a direct scan
 * over small primes (a semi-decision: exhaustion proves nothing).
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "skolem/certificate.hpp"
#include "skolem/classifier.hpp"
#include "skolem/error.hpp"
#include "skolem/parallel.hpp"
#include "skolem/recurrence.hpp"
#include "skolem/residue_symbol.hpp"

namespace skolem {

using kernels::Execution;

inline constexpr std::uint64_t default_search_bound = 1'000'000;

struct SearchPlan {
    SupportSet t;
    Pivot pivot;
    std::uint64_t n = 3;
    SymbolTargets targets;
    std::uint64_t bound = default_search_bound;
};

enum class Mode { theorem, fallback, automatic };

[[nodiscard]] const char* to_string(Mode mode);
/// "theorem", "fallback" or "auto"; throws std::invalid_argument otherwise.
[[nodiscard]] Mode parse_mode(const std::string& text);

struct CertifyConfig {
    std::uint64_t bound = default_search_bound;
    Mode mode = Mode::automatic;
    Execution execution = Execution::parallel;
};

class search_exhausted : public error {
public:
    explicit search_exhausted(std::uint64_t bound)
        : error(errc::search_exhausted, "no certificate prime up to " + std::to_string(bound)), bound_(bound) {}
    [[nodiscard]] std::uint64_t bound() const { return bound_; }

private:
    std::uint64_t bound_;
};

class not_covered_by_theorem : public error {
public:
    explicit not_covered_by_theorem(Relation rel)
        : error(errc::not_covered_by_theorem,
                "instance has the multiplicative relation B^k C^l = sign " + to_string(rel) +
                    " and is not covered by the theorem"),
          relation_(rel) {}
    [[nodiscard]] const Relation& relation() const { return relation_; }

private:
    Relation relation_;
};

[[nodiscard]] SearchPlan build_plan(const Case3& label, const RatioPair& pair, const SupportSet& t,
                                    std::uint64_t bound = default_search_bound);

/// Symbol predicate at a candidate prime r = 1 (mod n), r outside T. With
/// exact_targets the Rank2 pivots must equal (a, b) itself rather than a
/// nonzero multiple.
[[nodiscard]] bool plan_accepts(const SearchPlan& plan, std::uint64_t r, bool exact_targets = false);

/// True when r is divisible by a prime below 25 other than itself.
[[nodiscard]] bool has_small_factor(std::uint64_t r);

/// True when every non-pivot prime p of T has p^((r-1)/n) = 1 (mod r). Pure
/// modular arithmetic, so it may be applied before r is known to be prime.
[[nodiscard]] bool trivial_symbols_hold(const SearchPlan& plan, std::uint64_t r);

/// Exponents of every prime of T at r, in T order.
[[nodiscard]] std::vector<std::pair<Integer, unsigned>> symbol_exponents(const SearchPlan& plan, std::uint64_t r);

/// Smallest prime r <= plan.bound accepted by plan_accepts. Throws
/// search_exhausted.
[[nodiscard]] std::uint64_t search_certificate_prime(const SearchPlan& plan,
                                                     Execution exec = Execution::parallel);

/// Smallest prime m <= bound outside T whose period scan has no zero.
/// Throws search_exhausted.
[[nodiscard]] std::uint64_t fallback_scan(const ValidatedRecurrence& rec, std::uint64_t bound,
                                          Execution exec = Execution::parallel);

/// Throws not_covered_by_theorem (mode theorem) or search_exhausted.
[[nodiscard]] Certificate certify(const ValidatedRecurrence& rec, const CertifyConfig& config = {});

/// validate() followed by certify(), rerouting degenerate closed forms to the
/// order-1 certificate.
[[nodiscard]] Certificate certify_input(const RecurrenceInput& input, const CertifyConfig& config = {});

}  // namespace skolem
