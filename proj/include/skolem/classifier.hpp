#pragma once

/**
 * @file classifier.hpp
 * @brief Decides which hypothesis of the quadratic local-global theorem an
 * instance satisfies.
 *
 * The ratio pair (B, C) is reduced to its valuation vectors over the support
 * set T. Exact tests then give one of
 *   - Case1(m):  C^m = B, so u_m = 0;
 *   - Case2:     (C, B) = (1, -1);
 *   - Case3:     no relation B^k C^l = +-1 with k != 0, carrying the pivot
 *                columns the residue-symbol search needs;
 *   - NotCovered: a relation exists and none of the above applies.
 */

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skolem/exact_arith.hpp"
#include "skolem/recurrence.hpp"

namespace skolem {

/// Sorted distinct primes.
struct SupportSet {
    std::vector<Integer> primes;
    friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

/// Columns follow SupportSet order; c_row holds v_p(C), b_row holds v_p(B).
struct ValMatrix {
    std::vector<long> c_row;
    std::vector<long> b_row;
};

struct TopRowZero {
    Integer p;
    friend bool operator==(const TopRowZero&, const TopRowZero&) = default;
};

struct Rank2 {
    Integer p;
    Integer q;
    long d = 0;  // v_p(C) v_q(B) - v_q(C) v_p(B)
    friend bool operator==(const Rank2&, const Rank2&) = default;
};

using Pivot = std::variant<TopRowZero, Rank2>;

struct Relation {
    long k = 0;
    long l = 0;
    int sign = 1;
    friend bool operator==(const Relation&, const Relation&) = default;
};

struct Case1 {
    long m = 0;
    friend bool operator==(const Case1&, const Case1&) = default;
};
struct Case2 {
    friend bool operator==(const Case2&, const Case2&) = default;
};
struct Case3 {
    Pivot pivot;
    friend bool operator==(const Case3&, const Case3&) = default;
};
struct NotCovered {
    Relation relation;
    friend bool operator==(const NotCovered&, const NotCovered&) = default;
};

using CaseLabel = std::variant<Case1, Case2, Case3, NotCovered>;

/// Primes with a nonzero valuation among b, b1, b2, c1, c2.
[[nodiscard]] SupportSet support_set(const ClosedForm& cf, const Integer& b);
[[nodiscard]] inline SupportSet support_set(const ValidatedRecurrence& rec) { return support_set(rec.closed, rec.b); }

/// Primes dividing B or C; the support set used when only the pair is known.
[[nodiscard]] SupportSet support_set(const RatioPair& pair);

[[nodiscard]] ValMatrix valuation_matrix(const RatioPair& pair, const SupportSet& t);

/// Some m with C^m = B: the smallest nonnegative one when several exist
/// (C = +-1), otherwise the unique one.
[[nodiscard]] std::optional<long> zero_index(const RatioPair& pair);

/// A relation B^k C^l = sign with k > 0 and (k, l) primitive, if any.
[[nodiscard]] std::optional<Relation> find_relation(const RatioPair& pair, const SupportSet& t);

/// Precedence Case1, Case2, Case3, NotCovered. Pivots: smallest p with
/// v_p(B) != 0 for TopRowZero, lexicographically first (p, q) with d != 0
/// for Rank2.
[[nodiscard]] CaseLabel classify(const RatioPair& pair, const SupportSet& t);

[[nodiscard]] std::string to_string(const CaseLabel& label);
[[nodiscard]] std::string to_string(const Relation& relation);

}  // namespace skolem
