#pragma once

/**
 * @file recurrence.hpp
 * @brief Quadratic recurrences u_{n+2} = a1 u_{n+1} + a2 u_n with rational,
 * distinct, nonzero roots, their closed forms u_n = b1 c1^n + b2 c2^n and the
 * ratio pair (B, C) = (-b2/b1, c1/c2).
 */

#include <optional>

#include "skolem/certificate.hpp"
#include "skolem/error.hpp"
#include "skolem/exact_arith.hpp"

namespace skolem {

struct RecurrenceInput {
    Rat a1;
    Rat a2;
    Rat u0;
    Rat u1;
    std::optional<Integer> b;  // inferred when absent
};

/// Roots are ordered |c1| > |c2|, or c1 > 0 when |c1| = |c2|.
struct ClosedForm {
    Rat b1, b2, c1, c2;
    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

struct RatioPair {
    Rat B;
    Rat C;
    friend bool operator==(const RatioPair&, const RatioPair&) = default;
};

struct ValidatedRecurrence {
    Rat a1, a2, u0, u1;
    Integer b;
    bool b_inferred = false;
    ClosedForm closed;

    [[nodiscard]] LinearRecurrence as_linear() const { return {{a1, a2}, {u0, u1}}; }
};

/// u_n = u0 * a1^n, the reduced form of a quadratic whose b1 or b2 vanishes.
struct Order1Data {
    Rat a1;
    Rat u0;
    Integer b;
};

class degenerate_to_order1 : public error {
public:
    degenerate_to_order1(Order1Data data, const std::string& what)
        : error(errc::degenerate_to_order1, what), data_(std::move(data)) {}
    [[nodiscard]] const Order1Data& data() const { return data_; }

private:
    Order1Data data_;
};

/// Checks a2 != 0, simple rational roots, b1 b2 != 0 and that b supports
/// every input denominator. Throws error (zero_a2, repeated_root,
/// irrational_roots, denominator_outside_base) or degenerate_to_order1.
[[nodiscard]] ValidatedRecurrence validate(const RecurrenceInput& input);

/// Roots by the quadratic formula, ordered by the convention above;
/// b1 = (u1 - c2 u0)/(c1 - c2), b2 = u0 - b1.
[[nodiscard]] ClosedForm to_closed_form(const Rat& a1, const Rat& a2, const Rat& u0, const Rat& u1);

/// Puts (b1, b2, c1, c2) into root order, swapping the two terms if needed.
[[nodiscard]] ClosedForm canonical_closed_form(const Rat& b1, const Rat& b2, const Rat& c1, const Rat& c2);

[[nodiscard]] Rat term(const ClosedForm& cf, long n);
[[nodiscard]] inline Rat term(const ValidatedRecurrence& rec, long n) { return term(rec.closed, n); }

[[nodiscard]] RatioPair ratio_pair(const ClosedForm& cf);

/// Smallest b: the product of primes dividing any of the given denominators.
[[nodiscard]] Integer infer_base(std::initializer_list<Rat> values);

/// Zero-term certificate at 0 if u0 = 0, otherwise the smallest prime coprime
/// to b and to both parts of a1 and u0.
[[nodiscard]] Certificate certify_order1(const Rat& a1, const Rat& u0, const Integer& b);

}  // namespace skolem
