#pragma once

/**
 * @file cubic.hpp
 * @brief Degenerate cubic family u_n = b1 c1^n + (b2 + (-1)^n b3) c2^n, whose
 * characteristic roots are c1, c2 and -c2.
 *
 * The even and odd subsequences are quadratic recurrences with roots c1^2 and
 * c2^2; each is certified on its own and the two certificates are combined,
 * either as a single prime that works for the whole sequence or as the
 * product of the two primes.
 */

#include <optional>
#include <utility>

#include "skolem/certificate.hpp"
#include "skolem/certifier.hpp"
#include "skolem/recurrence.hpp"

namespace skolem {

/// x^3 - a1 x^2 - a2 x - a3
struct CubicCoefficients {
    Rat a1, a2, a3;
    friend bool operator==(const CubicCoefficients&, const CubicCoefficients&) = default;
};

/// Expands (x - c1)(x - c2)(x + c2). Throws error(degenerate_roots) if a root
/// is zero or c1 = +-c2.
[[nodiscard]] CubicCoefficients cubic_coeffs(const Rat& c1, const Rat& c2);

struct CubicFamily {
    CubicFamilyData data;
    CubicCoefficients coeffs;
    Rat B_plus;   // -(b2 + b3)/b1
    Rat B_minus;  // -(b2 - b3)/b1
    Rat C;        // c1/c2
    Integer b;
    bool b_inferred = false;

    [[nodiscard]] LinearRecurrence recurrence() const;
};

/// Validates the family; b is inferred from the cubic's coefficients and
/// first three terms when absent.
[[nodiscard]] CubicFamily make_family(const CubicFamilyData& data, std::optional<Integer> b = std::nullopt);

[[nodiscard]] Rat term(const CubicFamily& fam, long n);

enum class Parity { even, odd };

/// Closed form of u_{2k} (even) or u_{2k+1} (odd) as a function of k, in
/// root order. A coefficient may be zero here; split() rejects that.
[[nodiscard]] ClosedForm subsequence_closed_form(const CubicFamily& fam, Parity parity);

/// The subsequence as a quadratic recurrence over the family's b.
[[nodiscard]] RecurrenceInput subsequence_input(const CubicFamily& fam, Parity parity);

/// Throws degenerate_to_order1 if b2 + b3 = 0 or b2 - b3 = 0.
[[nodiscard]] std::pair<ClosedForm, ClosedForm> split(const CubicFamily& fam);

/// Throws not_covered_by_theorem (mode theorem) or search_exhausted.
[[nodiscard]] Certificate certify_cubic(const CubicFamily& fam, const CertifyConfig& config = {});

}  // namespace skolem
