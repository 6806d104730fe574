#pragma once

/**
 * @file verifier.hpp
 * @brief Independent certificate checking.
 *
 * This layer is the trusted base: it depends on exact_arith and the
 * certificate types only, never on the classifier or the residue-symbol
 * search. A certificate is accepted on the strength of an exact evaluation
 * (zero-term claims) or a full period scan modulo m (no-zero-term claims).
 */

#include <cstdint>
#include <string>

#include "skolem/certificate.hpp"

namespace skolem {

/// Scans one full period of rec modulo m. Requires every coefficient and
/// initial term to be m-integral and the last coefficient to be a unit mod m,
/// so that the state map is invertible and the two-sided sequence is purely
/// periodic. Throws error(bad_modulus) otherwise.
[[nodiscard]] ScanReport scan_linear(const LinearRecurrence& rec, std::uint64_t m);

[[nodiscard]] ScanReport period_scan(const Rat& a1, const Rat& a2, const Rat& u0, const Rat& u1, std::uint64_t m);

/// True when m satisfies scan_linear's precondition for rec.
[[nodiscard]] bool scan_admissible(const LinearRecurrence& rec, std::uint64_t m);

/// Exact u_n by forward (n >= 0) or backward (n < 0) iteration.
[[nodiscard]] Rat evaluate(const LinearRecurrence& rec, long n);

struct Verdict {
    bool accepted = false;
    std::string reason;
};

[[nodiscard]] Verdict verify_certificate(const Certificate& cert);

}  // namespace skolem
