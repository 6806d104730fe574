#pragma once

/**
 * @file residue_symbol.hpp
 * @brief n-th power residue symbols (a/r)_n over Q at primes r = 1 (mod n).
 *
 * The symbol is reported as an exponent e in {0..n-1} with
 * a^((r-1)/n) = zeta^e (mod r), where zeta = g^((r-1)/n) and g is the
 * smallest primitive root modulo r. The choice of zeta only permutes the
 * nonzero exponents; e = 0 (a is an n-th power mod r) does not depend on it.
 */

#include <cstdint>

#include "skolem/classifier.hpp"
#include "skolem/exact_arith.hpp"

namespace skolem {

class SymbolContext {
public:
    /// Throws std::invalid_argument unless n is an odd prime, r is prime,
    /// r != n and r = 1 (mod n).
    SymbolContext(std::uint64_t n, std::uint64_t r);

    [[nodiscard]] std::uint64_t n() const { return n_; }
    [[nodiscard]] std::uint64_t r() const { return r_; }
    [[nodiscard]] std::uint64_t zeta() const { return zeta_; }

    /// Exponent of the symbol for a residue x in 1..r-1.
    [[nodiscard]] unsigned exponent_of_residue(std::uint64_t x) const;

private:
    std::uint64_t n_;
    std::uint64_t r_;
    std::uint64_t zeta_;
};

/// Throws error(symbol_undefined) if r divides the numerator or denominator.
[[nodiscard]] unsigned symbol_exponent(const Rat& a, const SymbolContext& ctx);

/// Exponent for the prime p given as a machine word (p coprime to r).
[[nodiscard]] unsigned symbol_exponent(std::uint64_t a, const SymbolContext& ctx);

/// Smallest odd prime n with gcd(n, 2 v_p'(B)) = 1 (TopRowZero) or
/// gcd(n, 2d) = 1 (Rank2).
[[nodiscard]] std::uint64_t choose_modulus(const Pivot& pivot, long b_valuation_at_pivot);

enum class PlanKind { top_row_zero, rank2 };

struct SymbolTargets {
    PlanKind kind = PlanKind::rank2;
    unsigned a = 0;
    unsigned b = 0;
    friend bool operator==(const SymbolTargets&, const SymbolTargets&) = default;
};

/// 2x2 pivot block [[v_p'(C), v_q'(C)], [v_p'(B), v_q'(B)]].
struct PivotMinor {
    long c_p = 0;
    long c_q = 0;
    long b_p = 0;
    long b_q = 0;
    [[nodiscard]] long det() const { return c_p * b_q - c_q * b_p; }
};

/// The unique (a, b) mod n with a c_p + b c_q = 0 and a b_p + b b_q = 1.
/// Throws error(singular_mod_n) when n divides the determinant.
[[nodiscard]] SymbolTargets solve_targets(const PivotMinor& minor, std::uint64_t n);

/// TopRowZero: the pivot prime needs exponent 1 (any nonzero class will do).
[[nodiscard]] inline SymbolTargets top_row_targets() { return {PlanKind::top_row_zero, 1, 0}; }

}  // namespace skolem
