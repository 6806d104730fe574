#include "skolem/residue_symbol.hpp"

#include <numeric>
#include <stdexcept>

namespace skolem {

namespace {

long mod_n(long x, std::uint64_t n) {
    const auto m = static_cast<long>(n);
    return ((x % m) + m) % m;
}

}  // namespace

SymbolContext::SymbolContext(std::uint64_t n, std::uint64_t r) : n_(n), r_(r) {
    if (n < 3 || !is_prime(n)) {
        throw std::invalid_argument("symbol degree " + std::to_string(n) + " is not an odd prime");
    }
    if (r == n || !is_prime(r) || r % n != 1) {
        throw std::invalid_argument("symbol prime " + std::to_string(r) + " is not a prime = 1 mod " +
                                    std::to_string(n));
    }
    zeta_ = mod_pow(smallest_primitive_root(r), (r - 1) / n, r);
}

unsigned SymbolContext::exponent_of_residue(std::uint64_t x) const {
    const std::uint64_t power = mod_pow(x, (r_ - 1) / n_, r_);
    std::uint64_t z = 1;
    for (unsigned e = 0; e < n_; ++e) {
        if (z == power) {
            return e;
        }
        z = mul_mod(z, zeta_, r_);
    }
    throw std::logic_error("a^((r-1)/n) is not an n-th root of unity");
}

unsigned symbol_exponent(const Rat& a, const SymbolContext& ctx) {
    const std::uint64_t r = ctx.r();
    if (a.is_zero() || mpz_fdiv_ui(a.num().get_mpz_t(), r) == 0 || mpz_fdiv_ui(a.den().get_mpz_t(), r) == 0) {
        throw error(errc::symbol_undefined, "symbol of " + a.str() + " at r = " + std::to_string(r) + " is undefined");
    }
    return ctx.exponent_of_residue(residue(a, r));
}

unsigned symbol_exponent(std::uint64_t a, const SymbolContext& ctx) {
    const std::uint64_t x = a % ctx.r();
    if (x == 0) {
        throw error(errc::symbol_undefined,
                    "symbol of " + std::to_string(a) + " at r = " + std::to_string(ctx.r()) + " is undefined");
    }
    return ctx.exponent_of_residue(x);
}

std::uint64_t choose_modulus(const Pivot& pivot, long b_valuation_at_pivot) {
    const long key = std::holds_alternative<Rank2>(pivot) ? std::get<Rank2>(pivot).d : b_valuation_at_pivot;
    if (key == 0) {
        throw std::invalid_argument("choose_modulus: pivot quantity is zero");
    }
    const auto magnitude = static_cast<std::uint64_t>(key < 0 ? -key : key);
    for (std::uint64_t n = 3;; n += 2) {
        if (is_prime(n) && magnitude % n != 0) {
            return n;
        }
    }
}

SymbolTargets solve_targets(const PivotMinor& minor, std::uint64_t n) {
    const long d = mod_n(minor.det(), n);
    if (d == 0) {
        throw error(errc::singular_mod_n, "pivot determinant " + std::to_string(minor.det()) +
                                              " vanishes modulo " + std::to_string(n));
    }
    // Cramer on [[c_p, c_q], [b_p, b_q]] (a, b)^T = (0, 1)^T.
    const auto inv = static_cast<long>(mod_inverse(d, n));
    const long a = mod_n(mod_n(-minor.c_q, n) * inv, n);
    const long b = mod_n(mod_n(minor.c_p, n) * inv, n);
    if (mod_n(a * minor.c_p + b * minor.c_q, n) != 0 || mod_n(a * minor.b_p + b * minor.b_q, n) != 1) {
        throw std::logic_error("solve_targets: substitution check failed");
    }
    return {PlanKind::rank2, static_cast<unsigned>(a), static_cast<unsigned>(b)};
}

}  // namespace skolem
