#pragma once

/**
 * @file exact_arith.hpp
 * @brief Exact integer and rational arithmetic plus the small number-theoretic
 * kernels (valuations, factorization, primality, modular powers) that the
 * rest of the toolkit is built on.
 *
 * Arbitrary-precision values are GMP's mpz/mpq classes. Hot loops in the
 * prime searches work on 64-bit residues; those overloads take uint64_t.
 * Nothing here uses floating point.
 */

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace skolem {

using Integer = mpz_class;

/// Canonical rational: denominator > 0, lowest terms, zero is 0/1.
class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(const Integer& num, const Integer& den);

    /// Parses "n" or "n/d" (optional sign on n, d must be nonzero).
    static Rat parse(std::string_view text);

    [[nodiscard]] Integer num() const { return q_.get_num(); }
    [[nodiscard]] Integer den() const { return q_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

    /// this^e for any integer e; e < 0 requires a nonzero base.
    [[nodiscard]] Rat pow(long e) const;
    [[nodiscard]] Rat abs() const;
    [[nodiscard]] Rat inverse() const;

    /// "num/den", or just "num" when den = 1.
    [[nodiscard]] std::string str() const;

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
    friend Rat operator/(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }

    [[nodiscard]] const mpq_class& raw() const { return q_; }

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    mpq_class q_;
};

/// Prime -> exponent. Keys are primes, exponents >= 1.
using Factorization = std::map<Integer, unsigned>;

/// v_p(x) = v_p(num) - v_p(den). Throws zero_argument / not_prime.
[[nodiscard]] long valuation(const Rat& x, const Integer& p);

/// Exact factorization of |n|: trial division to 10^6, then Pollard-Brent rho.
/// factorize(+-1) is empty. Throws zero_argument for n = 0.
[[nodiscard]] Factorization factorize(const Integer& n);
[[nodiscard]] Factorization factorize(std::uint64_t n);

/// Deterministic below 2^64 (Miller-Rabin with the first twelve prime bases).
/// Above 2^64 GMP's BPSW plus 40 Miller-Rabin rounds; no composite is known
/// to pass BPSW and the residual error is below 4^-40.
[[nodiscard]] bool is_prime(const Integer& n);
[[nodiscard]] bool is_prime(std::uint64_t n);

[[nodiscard]] std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
[[nodiscard]] std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m);
[[nodiscard]] Integer mod_pow(const Integer& a, const Integer& e, const Integer& m);

/// x with a*x = 1 (mod m). Throws not_invertible when gcd(a, m) != 1.
[[nodiscard]] std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m);
[[nodiscard]] Integer mod_inverse(const Integer& a, const Integer& m);

/// num * den^-1 mod m. Throws not_invertible if the denominator shares a
/// factor with m.
[[nodiscard]] std::uint64_t residue(const Rat& x, std::uint64_t m);

/// Multiplicative order of a modulo prime p (a coprime to p).
[[nodiscard]] std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p);

/// Smallest g >= 2 of order r - 1 modulo the odd prime r.
[[nodiscard]] std::uint64_t smallest_primitive_root(std::uint64_t r);

/// Radical of |n|: product of the distinct primes dividing n.
[[nodiscard]] Integer radical(const Integer& n);

/// Increasing primes p > start with p = residue (mod modulus). modulus = 1
/// means every prime. Throws bad_residue_class if gcd(residue, modulus) != 1.
class PrimeStream {
public:
    PrimeStream(std::uint64_t start, std::uint64_t modulus, std::uint64_t residue);
    [[nodiscard]] std::uint64_t next();

private:
    std::uint64_t current_;
    std::uint64_t step_;
    bool first_ = true;
};

}  // namespace skolem
