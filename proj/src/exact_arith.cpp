#include "skolem/exact_arith.hpp"

#include <array>
#include <numeric>
#include <vector>

#include "skolem/error.hpp"

namespace skolem {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::zero_argument: return "ZeroArgument";
        case errc::not_prime: return "NotPrime";
        case errc::not_invertible: return "NotInvertible";
        case errc::bad_residue_class: return "BadResidueClass";
        case errc::zero_a2: return "ZeroA2";
        case errc::repeated_root: return "RepeatedRoot";
        case errc::irrational_roots: return "IrrationalRoots";
        case errc::degenerate_to_order1: return "DegenerateToOrder1";
        case errc::denominator_outside_base: return "DenominatorOutsideBase";
        case errc::degenerate_roots: return "DegenerateRoots";
        case errc::symbol_undefined: return "SymbolUndefined";
        case errc::singular_mod_n: return "SingularModN";
        case errc::bad_modulus: return "BadModulus";
        case errc::search_exhausted: return "SearchExhausted";
        case errc::not_covered_by_theorem: return "NotCoveredByTheorem";
        case errc::malformed_certificate: return "MalformedCertificate";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Rat

Rat::Rat(const Integer& num, const Integer& den) : q_(num, den) {
    if (den == 0) {
        throw error(errc::zero_argument, "rational with zero denominator");
    }
    q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    const std::string num_text = s.substr(0, slash);
    const std::string den_text = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto valid = [](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) {
            i = 1;
        }
        if (i >= t.size()) {
            return false;
        }
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') {
                return false;
            }
        }
        return true;
    };
    if (!valid(num_text, true) || !valid(den_text, false)) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
    const Integer num(num_text[0] == '+' ? num_text.substr(1) : num_text, 10);
    const Integer den(den_text, 10);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + s + "'");
    }
    return {num, den};
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) {
        throw error(errc::zero_argument, "division by zero");
    }
    return Rat(mpq_class(a.q_ / b.q_));
}

Rat Rat::pow(long e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    Integer n;
    Integer d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return {n, d};
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(q_))); }

Rat Rat::inverse() const {
    if (is_zero()) {
        throw error(errc::zero_argument, "inverse of zero");
    }
    return {q_.get_den(), q_.get_num()};
}

std::string Rat::str() const {
    if (q_.get_den() == 1) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

// ---------------------------------------------------------------------------
// modular kernels on 64-bit words

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    if (m <= 0xFFFFFFFFULL && a < m && b < m) {
        return a * b % m;
    }
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1U) {
            result = mul_mod(result, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1U;
    }
    return result;
}

Integer mod_pow(const Integer& a, const Integer& e, const Integer& m) {
    if (m < 2) {
        throw std::invalid_argument("mod_pow: modulus must be >= 2");
    }
    if (e < 0) {
        throw std::invalid_argument("mod_pow: negative exponent");
    }
    Integer r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer r;
    if (m < 1 || mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw error(errc::not_invertible,
                    a.get_str() + " is not invertible modulo " + m.get_str());
    }
    return r;
}

std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m) {
    const auto r = mod_inverse(Integer(static_cast<long>(a)), Integer(static_cast<unsigned long>(m)));
    return r.get_ui();
}

std::uint64_t residue(const Rat& x, std::uint64_t m) {
    const std::uint64_t num = mpz_fdiv_ui(x.num().get_mpz_t(), m);
    const std::uint64_t den = mpz_fdiv_ui(x.den().get_mpz_t(), m);
    if (std::gcd(den, m) != 1) {
        throw error(errc::not_invertible,
                    "denominator of " + x.str() + " is not invertible modulo " + std::to_string(m));
    }
    return mul_mod(num, mod_inverse(static_cast<std::int64_t>(den), m), m);
}

// ---------------------------------------------------------------------------
// primality

namespace {

bool miller_rabin_u64(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (const auto p : bases) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (const auto a : bases) {
        std::uint64_t x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) { return miller_rabin_u64(n); }

bool is_prime(const Integer& n) {
    if (n < 2) {
        return false;
    }
    if (mpz_fits_ulong_p(n.get_mpz_t()) != 0) {
        return miller_rabin_u64(n.get_ui());
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
}

// ---------------------------------------------------------------------------
// factorization

namespace {

constexpr unsigned long trial_limit = 1'000'000;

// Pollard-Brent; returns a nontrivial factor of the odd composite n.
Integer pollard_brent(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer y = 2;
        Integer x;
        Integer ys;
        Integer g = 1;
        Integer q = 1;
        unsigned long r = 1;
        constexpr unsigned long batch = 128;
        auto f = [&](const Integer& v) {
            Integer t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) {
                y = f(y);
            }
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
                    y = f(y);
                    Integer diff = abs(x - y);
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += batch;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void factor_into(const Integer& n, Factorization& out) {
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(Integer(n / d), out);
}

}  // namespace

Factorization factorize(const Integer& n) {
    if (n == 0) {
        throw error(errc::zero_argument, "factorize(0)");
    }
    Factorization out;
    Integer m = abs(n);
    auto strip = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e > 0) {
            out[Integer(p)] = e;
        }
    };
    strip(2);
    for (unsigned long p = 3; p <= trial_limit; p += 2) {
        if (m == 1 || Integer(p) * p > m) {
            break;
        }
        strip(p);
    }
    if (m == 1) {
        return out;
    }
    // Any cofactor below trial_limit^2 left here is prime.
    if (m < Integer(trial_limit) * trial_limit) {
        ++out[m];
        return out;
    }
    factor_into(m, out);
    return out;
}

Factorization factorize(std::uint64_t n) { return factorize(Integer(static_cast<unsigned long>(n))); }

long valuation(const Rat& x, const Integer& p) {
    if (x.is_zero()) {
        throw error(errc::zero_argument, "valuation of zero");
    }
    if (!is_prime(p)) {
        throw error(errc::not_prime, "valuation at non-prime " + p.get_str());
    }
    auto count = [&](Integer v) {
        long e = 0;
        v = abs(v);
        while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()) != 0) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        return e;
    };
    return count(x.num()) - count(x.den());
}

Integer radical(const Integer& n) {
    Integer r = 1;
    for (const auto& [p, e] : factorize(n)) {
        r *= p;
    }
    return r;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
    std::uint64_t order = p - 1;
    for (const auto& [q, e] : factorize(p - 1)) {
        const std::uint64_t qv = q.get_ui();
        for (unsigned i = 0; i < e && order % qv == 0 && mod_pow(a, order / qv, p) == 1; ++i) {
            order /= qv;
        }
    }
    return order;
}

std::uint64_t smallest_primitive_root(std::uint64_t r) {
    if (r < 3 || !is_prime(r)) {
        throw error(errc::not_prime, std::to_string(r) + " is not an odd prime");
    }
    std::vector<std::uint64_t> cofactors;
    for (const auto& [q, e] : factorize(r - 1)) {
        cofactors.push_back((r - 1) / q.get_ui());
    }
    for (std::uint64_t g = 2;; ++g) {
        bool generator = true;
        for (const auto c : cofactors) {
            if (mod_pow(g, c, r) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) {
            return g;
        }
    }
}

// ---------------------------------------------------------------------------
// PrimeStream

PrimeStream::PrimeStream(std::uint64_t start, std::uint64_t modulus, std::uint64_t residue_class)
    : step_(modulus) {
    if (modulus == 0 || std::gcd(residue_class % modulus, modulus) != 1) {
        throw error(errc::bad_residue_class,
                    "residue " + std::to_string(residue_class) + " not coprime to " + std::to_string(modulus));
    }
    const std::uint64_t target = residue_class % modulus;
    // smallest x > start with x = target (mod modulus)
    std::uint64_t x = start + 1;
    x += (target + modulus - x % modulus) % modulus;
    current_ = x;
}

std::uint64_t PrimeStream::next() {
    if (!first_) {
        current_ += step_;
    }
    first_ = false;
    while (!is_prime(current_)) {
        current_ += step_;
    }
    return current_;
}

}  // namespace skolem
