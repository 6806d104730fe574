#include "skolem/verifier.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "skolem/error.hpp"

namespace skolem {

namespace {

bool coprime(const Integer& x, std::uint64_t m) { return std::gcd(mpz_fdiv_ui(x.get_mpz_t(), m), m) == 1; }

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        r *= base;
    }
    return r;
}

}  // namespace

bool scan_admissible(const LinearRecurrence& rec, std::uint64_t m) {
    if (m < 2 || rec.order() == 0 || rec.initial.size() != rec.order()) {
        return false;
    }
    for (const auto& a : rec.coefficients) {
        if (!coprime(a.den(), m)) {
            return false;
        }
    }
    for (const auto& u : rec.initial) {
        if (!coprime(u.den(), m)) {
            return false;
        }
    }
    return coprime(rec.coefficients.back().num(), m);
}

ScanReport scan_linear(const LinearRecurrence& rec, std::uint64_t m) {
    if (!scan_admissible(rec, m)) {
        throw error(errc::bad_modulus, "modulus " + std::to_string(m) +
                                           " is not coprime to the recurrence's denominators and last coefficient");
    }
    const std::size_t d = rec.order();
    std::vector<std::uint64_t> coeff(d);
    std::vector<std::uint64_t> start(d);
    for (std::size_t i = 0; i < d; ++i) {
        coeff[i] = residue(rec.coefficients[i], m);
        start[i] = residue(rec.initial[i], m);
    }

    ScanReport report;
    report.modulus = m;
    const std::uint64_t cap = saturating_pow(m, d);
    std::vector<std::uint64_t> state = start;  // (u_n, ..., u_{n+d-1})
    for (std::uint64_t n = 0;; ++n) {
        if (n >= cap) {
            throw std::logic_error("period scan exceeded m^d steps; state map is not invertible");
        }
        if (state[0] == 0) {
            report.zero_indices_in_period.push_back(n);
        }
        if (report.residues_sample.size() < 64) {
            report.residues_sample.push_back(state[0]);
        }
        std::uint64_t next = 0;
        for (std::size_t i = 0; i < d; ++i) {
            next = (next + mul_mod(coeff[i], state[d - 1 - i], m)) % m;
        }
        for (std::size_t i = 0; i + 1 < d; ++i) {
            state[i] = state[i + 1];
        }
        state[d - 1] = next;
        if (state == start) {
            report.period = n + 1;
            break;
        }
    }
    return report;
}

ScanReport period_scan(const Rat& a1, const Rat& a2, const Rat& u0, const Rat& u1, std::uint64_t m) {
    return scan_linear({{a1, a2}, {u0, u1}}, m);
}

Rat evaluate(const LinearRecurrence& rec, long n) {
    const auto d = static_cast<long>(rec.order());
    if (d == 0 || static_cast<long>(rec.initial.size()) != d) {
        throw std::invalid_argument("malformed recurrence");
    }
    if (n >= 0 && n < d) {
        return rec.initial[static_cast<std::size_t>(n)];
    }
    std::vector<Rat> window = rec.initial;  // u_k .. u_{k+d-1}
    if (n >= d) {
        for (long k = d; k <= n; ++k) {
            Rat next = 0;
            for (long i = 0; i < d; ++i) {
                next += rec.coefficients[static_cast<std::size_t>(i)] * window[static_cast<std::size_t>(d - 1 - i)];
            }
            window.erase(window.begin());
            window.push_back(next);
        }
        return window.back();
    }
    // u_k = (u_{k+d} - a_1 u_{k+d-1} - ... - a_{d-1} u_{k+1}) / a_d
    const Rat& last = rec.coefficients.back();
    if (last.is_zero()) {
        throw std::invalid_argument("cannot iterate backwards with a vanishing last coefficient");
    }
    for (long k = -1; k >= n; --k) {
        Rat acc = window[static_cast<std::size_t>(d - 1)];
        for (long i = 0; i + 1 < d; ++i) {
            acc -= rec.coefficients[static_cast<std::size_t>(i)] * window[static_cast<std::size_t>(d - 2 - i)];
        }
        window.pop_back();
        window.insert(window.begin(), acc / last);
    }
    return window.front();
}

namespace {

Verdict reject(std::string reason) { return {false, std::move(reason)}; }

Verdict check_scan(const Certificate& cert, const Integer& m_big) {
    if (mpz_fits_ulong_p(m_big.get_mpz_t()) == 0) {
        return reject("modulus " + m_big.get_str() + " too large to scan");
    }
    const std::uint64_t m = m_big.get_ui();
    const auto& rec = cert.subject.recurrence;
    if (!scan_admissible(rec, m)) {
        return reject("modulus " + std::to_string(m) +
                      " shares a factor with a denominator or the last coefficient of the recurrence");
    }
    const ScanReport scan = scan_linear(rec, m);
    if (!scan.zero_free()) {
        return reject("zero residue at index " + std::to_string(scan.zero_indices_in_period.front()) +
                      " modulo " + std::to_string(m));
    }
    return {true, "no zero residue modulo " + std::to_string(m) + " over period " + std::to_string(scan.period)};
}

}  // namespace

Verdict verify_certificate(const Certificate& cert) {
    const auto& rec = cert.subject.recurrence;
    if (rec.order() == 0 || rec.initial.size() != rec.order()) {
        return reject("malformed subject recurrence");
    }
    if (rec.coefficients.back().is_zero()) {
        return reject("last coefficient is zero");
    }
    if (cert.subject.b < 1) {
        return reject("b must be positive");
    }
    for (const auto* values : {&rec.coefficients, &rec.initial}) {
        for (const Rat& v : *values) {
            // strip every prime of b from the denominator
            Integer d = v.den();
            Integer g;
            for (mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), cert.subject.b.get_mpz_t()); g > 1;
                 mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t())) {
                d /= g;
            }
            if (d != 1) {
                return reject("denominator of " + v.str() + " is not a divisor of a power of b = " +
                              cert.subject.b.get_str());
            }
        }
    }

    if (cert.subject.family) {
        // u_n = b1 c1^n + (b2 + (-1)^n b3) c2^n satisfies the cubic with roots c1, c2, -c2.
        const auto& f = *cert.subject.family;
        const LinearRecurrence expected{{f.c1, f.c2 * f.c2, -(f.c1 * f.c2 * f.c2)},
                                        {f.b1 + f.b2 + f.b3, f.b1 * f.c1 + (f.b2 - f.b3) * f.c2,
                                         f.b1 * f.c1 * f.c1 + (f.b2 + f.b3) * f.c2 * f.c2}};
        if (!(expected == rec)) {
            return reject("cubic family data does not match the subject recurrence");
        }
    }

    if (cert.claim == Claim::zero_term) {
        const auto* idx = std::get_if<ZeroIndex>(&cert.witness);
        if (idx == nullptr) {
            return reject("zero-term claim without an index witness");
        }
        const Rat value = evaluate(rec, idx->n);
        if (!value.is_zero()) {
            return reject("u_" + std::to_string(idx->n) + " = " + value.str() + " is not zero");
        }
        return {true, "u_" + std::to_string(idx->n) + " = 0"};
    }

    Integer m;
    if (const auto* pm = std::get_if<PrimeModulus>(&cert.witness)) {
        m = pm->m;
        if (!is_prime(m)) {
            return reject("modulus " + m.get_str() + " is not prime");
        }
    } else if (const auto* cm = std::get_if<CompositeModulus>(&cert.witness)) {
        m = cm->m;
        Integer product = 1;
        for (const auto& f : cm->factors) {
            if (!is_prime(f.prime)) {
                return reject("factor " + f.prime.get_str() + " is not prime");
            }
            product *= f.prime;
        }
        if (cm->factors.empty() || product != m) {
            return reject("factors do not multiply to " + m.get_str());
        }
    } else {
        return reject("no-zero-term claim without a modulus witness");
    }
    if (m < 2) {
        return reject("modulus must be at least 2");
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), cert.subject.b.get_mpz_t());
    if (g != 1) {
        return reject("gcd(m, b) = " + g.get_str() + " != 1");
    }
    return check_scan(cert, m);
}

const char* to_string(SubjectKind kind) {
    switch (kind) {
        case SubjectKind::quadratic: return "quadratic";
        case SubjectKind::order1: return "order1";
        case SubjectKind::cubic: return "cubic";
    }
    return "unknown";
}

const char* to_string(Claim claim) { return claim == Claim::zero_term ? "zero-term" : "no-zero-term"; }

}  // namespace skolem
