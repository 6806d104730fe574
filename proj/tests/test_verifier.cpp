#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "skolem/certifier.hpp"
#include "skolem/verifier.hpp"

using namespace skolem;

namespace {

std::vector<std::uint64_t> residues(const ScanReport& s) { return s.residues_sample; }

// u_n mod m for n in [0, count) by plain integer iteration; inputs are integers.
std::vector<std::uint64_t> integer_residues(long a1, long a2, long u0, long u1, long m, long count) {
    auto md = [m](long x) { return ((x % m) + m) % m; };
    std::vector<std::uint64_t> out;
    long x = md(u0);
    long y = md(u1);
    for (long i = 0; i < count; ++i) {
        out.push_back(static_cast<std::uint64_t>(x));
        const long z = md(md(a1) * y + md(a2) * x);
        x = y;
        y = z;
    }
    return out;
}

}  // namespace

TEST_CASE("period_scan examples") {
    const auto s7 = period_scan(Rat(3), Rat(-2), Rat(-2), Rat(-1), 7);
    CHECK(s7.period == 3);
    CHECK(residues(s7) == std::vector<std::uint64_t>{5, 6, 1});
    CHECK(s7.zero_free());

    const auto s5 = period_scan(Rat(4), Rat(-4), Rat(1), Rat(6), 5);
    CHECK_FALSE(s5.zero_free());
    CHECK(std::find(s5.zero_indices_in_period.begin(), s5.zero_indices_in_period.end(), 2u) !=
          s5.zero_indices_in_period.end());

    const auto s31 = period_scan(Rat(3), Rat(-2), Rat(-2), Rat(-1), 31);
    CHECK(s31.period == 5);
    CHECK(residues(s31) == std::vector<std::uint64_t>{29, 30, 1, 5, 13});
    CHECK(s31.zero_free());
}

TEST_CASE("Example-1 zeros at (m-1)/2") {
    for (const std::uint64_t m : {3, 5, 7}) {
        const auto s = period_scan(Rat(4), Rat(-4), Rat(1), Rat(6), m);
        const std::uint64_t expected = (m - 1) / 2;
        CHECK(std::find(s.zero_indices_in_period.begin(), s.zero_indices_in_period.end(), expected) !=
              s.zero_indices_in_period.end());
    }
}

TEST_CASE("scan rejects inadmissible moduli") {
    try {
        (void)period_scan(Rat(3), Rat(-2), Rat(-2), Rat(-1), 2);  // a2 = -2 is not a unit mod 2
        FAIL("expected BadModulus");
    } catch (const error& e) {
        CHECK(e.code() == errc::bad_modulus);
    }
    CHECK_THROWS_AS((void)period_scan(Rat(3), Rat(-2), Rat::parse("1/5"), Rat(1), 5), error);
    CHECK_THROWS_AS((void)period_scan(Rat(3), Rat(-2), Rat(1), Rat(1), 1), error);
}

TEST_CASE("scan properties on random integer recurrences") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> small(-20, 20);
    const std::vector<std::uint64_t> moduli{3, 4, 5, 7, 9, 11, 12, 13, 25, 31, 35, 97};
    int scans = 0;
    while (scans < 300) {
        const long c1 = small(rng);
        const long c2 = small(rng);
        const long u0 = small(rng);
        const long u1 = small(rng);
        if (c1 == 0 || c2 == 0 || c1 == c2) {
            continue;
        }
        const long a1 = c1 + c2;
        const long a2 = -c1 * c2;
        const std::uint64_t m = moduli[rng() % moduli.size()];
        const LinearRecurrence rec{{Rat(a1), Rat(a2)}, {Rat(u0), Rat(u1)}};
        if (!scan_admissible(rec, m)) {
            CHECK_THROWS((void)scan_linear(rec, m));
            continue;
        }
        ++scans;
        const ScanReport s = scan_linear(rec, m);
        REQUIRE(s.period >= 1);
        REQUIRE(s.period <= m * m);
        const auto direct = integer_residues(a1, a2, u0, u1, static_cast<long>(m), 2 * static_cast<long>(s.period) + 1);
        // state at period equals state at 0, and the first period repeats exactly
        for (std::uint64_t i = 0; i < s.period; ++i) {
            REQUIRE(direct[i] == direct[i + s.period]);
        }
        REQUIRE(direct[s.period] == direct[0]);
        // the period is the first recurrence of the state pair
        for (std::uint64_t p = 1; p < s.period; ++p) {
            REQUIRE_FALSE((direct[p] == direct[0] && direct[p + 1] == direct[1]));
        }
        std::vector<std::uint64_t> zeros;
        for (std::uint64_t i = 0; i < s.period; ++i) {
            if (direct[i] == 0) {
                zeros.push_back(i);
            }
        }
        REQUIRE(zeros == s.zero_indices_in_period);
        const std::size_t shown = std::min<std::uint64_t>(s.period, 64);
        REQUIRE(s.residues_sample.size() == shown);
        for (std::size_t i = 0; i < shown; ++i) {
            REQUIRE(s.residues_sample[i] == direct[i]);
        }
        // prime modulus coprime to both roots, roots distinct mod m: period divides m - 1
        const bool coprime = std::gcd(c1, static_cast<long>(m)) == 1 && std::gcd(c2, static_cast<long>(m)) == 1;
        const bool distinct = (c1 - c2) % static_cast<long>(m) != 0;
        if (oracle::trial_is_prime(m) && coprime && distinct) {
            const long mm = static_cast<long>(m);
            const auto o1 = oracle::naive_order(static_cast<std::uint64_t>((c1 % mm + mm) % mm), m);
            const auto o2 = oracle::naive_order(static_cast<std::uint64_t>((c2 % mm + mm) % mm), m);
            REQUIRE(std::lcm(o1, o2) % s.period == 0);
            REQUIRE((m - 1) % s.period == 0);
        }
    }
}

TEST_CASE("scan residues agree with the closed form") {
    // u_n = 2^n/3 - 5 (3/7)^n reduced mod several m coprime to 21
    const ClosedForm cf{Rat::parse("1/3"), Rat(-5), Rat(2), Rat::parse("3/7")};
    const LinearRecurrence rec{{cf.c1 + cf.c2, -(cf.c1 * cf.c2)}, {term(cf, 0), term(cf, 1)}};
    for (const std::uint64_t m : {5, 11, 13, 17, 19, 23, 25, 101}) {
        const ScanReport s = scan_linear(rec, m);
        for (long n = 0; n < 10; ++n) {
            const long idx = n % static_cast<long>(s.period);
            if (static_cast<std::size_t>(idx) < s.residues_sample.size()) {
                REQUIRE(s.residues_sample[static_cast<std::size_t>(idx)] == residue(term(cf, n), m));
            }
        }
    }
}

TEST_CASE("evaluate matches iteration both ways") {
    const LinearRecurrence rec{{Rat(3), Rat(-2)}, {Rat(-2), Rat(-1)}};
    const auto seq = oracle::iterate(Rat(3), Rat(-2), Rat(-2), Rat(-1), -15, 15);
    for (long n = -15; n <= 15; ++n) {
        CHECK(evaluate(rec, n) == seq.at(n));
    }
}

TEST_CASE("verify_certificate examples") {
    Certificate cert;
    cert.subject.kind = SubjectKind::quadratic;
    cert.subject.recurrence = {{Rat(3), Rat(-2)}, {Rat(-2), Rat(-1)}};
    cert.claim = Claim::no_zero_term;
    cert.witness = PrimeModulus{Integer(31), 3, {}};
    cert.scan = scan_linear(cert.subject.recurrence, 31);
    CHECK(verify_certificate(cert).accepted);

    Certificate tampered = cert;
    std::get<PrimeModulus>(tampered.witness).m = 5;
    const Verdict v = verify_certificate(tampered);
    CHECK_FALSE(v.accepted);
    CHECK(v.reason.find("zero residue at index 3") != std::string::npos);

    Certificate composite = cert;
    composite.witness = CompositeModulus{Integer(35), {{Integer(5), "even"}, {Integer(7), "odd"}}};
    CHECK(verify_certificate(composite).accepted);  // 5 | u_3 but 7 never divides 2^n - 3
    std::get<CompositeModulus>(composite.witness).m = 55;
    CHECK_FALSE(verify_certificate(composite).accepted);  // factors do not multiply to m
    composite.witness = CompositeModulus{Integer(63), {{Integer(9), "even"}, {Integer(7), "odd"}}};
    CHECK_FALSE(verify_certificate(composite).accepted);  // 9 is not prime
    composite.witness = CompositeModulus{Integer(2045), {{Integer(5), "even"}, {Integer(409), "odd"}}};
    CHECK_FALSE(verify_certificate(composite).accepted);  // 2^11 - 3 = 5 * 409

    Certificate not_prime = cert;
    std::get<PrimeModulus>(not_prime.witness).m = 25;
    CHECK_FALSE(verify_certificate(not_prime).accepted);

    Certificate shares_b = cert;
    shares_b.subject.b = 31;
    CHECK_FALSE(verify_certificate(shares_b).accepted);

    Certificate zero;
    zero.subject.recurrence = {{Rat(3), Rat(-2)}, {Rat(-7), Rat(-6)}};
    zero.claim = Claim::zero_term;
    zero.witness = ZeroIndex{3};
    CHECK(verify_certificate(zero).accepted);
    zero.witness = ZeroIndex{2};
    CHECK_FALSE(verify_certificate(zero).accepted);

    Certificate mismatched = cert;
    mismatched.claim = Claim::zero_term;
    CHECK_FALSE(verify_certificate(mismatched).accepted);
}
