#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "skolem/classifier.hpp"
#include "skolem/cubic.hpp"
#include "skolem/verifier.hpp"

using namespace skolem;

namespace {

CubicFamilyData family(long b1, long b2, long b3, long c1, long c2) {
    return {Rat(b1), Rat(b2), Rat(b3), Rat(c1), Rat(c2)};
}

CertifyConfig fallback() {
    CertifyConfig c;
    c.mode = Mode::fallback;
    return c;
}

}  // namespace

TEST_CASE("cubic_coeffs examples") {
    CHECK(cubic_coeffs(Rat(3), Rat(2)) == CubicCoefficients{Rat(3), Rat(4), Rat(-12)});
    CHECK(cubic_coeffs(Rat(1), Rat(2)) == CubicCoefficients{Rat(1), Rat(4), Rat(-4)});
    try {
        (void)cubic_coeffs(Rat(2), Rat(2));
        FAIL("expected DegenerateRoots");
    } catch (const error& e) {
        CHECK(e.code() == errc::degenerate_roots);
    }
    CHECK_THROWS_AS((void)cubic_coeffs(Rat(-2), Rat(2)), error);
    CHECK_THROWS_AS((void)cubic_coeffs(Rat(0), Rat(2)), error);
}

TEST_CASE("split examples") {
    const CubicFamily fam = make_family(family(1, -5, 1, 3, 2));
    const auto [even, odd] = split(fam);
    CHECK(even == ClosedForm{Rat(1), Rat(-4), Rat(9), Rat(4)});
    CHECK(odd == ClosedForm{Rat(3), Rat(-12), Rat(9), Rat(4)});
    CHECK(ratio_pair(even) == RatioPair{Rat(4), Rat::parse("9/4")});
    CHECK(ratio_pair(odd) == RatioPair{Rat(4), Rat::parse("9/4")});
    CHECK(ratio_pair(odd).B == fam.B_minus / fam.C);

    try {
        (void)split(make_family(family(1, -1, 1, 3, 2)));
        FAIL("expected DegenerateToOrder1");
    } catch (const degenerate_to_order1& e) {
        CHECK(e.code() == errc::degenerate_to_order1);
    }
}

TEST_CASE("certify_cubic examples") {
    const CubicFamily fam = make_family(family(1, -5, 1, 3, 2));
    const Certificate c = certify_cubic(fam, fallback());
    CHECK(c.claim == Claim::no_zero_term);
    CHECK(std::get<PrimeModulus>(c.witness).m == 5);
    REQUIRE(c.scan.has_value());
    CHECK(c.scan->period == 4);
    CHECK(c.scan->residues_sample == std::vector<std::uint64_t>{2, 1, 3, 4});
    CHECK(verify_certificate(c).accepted);

    const Certificate t = certify_cubic(fam);
    CHECK(t.claim == Claim::no_zero_term);
    CHECK(verify_certificate(t).accepted);

    // even part 9^k - 9 4^k has no zero, and neither does the odd part
    const Certificate d = certify_cubic(make_family(family(1, -5, -4, 3, 2)));
    CHECK(d.claim == Claim::no_zero_term);
    CHECK(verify_certificate(d).accepted);

    const Certificate z = certify_cubic(make_family(family(1, -3, -1, 2, 1)));
    CHECK(z.claim == Claim::zero_term);
    CHECK(std::get<ZeroIndex>(z.witness).n == 2);
    CHECK(verify_certificate(z).accepted);
}

TEST_CASE("order-1 parity is rerouted") {
    // b2 + b3 = 0: even terms are 9^k
    const Certificate c = certify_cubic(make_family(family(1, -1, 1, 3, 2)));
    CHECK(c.claim == Claim::no_zero_term);
    CHECK(verify_certificate(c).accepted);
    CHECK(c.metadata.at("even_route") == "order1");
}

TEST_CASE("verifier rejects an inconsistent cubic subject") {
    Certificate c = certify_cubic(make_family(family(1, -5, 1, 3, 2)), fallback());
    c.subject.recurrence.initial[2] += Rat(1);
    CHECK_FALSE(verify_certificate(c).accepted);
}

TEST_CASE("cubic identities on random families") {
    std::mt19937_64 rng(101);
    int checked = 0;
    while (checked < 100) {
        const CubicFamilyData d{oracle::random_rat(rng, 9), oracle::random_rat(rng, 9), oracle::random_rat(rng, 9),
                                oracle::random_rat(rng, 9), oracle::random_rat(rng, 9)};
        if (d.c1 == d.c2 || d.c1 == -d.c2) {
            continue;
        }
        ++checked;
        const CubicFamily fam = make_family(d);
        const auto& k = fam.coeffs;
        for (long n = -5; n <= 5; ++n) {
            REQUIRE(term(fam, n + 3) == k.a1 * term(fam, n + 2) + k.a2 * term(fam, n + 1) + k.a3 * term(fam, n));
        }
        // x^3 - a1 x^2 - a2 x - a3 vanishes at c1, c2, -c2
        for (const Rat& x : {d.c1, d.c2, -d.c2}) {
            REQUIRE(x.pow(3) - k.a1 * x * x - k.a2 * x - k.a3 == Rat(0));
        }
        const ClosedForm even = subsequence_closed_form(fam, Parity::even);
        const ClosedForm odd = subsequence_closed_form(fam, Parity::odd);
        for (long j = -5; j <= 5; ++j) {
            REQUIRE(term(even, j) == term(fam, 2 * j));
            REQUIRE(term(odd, j) == term(fam, 2 * j + 1));
        }
        REQUIRE(fam.B_plus == -(d.b2 + d.b3) / d.b1);
        REQUIRE(fam.B_minus == -(d.b2 - d.b3) / d.b1);
        if (!even.b1.is_zero() && !even.b2.is_zero() && !odd.b1.is_zero() && !odd.b2.is_zero()) {
            const RatioPair pe = ratio_pair(even);
            const RatioPair po = ratio_pair(odd);
            // root order swaps when |c2| > |c1|, inverting both ratios
            const bool swapped = d.c2.abs() > d.c1.abs();
            const Rat C2 = fam.C * fam.C;
            REQUIRE(pe == (swapped ? RatioPair{fam.B_plus.inverse(), C2.inverse()} : RatioPair{fam.B_plus, C2}));
            const Rat b_odd = fam.B_minus / fam.C;
            REQUIRE(po == (swapped ? RatioPair{b_odd.inverse(), C2.inverse()} : RatioPair{b_odd, C2}));
            bool even_zero = false;
            bool odd_zero = false;
            for (long j = -12; j <= 12; ++j) {
                even_zero = even_zero || fam.C.pow(2 * j) == fam.B_plus;
                odd_zero = odd_zero || fam.C.pow(2 * j + 1) == fam.B_minus;
            }
            const bool ez = zero_index(pe).has_value();
            const bool oz = zero_index(po).has_value();
            REQUIRE(ez == even_zero);
            REQUIRE(oz == odd_zero);
        }
    }
}

TEST_CASE("composite certificates pass the full scan") {
    // search families until both parities need different primes
    std::mt19937_64 rng(4242);
    int composites = 0;
    for (int i = 0; i < 300 && composites < 5; ++i) {
        const CubicFamilyData d{oracle::random_rat(rng, 7), oracle::random_rat(rng, 7), oracle::random_rat(rng, 7),
                                oracle::random_rat(rng, 7), oracle::random_rat(rng, 7)};
        if (d.c1 == d.c2 || d.c1 == -d.c2) {
            continue;
        }
        const CubicFamily fam = make_family(d);
        Certificate c;
        try {
            c = certify_cubic(fam);
        } catch (const error&) {
            continue;  // a parity outside the theorem
        }
        REQUIRE(verify_certificate(c).accepted);
        if (const auto* cm = std::get_if<CompositeModulus>(&c.witness)) {
            ++composites;
            REQUIRE(cm->factors.size() == 2);
            REQUIRE(scan_linear(c.subject.recurrence, cm->m.get_ui()).zero_free());
        }
    }
    CHECK(composites > 0);
}
