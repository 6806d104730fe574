#include <doctest.h>

#include "oracles.hpp"
#include "skolem/classifier.hpp"
#include "skolem/residue_symbol.hpp"

using namespace skolem;

namespace {

// exhaustive checks for one (n, r)
void check_context(std::uint64_t n, std::uint64_t r) {
    const SymbolContext ctx(n, r);
    REQUIRE(oracle::naive_order(ctx.zeta(), r) == n);
    const auto powers = oracle::nth_powers(n, r);
    std::vector<unsigned> e(r, 0);
    for (std::uint64_t a = 1; a < r; ++a) {
        e[a] = symbol_exponent(a, ctx);
        REQUIRE(e[a] < n);
        REQUIRE((e[a] == 0) == powers[a]);
        REQUIRE(symbol_exponent(Rat(static_cast<long>(a)), ctx) == e[a]);
    }
    for (std::uint64_t x = 1; x < r; ++x) {
        for (std::uint64_t y = 1; y < r; ++y) {
            REQUIRE(e[x * y % r] == (e[x] + e[y]) % n);
        }
    }
    REQUIRE(symbol_exponent(Rat(-1), ctx) == 0);
    // zeta = g^((r-1)/n) decodes to exponent 1, so g^k has exponent k mod n
    const std::uint64_t g = smallest_primitive_root(r);
    REQUIRE(oracle::naive_pow_mod(g, (r - 1) / n, r) == ctx.zeta());
    std::uint64_t z = 1;
    for (unsigned k = 0; k < 3 * n; ++k) {
        REQUIRE(symbol_exponent(z, ctx) == k % n);
        z = z * g % r;
    }
}

}  // namespace

TEST_CASE("symbol_exponent examples") {
    const SymbolContext ctx(3, 31);
    CHECK(ctx.zeta() == 25);
    CHECK(symbol_exponent(Rat(2), ctx) == 0);
    CHECK(symbol_exponent(Rat(3), ctx) == 1);
    CHECK(symbol_exponent(Rat(-1), ctx) == 0);
    CHECK(symbol_exponent(Rat::parse("3/2"), ctx) == 1);
    try {
        (void)symbol_exponent(Rat::parse("62/5"), ctx);
        FAIL("expected SymbolUndefined");
    } catch (const error& e) {
        CHECK(e.code() == errc::symbol_undefined);
    }
}

TEST_CASE("SymbolContext rejects bad parameters") {
    CHECK_THROWS_AS(SymbolContext(3, 11), std::invalid_argument);  // 11 != 1 mod 3
    CHECK_THROWS_AS(SymbolContext(4, 13), std::invalid_argument);
    CHECK_THROWS_AS(SymbolContext(2, 13), std::invalid_argument);
    CHECK_THROWS_AS(SymbolContext(3, 25), std::invalid_argument);
}

TEST_CASE("cube residues for r < 200") {
    for (std::uint64_t r = 7; r < 200; r += 6) {
        if (oracle::trial_is_prime(r)) {
            check_context(3, r);
        }
    }
}

TEST_CASE("fifth-power residues for r < 300") {
    for (std::uint64_t r = 11; r < 300; r += 10) {
        if (oracle::trial_is_prime(r)) {
            check_context(5, r);
        }
    }
}

TEST_CASE("choose_modulus examples") {
    CHECK(choose_modulus(Rank2{Integer(2), Integer(3), 1}, 0) == 3);
    CHECK(choose_modulus(Rank2{Integer(2), Integer(3), -3}, 0) == 5);
    CHECK(choose_modulus(TopRowZero{Integer(2)}, 1) == 3);
    CHECK(choose_modulus(TopRowZero{Integer(2)}, 3) == 5);
    CHECK(choose_modulus(Rank2{Integer(2), Integer(3), 15}, 0) == 7);
    CHECK(choose_modulus(Rank2{Integer(2), Integer(3), -4}, 0) == 3);
}

TEST_CASE("solve_targets examples") {
    CHECK(solve_targets({1, 0, 0, 1}, 3) == SymbolTargets{PlanKind::rank2, 0, 1});
    CHECK(solve_targets({1, 1, 0, 1}, 3) == SymbolTargets{PlanKind::rank2, 2, 1});
    CHECK(solve_targets({-2, 2, 2, 0}, 3) == SymbolTargets{PlanKind::rank2, 2, 2});
    try {
        (void)solve_targets({3, 0, 0, 1}, 3);
        FAIL("expected SingularModN");
    } catch (const error& e) {
        CHECK(e.code() == errc::singular_mod_n);
    }
    CHECK(top_row_targets().kind == PlanKind::top_row_zero);
}

TEST_CASE("solve_targets substitutes back to (0, 1)") {
    auto mod = [](long x, long n) { return ((x % n) + n) % n; };
    for (const long n : {3L, 5L, 7L, 11L}) {
        for (long cp = -4; cp <= 4; ++cp) {
            for (long cq = -4; cq <= 4; ++cq) {
                for (long bp = -4; bp <= 4; ++bp) {
                    for (long bq = -4; bq <= 4; ++bq) {
                        const PivotMinor m{cp, cq, bp, bq};
                        if (mod(m.det(), n) == 0) {
                            continue;
                        }
                        const auto t = solve_targets(m, static_cast<std::uint64_t>(n));
                        const long a = t.a;
                        const long b = t.b;
                        REQUIRE(mod(a * cp + b * cq, n) == 0);
                        REQUIRE(mod(a * bp + b * bq, n) == 1);
                    }
                }
            }
        }
    }
}
