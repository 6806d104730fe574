#include "skolem/density.hpp"

namespace skolem {

DensityCount density_count(const SearchPlan& plan, std::uint64_t max, Execution exec) {
    const std::uint64_t n = plan.n;
    const std::uint64_t count = max > n ? (max - 1) / n : 0;
    auto eligible = [&](std::uint64_t r) {
        if (has_small_factor(r) || !is_prime(r)) {
            return false;
        }
        for (const auto& p : plan.t.primes) {
            if (mpz_cmp_ui(p.get_mpz_t(), r) == 0) {
                return false;
            }
        }
        return true;
    };
    DensityCount out;
    out.class_primes = kernels::count_matches(exec, count, [&](std::uint64_t i) { return eligible(1 + (i + 1) * n); });
    out.qualifying = kernels::count_matches(exec, count, [&](std::uint64_t i) {
        const std::uint64_t r = 1 + (i + 1) * n;
        return !has_small_factor(r) && trivial_symbols_hold(plan, r) && eligible(r) && plan_accepts(plan, r, true);
    });
    return out;
}

}  // namespace skolem
