#pragma once

#include <cstdint>

#include "skolem/certifier.hpp"

namespace skolem {

/// Counts for the infinitude experiment: primes r <= max with r = 1 (mod n)
/// outside T, and how many of them satisfy the plan with the exact targets.
struct DensityCount {
    std::uint64_t qualifying = 0;
    std::uint64_t class_primes = 0;
};

[[nodiscard]] DensityCount density_count(const SearchPlan& plan, std::uint64_t max,
                                         Execution exec = Execution::parallel);

}  // namespace skolem
