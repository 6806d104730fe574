#pragma once

/**
 * @file parallel.hpp
 * @brief Index-space kernels used by the prime searches.
 *
 * Each kernel has a serial reference and an OpenMP version with the same
 * result. first_match walks the index range in blocks and returns the
 * smallest matching index, so the answer never depends on thread scheduling.
 * Predicates must be pure; an exception thrown inside a parallel block is
 * rethrown on the calling thread after the block completes.
 */

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skolem::kernels {

enum class Execution { serial, parallel };

inline constexpr std::uint64_t default_block = 4096;

template <class Pred>
[[nodiscard]] std::optional<std::uint64_t> first_match_serial(std::uint64_t count, Pred&& pred) {
    for (std::uint64_t i = 0; i < count; ++i) {
        if (pred(i)) {
            return i;
        }
    }
    return std::nullopt;
}

template <class Pred>
[[nodiscard]] std::uint64_t count_matches_serial(std::uint64_t count, Pred&& pred) {
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (pred(i)) {
            ++total;
        }
    }
    return total;
}

template <class Pred>
[[nodiscard]] std::optional<std::uint64_t> first_match_parallel(std::uint64_t count, Pred&& pred,
                                                                std::uint64_t block = default_block) {
#ifdef _OPENMP
    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t lo = 0; lo < count; lo += block) {
        const auto hi = static_cast<std::int64_t>(std::min(count, lo + block));
        std::uint64_t best = none;
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
        for (std::int64_t i = static_cast<std::int64_t>(lo); i < hi; ++i) {
            const auto idx = static_cast<std::uint64_t>(i);
            if (idx >= best) {
                continue;
            }
            try {
                if (pred(idx)) {
                    best = idx;
                }
            } catch (...) {
#pragma omp critical(skolem_kernel_failure)
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
        if (best != none) {
            return best;
        }
    }
    return std::nullopt;
#else
    (void)block;
    return first_match_serial(count, std::forward<Pred>(pred));
#endif
}

template <class Pred>
[[nodiscard]] std::uint64_t count_matches_parallel(std::uint64_t count, Pred&& pred) {
#ifdef _OPENMP
    std::uint64_t total = 0;
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : total)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
        try {
            if (pred(static_cast<std::uint64_t>(i))) {
                ++total;
            }
        } catch (...) {
#pragma omp critical(skolem_kernel_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return total;
#else
    return count_matches_serial(count, std::forward<Pred>(pred));
#endif
}

template <class Pred>
[[nodiscard]] std::optional<std::uint64_t> first_match(Execution exec, std::uint64_t count, Pred&& pred) {
    return exec == Execution::serial ? first_match_serial(count, std::forward<Pred>(pred))
                                     : first_match_parallel(count, std::forward<Pred>(pred));
}

template <class Pred>
[[nodiscard]] std::uint64_t count_matches(Execution exec, std::uint64_t count, Pred&& pred) {
    return exec == Execution::serial ? count_matches_serial(count, std::forward<Pred>(pred))
                                     : count_matches_parallel(count, std::forward<Pred>(pred));
}

}  // namespace skolem::kernels
