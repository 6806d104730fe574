#pragma once

#include <stdexcept>
#include <string>

namespace skolem {

enum class errc {
    zero_argument,
    not_prime,
    not_invertible,
    bad_residue_class,
    zero_a2,
    repeated_root,
    irrational_roots,
    degenerate_to_order1,
    denominator_outside_base,
    degenerate_roots,
    symbol_undefined,
    singular_mod_n,
    bad_modulus,
    search_exhausted,
    not_covered_by_theorem,
    malformed_certificate,
};

[[nodiscard]] const char* errc_name(errc code) noexcept;

/// Base exception for every recoverable failure in the toolkit. Violated
/// internal invariants throw std::logic_error instead.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    [[nodiscard]] errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace skolem
