#pragma once

#include <string>
#include <string_view>

#include "skolem/certificate.hpp"

namespace skolem {

/// Canonical JSON: keys sorted, two-space indent, trailing newline. All
/// rationals and big integers are strings ("-3/2", "31").
[[nodiscard]] std::string serialize(const Certificate& cert);

/// Throws error(malformed_certificate) on any syntax or schema problem.
[[nodiscard]] Certificate parse_certificate(std::string_view text);

}  // namespace skolem
