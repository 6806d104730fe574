#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skolem/exact_arith.hpp"

namespace skolem {

/// u_{n+d} = coefficients[0] u_{n+d-1} + ... + coefficients[d-1] u_n,
/// with initial = (u_0, ..., u_{d-1}).
struct LinearRecurrence {
    std::vector<Rat> coefficients;
    std::vector<Rat> initial;

    [[nodiscard]] std::size_t order() const { return coefficients.size(); }
    friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;
};

/// u_n = b1 c1^n + (b2 + (-1)^n b3) c2^n
struct CubicFamilyData {
    Rat b1, b2, b3, c1, c2;
    friend bool operator==(const CubicFamilyData&, const CubicFamilyData&) = default;
};

enum class SubjectKind { quadratic, order1, cubic };

struct Subject {
    SubjectKind kind = SubjectKind::quadratic;
    LinearRecurrence recurrence;
    Integer b = 1;
    std::optional<CubicFamilyData> family;
    friend bool operator==(const Subject&, const Subject&) = default;
};

enum class Claim { zero_term, no_zero_term };

struct PrimeModulus {
    Integer m;
    std::optional<std::uint64_t> n_used;  // power-residue degree, theorem route only
    std::vector<std::pair<Integer, unsigned>> symbol_exponents;
    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;
};

struct ModulusFactor {
    Integer prime;
    std::string role;  // "even" or "odd"
    friend bool operator==(const ModulusFactor&, const ModulusFactor&) = default;
};

struct CompositeModulus {
    Integer m;
    std::vector<ModulusFactor> factors;
    friend bool operator==(const CompositeModulus&, const CompositeModulus&) = default;
};

struct ZeroIndex {
    long n = 0;
    friend bool operator==(const ZeroIndex&, const ZeroIndex&) = default;
};

using Witness = std::variant<PrimeModulus, CompositeModulus, ZeroIndex>;

/// One full period of the sequence modulo m.
struct ScanReport {
    std::uint64_t modulus = 0;
    std::uint64_t period = 0;
    std::vector<std::uint64_t> zero_indices_in_period;
    std::vector<std::uint64_t> residues_sample;  // first min(period, 64) residues

    [[nodiscard]] bool zero_free() const { return zero_indices_in_period.empty(); }
    friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

struct Certificate {
    int version = 1;
    Subject subject;
    Claim claim = Claim::no_zero_term;
    Witness witness;
    std::optional<ScanReport> scan;
    std::map<std::string, std::string> metadata;
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

[[nodiscard]] const char* to_string(SubjectKind kind);
[[nodiscard]] const char* to_string(Claim claim);

}  // namespace skolem
