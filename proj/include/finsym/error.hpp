#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace finsym {

/// Malformed or out-of-range input (CLI exit code 2).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would exceed the configured state budget (CLI exit code 3).
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Hard ceiling on any brute-force enumeration.
inline constexpr std::uint64_t kMaxEnumCeiling = std::uint64_t{1} << 24;

/// Enumeration budget. Defaults to the hard ceiling; callers may only lower it.
struct EnumGuard {
    std::uint64_t limit = kMaxEnumCeiling;

    static EnumGuard clamp(std::uint64_t requested) {
        return EnumGuard{requested < kMaxEnumCeiling ? requested : kMaxEnumCeiling};
    }

    // Throws GuardExceeded when base^exponent > limit.
    void require_power(std::uint64_t base, std::uint64_t exponent, const std::string& what) const {
        std::uint64_t total = 1;
        for (std::uint64_t i = 0; i < exponent; ++i) {
            if (base != 0 && total > limit / base) {
                throw GuardExceeded(what + ": " + std::to_string(base) + "^" + std::to_string(exponent) +
                                    " states exceeds limit " + std::to_string(limit));
            }
            total *= base;
        }
        if (total > limit) {
            throw GuardExceeded(what + ": " + std::to_string(total) + " states exceeds limit " +
                                std::to_string(limit));
        }
    }
};

}  // namespace finsym
