#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fracsum/numeric.hpp"

namespace fracsum {

// Immutable after construction; safe for concurrent reads.
// Index n is valid for 1 <= n <= limit. Index 0 is a filler.
class SieveTable {
public:
    explicit SieveTable(u64 limit, u64 memory_budget_bytes = kDefaultMemoryBudget);

    u64 limit() const { return limit_; }

    std::uint32_t spf(u64 n) const { return spf_[n]; }
    int mu(u64 n) const { return mu_[n]; }
    unsigned omega(u64 n) const { return omega_[n]; }
    std::uint32_t tau(u64 n) const { return tau_[n]; }
    std::uint32_t tau3(u64 n) const { return tau3_[n]; }
    bool is_prime(u64 n) const { return n >= 2 && spf_[n] == n; }

    const std::vector<std::uint32_t>& primes() const { return primes_; }

    // Per-element byte cost, used for the budget precheck.
    static constexpr u64 kBytesPerElement = 4 + 1 + 1 + 4 + 4 + 4 + 4;
    static constexpr u64 kDefaultMemoryBudget = 2ull << 30;

private:
    u64 limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::int8_t> mu_;
    std::vector<std::uint8_t> omega_;
    std::vector<std::uint32_t> tau_;
    std::vector<std::uint32_t> tau3_;
    std::vector<std::uint32_t> primes_;
};

SieveTable build_sieve(u64 limit, u64 memory_budget_bytes = SieveTable::kDefaultMemoryBudget);

} // namespace fracsum
