#include "fracsum/sieve.hpp"

namespace fracsum {

SieveTable::SieveTable(u64 limit, u64 memory_budget_bytes) : limit_(limit) {
    if (limit == 0) throw domain_error("sieve limit must be >= 1");
    if ((limit + 1) * kBytesPerElement > memory_budget_bytes)
        throw resource_error("sieve of size " + std::to_string(limit) +
                             " exceeds memory budget of " + std::to_string(memory_budget_bytes) + " bytes");
    if (limit + 1 > UINT32_MAX) throw resource_error("sieve limit exceeds 32-bit index range");

    const std::size_t n = static_cast<std::size_t>(limit) + 1;
    spf_.assign(n, 0);
    mu_.assign(n, 0);
    omega_.assign(n, 0);
    tau_.assign(n, 0);
    tau3_.assign(n, 0);

    mu_[1] = 1;
    tau_[1] = 1;
    tau3_[1] = 1;

    // Linear sieve; cop[i] = i / p^e where p = spf(i), used to evaluate the
    // multiplicative functions from the prime-signature recurrences.
    std::vector<std::uint32_t> cop(n, 1);   // coprime part i / spf^e
    std::vector<std::uint8_t> exp(n, 0);    // exponent of spf in i

    for (u64 i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(static_cast<std::uint32_t>(i));
            exp[i] = 1;
            cop[i] = 1;
        }
        for (std::uint32_t p : primes_) {
            if (p > spf_[i] || p > limit / i) break;
            const u64 ip = i * p;
            spf_[ip] = p;
            if (p == spf_[i]) {
                exp[ip] = static_cast<std::uint8_t>(exp[i] + 1);
                cop[ip] = cop[i];
            } else {
                exp[ip] = 1;
                cop[ip] = static_cast<std::uint32_t>(i);
            }
        }
        const u64 m = cop[i];
        const unsigned e = exp[i];
        mu_[i] = (e > 1) ? 0 : static_cast<std::int8_t>(-mu_[m]);
        omega_[i] = static_cast<std::uint8_t>(omega_[m] + 1);
        tau_[i] = tau_[m] * (e + 1);
        tau3_[i] = tau3_[m] * ((e + 1) * (e + 2) / 2);
    }
}

SieveTable build_sieve(u64 limit, u64 memory_budget_bytes) {
    return SieveTable(limit, memory_budget_bytes);
}

} // namespace fracsum
