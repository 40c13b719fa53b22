#include "fracsum/arith.hpp"

#include <numeric>

namespace fracsum {

Factorization factorize(u64 n, const SieveTable* sieve) {
    if (n == 0) throw domain_error("factorize: n must be >= 1");
    Factorization f;
    if (sieve && n <= sieve->limit()) {
        while (n > 1) {
            u64 p = sieve->spf(n);
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.emplace_back(p, e);
        }
        return f;
    }
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

namespace {

// C(e+r-1, r-1), overflow-checked
u64 reps_binom(unsigned e, unsigned r) {
    u64 num = 1;
    for (unsigned i = 1; i < r; ++i) {
        num = checked_mul(num, e + i);
        num /= i;   // exact: product of i consecutive integers divisible by i!
    }
    return num;
}

} // namespace

u64 tau_r(u64 n, unsigned r, const SieveTable* sieve) {
    if (r < 2) throw domain_error("tau_r: r must be >= 2");
    if (r > 8) throw domain_error("tau_r: r > 8 not supported");
    u64 v = 1;
    for (const auto& [p, e] : factorize(n, sieve))
        v = checked_mul(v, reps_binom(e, r));
    return v;
}

u64 tau_r_star(u64 n, unsigned r, const SieveTable* sieve) {
    if (r < 2) throw domain_error("tau_r_star: r must be >= 2");
    const Factorization f = factorize(n, sieve);
    // d runs over squarefree products of primes with exponent >= r.
    std::vector<std::size_t> heavy;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i].second >= r) heavy.push_back(i);

    i64 total = 0;
    const std::size_t subsets = std::size_t{1} << heavy.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        Factorization g = f;
        int sign = 1;
        for (std::size_t b = 0; b < heavy.size(); ++b)
            if (mask >> b & 1) { g[heavy[b]].second -= r; sign = -sign; }
        u64 t = 1;
        for (const auto& [p, e] : g)
            if (e > 0) t = checked_mul(t, reps_binom(e, r));
        total += sign * static_cast<i64>(t);
    }
    return static_cast<u64>(total);
}

u64 tau_r_gcd(u64 n, unsigned r, u64 d, const SieveTable* sieve) {
    if (r < 2) throw domain_error("tau_r_gcd: r must be >= 2");
    if (d == 0) throw domain_error("tau_r_gcd: d must be >= 1");
    u64 dr = 1;
    for (unsigned i = 0; i < r; ++i) {
        if (d != 0 && dr > n / d) return 0;   // d^r > n
        dr *= d;
    }
    if (n % dr != 0) return 0;
    return tau_r_star(n / dr, r, sieve);
}

u64 brute_tau_r_gcd(u64 n, unsigned r, u64 d, u64 budget) {
    if (n == 0 || d == 0) throw domain_error("brute_tau_r_gcd: n, d must be >= 1");
    if (r != 2 && r != 3) throw domain_error("brute_tau_r_gcd: r must be 2 or 3");
    if (n > budget) throw resource_error("brute_tau_r_gcd: n exceeds enumeration budget");
    u64 count = 0;
    if (r == 2) {
        for (u64 a = 1; a <= n; ++a) {
            if (n % a) continue;
            if (std::gcd(a, n / a) == d) ++count;
        }
    } else {
        for (u64 a = 1; a <= n; ++a) {
            if (n % a) continue;
            const u64 m = n / a;
            for (u64 b = 1; b <= m; ++b) {
                if (m % b) continue;
                if (std::gcd(a, std::gcd(b, m / b)) == d) ++count;
            }
        }
    }
    return count;
}

u64 omega_of(u64 n, const SieveTable* sieve) {
    if (sieve && n <= sieve->limit()) return sieve->omega(n);
    return factorize(n, sieve).size();
}

int mu_of(u64 n, const SieveTable* sieve) {
    if (sieve && n <= sieve->limit()) return sieve->mu(n);
    int s = 1;
    for (const auto& [p, e] : factorize(n, sieve)) {
        if (e > 1) return 0;
        s = -s;
    }
    return s;
}

Int sigma_k(u64 n, unsigned k, const SieveTable* sieve) {
    if (k == 0) throw domain_error("sigma_k: k must be >= 1");
    Int v = 1;
    for (const auto& [p, e] : factorize(n, sieve)) {
        // (p^{k(e+1)} - 1) / (p^k - 1)
        Int pk = boost::multiprecision::pow(Int(p), k);
        Int num = boost::multiprecision::pow(pk, e + 1) - 1;
        v *= num / (pk - 1);
    }
    return v;
}

FuncSpec func_one() {
    return {"one", 0.0, false, [](u64) { return Int(1); }};
}

FuncSpec func_id() {
    return {"id", 1.0, true, [](u64 n) { return Int(n); }};
}

FuncSpec func_tau(const SieveTable* sieve) {
    return {"tau", 0.25, false, [sieve](u64 n) { return Int(tau_r(n, 2, sieve)); }};
}

FuncSpec func_mu2(const SieveTable* sieve) {
    return {"mu2", 0.0, false, [sieve](u64 n) { return Int(mu_of(n, sieve) != 0 ? 1 : 0); }};
}

FuncSpec func_sigma(unsigned k, const SieveTable* sieve) {
    return {"sigma" + std::to_string(k), static_cast<double>(k), true,
            [k, sieve](u64 n) { return sigma_k(n, k, sieve); }};
}

FuncSpec func_by_name(const std::string& name, const SieveTable* sieve) {
    if (name == "one") return func_one();
    if (name == "id") return func_id();
    if (name == "tau") return func_tau(sieve);
    if (name == "mu2") return func_mu2(sieve);
    if (name.rfind("sigma", 0) == 0 && name.size() > 5)
        return func_sigma(static_cast<unsigned>(std::stoul(name.substr(5))), sieve);
    throw domain_error("unknown function preset: " + name);
}

} // namespace fracsum
