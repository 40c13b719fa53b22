#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fracsum/numeric.hpp"
#include "fracsum/sieve.hpp"

namespace fracsum {

// Prime signature (p, e) pairs, p increasing.
using Factorization = std::vector<std::pair<u64, unsigned>>;

// Uses spf lookups below the sieve limit, deterministic trial division above.
Factorization factorize(u64 n, const SieveTable* sieve = nullptr);

// Number of ordered r-tuples with product n: prod C(e_i + r - 1, r - 1).
u64 tau_r(u64 n, unsigned r, const SieveTable* sieve = nullptr);

// Coprime representations: sum over squarefree d with d^r | n of mu(d) tau_r(n/d^r).
u64 tau_r_star(u64 n, unsigned r, const SieveTable* sieve = nullptr);

// Representations with gcd exactly d: 0 unless d^r | n, else tau_r_star(n/d^r).
u64 tau_r_gcd(u64 n, unsigned r, u64 d, const SieveTable* sieve = nullptr);

// Independent enumeration oracle: counts ordered r-tuples with product n and
// gcd exactly d by walking the divisor lattice. r in {2,3}, n <= budget.
u64 brute_tau_r_gcd(u64 n, unsigned r, u64 d, u64 budget = 1000000);

u64 omega_of(u64 n, const SieveTable* sieve = nullptr);
int mu_of(u64 n, const SieveTable* sieve = nullptr);

// sigma_k(n) = sum of k-th powers of divisors; exact, arbitrary size.
Int sigma_k(u64 n, unsigned k, const SieveTable* sieve = nullptr);

// A named arithmetic function with declared growth exponent.
// alpha >= 1 presets are usable only in bound checks (Theorem 3 style).
struct FuncSpec {
    std::string name;
    double alpha = 0.0;
    bool bound_only = false;
    std::function<Int(u64)> eval;

    Int operator()(u64 n) const { return eval(n); }
};

// Presets: one, id, tau, mu2, sigma_k. The sieve pointer, when given, must
// outlive the FuncSpec; evaluation falls back to trial division past its limit.
FuncSpec func_one();
FuncSpec func_id();
FuncSpec func_tau(const SieveTable* sieve = nullptr);
FuncSpec func_mu2(const SieveTable* sieve = nullptr);
FuncSpec func_sigma(unsigned k, const SieveTable* sieve = nullptr);
FuncSpec func_by_name(const std::string& name, const SieveTable* sieve = nullptr);

} // namespace fracsum
