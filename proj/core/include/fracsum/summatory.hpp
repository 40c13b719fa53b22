#pragma once

#include <chrono>
#include <optional>

#include "fracsum/arith.hpp"
#include "fracsum/numeric.hpp"
#include "fracsum/sieve.hpp"

namespace fracsum {

enum class Method { naive, blocked };

inline const char* method_name(Method m) { return m == Method::naive ? "naive" : "blocked"; }

// Parameters of one fractional-sum query. Weights are present only for the
// weighted families; d^r > x yields an empty sum (value 0) by convention.
struct SumQuery {
    FuncSpec func;
    unsigned r = 2;
    u64 d = 1;
    u64 x = 1;
    std::optional<Rat> a, b, z;
};

struct SumResult {
    Rat value;            // exact value when exact == true
    Real approx = 0;      // always filled; equals value when exact
    bool exact = true;
    Method method = Method::blocked;
    double elapsed_s = 0;
    u64 terms = 0;        // summands (naive) or blocks (blocked)
};

// Compute budgets; exceeding them raises resource_error.
struct Budgets {
    u64 naive_max_x = 20'000'000;
    u64 blocked_max_x = 200'000'000;
    u64 enumeration_max_n = 1'000'000;
};

// D(t) = sum_{n<=t} tau(n), via the hyperbola identity, O(sqrt t).
u64 divisor_summatory(u64 t);
u64 divisor_summatory_naive(u64 t, const SieveTable& sieve);

// A3(t) = sum_{n<=t} tau3(n); fast path blocks the outer divisor and reuses
// D(t/a), ~t^{3/4} operations.
u64 tau3_summatory(u64 t);
u64 tau3_summatory_naive(u64 t, const SieveTable& sieve);

// F(y) = sum_{h<=y} 2^omega(h), via 2^omega = sum_{ab=h} mu^2(a) and
// squarefree prefix counts. The sieve must cover sqrt(y).
u64 two_omega_summatory(u64 y, const SieveTable& sieve);
u64 two_omega_summatory_naive(u64 y, const SieveTable& sieve);

// Q(t) = number of squarefree integers <= t; sieve must cover sqrt(t).
u64 squarefree_count(u64 t, const SieveTable& sieve);

// sum_{h<=y} 2^omega(h) / h^a in high precision; sieve must cover y.
Real two_omega_power_sum(u64 y, const Rat& a, const SieveTable& sieve);

// S_{f,r}(x) = sum_{n<=x} tau_r(n) f(floor(x/n)), r in {2,3}.
SumResult fracsum(const SumQuery& q, Method m, const SieveTable& sieve,
                  const Budgets& budgets = {});

// S*_{f,r}(x): blocked = Mobius combination of S_{f,r}(floor(x/d^r)) over
// d <= x^{1/r}; naive = direct sum of tau_r_star(n) f(floor(x/n)).
SumResult fracsum_star(const SumQuery& q, Method m, const SieveTable& sieve,
                       const Budgets& budgets = {});

// S^{(d)}_{f,r}(x): 0 when d^r > x, else S*_{f,r}(floor(x/d^r));
// naive = direct sum of tau_r_gcd(n,r,d) f(floor(x/n)).
SumResult fracsum_gcd(const SumQuery& q, Method m, const SieveTable& sieve,
                      const Budgets& budgets = {});

// F_f^{a,b,(d)}(x) over coprime pairs; exact for integer a,b, high precision
// otherwise. Requires a+b != -1.
SumResult weighted_gcd_sum(const SumQuery& q, const SieveTable& sieve,
                           const Budgets& budgets = {});

// W_{f,z}(y) = sum_{n<=y} n^z f(floor(y/n)); z != -1.
SumResult weighted_power_sum(const FuncSpec& func, const Rat& z, u64 y, Method m,
                             const SieveTable& sieve, const Budgets& budgets = {});

// B(y) = sum_{n<=y} f(floor(y/n)).
SumResult b_summatory(const FuncSpec& func, u64 y, Method m, const SieveTable& sieve,
                      const Budgets& budgets = {});

// S_{sigma_k,2}^{(d)}(x); blocked = 2^omega form with F-prefix differences,
// naive = defining form over n = d^2 m with point tau_2^* values.
SumResult sigma_fracsum(unsigned k, u64 d, u64 x, Method m, const SieveTable& sieve,
                        const Budgets& budgets = {});

} // namespace fracsum
