#include "fracsum/summatory.hpp"

#include <numeric>

namespace fracsum {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// d^r, or nullopt if it exceeds cap
std::optional<u64> pow_capped(u64 d, unsigned r, u64 cap) {
    u64 v = 1;
    for (unsigned i = 0; i < r; ++i) {
        if (d != 0 && v > cap / d) return std::nullopt;
        v *= d;
    }
    return v;
}

void check_naive_budget(u64 x, const SieveTable& sieve, const Budgets& b) {
    if (x > b.naive_max_x)
        throw resource_error("naive method: x=" + std::to_string(x) + " exceeds budget " +
                             std::to_string(b.naive_max_x) + "; raise budgets.naive_max_x or use blocked");
    if (x > sieve.limit())
        throw resource_error("naive method: x=" + std::to_string(x) + " exceeds sieve limit " +
                             std::to_string(sieve.limit()));
}

void check_blocked_budget(u64 x, const Budgets& b) {
    if (x > b.blocked_max_x)
        throw resource_error("blocked method: x=" + std::to_string(x) + " exceeds budget " +
                             std::to_string(b.blocked_max_x) + "; raise budgets.blocked_max_x");
}

// Faulhaber prefix sums, exact
Int power_prefix(u64 m, unsigned z) {
    Int n = m;
    switch (z) {
        case 0: return n;
        case 1: return n * (n + 1) / 2;
        case 2: return n * (n + 1) * (2 * n + 1) / 6;
        case 3: { Int t = n * (n + 1) / 2; return t * t; }
        case 4: return n * (n + 1) * (2 * n + 1) * (3 * n * n + 3 * n - 1) / 30;
        default: {
            Int s = 0;
            for (u64 k = 1; k <= m; ++k) s += boost::multiprecision::pow(Int(k), z);
            return s;
        }
    }
}

Rat rat_ipow(u64 base, const Int& e) {
    const long ee = e.convert_to<long>();
    Int p = boost::multiprecision::pow(Int(base), static_cast<unsigned>(ee < 0 ? -ee : ee));
    return ee < 0 ? Rat(1, p) : Rat(p);
}

Real real_pow(u64 base, const Rat& e) {
    Real b = base;
    if (boost::multiprecision::denominator(e) == 1)
        return real_of(rat_ipow(base, boost::multiprecision::numerator(e)));
    if (boost::multiprecision::denominator(e) == 2) {
        Real r = pow(sqrt(b), boost::multiprecision::numerator(e).convert_to<long>());
        return r;
    }
    return pow(b, real_of(e));
}

} // namespace

u64 divisor_summatory(u64 t) {
    if (t == 0) return 0;
    const u64 s = isqrt(t);
    u64 sum = 0;
    for (u64 k = 1; k <= s; ++k) sum += t / k;
    return 2 * sum - s * s;
}

u64 divisor_summatory_naive(u64 t, const SieveTable& sieve) {
    if (t > sieve.limit()) throw resource_error("divisor_summatory_naive: t exceeds sieve limit");
    u64 sum = 0;
    for (u64 n = 1; n <= t; ++n) sum += sieve.tau(n);
    return sum;
}

u64 tau3_summatory(u64 t) {
    if (t == 0) return 0;
    // A3(t) = sum_{a<=t} D(t/a), blocked over constant quotients of a.
    u64 sum = 0;
    for (u64 a1 = 1; a1 <= t;) {
        const u64 q = t / a1;
        const u64 a2 = t / q;
        sum += (a2 - a1 + 1) * divisor_summatory(q);
        a1 = a2 + 1;
    }
    return sum;
}

u64 tau3_summatory_naive(u64 t, const SieveTable& sieve) {
    if (t > sieve.limit()) throw resource_error("tau3_summatory_naive: t exceeds sieve limit");
    u64 sum = 0;
    for (u64 n = 1; n <= t; ++n) sum += sieve.tau3(n);
    return sum;
}

u64 squarefree_count(u64 t, const SieveTable& sieve) {
    const u64 s = isqrt(t);
    if (s > sieve.limit()) throw resource_error("squarefree_count: sqrt(t) exceeds sieve limit");
    i64 sum = 0;
    for (u64 d = 1; d <= s; ++d)
        sum += static_cast<i64>(sieve.mu(d)) * static_cast<i64>(t / (d * d));
    return static_cast<u64>(sum);
}

u64 two_omega_summatory(u64 y, const SieveTable& sieve) {
    if (y == 0) return 0;
    // F(y) = sum_{a<=y} mu^2(a) floor(y/a), blocked via squarefree counts.
    u64 sum = 0;
    for (u64 a1 = 1; a1 <= y;) {
        const u64 q = y / a1;
        const u64 a2 = y / q;
        sum += q * (squarefree_count(a2, sieve) - squarefree_count(a1 - 1, sieve));
        a1 = a2 + 1;
    }
    return sum;
}

u64 two_omega_summatory_naive(u64 y, const SieveTable& sieve) {
    if (y > sieve.limit()) throw resource_error("two_omega_summatory_naive: y exceeds sieve limit");
    u64 sum = 0;
    for (u64 h = 1; h <= y; ++h) sum += u64{1} << sieve.omega(h);
    return sum;
}

Real two_omega_power_sum(u64 y, const Rat& a, const SieveTable& sieve) {
    if (y == 0) return 0;
    if (y > sieve.limit()) throw resource_error("two_omega_power_sum: y exceeds sieve limit");
    const bool int_exp = boost::multiprecision::denominator(a) == 1;
    const bool half_exp = boost::multiprecision::denominator(a) == 2;
    const long anum = int_exp || half_exp
        ? boost::multiprecision::numerator(a).convert_to<long>() : 0;
    Real sum = 0;
    for (u64 h = 1; h <= y; ++h) {
        const Real w = Real(u64{1} << sieve.omega(h));
        Real denom;
        if (int_exp) denom = pow(Real(h), anum);
        else if (half_exp) denom = pow(sqrt(Real(h)), anum);
        else denom = pow(Real(h), real_of(a));
        sum += w / denom;
    }
    return sum;
}

SumResult fracsum(const SumQuery& q, Method m, const SieveTable& sieve, const Budgets& budgets) {
    if (q.r != 2 && q.r != 3) throw domain_error("fracsum: r must be 2 or 3");
    const auto t0 = std::chrono::steady_clock::now();
    SumResult res;
    res.method = m;
    const u64 x = q.x;
    Int acc = 0;
    if (m == Method::naive) {
        if (x > 0) check_naive_budget(x, sieve, budgets);
        for (u64 n = 1; n <= x; ++n) {
            const u64 t = (q.r == 2) ? sieve.tau(n) : sieve.tau3(n);
            acc += Int(t) * q.func(x / n);
            ++res.terms;
        }
    } else {
        check_blocked_budget(x, budgets);
        for (u64 n1 = 1; n1 <= x;) {
            const u64 quot = x / n1;
            const u64 n2 = x / quot;
            const u64 hi = (q.r == 2) ? divisor_summatory(n2) : tau3_summatory(n2);
            const u64 lo = (q.r == 2) ? divisor_summatory(n1 - 1) : tau3_summatory(n1 - 1);
            acc += Int(hi - lo) * q.func(quot);
            ++res.terms;
            n1 = n2 + 1;
        }
    }
    res.value = acc;
    res.approx = real_of(acc);
    res.elapsed_s = seconds_since(t0);
    return res;
}

SumResult fracsum_star(const SumQuery& q, Method m, const SieveTable& sieve, const Budgets& budgets) {
    if (q.r != 2 && q.r != 3) throw domain_error("fracsum_star: r must be 2 or 3");
    const auto t0 = std::chrono::steady_clock::now();
    SumResult res;
    res.method = m;
    const u64 x = q.x;
    Int acc = 0;
    if (m == Method::naive) {
        if (x > 0) check_naive_budget(x, sieve, budgets);
        for (u64 n = 1; n <= x; ++n) {
            acc += Int(tau_r_star(n, q.r, &sieve)) * q.func(x / n);
            ++res.terms;
        }
    } else {
        check_blocked_budget(x, budgets);
        // Lemma-style Mobius combination over d <= x^{1/r}
        const u64 dmax = (q.r == 2) ? isqrt(x) : icbrt(x);
        for (u64 d = 1; d <= dmax; ++d) {
            const int mu = mu_of(d, &sieve);
            if (mu == 0) continue;
            u64 dr = d * d;
            if (q.r == 3) dr *= d;
            SumQuery inner = q;
            inner.x = x / dr;
            SumResult in = fracsum(inner, Method::blocked, sieve, budgets);
            const Int iv = boost::multiprecision::numerator(in.value); // inner values are integral
            if (mu > 0) acc += iv; else acc -= iv;
            res.terms += in.terms;
        }
    }
    res.value = acc;
    res.approx = real_of(acc);
    res.elapsed_s = seconds_since(t0);
    return res;
}

SumResult fracsum_gcd(const SumQuery& q, Method m, const SieveTable& sieve, const Budgets& budgets) {
    if (q.d == 0) throw domain_error("fracsum_gcd: d must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const auto dr = pow_capped(q.d, q.r, q.x);
    if (!dr || q.x == 0) {
        SumResult res;
        res.method = m;
        res.elapsed_s = seconds_since(t0);
        return res;   // empty sum
    }
    if (m == Method::naive) {
        // direct: sum over n = d^r m of tau_r_star(m) f(floor(x/n))
        check_naive_budget(q.x / *dr, sieve, budgets);
        SumResult res;
        res.method = m;
        Int acc = 0;
        for (u64 mm = 1; mm <= q.x / *dr; ++mm) {
            acc += Int(tau_r_star(mm, q.r, &sieve)) * q.func(q.x / (*dr * mm));
            ++res.terms;
        }
        res.value = acc;
        res.approx = real_of(acc);
        res.elapsed_s = seconds_since(t0);
        return res;
    }
    SumQuery star = q;
    star.x = q.x / *dr;
    SumResult res = fracsum_star(star, Method::blocked, sieve, budgets);
    res.elapsed_s = seconds_since(t0);
    return res;
}

SumResult weighted_gcd_sum(const SumQuery& q, const SieveTable& sieve, const Budgets& budgets) {
    const Rat a = q.a.value_or(Rat(0));
    const Rat b = q.b.value_or(Rat(0));
    if (a + b == -1) throw domain_error("weighted_gcd_sum: a+b = -1 is excluded");
    if (q.d == 0) throw domain_error("weighted_gcd_sum: d must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    SumResult res;
    res.method = Method::naive;
    const auto d2 = pow_capped(q.d, 2, q.x);
    if (!d2 || q.x == 0) {
        res.elapsed_s = seconds_since(t0);
        return res;
    }
    const u64 y = q.x / *d2;
    check_naive_budget(y, sieve, budgets);

    const bool int_exps = boost::multiprecision::denominator(a) == 1 &&
                          boost::multiprecision::denominator(b) == 1;
    if (int_exps) {
        const Int an = boost::multiprecision::numerator(a);
        const Int bn = boost::multiprecision::numerator(b);
        Rat acc = 0;
        for (u64 u = 1; u <= y; ++u) {
            const Rat ub = rat_ipow(u, bn);
            for (u64 v = 1; v <= y / u; ++v) {
                if (std::gcd(u, v) != 1) continue;
                acc += ub * rat_ipow(v, an) * Rat(q.func(y / (u * v)));
                ++res.terms;
            }
        }
        acc *= rat_ipow(q.d, an + bn);
        res.value = acc;
        res.approx = real_of(acc);
        res.exact = true;
    } else {
        Real acc = 0;
        for (u64 u = 1; u <= y; ++u) {
            const Real ub = real_pow(u, b);
            for (u64 v = 1; v <= y / u; ++v) {
                if (std::gcd(u, v) != 1) continue;
                acc += ub * real_pow(v, a) * real_of(Int(q.func(y / (u * v))));
                ++res.terms;
            }
        }
        acc *= real_pow(q.d, a + b);
        res.approx = acc;
        res.exact = false;
    }
    res.elapsed_s = seconds_since(t0);
    return res;
}

SumResult weighted_power_sum(const FuncSpec& func, const Rat& z, u64 y, Method m,
                             const SieveTable& sieve, const Budgets& budgets) {
    if (z == -1) throw domain_error("weighted_power_sum: z = -1 is excluded");
    const auto t0 = std::chrono::steady_clock::now();
    SumResult res;
    const bool int_exp = boost::multiprecision::denominator(z) == 1;
    const Int zn = boost::multiprecision::numerator(z);
    const bool blockable = int_exp && zn >= 0 && zn <= 4;
    if (m == Method::blocked && blockable) {
        res.method = Method::blocked;
        check_blocked_budget(y, budgets);
        const unsigned ze = zn.convert_to<unsigned>();
        Int acc = 0;
        for (u64 n1 = 1; n1 <= y;) {
            const u64 quot = y / n1;
            const u64 n2 = y / quot;
            acc += (power_prefix(n2, ze) - power_prefix(n1 - 1, ze)) * func(quot);
            ++res.terms;
            n1 = n2 + 1;
        }
        res.value = acc;
        res.approx = real_of(acc);
    } else if (int_exp) {
        res.method = Method::naive;
        check_naive_budget(y, sieve, budgets);
        Rat acc = 0;
        for (u64 n = 1; n <= y; ++n) {
            acc += rat_ipow(n, zn) * Rat(func(y / n));
            ++res.terms;
        }
        res.value = acc;
        res.approx = real_of(acc);
    } else {
        res.method = Method::naive;
        res.exact = false;
        check_naive_budget(y, sieve, budgets);
        Real acc = 0;
        for (u64 n = 1; n <= y; ++n) {
            acc += real_pow(n, z) * real_of(Int(func(y / n)));
            ++res.terms;
        }
        res.approx = acc;
    }
    res.elapsed_s = seconds_since(t0);
    return res;
}

SumResult b_summatory(const FuncSpec& func, u64 y, Method m, const SieveTable& sieve,
                      const Budgets& budgets) {
    const auto t0 = std::chrono::steady_clock::now();
    SumResult res;
    res.method = m;
    Int acc = 0;
    if (m == Method::naive) {
        check_naive_budget(y, sieve, budgets);
        for (u64 n = 1; n <= y; ++n) {
            acc += func(y / n);
            ++res.terms;
        }
    } else {
        check_blocked_budget(y, budgets);
        for (u64 n1 = 1; n1 <= y;) {
            const u64 quot = y / n1;
            const u64 n2 = y / quot;
            acc += Int(n2 - n1 + 1) * func(quot);
            ++res.terms;
            n1 = n2 + 1;
        }
    }
    res.value = acc;
    res.approx = real_of(acc);
    res.elapsed_s = seconds_since(t0);
    return res;
}

SumResult sigma_fracsum(unsigned k, u64 d, u64 x, Method m, const SieveTable& sieve,
                        const Budgets& budgets) {
    if (k == 0) throw domain_error("sigma_fracsum: k must be >= 1");
    if (d == 0) throw domain_error("sigma_fracsum: d must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    SumResult res;
    res.method = m;
    const auto d2 = pow_capped(d, 2, x);
    if (!d2 || x == 0) {
        res.elapsed_s = seconds_since(t0);
        return res;
    }
    const u64 y = x / *d2;
    Int acc = 0;
    if (m == Method::naive) {
        // defining form: sum over n = d^2 m of tau_2^{(d)}(n) sigma_k(floor(x/n))
        check_naive_budget(y, sieve, budgets);
        for (u64 mm = 1; mm <= y; ++mm) {
            acc += Int(tau_r_star(mm, 2, &sieve)) * sigma_k(y / mm, k, &sieve);
            ++res.terms;
        }
    } else {
        // 2^omega form with F-prefix differences over constant-quotient blocks
        check_blocked_budget(y, budgets);
        for (u64 h1 = 1; h1 <= y;) {
            const u64 quot = y / h1;
            const u64 h2 = y / quot;
            const u64 f_hi = two_omega_summatory(h2, sieve);
            const u64 f_lo = two_omega_summatory(h1 - 1, sieve);
            acc += Int(f_hi - f_lo) * sigma_k(quot, k, &sieve);
            ++res.terms;
            h1 = h2 + 1;
        }
    }
    res.value = acc;
    res.approx = real_of(acc);
    res.elapsed_s = seconds_since(t0);
    return res;
}

} // namespace fracsum
