#include "fracsum/constants.hpp"

#include <algorithm>
#include <map>

#include "fracsum/summatory.hpp"

namespace fracsum {

namespace {

Real real_eps() { return std::numeric_limits<Real>::epsilon(); }

// ---- log-polynomial calculus ------------------------------------------------
// p(x) = (sum_i c[i] (ln x)^i) * x^{-s}

struct LogPoly {
    Real s;
    std::vector<Real> c;

    LogPoly deriv() const {
        LogPoly d;
        d.s = s + 1;
        d.c.assign(c.size(), Real(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            d.c[i] -= s * c[i];
            if (i + 1 < c.size()) d.c[i] += Real(i + 1) * c[i + 1];
        }
        return d;
    }

    Real eval(const Real& logN, const Real& N_pow_minus_s) const {
        Real acc = 0, L = 1;
        for (const Real& ci : c) { acc += ci * L; L *= logN; }
        return acc * N_pow_minus_s;
    }

    Real abs_coeff_sum() const {
        Real a = 0;
        for (const Real& ci : c) a += abs(ci);
        return a;
    }
};

// int_N^inf (ln x)^j x^{-s} dx, s > 1
Real integ_tail(unsigned j, const Real& s, const Real& N) {
    const Real logN = log(N);
    const Real nps = pow(N, Real(1) - s);
    Real acc = 0, term = nps / (s - 1);
    // I(j) = N^{1-s} L^j/(s-1) + j/(s-1) I(j-1)
    Real coeff = 1;
    for (unsigned i = 0; i <= j; ++i) {
        acc += coeff * term * pow(logN, int(j - i));
        coeff *= Real(j - i);           // j (j-1) ... falling factorial
        term /= (s - 1);
    }
    return acc;
}

constexpr double kB2m_over_fact[] = {0.0,
    1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600, 1.0 / 47900160};

// Correction sum_{m=1..M} B_{2m}/(2m)! f^{(2m-1)}(N) plus a remainder bound.
// f is a log-polynomial. Returns {correction, remainder_bound}.
std::pair<Real, Real> em_correction(const LogPoly& f, const Real& N, unsigned M = 3) {
    const Real logN = log(N);
    Real corr = 0;
    LogPoly d = f;
    for (unsigned m = 1; m <= M; ++m) {
        d = d.deriv();                          // f^{(2m-1)}
        corr += Real(kB2m_over_fact[m]) * d.eval(logN, pow(N, -d.s));
        d = d.deriv();
    }
    // |R| <= 2 zeta(2M)/(2pi)^{2M} * int_N^inf |f^{(2M)}|
    d = f;
    for (unsigned i = 0; i < 2 * M; ++i) d = d.deriv();
    Real integ_abs = 0, L = 1;
    for (std::size_t i = 0; i < d.c.size(); ++i)
        integ_abs += abs(d.c[i]) * integ_tail(static_cast<unsigned>(i), d.s, N);
    const Real two_pi = 2 * pi_value();
    const Real rem = 2 * Real(1.018) * integ_abs / pow(two_pi, int(2 * M));
    return {corr, rem};
}

// sum_{k>N} (ln k)^j k^{-s} with certified bound, via Euler-Maclaurin
std::pair<Real, Real> em_tail(unsigned j, const Real& s, u64 N) {
    LogPoly f{s, std::vector<Real>(j + 1, Real(0))};
    f.c[j] = 1;
    const Real rn = Real(N);
    const Real gN = f.eval(log(rn), pow(rn, -s));
    auto [corr, rem] = em_correction(f, rn);
    const Real value = integ_tail(j, s, rn) - gN / 2 - corr;
    return {value, rem + abs(value) * 8 * real_eps()};
}

} // namespace

Real pi_value() {
    static const Real pi = 2 * acos(Real(0));
    return pi;
}

namespace {

Real zeta2_value() {
    static const Real z = pi_value() * pi_value() / 6;
    return z;
}

// Limit constants of sum_{k<=N} (ln k)^j / k - (ln N)^{j+1}/(j+1):
// j=0 gives Euler's gamma, j=1 the first Stieltjes constant.
ConstantValue em_limit_const(unsigned j, const Real& target, const std::string& id) {
    if (target < Real("1e-30"))
        throw precision_error(id + ": target below working precision floor of 1e-30");
    u64 N = 64;
    for (;;) {
        LogPoly f{Real(1), std::vector<Real>(j + 1, Real(0))};
        f.c[j] = 1;
        Real partial = 0;
        for (u64 k = 1; k <= N; ++k) {
            const Real lk = log(Real(k));
            partial += pow(lk, int(j)) / Real(k);
        }
        const Real rn = Real(N);
        auto [corr, rem] = em_correction(f, rn);
        const Real value = partial - pow(log(rn), int(j + 1)) / Real(j + 1)
                         - f.eval(log(rn), 1 / rn) / 2 - corr;
        if (rem <= target || N >= (u64{1} << 24))
            return {id, value, rem, N};
        N *= 2;
    }
}

// ---- truncated asymptotic series in (ln k)^j k^{-m} -------------------------

constexpr int kOrder = 10;   // highest k^{-m} retained
constexpr unsigned kMaxLog = 2;

struct AsymSeries {
    // key = (log power j, k power m), value = coefficient
    std::map<std::pair<int, int>, Real> t;
    Real rem = 0;   // |dropped| <= rem * (ln k)^kMaxLog * k^{-(kOrder+1)}

    Real abs_sum() const {
        Real a = 0;
        for (const auto& [k, v] : t) a += abs(v);
        return a;
    }
    AsymSeries shifted(int dj, int dm) const {
        AsymSeries r;
        r.rem = rem;
        for (const auto& [k, v] : t) {
            const int m = k.second + dm;
            if (m <= kOrder) r.t[{k.first + dj, m}] = v;
            else r.rem += abs(v);
        }
        return r;
    }
    AsymSeries operator*(const AsymSeries& o) const {
        AsymSeries r;
        for (const auto& [ka, va] : t)
            for (const auto& [kb, vb] : o.t) {
                const int j = ka.first + kb.first, m = ka.second + kb.second;
                if (m <= kOrder) r.t[{j, m}] += va * vb;
                else r.rem += abs(va * vb);
            }
        r.rem += rem * (o.abs_sum() + o.rem) + o.rem * abs_sum();
        return r;
    }
    AsymSeries& operator-=(const AsymSeries& o) {
        for (const auto& [k, v] : o.t) t[k] -= v;
        rem += o.rem;
        return *this;
    }
    AsymSeries& operator+=(const AsymSeries& o) {
        for (const auto& [k, v] : o.t) t[k] += v;
        rem += o.rem;
        return *this;
    }
};

// 1/(1 + 1/k) = sum (-1)^m k^{-m}
AsymSeries geo_series() {
    AsymSeries s;
    for (int m = 0; m <= kOrder; ++m) s.t[{0, m}] = (m % 2 == 0) ? 1 : -1;
    s.rem = 1;
    return s;
}

// ln(1 + 1/k) = sum_{i>=1} (-1)^{i+1} k^{-i} / i
AsymSeries log1p_series() {
    AsymSeries s;
    for (int i = 1; i <= kOrder; ++i) s.t[{0, i}] = Real((i % 2) ? 1 : -1) / i;
    s.rem = Real(1) / (kOrder + 1);
    return s;
}

// weight series for the three telescoping-style weights:
// which=1: 1/(k(k+1)); which=3: ln k/k - ln(k+1)/(k+1);
// which=4: ln^2 k/k - ln^2(k+1)/(k+1)
AsymSeries weight_series(int which) {
    const AsymSeries geo = geo_series();
    const AsymSeries u = log1p_series();
    if (which == 1) return geo.shifted(0, 2);
    if (which == 3) {
        AsymSeries w;
        w.t[{1, 1}] = 1;                    // ln k / k
        w -= geo.shifted(1, 1);             // ln k * geo / k
        w -= (u * geo).shifted(0, 1);       // ln(1+1/k) * geo / k
        return w;
    }
    // which == 4
    AsymSeries w;
    w.t[{2, 1}] = 1;
    w -= geo.shifted(2, 1);
    AsymSeries cross = u * geo;
    cross.t.begin();  // no-op
    AsymSeries two_lu = cross.shifted(1, 1);
    for (auto& [k, v] : two_lu.t) v *= 2;
    two_lu.rem *= 2;
    w -= two_lu;                            // 2 ln k * ln(1+1/k) * geo / k
    w -= ((u * u) * geo).shifted(0, 1);     // ln^2(1+1/k) * geo / k
    return w;
}

Real weight_eval(int which, u64 k, const Real& logk, const Real& logk1) {
    const Real rk = Real(k);
    switch (which) {
        case 1: return 1 / (rk * (rk + 1));
        case 3: return logk / rk - logk1 / (rk + 1);
        default: return logk * logk / rk - logk1 * logk1 / (rk + 1);
    }
}

} // namespace

ConstantsEngine::ConstantsEngine(const SieveTable& sieve) : sieve_(sieve) {
    // Empirical envelopes over the sieve range (capped at 1e6), 1.5x margin.
    const u64 span = std::min<u64>(sieve.limit(), 1000000);
    const Real c = 2 * em_limit_const(0, Real("1e-28"), "gamma").value - 1;
    Real ktau = 0, kq = 0, km = 0;
    i64 D = 0, Q = 0, M = 0;
    for (u64 k = 1; k <= span; ++k) {
        D += sieve.tau(k);
        Q += sieve.mu(k) != 0;
        M += sieve.mu(k);
        const Real rk = Real(k);
        const Real dtau = abs(Real(D) - (rk * log(rk) + c * rk));
        ktau = std::max(ktau, dtau / pow(rk, Real("0.4")));
        kq = std::max(kq, abs(Real(Q) - rk * 6 / (pi_value() * pi_value())) / sqrt(rk));
        km = std::max(km, abs(Real(M)) / sqrt(rk));
    }
    k_tau_ = ktau * Real("1.5");
    k_sqfree_ = kq * Real("1.5");
    k_mertens_ = km * Real("1.5");
    gamma_ = em_limit_const(0, Real("1e-28"), "gamma").value;
    gamma1_ = em_limit_const(1, Real("1e-28"), "gamma1").value;
}

ConstantValue ConstantsEngine::euler_gamma(const Real& target) const {
    return em_limit_const(0, target, "gamma");
}

ConstantValue ConstantsEngine::stieltjes_gamma1(const Real& target) const {
    return em_limit_const(1, target, "gamma1");
}

ZetaValues ConstantsEngine::zeta_values() const {
    ZetaValues z;
    z.zeta2 = {"zeta(2)", zeta2_value(), 4 * real_eps(), 0};

    u64 N = 4096;
    Real part3 = 0;
    for (u64 k = 1; k <= N; ++k) part3 += 1 / (Real(k) * Real(k) * Real(k));
    auto [t3, b3] = em_tail(0, Real(3), N);
    z.zeta3 = {"zeta(3)", part3 + t3, b3, N};

    Real partp = 0, prev_log = 0;
    for (u64 k = 2; k <= N; ++k) {
        const Real lk = log(Real(k));
        partp += lk / (Real(k) * Real(k));
        prev_log = lk;
    }
    (void)prev_log;
    auto [tp, bp] = em_tail(1, Real(2), N);
    z.zeta_prime2 = {"zeta'(2)", -(partp + tp), bp, N};
    return z;
}

ConstantValue ConstantsEngine::mu_log_moment(unsigned j, unsigned s) const {
    const u64 N = std::min<u64>(sieve_.limit(), 2000000);
    Real partial = 0;
    i64 mert = 0;
    for (u64 k = 1; k <= N; ++k) {
        const int mu = sieve_.mu(k);
        mert += mu;
        if (mu == 0) continue;
        const Real lk = (j == 0) ? Real(1) : pow(log(Real(k)), int(j));
        partial += Real(mu) * lk / pow(Real(k), int(s));
    }
    // Stieltjes boundary with the exact Mertens value at N; the remaining
    // integral is bounded by the empirical |M(t)| <= K sqrt(t) envelope.
    const Real rn = Real(N);
    const Real gN = pow(log(rn), int(j)) / pow(rn, int(s));
    const Real value = partial - Real(mert) * gN;
    const Real half = Real("0.5");
    Real bound = k_mertens_ * (Real(s) * integ_tail(j, Real(s) + 1 - half, rn));
    if (j > 0) bound += k_mertens_ * Real(j) * integ_tail(j - 1, Real(s) + 1 - half, rn);
    const std::string id = "sum mu(k) log^" + std::to_string(j) + "(k) / k^" + std::to_string(s);
    return {id, value, bound, N};
}

std::pair<Real, Real> ConstantsEngine::tail_moment(const FuncSpec& f, unsigned j, Real s, u64 N) const {
    const Real rn = Real(N);
    const Real gN = pow(log(rn), int(j)) * pow(rn, -s);
    const Real half = Real("0.5");
    if (f.name == "one") {
        return em_tail(j, s, N);
    }
    if (f.name == "tau") {
        // sum_{k>N} tau(k) g(k) = int_N^inf (ln t + 1 + c) g(t) dt
        //                         - Delta(N) g(N) - int_N^inf Delta g'
        const Real c = 2 * gamma_ - 1;
        const Real value_int = integ_tail(j + 1, s, rn) + (1 + c) * integ_tail(j, s, rn);
        const Real deltaN = Real(divisor_summatory(N)) - (rn * log(rn) + c * rn);
        const Real theta = Real("0.4");
        Real bound = k_tau_ * s * integ_tail(j, s + 1 - theta, rn);
        if (j > 0) bound += k_tau_ * Real(j) * integ_tail(j - 1, s + 1 - theta, rn);
        return {value_int - deltaN * gN, bound};
    }
    if (f.name == "mu2") {
        const Real dens = 6 / (pi_value() * pi_value());
        const Real value_int = dens * integ_tail(j, s, rn);
        const Real deltaN = Real(squarefree_count(N, sieve_)) - dens * rn;
        Real bound = k_sqfree_ * s * integ_tail(j, s + 1 - half, rn);
        if (j > 0) bound += k_sqfree_ * Real(j) * integ_tail(j - 1, s + 1 - half, rn);
        return {value_int - deltaN * gN, bound};
    }
    // generic envelope: |f(k)| <= K k^alpha measured over k <= 1e4
    Real K = 0;
    const u64 span = std::min<u64>(sieve_.limit(), 10000);
    for (u64 k = 1; k <= span; ++k)
        K = std::max(K, abs(f(k).convert_to<Real>()) / pow(Real(k), Real(f.alpha)));
    const Real se = s - Real(f.alpha);
    if (se <= 1) throw domain_error("tail_moment: series for " + f.name + " may diverge (alpha too large)");
    const Real bound = K * (integ_tail(j, se, rn) + pow(log(rn), int(j)) * pow(rn, -se));
    return {0, bound};
}

std::pair<Real, Real> ConstantsEngine::series_with_weight(const FuncSpec& f, int which,
                                                         const Real& target, u64& terms) const {
    const AsymSeries w = weight_series(which);
    u64 N = 4096;
    const u64 cap = std::min<u64>(std::max<u64>(sieve_.limit(), 4096), 4000000);
    for (;;) {
        Real partial = 0;
        Real prev_log = 0;
        for (u64 k = 1; k <= N; ++k) {
            const Real logk = prev_log;
            const Real logk1 = log(Real(k + 1));
            prev_log = logk1;
            partial += f(k).convert_to<Real>() * weight_eval(which, k, logk, logk1);
        }
        Real tail = 0, bound = 0;
        for (const auto& [key, coeff] : w.t) {
            if (key.second < 2) continue;  // k^{-1} terms cancel identically in these weights
            auto [tv, tb] = tail_moment(f, static_cast<unsigned>(key.first), Real(key.second), N);
            tail += coeff * tv;
            bound += abs(coeff) * tb;
        }
        // residual of the truncated expansion
        Real K = 1;
        const u64 span = std::min<u64>(sieve_.limit(), 10000);
        for (u64 k = 1; k <= span; ++k)
            K = std::max(K, abs(f(k).convert_to<Real>()) / pow(Real(k), Real(f.alpha)));
        const Real rn = Real(N);
        bound += w.rem * K * (integ_tail(kMaxLog, Real(kOrder + 1) - Real(f.alpha), rn)
                              + pow(log(rn), int(kMaxLog)) * pow(rn, Real(f.alpha) - (kOrder + 1)));
        terms = N;
        if (bound <= target || N >= cap) return {partial + tail, bound};
        N = std::min(cap, N * 4);
    }
}

SeriesConstantsR2 ConstantsEngine::series_constants_r2(const FuncSpec& f, const Real& target) const {
    if (f.alpha >= 1.0)
        throw domain_error("series_constants_r2: requires alpha < 1, got " + f.name);
    SeriesConstantsR2 out;
    const u64 span = std::min<u64>(sieve_.limit(), 10000);
    Real K = 0;
    for (u64 k = 1; k <= span; ++k)
        K = std::max(K, abs(f(k).convert_to<Real>()) / pow(Real(k), Real(f.alpha)));
    out.growth_K = K;

    if (f.name == "one") {
        // telescoping identities
        out.C1 = {"C1(" + f.name + ")", 1, 4 * real_eps(), 1};
        out.C3 = {"C3(" + f.name + ")", 0, 4 * real_eps(), 1};
        out.C2 = {"C2(" + f.name + ")", 2 * gamma_ - 1, Real("1e-27"), 1};
        return out;
    }
    u64 t1 = 0, t3 = 0;
    auto [v1, b1] = series_with_weight(f, 1, target, t1);
    auto [v3, b3] = series_with_weight(f, 3, target, t3);
    out.C1 = {"C1(" + f.name + ")", v1, b1, t1};
    out.C3 = {"C3(" + f.name + ")", v3, b3, t3};
    out.C2 = {"C2(" + f.name + ")", (2 * gamma_ - 1) * v1 - v3,
              (2 * gamma_ + 1) * b1 + b3 + Real("1e-26"), std::max(t1, t3)};
    return out;
}

ConstantValue ConstantsEngine::c4_series(const FuncSpec& f, const Real& target) const {
    if (f.name == "one") return {"C4(one)", 0, 4 * real_eps(), 1};
    u64 t4 = 0;
    auto [v4, b4] = series_with_weight(f, 4, target, t4);
    return {"C4(" + f.name + ")", v4, b4, t4};
}

CfTheorem1 ConstantsEngine::c_f_theorem1(const FuncSpec& f, const Real& target) const {
    if (f.alpha >= 1.0) throw domain_error("c_f_theorem1: requires alpha < 1");
    CfTheorem1 out;
    const SeriesConstantsR2 c = series_constants_r2(f, target);
    const ConstantValue mu2cv = mu_log_moment(0, 2);
    const ConstantValue mulog = mu_log_moment(1, 2);
    const ZetaValues z = zeta_values();

    const Real series = c.C2.value * mu2cv.value - 2 * c.C1.value * mulog.value;
    const Real series_b = abs(c.C2.value) * mu2cv.tail_bound + abs(mu2cv.value) * c.C2.tail_bound
                        + 2 * (abs(c.C1.value) * mulog.tail_bound + abs(mulog.value) * c.C1.tail_bound);
    out.series = {"C_f(" + f.name + ") mu-series", series, series_b, mu2cv.terms_used};

    const Real z2 = z.zeta2.value, zp2 = z.zeta_prime2.value;
    const Real minus = c.C2.value / z2 - 2 * c.C1.value * zp2 / (z2 * z2);
    const Real plus = c.C2.value / z2 + 2 * c.C1.value * zp2 / (z2 * z2);
    const Real cb = c.C2.tail_bound / z2 + 2 * c.C1.tail_bound * abs(zp2) / (z2 * z2) + Real("1e-26");
    out.closed_minus = {"C_f(" + f.name + ") closed form (minus)", minus, cb, 0};
    out.closed_plus = {"C_f(" + f.name + ") closed form (plus, as printed)", plus, cb, 0};
    out.discrepancy = abs(series - minus);
    return out;
}

namespace {

ConstantValue cv_make(const std::string& id, const Real& v, const Real& b, u64 t = 0) {
    return {id, v, b, t};
}

} // namespace

ConstantsR3 ConstantsEngine::constants_r3(const FuncSpec& f, const Real& target) const {
    if (f.alpha >= 1.0) throw domain_error("constants_r3: requires alpha < 1");
    ConstantsR3 out;
    out.theorem4_literal_diverges = true;  // sum f(d)/d diverges for all presets with f >= 1

    // moments M_j = sum f(d) log^j d / d^2
    Real M[3], Mb[3];
    u64 terms = 0;
    {
        u64 N = 65536;
        const u64 cap = std::min<u64>(std::max<u64>(sieve_.limit(), 65536), 4000000);
        for (;;) {
            Real part[3] = {0, 0, 0};
            for (u64 k = 1; k <= N; ++k) {
                const Real fv = f(k).convert_to<Real>();
                const Real lk = (k == 1) ? Real(0) : log(Real(k));
                const Real base = fv / (Real(k) * Real(k));
                part[0] += base;
                part[1] += base * lk;
                part[2] += base * lk * lk;
            }
            Real worst = 0;
            for (unsigned j = 0; j < 3; ++j) {
                auto [tv, tb] = tail_moment(f, j, Real(2), N);
                M[j] = part[j] + tv;
                Mb[j] = tb;
                worst = std::max(worst, tb);
            }
            terms = N;
            if (worst <= target || N >= cap) break;
            N = std::min(cap, N * 4);
        }
    }
    const Real g = gamma_, g1 = gamma1_;
    out.lit_C1 = cv_make("r3 lit C1(" + f.name + ")", M[0] / 2, Mb[0] / 2, terms);
    out.lit_C2 = cv_make("r3 lit C2(" + f.name + ")", 3 * g * M[0] - M[1],
                         3 * g * Mb[0] + Mb[1], terms);
    out.lit_C3 = cv_make("r3 lit C3(" + f.name + ")",
                         M[2] / 2 - 3 * g * M[1] + (3 * g * g + 3 * g1) * M[0],
                         Mb[2] / 2 + 3 * g * Mb[1] + abs(3 * g * g + 3 * g1) * Mb[0], terms);

    // corrected set from the r=2 telescoping constants
    const SeriesConstantsR2 r2 = series_constants_r2(f, target);
    const ConstantValue C4 = c4_series(f, target);
    const Real p2const = 3 * g * g - 3 * g - 3 * g1 + 1;  // constant term of P2
    out.cor_C1 = cv_make("r3 cor C1(" + f.name + ")", r2.C1.value / 2, r2.C1.tail_bound / 2,
                         r2.C1.terms_used);
    out.cor_C2 = cv_make("r3 cor C2(" + f.name + ")",
                         (3 * g - 1) * r2.C1.value - r2.C3.value,
                         (3 * g + 1) * r2.C1.tail_bound + r2.C3.tail_bound, r2.C1.terms_used);
    out.cor_C3 = cv_make("r3 cor C3(" + f.name + ")",
                         C4.value / 2 - (3 * g - 1) * r2.C3.value + p2const * r2.C1.value,
                         C4.tail_bound / 2 + (3 * g + 1) * r2.C3.tail_bound
                             + abs(p2const) * r2.C1.tail_bound, C4.terms_used);

    // Mobius moments over d^3 and the starred (coprime) expansions
    const ConstantValue m0 = mu_log_moment(0, 3);
    const ConstantValue m1 = mu_log_moment(1, 3);
    const ConstantValue m2 = mu_log_moment(2, 3);
    auto star = [&](const ConstantValue& a2, const ConstantValue& a1, const ConstantValue& a0,
                    const std::string& tag, bool paper_literal_c3) {
        ConstantValue s2, s1, s0;
        s2 = cv_make("r3 " + tag + " star C1(" + f.name + ")", a2.value * m0.value,
                     abs(a2.value) * m0.tail_bound + abs(m0.value) * a2.tail_bound);
        s1 = cv_make("r3 " + tag + " star C2(" + f.name + ")",
                     a1.value * m0.value - 6 * a2.value * m1.value,
                     abs(a1.value) * m0.tail_bound + abs(m0.value) * a1.tail_bound
                         + 6 * (abs(a2.value) * m1.tail_bound + abs(m1.value) * a2.tail_bound));
        const Real c1coef = paper_literal_c3 ? Real(6) : Real(3);
        s0 = cv_make("r3 " + tag + " star C3(" + f.name + ")",
                     a0.value * m0.value - c1coef * a1.value * m1.value + 9 * a2.value * m2.value,
                     abs(a0.value) * m0.tail_bound + abs(m0.value) * a0.tail_bound
                         + c1coef * (abs(a1.value) * m1.tail_bound + abs(m1.value) * a1.tail_bound)
                         + 9 * (abs(a2.value) * m2.tail_bound + abs(m2.value) * a2.tail_bound));
        return std::array<ConstantValue, 3>{s2, s1, s0};
    };
    auto sl = star(out.lit_C1, out.lit_C2, out.lit_C3, "lit", true);
    out.star_lit_C1 = sl[0]; out.star_lit_C2 = sl[1]; out.star_lit_C3 = sl[2];
    auto sc = star(out.cor_C1, out.cor_C2, out.cor_C3, "cor", false);
    out.star_cor_C1 = sc[0]; out.star_cor_C2 = sc[1]; out.star_cor_C3 = sc[2];
    return out;
}

EulerProducts ConstantsEngine::euler_products(const Real& a, const Real& target) const {
    if (a <= 1) throw domain_error("euler_products: requires a > 1");
    EulerProducts out;
    out.two_omega_leading = 6 / (pi_value() * pi_value());

    const auto& primes = sieve_.primes();
    Real ca = 1, ca_lit = 1, c2_lit = 1;
    u64 used = 0;
    Real bound_ca = 1, bound_c2 = 1;
    for (u64 P : primes) {
        const Real rp = Real(P);
        const Real pa = pow(rp, a);
        ca *= 1 + 2 / (pa - 1);
        ca_lit *= 1 + 2 / pa;
        c2_lit *= 1 - 3 / (rp * rp) + 2 / (rp * rp * rp);
        ++used;
        // tail bounds via log expansion over all integers > P
        bound_ca = 4 * (integ_tail(0, a, rp) + pow(rp, -a));
        bound_c2 = 4 * (integ_tail(0, Real(2), rp) + 1 / (rp * rp));
        if (bound_ca <= target / 2 && bound_c2 <= target / 2) break;
    }
    out.Ca = cv_make("C_a full local factors, a=" + std::to_string(a.convert_to<double>()),
                     ca, ca * bound_ca * Real("1.1"), used);
    out.Ca_literal = cv_make("C_a literal product, a=" + std::to_string(a.convert_to<double>()),
                             ca_lit, ca_lit * bound_ca * Real("1.1"), used);
    out.C2_literal = cv_make("C2 product (1-1/p)^2(1+2/p)", c2_lit, c2_lit * bound_c2 * Real("1.1"), used);
    return out;
}

} // namespace fracsum
