#include <doctest.h>

#include "fracsum/constants.hpp"
#include "fracsum/summatory.hpp"

using namespace fracsum;

namespace {

const SieveTable& sieve() {
    static SieveTable s = build_sieve(2000000);
    return s;
}
const ConstantsEngine& engine() {
    static ConstantsEngine e(sieve());
    return e;
}

// reference digits computed with an independent arbitrary-precision tool
const Real kGamma("0.5772156649015328606065120900824");
const Real kGamma1("-0.0728158454836767248605863758749");
const Real kZeta2("1.6449340668482264364724151666460");
const Real kZeta3("1.2020569031595942853997381615114");
const Real kZetaP2("-0.9375482543158437537025740945797");
const Real kInvZeta2("0.607927101854026628663276779258");
// C1/C3/C4 for f = tau via sum_d d/ds^j [d^{-s}(zeta(s)-zeta(s,1+1/d))] at s=1
const Real kC1Tau("1.88077087019360166068441747861");
const Real kC3Tau("1.12058787064770495624499631461");
const Real kC4Tau("2.16286636023326954055372260768");
// Mobius log-moments: zeta'(2)/zeta(2)^2 and the 1/zeta(3) expansion moments
const Real kMuLog2("-0.346494734701802213346160816868");
const Real kM0("0.831907372580707468683126278822");
const Real kM1("-0.137117204455997469468655166882");
const Real kM2("-0.120721568646809195122634314593");

bool close(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }

} // namespace

TEST_CASE("gamma and gamma1 via Euler-Maclaurin limits") {
    const ConstantValue g = engine().euler_gamma(Real("1e-18"));
    CHECK(close(g.value, kGamma, Real("1e-17")));
    CHECK(g.tail_bound <= Real("1e-18"));
    const ConstantValue g1 = engine().stieltjes_gamma1(Real("1e-15"));
    CHECK(close(g1.value, kGamma1, Real("1e-14")));
    // two independent truncations agree within combined bounds
    const ConstantValue g2 = engine().euler_gamma(Real("1e-24"));
    CHECK(abs(g.value - g2.value) <= g.tail_bound + g2.tail_bound + Real("1e-28"));
    CHECK_THROWS_AS(engine().euler_gamma(Real("1e-35")), precision_error);
}

TEST_CASE("zeta values") {
    const ZetaValues z = engine().zeta_values();
    CHECK(close(z.zeta2.value, kZeta2, Real("1e-25")));
    CHECK(close(z.zeta3.value, kZeta3, Real("1e-15")));
    CHECK(close(z.zeta_prime2.value, kZetaP2, Real("1e-15")));
    CHECK(z.zeta3.tail_bound < Real("1e-15"));
    CHECK(z.zeta_prime2.tail_bound < Real("1e-15"));
}

TEST_CASE("tail_moment against direct partial tails") {
    // sum_{k>N} k^-2 = zeta(2) - partial
    Real partial = 0;
    for (u64 k = 1; k <= 100; ++k) partial += 1 / (Real(k) * Real(k));
    auto [v, b] = engine().tail_moment(func_by_name("one", nullptr), 0, Real(2), 100);
    CHECK(abs(v - (kZeta2 - partial)) <= b + Real("1e-25"));
    CHECK(b < Real("1e-15"));

    // tau: compare with a long direct tail over the sieve range
    const u64 N = 500;
    Real direct = 0;
    for (u64 k = N + 1; k <= 2000000; ++k)
        direct += Real(sieve().tau(k)) / (Real(k) * Real(k) * Real(k));
    auto [vt, bt] = engine().tail_moment(func_by_name("tau", &sieve()), 0, Real(3), N);
    CHECK(abs(vt - direct) <= bt + Real("1e-10"));
    CHECK(bt < Real("1e-3"));

    // mu2 with a log factor
    Real direct2 = 0;
    for (u64 k = N + 1; k <= 2000000; ++k)
        if (sieve().mu(k) != 0) direct2 += log(Real(k)) / (Real(k) * Real(k) * Real(k));
    auto [vm, bm] = engine().tail_moment(func_by_name("mu2", &sieve()), 1, Real(3), N);
    CHECK(abs(vm - direct2) <= bm + Real("1e-10"));
}

TEST_CASE("r=2 telescoping constants") {
    const SeriesConstantsR2 one = engine().series_constants_r2(
        func_by_name("one", nullptr), Real("1e-12"));
    CHECK(one.C1.value == 1);
    CHECK(one.C3.value == 0);
    CHECK(close(one.C2.value, 2 * kGamma - 1, Real("1e-25")));

    const SeriesConstantsR2 tau = engine().series_constants_r2(
        func_by_name("tau", &sieve()), Real("1e-9"));
    CHECK(close(tau.C1.value, kC1Tau, Real("1e-8")));
    CHECK(tau.C1.tail_bound < Real("1e-8"));
    CHECK(close(tau.C3.value, kC3Tau, Real("1e-8")));
    CHECK(close(tau.C2.value, (2 * kGamma - 1) * kC1Tau - kC3Tau, Real("1e-7")));
    const ConstantValue c4 = engine().c4_series(func_by_name("tau", &sieve()), Real("1e-9"));
    CHECK(close(c4.value, kC4Tau, Real("1e-7")));

    CHECK_THROWS_AS(engine().series_constants_r2(func_by_name("id", nullptr), Real("1e-9")),
                    domain_error);
}

TEST_CASE("Mobius log moments") {
    CHECK(close(engine().mu_log_moment(0, 2).value, kInvZeta2, Real("1e-8")));
    CHECK(close(engine().mu_log_moment(1, 2).value, kMuLog2, Real("1e-7")));
    CHECK(close(engine().mu_log_moment(0, 3).value, kM0, Real("1e-10")));
    CHECK(close(engine().mu_log_moment(1, 3).value, kM1, Real("1e-9")));
    CHECK(close(engine().mu_log_moment(2, 3).value, kM2, Real("1e-8")));
}

TEST_CASE("C_f for Theorem 1: series matches the minus-sign closed form") {
    for (const char* fn : {"one", "tau", "mu2"}) {
        const CfTheorem1 cf = engine().c_f_theorem1(func_by_name(fn, &sieve()), Real("1e-9"));
        CHECK(cf.discrepancy <=
              cf.series.tail_bound + cf.closed_minus.tail_bound + Real("1e-6"));
        // the plus-sign reading differs by 4 C1 |zeta'(2)| / zeta(2)^2, far
        // outside the certified bounds
        CHECK(abs(cf.series.value - cf.closed_plus.value) >
              100 * (cf.series.tail_bound + cf.closed_plus.tail_bound));
    }
}

TEST_CASE("r=3 constant sets for f = one") {
    const ConstantsR3 c = engine().constants_r3(func_by_name("one", nullptr), Real("1e-10"));
    // stated set evaluates its printed series: C1 = zeta(2)/2 etc.
    CHECK(close(c.lit_C1.value, kZeta2 / 2, Real("1e-9")));
    CHECK(close(c.lit_C2.value, 3 * kGamma * kZeta2 + kZetaP2, Real("1e-8")));
    // recomputed set carries the Piltz coefficients: 1/2, 3g-1, const(P2)
    CHECK(close(c.cor_C1.value, Real("0.5"), Real("1e-20")));
    CHECK(close(c.cor_C2.value, 3 * kGamma - 1, Real("1e-15")));
    CHECK(close(c.cor_C3.value,
                3 * kGamma * kGamma - 3 * kGamma - 3 * kGamma1 + 1, Real("1e-12")));
    // starred leading coefficient = C1 / zeta(3)
    CHECK(close(c.star_cor_C1.value, Real("0.5") * kM0, Real("1e-10")));
    CHECK(close(c.star_cor_C2.value, (3 * kGamma - 1) * kM0 - 6 * Real("0.5") * kM1,
                Real("1e-8")));
    CHECK(c.theorem4_literal_diverges);
}

TEST_CASE("Euler products") {
    const EulerProducts e = engine().euler_products(2, Real("1e-8"));
    // full local factors: zeta(2)^2/zeta(4) = 5/2 exactly
    CHECK(abs(e.Ca.value - Real("2.5")) <= e.Ca.tail_bound);
    CHECK(e.Ca.tail_bound < Real("1e-5"));
    // literal product misses the geometric series: prod(1+2/p^2) ~ 2.19, not 5/2
    CHECK(e.Ca_literal.value > Real("2.1"));
    CHECK(e.Ca_literal.value < Real("2.3"));
    // the printed C2 product is not the 1/zeta(2) that the summatory shows
    CHECK(close(e.C2_literal.value, Real("0.2867"), Real("1e-3")));
    CHECK(close(Real(e.two_omega_leading), kInvZeta2, Real("1e-25")));
    CHECK_THROWS_AS(engine().euler_products(1, Real("1e-8")), domain_error);
}

TEST_CASE("C_{a=2} against the exact partial sum at 1e6") {
    Real s = 0;
    for (u64 h = 1; h <= 1000000; ++h)
        s += Real(u64{1} << sieve().omega(h)) / (Real(h) * Real(h));
    const EulerProducts e = engine().euler_products(2, Real("1e-8"));
    CHECK(abs(e.Ca.value - s) < Real("1e-3"));
}
