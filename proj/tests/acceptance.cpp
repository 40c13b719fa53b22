// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Criterion 9 drives the installed CLI binary (path = argv[1]).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "fracsum/arith.hpp"
#include "fracsum/asympt.hpp"
#include "fracsum/constants.hpp"
#include "fracsum/summatory.hpp"

using namespace fracsum;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    double budget_s;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    void finish(bool ok, const std::string& detail) {
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream os;
        os << (ok ? "PASS " : "FAIL ") << name << " (" << dt << " s";
        if (budget_s > 0) {
            os << ", budget " << budget_s << " s";
            if (dt > budget_s) { ok = false; os << ", OVER BUDGET"; }
        }
        os << ")";
        if (!detail.empty()) os << " — " << detail;
        std::cout << os.str() << std::endl;
        if (!ok) ++g_failures;
    }
};

std::vector<u64> divisors_of(u64 n) {
    std::vector<u64> lo, hi;
    for (u64 a = 1; a * a <= n; ++a) {
        if (n % a) continue;
        lo.push_back(a);
        if (a != n / a) hi.push_back(n / a);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// criterion 1: exact identities against brute divisor-lattice enumeration
void criterion1(const SieveTable& sieve) {
    Criterion c{"criterion-1 identity suite (Lemma 1 / Eq. 4, tau2* = 2^omega)", 60};
    bool ok = true;
    std::string detail;
    for (u64 n = 1; n <= 100000 && ok; ++n) {
        const auto divs = divisors_of(n);
        u64 cnt2[5] = {0, 0, 0, 0, 0};
        for (u64 a : divs) {
            const u64 g = std::gcd(a, n / a);
            if (g <= 4) ++cnt2[g];
        }
        u64 cnt3[5] = {0, 0, 0, 0, 0};
        for (u64 a : divs)
            for (u64 b : divisors_of(n / a)) {
                const u64 g = std::gcd(a, std::gcd(b, (n / a) / b));
                if (g <= 4) ++cnt3[g];
            }
        for (u64 d = 1; d <= 4; ++d) {
            if (tau_r_gcd(n, 2, d, &sieve) != cnt2[d] ||
                tau_r_gcd(n, 3, d, &sieve) != cnt3[d]) {
                ok = false;
                detail = "mismatch at n=" + std::to_string(n) + " d=" + std::to_string(d);
                break;
            }
        }
        if (tau_r_star(n, 2, &sieve) != (u64{1} << sieve.omega(n))) {
            ok = false;
            detail = "tau2* != 2^omega at n=" + std::to_string(n);
        }
    }
    c.finish(ok, detail);
}

// criterion 2: Lemma 2 Mobius combination == direct tau_r^* sum; gcd chain
void criterion2(const SieveTable& sieve) {
    Criterion c{"criterion-2 Lemma 2 suite (Mobius combination vs direct)", 120};
    bool ok = true;
    std::string detail;
    for (const char* fn : {"one", "id", "tau", "mu2"}) {
        const FuncSpec f = func_by_name(fn, &sieve);
        for (unsigned r : {2u, 3u})
            for (unsigned k = 0; k <= 20 && ok; ++k) {
                const u64 x = u64{1} << k;
                SumQuery q{f, r, 1, x, {}, {}, {}};
                const Rat a = fracsum_star(q, Method::naive, sieve).value;
                const Rat b = fracsum_star(q, Method::blocked, sieve).value;
                if (a != b) {
                    ok = false;
                    detail = std::string("star mismatch f=") + fn + " r=" +
                             std::to_string(r) + " x=" + std::to_string(x);
                }
            }
    }
    for (u64 d = 1; d <= 5 && ok; ++d)
        for (unsigned r : {2u, 3u})
            for (u64 x : {u64{1} << 12, u64{1} << 16, u64{1} << 20}) {
                SumQuery qd{func_by_name("tau", &sieve), r, d, x, {}, {}, {}};
                u64 dr = 1;
                for (unsigned i = 0; i < r; ++i) dr *= d;
                SumQuery qs{func_by_name("tau", &sieve), r, 1, x / dr, {}, {}, {}};
                if (fracsum_gcd(qd, Method::blocked, sieve).value !=
                    fracsum_star(qs, Method::blocked, sieve).value) {
                    ok = false;
                    detail = "gcd chain mismatch d=" + std::to_string(d);
                }
            }
    c.finish(ok, detail);
}

// criterion 3: blocked vs naive method agreement at 1e3..1e7
void criterion3(const SieveTable& sieve) {
    Criterion c{"criterion-3 method agreement (D, A3, F, fracsum)", 120};
    bool ok = true;
    std::string detail;
    for (u64 x : {u64{1000}, u64{10000}, u64{100000}, u64{1000000}, u64{10000000}}) {
        if (divisor_summatory(x) != divisor_summatory_naive(x, sieve) ||
            tau3_summatory(x) != tau3_summatory_naive(x, sieve) ||
            two_omega_summatory(x, sieve) != two_omega_summatory_naive(x, sieve)) {
            ok = false;
            detail = "summatory mismatch at x=" + std::to_string(x);
            break;
        }
        SumQuery q{func_by_name("tau", &sieve), 2, 1, x, {}, {}, {}};
        if (fracsum::fracsum(q, Method::naive, sieve).value != fracsum::fracsum(q, Method::blocked, sieve).value) {
            ok = false;
            detail = "fracsum mismatch at x=" + std::to_string(x);
            break;
        }
    }
    c.finish(ok, detail);
}

// criterion 4: Dirichlet residual envelope over 1e3..1e8
void criterion4(const AsymptLab& lab) {
    Criterion c{"criterion-4 Dirichlet self-test |D - xlogx - (2g-1)x| <= 2 sqrt x", 0};
    const ResidualReport r = lab.scan_dirichlet(GridSpec{1000, 100000000, 2.0});
    std::ostringstream os;
    os << "sup ratio " << r.sup_ratio.convert_to<double>();
    c.finish(r.sup_ratio <= 2, os.str());
}

// criterion 5: constants to their stated precisions
void criterion5(const SieveTable& sieve, const ConstantsEngine& eng) {
    Criterion c{"criterion-5 constants suite", 60};
    bool ok = true;
    std::string detail;
    auto check = [&](const char* what, const Real& got, const Real& want, const Real& tol) {
        if (abs(got - want) > tol) {
            ok = false;
            detail += std::string(what) + " off; ";
        }
    };
    // two independent truncations each, vs reference digits
    const ConstantValue g_a = eng.euler_gamma(Real("1e-14"));
    const ConstantValue g_b = eng.euler_gamma(Real("1e-22"));
    const Real kGamma("0.57721566490153286060651209008");
    check("gamma(a)", g_a.value, kGamma, Real("1e-10"));
    check("gamma(b)", g_b.value, kGamma, Real("1e-10"));
    if (abs(g_a.value - g_b.value) > g_a.tail_bound + g_b.tail_bound + Real("1e-28")) {
        ok = false;
        detail += "gamma truncations disagree beyond bounds; ";
    }
    const ConstantValue g1_a = eng.stieltjes_gamma1(Real("1e-12"));
    const ConstantValue g1_b = eng.stieltjes_gamma1(Real("1e-18"));
    const Real kGamma1("-0.072815845483676724860586375875");
    check("gamma1(a)", g1_a.value, kGamma1, Real("1e-8"));
    check("gamma1(b)", g1_b.value, kGamma1, Real("1e-8"));
    const ZetaValues z = eng.zeta_values();
    check("zeta3", z.zeta3.value, Real("1.2020569031595942854"), Real("1e-10"));
    check("zetap2", z.zeta_prime2.value, Real("-0.93754825431584375370"), Real("1e-10"));
    check("mu over k^2", eng.mu_log_moment(0, 2).value,
          Real("0.60792710185402662866"), Real("1e-8"));
    // C_{a=2} Euler product vs the exact 2^omega/h^2 partial sum at 1e6
    Real s = 0;
    for (u64 h = 1; h <= 1000000; ++h)
        s += Real(u64{1} << sieve.omega(h)) / (Real(h) * Real(h));
    check("C_{a=2} vs partial sum", eng.euler_products(2, Real("1e-8")).Ca.value, s,
          Real("1e-3"));
    c.finish(ok, detail);
}

// criterion 6: Theorem 1 residual scans, consistent sign choice
void criterion6(const SieveTable& sieve, const AsymptLab& lab) {
    Criterion c{"criterion-6 Theorem 1 scans (f in {one,tau,mu2}, d in {1,2})", 0};
    bool ok = true;
    std::string detail;
    std::string first_variant;
    for (const char* fn : {"one", "tau", "mu2"}) {
        for (u64 d : {u64{1}, u64{2}}) {
            const ResidualReport r =
                lab.scan_theorem1(func_by_name(fn, &sieve), d, GridSpec{1000, 100000000, 2.0});
            if (!r.bounded) {
                ok = false;
                detail += std::string("unbounded f=") + fn + " d=" + std::to_string(d) + "; ";
            }
            if (first_variant.empty()) first_variant = r.chosen_variant;
            else if (r.chosen_variant != first_variant) {
                ok = false;
                detail += std::string("variant flip at f=") + fn + "; ";
            }
        }
    }
    if (ok) detail = "chosen variant: " + first_variant;
    c.finish(ok, detail);
}

// criterion 7: Lemma 6 / Theorem 4 scans at r=3
void criterion7(const SieveTable& sieve, const AsymptLab& lab) {
    Criterion c{"criterion-7 Lemma 6 / Theorem 4 scans", 0};
    bool ok = true;
    std::string detail;
    const ResidualReport a3 =
        lab.scan_lemma6(func_by_name("one", &sieve), GridSpec{1000, 10000000, 2.0});
    if (!a3.bounded) {
        ok = false;
        detail += "A3 vs t P2(log t) unbounded; ";
    }
    for (const char* fn : {"one", "mu2"}) {
        const ResidualReport r =
            lab.scan_theorem4(func_by_name(fn, &sieve), GridSpec{1000, 10000000, 2.0});
        if (!r.bounded) {
            ok = false;
            detail += std::string("S*_{f,3} residual unbounded for f=") + fn + "; ";
        }
    }
    c.finish(ok, detail);
}

// criterion 8: Theorem 2 / Theorem 3 bound checks, Lemma mu-3 residuals
void criterion8(const SieveTable& sieve, const AsymptLab& lab) {
    Criterion c{"criterion-8 Theorem 2/3 bound checks and Lemma mu-3", 0};
    bool ok = true;
    std::string detail;
    const GridSpec g{1000, 10000000, 2.0};
    struct T2 { const char* f; int a, b; u64 d; };
    for (const T2& t : {T2{"one", 0, 0, 1}, T2{"tau", 1, 0, 1}, T2{"one", 0, 0, 2}}) {
        const RatioReport r =
            lab.bound_check_theorem2(func_by_name(t.f, &sieve), t.a, t.b, t.d, g);
        if (!r.pass) {
            ok = false;
            detail += std::string("theorem2 fail f=") + t.f + "; ";
        }
    }
    for (auto [k, d] : {std::pair<unsigned, u64>{1, 1}, {2, 1}, {2, 2}}) {
        const RatioReport r = lab.bound_check_theorem3(k, d, g);
        if (!r.pass) {
            ok = false;
            detail += "theorem3 fail k=" + std::to_string(k) + " d=" + std::to_string(d) + "; ";
        }
    }
    for (int z : {0, 1, 2}) {
        const ResidualReport r = lab.scan_lemma_mu3(func_by_name("one", &sieve), z, g);
        if (!r.bounded) {
            ok = false;
            detail += "mu3 fail z=" + std::to_string(z) + "; ";
        }
    }
    c.finish(ok, detail);
}

// criterion 9: verify all --quick, twice, byte-identical CSVs, <= 5 min
void criterion9(const std::string& cli) {
    Criterion c{"criterion-9 reproducibility of verify all --quick", 0};
    const fs::path base = fs::temp_directory_path() / "fracsum_accept9";
    fs::remove_all(base);
    fs::create_directories(base);
    bool ok = true;
    std::string detail;
    double worst = 0;
    for (int run = 1; run <= 2 && ok; ++run) {
        const fs::path out = base / ("run" + std::to_string(run));
        const std::string cmd = "'" + cli + "' --output-dir '" + out.string() +
                                "' verify all --quick > '" +
                                (base / ("log" + std::to_string(run))).string() + "' 2>&1";
        const auto t0 = std::chrono::steady_clock::now();
        const int rc = std::system(cmd.c_str());
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        worst = std::max(worst, dt);
        if (rc != 0) {
            ok = false;
            detail = "verify all --quick exited nonzero on run " + std::to_string(run);
        }
        if (dt > 300) {
            ok = false;
            detail += " run took " + std::to_string(dt) + " s (> 300)";
        }
    }
    if (ok) {
        std::size_t compared = 0;
        for (const auto& e : fs::directory_iterator(base / "run1")) {
            if (e.path().extension() != ".csv") continue;
            ++compared;
            const fs::path other = base / "run2" / e.path().filename();
            if (!fs::exists(other) || slurp(e.path()) != slurp(other)) {
                ok = false;
                detail = "CSV differs: " + e.path().filename().string();
                break;
            }
        }
        if (compared == 0) {
            ok = false;
            detail = "no CSVs produced";
        }
        if (ok) detail = std::to_string(compared) + " CSVs byte-identical, slowest run " +
                         std::to_string(worst) + " s";
    }
    c.finish(ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    const std::string cli = argc > 1 ? argv[1] : "";
    const SieveTable sieve = build_sieve(10000000);
    const ConstantsEngine eng(sieve);
    const AsymptLab lab(sieve, eng);

    criterion1(sieve);
    criterion2(sieve);
    criterion3(sieve);
    criterion4(lab);
    criterion5(sieve, eng);
    criterion6(sieve, lab);
    criterion7(sieve, lab);
    criterion8(sieve, lab);
    if (!cli.empty()) criterion9(cli);
    else {
        std::cout << "FAIL criterion-9 reproducibility — CLI path not supplied" << std::endl;
        ++g_failures;
    }

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
