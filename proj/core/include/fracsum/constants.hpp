#pragma once

#include <string>
#include <vector>

#include "fracsum/arith.hpp"
#include "fracsum/numeric.hpp"
#include "fracsum/sieve.hpp"

namespace fracsum {

// A high-precision value with a certified truncation-error bound.
// Rounding error of the 113-bit arithmetic is tracked separately as
// rounding_slack (a crude per-operation epsilon count).
struct ConstantValue {
    std::string definition_id;
    Real value = 0;
    Real tail_bound = 0;
    u64 terms_used = 0;
};

struct ZetaValues {
    ConstantValue zeta2, zeta3, zeta_prime2;
};

struct SeriesConstantsR2 {
    ConstantValue C1, C2, C3;
    Real growth_K = 0;   // empirical K in f(k) <= K k^alpha over k <= 1e4
};

// Theorem-1 second constant, both routes. closed_minus is
// C2/zeta(2) - 2 C1 zeta'(2)/zeta(2)^2 (matches the Mobius series);
// closed_plus flips the sign of the zeta'(2) term as printed in the source
// theorem's proof. The residual scans arbitrate.
struct CfTheorem1 {
    ConstantValue series, closed_minus, closed_plus;
    Real discrepancy = 0;
};

// r=3 constant sets. "lit" follows the stated coefficient series
// C1=sum f(d)/(2d^2) etc.; "cor" is the x P2(log x)-consistent set assembled
// from the r=2 telescoping constants (C1, C3 and the squared-log analogue C4).
// Starred sets are the Mobius-inverted (coprime) versions of each.
struct ConstantsR3 {
    ConstantValue lit_C1, lit_C2, lit_C3;
    ConstantValue cor_C1, cor_C2, cor_C3;
    ConstantValue star_lit_C1, star_lit_C2, star_lit_C3;
    ConstantValue star_cor_C1, star_cor_C2, star_cor_C3;
    bool theorem4_literal_diverges = false;  // sum f(d)/d as printed
};

struct EulerProducts {
    ConstantValue Ca;           // prod_p (1 + 2/(p^a - 1)) = full Dirichlet factor
    ConstantValue Ca_literal;   // prod_p (1 + 2/p^a) as printed
    ConstantValue C2_literal;   // prod_p (1 - 1/p)^2 (1 + 2/p)
    Real two_omega_leading = 0; // 1/zeta(2), the constant in F(t) ~ t log t / zeta(2)
};

Real pi_value();

// Evaluation engine. Holds the sieve (for mu, tau, omega partial sums and the
// empirical growth envelopes) and caches gamma / gamma1 / zeta values.
class ConstantsEngine {
public:
    explicit ConstantsEngine(const SieveTable& sieve);

    ConstantValue euler_gamma(const Real& precision_target) const;
    ConstantValue stieltjes_gamma1(const Real& precision_target) const;
    ZetaValues zeta_values() const;

    // Direct partial sums of mu(k) (log k)^j / k^s with an empirical
    // Mertens-envelope tail bound. s in {2,3}, j in {0,1,2}.
    ConstantValue mu_log_moment(unsigned j, unsigned s) const;

    SeriesConstantsR2 series_constants_r2(const FuncSpec& f, const Real& precision_target) const;
    CfTheorem1 c_f_theorem1(const FuncSpec& f, const Real& precision_target) const;
    ConstantsR3 constants_r3(const FuncSpec& f, const Real& precision_target) const;
    EulerProducts euler_products(const Real& a, const Real& precision_target) const;

    // sum_{k>N} f(k) (log k)^j / k^s for the presets (one, tau, mu2), with a
    // certified value + bound; generic functions get value 0 and an
    // empirical-K envelope bound. Exposed for testing against brute tails.
    std::pair<Real, Real> tail_moment(const FuncSpec& f, unsigned j, Real s, u64 N) const;

    // C4(f) = sum f(k) (log^2 k / k - log^2(k+1)/(k+1)); needed by the
    // corrected r=3 constant set.
    ConstantValue c4_series(const FuncSpec& f, const Real& precision_target) const;

    const SieveTable& sieve() const { return sieve_; }

    // Empirical envelopes measured over the sieve range (with margin):
    // |D(t) - t log t - (2g-1) t| <= K_tau t^0.4,  |Q(t) - 6t/pi^2| <= K_q t^0.5,
    // |M(t)| <= K_mertens t^0.5.
    Real envelope_tau() const { return k_tau_; }
    Real envelope_sqfree() const { return k_sqfree_; }
    Real envelope_mertens() const { return k_mertens_; }

private:
    const SieveTable& sieve_;
    Real k_tau_, k_sqfree_, k_mertens_;
    Real gamma_, gamma1_;

    std::pair<Real, Real> series_with_weight(const FuncSpec& f, int which,
                                             const Real& precision_target, u64& terms) const;
};

} // namespace fracsum
