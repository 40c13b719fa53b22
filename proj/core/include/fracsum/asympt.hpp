#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fracsum/constants.hpp"
#include "fracsum/summatory.hpp"

namespace fracsum {

// Geometric scan grid. points() are strictly increasing, capped at max_x.
struct GridSpec {
    u64 min_x = 1000;
    u64 max_x = 100000000;
    double ratio = 2.0;
    std::vector<u64> points() const;
};

struct ModelTerm {
    int log_power = 0;
    ConstantValue coeff;
};

// Main-term model M(x) = (x/d^r) * sum_j c_j log^j(x/d^r). Where the source
// formulas admit two readings (sign of the zeta'(2) term in C_f; the stated
// vs the recomputed coefficient set for r=3), both are carried and the
// residual scan arbitrates numerically.
struct AsymptoticModel {
    std::string definition_id;
    unsigned r = 2;
    u64 d = 1;
    std::vector<ModelTerm> coefficients;       // primary variant
    std::vector<ModelTerm> alt_coefficients;   // empty when there is no second reading
    std::string variant_name;
    std::string alt_variant_name;
    Real error_exponent = 0;   // theta/delta/eta of the O-term

    Real eval(u64 x, bool alt = false) const;
};

struct ResidualPoint {
    u64 x = 0;
    Real exact = 0, main = 0, residual = 0, normalized = 0;
};

struct ResidualReport {
    std::string name;
    Real exponent = 0;             // normalization exponent e in residual/x^e
    std::vector<ResidualPoint> points;
    std::optional<double> fitted_slope;   // OLS on (log x, log|residual|), >=4 nonzero
    Real sup_ratio = 0;            // max |normalized|
    Real bottom_sup = 0, top_sup = 0;
    bool bounded = false;          // top_sup <= 1.2 * bottom_sup (settling rule)
    std::string chosen_variant;
    std::vector<std::string> notes;
};

struct RatioPoint {
    u64 x = 0;
    Real value = 0, ratio = 0;
};

struct RatioReport {
    std::string name;
    Real exponent = 0;
    std::vector<RatioPoint> points;
    Real sup_ratio = 0;
    bool finite = true;
    bool top_non_increasing = false;   // within 5% per-step jitter tolerance
    bool pass = false;
    std::vector<std::string> notes;
};

// Residual-scan laboratory: builds models from the constants engine and runs
// exact sums against them.
class AsymptLab {
public:
    AsymptLab(const SieveTable& sieve, const ConstantsEngine& engine,
              Budgets budgets = {}, double epsilon_slack = 0.15);

    AsymptoticModel model_theorem1(const FuncSpec& f, u64 d) const;
    AsymptoticModel model_lemma6(const FuncSpec& f) const;
    AsymptoticModel model_theorem4(const FuncSpec& f) const;

    // D(x) against x log x + (2 gamma - 1) x, normalized by sqrt(x).
    ResidualReport scan_dirichlet(const GridSpec& grid) const;
    // S_{f,2}^{(d)} against model_theorem1, normalized by x^0.75.
    ResidualReport scan_theorem1(const FuncSpec& f, u64 d, const GridSpec& grid) const;
    // S_{f,3} against model_lemma6, normalized by x^0.55.
    ResidualReport scan_lemma6(const FuncSpec& f, const GridSpec& grid) const;
    // S_{f,3}^* against model_theorem4, normalized by x^0.75.
    ResidualReport scan_theorem4(const FuncSpec& f, const GridSpec& grid) const;
    // W_{f,z}(y) against (C1(f)/(z+1)) y^{z+1}, normalized by y^{z+1/2+slack}.
    ResidualReport scan_lemma_mu3(const FuncSpec& f, const Rat& z, const GridSpec& grid) const;

    RatioReport bound_check_theorem2(const FuncSpec& f, const Rat& a, const Rat& b,
                                     u64 d, const GridSpec& grid) const;
    RatioReport bound_check_theorem3(unsigned k, u64 d, const GridSpec& grid) const;
    RatioReport tail_check_lemma3(const GridSpec& grid) const;
    RatioReport two_omega_asymptotic_check(const Rat& a, const GridSpec& grid) const;

    double epsilon_slack() const { return slack_; }
    const ConstantsEngine& engine() const { return engine_; }

private:
    const SieveTable& sieve_;
    const ConstantsEngine& engine_;
    Budgets budgets_;
    double slack_;

    ResidualReport scan_model(const AsymptoticModel& model,
                              const std::function<Real(u64)>& exact_fn,
                              const GridSpec& grid, const Real& norm_exponent,
                              const std::string& name) const;
};

// Deterministic decimal rendering used in all CSV bodies.
std::string real_str(const Real& v);

// CSV + plain-text summary emission; files are written whole then renamed.
void write_csv(const ResidualReport& r, const std::string& path);
void write_csv(const RatioReport& r, const std::string& path);
std::string summarize(const ResidualReport& r);
std::string summarize(const RatioReport& r);
void write_text_file(const std::string& path, const std::string& content);

} // namespace fracsum
