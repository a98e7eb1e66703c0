#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mindist {

using BigInt = boost::multiprecision::cpp_int;

// q-ary entropy, x in [0,1], 0*log 0 = 0.
double entropy_hq(int q, double x);

enum class CodeClass { Classical, Stabilizer, Css, LdpcClassical, LdpcQuantum };
CodeClass code_class_from_name(const std::string& name);
std::string code_class_name(CodeClass c);

// Smaller root of the rate/distance tradeoff met by typical random codes:
// classical R = 1 - h_q(d), stabilizer R = 1 - 2 h_4(d), CSS R = 1 - 2 h_2(d).
double gv_distance(int q, double rate, CodeClass cls);

// Extended real line with an explicit -inf, so ensemble-spectrum conventions
// never leak sentinel floats into maximizations.
struct ExtReal {
    bool finite = true;
    double v = 0.0;
    static ExtReal neg_inf() { return {false, 0.0}; }
    static ExtReal of(double x) { return {true, x}; }
    bool operator<(const ExtReal& rhs) const {
        if (!finite) return rhs.finite;
        if (!rhs.finite) return false;
        return v < rhs.v;
    }
};

// True unless m is odd and beta >= 1 - 1/m (where the spectrum is -inf).
bool spectral_admissible(int m, double beta);
// Unique nonnegative root t of
//   ((1+t)^(m-1) + (1-t)^(m-1)) / ((1+t)^m + (1-t)^m) = 1 - beta.
double spectral_root_t(int m, double beta);
// Spectral exponent q(alpha, beta) of the (l,m)-regular ensembles,
// alpha = l/m, in bits per symbol; -inf per the odd-m convention.
ExtReal q_alpha_beta(int l, int m, double beta);
// f(theta) = max over beta in (0,1) of q(alpha, beta*theta) + theta*h2(beta).
double f_theta(int l, int m, double theta);

struct SpectralParams {
    int l = 0, m = 0;
    double alpha = 0.0;
    double delta_star = 0.0;  // smallest positive root of h2(d) + q(alpha,d)
    double theta_star = 0.0;  // root of f(theta)
};
SpectralParams ensemble_params(int l, int m);

enum class Technique { SW, MB, PB, CS, IC, Combined };
Technique technique_from_name(const std::string& name);
std::string technique_name(Technique t);

struct ExponentQuery {
    Technique technique = Technique::SW;
    CodeClass code_class = CodeClass::Classical;
    int q = 2;
    double rate = 0.0;
    std::optional<double> delta;            // defaults to delta_star for LDPC classes
    std::optional<std::pair<int, int>> lm;  // ensemble, required by IC and LDPC classes
};

// Complexity exponent F with operation count 2^(F n): every formula is
// reported in bits (log-base-q statements are scaled by log2 q).
double technique_exponent(const ExponentQuery& query,
                          const std::optional<SpectralParams>& params = std::nullopt);

// Exact run-count coefficients S_0..S_hmax of 1/(1 - T(z)) with
// T(z) = sum_v N_v(q) C(m-1, v) z^v; the stabilizer variant scales N_v by
// q^v. Computed by integer convolution.
std::vector<BigInt> cluster_series(int q, int m, int h_max, bool stabilizer = false);
// Independent evaluation of the same coefficients by summing residues of
// 1/(z^(h+1) (1-T(z))) over all complex roots of 1 - T(z).
std::vector<double> cluster_series_residue(int q, int m, int h_max, bool stabilizer = false);

struct GammaResult {
    double rho = 0.0;        // smallest positive root of 1 - T(z)
    double gamma = 0.0;      // 1 / ((m-1) rho)
    double gamma_bar = 0.0;  // (q-1) / ((m-1)(q^(1/(m-1)) - 1)), limit (q-1)/ln q
};
// m <= 0 requests the m -> infinity limit (Richardson extrapolation from
// m = 1e5 and 1e6). stabilizer scales the cluster counts by q^v.
GammaResult gamma_m(int q, long long m, bool stabilizer = false);

}  // namespace mindist
