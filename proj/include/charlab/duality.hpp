#pragma once

#include <cstdint>
#include <vector>

namespace charlab {

// Dense double matrix with a_{ji} = -a_{ij}, checked to 1e-12 on construction.
class SkewMatrix {
public:
    explicit SkewMatrix(std::vector<std::vector<double>> a);
    std::size_t size() const { return n_; }
    double at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<double> a_;
};

double det_double(std::vector<std::vector<double>> a);

// Pfaffian by expansion along the first row; Pf([[0,a],[-a,0]]) = a.
double pfaffian(const SkewMatrix& m);

// Exponential-weight symmetrized LPP: 2n rates, threshold v.
struct ExpLppSpec {
    std::size_t n = 1;
    std::vector<double> rho;  // 2n positive, pairwise distinct rates
    double v = 1.0;
};

void validate_spec(const ExpLppSpec& spec);

// P(L(2n,2n) <= 2v) for the antidiagonally symmetric exponential model, via
// the Cauchy-determinant route and the Schur-Pfaffian route.
double exp_lpp_cdf_det(const ExpLppSpec& spec);
double exp_lpp_cdf_pf(const ExpLppSpec& spec);

// P(L(2n,2n) <= 2v) for the diagonally symmetric exponential model with zero
// diagonal: the half-sum of the sinh- and cosh-kernel determinant ratios.
double exp_sym_lpp_cdf(const ExpLppSpec& spec);

// CDF value at the fluctuation-scale threshold v_n = fbar*n + sigma*n^(1/3);
// exposed for trend inspection only.
double exp_lpp_cdf_det_scaled(const ExpLppSpec& spec, double fbar, double sigma);

// Max abs discrepancy between the two sides of the named identity, with
// randomly drawn decaying exponentials on [0, 1].
double identity_check_andreief(std::size_t n, std::uint64_t seed);
double identity_check_debruijn(std::size_t n, std::uint64_t seed);

// Closed forms used as oracles in tests.
double schur_pfaffian_product(const std::vector<double>& rho);
double cauchy_det_product(const std::vector<double>& rho);  // dets over rho_i, rho_{n+j}

// Monte Carlo oracles (plain DP over sampled exponential arrays).
double exp_antidiag_mc(const ExpLppSpec& spec, std::uint64_t trials, std::uint64_t seed);
double exp_diagsym_mc(const ExpLppSpec& spec, std::uint64_t trials, std::uint64_t seed);

}  // namespace charlab
