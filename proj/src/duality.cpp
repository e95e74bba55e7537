#include "charlab/duality.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace charlab {

SkewMatrix::SkewMatrix(std::vector<std::vector<double>> a) : n_(a.size()), a_(n_ * n_, 0.0) {
    for (std::size_t i = 0; i < n_; ++i) {
        if (a[i].size() != n_) throw std::invalid_argument("SkewMatrix: not square");
        for (std::size_t j = 0; j < n_; ++j) a_[i * n_ + j] = a[i][j];
    }
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (std::fabs(a_[i * n_ + j] + a_[j * n_ + i]) > 1e-12)
                throw std::invalid_argument("SkewMatrix: skew symmetry violated");
}

namespace {

// 256-bit MPFR scalar for the determinant/Pfaffian evaluations. The public
// API stays double; the extra precision absorbs the cancellation in deep-tail
// CDF values so the stated relative tolerances hold across the whole range.
class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    BigFloat(double d) { mpfr_init2(v_, kPrec); mpfr_set_d(v_, d, MPFR_RNDN); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, kPrec); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(BigFloat o) {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    explicit operator double() const { return to_double(); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r;
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
    BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
    BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend BigFloat abs_big(const BigFloat& a) {
        BigFloat r;
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat exp_big(const BigFloat& a) {
        BigFloat r;
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat expm1_big(const BigFloat& a) {
        BigFloat r;
        mpfr_expm1(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

private:
    static constexpr mpfr_prec_t kPrec = 256;
    mpfr_t v_;
};

using Quad = BigFloat;

Quad det_ext(std::vector<std::vector<Quad>> a) {
    const std::size_t n = a.size();
    Quad d = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (abs_big(a[i][col]) > abs_big(a[pivot][col])) pivot = i;
        if (a[pivot][col] == Quad(0.0)) return Quad(0.0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            d = -d;
        }
        d *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            Quad f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return d;
}

}  // namespace

double det_double(std::vector<std::vector<double>> a) {
    std::vector<std::vector<Quad>> ext(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) ext[i].assign(a[i].begin(), a[i].end());
    return static_cast<double>(det_ext(std::move(ext)));
}

namespace {

// Parlett-Reid tridiagonalization with pivoting: Pf is the signed product of
// the (2k, 2k+1) entries after elimination. Product form keeps the relative
// error small even when the Pfaffian itself is tiny.
Quad pfaffian_ext(std::vector<std::vector<Quad>> a) {
    const std::size_t n = a.size();
    Quad pf = 1.0;
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t p = k + 1;
        for (std::size_t i = k + 2; i < n; ++i)
            if (abs_big(a[i][k]) > abs_big(a[p][k])) p = i;
        if (a[p][k] == Quad(0.0)) return Quad(0.0);
        if (p != k + 1) {
            std::swap(a[p], a[k + 1]);
            for (std::size_t i = 0; i < n; ++i) std::swap(a[i][p], a[i][k + 1]);
            pf = -pf;
        }
        pf *= a[k][k + 1];
        const Quad piv = a[k + 1][k];
        for (std::size_t i = k + 2; i < n; ++i) {
            Quad f = a[i][k] / piv;
            if (f == Quad(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k + 1][j];
            for (std::size_t j = 0; j < n; ++j) a[j][i] -= f * a[j][k + 1];
        }
    }
    return pf;
}

}  // namespace

double pfaffian(const SkewMatrix& m) {
    const std::size_t n = m.size();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
    std::vector<std::vector<Quad>> a(n, std::vector<Quad>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    return static_cast<double>(pfaffian_ext(std::move(a)));
}

void validate_spec(const ExpLppSpec& spec) {
    if (spec.n == 0) throw std::invalid_argument("spec: n must be positive");
    if (spec.rho.size() != 2 * spec.n) throw std::invalid_argument("spec: need 2n rates");
    for (double r : spec.rho)
        if (!(r > 0)) throw std::invalid_argument("spec: rates must be positive");
    for (std::size_t i = 0; i < spec.rho.size(); ++i)
        for (std::size_t j = i + 1; j < spec.rho.size(); ++j)
            if (std::fabs(spec.rho[i] - spec.rho[j]) < 1e-9)
                throw std::invalid_argument("spec: rates must be pairwise distinct");
    if (spec.v < 0) throw std::invalid_argument("spec: v must be >= 0");
}

namespace {

// (e^{a v} - 1) / a with the a -> 0 limit.
Quad expm1_over(const Quad& a, const Quad& v) { return a == Quad(0.0) ? v : expm1_big(a * v) / a; }

// int_0^v (e^{rx} -+ e^{-rx})(e^{sx} -+ e^{-sx}) dx, sign: -1 sinh-type, +1 cosh-type.
Quad oscillator_integral(const Quad& r, const Quad& s, const Quad& v, int sign) {
    Quad plus = expm1_over(r + s, v) + expm1_over(-r - s, v);
    Quad cross = expm1_over(r - s, v) + expm1_over(s - r, v);
    return sign < 0 ? plus - cross : plus + cross;
}

double det_ratio(const ExpLppSpec& spec, int sign) {
    const std::size_t n = spec.n;
    const Quad v = spec.v;
    std::vector<std::vector<Quad>> num(n, std::vector<Quad>(n));
    std::vector<std::vector<Quad>> den(n, std::vector<Quad>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Quad ri = spec.rho[i], sj = spec.rho[n + j];
            num[i][j] = exp_big(-(v * (ri + sj))) * oscillator_integral(ri, sj, v, sign);
            den[i][j] = Quad(1.0) / (ri + sj);
        }
    Quad d = det_ext(den);
    if (abs_big(d) < Quad(1e-300)) throw std::domain_error("duality: Cauchy denominator near-singular");
    return static_cast<double>(det_ext(num) / d);
}

}  // namespace

double exp_lpp_cdf_det(const ExpLppSpec& spec) {
    validate_spec(spec);
    return det_ratio(spec, -1);
}

double exp_lpp_cdf_pf(const ExpLppSpec& spec) {
    validate_spec(spec);
    const std::size_t N = 2 * spec.n;
    // A_ij = iint_{0<=x<y<=v} e^{-2 rho_i x - 2 rho_j y} dx dy
    //      = [ (1-e^{-2(ri+rj)v})/(2(ri+rj)) - e^{-2 rj v} (1-e^{-2 ri v})/(2 ri) ] / (2 rj),
    // and expm1_over(-2a, v) = (1-e^{-2av})/(2a).
    const Quad v = spec.v;
    const Quad two(2.0);
    auto wedge = [&](const Quad& ri, const Quad& rj) {
        Quad inner = expm1_over(-(two * (ri + rj)), v) -
                     exp_big(-(two * rj * v)) * expm1_over(-(two * ri), v);
        return inner / (two * rj);
    };
    std::vector<std::vector<Quad>> K(N, std::vector<Quad>(N, Quad(0.0)));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            if (i == j) continue;
            Quad ri = spec.rho[i], rj = spec.rho[j];
            K[i][j] = Quad(4.0) * ri * rj * (wedge(ri, rj) - wedge(rj, ri));
        }
    Quad den = 1.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            den *= (Quad(spec.rho[i]) - Quad(spec.rho[j])) / (Quad(spec.rho[i]) + Quad(spec.rho[j]));
    if (abs_big(den) < Quad(1e-300)) throw std::domain_error("duality: Schur Pfaffian near-singular");
    return static_cast<double>(pfaffian_ext(K) / den);
}

double exp_sym_lpp_cdf(const ExpLppSpec& spec) {
    validate_spec(spec);
    return 0.5 * (det_ratio(spec, -1) + det_ratio(spec, +1));
}

double exp_lpp_cdf_det_scaled(const ExpLppSpec& spec, double fbar, double sigma) {
    ExpLppSpec scaled = spec;
    double n = static_cast<double>(spec.n);
    scaled.v = fbar * n + sigma * std::cbrt(n);
    return exp_lpp_cdf_det(scaled);
}

double schur_pfaffian_product(const std::vector<double>& rho) {
    double prod = 1.0;
    for (std::size_t i = 0; i < rho.size(); ++i)
        for (std::size_t j = i + 1; j < rho.size(); ++j) prod *= (rho[i] - rho[j]) / (rho[i] + rho[j]);
    return prod;
}

double cauchy_det_product(const std::vector<double>& rho) {
    const std::size_t n = rho.size() / 2;
    double num = 1.0, den = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            num *= (rho[i] - rho[j]) * (rho[n + i] - rho[n + j]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) den *= (rho[i] + rho[n + j]);
    return num / den;
}

// ---------------------------------------------------------------------------
// Andreief / de Bruijn checks with exact exponential-polynomial integration.
// ---------------------------------------------------------------------------

namespace {

// Sum of coef * x^power * e^{rate x} terms, closed under integration.
struct ExpPoly {
    struct Term {
        double coef;
        double rate;
        int power;
    };
    std::vector<Term> terms;

    void add(double coef, double rate, int power) {
        for (auto& t : terms)
            if (t.power == power && std::fabs(t.rate - rate) < 1e-12) {
                t.coef += coef;
                return;
            }
        terms.push_back({coef, rate, power});
    }

    double value(double x) const {
        double s = 0.0;
        for (const auto& t : terms) s += t.coef * std::pow(x, t.power) * std::exp(t.rate * x);
        return s;
    }
};

// int_0^t P(x) e^{c x} dx as an ExpPoly in t, using the closed form
// int x^m e^{ax} dx = e^{ax} sum_{k=0}^m (-1)^{m-k} (m!/k!) x^k / a^{m-k+1}.
ExpPoly integrate_with_factor(const ExpPoly& p, double c) {
    ExpPoly anti;
    for (const auto& t : p.terms) {
        double a = t.rate + c;
        if (std::fabs(a) < 1e-12) a = 0.0;
        if (a == 0.0) {
            anti.add(t.coef / (t.power + 1), 0.0, t.power + 1);
            continue;
        }
        double falling = 1.0;  // m!/k!, built as k descends
        for (int k = t.power; k >= 0; --k) {
            anti.add(t.coef * falling * ((t.power - k) % 2 == 0 ? 1.0 : -1.0) /
                         std::pow(a, t.power - k + 1),
                     a, k);
            falling *= k;
        }
    }
    ExpPoly result;
    result.terms = anti.terms;
    result.add(-anti.value(0.0), 0.0, 0);
    return result;
}

// int_{0 <= x_1 <= ... <= x_n <= V} prod e^{-c_i x_i} dx.
double ordered_simplex_integral(const std::vector<double>& c, double V) {
    ExpPoly acc;
    acc.add(1.0, 0.0, 0);
    for (double ci : c) acc = integrate_with_factor(acc, -ci);
    return acc.value(V);
}

double factorial_sign(const std::vector<std::size_t>& perm) {
    std::vector<bool> seen(perm.size(), false);
    double sign = 1.0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

void for_each_permutation(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    do {
        f(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

double identity_check_andreief(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.5, 2.5);
    const double V = 1.0;
    std::vector<double> a(n), b(n);
    for (auto& x : a) x = dist(rng);
    for (auto& x : b) x = dist(rng);

    // LHS: int over the ordered simplex of det(f_j(x_i)) det(g_j(x_i)).
    double lhs = 0.0;
    for_each_permutation(n, [&](const std::vector<std::size_t>& sigma) {
        for_each_permutation(n, [&](const std::vector<std::size_t>& tau) {
            std::vector<double> rates(n);
            for (std::size_t i = 0; i < n; ++i) rates[i] = a[sigma[i]] + b[tau[i]];
            lhs += factorial_sign(sigma) * factorial_sign(tau) * ordered_simplex_integral(rates, V);
        });
    });

    std::vector<std::vector<double>> pair_int(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            pair_int[i][j] = a[i] + b[j] == 0.0 ? V : std::expm1(-(a[i] + b[j]) * V) / -(a[i] + b[j]);
    double rhs = det_double(pair_int);
    return std::fabs(lhs - rhs);
}

double identity_check_debruijn(std::size_t n, std::uint64_t seed) {
    if (n % 2 != 0) throw std::invalid_argument("debruijn check: even n required");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.5, 2.5);
    const double V = 1.0;
    std::vector<double> a(n);
    for (auto& x : a) x = dist(rng);

    double lhs = 0.0;
    for_each_permutation(n, [&](const std::vector<std::size_t>& sigma) {
        std::vector<double> rates(n);
        for (std::size_t i = 0; i < n; ++i) rates[i] = a[sigma[i]];
        lhs += factorial_sign(sigma) * ordered_simplex_integral(rates, V);
    });

    // B_ij = iint_{0<=x<y<=V} phi_i(x) phi_j(y); RHS = Pf(B_ij - B_ji).
    auto wedge = [&](double ai, double aj) {
        ExpPoly inner;
        inner.add(1.0, 0.0, 0);
        inner = integrate_with_factor(inner, -ai);  // int_0^y e^{-ai x} dx
        return integrate_with_factor(inner, -aj).value(V);
    };
    std::vector<std::vector<double>> K(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) K[i][j] = wedge(a[i], a[j]) - wedge(a[j], a[i]);
    double rhs = pfaffian(SkewMatrix(K));
    return std::fabs(lhs - rhs);
}

// ---------------------------------------------------------------------------
// Monte Carlo oracles
// ---------------------------------------------------------------------------

namespace {

double square_lpp(const std::vector<std::vector<double>>& w) {
    const std::size_t N = w.size();
    std::vector<double> prev(N + 1, -1.0), cur(N + 1, -1.0);
    for (std::size_t i = 1; i <= N; ++i) {
        std::fill(cur.begin(), cur.end(), -1.0);
        for (std::size_t j = 1; j <= N; ++j) {
            double from = std::max(prev[j], cur[j - 1]);
            if (i == 1 && j == 1) from = 0.0;
            if (from < 0) continue;
            cur[j] = from + w[i - 1][j - 1];
        }
        std::swap(prev, cur);
    }
    return prev[N];
}

}  // namespace

double exp_antidiag_mc(const ExpLppSpec& spec, std::uint64_t trials, std::uint64_t seed) {
    validate_spec(spec);
    const std::size_t N = 2 * spec.n;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(std::nextafter(0.0, 1.0), 1.0);
    std::vector<std::vector<double>> w(N, std::vector<double>(N, 0.0));
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (std::size_t i = 1; i <= N; ++i)
            for (std::size_t j = 1; i + j <= N + 1; ++j) {
                double rate = spec.rho[N - i] + spec.rho[j - 1];
                // Antidiagonal weights are the limit of the even geometric law
                // (twice a rate-2rho_j exponential), i.e. rate rho_j here.
                if (i + j == N + 1) rate *= 0.5;
                double x = -std::log(u01(rng)) / rate;
                w[i - 1][j - 1] = x;
                if (i + j < N + 1) w[N - j][N - i] = x;
            }
        if (square_lpp(w) <= 2.0 * spec.v) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

double exp_diagsym_mc(const ExpLppSpec& spec, std::uint64_t trials, std::uint64_t seed) {
    validate_spec(spec);
    const std::size_t N = 2 * spec.n;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(std::nextafter(0.0, 1.0), 1.0);
    std::vector<std::vector<double>> w(N, std::vector<double>(N, 0.0));
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (std::size_t i = 1; i <= N; ++i)
            for (std::size_t j = i; j <= N; ++j) {
                double x = i == j ? 0.0 : -std::log(u01(rng)) / (spec.rho[i - 1] + spec.rho[j - 1]);
                w[i - 1][j - 1] = x;
                w[j - 1][i - 1] = x;
            }
        if (square_lpp(w) <= 2.0 * spec.v) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace charlab
