#include "charlab/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace charlab {

std::string char_family_name(CharFamily f) {
    switch (f) {
        case CharFamily::SchurA: return "schur";
        case CharFamily::SpEven: return "sp_even";
        case CharFamily::SpOdd: return "sp_odd";
        case CharFamily::SoEven: return "so_even";
        case CharFamily::SoOddSigned: return "so_odd";
        case CharFamily::SoOddSplit: return "so_odd_split";
        case CharFamily::CBInterp: return "cb";
        case CharFamily::DBInterp: return "db";
    }
    return "?";
}

std::optional<CharFamily> char_family_from_name(const std::string& s) {
    if (s == "schur" || s == "a") return CharFamily::SchurA;
    if (s == "sp_even" || s == "sp") return CharFamily::SpEven;
    if (s == "sp_odd") return CharFamily::SpOdd;
    if (s == "so_even") return CharFamily::SoEven;
    if (s == "so_odd") return CharFamily::SoOddSigned;
    if (s == "so_odd_split") return CharFamily::SoOddSplit;
    if (s == "cb") return CharFamily::CBInterp;
    if (s == "db") return CharFamily::DBInterp;
    return std::nullopt;
}

namespace {

int sign_of(long long v) { return v < 0 ? -1 : +1; }

void check_shape(CharFamily fam, const SignedPartition& lambda, std::size_t n) {
    auto need = [&](bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(std::string("char shape: ") + msg);
    };
    const std::size_t parts = lambda.declared_length();
    switch (fam) {
        case CharFamily::SchurA:
        case CharFamily::SpEven:
            need(lambda.sign() > 0 && lambda.on_integer_grid(), "unsigned integer partition required");
            need(parts <= n, "too many parts");
            break;
        case CharFamily::SpOdd:
            need(lambda.sign() > 0 && lambda.on_integer_grid(), "unsigned integer partition required");
            need(parts <= n + 1, "too many parts");
            break;
        case CharFamily::SoEven:
            need(parts <= n, "too many parts");
            if (lambda.on_half_grid()) need(parts == n, "half-grid shape needs n parts");
            break;
        case CharFamily::SoOddSigned:
        case CharFamily::SoOddSplit:
        case CharFamily::CBInterp:
        case CharFamily::DBInterp:
            need(lambda.sign() > 0, "unsigned shape required");
            need(parts <= n, "too many parts");
            if (lambda.on_half_grid()) need(parts == n, "half-grid shape needs n parts");
            break;
    }
}

// Row sums of the scan's doubled entries, abs_mode for orthogonal weights.
void row_sums(const PatternScan& s, bool abs_mode, std::vector<long long>& out) {
    out.assign(s.height() + 1, 0);
    for (std::size_t i = 1; i <= s.height(); ++i) {
        long long acc = 0;
        for (std::size_t j = 1; j <= s.row_len(i); ++j) {
            long long v = s.entry(i, j);
            acc += abs_mode ? std::llabs(v) : v;
        }
        out[i] = acc;
    }
}

// Exponent vector (doubled) of the orthogonal weight monomial
// x_1^{z_11} prod_i x_i^{sign*sign*(type_{2i-1}-type_{2i-2})}.
void orthogonal_exponents(const PatternScan& s, std::size_t n, std::vector<int>& e,
                          std::vector<long long>& sums) {
    row_sums(s, /*abs_mode=*/true, sums);
    e[0] = static_cast<int>(s.entry(1, 1));
    for (std::size_t i = 2; i <= n; ++i) {
        long long type_prev = sums[2 * i - 2] - sums[2 * i - 3];
        long long type_cur = sums[2 * i - 1] - sums[2 * i - 2];
        int sg = sign_of(s.entry(2 * i - 3, i - 1)) * sign_of(s.entry(2 * i - 1, i));
        e[i - 1] = static_cast<int>(sg * (type_cur - type_prev));
    }
}

LaurentPoly schur_poly(const SignedPartition& lambda, std::size_t n) {
    LaurentPoly out(n);
    if (n == 0) return LaurentPoly::constant(0, 1);
    PatternScan scan(PatternFamily::GT, n, lambda);
    std::vector<int> e(n);
    std::vector<long long> sums;
    scan.run([&](const PatternScan& s) {
        row_sums(s, false, sums);
        for (std::size_t i = 1; i <= n; ++i) e[i - 1] = static_cast<int>(sums[i] - sums[i - 1]);
        out.add_term(e, 1);
    });
    return out;
}

LaurentPoly sp_poly(const SignedPartition& lambda, std::size_t n, bool odd) {
    const std::size_t height = odd ? 2 * n + 1 : 2 * n;
    const std::size_t arity = odd ? n + 1 : n;
    if (height == 0) return LaurentPoly::constant(0, 1);
    LaurentPoly out(arity);
    PatternScan scan(PatternFamily::Symplectic, height, lambda);
    std::vector<int> e(arity);
    std::vector<long long> sums;
    scan.run([&](const PatternScan& s) {
        row_sums(s, false, sums);
        for (std::size_t i = 1; i <= n; ++i)
            e[i - 1] = static_cast<int>((sums[2 * i] - sums[2 * i - 1]) -
                                        (sums[2 * i - 1] - sums[2 * i - 2]));
        if (odd) e[n] = static_cast<int>(sums[2 * n + 1] - sums[2 * n]);
        out.add_term(e, 1);
    });
    return out;
}

LaurentPoly so_poly(const SignedPartition& lambda, std::size_t n, bool odd_group) {
    // odd_group: SO_{2n+1} over height-2n orthogonal patterns;
    // otherwise SO_{2n} over height-(2n-1) patterns.
    const std::size_t height = odd_group ? 2 * n : 2 * n - 1;
    if (n == 0) return LaurentPoly::constant(0, 1);
    LaurentPoly out(n);
    PatternScan scan(PatternFamily::Orthogonal, height, lambda);
    std::vector<int> e(n);
    std::vector<long long> sums;
    scan.run([&](const PatternScan& s) {
        orthogonal_exponents(s, n, e, sums);
        out.add_term(e, 1);
    });
    return out;
}

LaurentPoly so_odd_split_poly(const SignedPartition& lambda, std::size_t n, bool with_beta) {
    const std::size_t arity = with_beta ? n + 1 : n;
    if (n == 0) return LaurentPoly::constant(arity, 1);
    LaurentPoly out(arity);
    PatternScan scan(PatternFamily::SplitOrthogonal, 2 * n, lambda);
    const int bulk_par = lambda.on_half_grid() ? 1 : 0;
    std::vector<int> e(arity);
    std::vector<long long> sums;
    scan.run([&](const PatternScan& s) {
        row_sums(s, false, sums);
        int atypical = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            e[i - 1] = static_cast<int>((sums[2 * i] - sums[2 * i - 1]) -
                                        (sums[2 * i - 1] - sums[2 * i - 2]));
            if ((s.entry(2 * i - 1, i) & 1) != bulk_par) ++atypical;
        }
        if (with_beta) e[n] = 2 * atypical;
        out.add_term(e, 1);
    });
    return out;
}

LaurentPoly db_poly(const SignedPartition& lambda, std::size_t n) {
    if (n == 0) return LaurentPoly::constant(1, 1);
    LaurentPoly out(n + 1);
    PatternScan scan(PatternFamily::Orthogonal, 2 * n, lambda);
    std::vector<int> e(n + 1);
    std::vector<long long> sums;
    long long lambda_total = 0;
    for (std::size_t i = 1; i <= n; ++i)
        lambda_total += static_cast<long long>(lambda.part_or_zero1(i).doubled().get_si());
    scan.run([&](const PatternScan& s) {
        orthogonal_exponents(s, n, e, sums);
        long long row = 0;  // signed sum of row 2n-1
        for (std::size_t j = 1; j <= s.row_len(2 * n - 1); ++j) row += s.entry(2 * n - 1, j);
        e[n] = static_cast<int>(lambda_total - row);
        out.add_term(e, 1);
    });
    return out;
}

Rat xpow(const Rat& root, const HalfInt& e) {
    long d = e.doubled().get_si();
    return rat_pow(root, d);
}

Rat det_with_exponents(const SqrtPoint& at, const std::vector<HalfInt>& exps, int combo) {
    // combo: +1 -> x^e + x^-e, -1 -> x^e - x^-e, 0 -> x^e
    const std::size_t n = exps.size();
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat up = xpow(at.roots[j], exps[i]);
            if (combo == 0)
                m.at(i, j) = up;
            else {
                Rat dn = xpow(at.roots[j], exps[i].negated());
                m.at(i, j) = combo > 0 ? Rat(up + dn) : Rat(up - dn);
            }
        }
    return det(m);
}

std::vector<HalfInt> staircase(const SignedPartition& lambda, std::size_t n, const HalfInt& offset) {
    // lambda_i + n - i + offset, 1-based i
    std::vector<HalfInt> e;
    e.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        e.push_back(lambda.part_or_zero1(i) + HalfInt(static_cast<long>(n - i)) + offset);
    return e;
}

Rat weyl_schur(const SignedPartition& lambda, const SqrtPoint& at) {
    std::size_t n = at.size();
    Rat den = det_with_exponents(at, staircase(SignedPartition(), n, HalfInt(0)), 0);
    if (den == 0) throw DenominatorZero("type A denominator vanishes");
    return det_with_exponents(at, staircase(lambda, n, HalfInt(0)), 0) / den;
}

Rat weyl_sp_even(const SignedPartition& lambda, const SqrtPoint& at) {
    std::size_t n = at.size();
    Rat den = det_with_exponents(at, staircase(SignedPartition(), n, HalfInt(1)), -1);
    if (den == 0) throw DenominatorZero("type C denominator vanishes");
    return det_with_exponents(at, staircase(lambda, n, HalfInt(1)), -1) / den;
}

Rat weyl_sp_odd(const SignedPartition& lambda, const SqrtPoint& at, const Rat& y) {
    const std::size_t n = at.size();
    if (y == 0) throw std::invalid_argument("sp_odd: y must be nonzero");
    auto build = [&](const SignedPartition& mu) {
        RationalMatrix m(n + 1);
        for (std::size_t i = 1; i <= n + 1; ++i) {
            HalfInt a = mu.part_or_zero1(i) + HalfInt(static_cast<long>(n + 1 - i));  // mu_i + n - i + 1
            for (std::size_t j = 0; j < n; ++j) {
                Rat hi = xpow(at.roots[j], a + HalfInt(1)) - xpow(at.roots[j], (a + HalfInt(1)).negated());
                Rat lo = xpow(at.roots[j], a) - xpow(at.roots[j], a.negated());
                m.at(i - 1, j) = hi - lo / y;
            }
            long d = a.doubled().get_si();
            m.at(i - 1, n) = rat_pow(y, d / 2);
        }
        return det(m);
    };
    Rat den = build(SignedPartition());
    if (den == 0) throw DenominatorZero("odd symplectic denominator vanishes");
    return build(lambda) / den;
}

Rat weyl_so_even(const SignedPartition& lambda, const SqrtPoint& at) {
    std::size_t n = at.size();
    if (n == 0) return Rat(1);  // so^(0) of the empty shape; det- of a 0x0 matrix is not 0
    Rat den = det_with_exponents(at, staircase(SignedPartition(), n, HalfInt(0)), +1);
    if (den == 0) throw DenominatorZero("type D denominator vanishes");
    auto exps = staircase(lambda, n, HalfInt(0));
    Rat plus = det_with_exponents(at, exps, +1);
    Rat minus = det_with_exponents(at, exps, -1);
    return lambda.sign() > 0 ? Rat((plus + minus) / den) : Rat((plus - minus) / den);
}

Rat weyl_so_odd(const SignedPartition& lambda, const SqrtPoint& at) {
    std::size_t n = at.size();
    Rat den = det_with_exponents(at, staircase(SignedPartition(), n, HalfInt::half()), -1);
    if (den == 0) throw DenominatorZero("type B denominator vanishes");
    return det_with_exponents(at, staircase(lambda, n, HalfInt::half()), -1) / den;
}

Rat weyl_cb(const SignedPartition& lambda, const SqrtPoint& at, const Rat& beta) {
    const std::size_t n = at.size();
    Rat den = det_with_exponents(at, staircase(SignedPartition(), n, HalfInt(1)), -1);
    if (den == 0) throw DenominatorZero("type C denominator vanishes");
    RationalMatrix m(n);
    if (!lambda.on_half_grid()) {
        for (std::size_t i = 1; i <= n; ++i) {
            HalfInt b = lambda.part_or_zero1(i) + HalfInt(static_cast<long>(n - i));
            for (std::size_t j = 0; j < n; ++j) {
                Rat hi = xpow(at.roots[j], b + HalfInt(1)) - xpow(at.roots[j], (b + HalfInt(1)).negated());
                Rat lo = xpow(at.roots[j], b) - xpow(at.roots[j], b.negated());
                m.at(i - 1, j) = hi + beta * lo;
            }
        }
    } else {
        for (std::size_t i = 1; i <= n; ++i) {
            HalfInt a = lambda.part_or_zero1(i) + HalfInt(static_cast<long>(n - i)) + HalfInt::half();
            for (std::size_t j = 0; j < n; ++j) {
                Rat osc = xpow(at.roots[j], a) - xpow(at.roots[j], a.negated());
                Rat pref = beta * at.roots[j] + Rat(1) / at.roots[j];
                m.at(i - 1, j) = pref * osc;
            }
        }
    }
    return det(m) / den;
}

// Signed n-partitions interlacing below lambda, with the alpha-weight exponent.
void for_each_db_branch(const SignedPartition& lambda, std::size_t n,
                        const std::function<void(const SignedPartition&, long)>& visit) {
    Grid g = lambda.on_half_grid() ? Grid::Half : Grid::Integer;
    // Enumerate mu with lambda_{i+1} <= mu_i <= lambda_i.
    std::vector<HalfInt> mu(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            for (int delta : {+1, -1}) {
                if (delta < 0 && mu[n - 1] == HalfInt(0)) continue;
                SignedPartition msp(mu, delta);
                HalfInt expo(0);
                for (std::size_t k = 1; k < n; ++k) expo += lambda.part_or_zero1(k) - mu[k - 1];
                expo += lambda.part_or_zero1(n) - msp.last_signed();
                if (!expo.is_integer() || expo.sign() < 0)
                    throw std::logic_error("db branch: exponent not a non-negative integer");
                visit(msp, expo.doubled().get_si() / 2);
            }
            return;
        }
        HalfInt lo = lambda.part_or_zero1(i + 2);
        if (g == Grid::Half && lo == HalfInt(0)) lo = HalfInt::half();
        HalfInt hi = lambda.part_or_zero1(i + 1);
        for (Int v = lo.doubled(); v <= hi.doubled(); v += 2) {
            mu[i] = HalfInt::from_doubled(v);
            rec(i + 1);
        }
    };
    if (n == 0) {
        visit(SignedPartition(), 0);
        return;
    }
    rec(0);
}

}  // namespace

LaurentPoly char_poly(CharFamily fam, const SignedPartition& lambda, std::size_t n) {
    check_shape(fam, lambda, n);
    switch (fam) {
        case CharFamily::SchurA: return schur_poly(lambda, n);
        case CharFamily::SpEven: return sp_poly(lambda, n, false);
        case CharFamily::SpOdd: return sp_poly(lambda, n, true);
        case CharFamily::SoEven: return so_poly(lambda, n, false);
        case CharFamily::SoOddSigned: return so_poly(lambda, n, true);
        case CharFamily::SoOddSplit: return so_odd_split_poly(lambda, n, false);
        case CharFamily::CBInterp: return so_odd_split_poly(lambda, n, true);
        case CharFamily::DBInterp: return db_poly(lambda, n);
    }
    throw std::logic_error("unreachable");
}

Rat weyl_eval(CharFamily fam, const SignedPartition& lambda, const SqrtPoint& at, const Rat& param) {
    check_shape(fam, lambda, at.size() + 0);
    switch (fam) {
        case CharFamily::SchurA: return weyl_schur(lambda, at);
        case CharFamily::SpEven: return weyl_sp_even(lambda, at);
        case CharFamily::SpOdd: return weyl_sp_odd(lambda, at, param);
        case CharFamily::SoEven: return weyl_so_even(lambda, at);
        case CharFamily::SoOddSigned:
        case CharFamily::SoOddSplit: return weyl_so_odd(lambda, at);
        case CharFamily::CBInterp: return weyl_cb(lambda, at, param);
        case CharFamily::DBInterp: {
            Rat sum(0);
            for_each_db_branch(lambda, at.size(), [&](const SignedPartition& mu, long k) {
                Rat coeff = rat_pow(param, k);
                if (coeff != 0 || k == 0) sum += coeff * weyl_so_even(mu, at);
            });
            return sum;
        }
    }
    throw std::logic_error("unreachable");
}

Rat schur_dimension(const SignedPartition& lambda, std::size_t n) {
    // prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)
    Rat v(1);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            HalfInt diff = lambda.part_or_zero1(i) - lambda.part_or_zero1(j);
            long num = diff.doubled().get_si() / 2 + static_cast<long>(j - i);
            v *= make_rat(Int(num), Int(static_cast<long>(j - i)));
        }
    return v;
}

LaurentPoly sp_even_or_zero(const std::vector<HalfInt>& parts, std::size_t n) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].sign() < 0) return LaurentPoly::zero(n);
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return LaurentPoly::zero(n);
    }
    return char_poly(CharFamily::SpEven, SignedPartition(parts), n);
}

LaurentPoly schur_or_zero(const std::vector<HalfInt>& parts, std::size_t n) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].sign() < 0) return LaurentPoly::zero(n);
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return LaurentPoly::zero(n);
    }
    return char_poly(CharFamily::SchurA, SignedPartition(parts), n);
}

LaurentPoly cb_via_sp(const SignedPartition& lambda, std::size_t n) {
    check_shape(CharFamily::CBInterp, lambda, n);
    const std::size_t arity = n + 1;
    std::vector<std::size_t> slots(n);
    for (std::size_t i = 0; i < n; ++i) slots[i] = i;
    LaurentPoly out(arity);
    if (!lambda.on_half_grid()) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<HalfInt> parts;
            int k = 0;
            for (std::size_t i = 0; i < n; ++i) {
                int bit = (mask >> i) & 1;
                k += bit;
                parts.push_back(lambda.part_or_zero1(i + 1) - HalfInt(bit));
            }
            LaurentPoly sp = sp_even_or_zero(parts, n);
            if (sp.is_zero()) continue;
            LaurentPoly::Exps shift(arity, 0);
            shift[n] = 2 * k;
            out += sp.embedded(arity, slots).shifted(shift);
        }
    } else {
        std::vector<HalfInt> parts;
        for (std::size_t i = 1; i <= n; ++i) parts.push_back(lambda.part_or_zero1(i) - HalfInt::half());
        LaurentPoly acc = char_poly(CharFamily::SpEven, SignedPartition(parts), n).embedded(arity, slots);
        for (std::size_t i = 0; i < n; ++i) {
            LaurentPoly factor(arity);
            LaurentPoly::Exps e(arity, 0);
            e[i] = 1;
            e[n] = 2;
            factor.add_term(e, 1);  // beta x_i^{1/2}
            e[i] = -1;
            e[n] = 0;
            factor.add_term(e, 1);  // x_i^{-1/2}
            acc = acc * factor;
        }
        out = acc;
    }
    return out;
}

LaurentPoly db_branching_poly(const SignedPartition& lambda, std::size_t n) {
    check_shape(CharFamily::DBInterp, lambda, n);
    const std::size_t arity = n + 1;
    std::vector<std::size_t> slots(n);
    for (std::size_t i = 0; i < n; ++i) slots[i] = i;
    LaurentPoly out(arity);
    for_each_db_branch(lambda, n, [&](const SignedPartition& mu, long k) {
        LaurentPoly so = char_poly(CharFamily::SoEven, mu, n);
        LaurentPoly::Exps shift(arity, 0);
        shift[n] = static_cast<int>(2 * k);
        out += so.embedded(arity, slots).shifted(shift);
    });
    return out;
}

Rat db_rect_via_so(const HalfInt& u, std::size_t n, const SqrtPoint& at, const Rat& alpha) {
    if (at.size() != n) throw std::invalid_argument("db_rect_via_so: point arity mismatch");
    if (alpha <= 0) throw std::invalid_argument("db_rect_via_so: alpha must be positive");
    Rat alpha_to_u;
    if (u.is_integer()) {
        alpha_to_u = rat_pow(alpha, u.doubled().get_si() / 2);
    } else {
        auto root = rat_sqrt(alpha);
        if (!root) throw std::domain_error("db_rect_via_so: alpha^u off-grid (alpha is not a square)");
        alpha_to_u = rat_pow(*root, u.doubled().get_si());
    }
    SignedPartition rect = SignedPartition::rectangle(n + 1, u);
    if (auto inv_root = rat_sqrt(Rat(1) / alpha)) {
        SqrtPoint ext(at.roots);
        ext.roots.push_back(*inv_root);
        return alpha_to_u * weyl_so_even(rect, ext);
    }
    if (!u.is_integer()) throw std::domain_error("db_rect_via_so: alpha^{-1/2} off-grid");
    // Integer-grid rectangular shapes only carry integer powers of the extra
    // variable, so it can take the plain value 1/alpha.
    LaurentPoly so = char_poly(CharFamily::SoEven, rect, n + 1);
    return alpha_to_u * so.eval(at, Rat(1) / alpha);
}

std::pair<LaurentPoly, LaurentPoly> schur_shift_plus(const SignedPartition& lambda, long t,
                                                     std::size_t n) {
    if (t < 0) throw std::invalid_argument("schur_shift_plus: t must be >= 0");
    std::vector<HalfInt> shifted;
    for (std::size_t i = 1; i <= n; ++i) shifted.push_back(lambda.part_or_zero1(i) + HalfInt(t));
    LaurentPoly lhs = char_poly(CharFamily::SchurA, SignedPartition(shifted), n);
    LaurentPoly rhs = char_poly(CharFamily::SchurA, lambda, n)
                          .shifted(LaurentPoly::Exps(n, static_cast<int>(2 * t)));
    return {lhs, rhs};
}

std::pair<LaurentPoly, LaurentPoly> schur_shift_minus(const SignedPartition& lambda, long u,
                                                      std::size_t n) {
    if (HalfInt(u) < lambda.part_or_zero1(1))
        throw std::invalid_argument("schur_shift_minus: u must be >= lambda_1");
    std::vector<HalfInt> comp;
    for (std::size_t i = n; i >= 1; --i) comp.push_back(HalfInt(u) - lambda.part_or_zero1(i));
    LaurentPoly lhs = char_poly(CharFamily::SchurA, SignedPartition(comp), n);
    LaurentPoly rhs = char_poly(CharFamily::SchurA, lambda, n)
                          .inverted_all()
                          .shifted(LaurentPoly::Exps(n, static_cast<int>(2 * u)));
    return {lhs, rhs};
}

Rat koornwinder_det_value(const SignedPartition& lambda, const SqrtPoint& at, const Rat& a,
                          const Rat& b) {
    const std::size_t n = at.size();
    Rat den = det_with_exponents(at, staircase(SignedPartition(), n, HalfInt(1)), -1);
    if (den == 0) throw DenominatorZero("type C denominator vanishes");
    RationalMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i) {
        HalfInt e = lambda.part_or_zero1(i) + HalfInt(static_cast<long>(n - i));  // lambda_i + n - i
        for (std::size_t j = 0; j < n; ++j) {
            Rat x = at.value(j);
            Rat up = xpow(at.roots[j], e - HalfInt(1)) * (x - a) * (x - b);
            Rat dn = xpow(at.roots[j], (e + HalfInt(1)).negated()) * (a * x - 1) * (b * x - 1);
            m.at(i - 1, j) = up - dn;
        }
    }
    return det(m) / den;
}

SqrtPoint random_sqrt_point(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> dist(1, 97);
    std::vector<Rat> roots;
    while (roots.size() < n) {
        Rat r = make_rat(dist(rng), dist(rng));
        if (r == 1) continue;
        bool dup = false;
        for (const auto& q : roots)
            if (q == r || q * r == 1) dup = true;
        if (!dup) roots.push_back(r);
    }
    return SqrtPoint(std::move(roots));
}

std::vector<SignedPartition> admissible_shapes(CharFamily fam, std::size_t n, long max_part) {
    std::vector<SignedPartition> out;
    const std::size_t parts = fam == CharFamily::SpOdd ? n + 1 : n;
    const bool signed_ok = fam == CharFamily::SoEven;
    const bool half_ok = fam == CharFamily::SoEven || fam == CharFamily::SoOddSigned ||
                         fam == CharFamily::SoOddSplit || fam == CharFamily::CBInterp ||
                         fam == CharFamily::DBInterp;
    partitions_in_box(parts, HalfInt(max_part), Grid::Integer, signed_ok,
                      [&](const SignedPartition& p) { out.push_back(p); });
    if (half_ok) {
        partitions_in_box(parts, HalfInt::from_doubled(2 * max_part - 1), Grid::Half, signed_ok,
                          [&](const SignedPartition& p) { out.push_back(p); });
    }
    return out;
}

}  // namespace charlab
