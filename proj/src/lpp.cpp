#include "charlab/lpp.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace charlab {

namespace {

void check_common(const LppModel& m) {
    if (m.N == 0) throw std::invalid_argument("lpp: N must be positive");
    if (m.p.size() != m.N) throw std::invalid_argument("lpp: need one parameter per row");
    for (const auto& q : m.p)
        if (q <= 0 || q >= 1) throw std::invalid_argument("lpp: p_i must lie in (0,1)");
    if (m.beta < 0) throw std::invalid_argument("lpp: beta must be >= 0");
    if (m.alpha < 0) throw std::invalid_argument("lpp: alpha must be >= 0");
    for (const auto& q : m.p)
        if (m.alpha * q >= 1) throw std::invalid_argument("lpp: alpha p_j must be < 1");
}

void check_palindrome(const LppModel& m) {
    if (m.N % 2 != 0) throw std::invalid_argument("lpp: double symmetry needs even N");
    for (std::size_t i = 0; i < m.N; ++i)
        if (m.p[i] != m.p[m.N - 1 - i])
            throw std::invalid_argument("lpp: double symmetry needs palindromic parameters");
}

std::vector<Rat> model_roots(const LppModel& m) {
    std::vector<Rat> r;
    r.reserve(m.N);
    for (const auto& q : m.p) {
        auto s = rat_sqrt(q);
        if (!s) throw std::domain_error("lpp: exact formulas need each p_i to be a rational square");
        r.push_back(*s);
    }
    return r;
}

LppModel square_equivalent(const LppModel& m) {
    LppModel sq = m;
    if (m.sym == LppSymmetry::PointToLine) sq.sym = LppSymmetry::Antidiag;
    if (m.sym == LppSymmetry::PointToLineSym) sq.sym = LppSymmetry::DoubleSym;
    return sq;
}

bool is_point_to_line(const LppModel& m) {
    return m.sym == LppSymmetry::PointToLine || m.sym == LppSymmetry::PointToLineSym;
}

// ---- shared free-cell geometry --------------------------------------------

enum class CellKind { Inner, AntidiagSquare, AntidiagHalved, DiagGeom };

struct FreeCell {
    std::size_t i, j;
    CellKind kind;
    Rat p;  // geometric parameter: inner p_a p_b, diagonal alpha p_j, antidiagonal p_j
};

std::vector<FreeCell> free_cells(const LppModel& m) {
    std::vector<FreeCell> cells;
    const std::size_t N = m.N;
    auto inner = [&](std::size_t i, std::size_t j, const Rat& q) {
        cells.push_back({i, j, CellKind::Inner, q});
    };
    switch (m.sym) {
        case LppSymmetry::Antidiag:
        case LppSymmetry::PointToLine:
            for (std::size_t i = 1; i <= N; ++i)
                for (std::size_t j = 1; i + j <= N + 1; ++j) {
                    if (i + j < N + 1)
                        inner(i, j, m.p[N - i] * m.p[j - 1]);
                    else
                        cells.push_back({i, j,
                                         m.sym == LppSymmetry::Antidiag ? CellKind::AntidiagSquare
                                                                        : CellKind::AntidiagHalved,
                                         m.p[j - 1]});
                }
            break;
        case LppSymmetry::Diag:
            for (std::size_t i = 1; i <= N; ++i)
                for (std::size_t j = i; j <= N; ++j) {
                    if (i < j)
                        inner(i, j, m.p[i - 1] * m.p[j - 1]);
                    else
                        cells.push_back({i, j, CellKind::DiagGeom, m.alpha * m.p[j - 1]});
                }
            break;
        case LppSymmetry::DoubleSym:
        case LppSymmetry::PointToLineSym:
            for (std::size_t i = 1; i <= N; ++i)
                for (std::size_t j = i; i + j <= N + 1; ++j) {
                    if (i == j)
                        cells.push_back({i, j, CellKind::DiagGeom, m.alpha * m.p[j - 1]});
                    else if (i + j < N + 1)
                        inner(i, j, m.p[i - 1] * m.p[j - 1]);
                    else
                        cells.push_back({i, j,
                                         m.sym == LppSymmetry::DoubleSym ? CellKind::AntidiagSquare
                                                                         : CellKind::AntidiagHalved,
                                         m.p[j - 1]});
                }
            break;
    }
    return cells;
}

// Map an arbitrary array index to the free cell it copies from.
std::pair<std::size_t, std::size_t> canonical_cell(const LppModel& m, std::size_t i, std::size_t j) {
    const std::size_t N = m.N;
    switch (m.sym) {
        case LppSymmetry::Antidiag:
            if (i + j > N + 1) return {N + 1 - j, N + 1 - i};
            return {i, j};
        case LppSymmetry::Diag:
            return {std::min(i, j), std::max(i, j)};
        case LppSymmetry::DoubleSym: {
            auto a = std::min(i, j), b = std::max(i, j);
            if (a + b > N + 1) return {N + 1 - b, N + 1 - a};
            return {a, b};
        }
        case LppSymmetry::PointToLine:
            return {i, j};
        case LppSymmetry::PointToLineSym:
            return {std::min(i, j), std::max(i, j)};
    }
    return {i, j};
}

// Point-to-point DP for square models, point-to-line DP for triangles.
// Entries are doubled values indexed by free-cell position.
long long passage_time(const LppModel& m, const std::vector<std::vector<long long>>& w) {
    const std::size_t N = m.N;
    const bool tri = is_point_to_line(m);
    std::vector<long long> prev, cur;
    long long best_line = 0;
    prev.assign(N + 1, -1);
    for (std::size_t i = 1; i <= N; ++i) {
        std::size_t width = tri ? N + 1 - i : N;
        cur.assign(N + 1, -1);
        for (std::size_t j = 1; j <= width; ++j) {
            long long from = std::max(prev[j], cur[j - 1]);
            if (i == 1 && j == 1) from = 0;
            if (from < 0) continue;
            auto [a, b] = canonical_cell(m, i, j);
            cur[j] = from + w[a - 1][b - 1];
            if (tri && i + j == N + 1) best_line = std::max(best_line, cur[j]);
        }
        std::swap(prev, cur);
    }
    return tri ? best_line : prev[N];
}

// Every free cell must sit on at least one admissible path; this is what
// justifies truncating each cell's support at the threshold.
void assert_cells_on_paths(const LppModel& m, const std::vector<FreeCell>& cells) {
    const std::size_t N = m.N;
    for (const auto& c : cells) {
        bool ok = is_point_to_line(m) ? (c.i + c.j <= N + 1) : (c.i <= N && c.j <= N);
        if (!ok) throw std::logic_error("lpp: free cell not on any admissible path");
    }
}

}  // namespace

LppModel make_antidiag(std::size_t N, std::vector<Rat> p, Rat beta) {
    LppModel m{LppSymmetry::Antidiag, N, std::move(p), std::move(beta), Rat(0)};
    check_common(m);
    return m;
}

LppModel make_diag(std::size_t N, std::vector<Rat> p, Rat alpha) {
    LppModel m{LppSymmetry::Diag, N, std::move(p), Rat(0), std::move(alpha)};
    check_common(m);
    return m;
}

LppModel make_doublesym(std::size_t N, std::vector<Rat> p, Rat alpha, Rat beta) {
    LppModel m{LppSymmetry::DoubleSym, N, std::move(p), std::move(beta), std::move(alpha)};
    check_common(m);
    check_palindrome(m);
    return m;
}

LppModel point_to_line_reduce(const LppModel& square) {
    LppModel m = square;
    switch (square.sym) {
        case LppSymmetry::Antidiag: m.sym = LppSymmetry::PointToLine; break;
        case LppSymmetry::DoubleSym: m.sym = LppSymmetry::PointToLineSym; break;
        default: throw std::invalid_argument("point_to_line_reduce: unsupported symmetry");
    }
    return m;
}

std::optional<CdfFormula> formula_from_name(const std::string& s) {
    if (s == "A" || s == "a") return CdfFormula::A;
    if (s == "B" || s == "b") return CdfFormula::B;
    if (s == "C" || s == "c") return CdfFormula::C;
    if (s == "D" || s == "d") return CdfFormula::D;
    if (s == "E" || s == "e") return CdfFormula::E;
    return std::nullopt;
}

std::string formula_name(CdfFormula f) {
    switch (f) {
        case CdfFormula::A: return "A";
        case CdfFormula::B: return "B";
        case CdfFormula::C: return "C";
        case CdfFormula::D: return "D";
        case CdfFormula::E: return "E";
    }
    return "?";
}

Rat normalization(const LppModel& model) {
    const LppModel m = square_equivalent(model);
    check_common(m);
    Rat c(1);
    switch (m.sym) {
        case LppSymmetry::Antidiag:
            for (std::size_t i = 0; i < m.N; ++i)
                for (std::size_t j = i + 1; j < m.N; ++j) c /= (Rat(1) - m.p[i] * m.p[j]);
            for (std::size_t j = 0; j < m.N; ++j)
                c *= (Rat(1) + m.beta * m.p[j]) / (Rat(1) - m.p[j] * m.p[j]);
            break;
        case LppSymmetry::Diag:
            for (std::size_t i = 0; i < m.N; ++i)
                for (std::size_t j = i + 1; j < m.N; ++j) c /= (Rat(1) - m.p[i] * m.p[j]);
            for (std::size_t j = 0; j < m.N; ++j) c /= (Rat(1) - m.alpha * m.p[j]);
            break;
        case LppSymmetry::DoubleSym: {
            check_palindrome(m);
            const std::size_t n = m.N / 2;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    Rat f = Rat(1) - m.p[i] * m.p[j];
                    c /= f * f;
                }
            for (std::size_t j = 0; j < n; ++j) {
                c *= (Rat(1) + m.beta * m.p[j]) / (Rat(1) - m.p[j] * m.p[j]);
                c /= (Rat(1) - m.alpha * m.p[j]);
            }
            break;
        }
        default: break;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Exact character-formula quantities (the values c * P(L <= 2u)).
// ---------------------------------------------------------------------------

namespace {

// p1^u * p2^u * ... over a root slice (p_i = r_i^2, so p^u = r^doubled(u)).
Rat prod_pow_u(const std::vector<Rat>& roots, std::size_t lo, std::size_t hi, const HalfInt& u) {
    Rat v(1);
    long d = u.doubled().get_si();
    for (std::size_t i = lo; i < hi; ++i) v *= rat_pow(roots[i], d);
    return v;
}

std::vector<Rat> inverted_roots(const std::vector<Rat>& roots, std::size_t lo, std::size_t hi) {
    std::vector<Rat> out;
    out.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) out.push_back(Rat(1) / roots[i]);
    return out;
}

std::vector<Rat> slice(const std::vector<Rat>& roots, std::size_t lo, std::size_t hi) {
    return std::vector<Rat>(roots.begin() + lo, roots.begin() + hi);
}

// Determinant-route evaluation with a pattern-route fallback for points on a
// reflection hyperplane (the formulas stay valid as polynomial evaluations).
Rat char_value(CharFamily fam, const SignedPartition& la, const SqrtPoint& at, const Rat& param) {
    try {
        return weyl_eval(fam, la, at, param);
    } catch (const DenominatorZero&) {
        LaurentPoly poly = char_poly(fam, la, at.size());
        return has_param_var(fam) ? poly.eval(at, param) : poly.eval(at);
    }
}

// SoEven value with an optional extra variable given by plain value; uses the
// Weyl determinant when the extra value has a rational square root, otherwise
// falls back to the pattern generating function (integer shapes only).
Rat so_even_value(const SignedPartition& la, std::vector<Rat> roots,
                  const std::optional<Rat>& extra) {
    if (!extra) return char_value(CharFamily::SoEven, la, SqrtPoint(std::move(roots)), Rat(0));
    if (auto r = rat_sqrt(*extra)) {
        roots.push_back(*r);
        return char_value(CharFamily::SoEven, la, SqrtPoint(std::move(roots)), Rat(0));
    }
    LaurentPoly poly = char_poly(CharFamily::SoEven, la, roots.size() + 1);
    return poly.eval(SqrtPoint(std::move(roots)), *extra);
}

// Schur value at arbitrary rational points (integer exponents only); Weyl
// determinant with a pattern-sum fallback when the Vandermonde vanishes.
Rat schur_value_at(const SignedPartition& la, const std::vector<Rat>& xs) {
    const std::size_t n = xs.size();
    bool distinct = true;
    for (std::size_t i = 0; i < n && distinct; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (xs[i] == xs[j]) {
                distinct = false;
                break;
            }
    if (distinct) {
        RationalMatrix num(n);
        RationalMatrix den(n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                long e = la.part_or_zero1(i).doubled().get_si() / 2 + static_cast<long>(n - i);
                num.at(i - 1, j) = rat_pow(xs[j], e);
                den.at(i - 1, j) = rat_pow(xs[j], static_cast<long>(n - i));
            }
        Rat d = det(den);
        if (d != 0) return det(num) / d;
    }
    Rat sum(0);
    enumerate_patterns(PatternFamily::GT, n, la, [&](const Pattern& z) {
        Rat term(1);
        auto t = pattern_type(z);
        for (std::size_t i = 0; i < n; ++i) term *= rat_pow(xs[i], t[i].doubled().get_si() / 2);
        sum += term;
    });
    return sum;
}

Rat cb_value(const SignedPartition& la, std::vector<Rat> roots, const Rat& beta) {
    return char_value(CharFamily::CBInterp, la, SqrtPoint(std::move(roots)), beta);
}

long alternating_complement(const SignedPartition& la, std::size_t n, const HalfInt& u) {
    // sum_i (-1)^(n-i) (u - lambda_i); a non-negative integer.
    HalfInt s(0);
    for (std::size_t i = 1; i <= n; ++i) {
        HalfInt d = u - la.part_or_zero1(i);
        s += (n - i) % 2 == 0 ? d : d.negated();
    }
    if (!s.is_integer() || s.sign() < 0) throw std::logic_error("alternating complement not in Z>=0");
    return s.doubled().get_si() / 2;
}

Rat quantity_B(const LppModel& m, const HalfInt& u) {
    auto roots = model_roots(m);
    const HalfInt two_u = u + u;
    Rat sum(0);
    if (m.sym == LppSymmetry::Antidiag) {
        partitions_in_box(m.N, two_u, Grid::Integer, false, [&](const SignedPartition& mu) {
            long odd = 0;
            for (const auto& part : mu.parts())
                if ((part.doubled().get_si() / 2) % 2 != 0) ++odd;
            Rat w = rat_pow(m.beta, odd);
            if (w == 0 && odd > 0) return;
            sum += w * char_value(CharFamily::SchurA, mu, SqrtPoint(roots), Rat(0));
        });
        return sum;
    }
    if (m.sym == LppSymmetry::Diag) {
        partitions_in_box(m.N, two_u, Grid::Integer, false, [&](const SignedPartition& mu) {
            long alt = 0;
            for (std::size_t i = 1; i <= m.N; ++i) {
                long v = mu.part_or_zero1(i).doubled().get_si() / 2;
                alt += (i % 2 == 1) ? v : -v;
            }
            Rat w = rat_pow(m.alpha, alt);
            if (w == 0 && alt > 0) return;
            sum += w * char_value(CharFamily::SchurA, mu, SqrtPoint(roots), Rat(0));
        });
        return sum;
    }
    // DoubleSym: the CB-weighted bounded Littlewood sum.
    const std::size_t n = m.N / 2;
    Grid g = u.is_integer() ? Grid::Integer : Grid::Half;
    auto half_roots = slice(roots, 0, n);
    partitions_in_box(n, u, g, false, [&](const SignedPartition& la) {
        long k = alternating_complement(la, n, u);
        Rat w = rat_pow(m.alpha, k);
        if (w == 0 && k > 0) return;
        sum += w * cb_value(la, half_roots, m.beta);
    });
    return prod_pow_u(roots, 0, n, u) * sum;
}

Rat quantity_C(const LppModel& m, const HalfInt& u) {
    auto roots = model_roots(m);
    if (m.sym == LppSymmetry::Antidiag) {
        SignedPartition rect = SignedPartition::rectangle(m.N, u);
        return prod_pow_u(roots, 0, m.N, u) * cb_value(rect, roots, m.beta);
    }
    if (m.sym == LppSymmetry::Diag) {
        if (m.alpha == 0) {
            SignedPartition rect = SignedPartition::rectangle(m.N, u);
            return prod_pow_u(roots, 0, m.N, u) *
                   so_even_value(rect, inverted_roots(roots, 0, m.N), std::nullopt);
        }
        SignedPartition rect = SignedPartition::rectangle(m.N + 1, u);
        Rat alpha_u;
        if (u.is_integer()) {
            alpha_u = rat_pow(m.alpha, u.doubled().get_si() / 2);
        } else {
            auto ra = rat_sqrt(m.alpha);
            if (!ra) throw std::domain_error("lpp: half-integer u needs a square alpha");
            alpha_u = rat_pow(*ra, u.doubled().get_si());
        }
        return alpha_u * prod_pow_u(roots, 0, m.N, u) *
               so_even_value(rect, inverted_roots(roots, 0, m.N), Rat(1) / m.alpha);
    }
    // DoubleSym, beta = 0, integer u: Schur of nearly-rectangular shape.
    if (m.beta != 0) throw std::invalid_argument("lpp: formula C needs beta = 0 for double symmetry");
    if (!u.is_integer()) throw std::invalid_argument("lpp: formula C needs integer u here");
    const std::size_t n = m.N / 2;
    std::vector<HalfInt> parts(n, u);
    parts.resize(2 * n + 1, HalfInt(0));
    std::vector<Rat> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(Rat(1) / m.p[i]);
    for (std::size_t i = 0; i < n; ++i) xs.push_back(m.p[i]);
    xs.push_back(m.alpha);
    Rat prod(1);
    for (std::size_t i = 0; i < n; ++i) prod *= rat_pow(m.p[i], u.doubled().get_si() / 2);
    return prod * schur_value_at(SignedPartition(parts), xs);
}

Rat quantity_D(const LppModel& m, const HalfInt& u, std::size_t n) {
    auto roots = model_roots(m);
    const std::size_t N = m.N;
    Grid g = u.is_integer() ? Grid::Integer : Grid::Half;
    Rat sum(0);
    if (m.sym == LppSymmetry::Antidiag) {
        auto left = slice(roots, 0, n);
        auto right = slice(roots, n, N);
        partitions_in_box(N - n, u, g, false, [&](const SignedPartition& la) {
            SignedPartition big = SignedPartition::with_prefix(2 * n - N, u, la);
            sum += cb_value(big, left, m.beta) * cb_value(la, right, m.beta);
        });
        return prod_pow_u(roots, 0, N, u) * sum;
    }
    if (m.sym == LppSymmetry::Diag) {
        auto left = inverted_roots(roots, 0, n);
        auto right = inverted_roots(roots, n, N);
        if (m.alpha == 0) {
            partitions_in_box(N - n, u, g, true, [&](const SignedPartition& la) {
                SignedPartition big = SignedPartition::with_prefix(2 * n - N, u, la);
                sum += so_even_value(big, left, std::nullopt) * so_even_value(la, right, std::nullopt);
            });
            return prod_pow_u(roots, 0, N, u) * sum;
        }
        partitions_in_box(N - n, u, g, true, [&](const SignedPartition& la) {
            SignedPartition big = SignedPartition::with_prefix(2 * n + 1 - N, u, la);
            sum += so_even_value(big, left, Rat(1) / m.alpha) * so_even_value(la, right, std::nullopt);
        });
        Rat alpha_u;
        if (u.is_integer()) {
            alpha_u = rat_pow(m.alpha, u.doubled().get_si() / 2);
        } else {
            auto ra = rat_sqrt(m.alpha);
            if (!ra) throw std::domain_error("lpp: half-integer u needs a square alpha");
            alpha_u = rat_pow(*ra, u.doubled().get_si());
        }
        return alpha_u * prod_pow_u(roots, 0, N, u) * sum;
    }
    // DoubleSym, beta = 0, integer u: the two-Schur bounded Cauchy sum.
    if (m.beta != 0) throw std::invalid_argument("lpp: formula D needs beta = 0 for double symmetry");
    if (!u.is_integer()) throw std::invalid_argument("lpp: formula D needs integer u here");
    const std::size_t half = m.N / 2;
    std::vector<Rat> xs(m.p.begin(), m.p.begin() + half);
    std::vector<Rat> xs_ext = xs;
    xs_ext.push_back(m.alpha);
    partitions_in_box(half, u, Grid::Integer, false, [&](const SignedPartition& mu) {
        std::vector<HalfInt> ext = mu.parts();
        ext.push_back(HalfInt(0));
        sum += schur_value_at(mu, xs) * schur_value_at(SignedPartition(ext), xs_ext);
    });
    return sum;
}

Rat quantity_E(const LppModel& m, const HalfInt& u, std::size_t n) {
    if (m.sym != LppSymmetry::Antidiag || m.beta != 0)
        throw std::invalid_argument("lpp: formula E needs the antidiagonal model with beta = 0");
    if (!u.is_integer()) throw std::invalid_argument("lpp: formula E is for integer u");
    auto roots = model_roots(m);
    const std::size_t N = m.N;
    const Rat y = m.p[N - 1];
    auto left = slice(roots, 0, n);
    auto right = slice(roots, n, N - 1);
    Rat sum(0);
    partitions_in_box(N - n, u, Grid::Integer, false, [&](const SignedPartition& la) {
        SignedPartition big = SignedPartition::with_prefix(2 * n + 1 - N, u, la);
        Rat a = weyl_eval(CharFamily::SpOdd, big, SqrtPoint(left), y);
        Rat b = weyl_eval(CharFamily::SpOdd, la, SqrtPoint(right), y);
        sum += a * b;
    });
    return prod_pow_u(roots, 0, N - 1, u) * sum;
}

}  // namespace

std::vector<std::size_t> valid_splits(const LppModel& model, CdfFormula f) {
    const LppModel m = square_equivalent(model);
    std::vector<std::size_t> out;
    if (f == CdfFormula::D) {
        if (m.sym == LppSymmetry::Antidiag) {
            for (std::size_t n = (m.N + 1) / 2; n <= m.N; ++n) out.push_back(n);
        } else if (m.sym == LppSymmetry::Diag) {
            std::size_t lo = m.alpha == 0 ? (m.N + 1) / 2 : m.N / 2;
            for (std::size_t n = lo; n <= m.N; ++n) out.push_back(n);
        } else {
            out.push_back(m.N / 2);
        }
    } else if (f == CdfFormula::E) {
        if (m.sym == LppSymmetry::Antidiag && m.beta == 0 && m.N >= 2)
            for (std::size_t n = m.N / 2; n <= m.N - 1; ++n) out.push_back(n);
    }
    return out;
}

Rat cdf_exact(const LppModel& model, const HalfInt& u, const CdfQuery& query) {
    if (u.sign() < 0) throw std::invalid_argument("cdf: u must be >= 0");
    const LppModel m = square_equivalent(model);
    check_common(m);
    if (m.sym == LppSymmetry::DoubleSym) check_palindrome(m);
    if (query.formula == CdfFormula::A) return cdf_bruteforce(model, u);
    std::size_t split = query.split;
    if (query.formula == CdfFormula::D || query.formula == CdfFormula::E) {
        auto range = valid_splits(m, query.formula);
        if (range.empty()) throw std::invalid_argument("cdf: formula not defined for this model");
        if (split == 0) split = range.front();
        if (std::find(range.begin(), range.end(), split) == range.end())
            throw std::invalid_argument("cdf: split index outside the formula's valid range");
    }
    Rat q;
    switch (query.formula) {
        case CdfFormula::B: q = quantity_B(m, u); break;
        case CdfFormula::C: q = quantity_C(m, u); break;
        case CdfFormula::D: q = quantity_D(m, u, split); break;
        case CdfFormula::E: q = quantity_E(m, u, split); break;
        default: throw std::logic_error("unreachable");
    }
    return q / normalization(m);
}

// ---------------------------------------------------------------------------
// Brute force
// ---------------------------------------------------------------------------

namespace {

struct SupportEntry {
    long long doubled;
    Rat pmf;
};

std::vector<SupportEntry> cell_support(const FreeCell& c, const LppModel& m, const HalfInt& cap) {
    std::vector<SupportEntry> out;
    const long long cap_d = cap.doubled().get_si();
    switch (c.kind) {
        case CellKind::Inner:
            for (long long k = 0; 2 * k <= cap_d; ++k) out.push_back({2 * k, geometric_pmf(c.p, k)});
            break;
        case CellKind::DiagGeom:
            if (c.p == 0) {
                out.push_back({0, Rat(1)});
            } else {
                for (long long k = 0; 2 * k <= cap_d; ++k) out.push_back({2 * k, geometric_pmf(c.p, k)});
            }
            break;
        case CellKind::AntidiagSquare:
            for (long long k = 0; 2 * k <= cap_d; ++k) {
                Rat w = antidiag_square_pmf(c.p, m.beta, k);
                if (w != 0) out.push_back({2 * k, w});
            }
            break;
        case CellKind::AntidiagHalved:
            for (long long d = 0; d <= cap_d; ++d) {
                Rat w = antidiag_halved_pmf(c.p, m.beta, HalfInt::from_doubled(d));
                if (w != 0) out.push_back({d, w});
            }
            break;
    }
    return out;
}

}  // namespace

Rat geometric_pmf(const Rat& q, long k) {
    if (k < 0) return Rat(0);
    if (q == 0) return k == 0 ? Rat(1) : Rat(0);
    return (Rat(1) - q) * rat_pow(q, k);
}

Rat antidiag_square_pmf(const Rat& p, const Rat& beta, long k) {
    if (k < 0) return Rat(0);
    Rat base = (Rat(1) - p * p) / (Rat(1) + beta * p);
    Rat odd = (k % 2 != 0) ? beta : Rat(1);
    return base * odd * rat_pow(p, k);
}

Rat antidiag_halved_pmf(const Rat& p, const Rat& beta, const HalfInt& k) {
    if (k.sign() < 0) return Rat(0);
    Rat base = (Rat(1) - p * p) / (Rat(1) + beta * p);
    Rat odd = k.is_half_integer() ? beta : Rat(1);
    return base * odd * rat_pow(p, k.doubled().get_si());  // p^{2k}
}

Rat cdf_bruteforce(const LppModel& model, const HalfInt& u) {
    if (u.sign() < 0) throw std::invalid_argument("cdf: u must be >= 0");
    check_common(model);
    if (model.sym == LppSymmetry::DoubleSym || model.sym == LppSymmetry::PointToLineSym)
        check_palindrome(model);
    auto cells = free_cells(model);
    assert_cells_on_paths(model, cells);
    const HalfInt cap = is_point_to_line(model) ? u : u + u;
    const long long threshold = cap.doubled().get_si();

    std::vector<std::vector<SupportEntry>> supports;
    supports.reserve(cells.size());
    double combos = 1;
    for (const auto& c : cells) {
        supports.push_back(cell_support(c, model, c.kind == CellKind::AntidiagHalved ? u : cap));
        combos *= static_cast<double>(supports.back().size());
        if (supports.back().empty()) return Rat(0);
    }
    if (combos > static_cast<double>(enumeration_budget()))
        throw BudgetExceeded("cdf_bruteforce: assignment count exceeds budget");

    std::vector<std::vector<long long>> w(model.N);
    for (std::size_t i = 1; i <= model.N; ++i) w[i - 1].assign(model.N, 0);

    Rat total(0);
    std::vector<Rat> partial(cells.size() + 1, Rat(1));
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            if (passage_time(model, w) <= threshold) total += partial[idx];
            return;
        }
        const auto& c = cells[idx];
        for (const auto& entry : supports[idx]) {
            w[c.i - 1][c.j - 1] = entry.doubled;
            partial[idx + 1] = partial[idx] * entry.pmf;
            rec(idx + 1);
        }
    };
    rec(0);
    return total;
}

// ---------------------------------------------------------------------------
// Monte Carlo
// ---------------------------------------------------------------------------

namespace {

struct SplitMix64 {
    std::uint64_t s;
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double u01() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }  // (0,1]
};

struct CellSampler {
    CellKind kind;
    double log_q;     // geometric log parameter (inner/diag) or log(p^2) (antidiag)
    double mix_prob;  // beta p / (1 + beta p) for antidiagonal cells
    bool zero;        // diagonal cell with alpha = 0
};

long long sample_doubled(const CellSampler& cs, SplitMix64& rng) {
    if (cs.zero) return 0;
    double u = rng.u01();
    long long g = u >= 1.0 ? 0 : static_cast<long long>(std::floor(std::log(u) / cs.log_q));
    if (g < 0) g = 0;
    switch (cs.kind) {
        case CellKind::Inner:
        case CellKind::DiagGeom: return 2 * g;
        // W = 2G (+1 with probability beta p / (1 + beta p)); halved variant adds 1/2.
        case CellKind::AntidiagSquare: return 4 * g + (rng.u01() <= cs.mix_prob ? 2 : 0);
        case CellKind::AntidiagHalved: return 2 * g + (rng.u01() <= cs.mix_prob ? 1 : 0);
    }
    return 0;
}

}  // namespace

SimResult simulate(const LppModel& model, const HalfInt& u, std::uint64_t trials, std::uint64_t seed,
                   unsigned workers) {
    if (trials == 0) throw std::invalid_argument("simulate: trials must be >= 1");
    check_common(model);
    if (model.sym == LppSymmetry::DoubleSym || model.sym == LppSymmetry::PointToLineSym)
        check_palindrome(model);
    auto cells = free_cells(model);
    const long long threshold = (is_point_to_line(model) ? u : u + u).doubled().get_si();

    std::vector<CellSampler> samplers;
    samplers.reserve(cells.size());
    for (const auto& c : cells) {
        CellSampler cs{};
        cs.kind = c.kind;
        cs.zero = false;
        double p = mpq_get_d(c.p.get_mpq_t());
        double beta = mpq_get_d(model.beta.get_mpq_t());
        switch (c.kind) {
            case CellKind::Inner: cs.log_q = std::log(p); break;
            case CellKind::DiagGeom:
                if (c.p == 0)
                    cs.zero = true;
                else
                    cs.log_q = std::log(p);
                break;
            case CellKind::AntidiagSquare:
            case CellKind::AntidiagHalved:
                cs.log_q = std::log(p * p);
                cs.mix_prob = beta * p / (1.0 + beta * p);
                break;
        }
        samplers.push_back(cs);
    }

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t* hits_out) {
        std::vector<std::vector<long long>> w(model.N);
        for (std::size_t i = 0; i < model.N; ++i) w[i].assign(model.N, 0);
        std::uint64_t hits = 0;
        for (std::uint64_t t = lo; t < hi; ++t) {
            SplitMix64 rng{seed + 0x9E3779B97F4A7C15ULL * (t + 1)};
            for (std::size_t k = 0; k < cells.size(); ++k)
                w[cells[k].i - 1][cells[k].j - 1] = sample_doubled(samplers[k], rng);
            if (passage_time(model, w) <= threshold) ++hits;
        }
        *hits_out = hits;
    };

    std::uint64_t hits = 0;
    if (workers <= 1) {
        run_range(0, trials, &hits);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::uint64_t> partial(workers, 0);
        std::uint64_t chunk = trials / workers, rem = trials % workers, lo = 0;
        for (unsigned k = 0; k < workers; ++k) {
            std::uint64_t hi = lo + chunk + (k < rem ? 1 : 0);
            pool.emplace_back(run_range, lo, hi, &partial[k]);
            lo = hi;
        }
        for (auto& th : pool) th.join();
        for (auto h : partial) hits += h;
    }

    SimResult res;
    res.hits = hits;
    res.trials = trials;
    res.estimate = make_rat(Int(static_cast<unsigned long>(hits)), Int(static_cast<unsigned long>(trials)));
    double ph = static_cast<double>(hits) / static_cast<double>(trials);
    res.standard_error = std::sqrt(ph * (1.0 - ph) / static_cast<double>(trials));
    return res;
}

}  // namespace charlab
