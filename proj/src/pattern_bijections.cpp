#include "charlab/pattern_bijections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace charlab {

namespace {

using Grid2 = std::vector<std::vector<long long>>;  // doubled entries

Grid2 to_doubled(const Pattern& p) {
    Grid2 g(p.height());
    for (std::size_t i = 0; i < p.height(); ++i) {
        g[i].reserve(p.rows[i].size());
        for (const auto& v : p.rows[i]) g[i].push_back(v.doubled().get_si());
    }
    return g;
}

Pattern from_doubled(PatternFamily fam, const Grid2& g) {
    Pattern p;
    p.family = fam;
    p.rows.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        p.rows[i].reserve(g[i].size());
        for (long long d : g[i]) p.rows[i].push_back(HalfInt::from_doubled(d));
    }
    return p;
}

bool in_half_triangle(std::size_t height, std::size_t i, std::size_t j) {
    return i >= 1 && i <= height && j >= 1 && j <= (i + 1) / 2;
}

}  // namespace

SplitToSpResult split_to_symplectic(const Pattern& z) {
    if (z.family != PatternFamily::SplitOrthogonal || !validate(z))
        throw std::invalid_argument("split_to_symplectic: invalid split orthogonal pattern");
    const std::size_t h = z.height();
    const std::size_t n = h / 2;
    SplitToSpResult res;
    res.epsilon.assign(n, 0);
    Grid2 g = to_doubled(z);
    const long long bulk_par = z.at(h, 1).is_half_integer() ? 1 : 0;

    if (bulk_par == 0) {
        // Integer shape: one path per atypical odd end, processed from the
        // bottom-most atypical position upwards in the pattern order.
        std::vector<std::size_t> atypical;
        for (std::size_t l = 1; l <= n; ++l)
            if ((g[2 * l - 2][l - 1] & 1) != bulk_par) atypical.push_back(l);
        std::set<std::pair<std::size_t, std::size_t>> visited;
        for (auto it = atypical.rbegin(); it != atypical.rend(); ++it) {
            std::size_t l = *it;
            NnPath path;
            std::size_t i = 2 * l - 1, j = l;
            for (;;) {
                path.emplace_back(i, j);
                if (visited.count({i, j}))
                    throw std::logic_error("split_to_symplectic: paths intersect");
                if (i == h) break;
                if (in_half_triangle(h, i + 1, j + 1) && g[i - 1][j - 1] == g[i][j]) {
                    ++i, ++j;
                } else {
                    if (in_half_triangle(h, i + 1, j + 1) && g[i - 1][j - 1] < g[i][j])
                        throw std::logic_error("split_to_symplectic: interlacing broken");
                    ++i;
                }
            }
            for (auto [pi, pj] : path) visited.insert({pi, pj});
            g[path[0].first - 1][path[0].second - 1] -= 1;
            for (std::size_t k = 1; k < path.size(); ++k)
                g[path[k].first - 1][path[k].second - 1] -= 2;
            res.epsilon[path.back().second - 1] = 1;
            res.paths.push_back(std::move(path));
        }
    } else {
        // Half-integer shape: epsilon = atyp(z), shift the non-atypical
        // (half-integer) entries down by 1/2.
        for (std::size_t l = 1; l <= n; ++l)
            if ((g[2 * l - 2][l - 1] & 1) == 0) res.epsilon[l - 1] = 1;
        for (auto& row : g)
            for (auto& v : row)
                if (v & 1) v -= 1;
    }

    res.zprime = from_doubled(PatternFamily::Symplectic, g);
    if (!validate(res.zprime)) throw std::logic_error("split_to_symplectic: output not symplectic");
    return res;
}

Pattern symplectic_to_split(const Pattern& zprime, const std::vector<int>& epsilon, Grid target_grid) {
    if (zprime.family != PatternFamily::Symplectic || !validate(zprime))
        throw std::invalid_argument("symplectic_to_split: invalid symplectic pattern");
    const std::size_t h = zprime.height();
    if (h % 2 != 0) throw std::invalid_argument("symplectic_to_split: height must be even");
    const std::size_t n = h / 2;
    if (epsilon.size() != n) throw std::invalid_argument("symplectic_to_split: epsilon length mismatch");
    for (int e : epsilon)
        if (e != 0 && e != 1) throw std::invalid_argument("symplectic_to_split: epsilon not binary");
    Grid2 g = to_doubled(zprime);

    if (target_grid == Grid::Integer) {
        // Target shape must be a partition.
        for (std::size_t j = 1; j < n; ++j)
            if (g[h - 1][j - 1] + 2 * epsilon[j - 1] < g[h - 1][j] + 2 * epsilon[j])
                throw std::invalid_argument("symplectic_to_split: epsilon inconsistent with shape");
        std::set<std::pair<std::size_t, std::size_t>> visited;
        for (std::size_t m = 1; m <= n; ++m) {
            if (!epsilon[m - 1]) continue;
            NnPath path;
            std::size_t i = h, j = m;
            for (;;) {
                path.emplace_back(i, j);
                if (visited.count({i, j}))
                    throw std::invalid_argument("symplectic_to_split: paths intersect");
                if (i == 1 && j == 1) break;
                bool diag_ok = j >= 2 && in_half_triangle(h, i - 1, j - 1);
                bool up_ok = in_half_triangle(h, i - 1, j);
                if (diag_ok && g[i - 1][j - 1] == g[i - 2][j - 2]) {
                    --i, --j;
                } else if (diag_ok && g[i - 1][j - 1] < g[i - 2][j - 2]) {
                    if (!up_ok) break;  // stop at an odd end
                    --i;
                } else if (!diag_ok && up_ok) {
                    --i;
                } else if (!diag_ok && !up_ok) {
                    break;  // (1,1)
                } else {
                    throw std::invalid_argument("symplectic_to_split: interlacing broken");
                }
            }
            for (auto [pi, pj] : path) visited.insert({pi, pj});
            auto [li, lj] = path.back();
            if (li % 2 != 1 || lj != (li + 1) / 2)
                throw std::invalid_argument("symplectic_to_split: path must stop at an odd end");
            g[li - 1][lj - 1] += 1;
            for (std::size_t k = 0; k + 1 < path.size(); ++k)
                g[path[k].first - 1][path[k].second - 1] += 2;
        }
    } else {
        // Add 1/2 everywhere except the odd ends flagged by epsilon.
        for (std::size_t i = 1; i <= h; ++i)
            for (std::size_t j = 1; j <= (i + 1) / 2; ++j) {
                bool odd_end = (i % 2 == 1) && j == (i + 1) / 2;
                if (odd_end && epsilon[(i + 1) / 2 - 1]) continue;
                g[i - 1][j - 1] += 1;
            }
    }

    Pattern out = from_doubled(PatternFamily::SplitOrthogonal, g);
    if (!validate(out)) throw std::invalid_argument("symplectic_to_split: epsilon inconsistent");
    return out;
}

// ---------------------------------------------------------------------------
// Cut decompositions
// ---------------------------------------------------------------------------

namespace {

struct CutGeometry {
    PatternFamily family;
    std::size_t big_height;
    std::size_t cut;           // height of z
    std::size_t small_height;  // height of z'
    // z'_{i,j} = Z_{a - i, b - i + j}
    std::size_t a, b;
};

CutGeometry geometry(CutVariant variant, std::size_t n, std::size_t m) {
    switch (variant) {
        case CutVariant::CB:
            return {PatternFamily::SplitOrthogonal, 2 * (n + m), 2 * n, 2 * m, 2 * (n + m), n + m};
        case CutVariant::SpEven:
            return {PatternFamily::Symplectic, 2 * (n + m), 2 * n, 2 * m, 2 * (n + m), n + m};
        case CutVariant::SpOdd:
            return {PatternFamily::Symplectic, 2 * (n + m + 1), 2 * n + 1, 2 * m + 1, 2 * (n + m + 1),
                    n + m + 1};
        case CutVariant::SoEvenOddHeight:
            if (n == 0 || m == 0)
                throw std::invalid_argument("cut: SoEvenOddHeight needs n >= m >= 1");
            return {PatternFamily::Orthogonal, 2 * (n + m) - 1, 2 * n - 1, 2 * m - 1, 2 * (n + m) - 2,
                    n + m - 1};
        case CutVariant::GTtwoFrozen:
            return {PatternFamily::GT, n + m, std::max(n, m), std::min(n, m), n + m, n};
    }
    throw std::logic_error("unreachable");
}

}  // namespace

CutDecomposition cut_decompose(const Pattern& big, CutVariant variant, std::size_t n, std::size_t m) {
    const CutGeometry geo = geometry(variant, n, m);
    if (variant != CutVariant::GTtwoFrozen && n < m)
        throw std::invalid_argument("cut_decompose: needs n >= m");
    if (big.family != geo.family || big.height() != geo.big_height || !validate(big))
        throw std::invalid_argument("cut_decompose: pattern does not fit the variant");

    const SignedPartition shp = shape(big);
    CutDecomposition d;
    d.variant = variant;
    d.n = n;
    d.m = m;
    d.outer_sign = shp.sign();

    const std::size_t bottom_len = pattern_row_len(geo.family, geo.big_height);
    if (shp.declared_length() > bottom_len || bottom_len == 0)
        throw std::invalid_argument("cut_decompose: bad shape");
    d.u = shp.part_or_zero1(1);
    std::size_t rect_len = bottom_len;
    if (variant == CutVariant::GTtwoFrozen) {
        rect_len = n;
        d.v = shp.part_or_zero1(n + 1);
        for (std::size_t j = n + 1; j <= bottom_len; ++j)
            if (shp.part_or_zero1(j) != d.v)
                throw std::invalid_argument("cut_decompose: shape not bi-rectangular");
        if (d.u < d.v) throw std::invalid_argument("cut_decompose: needs u >= v");
    }
    for (std::size_t j = 1; j <= rect_len; ++j)
        if (shp.part_or_zero1(j) != d.u)
            throw std::invalid_argument("cut_decompose: shape not rectangular");

    // The interlacing conditions freeze everything below/left of the cut;
    // check it explicitly rather than trusting the input.
    const long long ud = d.u.doubled().get_si();
    const long long vd = d.v.doubled().get_si();
    for (std::size_t i = 1; i <= geo.big_height; ++i)
        for (std::size_t j = 1; j <= pattern_row_len(geo.family, i); ++j) {
            long long val = big.at(i, j).doubled().get_si();
            if (variant == CutVariant::GTtwoFrozen) {
                if (i >= j + m && llabs(val) != ud)
                    throw std::invalid_argument("cut_decompose: u-frozen region corrupt");
                if (j >= n + 1 && llabs(val) != vd)
                    throw std::invalid_argument("cut_decompose: v-frozen region corrupt");
            } else {
                std::size_t frozen_from = variant == CutVariant::SoEvenOddHeight ? bottom_len - 1
                                                                                 : bottom_len;
                if (i >= j + frozen_from && llabs(val) != ud)
                    throw std::invalid_argument("cut_decompose: frozen region corrupt");
            }
        }

    // Top part: the first `cut` rows.
    d.z.family = geo.family;
    d.z.rows.assign(big.rows.begin(), big.rows.begin() + geo.cut);
    if (!validate(d.z)) throw std::invalid_argument("cut_decompose: top part invalid");

    // Bottom part, read bottom-to-top with the frozen entries removed.
    d.zprime.family = geo.family;
    d.zprime.rows.resize(geo.small_height);
    for (std::size_t i = 1; i <= geo.small_height; ++i) {
        std::size_t len = pattern_row_len(geo.family, i);
        d.zprime.rows[i - 1].resize(len);
        for (std::size_t j = 1; j <= len; ++j)
            d.zprime.rows[i - 1][j - 1] = big.at(geo.a - i, geo.b - i + j);
    }
    if (!validate(d.zprime)) throw std::invalid_argument("cut_decompose: bottom part invalid");

    d.middle = shape(d.zprime);
    return d;
}

Pattern cut_compose(const CutDecomposition& d) {
    const CutGeometry geo = geometry(d.variant, d.n, d.m);
    if (d.z.family != geo.family || d.z.height() != geo.cut || !validate(d.z))
        throw std::invalid_argument("cut_compose: top part invalid");
    if (d.zprime.family != geo.family || d.zprime.height() != geo.small_height || !validate(d.zprime))
        throw std::invalid_argument("cut_compose: bottom part invalid");
    if (geo.small_height > 0 && shape(d.zprime) != d.middle)
        throw std::invalid_argument("cut_compose: middle shape mismatch");
    // The top part's shape must contain the middle partition: as a suffix
    // after a u-prefix, except for GT cuts with n < m where the middle is the
    // prefix and the filler v comes after it.
    {
        SignedPartition top = shape(d.z);
        const std::size_t len_top = pattern_row_len(geo.family, geo.cut);
        const std::size_t len_mid = pattern_row_len(geo.family, geo.small_height);
        const bool middle_first = d.variant == CutVariant::GTtwoFrozen && d.n < d.m;
        const std::size_t off = middle_first ? 0 : len_top - len_mid;
        for (std::size_t j = 1; j <= len_mid; ++j) {
            HalfInt a = top.part_or_zero1(off + j);
            if (off + j == len_top && top.sign() < 0) a = a.negated();
            HalfInt b = d.middle.part_or_zero1(j);
            if (j == d.middle.declared_length() && d.middle.sign() < 0) b = b.negated();
            if (a != b) throw std::invalid_argument("cut_compose: shapes do not share the middle");
        }
        if (middle_first) {
            for (std::size_t j = len_mid + 1; j <= len_top; ++j)
                if (top.part_or_zero1(j) != d.v)
                    throw std::invalid_argument("cut_compose: top suffix must be the filler value");
        } else {
            for (std::size_t j = 1; j <= off; ++j)
                if (top.part_or_zero1(j) != d.u)
                    throw std::invalid_argument("cut_compose: top prefix must be the rectangle value");
        }
    }

    Pattern big;
    big.family = geo.family;
    big.rows.resize(geo.big_height);
    for (std::size_t i = 1; i <= geo.cut; ++i) big.rows[i - 1] = d.z.rows[i - 1];
    const std::size_t bottom_len = pattern_row_len(geo.family, geo.big_height);
    for (std::size_t i = geo.cut + 1; i <= geo.big_height; ++i) {
        std::size_t len = pattern_row_len(geo.family, i);
        big.rows[i - 1].resize(len);
        for (std::size_t j = 1; j <= len; ++j) {
            long ip = static_cast<long>(geo.a) - static_cast<long>(i);
            long jp = static_cast<long>(j) - static_cast<long>(geo.b) + ip;
            HalfInt val;
            if (d.variant == CutVariant::GTtwoFrozen && j >= d.n + 1) {
                val = d.v;
            } else if (ip >= 1 && jp >= 1 &&
                       jp <= static_cast<long>(pattern_row_len(geo.family, ip))) {
                val = d.zprime.at(static_cast<std::size_t>(ip), static_cast<std::size_t>(jp));
            } else {
                val = d.u;
                if (d.variant == CutVariant::SoEvenOddHeight && i == geo.big_height &&
                    j == bottom_len && d.outer_sign < 0)
                    val = val.negated();
            }
            big.rows[i - 1][j - 1] = val;
        }
    }
    if (!validate(big)) throw std::invalid_argument("cut_compose: assembled pattern invalid");
    return big;
}

// ---------------------------------------------------------------------------
// Tableau -> pattern change of variables
// ---------------------------------------------------------------------------

namespace {

void check_staircase_tableau(const MonoidTaggedArray& t, const HalfInt& u) {
    const std::size_t N = t.domain.rows();
    if (!(t.domain == YoungDomain::staircase(N)))
        throw std::invalid_argument("tableau_to_pattern: staircase domain required");
    if (!validate_array(t) || !satisfies_output_ordering(t))
        throw std::invalid_argument("tableau_to_pattern: not an ordered output tableau");
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; j <= t.domain.row_len(i); ++j)
            if (u < t.at(i, j)) throw std::invalid_argument("tableau_to_pattern: entry exceeds u");
}

}  // namespace

Pattern tableau_to_pattern(const MonoidTaggedArray& t, const HalfInt& u) {
    check_staircase_tableau(t, u);
    const std::size_t N = t.domain.rows();
    Pattern z;
    z.family = PatternFamily::SplitOrthogonal;
    z.rows.resize(2 * N);
    for (std::size_t i = 1; i <= 2 * N; ++i) {
        std::size_t len = (i + 1) / 2;
        z.rows[i - 1].resize(len);
        for (std::size_t j = 1; j <= len; ++j) {
            long diff = static_cast<long>(i) - static_cast<long>(j);
            if (diff <= static_cast<long>(N) - 1)
                z.rows[i - 1][j - 1] = u - t.at(N + j - i, j);
            else
                z.rows[i - 1][j - 1] = u;
        }
    }
    if (!validate(z)) throw std::invalid_argument("tableau_to_pattern: image is not a valid pattern");
    return z;
}

Pattern tableau_to_pattern_symmetric(const MonoidTaggedArray& t, const HalfInt& u) {
    check_staircase_tableau(t, u);
    if (!is_symmetric(t)) throw std::invalid_argument("tableau_to_pattern_symmetric: t not symmetric");
    const std::size_t N = t.domain.rows();
    if (N % 2 != 0) throw std::invalid_argument("tableau_to_pattern_symmetric: even size required");
    const std::size_t n = N / 2;
    Pattern z;
    z.family = PatternFamily::SplitOrthogonal;
    z.rows.resize(2 * n);
    for (std::size_t i = 1; i <= 2 * n; ++i) {
        std::size_t len = (i + 1) / 2;
        z.rows[i - 1].resize(len);
        for (std::size_t j = 1; j <= len; ++j) {
            std::size_t a = 2 * n + j - i, b = j;
            if (!t.domain.contains(a, b)) std::swap(a, b);
            z.rows[i - 1][j - 1] = u - t.at(a, b);
        }
    }
    if (!validate(z))
        throw std::invalid_argument("tableau_to_pattern_symmetric: image is not a valid pattern");
    return z;
}

}  // namespace charlab
