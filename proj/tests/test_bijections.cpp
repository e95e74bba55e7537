#include <doctest.h>
#include <set>

#include "charlab/pattern_bijections.hpp"

using namespace charlab;

namespace {

Pattern pat(PatternFamily f, std::vector<std::vector<std::string>> rows) {
    Pattern p;
    p.family = f;
    for (auto& row : rows) {
        std::vector<HalfInt> r;
        for (auto& s : row) r.push_back(*HalfInt::parse(s));
        p.rows.push_back(std::move(r));
    }
    return p;
}

SignedPartition sp(const std::string& s) { return *SignedPartition::parse(s); }

MonoidTaggedArray tri(std::vector<std::vector<std::string>> rows, OuterMonoid outer) {
    std::vector<std::vector<HalfInt>> entries;
    std::vector<std::size_t> lens;
    for (auto& row : rows) {
        std::vector<HalfInt> r;
        for (auto& s : row) r.push_back(*HalfInt::parse(s));
        lens.push_back(r.size());
        entries.push_back(std::move(r));
    }
    return make_array(std::move(lens), std::move(entries), outer);
}

}  // namespace

TEST_CASE("the worked k=1 example of the pattern bijection") {
    Pattern z = pat(PatternFamily::SplitOrthogonal,
                    {{"1/2"}, {"1"}, {"3", "1"}, {"4", "2"}, {"4", "2", "0"}, {"4", "3", "2"}});
    REQUIRE(validate(z));
    auto res = split_to_symplectic(z);
    Pattern expect = pat(PatternFamily::Symplectic,
                         {{"0"}, {"0"}, {"3", "0"}, {"4", "1"}, {"4", "1", "0"}, {"4", "3", "1"}});
    CHECK(res.zprime == expect);
    CHECK(res.epsilon == std::vector<int>{0, 0, 1});
    REQUIRE(res.paths.size() == 1);
    NnPath want = {{1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 2}, {6, 3}};
    CHECK(res.paths[0] == want);
    CHECK(symplectic_to_split(res.zprime, res.epsilon, Grid::Integer) == z);
}

TEST_CASE("the worked k=2 example of the pattern bijection") {
    Pattern z = pat(PatternFamily::SplitOrthogonal,
                    {{"1/2"}, {"2"}, {"2", "3/2"}, {"3", "2"}, {"3", "2", "2"}, {"4", "3", "2"}});
    REQUIRE(validate(z));
    auto res = split_to_symplectic(z);
    Pattern expect = pat(PatternFamily::Symplectic,
                         {{"0"}, {"1"}, {"1", "1"}, {"2", "1"}, {"2", "2", "1"}, {"4", "2", "1"}});
    CHECK(res.zprime == expect);
    CHECK(res.epsilon == std::vector<int>{0, 1, 1});
    REQUIRE(res.paths.size() == 2);
    CHECK(symplectic_to_split(res.zprime, res.epsilon, Grid::Integer) == z);
}

TEST_CASE("all-integer patterns map to themselves") {
    Pattern z = pat(PatternFamily::SplitOrthogonal, {{"1"}, {"1"}, {"2", "0"}, {"2", "1"}});
    auto res = split_to_symplectic(z);
    CHECK(res.epsilon == std::vector<int>{0, 0});
    CHECK(res.paths.empty());
    Pattern as_sp = z;
    as_sp.family = PatternFamily::Symplectic;
    CHECK(res.zprime == as_sp);
    CHECK(symplectic_to_split(res.zprime, res.epsilon, Grid::Integer) == z);
}

TEST_CASE("exhaustive round trips with type preservation, both grids") {
    auto run_shape = [](const SignedPartition& la, std::size_t n) {
        enumerate_patterns(PatternFamily::SplitOrthogonal, 2 * n, la, [&](const Pattern& z) {
            auto res = split_to_symplectic(z);
            CHECK(validate(res.zprime));
            // Type relations.
            auto tz = pattern_type(z);
            auto tp = pattern_type(res.zprime);
            auto az = atyp(z);
            for (std::size_t i = 1; i <= n; ++i) {
                HalfInt lhs = tz[2 * i - 1] - tz[2 * i - 2];
                HalfInt rhs = tp[2 * i - 1] - tp[2 * i - 2];
                if (la.on_half_grid())
                    rhs += HalfInt::from_doubled(2 * res.epsilon[i - 1] - 1);
                CHECK(lhs == rhs);
                if (la.on_half_grid()) CHECK(res.epsilon[i - 1] == az[i - 1]);
            }
            // epsilon has exactly |atyp| ones for integer shapes.
            int ones = 0, atypical = 0;
            for (std::size_t i = 0; i < n; ++i) {
                ones += res.epsilon[i];
                atypical += az[i];
            }
            CHECK(ones == atypical);
            CHECK(symplectic_to_split(res.zprime, res.epsilon,
                                      la.on_half_grid() ? Grid::Half : Grid::Integer) == z);
        });
    };
    for (std::size_t n = 1; n <= 3; ++n) {
        partitions_in_box(n, HalfInt(2), Grid::Integer, false,
                          [&](const SignedPartition& la) { run_shape(la, n); });
        partitions_in_box(n, HalfInt::from_doubled(3), Grid::Half,
                          false, [&](const SignedPartition& la) { run_shape(la, n); });
    }
}

TEST_CASE("forward map is onto the epsilon-indexed symplectic union") {
    // Split orthogonal counts match the epsilon-indexed symplectic counts.
    for (std::size_t n = 1; n <= 3; ++n)
        partitions_in_box(n, HalfInt(2), Grid::Integer, false, [&](const SignedPartition& la) {
            std::uint64_t lhs = count_patterns(PatternFamily::SplitOrthogonal, 2 * n, la);
            std::uint64_t rhs = 0;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::vector<HalfInt> parts;
                bool ok = true;
                for (std::size_t i = 0; i < n; ++i) {
                    HalfInt v = la.part_or_zero1(i + 1) - HalfInt((mask >> i) & 1);
                    if (v.sign() < 0) ok = false;
                    parts.push_back(v);
                }
                for (std::size_t i = 0; ok && i + 1 < parts.size(); ++i)
                    if (parts[i] < parts[i + 1]) ok = false;
                if (!ok) continue;
                rhs += count_patterns(PatternFamily::Symplectic, 2 * n, SignedPartition(parts));
            }
            CHECK(lhs == rhs);
        });
}

TEST_CASE("half-grid inverse closes exhaustively") {
    // n = 2, u = 3/2: every (zprime, eps) pair with the right shape round-trips.
    SignedPartition la = sp("3/2,3/2");
    std::vector<HalfInt> base;
    for (std::size_t i = 1; i <= 2; ++i) base.push_back(la.part_or_zero1(i) - HalfInt::half());
    enumerate_patterns(PatternFamily::Symplectic, 4, SignedPartition(base), [&](const Pattern& zp) {
        for (int e0 : {0, 1})
            for (int e1 : {0, 1}) {
                std::vector<int> eps = {e0, e1};
                Pattern z = symplectic_to_split(zp, eps, Grid::Half);
                auto back = split_to_symplectic(z);
                CHECK(back.zprime == zp);
                CHECK(back.epsilon == eps);
            }
    });
}

TEST_CASE("inconsistent epsilon is rejected") {
    Pattern zp = pat(PatternFamily::Symplectic, {{"0"}, {"0"}, {"1", "0"}, {"1", "0"}});
    CHECK_THROWS_AS(symplectic_to_split(zp, {0, 1, 0}, Grid::Integer), std::invalid_argument);
    // Shape (1,0) + eps = (1,1) is fine; (1,0)+(0,1) = (1,1) fine too, but
    // (0,0)+(0,1) on shape (0,0) would give (0,1) which is not a partition.
    Pattern flat = pat(PatternFamily::Symplectic, {{"0"}, {"0"}, {"0", "0"}, {"0", "0"}});
    CHECK_THROWS_AS(symplectic_to_split(flat, {0, 1}, Grid::Integer), std::invalid_argument);
}

TEST_CASE("cut decomposition: split orthogonal counts") {
    // soGT^{(4)}_{(1,1)} decomposes as the union over lambda <= (1) of products.
    std::uint64_t total = count_patterns(PatternFamily::SplitOrthogonal, 4, sp("1,1"));
    std::uint64_t sum = 0;
    partitions_in_box(1, HalfInt(1), Grid::Integer, false, [&](const SignedPartition& la) {
        sum += count_patterns(PatternFamily::SplitOrthogonal, 2, la) *
               count_patterns(PatternFamily::SplitOrthogonal, 2, la);
    });
    CHECK(total == sum);
    // Both sides count 10 = dim of the SO(5) representation indexed by (1,1).
    CHECK(total == 10);

    // Round trip over all six patterns.
    enumerate_patterns(PatternFamily::SplitOrthogonal, 4, sp("1,1"), [&](const Pattern& big) {
        CutDecomposition d = cut_decompose(big, CutVariant::CB, 1, 1);
        CHECK(validate(d.z));
        CHECK(validate(d.zprime));
        CHECK(cut_compose(d) == big);
    });
}

TEST_CASE("cut decomposition: GT two-frozen counts") {
    // |GT^{(2)}_{(1,0)}| = sum_{mu <= (1)} |GT^{(1)}_mu|^2 = 2.
    CHECK(count_patterns(PatternFamily::GT, 2, sp("1,0")) == 2);
    enumerate_patterns(PatternFamily::GT, 2, sp("1,0"), [&](const Pattern& big) {
        CutDecomposition d = cut_decompose(big, CutVariant::GTtwoFrozen, 1, 1);
        CHECK(cut_compose(d) == big);
    });
}

TEST_CASE("cut decompositions are bijections (cardinalities), all variants") {
    auto check_counts = [](CutVariant variant, PatternFamily fam, std::size_t big_h,
                           std::size_t small_h, std::size_t top_h, std::size_t n, std::size_t m,
                           const HalfInt& u, Grid g, int sign) {
        SignedPartition big_shape =
            SignedPartition::rectangle(pattern_row_len(fam, big_h), u, sign);
        std::uint64_t total = count_patterns(fam, big_h, big_shape);
        std::uint64_t sum = 0;
        std::size_t mid_len = pattern_row_len(fam, small_h);
        bool signed_mid = fam == PatternFamily::Orthogonal;
        partitions_in_box(mid_len, u, g, signed_mid, [&](const SignedPartition& la) {
            std::size_t top_len = pattern_row_len(fam, top_h);
            SignedPartition top_shape = SignedPartition::with_prefix(top_len - mid_len, u, la);
            sum += count_patterns(fam, top_h, top_shape) * count_patterns(fam, small_h, la);
        });
        CHECK(total == sum);
        // And the maps close up.
        enumerate_patterns(fam, big_h, big_shape, [&](const Pattern& big) {
            CutDecomposition d = cut_decompose(big, variant, n, m);
            CHECK(cut_compose(d) == big);
        });
    };
    for (long du : {2, 3}) {
        HalfInt u = HalfInt::from_doubled(du);
        Grid g = u.is_integer() ? Grid::Integer : Grid::Half;
        // CB variant, n = m = 1 and n = 2, m = 1.
        check_counts(CutVariant::CB, PatternFamily::SplitOrthogonal, 4, 2, 2, 1, 1, u, g, +1);
        check_counts(CutVariant::CB, PatternFamily::SplitOrthogonal, 6, 2, 4, 2, 1, u, g, +1);
        if (u.is_integer()) {
            check_counts(CutVariant::SpEven, PatternFamily::Symplectic, 6, 2, 4, 2, 1, u, g, +1);
            check_counts(CutVariant::SpOdd, PatternFamily::Symplectic, 6, 3, 3, 1, 1, u, g, +1);
            check_counts(CutVariant::SpOdd, PatternFamily::Symplectic, 8, 3, 5, 2, 1, u, g, +1);
        }
        check_counts(CutVariant::SoEvenOddHeight, PatternFamily::Orthogonal, 5, 1, 3, 2, 1, u, g, +1);
        check_counts(CutVariant::SoEvenOddHeight, PatternFamily::Orthogonal, 5, 1, 3, 2, 1, u, g, -1);
    }
    // GT bi-rectangular, both orientations.
    for (long uu = 1; uu <= 2; ++uu)
        for (long vv = 0; vv <= uu; ++vv) {
            HalfInt u(uu), v(vv);
            for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 1}, {2, 2}}) {
                std::vector<HalfInt> parts(n, u);
                parts.insert(parts.end(), m, v);
                SignedPartition shape(parts);
                std::uint64_t total = count_patterns(PatternFamily::GT, n + m, shape);
                std::uint64_t sum = 0;
                std::size_t l = std::min(n, m);
                partitions_in_box(l, u - v, Grid::Integer, false, [&](const SignedPartition& mu) {
                    // shift mu by v: the middle lives in [v, u].
                    std::vector<HalfInt> mid;
                    for (std::size_t i = 1; i <= l; ++i) mid.push_back(mu.part_or_zero1(i) + v);
                    SignedPartition middle(mid);
                    std::size_t top_h = std::max(n, m);
                    std::vector<HalfInt> top;
                    if (n >= m) {
                        top.assign(n - m, u);
                        top.insert(top.end(), mid.begin(), mid.end());
                    } else {
                        top = mid;
                        top.insert(top.end(), m - n, v);
                    }
                    sum += count_patterns(PatternFamily::GT, top_h, SignedPartition(top)) *
                           count_patterns(PatternFamily::GT, l, middle);
                });
                CHECK(total == sum);
                enumerate_patterns(PatternFamily::GT, n + m, shape, [&](const Pattern& big) {
                    CutDecomposition d = cut_decompose(big, CutVariant::GTtwoFrozen, n, m);
                    CHECK(cut_compose(d) == big);
                });
            }
        }
}

TEST_CASE("decompose after compose is the identity on valid data") {
    // Build a decomposition from a random big pattern, recompose, re-decompose.
    enumerate_patterns(PatternFamily::SplitOrthogonal, 6, sp("2,2,2"), [&](const Pattern& big) {
        CutDecomposition d = cut_decompose(big, CutVariant::CB, 2, 1);
        Pattern again = cut_compose(d);
        CutDecomposition d2 = cut_decompose(again, CutVariant::CB, 2, 1);
        CHECK(d2.z == d.z);
        CHECK(d2.zprime == d.zprime);
        CHECK(d2.middle == d.middle);
    });
}

TEST_CASE("corrupt frozen regions are rejected") {
    Pattern big = pat(PatternFamily::Symplectic, {{"0"}, {"1"}, {"1", "0"}, {"2", "1"}});
    CHECK_THROWS(cut_decompose(big, CutVariant::SpEven, 1, 1));  // shape not rectangular
}

TEST_CASE("type bookkeeping across the cut") {
    enumerate_patterns(PatternFamily::SplitOrthogonal, 6, sp("2,2,2"), [&](const Pattern& big) {
        CutDecomposition d = cut_decompose(big, CutVariant::CB, 2, 1);
        auto tZ = pattern_type(big);
        auto tz = pattern_type(d.z);
        auto tp = pattern_type(d.zprime);
        for (std::size_t i = 1; i <= 4; ++i) CHECK(tZ[i - 1] == tz[i - 1]);
        for (std::size_t i = 1; i <= 2; ++i)
            CHECK(tZ[4 + i - 1] == HalfInt(2) - tp[2 - i]);  // type(Z)_{2n+i} = u - type(z')_{2m-i+1}
    });
}

TEST_CASE("tableau to pattern change of variables") {
    // N = 1, u = 1, t = [1/2] -> rows (1/2)/(1) with one atypical entry.
    MonoidTaggedArray t = tri({{"1/2"}}, OuterMonoid::Half);
    Pattern z = tableau_to_pattern(t, HalfInt(1));
    CHECK(z == pat(PatternFamily::SplitOrthogonal, {{"1/2"}, {"1"}}));
    CHECK(atyp(z) == std::vector<int>{1});

    // t == 0 gives the all-u pattern.
    MonoidTaggedArray z3 = tri({{"0", "0", "0"}, {"0", "0"}, {"0"}}, OuterMonoid::Half);
    Pattern allu = tableau_to_pattern(z3, HalfInt(2));
    for (const auto& row : allu.rows)
        for (const auto& v : row) CHECK(v == HalfInt(2));

    // The N = 4 index mapping sends t_{1,1} to Z_{4,1}.
    MonoidTaggedArray t4 = tri({{"1", "1", "1", "1"}, {"1", "1", "1"}, {"1", "1"}, {"1"}},
                               OuterMonoid::Half);
    Pattern z4 = tableau_to_pattern(t4, HalfInt(3));
    CHECK(z4.at(4, 1) == HalfInt(3) - t4.at(1, 1));

    CHECK_THROWS(tableau_to_pattern(t4, HalfInt(0)));  // entries exceed u
    MonoidTaggedArray unordered = tri({{"2", "1"}, {"0"}}, OuterMonoid::Half);
    CHECK_THROWS(tableau_to_pattern(unordered, HalfInt(2)));
}

TEST_CASE("symmetric tableau to pattern") {
    MonoidTaggedArray t = tri({{"0", "1"}, {"1"}}, OuterMonoid::Half);
    Pattern z = tableau_to_pattern_symmetric(t, HalfInt(2));
    REQUIRE(validate(z));
    // shape_j = u - t_{j,j}.
    CHECK(shape(z) == sp("2"));
    MonoidTaggedArray asym = tri({{"0", "1"}, {"0"}}, OuterMonoid::Half);
    CHECK_THROWS(tableau_to_pattern_symmetric(asym, HalfInt(2)));
}

TEST_CASE("every bounded split orthogonal pattern arises from a tableau") {
    // The change of variables at N = 2, u = 1 maps ordered staircases with
    // entries in [0, 1] bijectively onto soGT^{(4)}_{(1,1)}.
    std::set<std::string> images;
    std::size_t sources = 0;
    for (int c = 0; c <= 1; ++c)          // t_{1,1}, inner, integer
        for (int a = 0; a <= 2; ++a)      // t_{1,2}, outer, doubled
            for (int b = 0; b <= 2; ++b)  // t_{2,1}, outer, doubled
            {
                std::vector<std::vector<HalfInt>> rows = {
                    {HalfInt(c), HalfInt::from_doubled(a)}, {HalfInt::from_doubled(b)}};
                auto arr = make_array({2, 1}, rows, OuterMonoid::Half);
                if (!satisfies_output_ordering(arr)) continue;
                ++sources;
                Pattern z = tableau_to_pattern(arr, HalfInt(1));
                CHECK(validate(z));
                std::string key;
                for (const auto& row : z.rows)
                    for (const auto& v : row) key += v.to_string() + ";";
                images.insert(key);
            }
    std::uint64_t expect = count_patterns(PatternFamily::SplitOrthogonal, 4, sp("1,1"));
    CHECK(images.size() == sources);  // injective
    CHECK(images.size() == expect);   // onto
}

TEST_CASE("cut decomposition with m = 0 is the identity split") {
    enumerate_patterns(PatternFamily::SplitOrthogonal, 4, sp("2,2"), [&](const Pattern& big) {
        CutDecomposition d = cut_decompose(big, CutVariant::CB, 2, 0);
        CHECK(d.z == big);
        CHECK(d.zprime.height() == 0);
        CHECK(d.middle == SignedPartition());
        CHECK(cut_compose(d) == big);
    });
}
