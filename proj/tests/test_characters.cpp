#include <doctest.h>

#include <random>

#include "charlab/characters.hpp"

using namespace charlab;

namespace {

SignedPartition sp(const std::string& s) { return *SignedPartition::parse(s); }

LaurentPoly poly1(std::vector<std::pair<int, long>> terms) {  // one variable
    LaurentPoly p(1);
    for (auto [e, c] : terms) p.add_term({e}, c);
    return p;
}

LaurentPoly poly2(std::vector<std::pair<std::pair<int, int>, long>> terms) {  // x + param
    LaurentPoly p(2);
    for (auto [e, c] : terms) p.add_term({e.first, e.second}, c);
    return p;
}

}  // namespace

TEST_CASE("small character polynomials") {
    // sp_{(1)} in one variable: x + x^{-1}.
    CHECK(char_poly(CharFamily::SpEven, sp("1"), 1) == poly1({{2, 1}, {-2, 1}}));
    // CB_{(1)}: x + beta + x^{-1}.
    CHECK(char_poly(CharFamily::CBInterp, sp("1"), 1) ==
          poly2({{{2, 0}, 1}, {{0, 2}, 1}, {{-2, 0}, 1}}));
    // DB_{(1)}: x + alpha + alpha^2 x^{-1}.
    CHECK(char_poly(CharFamily::DBInterp, sp("1"), 1) ==
          poly2({{{2, 0}, 1}, {{0, 2}, 1}, {{-2, 4}, 1}}));
    // so^{(3)}_{(1)} = x + 1 + x^{-1}, both constructions.
    LaurentPoly so3 = poly1({{2, 1}, {0, 1}, {-2, 1}});
    CHECK(char_poly(CharFamily::SoOddSigned, sp("1"), 1) == so3);
    CHECK(char_poly(CharFamily::SoOddSplit, sp("1"), 1) == so3);
    // so^{(2)}_{(1,-)} = x^{-1}.
    CHECK(char_poly(CharFamily::SoEven, sp("-1"), 1) == poly1({{-2, 1}}));
    // s_{(2,1)} in two variables.
    LaurentPoly s21(2);
    s21.add_term({4, 2}, 1);
    s21.add_term({2, 4}, 1);
    CHECK(char_poly(CharFamily::SchurA, sp("2,1"), 2) == s21);
    // Zero-variable and empty-shape edges.
    CHECK(char_poly(CharFamily::SchurA, SignedPartition(), 0) == LaurentPoly::constant(0, 1));
    CHECK(char_poly(CharFamily::DBInterp, SignedPartition(), 1).term_count() == 1);
}

TEST_CASE("generating functions have non-negative coefficients") {
    for (CharFamily fam : {CharFamily::SchurA, CharFamily::SpEven, CharFamily::SpOdd,
                           CharFamily::SoEven, CharFamily::SoOddSigned, CharFamily::SoOddSplit,
                           CharFamily::CBInterp, CharFamily::DBInterp})
        for (const auto& la : admissible_shapes(fam, 2, 2))
            CHECK(char_poly(fam, la, 2).all_coeffs_nonnegative());
}

TEST_CASE("weyl evaluation examples") {
    // Schur at x = (4, 1/4): 16*(1/4) + 4*(1/16) = 17/4.
    SqrtPoint pt({Rat(2), make_rat(1, 2)});
    CHECK(weyl_eval(CharFamily::SchurA, sp("2,1"), pt) == make_rat(17, 4));
    // so^{(3)}_{(1)} at x = 4: (x^{3/2}-x^{-3/2})/(x^{1/2}-x^{-1/2}) = 21/4.
    SqrtPoint p4({Rat(2)});
    CHECK(weyl_eval(CharFamily::SoOddSplit, sp("1"), p4) == make_rat(21, 4));
    // CB at beta = 0 equals the symplectic value 17/4.
    CHECK(weyl_eval(CharFamily::CBInterp, sp("1"), p4, Rat(0)) == make_rat(17, 4));
    CHECK(weyl_eval(CharFamily::SpEven, sp("1"), p4) == make_rat(17, 4));
}

TEST_CASE("dimension oracle counts GT patterns") {
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& la : admissible_shapes(CharFamily::SchurA, n, 4)) {
            Rat dim = schur_dimension(la, n);
            CHECK(Rat(static_cast<unsigned long>(count_patterns(PatternFamily::GT, n, la))) == dim);
        }
}

TEST_CASE("two-route equality on random points") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> pv(1, 9);
    for (CharFamily fam : {CharFamily::SchurA, CharFamily::SpEven, CharFamily::SpOdd,
                           CharFamily::SoEven, CharFamily::SoOddSigned, CharFamily::SoOddSplit,
                           CharFamily::CBInterp, CharFamily::DBInterp}) {
        const std::size_t n = 2;
        for (const auto& la : admissible_shapes(fam, n, 2)) {
            LaurentPoly poly = char_poly(fam, la, n);
            for (int trial = 0; trial < 3; ++trial) {
                SqrtPoint pt = random_sqrt_point(rng, n);
                Rat param = make_rat(pv(rng), pv(rng) + 9);  // small positive rational
                Rat lhs = has_param_var(fam) ? poly.eval(pt, param) : poly.eval(pt);
                Rat rhs = weyl_eval(fam, la, pt, param);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("signed and split odd-orthogonal constructions coincide") {
    for (std::size_t n = 1; n <= 2; ++n)
        for (const auto& la : admissible_shapes(CharFamily::SoOddSigned, n, 2))
            CHECK(char_poly(CharFamily::SoOddSigned, la, n) ==
                  char_poly(CharFamily::SoOddSplit, la, n));
}

TEST_CASE("symmetry and inversion invariances") {
    const std::size_t n = 2;
    std::vector<std::size_t> swap_xy = {1, 0};
    auto check_swap = [&](CharFamily fam, const SignedPartition& la, bool with_param) {
        LaurentPoly p = char_poly(fam, la, n);
        std::vector<std::size_t> perm = with_param ? std::vector<std::size_t>{1, 0, 2} : swap_xy;
        CHECK(p.permuted(perm) == p);
    };
    check_swap(CharFamily::SchurA, sp("2,1"), false);
    check_swap(CharFamily::SpEven, sp("2,1"), false);
    check_swap(CharFamily::SoOddSplit, sp("3/2,1/2"), false);
    check_swap(CharFamily::SoEven, sp("2,-1"), false);
    check_swap(CharFamily::CBInterp, sp("2,1"), true);
    check_swap(CharFamily::DBInterp, sp("2,1"), true);

    // x_i -> x_i^{-1} invariance for Sp/SoOdd and CB with integer shapes.
    auto invert_first = [&](const LaurentPoly& p, bool with_param) {
        std::vector<bool> flag(with_param ? 3 : 2, false);
        flag[0] = true;
        return p.inverted(flag);
    };
    LaurentPoly spe = char_poly(CharFamily::SpEven, sp("2,1"), n);
    CHECK(invert_first(spe, false) == spe);
    LaurentPoly soo = char_poly(CharFamily::SoOddSplit, sp("3/2,1/2"), n);
    CHECK(invert_first(soo, false) == soo);
    LaurentPoly cb = char_poly(CharFamily::CBInterp, sp("2,1"), n);
    CHECK(invert_first(cb, true) == cb);

    // SoEven: invariant under simultaneous inversion of two coordinates.
    LaurentPoly soe = char_poly(CharFamily::SoEven, sp("2,-1"), n);
    CHECK(soe.inverted({true, true}) == soe);
    CHECK(soe.inverted({true, false}) != soe);

    // CB with a half-integer shape is not inversion invariant...
    LaurentPoly cbh = char_poly(CharFamily::CBInterp, sp("3/2,1/2"), n);
    CHECK(invert_first(cbh, true) != cbh);
    // ... unless beta = 1, where it degenerates to the odd orthogonal character.
    LaurentPoly at_beta1(n);
    for (const auto& [e, c] : cbh.terms()) at_beta1.add_term({e[0], e[1]}, c);
    std::vector<bool> first_only = {true, false};
    CHECK(at_beta1.inverted(first_only) == at_beta1);
}

TEST_CASE("cb_via_sp matches the pattern route") {
    // lambda = (1), n = 1: sp_{(1)} + beta sp_{(0)}.
    CHECK(cb_via_sp(sp("1"), 1) == char_poly(CharFamily::CBInterp, sp("1"), 1));
    // lambda = (1/2), n = 1: (beta x^{1/2} + x^{-1/2}) sp_{(0)} = beta x^{1/2} + x^{-1/2}.
    LaurentPoly expect(2);
    expect.add_term({1, 2}, 1);
    expect.add_term({-1, 0}, 1);
    CHECK(cb_via_sp(sp("1/2"), 1) == expect);
    CHECK(cb_via_sp(sp("1/2"), 1) == char_poly(CharFamily::CBInterp, sp("1/2"), 1));
    // Exhaustive small sweep, both grids.
    for (std::size_t n = 1; n <= 2; ++n)
        for (const auto& la : admissible_shapes(CharFamily::CBInterp, n, 3))
            CHECK(cb_via_sp(la, n) == char_poly(CharFamily::CBInterp, la, n));
}

TEST_CASE("interpolation endpoints") {
    for (std::size_t n = 1; n <= 2; ++n)
        for (const auto& la : admissible_shapes(CharFamily::CBInterp, n, 2)) {
            LaurentPoly cb = char_poly(CharFamily::CBInterp, la, n);
            // beta = 0: keep terms with zero beta exponent.
            LaurentPoly at0(n), at1(n);
            for (const auto& [e, c] : cb.terms()) {
                LaurentPoly::Exps xs(e.begin(), e.end() - 1);
                if (e[n] == 0) at0.add_term(xs, c);
                at1.add_term(xs, c);
            }
            if (!la.on_half_grid()) {
                CHECK(at0 == char_poly(CharFamily::SpEven, la, n));
            } else {
                std::vector<HalfInt> shifted;
                for (std::size_t i = 1; i <= n; ++i)
                    shifted.push_back(la.part_or_zero1(i) - HalfInt::half());
                LaurentPoly spv = char_poly(CharFamily::SpEven, SignedPartition(shifted), n);
                CHECK(at0 == spv.shifted(LaurentPoly::Exps(n, -1)));
            }
            CHECK(at1 == char_poly(CharFamily::SoOddSplit, la, n));

            LaurentPoly db = char_poly(CharFamily::DBInterp, la, n);
            LaurentPoly db0(n), db1(n);
            for (const auto& [e, c] : db.terms()) {
                LaurentPoly::Exps xs(e.begin(), e.end() - 1);
                if (e[n] == 0) db0.add_term(xs, c);
                db1.add_term(xs, c);
            }
            CHECK(db0 == char_poly(CharFamily::SoEven, la, n));
            CHECK(db1 == char_poly(CharFamily::SoOddSigned, la, n));
        }
}

TEST_CASE("db branching and the rectangular route") {
    // branch, lambda = (1), n = 1: x + alpha + alpha^2 x^{-1}.
    CHECK(db_branching_poly(sp("1"), 1) == char_poly(CharFamily::DBInterp, sp("1"), 1));
    CHECK(db_branching_poly(SignedPartition(), 1).term_count() == 1);  // empty shape -> 1
    for (std::size_t n = 1; n <= 2; ++n)
        for (const auto& la : admissible_shapes(CharFamily::DBInterp, n, 3))
            CHECK(db_branching_poly(la, n) == char_poly(CharFamily::DBInterp, la, n));

    // rect_via_so: u = 1, n = 1, x = 4, alpha = 1/3 -> 157/36.
    SqrtPoint p4({Rat(2)});
    CHECK(db_rect_via_so(HalfInt(1), 1, p4, make_rat(1, 3)) == make_rat(157, 36));
    // Cross-check against the DB polynomial at a square alpha and both grids.
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 2; ++n)
        for (long du = 1; du <= 4; ++du) {
            HalfInt u = HalfInt::from_doubled(du);
            SignedPartition rect = SignedPartition::rectangle(n, u);
            LaurentPoly db = char_poly(CharFamily::DBInterp, rect, n);
            SqrtPoint pt = random_sqrt_point(rng, n);
            Rat alpha = make_rat(1, 4);
            CHECK(db.eval(pt, alpha) == db_rect_via_so(u, n, pt, alpha));
        }
}

TEST_CASE("rectangular so equality between even and odd types") {
    // so^{(2n+2)}_{u^{(n+1)}_eps}(x, 1) = so^{(2n+1)}_{u^{(n)}}(x).
    for (std::size_t n = 1; n <= 2; ++n)
        for (long du = 1; du <= 4; ++du)
            for (int eps : {+1, -1}) {
                HalfInt u = HalfInt::from_doubled(du);
                SignedPartition rect_big = SignedPartition::rectangle(n + 1, u, eps);
                SignedPartition rect = SignedPartition::rectangle(n, u);
                LaurentPoly big = char_poly(CharFamily::SoEven, rect_big, n + 1).specialized_one(n);
                CHECK(big == char_poly(CharFamily::SoOddSplit, rect, n));
            }
}

TEST_CASE("vanishing-variable restatement") {
    // The alpha-constant term of alpha^k so^{(2n+2)}_{(k, lambda_eps)}(x, alpha^{-1})
    // is so^{(2n)}_{lambda_eps}(x): keep terms whose last exponent equals k.
    for (std::size_t n = 1; n <= 2; ++n)
        for (const auto& la : admissible_shapes(CharFamily::SoEven, n, 2))
            for (long k = 2; k <= 3; ++k) {
                HalfInt kk = la.on_half_grid() ? HalfInt::from_doubled(2 * k - 1) : HalfInt(k);
                if (kk < la.part_or_zero1(1)) continue;
                std::vector<HalfInt> parts;
                parts.push_back(kk);
                for (const auto& x : la.parts()) parts.push_back(x);
                SignedPartition ext(parts, la.sign());
                LaurentPoly big = char_poly(CharFamily::SoEven, ext, n + 1);
                LaurentPoly constant_term(n);
                for (const auto& [e, c] : big.terms())
                    if (e[n] == kk.doubled().get_si())
                        constant_term.add_term(LaurentPoly::Exps(e.begin(), e.end() - 1), c);
                CHECK(constant_term == char_poly(CharFamily::SoEven, la, n));
            }
}

TEST_CASE("koornwinder specialization") {
    std::mt19937_64 rng(17);
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& la : admissible_shapes(CharFamily::SpEven, n, 3))
            for (int trial = 0; trial < 3; ++trial) {
                SqrtPoint pt = random_sqrt_point(rng, n);
                Rat beta = make_rat(2, 7);
                CHECK(koornwinder_det_value(la, pt, -beta, Rat(0)) ==
                      weyl_eval(CharFamily::CBInterp, la, pt, beta));
            }
}

TEST_CASE("schur shift properties") {
    auto [l1, r1] = schur_shift_plus(sp("1,0"), 1, 2);
    CHECK(l1 == r1);
    CHECK(l1 == char_poly(CharFamily::SchurA, sp("2,1"), 2));
    auto [l2, r2] = schur_shift_minus(SignedPartition(), 0, 1);
    CHECK(l2 == r2);
    CHECK(l2 == LaurentPoly::constant(1, 1));
    auto [l3, r3] = schur_shift_minus(sp("1"), 2, 1);
    CHECK(l3 == r3);
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& la : admissible_shapes(CharFamily::SchurA, n, 3)) {
            auto [lp, rp] = schur_shift_plus(la, 2, n);
            CHECK(lp == rp);
            auto [lm, rm] = schur_shift_minus(la, 4, n);
            CHECK(lm == rm);
        }
    CHECK_THROWS(schur_shift_minus(sp("3"), 2, 1));
}

TEST_CASE("denominator guards") {
    SqrtPoint bad({Rat(1)});  // x = 1 kills the type C denominator
    CHECK_THROWS_AS(weyl_eval(CharFamily::SpEven, sp("1"), bad), DenominatorZero);
    SqrtPoint dup({Rat(2), Rat(2)});
    CHECK_THROWS_AS(weyl_eval(CharFamily::SchurA, sp("1,0"), dup), DenominatorZero);
}

TEST_CASE("sp convention: non-partitions give the zero polynomial") {
    CHECK(sp_even_or_zero({HalfInt(0), HalfInt(1)}, 2).is_zero());
    CHECK(sp_even_or_zero({HalfInt(1), HalfInt(-1)}, 2).is_zero());
    CHECK(!sp_even_or_zero({HalfInt(1), HalfInt(1)}, 2).is_zero());
}
