#include "charlab/identities.hpp"

#include <chrono>
#include <future>

namespace charlab {

std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::DecompCB: return "decompCB";
        case IdentityId::DecompC: return "decompC";
        case IdentityId::DecompB: return "decompB";
        case IdentityId::DecompOddSp: return "decompOddSp";
        case IdentityId::DecompD: return "decompD";
        case IdentityId::DecompBintoD: return "decompBintoD";
        case IdentityId::DecompA: return "decompA";
        case IdentityId::KrattC: return "krattC";
        case IdentityId::KrattD: return "krattD";
        case IdentityId::KrattA: return "krattA";
        case IdentityId::DualPieri: return "dualPieri";
        case IdentityId::CBLittlewood: return "CB_littlewood";
        case IdentityId::DBLittlewood: return "DB_littlewood";
        case IdentityId::SchurLittlewoodSp: return "schur_littlewoodSp";
    }
    return "?";
}

std::optional<IdentityId> identity_from_name(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(IdentityId::SchurLittlewoodSp); ++i)
        if (identity_name(static_cast<IdentityId>(i)) == s) return static_cast<IdentityId>(i);
    return std::nullopt;
}

namespace {

std::vector<std::size_t> iota_slots(std::size_t from, std::size_t count) {
    std::vector<std::size_t> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = from + i;
    return v;
}

Grid grid_of_u(const HalfInt& u) { return u.is_integer() ? Grid::Integer : Grid::Half; }

// lambda -> (u^(k), lambda), keeping lambda's sign.
SignedPartition prefixed(std::size_t k, const HalfInt& u, const SignedPartition& la) {
    return SignedPartition::with_prefix(k, u, la);
}

std::string mismatch(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly diff = lhs - rhs;
    if (diff.is_zero()) return "";
    const auto& [e, c] = *diff.terms().begin();
    std::string s = "first differing coefficient " + c.get_str() + " at exponents (";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += HalfInt::from_doubled(e[i]).to_string();
    }
    return s + ")";
}

LaurentPoly decomp_cb_rhs(std::size_t n, std::size_t m, const HalfInt& u) {
    const std::size_t arity = n + m + 1;
    LaurentPoly rhs(arity);
    partitions_in_box(m, u, grid_of_u(u), false, [&](const SignedPartition& la) {
        LaurentPoly f1 = char_poly(CharFamily::CBInterp, prefixed(n - m, u, la), n);
        LaurentPoly f2 = char_poly(CharFamily::CBInterp, la, m);
        auto s1 = iota_slots(0, n);
        s1.push_back(arity - 1);
        auto s2 = iota_slots(n, m);
        s2.push_back(arity - 1);
        rhs += f1.embedded(arity, s1) * f2.embedded(arity, s2);
    });
    return rhs;
}

IdentityOutcome check_poly(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    IdentityOutcome out;
    out.holds = lhs == rhs;
    if (!out.holds) {
        out.detail = mismatch(lhs, rhs);
        out.sides = std::make_pair(lhs, rhs);
    }
    return out;
}

IdentityOutcome invalid(const std::string& why) {
    IdentityOutcome out;
    out.valid = false;
    out.holds = false;
    out.detail = why;
    return out;
}

IdentityOutcome verify_decomp_cb(const IdentityCase& c) {
    if (c.n < c.m || c.m < 1) return invalid("needs n >= m >= 1");
    LaurentPoly lhs =
        char_poly(CharFamily::CBInterp, SignedPartition::rectangle(c.n + c.m, c.u), c.n + c.m);
    return check_poly(lhs, decomp_cb_rhs(c.n, c.m, c.u));
}

IdentityOutcome verify_decomp_c(const IdentityCase& c) {
    if (c.n < c.m || c.m < 1) return invalid("needs n >= m >= 1");
    if (!c.u.is_integer()) return invalid("integer u required");
    const std::size_t n = c.n, m = c.m, arity = n + m;
    LaurentPoly lhs = char_poly(CharFamily::SpEven, SignedPartition::rectangle(n + m, c.u), n + m);
    LaurentPoly rhs(arity);
    partitions_in_box(m, c.u, Grid::Integer, false, [&](const SignedPartition& la) {
        rhs += char_poly(CharFamily::SpEven, prefixed(n - m, c.u, la), n).embedded(arity, iota_slots(0, n)) *
               char_poly(CharFamily::SpEven, la, m).embedded(arity, iota_slots(n, m));
    });
    return check_poly(lhs, rhs);
}

IdentityOutcome verify_decomp_b(const IdentityCase& c) {
    if (c.n < c.m || c.m < 1) return invalid("needs n >= m >= 1");
    const std::size_t n = c.n, m = c.m, arity = n + m;
    LaurentPoly lhs = char_poly(CharFamily::SoOddSplit, SignedPartition::rectangle(n + m, c.u), n + m);
    LaurentPoly rhs(arity);
    partitions_in_box(m, c.u, grid_of_u(c.u), false, [&](const SignedPartition& la) {
        rhs += char_poly(CharFamily::SoOddSplit, prefixed(n - m, c.u, la), n)
                   .embedded(arity, iota_slots(0, n)) *
               char_poly(CharFamily::SoOddSplit, la, m).embedded(arity, iota_slots(n, m));
    });
    return check_poly(lhs, rhs);
}

IdentityOutcome verify_decomp_odd_sp(const IdentityCase& c) {
    if (c.n < c.m || c.m < 1) return invalid("needs n >= m >= 1");
    if (!c.u.is_integer()) return invalid("integer u required");
    const std::size_t n = c.n, m = c.m, arity = n + m + 1;
    LaurentPoly lhs =
        char_poly(CharFamily::SpEven, SignedPartition::rectangle(n + m + 1, c.u), n + m + 1);
    LaurentPoly rhs(arity);
    partitions_in_box(m + 1, c.u, Grid::Integer, false, [&](const SignedPartition& la) {
        auto s1 = iota_slots(0, n);
        s1.push_back(arity - 1);
        auto s2 = iota_slots(n, m);
        s2.push_back(arity - 1);
        rhs += char_poly(CharFamily::SpOdd, prefixed(n - m, c.u, la), n).embedded(arity, s1) *
               char_poly(CharFamily::SpOdd, la, m).embedded(arity, s2);
    });
    LaurentPoly::Exps shift(arity, 0);
    shift[arity - 1] = -static_cast<int>(c.u.doubled().get_si());
    return check_poly(lhs, rhs.shifted(shift));
}

IdentityOutcome verify_decomp_d(const IdentityCase& c) {
    if (c.n < c.m || c.m < 1) return invalid("needs n >= m >= 1");
    const std::size_t n = c.n, m = c.m, arity = n + m;
    LaurentPoly lhs =
        char_poly(CharFamily::SoEven, SignedPartition::rectangle(n + m, c.u, c.sign), n + m);
    LaurentPoly rhs(arity);
    partitions_in_box(m, c.u, grid_of_u(c.u), true, [&](const SignedPartition& la) {
        SignedPartition la_flipped(la.parts(), la.sign() * c.sign);
        rhs += char_poly(CharFamily::SoEven, prefixed(n - m, c.u, la), n)
                   .embedded(arity, iota_slots(0, n)) *
               char_poly(CharFamily::SoEven, la_flipped, m).embedded(arity, iota_slots(n, m));
    });
    return check_poly(lhs, rhs);
}

IdentityOutcome verify_decomp_b_into_d(const IdentityCase& c) {
    if (c.n + 1 < c.m || c.m < 1) return invalid("needs n+1 >= m >= 1");
    const std::size_t n = c.n, m = c.m, arity = n + m;
    LaurentPoly lhs = char_poly(CharFamily::SoOddSplit, SignedPartition::rectangle(n + m, c.u), n + m);
    LaurentPoly rhs(arity);
    partitions_in_box(m, c.u, grid_of_u(c.u), true, [&](const SignedPartition& la) {
        LaurentPoly f1 =
            char_poly(CharFamily::SoEven, prefixed(n + 1 - m, c.u, la), n + 1).specialized_one(n);
        rhs += f1.embedded(arity, iota_slots(0, n)) *
               char_poly(CharFamily::SoEven, la, m).embedded(arity, iota_slots(n, m));
    });
    return check_poly(lhs, rhs);
}

IdentityOutcome verify_decomp_a(const IdentityCase& c) {
    if (c.n < 1 || c.m < 1) return invalid("needs n, m >= 1");
    if (!c.u.is_integer() || !c.v.is_integer()) return invalid("integer u, v required");
    if (c.u < c.v || c.v.sign() < 0) return invalid("needs u >= v >= 0");
    const std::size_t n = c.n, m = c.m, l = std::min(n, m), arity = n + m;
    std::vector<HalfInt> big(n, c.u);
    big.insert(big.end(), m, c.v);
    LaurentPoly lhs = char_poly(CharFamily::SchurA, SignedPartition(big), n + m);
    LaurentPoly rhs(arity);
    HalfInt box = c.u - c.v;
    partitions_in_box(l, box, Grid::Integer, false, [&](const SignedPartition& mu) {
        std::vector<HalfInt> m1 = mu.parts();
        m1.resize(n, HalfInt(0));
        std::vector<HalfInt> m2 = mu.parts();
        m2.resize(m, HalfInt(0));
        rhs += char_poly(CharFamily::SchurA, SignedPartition(m1), n)
                   .inverted_all()
                   .embedded(arity, iota_slots(0, n)) *
               char_poly(CharFamily::SchurA, SignedPartition(m2), m).embedded(arity, iota_slots(n, m));
    });
    LaurentPoly::Exps shift(arity, 0);
    for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<int>(c.u.doubled().get_si());
    for (std::size_t i = n; i < arity; ++i) shift[i] = static_cast<int>(c.v.doubled().get_si());
    return check_poly(lhs, rhs.shifted(shift));
}

IdentityOutcome verify_kratt_c(const IdentityCase& c, long k) {
    const std::size_t N = c.n;
    if (!c.u.is_integer() || c.u.sign() < 0) return invalid("integer u >= 0 required");
    if (k < 0 || k > static_cast<long>(N)) return invalid("needs 0 <= k <= N");
    const HalfInt two_u = c.u + c.u;
    LaurentPoly lhs(N);
    partitions_in_box(N, two_u, Grid::Integer, false, [&](const SignedPartition& la) {
        long odd = 0;
        for (const auto& part : la.parts())
            if ((part.doubled().get_si() / 2) % 2 != 0) ++odd;
        if (odd == k) lhs += char_poly(CharFamily::SchurA, la, N);
    });
    std::vector<HalfInt> parts(N - static_cast<std::size_t>(k), c.u);
    parts.insert(parts.end(), static_cast<std::size_t>(k), c.u - HalfInt(1));
    LaurentPoly rhs = sp_even_or_zero(parts, N);
    rhs = rhs.shifted(LaurentPoly::Exps(N, static_cast<int>(c.u.doubled().get_si())));
    return check_poly(lhs, rhs);
}

IdentityOutcome verify_kratt_d(const IdentityCase& c, long k) {
    const std::size_t N = c.n;
    if (c.u.sign() < 0) return invalid("u >= 0 required");
    if (k < 0 || HalfInt(k) > c.u + c.u) return invalid("needs 0 <= k <= 2u");
    const HalfInt two_u = c.u + c.u;
    LaurentPoly lhs(N);
    partitions_in_box(N, two_u, Grid::Integer, false, [&](const SignedPartition& la) {
        long alt = 0;
        for (std::size_t i = 1; i <= N; ++i) {
            long d = (two_u - la.part_or_zero1(i)).doubled().get_si() / 2;
            alt += ((N - i) % 2 == 0) ? d : -d;
        }
        if (alt == k) lhs += char_poly(CharFamily::SchurA, la, N);
    });
    HalfInt last = c.u - HalfInt(k);
    std::vector<HalfInt> parts(N - 1, c.u);
    parts.push_back(last.abs());
    SignedPartition shp(parts, last.sign() < 0 ? -1 : +1);
    LaurentPoly rhs = char_poly(CharFamily::SoEven, shp, N)
                          .shifted(LaurentPoly::Exps(N, static_cast<int>(c.u.doubled().get_si())));
    return check_poly(lhs, rhs);
}

IdentityOutcome verify_kratt_a(const IdentityCase& c, long k) {
    const std::size_t n = c.n;
    if (!c.u.is_integer() || c.u.sign() < 0) return invalid("integer u >= 0 required");
    if (k < 0 || HalfInt(k) > c.u) return invalid("needs 0 <= k <= u");
    LaurentPoly lhs(n);
    partitions_in_box(n, c.u, Grid::Integer, false, [&](const SignedPartition& la) {
        HalfInt alt(0);
        for (std::size_t i = 1; i <= n; ++i) {
            HalfInt d = c.u - la.part_or_zero1(i);
            alt += ((n - i) % 2 == 0) ? d : d.negated();
        }
        if (alt == HalfInt(k)) lhs += char_poly(CharFamily::SpEven, la, n);
    });
    std::vector<HalfInt> parts(n - 1, c.u);
    parts.push_back(c.u - HalfInt(k));
    parts.insert(parts.end(), n, HalfInt(0));
    LaurentPoly rhs = char_poly(CharFamily::SchurA, SignedPartition(parts), 2 * n);
    for (std::size_t i = 0; i < n; ++i) rhs = rhs.folded_inverse(n, i);
    return check_poly(lhs, rhs);
}

IdentityOutcome verify_dual_pieri(const IdentityCase& c, long k) {
    const std::size_t N = c.n;
    if (!c.u.is_integer()) return invalid("integer box required");
    if (k < 0 || k > static_cast<long>(N)) return invalid("needs 0 <= k <= N");
    // e_k as a polynomial.
    LaurentPoly ek(N);
    for (unsigned mask = 0; mask < (1u << N); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        LaurentPoly::Exps e(N, 0);
        for (std::size_t i = 0; i < N; ++i) e[i] = ((mask >> i) & 1) ? 2 : 0;
        ek.add_term(e, 1);
    }
    IdentityOutcome out;
    out.holds = true;
    partitions_in_box(N, c.u, Grid::Integer, false, [&](const SignedPartition& nu) {
        if (!out.holds) return;
        LaurentPoly lhs(N);
        for (unsigned mask = 0; mask < (1u << N); ++mask) {
            if (__builtin_popcount(mask) != k) continue;
            std::vector<HalfInt> parts;
            for (std::size_t i = 0; i < N; ++i)
                parts.push_back(nu.part_or_zero1(i + 1) + HalfInt(((mask >> i) & 1) ? 1 : 0));
            lhs += schur_or_zero(parts, N);
        }
        LaurentPoly rhs = ek * char_poly(CharFamily::SchurA, nu, N);
        if (lhs != rhs) {
            out.holds = false;
            out.detail = "fails at nu = " + nu.to_string() + ": " + mismatch(lhs, rhs);
            out.sides = std::make_pair(lhs, rhs);
        }
    });
    return out;
}

IdentityOutcome verify_cb_littlewood(const IdentityCase& c) {
    const std::size_t N = c.n;
    const std::size_t arity = N + 1;
    LaurentPoly lhs = char_poly(CharFamily::CBInterp, SignedPartition::rectangle(N, c.u), N);
    LaurentPoly rhs(arity);
    const HalfInt two_u = c.u + c.u;
    partitions_in_box(N, two_u, Grid::Integer, false, [&](const SignedPartition& mu) {
        long odd = 0;
        for (const auto& part : mu.parts())
            if ((part.doubled().get_si() / 2) % 2 != 0) ++odd;
        LaurentPoly::Exps shift(arity, 0);
        shift[N] = static_cast<int>(2 * odd);
        rhs += char_poly(CharFamily::SchurA, mu, N).embedded(arity, iota_slots(0, N)).shifted(shift);
    });
    LaurentPoly::Exps down(arity, 0);
    for (std::size_t i = 0; i < N; ++i) down[i] = -static_cast<int>(c.u.doubled().get_si());
    return check_poly(lhs, rhs.shifted(down));
}

IdentityOutcome verify_db_littlewood(const IdentityCase& c) {
    const std::size_t N = c.n;
    const std::size_t arity = N + 1;
    std::vector<bool> flip(arity, true);
    flip[N] = false;  // invert the x-variables only
    LaurentPoly lhs =
        char_poly(CharFamily::DBInterp, SignedPartition::rectangle(N, c.u), N).inverted(flip);
    LaurentPoly rhs(arity);
    const HalfInt two_u = c.u + c.u;
    partitions_in_box(N, two_u, Grid::Integer, false, [&](const SignedPartition& mu) {
        long alt = 0;
        for (std::size_t i = 1; i <= N; ++i) {
            long v = mu.part_or_zero1(i).doubled().get_si() / 2;
            alt += (i % 2 == 1) ? v : -v;
        }
        LaurentPoly::Exps shift(arity, 0);
        shift[N] = static_cast<int>(2 * alt);
        rhs += char_poly(CharFamily::SchurA, mu, N).embedded(arity, iota_slots(0, N)).shifted(shift);
    });
    LaurentPoly::Exps down(arity, 0);
    for (std::size_t i = 0; i < N; ++i) down[i] = -static_cast<int>(c.u.doubled().get_si());
    return check_poly(lhs, rhs.shifted(down));
}

IdentityOutcome verify_schur_littlewood_sp(const IdentityCase& c) {
    const std::size_t n = c.n;
    if (!c.u.is_integer()) return invalid("integer u required");
    const std::size_t arity = n + 1;
    std::vector<HalfInt> parts(n, c.u);
    parts.resize(2 * n + 1, HalfInt(0));
    LaurentPoly big = char_poly(CharFamily::SchurA, SignedPartition(parts), 2 * n + 1);
    // x_i^{-1} for the first block, x_i for the second, alpha for the last.
    std::vector<std::pair<std::size_t, int>> map(2 * n + 1);
    for (std::size_t i = 0; i < n; ++i) map[i] = {i, -1};
    for (std::size_t i = 0; i < n; ++i) map[n + i] = {i, +1};
    map[2 * n] = {n, +1};
    LaurentPoly lhs = big.remapped(arity, map);
    LaurentPoly rhs(arity);
    partitions_in_box(n, c.u, Grid::Integer, false, [&](const SignedPartition& la) {
        HalfInt alt(0);
        for (std::size_t i = 1; i <= n; ++i) {
            HalfInt d = c.u - la.part_or_zero1(i);
            alt += ((n - i) % 2 == 0) ? d : d.negated();
        }
        LaurentPoly::Exps shift(arity, 0);
        shift[n] = static_cast<int>(alt.doubled().get_si());
        rhs += char_poly(CharFamily::SpEven, la, n).embedded(arity, iota_slots(0, n)).shifted(shift);
    });
    return check_poly(lhs, rhs);
}

IdentityOutcome verify_inner(const IdentityCase& c) {
    auto sweep = [&](long max_k, const std::function<IdentityOutcome(long)>& f) {
        if (c.k >= 0) return f(c.k);
        IdentityOutcome all;
        all.holds = true;
        for (long k = 0; k <= max_k; ++k) {
            IdentityOutcome one = f(k);
            if (!one.valid) return one;
            if (!one.holds) {
                one.detail = "k=" + std::to_string(k) + ": " + one.detail;
                return one;
            }
        }
        return all;
    };
    switch (c.id) {
        case IdentityId::DecompCB: return verify_decomp_cb(c);
        case IdentityId::DecompC: return verify_decomp_c(c);
        case IdentityId::DecompB: return verify_decomp_b(c);
        case IdentityId::DecompOddSp: return verify_decomp_odd_sp(c);
        case IdentityId::DecompD: return verify_decomp_d(c);
        case IdentityId::DecompBintoD: return verify_decomp_b_into_d(c);
        case IdentityId::DecompA: return verify_decomp_a(c);
        case IdentityId::KrattC:
            return sweep(static_cast<long>(c.n), [&](long k) { return verify_kratt_c(c, k); });
        case IdentityId::KrattD:
            return sweep((c.u + c.u).doubled().get_si() / 2,
                         [&](long k) { return verify_kratt_d(c, k); });
        case IdentityId::KrattA:
            return sweep(c.u.doubled().get_si() / 2, [&](long k) { return verify_kratt_a(c, k); });
        case IdentityId::DualPieri:
            return sweep(static_cast<long>(c.n), [&](long k) { return verify_dual_pieri(c, k); });
        case IdentityId::CBLittlewood: return verify_cb_littlewood(c);
        case IdentityId::DBLittlewood: return verify_db_littlewood(c);
        case IdentityId::SchurLittlewoodSp: return verify_schur_littlewood_sp(c);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

IdentityOutcome verify_identity(const IdentityCase& c) {
    auto started = std::chrono::steady_clock::now();
    IdentityOutcome out;
    try {
        out = verify_inner(c);
    } catch (const std::invalid_argument& e) {
        out = invalid(e.what());
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return out;
}

std::vector<IdentityCase> default_suite() {
    std::vector<IdentityCase> cases;
    auto add = [&](IdentityId id, std::size_t n, std::size_t m, long u2, long v2 = 0, int sign = +1) {
        IdentityCase c;
        c.id = id;
        c.n = n;
        c.m = m;
        c.u = HalfInt::from_doubled(u2);
        c.v = HalfInt::from_doubled(v2);
        c.sign = sign;
        cases.push_back(c);
    };
    add(IdentityId::DecompCB, 1, 1, 2);
    add(IdentityId::DecompCB, 2, 1, 1);  // u = 1/2
    add(IdentityId::DecompC, 1, 1, 2);
    add(IdentityId::DecompB, 1, 1, 1);
    add(IdentityId::DecompOddSp, 1, 1, 2);
    add(IdentityId::DecompD, 1, 1, 2, 0, -1);
    add(IdentityId::DecompBintoD, 1, 2, 2);
    add(IdentityId::DecompA, 1, 1, 2, 0);
    add(IdentityId::KrattC, 2, 0, 2);
    add(IdentityId::KrattD, 2, 0, 1);  // u = 1/2
    add(IdentityId::KrattA, 2, 0, 2);
    add(IdentityId::DualPieri, 2, 0, 4);
    add(IdentityId::CBLittlewood, 2, 0, 2);
    add(IdentityId::DBLittlewood, 2, 0, 2);
    add(IdentityId::SchurLittlewoodSp, 2, 0, 2);
    return cases;
}

std::vector<IdentityCase> full_suite() {
    std::vector<IdentityCase> cases;
    auto add = [&](IdentityCase c) { cases.push_back(c); };
    auto us_both = [](long max_u) {
        std::vector<HalfInt> us;
        for (long d = 0; d <= 2 * max_u; ++d) us.push_back(HalfInt::from_doubled(d));
        return us;
    };
    const long max_u = 3;
    // Two-group decompositions: n + m <= 4.
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t m = 1; n + m <= 4 && m <= n + 1; ++m)
            for (const HalfInt& u : us_both(max_u)) {
                IdentityCase c;
                c.n = n;
                c.m = m;
                c.u = u;
                if (n >= m) {
                    c.id = IdentityId::DecompCB;
                    add(c);
                    c.id = IdentityId::DecompB;
                    add(c);
                    if (u.is_integer()) {
                        c.id = IdentityId::DecompC;
                        add(c);
                        c.id = IdentityId::DecompOddSp;
                        add(c);
                    }
                    c.id = IdentityId::DecompD;
                    c.sign = +1;
                    add(c);
                    c.sign = -1;
                    add(c);
                    c.sign = +1;
                }
                if (n + 1 >= m) {
                    c.id = IdentityId::DecompBintoD;
                    add(c);
                }
            }
    // decompA has no n >= m constraint; integer boxes with v <= u.
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t m = 1; n + m <= 4; ++m)
            for (long uu = 0; uu <= max_u; ++uu)
                for (long vv = 0; vv <= uu; ++vv) {
                    IdentityCase c;
                    c.id = IdentityId::DecompA;
                    c.n = n;
                    c.m = m;
                    c.u = HalfInt(uu);
                    c.v = HalfInt(vv);
                    add(c);
                }
    // Single-group identities: N <= 4.
    for (std::size_t N = 1; N <= 4; ++N)
        for (const HalfInt& u : us_both(max_u)) {
            IdentityCase c;
            c.n = N;
            c.m = 0;
            c.u = u;
            c.id = IdentityId::CBLittlewood;
            add(c);
            c.id = IdentityId::DBLittlewood;
            add(c);
            c.id = IdentityId::KrattD;
            add(c);
            if (u.is_integer()) {
                c.id = IdentityId::KrattC;
                add(c);
                c.id = IdentityId::KrattA;
                add(c);
                c.id = IdentityId::DualPieri;
                add(c);
                c.id = IdentityId::SchurLittlewoodSp;
                add(c);
            }
        }
    return cases;
}

bool SuiteReport::all_passed() const {
    for (const auto& [c, o] : results)
        if (!o.valid || !o.holds) return false;
    return true;
}

SuiteReport run_suite(const std::vector<IdentityCase>& cases, unsigned workers) {
    SuiteReport report;
    report.results.resize(cases.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i)
            report.results[i] = {cases[i], verify_identity(cases[i])};
        return report;
    }
    std::vector<std::future<IdentityOutcome>> futs(cases.size());
    std::size_t next = 0;
    while (next < cases.size()) {
        std::size_t batch = std::min<std::size_t>(workers, cases.size() - next);
        for (std::size_t k = 0; k < batch; ++k)
            futs[next + k] = std::async(std::launch::async, verify_identity, cases[next + k]);
        for (std::size_t k = 0; k < batch; ++k)
            report.results[next + k] = {cases[next + k], futs[next + k].get()};
        next += batch;
    }
    return report;
}

}  // namespace charlab
