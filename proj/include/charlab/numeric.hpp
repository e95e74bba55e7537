#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace charlab {

using Int = mpz_class;
using Rat = mpq_class;

// q = num/den in lowest terms; throws on den == 0.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for e in Z; e < 0 requires base != 0.
inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    bool neg = e < 0;
    unsigned long a = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (neg && base == 0) throw std::domain_error("rat_pow: negative power of zero");
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    r.canonicalize();
    return neg ? Rat(1) / r : r;
}

// Exact square root when q is a perfect square of a rational, nullopt otherwise.
inline std::optional<Rat> rat_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_num().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_den().get_mpz_t()) == 0) return std::nullopt;
    Rat r;
    mpz_sqrt(r.get_num_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(r.get_den_mpz_t(), q.get_den().get_mpz_t());
    r.canonicalize();
    return r;
}

// Parses "a" or "a/b" with optional leading minus.
inline std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) return std::nullopt;
        Int n(ns), d(ds);
        if (d == 0) return std::nullopt;
        return make_rat(n, d);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace charlab
