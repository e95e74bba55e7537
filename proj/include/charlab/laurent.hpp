#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charlab/half_int.hpp"
#include "charlab/numeric.hpp"

namespace charlab {

// Evaluation point for Laurent polynomials with exponents in (1/2)Z:
// variable x_i takes the value roots[i]^2, so x_i^(1/2) = roots[i] exactly.
struct SqrtPoint {
    std::vector<Rat> roots;

    explicit SqrtPoint(std::vector<Rat> r = {}) : roots(std::move(r)) {
        for (const auto& q : roots)
            if (q <= 0) throw std::invalid_argument("SqrtPoint: roots must be positive");
    }
    std::size_t size() const { return roots.size(); }
    Rat value(std::size_t i) const { return roots[i] * roots[i]; }
};

// Multivariate Laurent polynomial: exponents in (1/2)Z per variable (stored
// doubled as machine ints), coefficients arbitrary-precision integers.
// No zero coefficient is ever stored.
class LaurentPoly {
public:
    using Exps = std::vector<int>;  // doubled exponents, length == arity
    using TermMap = std::map<Exps, Int>;

    explicit LaurentPoly(std::size_t arity = 0) : arity_(arity) {}

    static LaurentPoly zero(std::size_t arity) { return LaurentPoly(arity); }
    static LaurentPoly constant(std::size_t arity, const Int& c);
    static LaurentPoly monomial(std::size_t arity, Exps exps, const Int& c);

    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // terms[exps] += c, erasing the entry if it cancels.
    void add_term(const Exps& exps, const Int& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Int& c) const;
    // Multiply by the monomial with the given doubled exponents.
    LaurentPoly shifted(const Exps& exps) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // --- variable plumbing -------------------------------------------------

    // Move this polynomial's variable i to slot[i] of a wider polynomial.
    LaurentPoly embedded(std::size_t target_arity, const std::vector<std::size_t>& slot) const;
    // x_i -> x_i^{-1} for flagged slots.
    LaurentPoly inverted(const std::vector<bool>& flag) const;
    LaurentPoly inverted_all() const;
    // Swap/permute variables: new exponent vector e'[perm[i]] = e[i].
    LaurentPoly permuted(const std::vector<std::size_t>& perm) const;
    // Set variable `slot` to 1 (drop it).
    LaurentPoly specialized_one(std::size_t slot) const;
    // Fold variable `from` onto variable `to` as its inverse (x_from = x_to^{-1}),
    // dropping slot `from`.
    LaurentPoly folded_inverse(std::size_t from, std::size_t to) const;
    // General substitution x_i -> x_{slot_sign[i].first}^{slot_sign[i].second}
    // with signs in {+1,-1}; several sources may land on one target.
    LaurentPoly remapped(std::size_t target_arity,
                         const std::vector<std::pair<std::size_t, int>>& slot_sign) const;

    // --- evaluation ---------------------------------------------------------

    // Exact value with x_i = at.roots[i]^2; requires at.size() == arity.
    Rat eval(const SqrtPoint& at) const;
    // Same, but the last variable takes the plain rational value `param`
    // (its exponents must be integers); requires at.size() + 1 == arity.
    Rat eval(const SqrtPoint& at, const Rat& param) const;

    bool all_coeffs_nonnegative() const;

    std::string to_string(const std::vector<std::string>& var_names = {}) const;

private:
    std::size_t arity_;
    TermMap terms_;
};

}  // namespace charlab
