#include "charlab/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace charlab {

LaurentPoly LaurentPoly::constant(std::size_t arity, const Int& c) {
    LaurentPoly p(arity);
    if (c != 0) p.terms_.emplace(Exps(arity, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::size_t arity, Exps exps, const Int& c) {
    if (exps.size() != arity) throw std::invalid_argument("monomial: exponent arity mismatch");
    LaurentPoly p(arity);
    if (c != 0) p.terms_.emplace(std::move(exps), c);
    return p;
}

void LaurentPoly::add_term(const Exps& exps, const Int& c) {
    if (exps.size() != arity_) throw std::invalid_argument("add_term: exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.arity_ != arity_) throw std::invalid_argument("poly add: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.arity_ != arity_) throw std::invalid_argument("poly sub: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("poly mul: arity mismatch");
    LaurentPoly out(a.arity_);
    LaurentPoly::Exps e(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
    LaurentPoly out(arity_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

LaurentPoly LaurentPoly::shifted(const Exps& exps) const {
    if (exps.size() != arity_) throw std::invalid_argument("shifted: arity mismatch");
    LaurentPoly out(arity_);
    Exps e(arity_);
    for (const auto& [e0, c] : terms_) {
        for (std::size_t i = 0; i < arity_; ++i) e[i] = e0[i] + exps[i];
        out.terms_.emplace(e, c);
    }
    return out;
}

LaurentPoly LaurentPoly::embedded(std::size_t target_arity, const std::vector<std::size_t>& slot) const {
    if (slot.size() != arity_) throw std::invalid_argument("embedded: slot map arity mismatch");
    for (std::size_t s : slot)
        if (s >= target_arity) throw std::invalid_argument("embedded: slot out of range");
    LaurentPoly out(target_arity);
    Exps e(target_arity, 0);
    for (const auto& [e0, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < arity_; ++i) e[slot[i]] += e0[i];
        out.add_term(e, c);
    }
    return out;
}

LaurentPoly LaurentPoly::inverted(const std::vector<bool>& flag) const {
    if (flag.size() != arity_) throw std::invalid_argument("inverted: flag arity mismatch");
    LaurentPoly out(arity_);
    Exps e(arity_);
    for (const auto& [e0, c] : terms_) {
        for (std::size_t i = 0; i < arity_; ++i) e[i] = flag[i] ? -e0[i] : e0[i];
        out.terms_.emplace(e, c);
    }
    return out;
}

LaurentPoly LaurentPoly::inverted_all() const { return inverted(std::vector<bool>(arity_, true)); }

LaurentPoly LaurentPoly::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != arity_) throw std::invalid_argument("permuted: perm arity mismatch");
    LaurentPoly out(arity_);
    Exps e(arity_);
    for (const auto& [e0, c] : terms_) {
        for (std::size_t i = 0; i < arity_; ++i) e[perm[i]] = e0[i];
        out.terms_.emplace(e, c);
    }
    return out;
}

LaurentPoly LaurentPoly::specialized_one(std::size_t slot) const {
    if (slot >= arity_) throw std::invalid_argument("specialized_one: slot out of range");
    LaurentPoly out(arity_ - 1);
    Exps e(arity_ - 1);
    for (const auto& [e0, c] : terms_) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < arity_; ++i)
            if (i != slot) e[k++] = e0[i];
        out.add_term(e, c);
    }
    return out;
}

LaurentPoly LaurentPoly::folded_inverse(std::size_t from, std::size_t to) const {
    if (from >= arity_ || to >= arity_ || from == to)
        throw std::invalid_argument("folded_inverse: bad slots");
    LaurentPoly out(arity_ - 1);
    Exps e(arity_ - 1);
    for (const auto& [e0, c] : terms_) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < arity_; ++i) {
            if (i == from) continue;
            int v = e0[i];
            if (i == to) v -= e0[from];
            e[k++] = v;
        }
        out.add_term(e, c);
    }
    return out;
}

LaurentPoly LaurentPoly::remapped(std::size_t target_arity,
                                  const std::vector<std::pair<std::size_t, int>>& slot_sign) const {
    if (slot_sign.size() != arity_) throw std::invalid_argument("remapped: map arity mismatch");
    for (const auto& [s, sg] : slot_sign)
        if (s >= target_arity || (sg != 1 && sg != -1))
            throw std::invalid_argument("remapped: bad slot or sign");
    LaurentPoly out(target_arity);
    Exps e(target_arity);
    for (const auto& [e0, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < arity_; ++i) e[slot_sign[i].first] += slot_sign[i].second * e0[i];
        out.add_term(e, c);
    }
    return out;
}

Rat LaurentPoly::eval(const SqrtPoint& at) const {
    if (at.size() != arity_) throw std::invalid_argument("eval: point arity mismatch");
    Rat sum(0);
    for (const auto& [e, c] : terms_) {
        Rat term(c);
        for (std::size_t i = 0; i < arity_; ++i)
            if (e[i] != 0) term *= rat_pow(at.roots[i], e[i]);
        sum += term;
    }
    return sum;
}

Rat LaurentPoly::eval(const SqrtPoint& at, const Rat& param) const {
    if (at.size() + 1 != arity_) throw std::invalid_argument("eval: point arity mismatch");
    Rat sum(0);
    for (const auto& [e, c] : terms_) {
        int pe = e[arity_ - 1];
        if (pe % 2 != 0) throw std::domain_error("eval: parameter exponent not an integer");
        Rat term(c);
        for (std::size_t i = 0; i + 1 < arity_; ++i)
            if (e[i] != 0) term *= rat_pow(at.roots[i], e[i]);
        if (pe != 0) term *= rat_pow(param, pe / 2);
        sum += term;
    }
    return sum;
}

bool LaurentPoly::all_coeffs_nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (std::size_t i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            os << "*";
            if (i < var_names.size())
                os << var_names[i];
            else
                os << "x" << (i + 1);
            os << "^";
            if (e[i] % 2 == 0)
                os << (e[i] / 2);
            else
                os << "(" << e[i] << "/2)";
        }
    }
    return os.str();
}

}  // namespace charlab
