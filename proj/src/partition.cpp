#include "charlab/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace charlab {

SignedPartition::SignedPartition(std::vector<HalfInt> parts, int sign)
    : parts_(std::move(parts)), sign_(sign >= 0 ? +1 : -1) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].sign() < 0) throw std::invalid_argument("SignedPartition: parts must be >= 0");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("SignedPartition: parts must be weakly decreasing");
    }
    if (!parts_.empty()) {
        Grid g = grid_of(parts_[0]);
        for (const auto& p : parts_)
            if (grid_of(p) != g) throw std::invalid_argument("SignedPartition: mixed grids");
        if (g == Grid::Half && parts_.back().sign() <= 0)
            throw std::invalid_argument("SignedPartition: half-grid parts must be positive");
    }
    if (parts_.empty() || parts_.back() == HalfInt(0)) sign_ = +1;
}

SignedPartition SignedPartition::rectangle(std::size_t n, const HalfInt& u, int sign) {
    return SignedPartition(std::vector<HalfInt>(n, u), sign);
}

SignedPartition SignedPartition::with_prefix(std::size_t k, const HalfInt& u, const SignedPartition& tail) {
    std::vector<HalfInt> parts(k, u);
    parts.insert(parts.end(), tail.parts_.begin(), tail.parts_.end());
    return SignedPartition(std::move(parts), tail.sign_);
}

std::size_t SignedPartition::length() const {
    std::size_t n = parts_.size();
    while (n > 0 && parts_[n - 1] == HalfInt(0)) --n;
    return n;
}

HalfInt SignedPartition::last_signed() const {
    if (parts_.empty()) return HalfInt(0);
    return sign_ < 0 ? parts_.back().negated() : parts_.back();
}

bool SignedPartition::on_integer_grid() const {
    for (const auto& p : parts_)
        if (!p.is_integer()) return false;
    return true;
}

bool SignedPartition::on_half_grid() const {
    if (parts_.empty()) return false;
    for (const auto& p : parts_)
        if (p.is_integer()) return false;
    return true;
}

HalfInt SignedPartition::norm() const {
    HalfInt s(0);
    for (const auto& p : parts_) s += p;
    return s;
}

SignedPartition SignedPartition::truncated(std::size_t n) const {
    if (n >= parts_.size()) return *this;
    std::vector<HalfInt> head(parts_.begin(), parts_.begin() + n);
    return SignedPartition(std::move(head), +1);
}

bool operator<(const SignedPartition& a, const SignedPartition& b) {
    if (a.parts_ != b.parts_) {
        return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                            b.parts_.end());
    }
    return a.sign_ > b.sign_;  // '+' before '-'
}

std::string SignedPartition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        if (i + 1 == parts_.size() && sign_ < 0) os << "-";
        os << parts_[i].to_string();
    }
    os << ")";
    return os.str();
}

std::optional<SignedPartition> SignedPartition::parse(const std::string& csv) {
    std::vector<HalfInt> parts;
    int sign = +1;
    std::string body = csv;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') return std::nullopt;
        body = body.substr(1, body.size() - 2);
    }
    if (body.empty()) return SignedPartition();
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        bool neg = !tok.empty() && tok.front() == '-';
        auto v = HalfInt::parse(neg ? tok.substr(1) : tok);
        if (!v) return std::nullopt;
        parts.push_back(*v);
        if (neg) sign = -1;
    }
    // Only the final part may carry the sign.
    if (sign < 0) {
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1]) return std::nullopt;
    }
    try {
        return SignedPartition(std::move(parts), sign);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

bool interlaces(const SignedPartition& mu, const SignedPartition& lambda) {
    std::size_t n = std::max(mu.declared_length(), lambda.declared_length()) + 1;
    for (std::size_t i = 1; i <= n; ++i) {
        if (lambda.part_or_zero1(i) < mu.part_or_zero1(i)) return false;
        if (mu.part_or_zero1(i) < lambda.part_or_zero1(i + 1)) return false;
    }
    return true;
}

bool contained_in(const SignedPartition& mu, const SignedPartition& lambda) {
    std::size_t n = std::max(mu.declared_length(), lambda.declared_length());
    for (std::size_t i = 1; i <= n; ++i)
        if (mu.part_or_zero1(i) > lambda.part_or_zero1(i)) return false;
    return true;
}

void partitions_in_box(std::size_t n, const HalfInt& u, Grid grid, bool signed_mode,
                       const std::function<void(const SignedPartition&)>& visit) {
    if (u.sign() < 0) throw std::invalid_argument("partitions_in_box: u must be >= 0");
    if (grid == Grid::Half && u.is_integer() && !(HalfInt(0) < u))
        throw std::invalid_argument("partitions_in_box: half grid needs u >= 1/2");
    BudgetCounter budget;
    // Half-grid parts live in {1/2, 3/2, ...}; integer parts in {0, 1, ...}.
    const long step = 2;
    const Int lo = (grid == Grid::Integer) ? Int(0) : Int(1);
    Int hi = u.doubled();
    if (grid == Grid::Half && mpz_even_p(hi.get_mpz_t())) hi -= 1;
    if (grid == Grid::Integer && mpz_odd_p(hi.get_mpz_t())) hi -= 1;
    if (n == 0) {
        budget.tick();
        visit(SignedPartition());
        return;
    }
    if (hi < lo) return;  // empty box (half grid with u < 1/2)

    std::vector<HalfInt> parts(n, HalfInt(0));
    std::function<void(std::size_t, const Int&)> rec = [&](std::size_t i, const Int& cap) {
        if (i == n) {
            budget.tick();
            SignedPartition p(parts, +1);
            visit(p);
            if (signed_mode && parts.back().sign() > 0) {
                budget.tick();
                visit(SignedPartition(parts, -1));
            }
            return;
        }
        for (Int v = lo; v <= cap; v += step) {
            parts[i] = HalfInt::from_doubled(v);
            rec(i + 1, v);
        }
    };
    // Lexicographic ascending on the tuple (parts[0], parts[1], ...) is what
    // the recursion produces: earlier slots advance slowest.
    rec(0, hi);
}

std::vector<SignedPartition> partitions_in_box_list(std::size_t n, const HalfInt& u, Grid grid,
                                                    bool signed_mode) {
    std::vector<SignedPartition> out;
    partitions_in_box(n, u, grid, signed_mode, [&](const SignedPartition& p) { out.push_back(p); });
    return out;
}

}  // namespace charlab
