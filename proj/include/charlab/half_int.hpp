#pragma once

#include <compare>
#include <optional>
#include <string>

#include "charlab/numeric.hpp"

namespace charlab {

// Element of (1/2)*Z, stored as twice its value. The universal scalar for
// pattern entries, partition parts and Laurent exponents.
class HalfInt {
public:
    HalfInt() : doubled_(0) {}
    explicit HalfInt(long whole) : doubled_(2 * Int(whole)) {}
    explicit HalfInt(const Int& whole) : doubled_(2 * whole) {}

    static HalfInt from_doubled(Int d) { return HalfInt(std::move(d), tag{}); }
    static HalfInt from_doubled(long d) { return HalfInt(Int(d), tag{}); }
    static HalfInt half() { return from_doubled(1); }

    const Int& doubled() const { return doubled_; }
    bool is_integer() const { return mpz_even_p(doubled_.get_mpz_t()) != 0; }
    bool is_half_integer() const { return !is_integer(); }
    int sign() const { return sgn(doubled_); }

    Rat to_rat() const { return make_rat(doubled_, Int(2)); }

    HalfInt abs() const { return from_doubled(::abs(doubled_)); }
    HalfInt negated() const { return from_doubled(-doubled_); }

    friend HalfInt operator+(const HalfInt& a, const HalfInt& b) {
        return from_doubled(a.doubled_ + b.doubled_);
    }
    friend HalfInt operator-(const HalfInt& a, const HalfInt& b) {
        return from_doubled(a.doubled_ - b.doubled_);
    }
    HalfInt& operator+=(const HalfInt& b) {
        doubled_ += b.doubled_;
        return *this;
    }
    HalfInt& operator-=(const HalfInt& b) {
        doubled_ -= b.doubled_;
        return *this;
    }
    HalfInt operator-() const { return negated(); }

    friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.doubled_ == b.doubled_; }
    friend bool operator!=(const HalfInt& a, const HalfInt& b) { return a.doubled_ != b.doubled_; }
    friend bool operator<(const HalfInt& a, const HalfInt& b) { return a.doubled_ < b.doubled_; }
    friend bool operator<=(const HalfInt& a, const HalfInt& b) { return a.doubled_ <= b.doubled_; }
    friend bool operator>(const HalfInt& a, const HalfInt& b) { return a.doubled_ > b.doubled_; }
    friend bool operator>=(const HalfInt& a, const HalfInt& b) { return a.doubled_ >= b.doubled_; }

    // "3", "-2" or "5/2"; never a decimal point.
    std::string to_string() const {
        if (is_integer()) return Int(doubled_ / 2).get_str();
        return doubled_.get_str() + "/2";
    }

    // Accepts "a" or "a/2" (also "a/b" as long as the value lands on the half grid).
    static std::optional<HalfInt> parse(const std::string& s) {
        auto q = parse_rat(s);
        if (!q) return std::nullopt;
        Rat d = *q * 2;
        if (d.get_den() != 1) return std::nullopt;
        return from_doubled(d.get_num());
    }

private:
    struct tag {};
    HalfInt(Int d, tag) : doubled_(std::move(d)) {}
    Int doubled_;
};

inline HalfInt abs(const HalfInt& a) { return a.abs(); }

}  // namespace charlab
