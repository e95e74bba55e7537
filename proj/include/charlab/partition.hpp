#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "charlab/budget.hpp"
#include "charlab/half_int.hpp"

namespace charlab {

enum class Grid { Integer, Half };

inline Grid grid_of(const HalfInt& v) { return v.is_integer() ? Grid::Integer : Grid::Half; }

// Weakly decreasing absolute parts on a single grid, with a sign attached to
// the last part. (lambda,+) with last part 0 is canonicalized to sign '+'.
class SignedPartition {
public:
    SignedPartition() = default;

    // parts are the absolute values; must be weakly decreasing and >= 0.
    SignedPartition(std::vector<HalfInt> parts, int sign = +1);

    static SignedPartition empty() { return SignedPartition(); }
    static SignedPartition rectangle(std::size_t n, const HalfInt& u, int sign = +1);
    // (u^(k), tail...) concatenation.
    static SignedPartition with_prefix(std::size_t k, const HalfInt& u, const SignedPartition& tail);

    std::size_t declared_length() const { return parts_.size(); }
    // Number of nonzero parts.
    std::size_t length() const;
    const std::vector<HalfInt>& parts() const { return parts_; }
    const HalfInt& part(std::size_t i) const { return parts_[i]; }  // 0-based
    // part(i), with missing parts read as 0 (1-based convenience used by interlacing).
    HalfInt part_or_zero1(std::size_t i1) const {
        return (i1 >= 1 && i1 <= parts_.size()) ? parts_[i1 - 1] : HalfInt(0);
    }
    int sign() const { return sign_; }

    // Signed value of the last part (epsilon * lambda_n).
    HalfInt last_signed() const;

    bool empty_shape() const { return length() == 0; }
    // All parts on the integer grid. (The empty partition counts as integer.)
    bool on_integer_grid() const;
    // All parts half-integers (implies every part > 0).
    bool on_half_grid() const;
    Grid grid() const { return on_integer_grid() ? Grid::Integer : Grid::Half; }

    HalfInt norm() const;  // |lambda| = sum of parts (absolute values)

    SignedPartition unsigned_copy() const { return SignedPartition(parts_, +1); }
    // Drops trailing zero parts (sign must be + unless nothing is dropped).
    SignedPartition truncated(std::size_t n) const;

    friend bool operator==(const SignedPartition& a, const SignedPartition& b) {
        return a.sign_ == b.sign_ && a.parts_ == b.parts_;
    }
    friend bool operator!=(const SignedPartition& a, const SignedPartition& b) { return !(a == b); }
    friend bool operator<(const SignedPartition& a, const SignedPartition& b);

    std::string to_string() const;
    static std::optional<SignedPartition> parse(const std::string& csv);

private:
    std::vector<HalfInt> parts_;  // absolute values, weakly decreasing
    int sign_ = +1;
};

// lambda_i >= mu_i >= lambda_{i+1} for all i, missing parts read as 0.
// Signs never participate; with abs_mode the caller has already passed
// absolute values (kept as an explicit flag for orthogonal-pattern call sites).
bool interlaces(const SignedPartition& mu, const SignedPartition& lambda);

// Containment |mu_i| <= |lambda_i| for all i (signs ignored).
bool contained_in(const SignedPartition& mu, const SignedPartition& lambda);

// Enumerates every unsigned n-partition (grid Integer) or n-half-partition
// (grid Half) with parts <= u, in ascending lexicographic order of the part
// vector. signed_mode additionally emits the negative-sign duplicate right
// after each partition whose last part is > 0.
// Counts against the global enumeration budget.
void partitions_in_box(std::size_t n, const HalfInt& u, Grid grid, bool signed_mode,
                       const std::function<void(const SignedPartition&)>& visit);

std::vector<SignedPartition> partitions_in_box_list(std::size_t n, const HalfInt& u, Grid grid,
                                                    bool signed_mode = false);

}  // namespace charlab
