#pragma once

#include <cstdint>
#include <vector>

#include "charlab/half_int.hpp"

namespace charlab {

// Index set of a Young diagram, 1-based: (i,j) with j <= row_lengths[i-1].
class YoungDomain {
public:
    YoungDomain() = default;
    explicit YoungDomain(std::vector<std::size_t> row_lengths);
    static YoungDomain staircase(std::size_t n);  // (n, n-1, ..., 1)

    std::size_t rows() const { return lens_.size(); }
    std::size_t row_len(std::size_t i) const { return i >= 1 && i <= lens_.size() ? lens_[i - 1] : 0; }
    bool contains(std::size_t i, std::size_t j) const { return j >= 1 && j <= row_len(i); }
    // No (i,j+1), (i+1,j), (i+1,j+1) in the domain.
    bool is_outer(std::size_t i, std::size_t j) const;
    // (i+1,j+1) not in the domain (last index of its diagonal).
    bool is_border(std::size_t i, std::size_t j) const;
    bool is_symmetric() const;
    std::size_t cell_count() const;

    friend bool operator==(const YoungDomain& a, const YoungDomain& b) { return a.lens_ == b.lens_; }

private:
    std::vector<std::size_t> lens_;
};

enum class OuterMonoid { Integer, Half };

// Young-diagram-shaped array with inner entries in Z>=0 and outer entries in
// Z>=0 or (1/2)Z>=0 depending on the tag.
struct MonoidTaggedArray {
    YoungDomain domain;
    std::vector<std::vector<HalfInt>> entries;
    OuterMonoid outer = OuterMonoid::Integer;

    const HalfInt& at(std::size_t i, std::size_t j) const { return entries[i - 1][j - 1]; }
    HalfInt& at(std::size_t i, std::size_t j) { return entries[i - 1][j - 1]; }

    friend bool operator==(const MonoidTaggedArray& a, const MonoidTaggedArray& b) {
        return a.domain == b.domain && a.entries == b.entries && a.outer == b.outer;
    }
};

MonoidTaggedArray make_array(std::vector<std::size_t> row_lengths,
                             std::vector<std::vector<HalfInt>> entries,
                             OuterMonoid outer = OuterMonoid::Integer);

// Entries non-negative, inner on the integer grid, outer per tag.
bool validate_array(const MonoidTaggedArray& w);
// t_{i-1,j} <= t_{i,j} and t_{i,j-1} <= t_{i,j}.
bool satisfies_output_ordering(const MonoidTaggedArray& t);
bool is_symmetric(const MonoidTaggedArray& w);

// Fomin growth of the RSK correspondence with the (max,+) local rule.
MonoidTaggedArray rsk_forward(const MonoidTaggedArray& w);
// Unique preimage; throws std::domain_error when t is not in the RSK image.
MonoidTaggedArray rsk_inverse(const MonoidTaggedArray& t);

// Max over directed paths (1,1) -> end of summed entries.
HalfInt lpp_on_array(const MonoidTaggedArray& w, std::size_t end_i, std::size_t end_j);

// sigma_k: sum of entries on the diagonal j - i = k.
HalfInt diagonal_sum(const MonoidTaggedArray& t, long k);

}  // namespace charlab
