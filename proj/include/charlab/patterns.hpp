#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "charlab/budget.hpp"
#include "charlab/partition.hpp"

namespace charlab {

// GT patterns are triangular (row i has i entries); the other three families
// are half-triangular (row i has ceil(i/2) entries).
enum class PatternFamily { GT, Symplectic, Orthogonal, SplitOrthogonal };

std::string family_name(PatternFamily f);
std::optional<PatternFamily> family_from_name(const std::string& s);

inline std::size_t pattern_row_len(PatternFamily f, std::size_t i) {
    return f == PatternFamily::GT ? i : (i + 1) / 2;
}

// Family-tagged interlacing array; rows[i-1] is row i (top row first), the
// bottom row is the shape.
struct Pattern {
    PatternFamily family = PatternFamily::GT;
    std::vector<std::vector<HalfInt>> rows;

    std::size_t height() const { return rows.size(); }
    const HalfInt& at(std::size_t i, std::size_t j) const { return rows[i - 1][j - 1]; }  // 1-based
    HalfInt& at(std::size_t i, std::size_t j) { return rows[i - 1][j - 1]; }

    friend bool operator==(const Pattern& a, const Pattern& b) {
        return a.family == b.family && a.rows == b.rows;
    }
};

// True iff row lengths, grid rules and (absolute-value, for Orthogonal)
// interlacing all hold. Throws on malformed row lengths.
bool validate(const Pattern& p);

// Bottom row as a signed partition; the sign comes from the last odd end for
// odd-height orthogonal patterns, '+' otherwise.
SignedPartition shape(const Pattern& p);

// Successive row-sum differences; absolute values for the Orthogonal family.
std::vector<HalfInt> pattern_type(const Pattern& p);

// atyp(z)_i = 1 iff the odd end z_{2i-1,i} sits on the opposite grid from
// z_{2n,1}. SplitOrthogonal, even height only.
std::vector<int> atyp(const Pattern& p);

// ---------------------------------------------------------------------------
// Fast enumeration. Entries are carried as doubled machine integers; the
// visitor sees the scan object and reads rows directly. Emission order is
// lexicographic in the rows read from bottom to top (row height-1 first, each
// row left to right, entry values ascending), which is the frozen order all
// streams and golden files rely on.
// ---------------------------------------------------------------------------

class PatternScan {
public:
    PatternScan(PatternFamily family, std::size_t height, const SignedPartition& shp);

    PatternFamily family() const { return family_; }
    std::size_t height() const { return height_; }
    std::size_t row_len(std::size_t i) const { return rows_[i - 1].size(); }
    long long entry(std::size_t i, std::size_t j) const { return rows_[i - 1][j - 1]; }  // doubled

    Pattern snapshot() const;

    template <class Visit>
    void run(Visit&& visit) {
        if (height_ == 0) {
            budget_.tick();
            visit(*this);
            return;
        }
        descend(height_ - 1, 1, visit);
    }

private:
    template <class Visit>
    void descend(std::size_t i, std::size_t j, Visit&& visit) {
        if (i == 0) {
            budget_.tick();
            visit(*this);
            return;
        }
        if (j > row_len(i)) {
            descend(i - 1, 1, visit);
            return;
        }
        const bool odd_end = is_odd_end(i, j);
        long long lo = (j + 1 <= row_len(i + 1)) ? std::abs(rows_[i][j]) : 0;
        long long hi = std::abs(rows_[i][j - 1]);
        long long step = 2, par = parity_;
        if (family_ == PatternFamily::SplitOrthogonal && odd_end) {
            step = 1;  // odd ends range over all of (1/2)Z
            par = -1;
        }
        if (par >= 0) {
            if ((lo & 1) != par) ++lo;
            if ((hi & 1) != par) --hi;
        }
        if (family_ == PatternFamily::Orthogonal && odd_end) {
            long long neg_lo = std::max(lo, (long long)(parity_ == 1 ? 1 : 2));
            for (long long v = -hi; v <= -neg_lo; v += step) {
                rows_[i - 1][j - 1] = v;
                descend(i, j + 1, visit);
            }
        }
        for (long long v = lo; v <= hi; v += step) {
            rows_[i - 1][j - 1] = v;
            descend(i, j + 1, visit);
        }
    }

    bool is_odd_end(std::size_t i, std::size_t j) const {
        if (family_ == PatternFamily::GT) return false;
        return (i % 2 == 1) && j == (i + 1) / 2;
    }

    PatternFamily family_;
    std::size_t height_;
    long long parity_;  // doubled-value parity of the bulk grid: 0 integer, 1 half
    std::vector<std::vector<long long>> rows_;
    BudgetCounter budget_;
};

// Streams every pattern of the given family, height and shape exactly once.
void enumerate_patterns(PatternFamily family, std::size_t height, const SignedPartition& shape,
                        const std::function<void(const Pattern&)>& visit);

std::vector<Pattern> enumerate_patterns_list(PatternFamily family, std::size_t height,
                                             const SignedPartition& shape);

std::uint64_t count_patterns(PatternFamily family, std::size_t height, const SignedPartition& shape);

}  // namespace charlab
