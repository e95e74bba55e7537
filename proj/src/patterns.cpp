#include "charlab/patterns.hpp"

#include <stdexcept>

namespace charlab {

std::string family_name(PatternFamily f) {
    switch (f) {
        case PatternFamily::GT: return "gt";
        case PatternFamily::Symplectic: return "symplectic";
        case PatternFamily::Orthogonal: return "orthogonal";
        case PatternFamily::SplitOrthogonal: return "split_orthogonal";
    }
    return "?";
}

std::optional<PatternFamily> family_from_name(const std::string& s) {
    if (s == "gt") return PatternFamily::GT;
    if (s == "symplectic" || s == "sp") return PatternFamily::Symplectic;
    if (s == "orthogonal" || s == "so") return PatternFamily::Orthogonal;
    if (s == "split_orthogonal" || s == "split") return PatternFamily::SplitOrthogonal;
    return std::nullopt;
}

namespace {

void check_row_lengths(const Pattern& p) {
    for (std::size_t i = 1; i <= p.height(); ++i)
        if (p.rows[i - 1].size() != pattern_row_len(p.family, i))
            throw std::invalid_argument("pattern: malformed row lengths");
}

bool is_odd_end_index(PatternFamily f, std::size_t i, std::size_t j) {
    if (f == PatternFamily::GT) return false;
    return (i % 2 == 1) && j == (i + 1) / 2;
}

}  // namespace

bool validate(const Pattern& p) {
    check_row_lengths(p);
    const std::size_t h = p.height();
    if (h == 0) return true;
    const bool abs_mode = p.family == PatternFamily::Orthogonal;

    // Entry-domain rules.
    if (p.family == PatternFamily::GT || p.family == PatternFamily::Symplectic) {
        for (const auto& row : p.rows)
            for (const auto& v : row)
                if (!v.is_integer() || v.sign() < 0) return false;
    } else if (p.family == PatternFamily::SplitOrthogonal) {
        if (h % 2 != 0) return false;
        bool have_grid = false;
        bool grid_half = false;
        for (std::size_t i = 1; i <= h; ++i)
            for (std::size_t j = 1; j <= pattern_row_len(p.family, i); ++j) {
                const HalfInt& v = p.at(i, j);
                if (v.sign() < 0) return false;
                if (is_odd_end_index(p.family, i, j)) continue;
                if (!have_grid) {
                    have_grid = true;
                    grid_half = v.is_half_integer();
                } else if (v.is_half_integer() != grid_half) {
                    return false;
                }
            }
    } else {  // Orthogonal
        bool grid_half = p.at(h, 1).is_half_integer();
        for (std::size_t i = 1; i <= h; ++i)
            for (std::size_t j = 1; j <= pattern_row_len(p.family, i); ++j) {
                const HalfInt& v = p.at(i, j);
                if (v.is_half_integer() != grid_half) return false;
                if (!is_odd_end_index(p.family, i, j) && v.sign() < 0) return false;
            }
    }

    // Interlacing.
    for (std::size_t i = 1; i < h; ++i) {
        std::size_t len_i = pattern_row_len(p.family, i);
        std::size_t len_b = pattern_row_len(p.family, i + 1);
        for (std::size_t j = 1; j <= len_i; ++j) {
            HalfInt v = abs_mode ? p.at(i, j).abs() : p.at(i, j);
            HalfInt up = abs_mode ? p.at(i + 1, j).abs() : p.at(i + 1, j);
            if (up < v) return false;
            if (j + 1 <= len_b) {
                HalfInt lo = abs_mode ? p.at(i + 1, j + 1).abs() : p.at(i + 1, j + 1);
                if (v < lo) return false;
            }
        }
    }
    return true;
}

SignedPartition shape(const Pattern& p) {
    if (p.height() == 0) return SignedPartition();
    const auto& bottom = p.rows.back();
    std::vector<HalfInt> parts;
    parts.reserve(bottom.size());
    int sign = +1;
    for (std::size_t j = 0; j < bottom.size(); ++j) parts.push_back(bottom[j].abs());
    if (p.family == PatternFamily::Orthogonal && bottom.back().sign() < 0) sign = -1;
    return SignedPartition(std::move(parts), sign);
}

std::vector<HalfInt> pattern_type(const Pattern& p) {
    const bool abs_mode = p.family == PatternFamily::Orthogonal;
    std::vector<HalfInt> t;
    t.reserve(p.height());
    HalfInt prev(0);
    for (std::size_t i = 1; i <= p.height(); ++i) {
        HalfInt s(0);
        for (const auto& v : p.rows[i - 1]) s += abs_mode ? v.abs() : v;
        t.push_back(s - prev);
        prev = s;
    }
    return t;
}

std::vector<int> atyp(const Pattern& p) {
    if (p.family != PatternFamily::SplitOrthogonal || p.height() % 2 != 0 || p.height() == 0)
        throw std::invalid_argument("atyp: needs a split orthogonal pattern of even height");
    const std::size_t n = p.height() / 2;
    const bool grid_half = p.at(p.height(), 1).is_half_integer();
    std::vector<int> a(n);
    for (std::size_t i = 1; i <= n; ++i)
        a[i - 1] = (p.at(2 * i - 1, i).is_half_integer() != grid_half) ? 1 : 0;
    return a;
}

PatternScan::PatternScan(PatternFamily family, std::size_t height, const SignedPartition& shp)
    : family_(family), height_(height), parity_(0) {
    const std::size_t bottom_len = height == 0 ? 0 : pattern_row_len(family, height);
    if (shp.declared_length() > bottom_len)
        throw std::invalid_argument("pattern shape longer than bottom row");
    switch (family) {
        case PatternFamily::GT:
        case PatternFamily::Symplectic:
            if (!shp.on_integer_grid() || shp.sign() < 0)
                throw std::invalid_argument("shape must be an unsigned integer partition");
            break;
        case PatternFamily::SplitOrthogonal:
            if (height % 2 != 0) throw std::invalid_argument("split orthogonal height must be even");
            if (shp.sign() < 0) throw std::invalid_argument("split orthogonal shape is unsigned");
            if (shp.on_half_grid() && shp.declared_length() != bottom_len)
                throw std::invalid_argument("half-grid shape must have full length");
            parity_ = shp.on_integer_grid() ? 0 : 1;
            break;
        case PatternFamily::Orthogonal:
            if (height % 2 == 0 && shp.sign() < 0)
                throw std::invalid_argument("even-height orthogonal shape is unsigned");
            if (shp.on_half_grid() && shp.declared_length() != bottom_len)
                throw std::invalid_argument("half-grid shape must have full length");
            parity_ = shp.on_integer_grid() ? 0 : 1;
            break;
    }
    rows_.resize(height);
    for (std::size_t i = 1; i <= height; ++i) rows_[i - 1].assign(pattern_row_len(family, i), 0);
    for (std::size_t j = 1; j <= bottom_len; ++j) {
        HalfInt v = shp.part_or_zero1(j);
        if (family == PatternFamily::Orthogonal && j == bottom_len && height % 2 == 1 &&
            shp.sign() < 0)
            v = v.negated();
        if (!v.doubled().fits_slong_p())
            throw std::invalid_argument("pattern shape entry too large");
        rows_[height - 1][j - 1] = v.doubled().get_si();
    }
}

Pattern PatternScan::snapshot() const {
    Pattern p;
    p.family = family_;
    p.rows.resize(height_);
    for (std::size_t i = 0; i < height_; ++i) {
        p.rows[i].reserve(rows_[i].size());
        for (long long d : rows_[i]) p.rows[i].push_back(HalfInt::from_doubled(d));
    }
    return p;
}

void enumerate_patterns(PatternFamily family, std::size_t height, const SignedPartition& shape,
                        const std::function<void(const Pattern&)>& visit) {
    PatternScan scan(family, height, shape);
    scan.run([&](const PatternScan& s) { visit(s.snapshot()); });
}

std::vector<Pattern> enumerate_patterns_list(PatternFamily family, std::size_t height,
                                             const SignedPartition& shape) {
    std::vector<Pattern> out;
    enumerate_patterns(family, height, shape, [&](const Pattern& p) { out.push_back(p); });
    return out;
}

std::uint64_t count_patterns(PatternFamily family, std::size_t height, const SignedPartition& shape) {
    std::uint64_t n = 0;
    PatternScan scan(family, height, shape);
    scan.run([&](const PatternScan&) { ++n; });
    return n;
}

}  // namespace charlab
