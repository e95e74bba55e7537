#include "charlab/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace charlab {

YoungDomain::YoungDomain(std::vector<std::size_t> row_lengths) : lens_(std::move(row_lengths)) {
    for (std::size_t i = 0; i + 1 < lens_.size(); ++i)
        if (lens_[i] < lens_[i + 1]) throw std::invalid_argument("YoungDomain: rows must weakly decrease");
    while (!lens_.empty() && lens_.back() == 0) lens_.pop_back();
}

YoungDomain YoungDomain::staircase(std::size_t n) {
    std::vector<std::size_t> lens(n);
    for (std::size_t i = 0; i < n; ++i) lens[i] = n - i;
    return YoungDomain(std::move(lens));
}

bool YoungDomain::is_outer(std::size_t i, std::size_t j) const {
    return contains(i, j) && !contains(i, j + 1) && !contains(i + 1, j) && !contains(i + 1, j + 1);
}

bool YoungDomain::is_border(std::size_t i, std::size_t j) const {
    return contains(i, j) && !contains(i + 1, j + 1);
}

bool YoungDomain::is_symmetric() const {
    for (std::size_t i = 1; i <= rows(); ++i)
        for (std::size_t j = 1; j <= row_len(i); ++j)
            if (!contains(j, i)) return false;
    return true;
}

std::size_t YoungDomain::cell_count() const {
    std::size_t c = 0;
    for (auto l : lens_) c += l;
    return c;
}

MonoidTaggedArray make_array(std::vector<std::size_t> row_lengths,
                             std::vector<std::vector<HalfInt>> entries, OuterMonoid outer) {
    MonoidTaggedArray w;
    w.domain = YoungDomain(std::move(row_lengths));
    w.entries = std::move(entries);
    w.outer = outer;
    if (w.entries.size() != w.domain.rows()) throw std::invalid_argument("array: row count mismatch");
    for (std::size_t i = 1; i <= w.domain.rows(); ++i)
        if (w.entries[i - 1].size() != w.domain.row_len(i))
            throw std::invalid_argument("array: row length mismatch");
    return w;
}

bool validate_array(const MonoidTaggedArray& w) {
    for (std::size_t i = 1; i <= w.domain.rows(); ++i)
        for (std::size_t j = 1; j <= w.domain.row_len(i); ++j) {
            const HalfInt& v = w.at(i, j);
            if (v.sign() < 0) return false;
            bool outer = w.domain.is_outer(i, j);
            if (!outer && !v.is_integer()) return false;
            if (outer && w.outer == OuterMonoid::Integer && !v.is_integer()) return false;
        }
    return true;
}

bool satisfies_output_ordering(const MonoidTaggedArray& t) {
    for (std::size_t i = 1; i <= t.domain.rows(); ++i)
        for (std::size_t j = 1; j <= t.domain.row_len(i); ++j) {
            if (i > 1 && t.domain.contains(i - 1, j) && t.at(i, j) < t.at(i - 1, j)) return false;
            if (j > 1 && t.at(i, j) < t.at(i, j - 1)) return false;
        }
    return true;
}

bool is_symmetric(const MonoidTaggedArray& w) {
    if (!w.domain.is_symmetric()) return false;
    for (std::size_t i = 1; i <= w.domain.rows(); ++i)
        for (std::size_t j = 1; j <= w.domain.row_len(i); ++j)
            if (w.at(i, j) != w.at(j, i)) return false;
    return true;
}

namespace {

using Parts = std::vector<long long>;  // doubled, weakly decreasing, no trailing zeros

void trim(Parts& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long long part(const Parts& p, std::size_t k) { return k < p.size() ? p[k] : 0; }  // 0-based

// Growth local rule around one cell: la = NW, mu = N, nu = W vertices, w the
// cell entry; returns the SE vertex partition.
Parts grow(const Parts& la, const Parts& mu, const Parts& nu, long long w) {
    Parts rho;
    std::size_t len = std::max(mu.size(), nu.size()) + 1;
    rho.reserve(len);
    rho.push_back(w + std::max(part(mu, 0), part(nu, 0)));
    for (std::size_t k = 1; k < len; ++k)
        rho.push_back(std::max(part(mu, k), part(nu, k)) + std::min(part(mu, k - 1), part(nu, k - 1)) -
                      part(la, k - 1));
    trim(rho);
    return rho;
}

// Inverse of the local rule: recovers (NW vertex, cell entry) from SE, N, W.
std::pair<Parts, long long> ungrow(const Parts& rho, const Parts& mu, const Parts& nu) {
    long long w = part(rho, 0) - std::max(part(mu, 0), part(nu, 0));
    Parts la;
    std::size_t len = std::max(mu.size(), nu.size());
    la.reserve(len);
    for (std::size_t k = 1; k <= len; ++k)
        la.push_back(std::max(part(mu, k), part(nu, k)) + std::min(part(mu, k - 1), part(nu, k - 1)) -
                     part(rho, k));
    trim(la);
    return {la, w};
}

bool is_partition(const Parts& p) {
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] < 0) return false;
        if (k + 1 < p.size() && p[k] < p[k + 1]) return false;
    }
    return true;
}

long long doubled_entry(const MonoidTaggedArray& a, std::size_t i, std::size_t j) {
    return a.at(i, j).doubled().get_si();
}

}  // namespace

MonoidTaggedArray rsk_forward(const MonoidTaggedArray& w) {
    if (!validate_array(w)) throw std::invalid_argument("rsk_forward: invalid input array");
    const auto& dom = w.domain;
    const std::size_t R = dom.rows();
    const std::size_t C = R ? dom.row_len(1) : 0;
    // vertex[i][j] for 0 <= i <= R, 0 <= j <= C; only positions backed by cells
    // of the domain (or the zero boundary) are ever read.
    std::vector<std::vector<Parts>> vertex(R + 1, std::vector<Parts>(C + 1));
    for (std::size_t i = 1; i <= R; ++i)
        for (std::size_t j = 1; j <= dom.row_len(i); ++j)
            vertex[i][j] =
                grow(vertex[i - 1][j - 1], vertex[i - 1][j], vertex[i][j - 1], doubled_entry(w, i, j));

    MonoidTaggedArray t;
    t.domain = dom;
    t.outer = w.outer;
    t.entries.resize(R);
    for (std::size_t i = 1; i <= R; ++i) t.entries[i - 1].assign(dom.row_len(i), HalfInt(0));
    for (std::size_t i = 1; i <= R; ++i)
        for (std::size_t j = 1; j <= dom.row_len(i); ++j) {
            if (!dom.is_border(i, j)) continue;
            const Parts& rho = vertex[i][j];
            for (std::size_t s = 0; s < std::min(i, j); ++s)
                t.at(i - s, j - s) = HalfInt::from_doubled(part(rho, s));
        }
    return t;
}

MonoidTaggedArray rsk_inverse(const MonoidTaggedArray& t) {
    const auto& dom = t.domain;
    if (!validate_array(t) || !satisfies_output_ordering(t))
        throw std::domain_error("rsk_inverse: not an RSK output tableau");
    const std::size_t R = dom.rows();
    const std::size_t C = R ? dom.row_len(1) : 0;
    std::vector<std::vector<Parts>> vertex(R + 1, std::vector<Parts>(C + 1));
    // Border vertex partitions come straight from the diagonals of t.
    for (std::size_t i = 1; i <= R; ++i)
        for (std::size_t j = 1; j <= dom.row_len(i); ++j) {
            if (!dom.is_border(i, j)) continue;
            Parts rho;
            for (std::size_t s = 0; s < std::min(i, j); ++s)
                rho.push_back(t.at(i - s, j - s).doubled().get_si());
            trim(rho);
            if (!is_partition(rho)) throw std::domain_error("rsk_inverse: not an RSK output tableau");
            vertex[i][j] = rho;
        }

    MonoidTaggedArray w;
    w.domain = dom;
    w.outer = t.outer;
    w.entries.resize(R);
    for (std::size_t i = 1; i <= R; ++i) w.entries[i - 1].assign(dom.row_len(i), HalfInt(0));

    // Cells in decreasing i+j: every needed vertex is either border-initialized
    // or produced by a previously inverted cell.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 1; i <= R; ++i)
        for (std::size_t j = 1; j <= dom.row_len(i); ++j) cells.emplace_back(i, j);
    std::sort(cells.begin(), cells.end(), [](auto a, auto b) {
        return a.first + a.second != b.first + b.second ? a.first + a.second > b.first + b.second
                                                        : a < b;
    });
    for (auto [i, j] : cells) {
        auto [la, wd] = ungrow(vertex[i][j], vertex[i - 1][j], vertex[i][j - 1]);
        if (wd < 0 || !is_partition(la)) throw std::domain_error("rsk_inverse: negative reconstruction");
        vertex[i - 1][j - 1] = la;
        if ((i == 1 || j == 1) && !la.empty())
            throw std::domain_error("rsk_inverse: boundary does not close");
        w.at(i, j) = HalfInt::from_doubled(wd);
    }
    if (!validate_array(w)) throw std::domain_error("rsk_inverse: reconstructed entries off-monoid");
    return w;
}

HalfInt lpp_on_array(const MonoidTaggedArray& w, std::size_t end_i, std::size_t end_j) {
    if (!w.domain.contains(end_i, end_j)) throw std::invalid_argument("lpp_on_array: end outside domain");
    std::vector<std::vector<long long>> best(end_i + 1, std::vector<long long>(end_j + 1, -1));
    for (std::size_t i = 1; i <= end_i; ++i)
        for (std::size_t j = 1; j <= end_j && w.domain.contains(i, j); ++j) {
            long long from = std::max(best[i - 1][j], best[i][j - 1]);
            if (i == 1 && j == 1) from = 0;
            if (from < 0) continue;
            best[i][j] = from + doubled_entry(w, i, j);
        }
    return HalfInt::from_doubled(best[end_i][end_j]);
}

HalfInt diagonal_sum(const MonoidTaggedArray& t, long k) {
    HalfInt s(0);
    for (std::size_t i = 1; i <= t.domain.rows(); ++i) {
        long jj = static_cast<long>(i) + k;
        if (jj >= 1 && t.domain.contains(i, static_cast<std::size_t>(jj)))
            s += t.at(i, static_cast<std::size_t>(jj));
    }
    return s;
}

}  // namespace charlab
