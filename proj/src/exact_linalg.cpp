#include "charlab/exact_linalg.hpp"

#include <stdexcept>

namespace charlab {

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix mul: size mismatch");
    RationalMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t k = 0; k < a.n_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < a.n_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Rat det(RationalMatrix m) {
    const std::size_t n = m.size();
    Rat d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = -d;
        }
        const Rat p = m.at(col, col);
        d *= p;
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat f = m.at(i, col) / p;
            m.at(i, col) = 0;
            for (std::size_t j = col + 1; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

Rat elementary_symmetric(std::size_t k, const std::vector<Rat>& values) {
    if (k > values.size()) throw std::invalid_argument("elementary_symmetric: k > N");
    // e[j] after processing a prefix of the values.
    std::vector<Rat> e(k + 1, Rat(0));
    e[0] = 1;
    for (const auto& v : values)
        for (std::size_t j = std::min(k, e.size() - 1); j >= 1; --j) e[j] += v * e[j - 1];
    return e[k];
}

}  // namespace charlab
