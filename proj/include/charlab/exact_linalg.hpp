#pragma once

#include <cstddef>
#include <vector>

#include "charlab/numeric.hpp"

namespace charlab {

// Dense square matrix of exact rationals.
class RationalMatrix {
public:
    explicit RationalMatrix(std::size_t n) : n_(n), a_(n * n, Rat(0)) {}

    std::size_t size() const { return n_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

private:
    std::size_t n_;
    std::vector<Rat> a_;
};

// Exact determinant via rational Gaussian elimination with partial pivoting.
Rat det(RationalMatrix m);

// e_k(values), the elementary symmetric polynomial of degree k.
Rat elementary_symmetric(std::size_t k, const std::vector<Rat>& values);

}  // namespace charlab
