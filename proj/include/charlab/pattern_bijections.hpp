#pragma once

#include "charlab/patterns.hpp"
#include "charlab/rsk.hpp"

namespace charlab {

// Nearest neighbor path inside a half-triangular index set: consecutive steps
// (i,j) -> (i+1,j) or (i+1,j+1) (reverse paths run the mirror direction).
using NnPath = std::vector<std::pair<std::size_t, std::size_t>>;

struct SplitToSpResult {
    Pattern zprime;            // symplectic, same height
    std::vector<int> epsilon;  // {0,1}^n
    std::vector<NnPath> paths; // the update paths, in construction order (empty for half-grid shapes)
};

// Split orthogonal -> symplectic map. Integer shapes run the path algorithm
// (atypical odd ends processed in decreasing position); half-integer shapes
// subtract 1/2 from every non-atypical entry. Paths are recorded and checked
// to be pairwise non-intersecting.
SplitToSpResult split_to_symplectic(const Pattern& z);

// Inverse map; target_grid selects which case of the bijection to invert.
// For Grid::Integer the reverse paths are built in increasing position order.
// Throws if epsilon is inconsistent with the shape of zprime.
Pattern symplectic_to_split(const Pattern& zprime, const std::vector<int>& epsilon, Grid target_grid);

// ---------------------------------------------------------------------------
// Frozen-part cut decompositions of rectangular-shaped patterns.
// ---------------------------------------------------------------------------

enum class CutVariant { CB, SpEven, SpOdd, SoEvenOddHeight, GTtwoFrozen };

struct CutDecomposition {
    CutVariant variant;
    std::size_t n = 0, m = 0;
    HalfInt u, v;        // v only meaningful for GTtwoFrozen
    int outer_sign = +1; // epsilon of the big shape (SoEvenOddHeight only)
    Pattern z;           // top part, height = cut level
    Pattern zprime;      // bottom part read bottom-to-top with the frozen part removed
    SignedPartition middle;  // shared shape at the cut
};

// Heights and shapes per variant:
//   CB              split orthogonal, height 2(n+m), shape u^(n+m)
//   SpEven          symplectic,       height 2(n+m), shape u^(n+m)
//   SpOdd           symplectic,       height 2(n+m+1), shape u^(n+m+1)
//   SoEvenOddHeight orthogonal,       height 2(n+m)-1, shape u^(n+m) (signed)
//   GTtwoFrozen     GT,               height n+m, shape (u^(n), v^(m))
CutDecomposition cut_decompose(const Pattern& big, CutVariant variant, std::size_t n, std::size_t m);

Pattern cut_compose(const CutDecomposition& d);

// ---------------------------------------------------------------------------
// RSK output tableau -> split orthogonal pattern (the change of variables
// behind the point-to-line LPP identities).
// ---------------------------------------------------------------------------

// t must be a staircase tableau of shape (N,...,1) obeying the RSK output
// ordering with entries in [0,u]. Returns the height-2N split orthogonal
// pattern of shape u^(N) with entries u - t_{N+j-i,j} above the frozen part.
Pattern tableau_to_pattern(const MonoidTaggedArray& t, const HalfInt& u);

// Symmetric variant: t is a symmetric staircase of size 2n; returns the
// height-2n split orthogonal pattern with entries u - t_{2n+j-i,j}, whose
// shape is the bounded partition (u - t_{j,j})_j.
Pattern tableau_to_pattern_symmetric(const MonoidTaggedArray& t, const HalfInt& u);

}  // namespace charlab
