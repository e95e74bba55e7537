#pragma once

#include <random>
#include <utility>

#include "charlab/exact_linalg.hpp"
#include "charlab/laurent.hpp"
#include "charlab/patterns.hpp"

namespace charlab {

struct DenominatorZero : std::domain_error {
    explicit DenominatorZero(const std::string& what) : std::domain_error(what) {}
};

// SchurA        GL_n, GT patterns of height n
// SpEven        Sp_2n, symplectic patterns of height 2n
// SpOdd         Sp_2n+1, symplectic patterns of height 2n+1 (extra variable y)
// SoEven        SO_2n, orthogonal patterns of height 2n-1 (signed shapes)
// SoOddSigned   SO_2n+1 via orthogonal patterns of height 2n
// SoOddSplit    SO_2n+1 via split orthogonal patterns of height 2n
// CBInterp      interpolates SpEven <-> SoOdd (extra variable beta)
// DBInterp      interpolates SoEven <-> SoOdd (extra variable alpha)
enum class CharFamily { SchurA, SpEven, SpOdd, SoEven, SoOddSigned, SoOddSplit, CBInterp, DBInterp };

std::string char_family_name(CharFamily f);
std::optional<CharFamily> char_family_from_name(const std::string& s);

// True if the family's polynomial carries an extra parameter variable
// (y, beta or alpha) appended after the n x-variables.
inline bool has_param_var(CharFamily f) {
    return f == CharFamily::SpOdd || f == CharFamily::CBInterp || f == CharFamily::DBInterp;
}

// Pattern-route construction: the generating function over the family's
// pattern set. Arity is n, plus one trailing slot when has_param_var(fam).
LaurentPoly char_poly(CharFamily fam, const SignedPartition& lambda, std::size_t n);

// Determinant-route value at a point; `param` is y / beta / alpha where the
// family takes one (DBInterp uses the branching sum over type-D Weyl
// determinants). Throws DenominatorZero on a reflection hyperplane.
Rat weyl_eval(CharFamily fam, const SignedPartition& lambda, const SqrtPoint& at,
              const Rat& param = Rat(0));

// Weyl-route evaluation of sp/so/schur with an all-ones argument is 0/0; this
// is the closed dimension product used as the independent counting oracle.
Rat schur_dimension(const SignedPartition& lambda, std::size_t n);

// sp^(2n) indexed by a possibly-invalid part vector; the zero polynomial when
// the vector is not a partition.
LaurentPoly sp_even_or_zero(const std::vector<HalfInt>& parts, std::size_t n);
LaurentPoly schur_or_zero(const std::vector<HalfInt>& parts, std::size_t n);

// CB-interpolating polynomial expanded over even symplectic characters:
// sum_eps beta^|eps| sp_{lambda-eps} for integer lambda, the
// prod(beta x^1/2 + x^-1/2) sp_{lambda-1/2} form for half-integer lambda.
LaurentPoly cb_via_sp(const SignedPartition& lambda, std::size_t n);

// DB-interpolating polynomial as an alpha-weighted sum of SoEven characters.
LaurentPoly db_branching_poly(const SignedPartition& lambda, std::size_t n);

// alpha^u * so^(2n+2) of rectangular shape with the extra variable alpha^{-1},
// evaluated exactly; requires alpha > 0 (and a square alpha when u is on the
// half grid).
Rat db_rect_via_so(const HalfInt& u, std::size_t n, const SqrtPoint& at, const Rat& alpha);

// Both sides of the two Schur shift properties, as polynomials.
std::pair<LaurentPoly, LaurentPoly> schur_shift_plus(const SignedPartition& lambda, long t,
                                                     std::size_t n);
std::pair<LaurentPoly, LaurentPoly> schur_shift_minus(const SignedPartition& lambda, long u,
                                                      std::size_t n);

// Hall-Littlewood-degenerate Koornwinder determinant ratio K(x;0,0;a,b,0,0).
Rat koornwinder_det_value(const SignedPartition& lambda, const SqrtPoint& at, const Rat& a,
                          const Rat& b);

// Random evaluation point: distinct roots a/b with a,b <= 97 and r != 1.
SqrtPoint random_sqrt_point(std::mt19937_64& rng, std::size_t n);

// All shapes admissible for a family at n variables with parts bounded by
// max_part, covering both grids and both signs where the family allows them.
std::vector<SignedPartition> admissible_shapes(CharFamily fam, std::size_t n, long max_part);

}  // namespace charlab
