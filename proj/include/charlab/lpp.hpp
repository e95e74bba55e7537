#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "charlab/characters.hpp"

namespace charlab {

// Square models: Antidiag / Diag / DoubleSym with the LPP time L(N,N).
// PointToLine(.Sym) are the triangular reductions with halved antidiagonal
// weights; their LPP time runs from (1,1) to the line i+j = N+1.
enum class LppSymmetry { Antidiag, Diag, DoubleSym, PointToLine, PointToLineSym };

struct LppModel {
    LppSymmetry sym = LppSymmetry::Antidiag;
    std::size_t N = 1;     // square side / triangle base
    std::vector<Rat> p;    // N geometric parameters in (0,1)
    Rat beta{0};           // antidiagonal tuning (Antidiag/DoubleSym)
    Rat alpha{0};          // diagonal tuning (Diag/DoubleSym)
};

LppModel make_antidiag(std::size_t N, std::vector<Rat> p, Rat beta);
LppModel make_diag(std::size_t N, std::vector<Rat> p, Rat alpha);
// N = 2n; p must be palindromic (p_{2n-i+1} = p_i).
LppModel make_doublesym(std::size_t N, std::vector<Rat> p, Rat alpha, Rat beta);

// Equivalent triangular point-to-line model with the antidiagonal law halved;
// thresholds map as u <-> 2u so cdf/simulate values coincide with the square
// model's at the same `u` argument.
LppModel point_to_line_reduce(const LppModel& square);

enum class CdfFormula { A, B, C, D, E };
std::optional<CdfFormula> formula_from_name(const std::string& s);
std::string formula_name(CdfFormula f);

struct CdfQuery {
    CdfFormula formula = CdfFormula::A;
    std::size_t split = 0;  // the split index n for D/E; 0 = smallest valid
};

// Normalization constant of the joint weight law.
Rat normalization(const LppModel& model);

// P(L <= 2u) for the square models, P(L <= u) for the point-to-line ones.
// Formula A is the brute-force oracle; B/C/D/E are the exact character
// formulas (E only for Antidiag with beta = 0 and integer u).
Rat cdf_exact(const LppModel& model, const HalfInt& u, const CdfQuery& query);

Rat cdf_bruteforce(const LppModel& model, const HalfInt& u);

// Valid split indices for the D/E formulas of this model.
std::vector<std::size_t> valid_splits(const LppModel& model, CdfFormula f);

struct SimResult {
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    Rat estimate{0};
    double standard_error = 0.0;
};

// Monte Carlo estimate of the same probability; deterministic for fixed
// (seed, trials) regardless of worker count (per-trial counter streams).
SimResult simulate(const LppModel& model, const HalfInt& u, std::uint64_t trials, std::uint64_t seed,
                   unsigned workers = 1);

// pmf tables used by both the brute-force oracle and the samplers.
Rat geometric_pmf(const Rat& q, long k);                       // (1-q) q^k
Rat antidiag_square_pmf(const Rat& p, const Rat& beta, long k);            // beta^(k mod 2) law
Rat antidiag_halved_pmf(const Rat& p, const Rat& beta, const HalfInt& k);  // support (1/2)Z

}  // namespace charlab
