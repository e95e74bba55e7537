#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charlab/characters.hpp"

namespace charlab {

enum class IdentityId {
    DecompCB,
    DecompC,
    DecompB,
    DecompOddSp,
    DecompD,
    DecompBintoD,
    DecompA,
    KrattC,
    KrattD,
    KrattA,
    DualPieri,
    CBLittlewood,
    DBLittlewood,
    SchurLittlewoodSp,
};

std::string identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(const std::string& s);

struct IdentityCase {
    IdentityId id;
    std::size_t n = 1, m = 1;   // variable-group sizes (n doubles as N)
    HalfInt u, v;               // box bounds (v only for DecompA)
    int sign = +1;              // epsilon for DecompD
    long k = -1;                // summation index for the kratt/dualPieri ids; -1 sweeps all valid
};

struct IdentityOutcome {
    bool valid = true;   // parameters inside the identity's stated range
    bool holds = false;
    std::string detail;  // first mismatch or the validation error
    double seconds = 0.0;
    // Both constructed sides, kept as the failure witness.
    std::optional<std::pair<LaurentPoly, LaurentPoly>> sides;
};

// Builds both sides from the character primitives and compares term maps
// exactly. Out-of-range parameters give valid = false.
IdentityOutcome verify_identity(const IdentityCase& c);

// One quick case per identity id.
std::vector<IdentityCase> default_suite();
// The full sweep: n+m <= 4, u <= 3, v <= u, both grids and signs where allowed.
std::vector<IdentityCase> full_suite();

struct SuiteReport {
    std::vector<std::pair<IdentityCase, IdentityOutcome>> results;
    bool all_passed() const;
};

SuiteReport run_suite(const std::vector<IdentityCase>& cases, unsigned workers = 1);

}  // namespace charlab
