#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hesse.hpp"
#include "logchern.hpp"
#include "rational.hpp"
#include "rootcover.hpp"

namespace geolab::families {

enum class Variant { spin, nonspin };

Variant parse_variant(const std::string& name);  // "spin" | "nonspin"
std::string variant_name(Variant v);

struct FamilyParams {
    Variant variant = Variant::spin;
    Int alpha = 1;
    Int beta = 0;
    Int d = 1;
    Int p = 5;
};

// Bridge to the lattice layer; validates (p >= 5 prime, alpha >= 1, beta >= 0,
// d >= 1, non-spin additionally 3 <= 2d <= p) and throws std::domain_error.
hesse::BranchSpec branch_spec(const FamilyParams& params);
void validate_params(const FamilyParams& params);

// One family of branch curves, with its position in the cover.
struct CurveRow {
    std::string label;
    Int count = 0;
    Int genus = 0;
    Int self_intersection = 0;        // per curve, on the blown-up surface
    Int multiplicity = 1;             // full branch multiplicity
    Int reduced = 1;                  // multiplicity mod the cover degree
    Int line_degree = 0;              // intersection with a general plane line
    Rat strict_self_intersection = 0; // of one member's preimage on the cover
};

// One class of branch-divisor nodes and its cyclic quotient singularity data.
struct CensusRow {
    Int nu_lo = 1, nu_hi = 1;  // reduced multiplicities of the two branches
    Int count = 0;
    Int q = 1;                 // the node maps to a (1/m)(1, q) point
    Int chain_length = 0;      // length of its resolution chain
};

struct FamilyReport {
    FamilyParams params;
    Int n = 0;                     // torsion level of the arrangement
    Int degree = 0;                // cover degree
    Int t2 = 0;                    // node total ...
    Int t2_equal = 0;              // ... from equal-multiplicity pairs
    Int t2_mixed = 0;              // ... from mixed pairs
    Rat log_c1sq = 0, log_c2 = 0;  // log Chern numbers of the branch pair
    std::vector<CurveRow> curves;
    std::vector<CensusRow> census;
    rootcover::BranchSummary branch;
    rootcover::SurfaceInvariants invariants;
    Rat limit = 0;      // limit slope of the (alpha, beta, d) sequence
    Rat slope_gap = 0;  // |slope - limit|
    std::vector<hesse::IdentityCheck> checks;
    bool all_checks_pass = false;
};

// Full pipeline: lattice certificates -> branch-curve table -> node census ->
// log Chern numbers (arrangement route, cross-checked against closed forms) ->
// cover invariants, with every consistency identity recorded in `checks`.
FamilyReport build_family(const FamilyParams& params);

// Limit of the slope sequence at fixed x = alpha/beta as p grows; nullopt
// encodes x = infinity (beta = 0), where both variants tend to 3.  Increasing
// in x, with range [11/8, 3) for spin grids and [1, 3) otherwise.
Rat limit_slope(Variant v, const std::optional<Rat>& x);

struct SlopeInversion {
    Int alpha = 0;
    Int beta = 0;        // beta == 0 encodes x = infinity (limit slope 3)
    Rat lambda_value = 0;  // limit slope at alpha/beta
};

// Smallest-denominator ratio alpha/beta with |limit_slope - r| < eps (or an
// exact hit).  Throws std::domain_error if r lies outside the variant's limit
// range or the bound on beta is exceeded.
SlopeInversion invert_slope(Variant v, const Rat& r, const Rat& eps,
                            const Int& denom_bound = Int(1000000));

struct TargetResult {
    FamilyReport report;
    Rat target = 0;
    Rat gap = 0;  // |slope - target|, strictly below the requested tolerance
};

// Finds parameters whose surface has |slope - r| < eps: half the tolerance
// buys the ratio alpha/beta, the rest is closed by growing p along a
// prime-doubling sequence, verifying each candidate with build_family.
TargetResult target_slope(Variant v, const Rat& r, const Rat& eps,
                          const std::optional<Int>& d = std::nullopt,
                          const Int& prime_ceiling = Int(10000000),
                          const Int& denom_bound = Int(1000000));

struct BaseChangeResult {
    Int base_genus = 0;            // genus of the new base curve
    Int line_branch_degree = 0;    // branch points of the cover on a general line
    Int line_preimage_genus = 0;   // genus of a general line's preimage
    rootcover::SurfaceInvariants invariants;
};

// Invariants of the fiber product with a genus-q curve mapped onto a general
// line's preimage (non-spin families only; the cyclic deck action is free
// there).  The result has fundamental group of the base curve.
BaseChangeResult genus_base_change(const FamilyReport& report, const Int& q);

}  // namespace geolab::families
