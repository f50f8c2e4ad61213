#pragma once

#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

// Chern invariants of cyclic root covers.  Input is a branch summary: the log
// Chern numbers of (surface, branch divisor), the aggregate self-intersection
// and genus data of the branch curves, and a census of the transverse double
// points of the divisor keyed by the reduced multiplicities of the two
// branches meeting there.  Each census class determines a cyclic quotient
// singularity on the cover, resolved by a Hirzebruch-Jung chain; the cover
// formulas convert the census into exact Chern numbers.
namespace geolab::rootcover {

// `count` double points at which the two transverse branches carry reduced
// multiplicities nu_lo <= nu_hi; both must be units modulo the cover degree.
struct NodeClass {
    Int nu_lo;
    Int nu_hi;
    Int count;
};

// One family of interchangeable branch curves.  `nodes_with` lists, per
// member curve, how many surviving double points it shares with partner
// curves of each reduced multiplicity class (key = partner's reduced
// multiplicity).  Multiplicity may be given unreduced; it is reduced modulo
// the degree wherever a residue is needed.
struct CurveClass {
    std::string label;
    Int count = 1;
    Int genus = 0;
    Int self_intersection = 0;  // per curve, in the base surface
    Int multiplicity = 1;
    std::map<Int, Int> nodes_with;
};

struct BranchSummary {
    Int degree = 2;              // cover degree m
    Rat log_c1sq = 0;            // log Chern numbers of the pair
    Rat log_c2 = 0;
    Int sum_self_intersection = 0;   // sum over branch curves of A_j^2
    Int sum_genus_minus_one = 0;     // sum over branch curves of g(A_j) - 1
    std::vector<NodeClass> census;
    std::vector<CurveClass> curves;  // optional detail; empty = totals only
};

struct SurfaceInvariants {
    Int c1sq;
    Int c2;
    Int chi;        // (c1sq + c2) / 12
    Int signature;  // (c1sq - 2 c2) / 3
    Rat slope;      // c1sq / c2
    bool spin = false;
    std::string pi1 = "trivial";
};

// Structural checks: degree >= 2, census multiplicities are units in (0, m)
// with nu_lo <= nu_hi and no duplicate classes, non-negative counts.  When
// curve data is present it must reproduce the totals (self-intersections,
// genus sum) and double-count the census exactly: summing count * nodes_with
// over the families of one residue class counts every node once from each of
// its two sides.  Throws std::domain_error.
void validate(const BranchSummary& branch);

// Total number of census nodes (t_2 of the underlying arrangement).
Int census_total(const BranchSummary& branch);

// Chern numbers of the resolved degree-m root cover:
//   c1^2 = m c1bar^2 - 2 (t2 + 2 sum (g-1)) + (1/m) sum A_j^2
//          - sum over census of c(q, m) * count
//   c2   = m c2bar  -  (t2 + 2 sum (g-1)) + sum over census of l(q, m) * count
// where q is the node type of the class's reduced multiplicity pair.  Both
// must come out integral, the pair must satisfy the Noether divisibility
// c1^2 + c2 == 0 (mod 12), and c2 must be nonzero so the slope exists;
// violations throw identity_error.  The spin flag and fundamental-group
// descriptor are caller-declared metadata, passed through untouched.
SurfaceInvariants chern_of_cover(const BranchSummary& branch, bool spin = false,
                                 const std::string& pi1 = "trivial");

// Derives chi, signature and slope from a Chern pair, enforcing the Noether
// divisibility c1^2 + c2 == 0 (mod 12) and a nonzero Euler number
// (identity_error otherwise).  The metadata fields pass through untouched.
SurfaceInvariants invariants_from_chern(const Int& c1sq, const Int& c2, bool spin,
                                        const std::string& pi1);

// Self-intersection of the strict transform on the cover of one member curve
// of the named family:  (1/m) (A_j^2 - sum q(nu_partner, nu_self) * nodes).
// Values < -1 certify the family contributes no (-1)-curves.
Rat strict_transform_self_intersection(const BranchSummary& branch, const std::string& label);

// Parity certificate for the exceptional corrections over one node class.
// For the node of full (unreduced) multiplicities (nu_i, nu_j) the canonical
// class of the cover picks up, along the resolution chain of the node's
// singularity, the coefficients  -(m-1) w_k + (c_k + d_k) - 1  where
// w_k = (nu_j c_k + nu_i d_k)/m are the integral chain multiplicities of the
// pulled-back root class.  Returns true iff every such coefficient is even
// (so the corrections preserve 2-divisibility); the answer is symmetric in
// (nu_i, nu_j).  Non-integral w_k (impossible for consistent node data)
// throws identity_error.
bool delta_correction_even(const Int& m, const Int& nu_i, const Int& nu_j);

struct ConditionCheck {
    std::string name;
    bool pass;
};

struct ConditionReport {
    std::vector<ConditionCheck> checks;
    bool all_pass = false;
};

// Necessary conditions satisfied by minimal surfaces of general type:
// positivity of both Chern numbers, Noether divisibility c1^2 + c2 == 0
// (mod 12), integral signature, the strict Bogomolov-Miyaoka-Yau bound
// c1^2 < 3 c2, the Noether inequality 5 c1^2 >= c2 - 36, and (spin only)
// Rokhlin's divisibility signature == 0 (mod 16).
ConditionReport necessary_conditions(const Int& c1sq, const Int& c2, bool spin);
ConditionReport necessary_conditions(const SurfaceInvariants& inv);

}  // namespace geolab::rootcover
