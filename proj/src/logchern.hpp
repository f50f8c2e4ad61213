#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace geolab::logchern {

// A family of mutually disjoint curves sharing genus, self-intersection and
// branch multiplicity; incidence counts points per individual curve.
struct CurveFamily {
    std::string label;
    Int count = 0;
    Int genus = 0;
    Int self_intersection = 0;       // per curve
    Int multiplicity = 1;            // branch multiplicity nu (used by covers)
    std::map<std::string, Int> incidence;  // singularity class -> points per curve
};

struct SingularityClass {
    std::string label;
    Int k = 0;      // point order (k smooth branches meeting pairwise transversally)
    Int count = 0;  // t_k for this class
};

// A smooth projective surface together with a curve arrangement whose only
// singularities are ordinary k-points, recorded by class.
struct ArrangementSummary {
    Rat ambient_c1sq = 0;
    Rat ambient_c2 = 0;
    std::vector<CurveFamily> families;
    std::vector<SingularityClass> singularities;
};

// Structural checks: unique labels, k >= 2, non-negative counts, ambient
// Noether sum divisible by 12, and the double count
//   sum_families count * incidence[class] == k * t_k  for every class.
// Missing incidence entries count as zero here.  Throws std::domain_error.
void validate(const ArrangementSummary& arr);

// Log Chern numbers of the pair (ambient, arrangement):
//   c1bar^2 = c1^2 - sum C_i^2 + sum_k (3k-4) t_k + 4 sum_i (g_i - 1)
//   c2bar   = c2 + sum_k (k-1) t_k + 2 sum_i (g_i - 1)
std::pair<Rat, Rat> log_chern_numbers(const ArrangementSummary& arr);

// Blow up every point of one singularity class.  Ambient Chern numbers move
// by (-t, +t), incident curves lose one unit of self-intersection per point,
// and the class leaves the table.  With adjoin_exceptional the exceptional
// curves join the arrangement as a rational (-1)-family and the former
// k-points reappear as k nodes each (a fresh 2-point class "<label>-nodes").
// Every family must carry an explicit incidence entry for the class.
ArrangementSummary blow_up_class(const ArrangementSummary& arr, const std::string& class_label, const Int& k,
                                 bool adjoin_exceptional);

}  // namespace geolab::logchern
