#pragma once

#include <string>
#include <vector>

#include "families.hpp"
#include "rootcover.hpp"

// Parameter sweeps over the surface families and their presentation on the
// Chern plane (c2 horizontal, c1^2 vertical): CSV point lists and a
// self-contained SVG scatter with the classical reference lines
//
//   c1^2 = 3 c2        (Bogomolov-Miyaoka-Yau bound)
//   c1^2 = 2 c2        (signature zero)
//   5 c1^2 = c2 - 36   (Noether bound)
//
// drawn and labeled.  All output is deterministic for a fixed input: fixed
// layout, fixed number formatting, no timestamps or environment lookups.
namespace geolab::geography {

// One block of parameter tuples for a single variant; expansion is the cross
// product alphas x betas x ds x ps, nested in that order, lists kept in the
// order given.
struct SubGrid {
    families::Variant variant = families::Variant::spin;
    std::vector<Int> alphas, betas, ds, ps;
};

// Text form "variant:alphas:betas:ds:ps" with comma-separated integer lists,
// e.g. "spin:1:0,1:1:5,7,11".  An empty list is allowed and yields no tuples.
// Throws std::domain_error on malformed text.
SubGrid parse_subgrid(const std::string& text);

// Semicolon-separated subgrids; empty text means an empty grid.
std::vector<SubGrid> parse_grid(const std::string& text);

// Cross products concatenated in input order; every tuple is validated up
// front (std::domain_error naming the offending tuple).
std::vector<families::FamilyParams> expand(const std::vector<SubGrid>& grids);

struct GridPoint {
    families::FamilyParams params;
    rootcover::SurfaceInvariants invariants;
    Rat limit = 0;      // limit slope of the parameter ray
    Rat slope_gap = 0;  // |slope - limit|
};

// Runs the full family pipeline per tuple.  A tuple whose internal checks
// fail aborts with identity_error naming the tuple and the failed check.
std::vector<GridPoint> compute_points(const std::vector<families::FamilyParams>& tuples);

// Header "variant,alpha,beta,d,p,c2,c1sq,slope"; slope is printed to six
// decimal digits (c2 and c1sq are exact, so the exact slope is recoverable).
std::string to_csv(const std::vector<GridPoint>& points);

struct ChartOptions {
    bool loglog = false;  // plot log10(c2) against log10(c1^2)
};

// 1000x800 SVG scatter.  An empty point list still draws axes and reference
// lines over a default window.  Log-log mode requires positive coordinates
// (guaranteed for family output) and renders the Noether line as a sampled
// polyline, since it is not straight in log coordinates.
std::string to_svg(const std::vector<GridPoint>& points, const ChartOptions& options = {});

}  // namespace geolab::geography
