#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

// The dual Hesse configuration: 9 lines and their 12 triple points, with the
// triple points falling into 4 "direction" classes of 3 (the singular members
// of the four elliptic pencils on the blown-up plane).  On top of it, a
// rank-15 sublattice of the Picard group of the twice blown-up surface:
//   L               pull-back of a general line
//   e_0 .. e_11     exceptional curves over the 12 triple points
//   E               aggregate exceptional divisor over the 4-points of the
//                   level-n elliptic arrangement (self-pairing -t4)
//   G               aggregate exceptional divisor over its 3-points (-t3)
// E and G only pair against themselves, and need the torsion level n.
namespace geolab::hesse {

inline constexpr int kLines = 9;
inline constexpr int kPoints = 12;
inline constexpr int kDirections = 4;
inline constexpr int kRank = 15;

extern const std::array<const char*, kDirections> kDirectionNames;  // 0, 1, inf, zeta

struct DualHesseIncidence {
    // incident[l][p]: line l passes through triple point p; directions are p/3
    std::array<std::array<bool, kPoints>, kLines> incident{};

    static int direction_of(int point) { return point / 3; }
    std::array<int, 3> lines_through(int point) const;
    std::array<int, 4> points_on(int line) const;
    // The 9 lines grouped by which of the direction's three points they pass
    // through: the reduced parts of the three singular fibers of that pencil.
    std::array<std::array<int, 3>, 3> fiber_partition(int dir) const;
};

// Realized through the point-line duality of the affine plane of order three:
// our lines are the plane's points, our triple points its lines, and the four
// parallel classes give the four directions.
DualHesseIncidence dual_hesse();

struct DivClass {
    std::array<Int, kRank> v{};

    static constexpr int idxL = 0;
    static int idx_e(int point) { return 1 + point; }
    static constexpr int idxE = 13;
    static constexpr int idxG = 14;

    DivClass operator+(const DivClass& o) const;
    DivClass operator-(const DivClass& o) const;
    DivClass operator-() const;
    bool operator==(const DivClass& o) const = default;
};
DivClass operator*(const Int& c, const DivClass& a);

Int t3_count(const Int& n);  // 4(n^2-3)
Int t4_count(const Int& n);  // (n^2-3)(n^2-9)/3

// Intersection pairing.  Throws std::domain_error when E or G is paired
// against itself without a torsion level n.
Int pair(const DivClass& a, const DivClass& b, const std::optional<Int>& n = std::nullopt);

bool is_even_class(const DivClass& a);
bool check_equivalence(const DivClass& a, const DivClass& b);

// -- named classes ------------------------------------------------------------

DivClass cls_L();
DivClass cls_e(int point);
DivClass cls_sum_e();
DivClass cls_M();         // the nine lines: 9L - 3 sum e
DivClass cls_N();         // the twelve exceptional curves, total transform: sum e
DivClass cls_N_strict();  // their strict transforms: each 3-point sits on one of them
DivClass cls_Ni(int dir);
DivClass cls_E_agg();
DivClass cls_G_agg();
DivClass cls_F(int dir);  // fiber class of the direction's pencil: 3L - sum_{P not in dir} e_P
DivClass cls_KH();        // -3L + sum e
DivClass cls_KY();        // canonical class after both rounds of blow-ups

// -- branch data --------------------------------------------------------------

// Parameters of one branch-divisor grid.  The cover degree is 4p (spin) or p
// (non-spin); the torsion level is n = 12*alpha*p resp. 3*alpha*p.
struct BranchSpec {
    bool spin = true;
    Int alpha = 1;
    Int beta = 0;
    Int d = 1;
    Int p = 5;

    Int n() const;                // torsion level
    Int degree() const;           // order of the cyclic cover
    Int high_mult() const;        // 2p-1 resp. p-1
    Int a(int dir) const;         // (1, 1, high, high)
    Int fiber_translates() const; // 8 beta^2 p^2 resp. beta^2 p^2 general fibers per direction
    Int elliptic_count() const;   // (n^2-3)/3 curves per direction
    Int line_count() const;       // lines of each multiplicity: 4d resp. d
};

// p >= 5 prime, alpha >= 1, beta >= 0, d >= 1; non-spin additionally 3 <= 2d <= p.
void validate(const BranchSpec& spec);

DivClass cls_Efam(const BranchSpec& spec, int dir);    // elliptic_count * F_dir
DivClass cls_Eprime(const BranchSpec& spec, int dir);  // fiber_translates * F_dir
DivClass cls_L0(const BranchSpec& spec);               // root of the branch class on the plane model
DivClass cls_LY(const BranchSpec& spec);               // root of the branch class after both blow-ups

// Branch class with full (unreduced) multiplicities, on the plane model and on
// the blown-up surface (strict transforms).
DivClass branch_class_plane(const BranchSpec& spec);
DivClass branch_class_blowup(const BranchSpec& spec);

// The defining divisibility: branch_class_plane == degree * cls_L0.
bool check_root_divisibility(const BranchSpec& spec);

// Certificate that the canonical class of the cover is 2-divisible (spin
// grids only; throws std::domain_error otherwise).  Verifies
//   (1) M + 3 N_strict + 3 G == 9 L,
//   (2) branch_class_blowup == degree * cls_LY,
//   (3) every coordinate of K_Y + (degree-1) * cls_LY is even.
bool check_spin_parity(const BranchSpec& spec);

struct IdentityCheck {
    std::string name;
    bool pass;
};
std::vector<IdentityCheck> identity_suite(const BranchSpec& spec);

// Class lookup for the command-line surface: "L", "e3", "M", "N", "Nstrict",
// "N0".."N3", "F0".."F3", "E", "G", "KH", "KY", "sum_e"; with a spec also
// "Efam0".."Efam3", "Eprime0".."Eprime3", "L0", "LY", "branch_plane",
// "branch_blowup".  Throws std::domain_error for unknown names.
DivClass named_class(const std::string& name, const std::optional<BranchSpec>& spec = std::nullopt);

}  // namespace geolab::hesse
