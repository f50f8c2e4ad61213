#include "families.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include "errors.hpp"
#include "numtheory.hpp"

namespace geolab::families {

namespace {

enum class Kind { elliptic, translate, central, line };

struct Descriptor {
    std::string label;
    Kind kind = Kind::line;
    int dir = -1;  // 0..3 for per-direction families, -1 for the line grids
    Int count = 0;
    Int genus = 0;
    Int self_intersection = 0;
    Int multiplicity = 1;
};

// The branch configuration on the arrangement surface.  Per direction: the
// pencil's arrangement cubics (self-intersection -n^2 once their singular
// points are blown up), the smooth fiber translates avoiding every singular
// point, and the three exceptional curves over the direction's base points
// (each loses one unit per triple point it carries); plus the two grids of
// general-position lines.
std::vector<Descriptor> branch_descriptors(const hesse::BranchSpec& spec) {
    std::vector<Descriptor> out;
    const Int c_e = spec.elliptic_count();
    const Int v = spec.fiber_translates();
    const Int lines = spec.line_count();
    const Int nsq = spec.n() * spec.n();
    for (int dir = 0; dir < 4; ++dir) {
        const Int mult = 3 * spec.a(dir);
        out.push_back({"E" + std::to_string(dir), Kind::elliptic, dir, c_e, 1, -nsq, mult});
        if (v > 0) out.push_back({"Ep" + std::to_string(dir), Kind::translate, dir, v, 1, 0, mult});
        out.push_back({"N" + std::to_string(dir), Kind::central, dir, 3, 0, -1 - c_e, mult});
    }
    out.push_back({"Llow", Kind::line, -1, lines, 0, 1, 3});
    out.push_back({"Lhigh", Kind::line, -1, lines, 0, 1, 3 * spec.high_mult()});
    return out;
}

// Numerical class of one member curve before the second round of blow-ups;
// pairings of these representatives give the raw plane-level intersection
// numbers.  `second_member` picks a different base point for the exceptional
// families so that within-family pairs evaluate correctly.
hesse::DivClass representative(const Descriptor& d, bool second_member) {
    switch (d.kind) {
        case Kind::elliptic:
        case Kind::translate:
            return hesse::cls_F(d.dir);
        case Kind::central:
            return hesse::cls_e(3 * d.dir + (second_member ? 1 : 0));
        case Kind::line:
            return hesse::cls_L();
    }
    throw std::domain_error("unknown curve kind");
}

// Crossings separated by the second round of blow-ups: distinct cubics meet
// one another only at the triple and quadruple points of the arrangement, and
// cubics cross the exceptional curves of other directions exactly at the
// triple points.  Everything else survives as a node of the branch divisor.
bool absorbed_at_blowups(const Descriptor& a, const Descriptor& b) {
    const bool a_ell = a.kind == Kind::elliptic, b_ell = b.kind == Kind::elliptic;
    const bool a_cen = a.kind == Kind::central, b_cen = b.kind == Kind::central;
    if (a_ell && b_ell) return a.dir != b.dir;
    if ((a_ell && b_cen) || (a_cen && b_ell)) return a.dir != b.dir;
    return false;
}

struct CensusPolynomials {
    Int t2, t2_equal, t2_mixed;
};

// Closed forms for the node census in the grid parameters.
CensusPolynomials census_polynomials(const FamilyParams& prm) {
    const Int a2 = prm.alpha * prm.alpha, b2 = prm.beta * prm.beta;
    const Int p2 = prm.p * prm.p, p4 = p2 * p2, b4 = b2 * b2, d = prm.d, d2 = d * d;
    if (prm.variant == Variant::spin) {
        return {13824 * b2 * a2 * p4 + 1152 * b4 * p4 + 4608 * d * a2 * p2 + 768 * d * b2 * p2 + 32 * d2 - 100 * d,
                384 * b4 * p4 + 4608 * a2 * b2 * p4 + 2304 * d * a2 * p2 - 52 * d + 384 * d * b2 * p2 + 16 * d2,
                768 * b4 * p4 + 9216 * a2 * b2 * p4 + 2304 * d * a2 * p2 - 48 * d + 384 * d * b2 * p2 + 16 * d2};
    }
    return {108 * a2 * b2 * p4 + 18 * b4 * p4 + 72 * d * a2 * p2 - 25 * d + 24 * d * b2 * p2 + 2 * d2,
            6 * b4 * p4 + 36 * a2 * b2 * p4 + 36 * d * a2 * p2 - 13 * d + 12 * d * b2 * p2 + d2,
            12 * b4 * p4 + 72 * a2 * b2 * p4 + 36 * d * a2 * p2 - 12 * d + 12 * d * b2 * p2 + d2};
}

std::string node_label(const Int& lo, const Int& hi) {
    return "nodes-" + to_string(lo) + "-" + to_string(hi);
}

Int rat_floor(const Rat& x) {
    Int q = numerator(x) / denominator(x);
    if (Rat(q) > x) --q;
    return q;
}

// Smallest-denominator rational in the closed interval [lo, hi], 0 <= lo <= hi.
Rat simplest_between(const Rat& lo, const Rat& hi) {
    const Int fl = rat_floor(lo);
    const Int ceil_lo = is_integer(lo) ? numerator(lo) : fl + 1;
    if (Rat(ceil_lo) <= hi) return Rat(ceil_lo);
    return Rat(fl) + Rat(1) / simplest_between(Rat(1) / (hi - Rat(fl)), Rat(1) / (lo - Rat(fl)));
}

}  // namespace

Variant parse_variant(const std::string& name) {
    if (name == "spin") return Variant::spin;
    if (name == "nonspin") return Variant::nonspin;
    throw std::domain_error("unknown variant '" + name + "' (expected 'spin' or 'nonspin')");
}

std::string variant_name(Variant v) { return v == Variant::spin ? "spin" : "nonspin"; }

hesse::BranchSpec branch_spec(const FamilyParams& params) {
    hesse::BranchSpec spec;
    spec.spin = params.variant == Variant::spin;
    spec.alpha = params.alpha;
    spec.beta = params.beta;
    spec.d = params.d;
    spec.p = params.p;
    hesse::validate(spec);
    return spec;
}

void validate_params(const FamilyParams& params) { branch_spec(params); }

FamilyReport build_family(const FamilyParams& params) {
    const hesse::BranchSpec spec = branch_spec(params);
    const bool spin = params.variant == Variant::spin;

    FamilyReport rep;
    rep.params = params;
    rep.n = spec.n();
    rep.degree = spec.degree();
    const Int m = rep.degree, n = rep.n;
    const Int t3 = hesse::t3_count(n), t4 = hesse::t4_count(n);

    auto add_check = [&rep](const std::string& name, bool pass) { rep.checks.push_back({name, pass}); };

    for (const hesse::IdentityCheck& c : hesse::identity_suite(spec)) add_check("lattice-" + c.name, c.pass);

    const std::vector<Descriptor> desc = branch_descriptors(spec);
    const std::size_t nf = desc.size();
    std::vector<Int> reduced(nf);
    for (std::size_t i = 0; i < nf; ++i) reduced[i] = mod_floor(desc[i].multiplicity, m);

    // Raw pairwise intersections, split into the part blown up on the way to
    // the arrangement surface and the part surviving as branch-divisor nodes.
    std::vector<std::vector<Int>> fresh(nf, std::vector<Int>(nf, Int(0)));
    Int absorbed_cubic_cubic = 0, absorbed_cubic_central = 0;
    auto pair_count = [&desc](std::size_t i, std::size_t j) {
        return i == j ? Int(desc[i].count * (desc[i].count - 1) / 2) : Int(desc[i].count * desc[j].count);
    };
    for (std::size_t i = 0; i < nf; ++i) {
        for (std::size_t j = i; j < nf; ++j) {
            const Int raw = hesse::pair(representative(desc[i], false), representative(desc[j], i == j));
            if (absorbed_at_blowups(desc[i], desc[j])) {
                const bool cubics = desc[i].kind == Kind::elliptic && desc[j].kind == Kind::elliptic;
                (cubics ? absorbed_cubic_cubic : absorbed_cubic_central) += raw * pair_count(i, j);
                continue;
            }
            fresh[i][j] = fresh[j][i] = raw;
        }
    }
    // Every quadruple point absorbs six cubic pairs, every triple point three
    // cubic pairs and three cubic-exceptional pairs.
    add_check("absorption-identities",
              absorbed_cubic_cubic == 6 * t4 + 3 * t3 && absorbed_cubic_central == 3 * t3);

    std::map<std::pair<Int, Int>, Int> census;
    for (std::size_t i = 0; i < nf; ++i) {
        for (std::size_t j = i; j < nf; ++j) {
            const Int total = fresh[i][j] * pair_count(i, j);
            if (total == 0) continue;
            const Int lo = std::min(reduced[i], reduced[j]), hi = std::max(reduced[i], reduced[j]);
            census[{lo, hi}] += total;
        }
    }
    for (const auto& [key, count] : census) {
        CensusRow row;
        row.nu_lo = key.first;
        row.nu_hi = key.second;
        row.count = count;
        row.q = numtheory::node_q(key.first, key.second, m);
        row.chain_length = numtheory::hj_length(m, row.q);
        rep.census.push_back(row);
        rep.t2 += count;
        (key.first == key.second ? rep.t2_equal : rep.t2_mixed) += count;
    }

    const CensusPolynomials poly = census_polynomials(params);
    add_check("census-polynomials",
              rep.t2 == poly.t2 && rep.t2_equal == poly.t2_equal && rep.t2_mixed == poly.t2_mixed);
    add_check("census-partition", rep.t2_equal + rep.t2_mixed == rep.t2);

    // Equal-multiplicity nodes land on (1/m)(1, m-1) points; mixed pairs on
    // (1/m)(1, 2p+1) resp. (1/m)(1, 1) points.
    const Int mixed_q = spin ? 2 * params.p + 1 : Int(1);
    bool node_types = true;
    for (const CensusRow& row : rep.census)
        node_types = node_types && row.q == (row.nu_lo == row.nu_hi ? m - 1 : mixed_q);
    add_check("census-node-types", node_types);

    bool chains = true;
    std::set<Int> q_values;
    for (const CensusRow& row : rep.census) q_values.insert(row.q);
    for (const Int& q : q_values) {
        const numtheory::CqsResolution res = numtheory::resolve_cqs(m, q);
        for (const Int& e : res.e) chains = chains && e >= 2;
        chains = chains && Int(res.e.size()) == numtheory::hj_length(m, q);
    }
    add_check("exceptional-chains", chains);

    // Route one to the log Chern numbers: the arrangement with its node
    // classes (validated there against the census by double counting).
    logchern::ArrangementSummary arr;
    arr.ambient_c1sq = Rat(Int(-3) - t3 - t4);
    arr.ambient_c2 = Rat(Int(15) + t3 + t4);
    for (const CensusRow& row : rep.census)
        arr.singularities.push_back({node_label(row.nu_lo, row.nu_hi), 2, row.count});

    std::vector<std::map<Int, Int>> nodes_with(nf);
    for (std::size_t i = 0; i < nf; ++i) {
        logchern::CurveFamily fam;
        fam.label = desc[i].label;
        fam.count = desc[i].count;
        fam.genus = desc[i].genus;
        fam.self_intersection = desc[i].self_intersection;
        fam.multiplicity = desc[i].multiplicity;
        for (const CensusRow& row : rep.census) fam.incidence[node_label(row.nu_lo, row.nu_hi)] = 0;
        for (std::size_t j = 0; j < nf; ++j) {
            const Int through = fresh[i][j] * (desc[j].count - (i == j ? 1 : 0));
            if (through == 0) continue;
            nodes_with[i][reduced[j]] += through;
            const Int lo = std::min(reduced[i], reduced[j]), hi = std::max(reduced[i], reduced[j]);
            fam.incidence[node_label(lo, hi)] += through;
        }
        arr.families.push_back(std::move(fam));
    }

    const auto [arr_c1sq, arr_c2] = logchern::log_chern_numbers(arr);
    rep.log_c1sq = arr_c1sq;
    rep.log_c2 = arr_c2;

    // Route two: closed forms in n, t2 and d.
    const Int n4 = n * n * n * n;
    add_check("log-chern-closed-form",
              rep.log_c1sq == Rat(n4 + 2 * rep.t2 - (spin ? 40 : 10) * params.d - 48) &&
              rep.log_c2 == Rat(n4 / 3 + rep.t2 - (spin ? 16 : 4) * params.d - 12));

    Int sum_self = 0, sum_genus = 0;
    for (const Descriptor& dsc : desc) {
        sum_self += dsc.count * dsc.self_intersection;
        sum_genus += dsc.count * (dsc.genus - 1);
    }
    add_check("totals-closed-form", sum_self == -4 * (n4 / 3) + (spin ? 8 : 2) * params.d &&
                                        sum_genus == -12 - (spin ? 8 : 2) * params.d);

    rep.branch.degree = m;
    rep.branch.log_c1sq = rep.log_c1sq;
    rep.branch.log_c2 = rep.log_c2;
    rep.branch.sum_self_intersection = sum_self;
    rep.branch.sum_genus_minus_one = sum_genus;
    for (const CensusRow& row : rep.census) rep.branch.census.push_back({row.nu_lo, row.nu_hi, row.count});
    for (std::size_t i = 0; i < nf; ++i) {
        rootcover::CurveClass cls;
        cls.label = desc[i].label;
        cls.count = desc[i].count;
        cls.genus = desc[i].genus;
        cls.self_intersection = desc[i].self_intersection;
        cls.multiplicity = desc[i].multiplicity;
        cls.nodes_with = nodes_with[i];
        rep.branch.curves.push_back(std::move(cls));
    }

    rep.invariants = rootcover::chern_of_cover(rep.branch, spin, "trivial");

    bool strict_integral = true, minimal = true;
    for (std::size_t i = 0; i < nf; ++i) {
        CurveRow row;
        row.label = desc[i].label;
        row.count = desc[i].count;
        row.genus = desc[i].genus;
        row.self_intersection = desc[i].self_intersection;
        row.multiplicity = desc[i].multiplicity;
        row.reduced = reduced[i];
        row.line_degree = hesse::pair(representative(desc[i], false), hesse::cls_L());
        row.strict_self_intersection = rootcover::strict_transform_self_intersection(rep.branch, row.label);
        strict_integral = strict_integral && is_integer(row.strict_self_intersection);
        if (row.genus == 0) minimal = minimal && row.strict_self_intersection < Rat(-1);
        rep.curves.push_back(std::move(row));
    }
    add_check("strict-transform-integrality", strict_integral);
    // No rational branch curve pulls back to a (-1)-curve.
    add_check("minimality-strict-transforms", minimal);

    if (spin) {
        // Even cover degree: the canonical corrections along every resolution
        // chain must have even coefficients, computed from the full
        // (unreduced, odd) multiplicities.
        bool parity = true;
        std::map<Int, Int> full_of;
        for (std::size_t i = 0; i < nf; ++i) {
            parity = parity && mod_floor(desc[i].multiplicity, 2) == 1;
            const auto [it, inserted] = full_of.emplace(reduced[i], desc[i].multiplicity);
            parity = parity && (inserted || it->second == desc[i].multiplicity);
        }
        for (const CensusRow& row : rep.census) {
            parity = parity && full_of.count(row.nu_lo) == 1 && full_of.count(row.nu_hi) == 1 &&
                     rootcover::delta_correction_even(m, full_of.at(row.nu_lo), full_of.at(row.nu_hi));
        }
        add_check("cover-parity-corrections", parity);
    }

    for (const rootcover::ConditionCheck& c : rootcover::necessary_conditions(rep.invariants).checks)
        add_check("surface-" + c.name, c.pass);

    add_check("slope-range", rep.invariants.slope > 0 && rep.invariants.slope < 3);

    rep.limit = params.beta == 0 ? Rat(3)
                                 : limit_slope(params.variant, make_rat(params.alpha, params.beta));
    rep.slope_gap = abs(rep.invariants.slope - rep.limit);

    rep.all_checks_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                                      [](const hesse::IdentityCheck& c) { return c.pass; });
    return rep;
}

Rat limit_slope(Variant v, const std::optional<Rat>& x) {
    if (!x) return Rat(3);
    if (*x < 0) throw std::domain_error("slope ratio must be nonnegative");
    const Rat y = *x * *x, y2 = y * y;
    if (v == Variant::spin) return (108 * y2 + 132 * y + 11) / (36 * y2 + 96 * y + 8);
    return (27 * y2 + 48 * y + 8) / (9 * y2 + 48 * y + 8);
}

SlopeInversion invert_slope(Variant v, const Rat& r, const Rat& eps, const Int& denom_bound) {
    if (eps <= 0) throw std::domain_error("tolerance must be positive");
    if (denom_bound < 1) throw std::domain_error("denominator bound must be positive");
    const Rat floor_val = limit_slope(v, Rat(0));
    if (r < floor_val || r > 3)
        throw std::domain_error("slope " + to_string(r) + " is outside the limit range [" +
                                to_string(floor_val) + ", 3] of " + variant_name(v) + " grids");
    if (r == 3) return {Int(1), Int(0), Rat(3)};
    if (r == floor_val) return {Int(0), Int(1), floor_val};

    auto lam = [v](const Rat& x) { return limit_slope(v, x); };
    auto result = [&](const Rat& x) -> SlopeInversion {
        if (denominator(x) > denom_bound)
            throw std::domain_error("no ratio with denominator at most " + to_string(denom_bound) +
                                    " reaches the requested tolerance");
        return {numerator(x), denominator(x), lam(x)};
    };

    // The limit slope is strictly increasing in x, so bracket and bisect;
    // report the smallest-denominator ratio once it lands within tolerance.
    Rat lo = 0, hi = 1;
    while (lam(hi) < r) hi *= 2;
    if (lam(hi) == r) return result(hi);
    while (true) {
        const Rat cand = simplest_between(lo, hi);
        if (abs(lam(cand) - r) < eps) return result(cand);
        const Rat mid = (lo + hi) / 2;
        const Rat at_mid = lam(mid);
        if (at_mid == r) return result(mid);
        (at_mid < r ? lo : hi) = mid;
    }
}

TargetResult target_slope(Variant v, const Rat& r, const Rat& eps, const std::optional<Int>& d,
                          const Int& prime_ceiling, const Int& denom_bound) {
    if (eps <= 0) throw std::domain_error("tolerance must be positive");
    const Rat half = eps / 2;
    SlopeInversion inv = invert_slope(v, r, half, denom_bound);
    Int alpha = inv.alpha, beta = inv.beta;
    if (alpha == 0) {
        // r sits within half a tolerance of the lower endpoint, but grids need
        // alpha >= 1: approach along x = 1/beta instead.
        alpha = 1;
        beta = 1;
        while (abs(limit_slope(v, make_rat(alpha, beta)) - r) >= half) {
            beta *= 2;
            if (beta > denom_bound)
                throw std::domain_error("no ratio with denominator at most " + to_string(denom_bound) +
                                        " reaches the requested tolerance");
        }
    }

    const Int dval = d ? *d : (v == Variant::spin ? Int(1) : Int(2));
    Int start = 5;
    if (v == Variant::nonspin && 2 * dval > start) start = 2 * dval;
    std::uint64_t p = static_cast<std::uint64_t>(start);
    if (!numtheory::is_prime(p)) p = numtheory::next_prime(p);
    while (true) {
        if (Int(p) > prime_ceiling)
            throw std::domain_error("no prime at most " + to_string(prime_ceiling) +
                                    " closes the slope gap " + to_string(r) + " within " + to_string(eps));
        FamilyParams params{v, alpha, beta, dval, Int(p)};
        FamilyReport report = build_family(params);
        for (const hesse::IdentityCheck& c : report.checks)
            if (!c.pass)
                throw identity_error("family check '" + c.name + "' failed at p = " + to_string(Int(p)));
        const Rat gap = abs(report.invariants.slope - r);
        if (gap < eps) return {std::move(report), r, gap};
        p = numtheory::next_prime(2 * p);
    }
}

BaseChangeResult genus_base_change(const FamilyReport& report, const Int& q) {
    if (report.params.variant != Variant::nonspin)
        throw std::domain_error("base change is defined for non-spin families only");
    if (q < 1) throw std::domain_error("base genus must be at least 1");
    if (report.curves.empty()) throw std::domain_error("family report carries no curve table");

    const Int p = report.params.p;
    Int degree_on_line = 0;
    for (const CurveRow& row : report.curves) degree_on_line += row.count * row.line_degree;
    const Int expected = 4 * (report.n * report.n - 3) +
                         12 * report.params.beta * report.params.beta * p * p + 2 * report.params.d;
    if (degree_on_line != expected)
        throw identity_error("branch degree on a general line: curve table gives " +
                             to_string(degree_on_line) + ", closed form gives " + to_string(expected));

    // A general line pulls back to a degree-p cyclic cover totally ramified
    // over its intersection with the branch divisor.
    const Int two_g_minus_2 = -2 * p + (p - 1) * degree_on_line;
    if (mod_floor(two_g_minus_2, 2) != 0) throw identity_error("line preimage genus is not integral");
    const Int g_minus_1 = two_g_minus_2 / 2;

    BaseChangeResult out;
    out.base_genus = q;
    out.line_branch_degree = degree_on_line;
    out.line_preimage_genus = g_minus_1 + 1;
    const Int c1 = report.invariants.c1sq, c2 = report.invariants.c2;
    out.invariants = rootcover::invariants_from_chern(
        (q + 1) * (c1 - p) + 16 * q * g_minus_1, (q + 1) * (c2 + p) + 8 * q * g_minus_1, false,
        "genus-" + to_string(q) + " surface group");
    return out;
}

}  // namespace geolab::families
