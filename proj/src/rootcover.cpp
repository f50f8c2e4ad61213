#include "rootcover.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "errors.hpp"
#include "numtheory.hpp"

namespace geolab::rootcover {

namespace {

Int reduced_unit(const Int& nu, const Int& m, const std::string& what) {
    Int r = mod_floor(nu, m);
    if (r == 0 || gcd(r, m) != 1) {
        throw std::domain_error(what + " multiplicity " + to_string(nu) + " is not a unit modulo " +
                                to_string(m));
    }
    return r;
}

}  // namespace

void validate(const BranchSummary& branch) {
    const Int& m = branch.degree;
    if (m < 2) throw std::domain_error("cover degree must be at least 2");

    std::set<std::pair<Int, Int>> seen;
    for (const NodeClass& node : branch.census) {
        if (node.count < 0) throw std::domain_error("census count is negative");
        if (node.nu_lo > node.nu_hi) throw std::domain_error("census class is not ordered nu_lo <= nu_hi");
        for (const Int& nu : {node.nu_lo, node.nu_hi}) {
            if (nu <= 0 || nu >= m || gcd(nu, m) != 1) {
                throw std::domain_error("census multiplicity " + to_string(nu) +
                                        " is not a unit in (0, " + to_string(m) + ")");
            }
        }
        if (!seen.insert({node.nu_lo, node.nu_hi}).second) {
            throw std::domain_error("duplicate census class (" + to_string(node.nu_lo) + ", " +
                                    to_string(node.nu_hi) + ")");
        }
    }

    if (branch.curves.empty()) return;

    std::set<std::string> labels;
    Int self_sum = 0, genus_sum = 0;
    // Ordered node totals: T[(a, b)] = nodes counted from the side of residue
    // class a against partners of class b.
    std::map<std::pair<Int, Int>, Int> ordered;
    for (const CurveClass& fam : branch.curves) {
        if (!labels.insert(fam.label).second) {
            throw std::domain_error("duplicate curve family label '" + fam.label + "'");
        }
        if (fam.count < 0) throw std::domain_error("curve family count is negative");
        if (fam.genus < 0) throw std::domain_error("curve family genus is negative");
        Int self = reduced_unit(fam.multiplicity, m, "family '" + fam.label + "'");
        self_sum += fam.count * fam.self_intersection;
        genus_sum += fam.count * (fam.genus - 1);
        for (const auto& [partner, nodes] : fam.nodes_with) {
            if (nodes < 0) throw std::domain_error("negative node count in family '" + fam.label + "'");
            reduced_unit(partner, m, "partner of family '" + fam.label + "'");
            ordered[{self, mod_floor(partner, m)}] += fam.count * nodes;
        }
    }
    if (self_sum != branch.sum_self_intersection) {
        throw std::domain_error("curve families total self-intersection " + to_string(self_sum) +
                                ", summary says " + to_string(branch.sum_self_intersection));
    }
    if (genus_sum != branch.sum_genus_minus_one) {
        throw std::domain_error("curve families total genus sum " + to_string(genus_sum) +
                                ", summary says " + to_string(branch.sum_genus_minus_one));
    }

    // Every node lies on exactly two branches, so the per-side totals must
    // reproduce the census from both directions.
    std::map<std::pair<Int, Int>, Int> wanted;
    for (const NodeClass& node : branch.census) {
        wanted[{node.nu_lo, node.nu_hi}] = node.count;
    }
    std::set<std::pair<Int, Int>> keys;
    for (const auto& [key, total] : ordered) keys.insert({std::min(key.first, key.second), std::max(key.first, key.second)});
    for (const auto& [key, total] : wanted) keys.insert(key);
    for (const auto& key : keys) {
        const auto& [lo, hi] = key;
        Int expect = wanted.count(key) ? wanted.at(key) : Int(0);
        if (lo == hi) {
            Int got = ordered.count({lo, lo}) ? ordered.at({lo, lo}) : Int(0);
            if (got != 2 * expect) {
                throw std::domain_error("census class (" + to_string(lo) + ", " + to_string(hi) +
                                        ") double count " + to_string(got) + " != 2 * " + to_string(expect));
            }
        } else {
            for (auto side : {std::pair{lo, hi}, std::pair{hi, lo}}) {
                Int got = ordered.count(side) ? ordered.at(side) : Int(0);
                if (got != expect) {
                    throw std::domain_error("census class (" + to_string(lo) + ", " + to_string(hi) +
                                            ") counted " + to_string(got) + " from the side of " +
                                            to_string(side.first) + ", census says " + to_string(expect));
                }
            }
        }
    }
}

Int census_total(const BranchSummary& branch) {
    Int total = 0;
    for (const NodeClass& node : branch.census) total += node.count;
    return total;
}

SurfaceInvariants chern_of_cover(const BranchSummary& branch, bool spin, const std::string& pi1) {
    validate(branch);
    const Int& m = branch.degree;

    Int t2 = census_total(branch);
    Int correction = t2 + 2 * branch.sum_genus_minus_one;

    Rat c1 = Rat(m) * branch.log_c1sq - Rat(2 * correction) + make_rat(branch.sum_self_intersection, m);
    Rat c2 = Rat(m) * branch.log_c2 - Rat(correction);
    for (const NodeClass& node : branch.census) {
        Int q = numtheory::node_q(node.nu_lo, node.nu_hi, m);
        c1 -= numtheory::c_coeff(q, m) * Rat(node.count);
        c2 += Rat(numtheory::hj_length(m, q) * node.count);
    }

    if (!is_integer(c1)) throw identity_error("cover c1^2 = " + to_string(c1) + " is not an integer");
    if (!is_integer(c2)) throw identity_error("cover c2 = " + to_string(c2) + " is not an integer");

    return invariants_from_chern(numerator(c1), numerator(c2), spin, pi1);
}

SurfaceInvariants invariants_from_chern(const Int& c1sq, const Int& c2, bool spin,
                                        const std::string& pi1) {
    SurfaceInvariants inv;
    inv.c1sq = c1sq;
    inv.c2 = c2;
    if ((inv.c1sq + inv.c2) % 12 != 0) {
        throw identity_error("cover invariants violate Noether divisibility: c1^2 + c2 = " +
                             to_string(Int(inv.c1sq + inv.c2)));
    }
    inv.chi = (inv.c1sq + inv.c2) / 12;
    // (c1^2 - 2 c2) == (c1^2 + c2) (mod 3), so divisibility by 12 above makes
    // the signature automatically integral.
    inv.signature = (inv.c1sq - 2 * inv.c2) / 3;
    if (inv.c2 == 0) throw identity_error("cover Euler number vanishes; slope undefined");
    inv.slope = make_rat(inv.c1sq, inv.c2);
    inv.spin = spin;
    inv.pi1 = pi1;
    return inv;
}

Rat strict_transform_self_intersection(const BranchSummary& branch, const std::string& label) {
    validate(branch);
    const Int& m = branch.degree;
    for (const CurveClass& fam : branch.curves) {
        if (fam.label != label) continue;
        Int self = reduced_unit(fam.multiplicity, m, "family '" + fam.label + "'");
        Int weighted = 0;
        for (const auto& [partner, nodes] : fam.nodes_with) {
            weighted += numtheory::node_q(partner, self, m) * nodes;
        }
        return make_rat(fam.self_intersection - weighted, m);
    }
    throw std::domain_error("no curve family labelled '" + label + "'");
}

bool delta_correction_even(const Int& m, const Int& nu_i, const Int& nu_j) {
    Int q = numtheory::node_q(nu_i, nu_j, m);
    numtheory::CqsResolution res = numtheory::resolve_cqs(m, q);

    // The branch of multiplicity nu_j enters at the c-end of the chain: both
    // pullback sequences satisfy c_k == q d_k (mod m), so nu_j c_k + nu_i d_k
    // == d_k (q nu_j + nu_i) == 0 (mod m) by the choice of q.
    for (size_t k = 0; k < res.c.size(); ++k) {
        Int raw = nu_j * res.c[k] + nu_i * res.d[k];
        if (raw % m != 0) {
            throw identity_error("pullback multiplicities of node (" + to_string(nu_i) + ", " +
                                 to_string(nu_j) + ") mod " + to_string(m) + " are not integral");
        }
        Int coefficient = -(m - 1) * (raw / m) + (res.c[k] + res.d[k]) - 1;
        if (mod_floor(coefficient, 2) != 0) return false;
    }
    return true;
}

ConditionReport necessary_conditions(const Int& c1sq, const Int& c2, bool spin) {
    ConditionReport report;
    auto add = [&](const std::string& name, bool pass) { report.checks.push_back({name, pass}); };

    add("c1^2-positive", c1sq > 0);
    add("c2-positive", c2 > 0);
    add("noether-divisibility", (c1sq + c2) % 12 == 0);
    Int three_sig = c1sq - 2 * c2;
    add("signature-integral", three_sig % 3 == 0);
    add("bogomolov-miyaoka-yau", c1sq < 3 * c2);
    add("noether-inequality", 5 * c1sq >= c2 - 36);
    if (spin) {
        add("rokhlin-signature", three_sig % 3 == 0 && (three_sig / 3) % 16 == 0);
    }

    report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const ConditionCheck& c) { return c.pass; });
    return report;
}

ConditionReport necessary_conditions(const SurfaceInvariants& inv) {
    return necessary_conditions(inv.c1sq, inv.c2, inv.spin);
}

}  // namespace geolab::rootcover
