#include "geolab/geolab.h"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "families.hpp"
#include "geography.hpp"
#include "hesse.hpp"
#include "jsonio.hpp"
#include "logchern.hpp"
#include "numtheory.hpp"
#include "rational.hpp"
#include "rootcover.hpp"

struct geolab_result {
    std::map<std::string, std::string> fields;
};

namespace {

using geolab::Int;
using geolab::Rat;
using geolab::jsonio::json;
namespace fam = geolab::families;

thread_local std::string g_last_error = "no error";

int fail_code(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

std::string required(const char* value, const char* name) {
    if (!value) throw std::domain_error(std::string(name) + " must not be null");
    return value;
}

Int int_arg(const char* value, const char* name) {
    Rat r = geolab::parse_rat(required(value, name));
    if (!geolab::is_integer(r)) throw std::domain_error(std::string(name) + " must be an integer");
    return numerator(r);
}

Rat rat_arg(const char* value, const char* name) { return geolab::parse_rat(required(value, name)); }

template <typename Fn>
int guarded(geolab_result** out, Fn&& fn) {
    if (!out) return fail_code(GEOLAB_ERR_DOMAIN, "null output handle");
    *out = nullptr;
    try {
        auto result = std::make_unique<geolab_result>();
        fn(*result);
        *out = result.release();
        return GEOLAB_OK;
    } catch (const geolab::identity_error& e) {
        return fail_code(GEOLAB_ERR_IDENTITY, e.what());
    } catch (const geolab::io_error& e) {
        return fail_code(GEOLAB_ERR_IO, e.what());
    } catch (const std::domain_error& e) {
        return fail_code(GEOLAB_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail_code(GEOLAB_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail_code(GEOLAB_ERR_IDENTITY, std::string("internal error: ") + e.what());
    }
}

void store_json(geolab_result& result, const json& doc) { result.fields["json"] = geolab::jsonio::pretty(doc); }

std::string invariants_text(const geolab::rootcover::SurfaceInvariants& inv) {
    std::string text;
    text += "c1sq = " + geolab::to_string(inv.c1sq) + "\n";
    text += "c2 = " + geolab::to_string(inv.c2) + "\n";
    text += "chi = " + geolab::to_string(inv.chi) + "\n";
    text += "signature = " + geolab::to_string(inv.signature) + "\n";
    text += "slope = " + geolab::to_string(inv.slope) + "\n";
    text += std::string("spin = ") + (inv.spin ? "true" : "false") + "\n";
    text += "pi1 = " + inv.pi1;
    return text;
}

std::string family_text(const fam::FamilyReport& report) {
    std::size_t passed = 0;
    for (const auto& check : report.checks)
        if (check.pass) ++passed;
    std::string text;
    text += "variant = " + fam::variant_name(report.params.variant) + "\n";
    text += "alpha = " + geolab::to_string(report.params.alpha) + "\n";
    text += "beta = " + geolab::to_string(report.params.beta) + "\n";
    text += "d = " + geolab::to_string(report.params.d) + "\n";
    text += "p = " + geolab::to_string(report.params.p) + "\n";
    text += "n = " + geolab::to_string(report.n) + "\n";
    text += "degree = " + geolab::to_string(report.degree) + "\n";
    text += "t2 = " + geolab::to_string(report.t2) + "\n";
    text += "t2_equal = " + geolab::to_string(report.t2_equal) + "\n";
    text += "t2_mixed = " + geolab::to_string(report.t2_mixed) + "\n";
    text += "log_c1sq = " + geolab::to_string(report.log_c1sq) + "\n";
    text += "log_c2 = " + geolab::to_string(report.log_c2) + "\n";
    text += invariants_text(report.invariants) + "\n";
    text += "limit_slope = " + geolab::to_string(report.limit) + "\n";
    text += "slope_gap = " + geolab::to_string(report.slope_gap) + "\n";
    text += "checks_passed = " + std::to_string(passed) + "/" + std::to_string(report.checks.size());
    return text;
}

// A family whose internal identity suite fails must not present itself as a
// result; the first broken check aborts the call.
void require_all_checks(const fam::FamilyReport& report) {
    if (report.all_checks_pass) return;
    for (const auto& check : report.checks)
        if (!check.pass) throw geolab::identity_error("failed check '" + check.name + "'");
}

json points_json(const std::vector<geolab::geography::GridPoint>& points) {
    json rows = json::array();
    for (const auto& pt : points) {
        json row;
        row["params"] = geolab::jsonio::to_json(pt.params);
        row["invariants"] = geolab::jsonio::to_json(pt.invariants);
        row["limit_slope"] = geolab::to_string(pt.limit);
        row["slope_gap"] = geolab::to_string(pt.slope_gap);
        row["all_checks_pass"] = true;  // compute_points aborts otherwise
        rows.push_back(row);
    }
    json doc;
    doc["points"] = rows;
    return doc;
}

std::vector<geolab::geography::GridPoint> points_from_grid(const char* grid) {
    auto grids = geolab::geography::parse_grid(required(grid, "grid"));
    return geolab::geography::compute_points(geolab::geography::expand(grids));
}

}  // namespace

extern "C" {

const char* geolab_version(void) { return "1.0.0"; }

const char* geolab_last_error(void) { return g_last_error.c_str(); }

const char* geolab_result_text(const geolab_result* result) {
    if (!result) return nullptr;
    auto it = result->fields.find("text");
    return it == result->fields.end() ? nullptr : it->second.c_str();
}

const char* geolab_result_json(const geolab_result* result) {
    if (!result) return nullptr;
    auto it = result->fields.find("json");
    return it == result->fields.end() ? nullptr : it->second.c_str();
}

const char* geolab_result_field(const geolab_result* result, const char* name) {
    if (!result || !name) return nullptr;
    auto it = result->fields.find(name);
    return it == result->fields.end() ? nullptr : it->second.c_str();
}

void geolab_result_free(geolab_result* result) { delete result; }

int geolab_dedekind(const char* q, const char* m, geolab_result** out) {
    return guarded(out, [&](geolab_result& result) {
        Rat value = geolab::numtheory::dedekind_sum(int_arg(q, "q"), int_arg(m, "m"));
        result.fields["text"] = geolab::to_string(value);
        json doc;
        doc["value"] = geolab::to_string(value);
        store_json(result, doc);
    });
}

int geolab_hj(const char* m, const char* q, geolab_result** out) {
    return guarded(out, [&](geolab_result& result) {
        auto chain = geolab::numtheory::hj_expand(int_arg(m, "m"), int_arg(q, "q"));
        std::string text;
        json terms = json::array();
        for (const auto& e : chain.e) {
            if (!text.empty()) text += ' ';
            text += geolab::to_string(e);
            terms.push_back(geolab::to_string(e));
        }
        result.fields["text"] = text;
        json doc;
        doc["m"] = geolab::to_string(chain.m);
        doc["q"] = geolab::to_string(chain.q);
        doc["terms"] = terms;
        doc["length"] = geolab::to_string(chain.length());
        store_json(result, doc);
    });
}

int geolab_resolve(const char* m, const char* q, geolab_result** out) {
    return guarded(out, [&](geolab_result& result) {
        auto res = geolab::numtheory::resolve_cqs(int_arg(m, "m"), int_arg(q, "q"));
        std::string text;
        json chain = json::array(), disc = json::array(), c = json::array(), d = json::array();
        for (const auto& e : res.e) chain.push_back(geolab::to_string(e));
        for (const auto& value : res.disc) {
            if (!text.empty()) text += ' ';
            text += geolab::to_string(value);
            disc.push_back(geolab::to_string(value));
        }
        for (const auto& value : res.c) c.push_back(geolab::to_string(value));
        for (const auto& value : res.d) d.push_back(geolab::to_string(value));
        result.fields["text"] = text;
        json doc;
        doc["m"] = geolab::to_string(res.m);
        doc["q"] = geolab::to_string(res.q);
        doc["chain"] = chain;
        doc["discrepancies"] = disc;
        doc["c"] = c;
        doc["d"] = d;
        store_json(result, doc);
    });
}

int geolab_log_chern(const char* arrangement_json, geolab_result** out) {
    return guarded(out, [&](geolab_result& result) {
        auto arr = geolab::jsonio::arrangement_from_json(
            geolab::jsonio::parse_text(required(arrangement_json, "arrangement")));
        geolab::logchern::validate(arr);
        auto [c1, c2] = geolab::logchern::log_chern_numbers(arr);
        result.fields["text"] = "log_c1sq = " + geolab::to_string(c1) + "\nlog_c2 = " + geolab::to_string(c2);
        json doc;
        doc["log_c1sq"] = geolab::to_string(c1);
        doc["log_c2"] = geolab::to_string(c2);
        store_json(result, doc);
    });
}

int geolab_lattice_check(const char* variant, const char* alpha, const char* beta, const char* d, const char* p,
                         geolab_result** out) {
    return guarded(out, [&](geolab_result& result) {
        fam::FamilyParams params{fam::parse_variant(required(variant, "variant")), int_arg(alpha, "alpha"),
                                 int_arg(beta, "beta"), int_arg(d, "d"), int_arg(p, "p")};
        auto checks = geolab::hesse::identity_suite(fam::branch_spec(params));
        std::string text;
        bool all_pass = true;
        for (const auto& check : checks) {
            text += check.name + ": " + (check.pass ? "PASS" : "FAIL") + "\n";
            all_pass = all_pass && check.pass;
        }
        text += all_pass ? "all identities hold" : "identity failures present";
        result.fields["text"] = text;
        store_json(result, geolab::jsonio::checks_to_json(checks, all_pass));
        if (!all_pass)
            for (const auto& check : checks)
                if (!check.pass) throw geolab::identity_error("failed identity '" + check.name + "'");
    });
}

int geolab_cover(const char* branch_json, int spin, const char* pi1, geolab_result** out) {
    return guarded(out, [&](geolab_result& result) {
        auto branch = geolab::jsonio::branch_from_json(geolab::jsonio::parse_text(required(branch_json, "branch")));
        geolab::rootcover::validate(branch);
        auto inv = geolab::rootcover::chern_of_cover(branch, spin != 0, pi1 ? pi1 : "trivial");
        result.fields["text"] = invariants_text(inv);
        result.fields["slope"] = geolab::to_string(inv.slope);
        store_json(result, geolab::jsonio::to_json(inv));
    });
}

int geolab_family(const char* variant, const char* alpha, const char* beta, const char* d, const char* p,
                  geolab_result** out) {
    return guarded(out, [&](geolab_result& result) {
        fam::FamilyParams params{fam::parse_variant(required(variant, "variant")), int_arg(alpha, "alpha"),
                                 int_arg(beta, "beta"), int_arg(d, "d"), int_arg(p, "p")};
        fam::FamilyReport report = fam::build_family(params);
        require_all_checks(report);
        result.fields["text"] = family_text(report);
        result.fields["slope"] = geolab::to_string(report.invariants.slope);
        store_json(result, geolab::jsonio::to_json(report));
    });
}

int geolab_target(const char* variant, const char* r, const char* eps, const char* d, const char* prime_ceiling,
                  const char* denom_bound, geolab_result** out) {
    return guarded(out, [&](geolab_result& result) {
        fam::Variant v = fam::parse_variant(required(variant, "variant"));
        std::optional<Int> d_opt;
        if (d) d_opt = int_arg(d, "d");
        Int ceiling = prime_ceiling ? int_arg(prime_ceiling, "prime_ceiling") : Int(10000000);
        Int bound = denom_bound ? int_arg(denom_bound, "denom_bound") : Int(1000000);
        fam::TargetResult target = fam::target_slope(v, rat_arg(r, "r"), rat_arg(eps, "eps"), d_opt, ceiling, bound);
        require_all_checks(target.report);
        std::string text;
        text += "target = " + geolab::to_string(target.target) + "\n";
        text += "gap = " + geolab::to_string(target.gap) + "\n";
        text += family_text(target.report);
        result.fields["text"] = text;
        result.fields["slope"] = geolab::to_string(target.report.invariants.slope);
        store_json(result, geolab::jsonio::to_json(target));
    });
}

int geolab_base_change(const char* variant, const char* alpha, const char* beta, const char* d, const char* p,
                       const char* q, geolab_result** out) {
    return guarded(out, [&](geolab_result& result) {
        fam::FamilyParams params{fam::parse_variant(required(variant, "variant")), int_arg(alpha, "alpha"),
                                 int_arg(beta, "beta"), int_arg(d, "d"), int_arg(p, "p")};
        fam::FamilyReport report = fam::build_family(params);
        require_all_checks(report);
        fam::BaseChangeResult base = fam::genus_base_change(report, int_arg(q, "q"));
        std::string text;
        text += "base_genus = " + geolab::to_string(base.base_genus) + "\n";
        text += "line_branch_degree = " + geolab::to_string(base.line_branch_degree) + "\n";
        text += "line_preimage_genus = " + geolab::to_string(base.line_preimage_genus) + "\n";
        text += invariants_text(base.invariants);
        result.fields["text"] = text;
        result.fields["slope"] = geolab::to_string(base.invariants.slope);
        store_json(result, geolab::jsonio::to_json(base));
    });
}

int geolab_sweep(const char* grid, geolab_result** out) {
    return guarded(out, [&](geolab_result& result) {
        auto points = points_from_grid(grid);
        std::string csv = geolab::geography::to_csv(points);
        result.fields["text"] = csv;
        result.fields["csv"] = csv;
        store_json(result, points_json(points));
    });
}

int geolab_geography(const char* grid, int loglog, geolab_result** out) {
    return guarded(out, [&](geolab_result& result) {
        auto points = points_from_grid(grid);
        std::string csv = geolab::geography::to_csv(points);
        result.fields["text"] = csv;
        result.fields["csv"] = csv;
        result.fields["svg"] = geolab::geography::to_svg(points, {loglog != 0});
        store_json(result, points_json(points));
    });
}

int geolab_decimal(const char* value, unsigned digits, geolab_result** out) {
    return guarded(out, [&](geolab_result& result) {
        std::string text = geolab::decimal_string(rat_arg(value, "value"), digits);
        result.fields["text"] = text;
        json doc;
        doc["value"] = text;
        store_json(result, doc);
    });
}

}  // extern "C"
