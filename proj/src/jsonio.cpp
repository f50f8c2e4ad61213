#include "jsonio.hpp"

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace geolab::jsonio {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::domain_error(where + ": " + what);
}

// Required member lookup with a readable path in the error message.
const json& member(const json& obj, const std::string& where, const char* key) {
    if (!obj.is_object()) fail(where, "expected a JSON object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing required key '") + key + "'");
    return *it;
}

// Reject keys outside the documented schema so typos are loud.
void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) fail(where, "expected a JSON object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) {
                known = true;
                break;
            }
        if (!known) fail(where, "unknown key '" + item.key() + "'");
    }
}

Int to_int(const json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return parse_int(v.get<std::string>());
        } catch (const std::domain_error& e) {
            fail(where, e.what());
        }
    }
    if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
    if (v.is_number_integer()) return Int(v.get<std::int64_t>());
    fail(where, "expected an integer encoded as a decimal string");
}

Rat to_rat(const json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return parse_rat(v.get<std::string>());
        } catch (const std::domain_error& e) {
            fail(where, e.what());
        }
    }
    if (v.is_number_unsigned()) return Rat(Int(v.get<std::uint64_t>()));
    if (v.is_number_integer()) return Rat(Int(v.get<std::int64_t>()));
    if (v.is_number_float()) fail(where, "floats are inexact; encode rationals as strings like \"5/2\"");
    fail(where, "expected a rational encoded as a string");
}

std::string to_label(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a string");
    return v.get<std::string>();
}

bool to_bool(const json& v, const std::string& where) {
    if (!v.is_boolean()) fail(where, "expected a boolean");
    return v.get<bool>();
}

json enc(const Int& x) { return json(to_string(x)); }
json enc(const Rat& x) { return json(to_string(x)); }

std::string at(const std::string& array_name, std::size_t i) {
    return array_name + "[" + std::to_string(i) + "]";
}

}  // namespace

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::domain_error(std::string("invalid JSON: ") + e.what());
    }
}

std::string pretty(const json& doc) { return doc.dump(2) + "\n"; }

json to_json(const logchern::ArrangementSummary& arr) {
    json doc;
    doc["ambient_c1sq"] = enc(arr.ambient_c1sq);
    doc["ambient_c2"] = enc(arr.ambient_c2);
    json curves = json::array();
    for (const auto& fam : arr.families) {
        json row;
        row["label"] = fam.label;
        row["count"] = enc(fam.count);
        row["genus"] = enc(fam.genus);
        row["self_intersection"] = enc(fam.self_intersection);
        row["multiplicity"] = enc(fam.multiplicity);
        json inc = json::object();
        for (const auto& [cls, per_curve] : fam.incidence) inc[cls] = enc(per_curve);
        row["incidence"] = inc;
        curves.push_back(row);
    }
    doc["curves"] = curves;
    json sing = json::array();
    for (const auto& cls : arr.singularities) {
        json row;
        row["label"] = cls.label;
        row["order"] = enc(cls.k);
        row["count"] = enc(cls.count);
        sing.push_back(row);
    }
    doc["singularities"] = sing;
    return doc;
}

logchern::ArrangementSummary arrangement_from_json(const json& doc) {
    check_keys(doc, "arrangement", {"ambient_c1sq", "ambient_c2", "curves", "singularities"});
    logchern::ArrangementSummary arr;
    arr.ambient_c1sq = to_rat(member(doc, "arrangement", "ambient_c1sq"), "ambient_c1sq");
    arr.ambient_c2 = to_rat(member(doc, "arrangement", "ambient_c2"), "ambient_c2");
    if (doc.contains("curves")) {
        const json& curves = doc["curves"];
        if (!curves.is_array()) fail("curves", "expected an array");
        for (std::size_t i = 0; i < curves.size(); ++i) {
            const std::string where = at("curves", i);
            const json& row = curves[i];
            check_keys(row, where, {"label", "count", "genus", "self_intersection", "multiplicity", "incidence"});
            logchern::CurveFamily fam;
            fam.label = to_label(member(row, where, "label"), where + ".label");
            fam.count = to_int(member(row, where, "count"), where + ".count");
            if (row.contains("genus")) fam.genus = to_int(row["genus"], where + ".genus");
            if (row.contains("self_intersection"))
                fam.self_intersection = to_int(row["self_intersection"], where + ".self_intersection");
            if (row.contains("multiplicity")) fam.multiplicity = to_int(row["multiplicity"], where + ".multiplicity");
            if (row.contains("incidence")) {
                const json& inc = row["incidence"];
                if (!inc.is_object()) fail(where + ".incidence", "expected an object");
                for (const auto& item : inc.items())
                    fam.incidence[item.key()] = to_int(item.value(), where + ".incidence['" + item.key() + "']");
            }
            arr.families.push_back(std::move(fam));
        }
    }
    if (doc.contains("singularities")) {
        const json& sing = doc["singularities"];
        if (!sing.is_array()) fail("singularities", "expected an array");
        for (std::size_t i = 0; i < sing.size(); ++i) {
            const std::string where = at("singularities", i);
            const json& row = sing[i];
            check_keys(row, where, {"label", "order", "count"});
            logchern::SingularityClass cls;
            cls.label = to_label(member(row, where, "label"), where + ".label");
            cls.k = to_int(member(row, where, "order"), where + ".order");
            cls.count = to_int(member(row, where, "count"), where + ".count");
            arr.singularities.push_back(std::move(cls));
        }
    }
    return arr;
}

json to_json(const rootcover::BranchSummary& branch) {
    json doc;
    doc["degree"] = enc(branch.degree);
    doc["log_c1sq"] = enc(branch.log_c1sq);
    doc["log_c2"] = enc(branch.log_c2);
    doc["sum_self_intersection"] = enc(branch.sum_self_intersection);
    doc["sum_genus_minus_one"] = enc(branch.sum_genus_minus_one);
    json census = json::array();
    for (const auto& cls : branch.census) {
        json row;
        row["nu_lo"] = enc(cls.nu_lo);
        row["nu_hi"] = enc(cls.nu_hi);
        row["count"] = enc(cls.count);
        census.push_back(row);
    }
    doc["census"] = census;
    json curves = json::array();
    for (const auto& curve : branch.curves) {
        json row;
        row["label"] = curve.label;
        row["count"] = enc(curve.count);
        row["genus"] = enc(curve.genus);
        row["self_intersection"] = enc(curve.self_intersection);
        row["multiplicity"] = enc(curve.multiplicity);
        json nodes = json::object();
        for (const auto& [partner, per_curve] : curve.nodes_with) nodes[to_string(partner)] = enc(per_curve);
        row["nodes_with"] = nodes;
        curves.push_back(row);
    }
    doc["curves"] = curves;
    return doc;
}

rootcover::BranchSummary branch_from_json(const json& doc) {
    check_keys(doc, "branch",
               {"degree", "log_c1sq", "log_c2", "sum_self_intersection", "sum_genus_minus_one", "census", "curves"});
    rootcover::BranchSummary branch;
    branch.degree = to_int(member(doc, "branch", "degree"), "degree");
    branch.log_c1sq = to_rat(member(doc, "branch", "log_c1sq"), "log_c1sq");
    branch.log_c2 = to_rat(member(doc, "branch", "log_c2"), "log_c2");
    branch.sum_self_intersection = to_int(member(doc, "branch", "sum_self_intersection"), "sum_self_intersection");
    branch.sum_genus_minus_one = to_int(member(doc, "branch", "sum_genus_minus_one"), "sum_genus_minus_one");
    const json& census = member(doc, "branch", "census");
    if (!census.is_array()) fail("census", "expected an array");
    for (std::size_t i = 0; i < census.size(); ++i) {
        const std::string where = at("census", i);
        const json& row = census[i];
        check_keys(row, where, {"nu_lo", "nu_hi", "count"});
        rootcover::NodeClass cls;
        cls.nu_lo = to_int(member(row, where, "nu_lo"), where + ".nu_lo");
        cls.nu_hi = to_int(member(row, where, "nu_hi"), where + ".nu_hi");
        cls.count = to_int(member(row, where, "count"), where + ".count");
        branch.census.push_back(std::move(cls));
    }
    if (doc.contains("curves")) {
        const json& curves = doc["curves"];
        if (!curves.is_array()) fail("curves", "expected an array");
        for (std::size_t i = 0; i < curves.size(); ++i) {
            const std::string where = at("curves", i);
            const json& row = curves[i];
            check_keys(row, where, {"label", "count", "genus", "self_intersection", "multiplicity", "nodes_with"});
            rootcover::CurveClass curve;
            curve.label = to_label(member(row, where, "label"), where + ".label");
            curve.count = to_int(member(row, where, "count"), where + ".count");
            if (row.contains("genus")) curve.genus = to_int(row["genus"], where + ".genus");
            if (row.contains("self_intersection"))
                curve.self_intersection = to_int(row["self_intersection"], where + ".self_intersection");
            if (row.contains("multiplicity"))
                curve.multiplicity = to_int(row["multiplicity"], where + ".multiplicity");
            if (row.contains("nodes_with")) {
                const json& nodes = row["nodes_with"];
                if (!nodes.is_object()) fail(where + ".nodes_with", "expected an object");
                for (const auto& item : nodes.items()) {
                    Int partner;
                    try {
                        partner = parse_int(item.key());
                    } catch (const std::domain_error&) {
                        fail(where + ".nodes_with", "key '" + item.key() + "' is not an integer");
                    }
                    curve.nodes_with[partner] = to_int(item.value(), where + ".nodes_with['" + item.key() + "']");
                }
            }
            branch.curves.push_back(std::move(curve));
        }
    }
    return branch;
}

json to_json(const rootcover::SurfaceInvariants& inv) {
    json doc;
    doc["c1sq"] = enc(inv.c1sq);
    doc["c2"] = enc(inv.c2);
    doc["chi"] = enc(inv.chi);
    doc["signature"] = enc(inv.signature);
    doc["slope"] = enc(inv.slope);
    doc["spin"] = inv.spin;
    doc["pi1"] = inv.pi1;
    return doc;
}

rootcover::SurfaceInvariants invariants_from_json(const json& doc) {
    check_keys(doc, "invariants", {"c1sq", "c2", "chi", "signature", "slope", "spin", "pi1"});
    rootcover::SurfaceInvariants inv;
    inv.c1sq = to_int(member(doc, "invariants", "c1sq"), "c1sq");
    inv.c2 = to_int(member(doc, "invariants", "c2"), "c2");
    inv.chi = to_int(member(doc, "invariants", "chi"), "chi");
    inv.signature = to_int(member(doc, "invariants", "signature"), "signature");
    inv.slope = to_rat(member(doc, "invariants", "slope"), "slope");
    inv.spin = to_bool(member(doc, "invariants", "spin"), "spin");
    inv.pi1 = to_label(member(doc, "invariants", "pi1"), "pi1");
    return inv;
}

json to_json(const rootcover::ConditionReport& report) {
    json checks = json::array();
    for (const auto& check : report.checks) {
        json row;
        row["name"] = check.name;
        row["pass"] = check.pass;
        checks.push_back(row);
    }
    json doc;
    doc["checks"] = checks;
    doc["all_pass"] = report.all_pass;
    return doc;
}

json checks_to_json(const std::vector<hesse::IdentityCheck>& checks, bool all_pass) {
    json rows = json::array();
    for (const auto& check : checks) {
        json row;
        row["name"] = check.name;
        row["pass"] = check.pass;
        rows.push_back(row);
    }
    json doc;
    doc["checks"] = rows;
    doc["all_pass"] = all_pass;
    return doc;
}

json to_json(const families::FamilyParams& params) {
    json doc;
    doc["variant"] = families::variant_name(params.variant);
    doc["alpha"] = enc(params.alpha);
    doc["beta"] = enc(params.beta);
    doc["d"] = enc(params.d);
    doc["p"] = enc(params.p);
    return doc;
}

json to_json(const families::FamilyReport& report) {
    json doc;
    doc["params"] = to_json(report.params);
    doc["n"] = enc(report.n);
    doc["degree"] = enc(report.degree);
    doc["t2"] = enc(report.t2);
    doc["t2_equal"] = enc(report.t2_equal);
    doc["t2_mixed"] = enc(report.t2_mixed);
    doc["log_c1sq"] = enc(report.log_c1sq);
    doc["log_c2"] = enc(report.log_c2);
    json curves = json::array();
    for (const auto& row : report.curves) {
        json r;
        r["label"] = row.label;
        r["count"] = enc(row.count);
        r["genus"] = enc(row.genus);
        r["self_intersection"] = enc(row.self_intersection);
        r["multiplicity"] = enc(row.multiplicity);
        r["reduced"] = enc(row.reduced);
        r["line_degree"] = enc(row.line_degree);
        r["strict_self_intersection"] = enc(row.strict_self_intersection);
        curves.push_back(r);
    }
    doc["curves"] = curves;
    json census = json::array();
    for (const auto& row : report.census) {
        json r;
        r["nu_lo"] = enc(row.nu_lo);
        r["nu_hi"] = enc(row.nu_hi);
        r["count"] = enc(row.count);
        r["q"] = enc(row.q);
        r["chain_length"] = enc(row.chain_length);
        census.push_back(r);
    }
    doc["census"] = census;
    doc["branch"] = to_json(report.branch);
    doc["invariants"] = to_json(report.invariants);
    doc["limit_slope"] = enc(report.limit);
    doc["slope_gap"] = enc(report.slope_gap);
    json checks = checks_to_json(report.checks, report.all_checks_pass);
    doc["checks"] = checks["checks"];
    doc["all_checks_pass"] = report.all_checks_pass;
    return doc;
}

json to_json(const families::SlopeInversion& inversion) {
    json doc;
    doc["alpha"] = enc(inversion.alpha);
    doc["beta"] = enc(inversion.beta);
    doc["limit_slope"] = enc(inversion.lambda_value);
    return doc;
}

json to_json(const families::TargetResult& result) {
    json doc;
    doc["target"] = enc(result.target);
    doc["gap"] = enc(result.gap);
    doc["report"] = to_json(result.report);
    return doc;
}

json to_json(const families::BaseChangeResult& result) {
    json doc;
    doc["base_genus"] = enc(result.base_genus);
    doc["line_branch_degree"] = enc(result.line_branch_degree);
    doc["line_preimage_genus"] = enc(result.line_preimage_genus);
    doc["invariants"] = to_json(result.invariants);
    return doc;
}

}  // namespace geolab::jsonio
