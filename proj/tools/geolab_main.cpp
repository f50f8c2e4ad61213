// Command-line front end for the geolab library.  All computation goes
// through the public C interface; this file only parses arguments, moves
// bytes between files and stdio, and maps status codes to exit codes
// (0 success, 2 input error, 3 failed internal identity, 4 I/O trouble).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <geolab/geolab.h>

namespace {

struct Output {
    bool json = false;
    int decimal = -1;  // < 0: exact rationals; >= 0: digits for decimal rendering
};

int report_error(int code) {
    std::fprintf(stderr, "error: %s\n", geolab_last_error());
    return code;
}

void print_body(const std::string& body) {
    std::fputs(body.c_str(), stdout);
    if (body.empty() || body.back() != '\n') std::fputc('\n', stdout);
}

// Render one exact value through the library's correctly-rounded conversion.
int decimalize(const std::string& value, int digits, std::string& out) {
    geolab_result* res = nullptr;
    int rc = geolab_decimal(value.c_str(), static_cast<unsigned>(digits), &res);
    if (rc != GEOLAB_OK) return rc;
    out = geolab_result_text(res);
    geolab_result_free(res);
    return GEOLAB_OK;
}

// Default emission: JSON document or text block; in text mode a result that
// carries a "slope" field gains a slope_decimal line when --decimal is set.
int emit(geolab_result* res, const Output& opt) {
    if (opt.json) {
        print_body(geolab_result_json(res));
        return 0;
    }
    std::string body = geolab_result_text(res);
    if (opt.decimal >= 0) {
        const char* slope = geolab_result_field(res, "slope");
        if (slope) {
            std::string dec;
            int rc = decimalize(slope, opt.decimal, dec);
            if (rc != GEOLAB_OK) return report_error(rc);
            body += "\nslope_decimal = " + dec;
        }
    }
    print_body(body);
    return 0;
}

int finish(geolab_result* res, const Output& opt) {
    int code = emit(res, opt);
    geolab_result_free(res);
    return code;
}

int read_file(const std::string& path, std::string& content) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::fprintf(stderr, "error: cannot read '%s'\n", path.c_str());
        return GEOLAB_ERR_IO;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        std::fprintf(stderr, "error: failed while reading '%s'\n", path.c_str());
        return GEOLAB_ERR_IO;
    }
    content = buffer.str();
    return 0;
}

int write_file(const std::string& path, const char* content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::fprintf(stderr, "error: cannot write '%s'\n", path.c_str());
        return GEOLAB_ERR_IO;
    }
    out << content;
    out.flush();
    if (!out) {
        std::fprintf(stderr, "error: failed while writing '%s'\n", path.c_str());
        return GEOLAB_ERR_IO;
    }
    return 0;
}

int run_dedekind(const std::string& q, const std::string& m, const Output& opt) {
    geolab_result* res = nullptr;
    int rc = geolab_dedekind(q.c_str(), m.c_str(), &res);
    if (rc != GEOLAB_OK) return report_error(rc);
    if (!opt.json && opt.decimal >= 0) {
        std::string dec;
        rc = decimalize(geolab_result_text(res), opt.decimal, dec);
        geolab_result_free(res);
        if (rc != GEOLAB_OK) return report_error(rc);
        print_body(dec);
        return 0;
    }
    return finish(res, opt);
}

int run_hj(const std::string& m, const std::string& q, const Output& opt) {
    geolab_result* res = nullptr;
    int rc = geolab_hj(m.c_str(), q.c_str(), &res);
    if (rc != GEOLAB_OK) return report_error(rc);
    return finish(res, opt);
}

int run_resolve(const std::string& m, const std::string& q, const Output& opt) {
    geolab_result* res = nullptr;
    int rc = geolab_resolve(m.c_str(), q.c_str(), &res);
    if (rc != GEOLAB_OK) return report_error(rc);
    if (!opt.json && opt.decimal >= 0) {
        std::istringstream values(geolab_result_text(res));
        geolab_result_free(res);
        std::string value, line;
        while (values >> value) {
            std::string dec;
            rc = decimalize(value, opt.decimal, dec);
            if (rc != GEOLAB_OK) return report_error(rc);
            if (!line.empty()) line += ' ';
            line += dec;
        }
        print_body(line);
        return 0;
    }
    return finish(res, opt);
}

int run_logchern(const std::string& path, const Output& opt) {
    std::string content;
    int rc = read_file(path, content);
    if (rc != 0) return rc;
    geolab_result* res = nullptr;
    rc = geolab_log_chern(content.c_str(), &res);
    if (rc != GEOLAB_OK) return report_error(rc);
    return finish(res, opt);
}

int run_lattice_check(const std::vector<std::string>& args, const Output& opt) {
    geolab_result* res = nullptr;
    int rc = geolab_lattice_check(args[0].c_str(), args[1].c_str(), args[2].c_str(), args[3].c_str(),
                                  args[4].c_str(), &res);
    if (rc != GEOLAB_OK) return report_error(rc);
    return finish(res, opt);
}

int run_cover(const std::string& path, bool spin, const std::string& pi1, const Output& opt) {
    std::string content;
    int rc = read_file(path, content);
    if (rc != 0) return rc;
    geolab_result* res = nullptr;
    rc = geolab_cover(content.c_str(), spin ? 1 : 0, pi1.c_str(), &res);
    if (rc != GEOLAB_OK) return report_error(rc);
    return finish(res, opt);
}

int run_family(const std::vector<std::string>& args, const Output& opt) {
    geolab_result* res = nullptr;
    int rc = geolab_family(args[0].c_str(), args[1].c_str(), args[2].c_str(), args[3].c_str(), args[4].c_str(), &res);
    if (rc != GEOLAB_OK) return report_error(rc);
    return finish(res, opt);
}

int run_target(const std::string& variant, const std::string& r, const std::string& eps, const std::string& d,
               bool has_d, const std::string& ceiling, bool has_ceiling, const std::string& denom_bound,
               bool has_denom_bound, const Output& opt) {
    const char* env_ceiling = std::getenv("GEOLAB_PRIME_CEILING");
    std::string ceiling_value = has_ceiling ? ceiling : (env_ceiling ? env_ceiling : "");
    geolab_result* res = nullptr;
    int rc = geolab_target(variant.c_str(), r.c_str(), eps.c_str(), has_d ? d.c_str() : nullptr,
                           ceiling_value.empty() ? nullptr : ceiling_value.c_str(),
                           has_denom_bound ? denom_bound.c_str() : nullptr, &res);
    if (rc != GEOLAB_OK) return report_error(rc);
    return finish(res, opt);
}

int run_base_change(const std::vector<std::string>& args, const std::string& q, const Output& opt) {
    geolab_result* res = nullptr;
    int rc = geolab_base_change(args[0].c_str(), args[1].c_str(), args[2].c_str(), args[3].c_str(), args[4].c_str(),
                                q.c_str(), &res);
    if (rc != GEOLAB_OK) return report_error(rc);
    return finish(res, opt);
}

std::string join_grids(const std::vector<std::string>& grids) {
    std::string joined;
    for (const auto& grid : grids) {
        if (!joined.empty()) joined += ';';
        joined += grid;
    }
    return joined;
}

int run_sweep(const std::vector<std::string>& grids, const std::string& out_path, const Output& opt) {
    geolab_result* res = nullptr;
    int rc = geolab_sweep(join_grids(grids).c_str(), &res);
    if (rc != GEOLAB_OK) return report_error(rc);
    if (!out_path.empty()) {
        rc = write_file(out_path, opt.json ? geolab_result_json(res) : geolab_result_text(res));
        geolab_result_free(res);
        if (rc != 0) return rc;
        std::printf("wrote %s\n", out_path.c_str());
        return 0;
    }
    return finish(res, opt);
}

int run_geography(const std::vector<std::string>& grids, const std::string& csv_path, const std::string& svg_path,
                  bool loglog, const Output& opt) {
    geolab_result* res = nullptr;
    int rc = geolab_geography(join_grids(grids).c_str(), loglog ? 1 : 0, &res);
    if (rc != GEOLAB_OK) return report_error(rc);
    if (csv_path.empty() && svg_path.empty()) return finish(res, opt);
    if (!csv_path.empty()) {
        rc = write_file(csv_path, geolab_result_field(res, "csv"));
        if (rc != 0) {
            geolab_result_free(res);
            return rc;
        }
        std::printf("wrote %s\n", csv_path.c_str());
    }
    if (!svg_path.empty()) {
        rc = write_file(svg_path, geolab_result_field(res, "svg"));
        if (rc != 0) {
            geolab_result_free(res);
            return rc;
        }
        std::printf("wrote %s\n", svg_path.c_str());
    }
    geolab_result_free(res);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chern invariants, slopes and consistency identities of cyclic-cover surface families"};
    app.require_subcommand(1);
    app.set_version_flag("--version", geolab_version());

    int exit_code = 0;
    Output opt;

    // dedekind
    auto* cmd_dedekind = app.add_subcommand("dedekind", "Dedekind sum s(q, m)");
    std::string ded_q, ded_m;
    cmd_dedekind->add_option("q", ded_q)->required();
    cmd_dedekind->add_option("m", ded_m)->required();
    cmd_dedekind->add_flag("--json", opt.json, "emit JSON");
    cmd_dedekind->add_option("--decimal", opt.decimal, "decimal digits instead of an exact fraction");
    cmd_dedekind->callback([&] { exit_code = run_dedekind(ded_q, ded_m, opt); });

    // hj
    auto* cmd_hj = app.add_subcommand("hj", "Hirzebruch-Jung continued fraction of m/q");
    std::string hj_m, hj_q;
    cmd_hj->add_option("m", hj_m)->required();
    cmd_hj->add_option("q", hj_q)->required();
    cmd_hj->add_flag("--json", opt.json, "emit JSON");
    cmd_hj->callback([&] { exit_code = run_hj(hj_m, hj_q, opt); });

    // resolve
    auto* cmd_resolve = app.add_subcommand("resolve", "resolution data of the cyclic quotient singularity (1/m)(1,q)");
    std::string res_m, res_q;
    cmd_resolve->add_option("m", res_m)->required();
    cmd_resolve->add_option("q", res_q)->required();
    cmd_resolve->add_flag("--json", opt.json, "emit JSON");
    cmd_resolve->add_option("--decimal", opt.decimal, "decimal digits instead of exact fractions");
    cmd_resolve->callback([&] { exit_code = run_resolve(res_m, res_q, opt); });

    // logchern
    auto* cmd_logchern = app.add_subcommand("logchern", "log Chern numbers of a curve arrangement (JSON file)");
    std::string logchern_path;
    cmd_logchern->add_option("file", logchern_path, "arrangement summary JSON")->required();
    cmd_logchern->add_flag("--json", opt.json, "emit JSON");
    cmd_logchern->callback([&] { exit_code = run_logchern(logchern_path, opt); });

    // lattice-check
    auto* cmd_lattice = app.add_subcommand("lattice-check", "intersection-lattice identity suite for one tuple");
    std::vector<std::string> lattice_args(5);
    cmd_lattice->add_option("variant", lattice_args[0], "spin | nonspin")->required();
    cmd_lattice->add_option("alpha", lattice_args[1])->required();
    cmd_lattice->add_option("beta", lattice_args[2])->required();
    cmd_lattice->add_option("d", lattice_args[3])->required();
    cmd_lattice->add_option("p", lattice_args[4])->required();
    cmd_lattice->add_flag("--json", opt.json, "emit JSON");
    cmd_lattice->callback([&] { exit_code = run_lattice_check(lattice_args, opt); });

    // cover
    auto* cmd_cover = app.add_subcommand("cover", "Chern invariants of a cyclic root cover (branch summary JSON file)");
    std::string cover_path, cover_pi1 = "trivial";
    bool cover_spin = false;
    cmd_cover->add_option("file", cover_path, "branch summary JSON")->required();
    cmd_cover->add_flag("--spin", cover_spin, "declare the cover spin");
    cmd_cover->add_option("--pi1", cover_pi1, "fundamental group descriptor (default: trivial)");
    cmd_cover->add_flag("--json", opt.json, "emit JSON");
    cmd_cover->add_option("--decimal", opt.decimal, "append the slope to this many decimal digits");
    cmd_cover->callback([&] { exit_code = run_cover(cover_path, cover_spin, cover_pi1, opt); });

    // family
    auto* cmd_family = app.add_subcommand("family", "full pipeline for one parameter tuple");
    std::vector<std::string> family_args(5);
    cmd_family->add_option("variant", family_args[0], "spin | nonspin")->required();
    cmd_family->add_option("alpha", family_args[1])->required();
    cmd_family->add_option("beta", family_args[2])->required();
    cmd_family->add_option("d", family_args[3])->required();
    cmd_family->add_option("p", family_args[4])->required();
    cmd_family->add_flag("--json", opt.json, "emit the full report as JSON");
    cmd_family->add_option("--decimal", opt.decimal, "append the slope to this many decimal digits");
    cmd_family->callback([&] { exit_code = run_family(family_args, opt); });

    // target
    auto* cmd_target = app.add_subcommand("target", "search for parameters whose verified slope is within eps of r");
    std::string target_variant, target_r, target_eps, target_d, target_ceiling, target_denom;
    cmd_target->add_option("variant", target_variant, "spin | nonspin")->required();
    cmd_target->add_option("r", target_r, "target slope (rational or decimal)")->required();
    cmd_target->add_option("eps", target_eps, "tolerance")->required();
    auto* opt_d = cmd_target->add_option("--d", target_d, "fix d (default: 1 spin, 2 non-spin)");
    auto* opt_ceiling =
        cmd_target->add_option("--prime-ceiling", target_ceiling, "abort past this prime (default 1e7; env GEOLAB_PRIME_CEILING)");
    auto* opt_denom = cmd_target->add_option("--denom-bound", target_denom, "denominator bound for the limit ratio");
    cmd_target->add_flag("--json", opt.json, "emit JSON");
    cmd_target->add_option("--decimal", opt.decimal, "append the slope to this many decimal digits");
    cmd_target->callback([&] {
        exit_code = run_target(target_variant, target_r, target_eps, target_d, opt_d->count() > 0, target_ceiling,
                               opt_ceiling->count() > 0, target_denom, opt_denom->count() > 0, opt);
    });

    // base-change
    auto* cmd_base = app.add_subcommand("base-change", "pull a non-spin family back over a genus-q base curve");
    std::vector<std::string> base_args(5);
    std::string base_q;
    cmd_base->add_option("variant", base_args[0], "must be nonspin")->required();
    cmd_base->add_option("alpha", base_args[1])->required();
    cmd_base->add_option("beta", base_args[2])->required();
    cmd_base->add_option("d", base_args[3])->required();
    cmd_base->add_option("p", base_args[4])->required();
    cmd_base->add_option("q", base_q, "base genus, q >= 1")->required();
    cmd_base->add_flag("--json", opt.json, "emit JSON");
    cmd_base->add_option("--decimal", opt.decimal, "append the slope to this many decimal digits");
    cmd_base->callback([&] { exit_code = run_base_change(base_args, base_q, opt); });

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "compute a parameter grid; CSV text or detailed JSON");
    std::vector<std::string> sweep_grids;
    std::string sweep_out;
    cmd_sweep->add_option("--grid", sweep_grids, "variant:alphas:betas:ds:ps (repeatable, comma lists)");
    cmd_sweep->add_option("--out", sweep_out, "write the output to a file instead of stdout");
    cmd_sweep->add_flag("--json", opt.json, "emit the detailed row array");
    cmd_sweep->callback([&] { exit_code = run_sweep(sweep_grids, sweep_out, opt); });

    // geography
    auto* cmd_geo = app.add_subcommand("geography", "Chern-plane chart of a parameter grid (CSV + SVG)");
    std::vector<std::string> geo_grids;
    std::string geo_csv, geo_svg;
    bool geo_loglog = false;
    cmd_geo->add_option("--grid", geo_grids, "variant:alphas:betas:ds:ps (repeatable, comma lists)");
    cmd_geo->add_option("--csv", geo_csv, "write the point table here");
    cmd_geo->add_option("--svg", geo_svg, "write the chart here");
    cmd_geo->add_option("--out", geo_svg, "alias for --svg");
    cmd_geo->add_flag("--loglog", geo_loglog, "log-log axes");
    cmd_geo->add_flag("--json", opt.json, "with no output files, print JSON rows");
    cmd_geo->callback([&] { exit_code = run_geography(geo_grids, geo_csv, geo_svg, geo_loglog, opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help / --version
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return GEOLAB_ERR_DOMAIN;
    }
    return exit_code;
}
