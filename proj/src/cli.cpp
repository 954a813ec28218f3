#include "ellsw/cli.hpp"

#include "ellsw/bps.hpp"
#include "ellsw/claims.hpp"
#include "ellsw/errors.hpp"
#include "ellsw/invariants.hpp"
#include "ellsw/surface_doc.hpp"
#include "ellsw/sw.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ellsw {

namespace {

using nlohmann::json;

std::vector<bigint> parse_beta(const std::string& text) {
    std::vector<bigint> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            out.emplace_back(bigint(item));
        } catch (const std::exception&) {
            throw schema_error("--beta: \"" + item + "\" is not an integer");
        }
    }
    if (out.empty())
        throw schema_error("--beta: expected a comma-separated integer vector");
    return out;
}

json beta_json(const std::vector<bigint>& beta) {
    json a = json::array();
    for (const bigint& b : beta)
        a.push_back(b.str());
    return a;
}

void emit_json(std::ostream& out, const json& j) {
    out << j.dump(2) << "\n";
}

struct command_options {
    std::string file;
    std::string beta_text;
    bool json_output = false;
    long long order = 24;
};

int cmd_surface_show(const command_options& opt, std::ostream& out) {
    const surface_model s = load_surface_file(opt.file);
    if (opt.json_output)
        emit_json(out, surface_summary_json(s));
    else
        out << surface_summary_text(s);
    return 0;
}

int cmd_sw(const command_options& opt, std::ostream& out) {
    const surface_model s = load_surface_file(opt.file);
    const std::vector<bigint> beta = parse_beta(opt.beta_text);
    const sw_result r = sw_elliptic(s, s.class_element(beta));
    if (opt.json_output) {
        json j;
        j["command"] = "sw";
        j["surface"] = s.name();
        j["beta"] = beta_json(beta);
        j["value"] = r.value.str();
        json sols = json::array();
        for (const fiber_solution& sol : r.solutions) {
            json residues = json::array();
            for (const bigint& a : sol.residues)
                residues.push_back(a.str());
            sols.push_back({{"d", sol.d.str()}, {"residues", residues}});
        }
        j["solutions"] = sols;
        emit_json(out, j);
    } else {
        out << r.value.str() << "\n";
    }
    return 0;
}

int cmd_pt_series(const command_options& opt, std::ostream& out) {
    const surface_model s = load_surface_file(opt.file);
    const std::vector<bigint> beta = parse_beta(opt.beta_text);
    const q_laurent p = pt_series(s, s.class_element(beta));
    if (opt.json_output) {
        json j;
        j["command"] = "pt-series";
        j["surface"] = s.name();
        j["beta"] = beta_json(beta);
        j["series"] = p.to_string();
        j["t_power"] = p.t_power();
        emit_json(out, j);
    } else {
        out << p.to_string() << "\n";
    }
    return 0;
}

int cmd_bps(const command_options& opt, std::ostream& out) {
    const surface_model s = load_surface_file(opt.file);
    const std::vector<bigint> beta = parse_beta(opt.beta_text);
    const bps_spectrum spec = bps_extract(pt_series(s, s.class_element(beta)));
    if (opt.json_output) {
        json j;
        j["command"] = "bps";
        j["surface"] = s.name();
        j["beta"] = beta_json(beta);
        j["t_power"] = spec.t_power;
        json entries = json::object();
        for (const auto& [g, n] : spec.entries)
            entries[std::to_string(g)] = n.str();
        j["entries"] = entries;
        emit_json(out, j);
    } else {
        out << spec.to_string() << "\n";
    }
    return 0;
}

int cmd_duality(const command_options& opt, std::ostream& out) {
    const surface_model s = load_surface_file(opt.file);
    const std::vector<bigint> beta = parse_beta(opt.beta_text);
    const duality_report rep = duality_check(s, s.class_element(beta));
    if (opt.json_output) {
        json j;
        j["command"] = "duality-check";
        j["surface"] = s.name();
        j["beta"] = beta_json(beta);
        j["branch"] = to_string(rep.branch);
        j["holds"] = rep.holds;
        if (rep.branch == duality_branch::hypothesis_failure) {
            j["reason"] = rep.reason;
        } else {
            j["lhs"] = rep.lhs.to_string();
            j["rhs"] = rep.rhs.to_string();
        }
        if (rep.branch == duality_branch::main_case) {
            j["sw_beta"] = rep.sw_beta.str();
            j["sw_dual"] = rep.sw_dual.str();
            j["half_degree"] = rep.half_degree.str();
            j["exponents"] = {{"lhs", rep.exp_lhs},
                              {"dual", rep.exp_dual},
                              {"twist", rep.exp_twist},
                              {"point", rep.exp_point}};
        }
        emit_json(out, j);
    } else {
        out << "branch: " << to_string(rep.branch) << "\n";
        if (rep.branch == duality_branch::hypothesis_failure) {
            out << "reason: " << rep.reason << "\n";
        } else {
            if (rep.branch == duality_branch::main_case)
                out << "SW(beta) = " << rep.sw_beta.str() << ", SW(k-beta) = "
                    << rep.sw_dual.str() << ", [2*beta-k]/2 = " << rep.half_degree.str() << "\n";
            out << "lhs = " << rep.lhs.to_string() << "\n";
            out << "rhs = " << rep.rhs.to_string() << "\n";
        }
        out << "holds: " << (rep.holds ? "yes" : "no") << "\n";
    }
    return rep.holds ? 0 : 1;
}

int cmd_gwpt(const command_options& opt, std::ostream& out) {
    const surface_model s = load_surface_file(opt.file);
    const std::vector<bigint> beta = parse_beta(opt.beta_text);
    const group_element b = s.class_element(beta);
    const u_series lhs = u_transform(pt_series(s, b), opt.order);
    const u_series rhs = gw_series(s, b, opt.order);
    const bool ok = gwpt_check(s, b, opt.order);
    if (opt.json_output) {
        json j;
        j["command"] = "gwpt-check";
        j["surface"] = s.name();
        j["beta"] = beta_json(beta);
        j["order"] = opt.order;
        j["pt_transformed"] = lhs.to_string();
        j["gw"] = rhs.to_string();
        j["equal"] = ok;
        emit_json(out, j);
    } else {
        out << "pt (u-transformed): " << lhs.to_string() << "\n";
        out << "gw:                 " << rhs.to_string() << "\n";
        out << "equal: " << (ok ? "yes" : "no") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_euler_hilb(long long h, long long n_max, bool json_output, std::ostream& out) {
    if (n_max < 0)
        throw schema_error("--n-max: must be nonnegative");
    std::vector<bigint> values;
    for (long long n = 0; n <= n_max; ++n)
        values.push_back(euler_hilb(h, n));
    if (json_output) {
        json j;
        j["command"] = "euler-hilb";
        j["h"] = h;
        json vals = json::array();
        for (const bigint& v : values)
            vals.push_back(v.str());
        j["values"] = vals;
        emit_json(out, j);
    } else {
        for (std::size_t i = 0; i < values.size(); ++i)
            out << (i ? ", " : "") << values[i].str();
        out << "\n";
    }
    return 0;
}

int cmd_reproduce(const std::string& filter, bool json_output, std::ostream& out,
                  std::ostream& err) {
    const run_report report = run_claims("reproduce", reproduce_claims(), filter);
    if (report.rows.empty()) {
        err << "no claims match filter \"" << filter << "\"\n";
        return 2;
    }
    if (json_output)
        emit_json(out, report_json(report));
    else
        out << report_text(report);
    return report.all_pass ? 0 : 1;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Seiberg-Witten and stable-pair invariants of elliptic surfaces"};
    app.require_subcommand(1);

    command_options opt;
    std::string filter;
    long long euler_h = 0;
    long long euler_n_max = 0;

    auto add_common = [&](CLI::App* cmd, bool with_beta) {
        cmd->add_flag("--json", opt.json_output, "emit one JSON document on stdout");
        cmd->add_option("--order", opt.order, "series truncation order")->capture_default_str();
        if (with_beta) {
            cmd->add_option("file", opt.file, "surface document")->required();
            cmd->add_option("--beta", opt.beta_text,
                            "integer coefficients over the document's generators, e.g. 0,1,1,0,0")
                ->required();
        }
    };

    CLI::App* surface = app.add_subcommand("surface", "inspect a surface document");
    CLI::App* show = surface->add_subcommand("show", "print the surface summary");
    add_common(show, false);
    show->add_option("file", opt.file, "surface document")->required();
    surface->require_subcommand(1);

    CLI::App* sw = app.add_subcommand("sw", "Seiberg-Witten invariant of a class");
    add_common(sw, true);

    CLI::App* pt = app.add_subcommand("pt-series", "stable-pair series with maximal point insertions");
    add_common(pt, true);

    CLI::App* bps = app.add_subcommand("bps", "BPS spectrum of the stable-pair series");
    add_common(bps, true);

    CLI::App* duality = app.add_subcommand("duality-check", "check the beta <-> k-beta duality identity");
    add_common(duality, true);

    CLI::App* gwpt = app.add_subcommand("gwpt-check", "compare the GW and stable-pair series");
    add_common(gwpt, true);

    CLI::App* euler = app.add_subcommand("euler-hilb", "Euler numbers of C^[n], genus h");
    euler->add_flag("--json", opt.json_output, "emit one JSON document on stdout");
    euler->add_option("--h", euler_h, "curve genus")->required();
    euler->add_option("--n-max", euler_n_max, "largest point count")->required();

    CLI::App* reproduce = app.add_subcommand("reproduce", "re-derive the built-in worked examples");
    reproduce->add_flag("--json", opt.json_output, "emit one JSON document on stdout");
    reproduce->add_option("--filter", filter, "only run claims whose id contains this string");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (show->parsed())
            return cmd_surface_show(opt, out);
        if (sw->parsed())
            return cmd_sw(opt, out);
        if (pt->parsed())
            return cmd_pt_series(opt, out);
        if (bps->parsed())
            return cmd_bps(opt, out);
        if (duality->parsed())
            return cmd_duality(opt, out);
        if (gwpt->parsed())
            return cmd_gwpt(opt, out);
        if (euler->parsed())
            return cmd_euler_hilb(euler_h, euler_n_max, opt.json_output, out);
        if (reproduce->parsed())
            return cmd_reproduce(filter, opt.json_output, out, err);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

} // namespace ellsw
