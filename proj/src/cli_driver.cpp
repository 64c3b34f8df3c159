#include "confhom/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "confhom/homology.hpp"
#include "confhom/manifold.hpp"
#include "confhom/stability.hpp"

namespace confhom {

namespace {

using nlohmann::ordered_json;

ManifoldData resolve_manifold(const std::string& source) {
    const auto names = catalog_names();
    if (std::find(names.begin(), names.end(), source) != names.end()) {
        return builtin_catalog(source);
    }
    std::ifstream in(source);
    if (!in) throw manifold_error("cannot read manifold file '" + source + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return load_manifold(text.str());
}

BettiTable compute_table(const ManifoldData& m, int k_max, int i_max, long long cap, int jobs) {
    if (m.dim % 2 != 0) return odd_betti_table(m, k_max, i_max);
    return betti_table(m, k_max, i_max, cap, jobs);
}

struct Options {
    std::string manifold;
    int k_max = 4;
    int i_max = -1;  // -1: pick a per-command default once the manifold is known
    std::string format = "csv";
    std::string theorem;
    long long cap = kDefaultCap;
    int jobs = 0;
    bool assume_even = false;
};

int default_verify_imax(const std::string& theorem, int k_max, int dim) {
    if (theorem == "improved") return std::max(0, 2 * (k_max - 1) + std::max(dim - 5, 0));
    if (theorem == "optimal") return 2 * k_max;
    if (theorem == "constancy") return std::max(0, k_max - 1);
    return k_max;  // rw
}

int cmd_compute(const Options& opt, std::ostream& out) {
    const ManifoldData m = resolve_manifold(opt.manifold);
    const int i_max = opt.i_max >= 0 ? opt.i_max : 2 * opt.k_max;
    const BettiTable table = compute_table(m, opt.k_max, i_max, opt.cap, opt.jobs);
    if (opt.format == "json") {
        ordered_json rows = ordered_json::array();
        for (int k = 0; k <= table.max_k; ++k) {
            for (int i = 0; i <= table.max_degree; ++i) {
                rows.push_back({{"manifold", table.manifold},
                                {"k", k},
                                {"i", i},
                                {"betti", table.at(k, i)}});
            }
        }
        out << rows.dump(2) << "\n";
    } else {
        out << "manifold,k,i,betti\n";
        for (int k = 0; k <= table.max_k; ++k) {
            for (int i = 0; i <= table.max_degree; ++i) {
                out << table.manifold << "," << k << "," << i << "," << table.at(k, i) << "\n";
            }
        }
    }
    return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const ManifoldData m = resolve_manifold(opt.manifold);
    const int i_max =
        opt.i_max >= 0 ? opt.i_max : default_verify_imax(opt.theorem, opt.k_max, m.dim);
    const BettiTable table = compute_table(m, opt.k_max, i_max, opt.cap, opt.jobs);
    RangeReport report;
    if (opt.theorem == "rw") {
        report = verify_rw_range(table);
    } else if (opt.theorem == "improved") {
        report = verify_improved_ranges(table, m, opt.assume_even);
    } else if (opt.theorem == "optimal") {
        report = verify_optimality(table, m, opt.assume_even);
    } else {
        report = verify_constancy_window(table, i_max);
    }
    ordered_json doc;
    doc["theorem"] = report.theorem;
    doc["manifold"] = report.manifold;
    doc["window"] = {{"kmax", report.k_max}, {"imax", report.i_max}};
    doc["passed"] = report.passed();
    doc["violations"] = ordered_json::array();
    for (const auto& v : report.violations) {
        doc["violations"].push_back(
            {{"k", v.k}, {"i", v.i}, {"left", v.left}, {"right", v.right}});
    }
    out << doc.dump(2) << "\n";
    return report.passed() ? 0 : 1;
}

int cmd_catalog(const Options& opt, std::ostream& out) {
    if (opt.format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& name : catalog_names()) {
            const ManifoldData m = builtin_catalog(name);
            ordered_json hc = ordered_json::object();
            for (const auto& [p, r] : m.hc_untwisted) hc[std::to_string(p)] = r;
            rows.push_back({{"name", m.name},
                            {"dim", m.dim},
                            {"open", m.open},
                            {"orientable", m.orientable},
                            {"hc", hc}});
        }
        out << rows.dump(2) << "\n";
        return 0;
    }
    out << "name,dim,open,orientable,hc\n";
    for (const auto& name : catalog_names()) {
        const ManifoldData m = builtin_catalog(name);
        out << m.name << "," << m.dim << "," << (m.open ? "true" : "false") << ","
            << (m.orientable ? "true" : "false") << ",";
        bool first = true;
        for (const auto& [p, r] : m.hc_untwisted) {
            if (!first) out << " ";
            out << p << ":" << r;
            first = false;
        }
        out << "\n";
    }
    return 0;
}

int cmd_d2check(const Options& opt, std::ostream& out) {
    const ManifoldData m = resolve_manifold(opt.manifold);
    const int i_max = opt.i_max >= 0 ? opt.i_max : 24;
    const GeneratorSet gens = build_generators(m);
    for (int k = 0; k <= opt.k_max; ++k) {
        const auto witness = d2_check(gens, m, k, i_max, opt.cap);
        if (witness) {
            out << "d2check violation: manifold=" << m.name << " k=" << k
                << " monomial=" << gens.name(*witness) << "\n";
            return 1;
        }
    }
    out << "d2check ok: manifold=" << m.name << " kmax=" << opt.k_max << " imax=" << i_max
        << "\n";
    return 0;
}

void add_common_flags(CLI::App* cmd, Options& opt, bool with_format, bool with_jobs) {
    cmd->add_option("--manifold", opt.manifold, "Catalog name or manifold JSON file")
        ->required();
    cmd->add_option("--kmax", opt.k_max, "Largest particle count k")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--imax", opt.i_max, "Largest homological degree i")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--cap", opt.cap, "Basis-size cap per slice")->check(CLI::PositiveNumber);
    if (with_format) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
    }
    if (with_jobs) {
        cmd->add_option("--jobs", opt.jobs, "Worker thread count (0 = hardware default)")
            ->check(CLI::NonNegativeNumber);
    }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact rational homology of unordered configuration spaces"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* compute = app.add_subcommand("compute", "Compute a Betti table");
    add_common_flags(compute, opt, true, true);
    CLI::App* verify = app.add_subcommand("verify", "Verify a stability theorem on a window");
    add_common_flags(verify, opt, false, true);
    verify->add_option("--theorem", opt.theorem, "Which statement to check")
        ->required()
        ->check(CLI::IsMember({"rw", "improved", "optimal", "constancy"}));
    verify->add_flag("--assume-even-cohomology", opt.assume_even,
                     "Assert even cohomology for non-orientable input");
    CLI::App* catalog = app.add_subcommand("catalog", "List built-in manifolds");
    catalog->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    CLI::App* d2check =
        app.add_subcommand("d2check", "Check that the differential squares to zero");
    add_common_flags(d2check, opt, false, false);

    try {
        // CLI11's vector overload consumes arguments back to front.
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out);
        if (catalog->parsed()) return cmd_catalog(opt, out);
        return cmd_d2check(opt, out);
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const manifold_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const hypothesis_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const window_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace confhom
