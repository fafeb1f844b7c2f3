#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dwigner/algorithm.hpp"
#include "dwigner/error.hpp"
#include "dwigner/fidelity.hpp"
#include "dwigner/generators.hpp"
#include "dwigner/io.hpp"
#include "dwigner/states.hpp"
#include "dwigner/two_qubit.hpp"

namespace dwig::cli {

namespace {

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw usage_error("cannot write '" + path + "'");
    f << text;
}

std::string join(const std::vector<double>& xs, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += format_double(xs[i]);
    }
    return s;
}

cmatrix load_matrix(const std::string& path) {
    try {
        return parse_matrix(read_file(path));
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

// Full validation, with the spectrum attached to the report on failure.
density_matrix load_density(const std::string& path) {
    cmatrix m = load_matrix(path);
    density_check c = check_density(m, default_tolerance());
    if (!c.ok()) {
        auto issues = c.issues;
        issues.push_back("eigenvalues: " + join(c.eigenvalues, " "));
        throw validation_error(path + ": not a density matrix", issues);
    }
    return validate_density(m);
}

void require_dim(const cmatrix& m, int n, const std::string& rep) {
    if (m.dim() != static_cast<std::size_t>(n))
        throw dimension_error("representation '" + rep + "' needs a " + std::to_string(n) + "x" + std::to_string(n) +
                              " matrix, got " + std::to_string(m.dim()) + "x" + std::to_string(m.dim()));
}

double parse_number(const std::string& text, const std::string& what) {
    double x = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), x);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || text.empty())
        throw usage_error("bad value '" + text + "' for " + what);
    return x;
}

// "k1=v1,k2=v2" with the allowed keys.
std::map<std::string, double> parse_params(const std::string& text, const std::string& family,
                                           const std::vector<std::string>& keys) {
    std::map<std::string, double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw usage_error(family + ": expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw usage_error(family + ": unknown parameter '" + key + "'");
        out[key] = parse_number(item.substr(eq + 1), family + " parameter " + key);
    }
    return out;
}

double need(const std::map<std::string, double>& p, const std::string& key, const std::string& family) {
    auto it = p.find(key);
    if (it == p.end()) throw usage_error(family + ": missing parameter '" + key + "'");
    return it->second;
}

// Named catalog states; the matrix is returned unvalidated so that
// catalog members outside the physical region can still be inspected.
cmatrix named_state(const std::string& name) {
    auto colon = name.find(':');
    std::string family = name.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : name.substr(colon + 1);
    if (family == "bell") {
        try {
            return bell(parse_bell(rest)).matrix();
        } catch (const domain_error&) {
            throw usage_error("unknown Bell state '" + rest + "'");
        }
    }
    try {
        if (family == "werner") return werner(need(parse_params(rest, family, {"F"}), "F", family)).matrix();
        if (family == "munro") return munro(need(parse_params(rest, family, {"g"}), "g", family)).to_matrix();
        if (family == "ph") return peres_horodecki(need(parse_params(rest, family, {"x"}), "x", family)).to_matrix();
        if (family == "gisin") {
            auto p = parse_params(rest, family, {"a", "b", "d", "ab", "x"});
            double x = need(p, "x", family);
            if (p.count("a") || p.count("b")) return gisin(need(p, "a", family), need(p, "b", family), x).to_matrix();
            return gisin_combo(need(p, "d", family), need(p, "ab", family), x).to_matrix();
        }
    } catch (const domain_error& e) {
        throw usage_error(e.what());
    }
    if (family == "level") {
        int k = static_cast<int>(parse_number(rest, "level"));
        if (k < 0 || k > 3 || rest.size() != 1) throw usage_error("level must be 0, 1, 2 or 3");
        std::vector<complex> amp(4);
        amp[k] = 1.0;
        return pure_state(amp).matrix();
    }
    throw usage_error("unknown state name '" + name + "'");
}

std::string grid_for(const cmatrix& m, const std::string& rep, grid_format fmt) {
    if (rep == "su4") {
        require_dim(m, 4, rep);
        return emit_grid(wigner_su4(m), fmt);
    }
    if (rep == "pair") {
        require_dim(m, 4, rep);
        return emit_grid(wigner_pair(fano_extract(m)), fmt);
    }
    if (rep == "su2") {
        require_dim(m, 2, rep);
        auto p = bloch_vector(m, generators(2));
        return emit_grid(wigner_su2({p[0], p[1], p[2]}), fmt);
    }
    // rep == "kernel"
    return emit_grid(wigner_function(validate_density(m), kernel(m.dim())), fmt);
}

std::string extension(grid_format fmt) {
    switch (fmt) {
    case grid_format::csv:
        return ".csv";
    case grid_format::json:
        return ".json";
    case grid_format::gnuplot:
        return ".dat";
    }
    return "";
}

void report_error(std::ostream& err, bool as_json, const char* kind, const std::string& message,
                  const std::vector<std::string>& issues, int code) {
    if (as_json) {
        nlohmann::json j;
        j["error"] = kind;
        j["message"] = message;
        j["issues"] = issues;
        j["exit"] = code;
        err << j.dump() << '\n';
        return;
    }
    err << "error: " << message << '\n';
    for (const auto& s : issues) err << "  " << s << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete Wigner functions for qubits, qubit pairs and ququarts", "dwigner"};
    app.require_subcommand(1);
    bool json_errors = false;
    app.add_flag("--json-errors", json_errors, "Report errors as one JSON object on stderr");

    std::string input, output, rep = "su4", format = "csv";
    const std::vector<std::string> formats{"csv", "json", "gnuplot"};

    auto* wig = app.add_subcommand("wigner", "Wigner function of a density matrix");
    wig->add_option("--input", input, "Matrix JSON file")->required();
    wig->add_option("--rep", rep, "Representation")->check(CLI::IsMember({"su4", "su2", "pair", "kernel"}));
    wig->add_option("--output", output, "Output file (default stdout)");
    wig->add_option("--format", format)->check(CLI::IsMember(formats));

    std::string name, emit = "matrix";
    auto* st = app.add_subcommand("state", "Emit a catalog state");
    st->add_option("--name", name, "bell:phi+ | werner:F=0.5 | munro:g=0.75 | ph:x=1 | gisin:d=..,ab=..,x=.. | level:k")
        ->required();
    st->add_option("--emit", emit)->check(CLI::IsMember({"matrix", "wigner"}));
    st->add_option("--rep", rep)->check(CLI::IsMember({"su4", "pair"}));
    st->add_option("--output", output);
    st->add_option("--format", format)->check(CLI::IsMember(formats));

    std::string delta_rep = "pair";
    auto* del = app.add_subcommand("delta", "Correlation signature W - W_R1 W_R2");
    del->add_option("--input", input)->required();
    del->add_option("--rep", delta_rep)->check(CLI::IsMember({"pair", "xstate"}));
    del->add_option("--output", output);
    del->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* mar = app.add_subcommand("marginals", "Q and R marginals of an X-state");
    mar->add_option("--input", input)->required();
    mar->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    int pulse = 0;
    double noise = 0.0;
    std::string snapshots;
    auto* alg = app.add_subcommand("algorithm", "Single-ququart parity algorithm");
    alg->add_option("--pulse", pulse)->required()->check(CLI::IsMember({2, 6}));
    alg->add_option("--snapshots", snapshots, "Directory for per-step grids");
    alg->add_option("--noise", noise, "Depolarizing weight of the snapshots")->check(CLI::Range(0.0, 1.0));
    alg->add_option("--format", format)->check(CLI::IsMember(formats));

    std::string path_a, path_b, via = "direct";
    auto* fid = app.add_subcommand("fidelity", "Super-fidelity of two density matrices");
    fid->add_option("--a", path_a)->required();
    fid->add_option("--b", path_b)->required();
    fid->add_option("--via", via)->check(CLI::IsMember({"direct", "grid"}));

    auto* val = app.add_subcommand("validate", "Density-matrix checks and eigenvalues");
    val->add_option("--input", input)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        bool as_json = std::find(args.begin(), args.end(), "--json-errors") != args.end();
        report_error(err, as_json, "usage", e.what(), {}, usage);
        return usage;
    }

    try {
        grid_format fmt = parse_grid_format(format);
        if (*wig) {
            cmatrix m = load_density(input).matrix();
            write_text(output, grid_for(m, rep, fmt), out);
        } else if (*st) {
            cmatrix m = named_state(name);
            density_check c = check_density(m, default_tolerance());
            if (!c.ok())
                for (const auto& s : c.issues) err << "warning: " << name << ": " << s << '\n';
            write_text(output, emit == "matrix" ? serialize_matrix(m) : grid_for(m, rep, fmt), out);
        } else if (*del) {
            density_matrix rho = load_density(input);
            require_dim(rho.matrix(), 4, delta_rep);
            if (delta_rep == "pair")
                write_text(output, emit_grid(delta_pair(fano_extract(rho)), fmt), out);
            else
                write_text(output, emit_grid(xstate_delta(xstate_from_matrix(rho.matrix())), fmt), out);
        } else if (*mar) {
            density_matrix rho = load_density(input);
            require_dim(rho.matrix(), 4, "marginals");
            marginal_pair qr = xstate_marginals(xstate_from_matrix(rho.matrix()));
            if (fmt == grid_format::json) {
                out << "{\"q\": [" << join({qr.q.begin(), qr.q.end()}, ", ") << "], \"r\": ["
                    << join({qr.r.begin(), qr.r.end()}, ", ") << "]}\n";
            } else {
                out << "k,q,r\n";
                for (int k = 0; k < 4; ++k)
                    out << k << ',' << format_double(qr.q[k]) << ',' << format_double(qr.r[k]) << '\n';
            }
        } else if (*alg) {
            algorithm_trace t = run_parity_algorithm(pulse, noise);
            char p[32];
            std::snprintf(p, sizeof p, "%.3f", t.outcome_probability);
            out << "level " << t.outcome << ", parity " << t.parity << ", p=" << p << '\n';
            out << "probabilities: " << join({t.probabilities.begin(), t.probabilities.end()}, " ") << '\n';
            if (!snapshots.empty()) {
                std::error_code ec;
                std::filesystem::create_directories(snapshots, ec);
                if (ec) throw usage_error("cannot create '" + snapshots + "'");
                for (const auto& s : t.steps)
                    write_text((std::filesystem::path(snapshots) / (s.label + extension(fmt))).string(),
                               emit_grid(s.wigner, fmt), out);
            }
        } else if (*fid) {
            density_matrix a = load_density(path_a);
            density_matrix b = load_density(path_b);
            double f = via == "grid" ? super_fidelity_from_grids(a, b) : super_fidelity(a, b);
            out << format_double(f) << '\n';
        } else if (*val) {
            cmatrix m = load_matrix(input);
            density_check c = check_density(m, default_tolerance());
            out << "dim " << m.dim() << '\n';
            out << "hermiticity " << format_double(c.hermiticity) << '\n';
            out << "trace_error " << format_double(c.trace_error) << '\n';
            out << "eigenvalues " << join(c.eigenvalues, " ") << '\n';
            if (m.dim() == 4) {
                positivity_report r = positivity_inequalities(m);
                out << "tr_rho2 " << format_double(r.trace_sq) << '\n';
                out << "tr_rho3 " << format_double(r.trace_cube) << '\n';
                out << "tr_rho4 " << format_double(r.trace_fourth) << '\n';
                out << "inequalities " << (r.ineq1 ? "pass" : "fail") << ' ' << (r.ineq2 ? "pass" : "fail") << ' '
                    << (r.ineq3 ? "pass" : "fail") << '\n';
            }
            out << (c.ok() ? "valid" : "invalid") << '\n';
            if (!c.ok()) {
                report_error(err, json_errors, "validation", input + ": not a density matrix", c.issues, rejected);
                return rejected;
            }
        }
    } catch (const usage_error& e) {
        report_error(err, json_errors, "usage", e.what(), {}, usage);
        return usage;
    } catch (const validation_error& e) {
        report_error(err, json_errors, "validation", e.what(), e.issues(), rejected);
        return rejected;
    } catch (const parse_error& e) {
        report_error(err, json_errors, "parse", e.what(), {}, rejected);
        return rejected;
    } catch (const error& e) {
        report_error(err, json_errors, "input", e.what(), {}, rejected);
        return rejected;
    }
    return ok;
}

}  // namespace dwig::cli
