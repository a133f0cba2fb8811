// qha: batch front-end for the phase-space laboratory.
//
// Subcommands: verify | tauber | quantize | iso | fg | berezin.
// Configuration is JSON only (schema 1); the flags --n/--out/--format/--seed
// override the corresponding config fields.  Reports embed the hash of the
// effective configuration and the tolerance table, and identical
// (config, seed) runs produce byte-identical JSON.  Exit codes: 0 pass,
// 1 suite/computation failure, 2 usage or config error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qha/conv.hpp"
#include "qha/gabor.hpp"
#include "qha/quantize.hpp"
#include "qha/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qha;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string command;
    std::vector<int> ns;
    std::vector<std::string> masks;
    std::vector<std::string> windows;
    std::vector<std::string> quantizers;
    cdouble A = 0.0;
    std::map<std::string, double> tolerances;
    uint64_t seed = 1;
    int bj_nodes = 64;
    std::string out = ".";
    std::string format = "json";
};

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw ConfigError("bad grid size '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ConfigError("empty grid size list");
    return out;
}

void validate(const Settings& s) {
    for (int n : s.ns)
        if (n < 8 || n % 2 != 0)
            throw ConfigError("grid size " + std::to_string(n) + " must be even and >= 8");
    for (const auto& [name, tol] : s.tolerances)
        if (!(tol >= 0.0)) throw ConfigError("tolerance '" + name + "' must be nonnegative");
    if (s.format != "json" && s.format != "csv")
        throw ConfigError("format must be json or csv");
    if (s.bj_nodes < 1) throw ConfigError("bj_nodes must be positive");
}

void apply_config_file(Settings& s, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file " + path);
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    try {
        if (!cfg.is_object() || !cfg.contains("schema") || cfg["schema"].get<int>() != 1)
            throw ConfigError("config must be an object with \"schema\": 1");
        if (cfg.contains("ns")) s.ns = cfg["ns"].get<std::vector<int>>();
        if (cfg.contains("masks")) s.masks = cfg["masks"].get<std::vector<std::string>>();
        if (cfg.contains("windows")) s.windows = cfg["windows"].get<std::vector<std::string>>();
        if (cfg.contains("quantizers"))
            s.quantizers = cfg["quantizers"].get<std::vector<std::string>>();
        if (cfg.contains("A")) {
            if (cfg["A"].is_array())
                s.A = cdouble(cfg["A"].at(0).get<double>(), cfg["A"].at(1).get<double>());
            else
                s.A = cfg["A"].get<double>();
        }
        if (cfg.contains("tolerances"))
            s.tolerances = cfg["tolerances"].get<std::map<std::string, double>>();
        if (cfg.contains("seed")) s.seed = cfg["seed"].get<uint64_t>();
        if (cfg.contains("bj_nodes")) s.bj_nodes = cfg["bj_nodes"].get<int>();
        if (cfg.contains("out")) s.out = cfg["out"].get<std::string>();
        if (cfg.contains("format")) s.format = cfg["format"].get<std::string>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field error: ") + e.what());
    }
}

// Canonical serialization of the effective settings; its FNV-1a hash is the
// config fingerprint embedded in every report.
std::string canonical_config(const Settings& s) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value(s.command);
    w.key("ns").begin_array();
    for (int n : s.ns) w.value(n);
    w.end_array();
    w.key("masks").begin_array();
    for (const auto& m : s.masks) w.value(m);
    w.end_array();
    w.key("windows").begin_array();
    for (const auto& x : s.windows) w.value(x);
    w.end_array();
    w.key("quantizers").begin_array();
    for (const auto& q : s.quantizers) w.value(q);
    w.end_array();
    w.key("A").value(s.A);
    w.key("tolerances").begin_object();
    for (const auto& [name, tol] : s.tolerances) w.key(name).value(tol);
    w.end_object();
    w.key("seed").value(s.seed);
    w.key("bj_nodes").value(s.bj_nodes);
    w.key("format").value(s.format);
    w.end_object();
    return w.str();
}

void write_header(JsonWriter& w, const Settings& s, const std::string& hash) {
    w.key("schema").value(1);
    w.key("command").value(s.command);
    w.key("config_hash").value(hash);
    w.key("seed").value(s.seed);
    w.key("n_list").begin_array();
    for (int n : s.ns) w.value(n);
    w.end_array();
    w.key("tolerances").begin_object();
    for (const auto& [name, tol] : s.tolerances) w.key(name).value(tol);
    w.end_object();
}

std::string csv_header(const Settings& s, const std::string& hash) {
    std::string out;
    out += "# schema 1\n";
    out += "# command " + s.command + "\n";
    out += "# config_hash " + hash + "\n";
    out += "# seed " + std::to_string(s.seed) + "\n";
    for (const auto& [name, tol] : s.tolerances)
        out += "# tolerance " + name + " " + format_double(tol) + "\n";
    return out;
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::string sanitize(const std::string& id) {
    std::string out;
    for (char c : id) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_')
            out += c;
        else if (c == '(' || c == ',')
            out += '_';
        // ')' and anything else is dropped
    }
    return out;
}

// ----------------------------------------------------------------- commands

int cmd_verify(Settings s, const std::string& hash) {
    if (s.ns.empty()) s.ns = {8, 16};
    auto suites = run_verify_suites(s.ns, s.seed, s.tolerances);

    // The resolved per-suite tolerances are the header table for verify.
    s.tolerances.clear();
    for (const auto& r : suites) s.tolerances[r.name] = r.tol;

    bool all_pass = true;
    JsonWriter w;
    w.begin_object();
    write_header(w, s, hash);
    w.key("suites").begin_array();
    for (const auto& r : suites) {
        all_pass = all_pass && r.pass;
        w.begin_object();
        w.key("name").value(r.name);
        w.key("residual").value(r.residual);
        w.key("tol").value(r.tol);
        w.key("pass").value(r.pass);
        w.end_object();
        std::cout << (r.pass ? "pass " : "FAIL ") << r.name << "  residual=" << format_double(r.residual)
                  << " tol=" << format_double(r.tol) << "\n";
    }
    w.end_array();
    w.key("pass").value(all_pass);
    w.end_object();
    write_file(fs::path(s.out) / "verify.json", w.str() + "\n");

    if (s.format == "csv") {
        std::string csv = csv_header(s, hash) + "suite,residual,tol,pass\n";
        for (const auto& r : suites)
            csv += r.name + "," + format_double(r.residual) + "," + format_double(r.tol) + "," +
                   (r.pass ? "1" : "0") + "\n";
        write_file(fs::path(s.out) / "verify.csv", csv);
    }
    std::cout << (all_pass ? "verify: PASS" : "verify: FAIL") << "\n";
    return all_pass ? 0 : 1;
}

int cmd_tauber(Settings s, const std::string& hash) {
    if (s.ns.empty()) s.ns = {8, 16};
    if (s.masks.empty()) s.masks = {"chirp"};
    if (s.windows.empty()) s.windows = {"gaussian"};

    JsonWriter w;
    w.begin_object();
    write_header(w, s, hash);
    w.key("A").value(s.A);
    w.key("reports").begin_array();
    for (const auto& m : s.masks)
        for (const auto& win : s.windows) {
            TauberReport rep = run_tauber_report(m, win, s.A, s.ns, s.seed);
            std::string stem = "tauber_" + sanitize(m) + "_" + sanitize(win);
            write_file(fs::path(s.out) / (stem + ".json"), to_json(rep) + "\n");
            write_file(fs::path(s.out) / (stem + ".csv"), csv_header(s, hash) + to_csv(rep));
            w.begin_object();
            w.key("mask").value(m);
            w.key("window").value(win);
            w.key("wiener_ok").value(rep.wiener_ok);
            w.key("wiener_min").value(rep.wiener_min);
            w.key("residual").value(rep.residual);
            w.key("verdict_i").value(rep.verdict_i);
            w.key("verdict_ii").value(rep.verdict_ii);
            w.key("verdict_iii").value(rep.verdict_iii);
            w.end_object();
            std::cout << "tauber " << m << " / " << win << ": wiener=" << (rep.wiener_ok ? "ok" : "no")
                      << " verdicts=" << rep.verdict_i << rep.verdict_ii << rep.verdict_iii << "\n";
        }
    w.end_array();
    w.end_object();
    write_file(fs::path(s.out) / "tauber.json", w.str() + "\n");
    return 0;
}

int cmd_quantize(Settings s, const std::string& hash) {
    if (s.ns.empty()) s.ns = {16, 32};
    if (s.quantizers.empty()) s.quantizers = {"tau(0.3)", "born_jordan"};
    if (s.masks.empty()) s.masks = {"gaussian_env", "chirp"};
    if (s.windows.empty()) s.windows = {"hermite(1)", "onesided_exp"};

    std::string csv = csv_header(s, hash) +
                      "quantizer,n,op_norm,continuum_norm,husimi_decays,verdict_i,verdict_iv,"
                      "consistent,quad_dev\n";
    JsonWriter w;
    w.begin_object();
    write_header(w, s, hash);
    w.key("quantizers").begin_array();
    for (const auto& qid : s.quantizers) {
        QuantizerSpec spec = parse_quantizer(qid);
        w.begin_object();
        w.key("quantizer").value(qid);
        w.key("cells").begin_array();
        for (int n : s.ns) {
            GridSpec grid = make_grid(n);
            OperatorMatrix R = quantizer_operator(grid, spec);

            std::vector<std::pair<std::string, PhaseFn>> test_masks;
            for (const auto& m : s.masks) test_masks.emplace_back(m, mask(grid, m));
            std::vector<std::pair<std::string, Signal>> test_signals;
            for (const auto& a : s.windows) test_signals.emplace_back(a, atom(grid, a));
            QuantizationReport qr = quantization_compactness_check(R, test_masks, test_signals);

            double op_norm = schatten(R).sigma.size() ? schatten(R).sigma[0] : 0.0;
            double continuum = -1.0;
            if (spec.kind == QuantizerSpec::Kind::Tau)
                continuum = 1.0 / std::sqrt((1.0 - spec.tau) * spec.tau);

            // Born-Jordan cross-check: midpoint tau-quadrature of the Cohen
            // distribution of the Gaussian atom against the sinc definition.
            double quad_dev = -1.0;
            if (spec.kind == QuantizerSpec::Kind::BornJordan) {
                Signal phi0 = atom(grid, "gaussian");
                Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(n, n);
                for (int j = 0; j < s.bj_nodes; ++j) {
                    double tau = (j + 0.5) / s.bj_nodes;
                    avg += cohen_Q(tau_operator(grid, tau), phi0).values;
                }
                avg /= static_cast<double>(s.bj_nodes);
                quad_dev = (cohen_Q(R, phi0).values - avg).cwiseAbs().maxCoeff();
            }

            w.begin_object();
            w.key("n").value(n);
            w.key("op_norm").value(op_norm);
            w.key("continuum_norm").value(continuum);
            w.key("husimi_decays").value(qr.husimi_decays);
            w.key("verdict_i").value(qr.verdict_i);
            w.key("verdict_iv").value(qr.verdict_iv);
            w.key("consistent").value(qr.consistent);
            w.key("quad_dev").value(quad_dev);
            w.key("husimi").begin_object();
            w.key("radii").begin_array();
            for (double r : qr.husimi.radii) w.value(r);
            w.end_array();
            w.key("values").begin_array();
            for (double v : qr.husimi.values) w.value(v);
            w.end_array();
            w.end_object();
            w.key("mask_compact").begin_array();
            for (const auto& [mid, cs] : qr.mask_compact) {
                w.begin_object();
                w.key("mask").value(mid);
                w.key("fraction_above").value(cs.fraction_above);
                w.key("s1").value(cs.s1);
                w.key("s2").value(cs.s2);
                w.key("op_norm").value(cs.op_norm);
                w.end_object();
            }
            w.end_array();
            w.end_object();

            csv += qid + "," + std::to_string(n) + "," + format_double(op_norm) + "," +
                   format_double(continuum) + "," + (qr.husimi_decays ? "1" : "0") + "," +
                   (qr.verdict_i ? "1" : "0") + "," + (qr.verdict_iv ? "1" : "0") + "," +
                   (qr.consistent ? "1" : "0") + "," + format_double(quad_dev) + "\n";
            std::cout << "quantize " << qid << " n=" << n << ": op_norm=" << format_double(op_norm)
                      << " consistent=" << qr.consistent << "\n";
        }
        w.end_array();
        w.end_object();
    }
    w.end_array();
    w.end_object();
    write_file(fs::path(s.out) / "quantize.json", w.str() + "\n");
    if (s.format == "csv") write_file(fs::path(s.out) / "quantize.csv", csv);
    return 0;
}

int cmd_iso(Settings s, const std::string& hash) {
    if (s.ns.empty()) s.ns = {16, 32};
    if (s.masks.empty()) s.masks = {"indicator_disk_complement(1)"};
    if (s.windows.empty()) s.windows = {"gaussian"};

    std::string csv = csv_header(s, hash) + "mask,window,n,sigma_min,sigma_max,invertible\n";
    JsonWriter w;
    w.begin_object();
    write_header(w, s, hash);
    w.key("rows").begin_array();
    for (const auto& m : s.masks)
        for (const auto& win : s.windows)
            for (int n : s.ns) {
                GridSpec grid = make_grid(n);
                IsoResult r = iso_check(mask(grid, m), atom(grid, win));
                w.begin_object();
                w.key("mask").value(m);
                w.key("window").value(win);
                w.key("n").value(n);
                w.key("sigma_min").value(r.sigma_min);
                w.key("sigma_max").value(r.sigma_max);
                w.key("invertible").value(r.invertible);
                w.end_object();
                csv += m + "," + win + "," + std::to_string(n) + "," + format_double(r.sigma_min) +
                       "," + format_double(r.sigma_max) + "," + (r.invertible ? "1" : "0") + "\n";
                std::cout << "iso " << m << " / " << win << " n=" << n
                          << ": sigma_min=" << format_double(r.sigma_min) << "\n";
            }
    w.end_array();
    w.end_object();
    write_file(fs::path(s.out) / "iso.json", w.str() + "\n");
    if (s.format == "csv") write_file(fs::path(s.out) / "iso.csv", csv);
    return 0;
}

int cmd_fg(Settings s, const std::string& hash) {
    if (s.ns.empty()) s.ns = {16, 32};
    if (s.masks.empty()) s.masks = {"chirp"};

    std::string csv = csv_header(s, hash) + "mask,n,radius,value\n";
    JsonWriter w;
    w.begin_object();
    write_header(w, s, hash);
    w.key("A").value(s.A);
    w.key("profiles").begin_array();
    for (const auto& m : s.masks)
        for (int n : s.ns) {
            w.begin_object();
            w.key("mask").value(m);
            w.key("n").value(n);
            if (n > 32) {
                // The 4D table behind the profile is guarded to n <= 32.
                w.key("skipped").value(true);
                w.end_object();
                std::cout << "fg " << m << " n=" << n << ": skipped (n > 32)\n";
                continue;
            }
            GridSpec grid = make_grid(n);
            std::vector<double> radii;
            for (int i = 0; i < 10; ++i) radii.push_back(0.1 * i * rho_max(grid));
            DecayProfile G = fg_sup_profile(mask(grid, m), s.A, mask(grid, "gaussian_env"), 1.0, radii);
            w.key("radii").begin_array();
            for (double r : G.radii) w.value(r);
            w.end_array();
            w.key("values").begin_array();
            for (double v : G.values) w.value(v);
            w.end_array();
            w.end_object();
            for (size_t i = 0; i < G.radii.size(); ++i)
                csv += m + "," + std::to_string(n) + "," + format_double(G.radii[i]) + "," +
                       format_double(G.values[i]) + "\n";
            std::cout << "fg " << m << " n=" << n << ": G(0)=" << format_double(G.values.front())
                      << " G(max)=" << format_double(G.values.back()) << "\n";
        }
    w.end_array();
    w.end_object();
    write_file(fs::path(s.out) / "fg.json", w.str() + "\n");
    if (s.format == "csv") write_file(fs::path(s.out) / "fg.csv", csv);
    return 0;
}

int cmd_berezin(Settings s, const std::string& hash) {
    if (s.ns.empty()) s.ns = {8, 16};
    if (s.masks.empty()) s.masks = {"gaussian_env"};
    if (s.windows.empty()) s.windows = {"gaussian"};

    std::string csv = csv_header(s, hash) + "mask,window,n,dev_two_path,dev_spectrogram\n";
    JsonWriter w;
    w.begin_object();
    write_header(w, s, hash);
    w.key("rows").begin_array();
    for (const auto& m : s.masks)
        for (const auto& win : s.windows)
            for (int n : s.ns) {
                GridSpec grid = make_grid(n);
                PhaseFn f = mask(grid, m);
                Signal phi = atom(grid, win);
                OperatorMatrix Tf = loc_op(f, phi, phi);
                PhaseFn direct = berezin(Tf, phi);
                PhaseFn viaconv = conv_op_op(Tf, check_op(rank_one(phi, phi)));
                StftTable V = stft(phi, phi);
                PhaseFn spect{grid, V.values.cwiseAbs2()};
                PhaseFn viaspec = conv_fun_fun(f, spect);
                double dev1 = (direct.values - viaconv.values).cwiseAbs().maxCoeff();
                double dev2 = (direct.values - viaspec.values).cwiseAbs().maxCoeff();

                std::string stem =
                    "berezin_" + sanitize(m) + "_" + sanitize(win) + "_n" + std::to_string(n);
                if (s.format == "csv")
                    write_file(fs::path(s.out) / (stem + ".csv"), to_csv(direct));
                else
                    write_file(fs::path(s.out) / (stem + ".json"), to_json(direct) + "\n");

                w.begin_object();
                w.key("mask").value(m);
                w.key("window").value(win);
                w.key("n").value(n);
                w.key("dev_two_path").value(dev1);
                w.key("dev_spectrogram").value(dev2);
                w.end_object();
                csv += m + "," + win + "," + std::to_string(n) + "," + format_double(dev1) + "," +
                       format_double(dev2) + "\n";
                std::cout << "berezin " << m << " / " << win << " n=" << n
                          << ": dev=" << format_double(std::max(dev1, dev2)) << "\n";
            }
    w.end_array();
    w.end_object();
    write_file(fs::path(s.out) / "berezin.json", w.str() + "\n");
    if (s.format == "csv") write_file(fs::path(s.out) / "berezin.csv", csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qha: finite phase-space harmonic analysis laboratory"};
    app.require_subcommand(1);

    std::string config_path, n_text, out_dir, format, seed_text;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file (schema 1)");
        sub->add_option("--n", n_text, "comma-separated grid sizes, e.g. 8,16");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--format", format, "report format: json or csv");
        sub->add_option("--seed", seed_text, "PRNG seed (unsigned 64-bit)");
    };
    for (const char* name : {"verify", "tauber", "quantize", "iso", "fg", "berezin"})
        add_common(app.add_subcommand(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        Settings s;
        s.command = app.get_subcommands().front()->get_name();
        if (!config_path.empty()) apply_config_file(s, config_path);
        if (!n_text.empty()) s.ns = parse_n_list(n_text);
        if (!out_dir.empty()) s.out = out_dir;
        if (!format.empty()) s.format = format;
        if (!seed_text.empty()) {
            size_t pos = 0;
            s.seed = std::stoull(seed_text, &pos);
            if (pos != seed_text.size()) throw ConfigError("bad seed '" + seed_text + "'");
        }
        validate(s);
        const std::string hash = hex64(fnv1a64(canonical_config(s)));

        if (s.command == "verify") return cmd_verify(std::move(s), hash);
        if (s.command == "tauber") return cmd_tauber(std::move(s), hash);
        if (s.command == "quantize") return cmd_quantize(std::move(s), hash);
        if (s.command == "iso") return cmd_iso(std::move(s), hash);
        if (s.command == "fg") return cmd_fg(std::move(s), hash);
        if (s.command == "berezin") return cmd_berezin(std::move(s), hash);
        std::cerr << "unknown command\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
