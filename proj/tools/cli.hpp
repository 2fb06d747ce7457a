// Command-line front end. Exit codes: 0 output produced or identity verified,
// 1 mathematical defect, 2 usage or parse error.
#pragma once

#include <kvlie/kvlie.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace kvlie::cli {

enum Exit { ok = 0, defect = 1, usage = 2 };

struct Config {
    std::string format = "text";
    std::string output;
    unsigned threads = 0;
    bool force = false;
    std::size_t degree = 8;
};

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Format parse_format(const std::string& s)
{
    if (s == "json") {
        return Format::json;
    }
    if (s == "latex") {
        return Format::latex;
    }
    return Format::text;
}

inline void check_degree(const Config& cfg)
{
    if (cfg.degree < 1) {
        throw usage_error("--degree must be at least 1");
    }
    if (cfg.degree > 11 && !cfg.force) {
        throw usage_error("degree " + std::to_string(cfg.degree) + " is above 11; pass --force to run it anyway");
    }
}

inline std::string render_defect(const GradedSeries& d, const std::string& what)
{
    const auto t = first_defect(d);
    return what + " defect is nonzero; first term " + to_string(*t, d.alphabet()) + "\n";
}

inline std::string render_pair(const KvSolutionPair& p, Format f)
{
    const auto F = p.F.to_polynomial();
    const auto G = p.G.to_polynomial();
    if (f == Format::json) {
        nlohmann::ordered_json j;
        j["F"] = nlohmann::ordered_json::parse(format_json(F));
        j["G"] = nlohmann::ordered_json::parse(format_json(G));
        return j.dump() + "\n";
    }
    return "F = " + format(F, f) + "\nG = " + format(G, f) + "\n";
}

/// Runs one command. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact free Lie algebra computations for the Kashiwara-Vergne equation", "kvlie"};
    app.fallthrough();
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_option("--output,-o", cfg.output, "Write output to a file instead of standard output");
    app.add_option("--threads", cfg.threads, "Worker threads (default: KVLIE_THREADS or 1)");
    app.add_flag("--force", cfg.force, "Allow degrees above 11");

    auto* bch = app.add_subcommand("bch", "Homogeneous component of the BCH series");
    std::string method = "eulerian";
    std::size_t vars = 2;
    bool cumulative = false;
    bch->add_option("--degree,-n", cfg.degree, "Degree N");
    bch->add_option("--method", method)->check(CLI::IsMember({"eulerian", "oracle", "both"}));
    bch->add_option("--vars", vars, "Number of letters")->check(CLI::Range(2, 9));
    bch->add_flag("--cumulative", cumulative, "Print all components up to N");

    auto* f0cmd = app.add_subcommand("f0", "Particular solution F0 through degree N");
    f0cmd->add_option("--degree,-n", cfg.degree);

    auto* verify = app.add_subcommand("verify", "Check an identity through degree N");
    std::string equation = "kv1";
    std::optional<std::string> kernel_poly;
    verify->add_option("--equation", equation)->check(CLI::IsMember({"kv1", "split", "homogeneous", "multilinear"}));
    verify->add_option("--degree,-n", cfg.degree);
    verify->add_option("--kernel-poly", kernel_poly, "Element of Ker gamma (homogeneous)");
    std::size_t ml_vars = 3;
    verify->add_option("--vars", ml_vars, "Number of letters (multilinear)")->check(CLI::Range(2, 9));

    auto* solution = app.add_subcommand("solution", "Solution built from a polynomial p, with self-check");
    std::string sol_poly = "0";
    std::string lambda1 = "0";
    std::string lambda2 = "0";
    solution->add_option("--kernel-poly", sol_poly, "Polynomial p");
    solution->add_option("--lambda1", lambda1);
    solution->add_option("--lambda2", lambda2);
    solution->add_option("--degree,-n", cfg.degree);

    auto* witt = app.add_subcommand("witt", "Dimension of the degree-N part of the free Lie algebra");
    std::size_t witt_vars = 2;
    witt->add_option("--degree,-n", cfg.degree);
    witt->add_option("--vars", witt_vars)->check(CLI::Range(1, 255));

    auto* psicmd = app.add_subcommand("psi", "Psi_z(p) = gamma((p - gamma(p))_z)");
    std::string var = "x";
    std::string psi_poly;
    psicmd->add_option("--var", var)->check(CLI::IsMember({"x", "y"}));
    psicmd->add_option("--poly", psi_poly)->required();

    std::vector<std::string> argv_store{"kvlie"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    const Format fmt = parse_format(cfg.format);
    const unsigned threads = cfg.threads > 0 ? cfg.threads : default_thread_count();
    std::ostringstream text;
    int code = ok;
    try {
        if (bch->parsed()) {
            check_degree(cfg);
            auto pick = [&](const GradedSeries& s) {
                return cumulative ? s.to_polynomial() : s[cfg.degree];
            };
            if (method == "both") {
                const auto e = multilinear_bch(vars, cfg.degree, ArgumentOrder::forward, threads).series;
                const auto o = multilinear_bch_oracle(vars, cfg.degree).series;
                const auto diff = (e - o).to_polynomial();
                if (!diff.is_zero()) {
                    text << format(diff, fmt) << "\n";
                    code = defect;
                }
            } else if (method == "oracle") {
                text << format(pick(multilinear_bch_oracle(vars, cfg.degree).series), fmt) << "\n";
            } else {
                text << format(pick(multilinear_bch(vars, cfg.degree, ArgumentOrder::forward, threads).series), fmt) << "\n";
            }
        } else if (f0cmd->parsed()) {
            check_degree(cfg);
            text << format(f0(cfg.degree, threads).to_polynomial(), fmt) << "\n";
        } else if (verify->parsed()) {
            check_degree(cfg);
            GradedSeries d(Alphabet::xy(), 0);
            if (equation == "kv1") {
                d = verify_kv1(f0_pair(cfg.degree, threads));
            } else if (equation == "split") {
                d = verify_split(f0(cfg.degree, threads), cfg.degree);
            } else if (equation == "homogeneous") {
                if (!kernel_poly) {
                    throw usage_error("--equation homogeneous needs --kernel-poly");
                }
                const auto p = parse_polynomial(*kernel_poly);
                if (!dynkin(p).is_zero()) {
                    err << "kernel polynomial is not in the kernel of gamma: gamma(p) = " << format_text(dynkin(p)) << "\n";
                    return defect;
                }
                d = verify_homogeneous(homogeneous_solution(p, 0, 0, cfg.degree));
            } else {
                d = verify_multilinear(ml_vars, multilinear_f0_tuple(ml_vars, cfg.degree, threads), cfg.degree);
            }
            if (d.is_zero()) {
                text << equation << ": defect is zero through degree " << cfg.degree << "\n";
            } else {
                text << render_defect(d, equation);
                code = defect;
            }
        } else if (solution->parsed()) {
            check_degree(cfg);
            const auto p = parse_polynomial(sol_poly);
            const auto pair = general_solution(p, parse_rational(lambda1), parse_rational(lambda2), cfg.degree, threads);
            text << render_pair(pair, fmt);
            const auto d = verify_kv1(pair);
            if (!d.is_zero()) {
                err << render_defect(d, "kv1");
                code = defect;
            }
        } else if (witt->parsed()) {
            if (cfg.degree < 1) {
                throw usage_error("--degree must be at least 1");
            }
            const auto dim = witt_dimension(witt_vars, cfg.degree);
            if (fmt == Format::json) {
                nlohmann::ordered_json j{{"letters", witt_vars}, {"degree", cfg.degree}, {"dimension", dim.get_str()}};
                text << j.dump() << "\n";
            } else {
                text << dim.get_str() << "\n";
            }
        } else if (psicmd->parsed()) {
            const auto p = parse_polynomial(psi_poly);
            text << format(psi(p, var == "x" ? X : Y), fmt) << "\n";
        }
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return usage;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    if (cfg.output.empty()) {
        out << text.str();
    } else {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!f) {
            err << "error: cannot open " << cfg.output << "\n";
            return usage;
        }
        f << text.str();
    }
    return code;
}

} // namespace kvlie::cli
