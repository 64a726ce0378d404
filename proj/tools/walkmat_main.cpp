// Command-line surface for the exact walk-matrix toolkit: per-graph
// queries, identity verification batches, corpus scans and family growth.

#include "walkmat/dgs.hpp"
#include "walkmat/identities.hpp"
#include "walkmat/int_poly.hpp"
#include "walkmat/spectral.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace walkmat;

struct RunConfig {
    std::string input;
    std::size_t m = 2;
    std::string m_range;
    std::string t_samples;
    std::string depths = "2,3";
    double tol = 1e-8;
    double det_tol = 1e-6;
    unsigned workers = 1;
    bool members_only = false;
    std::string format; // empty = the command's own default
    std::size_t max_vertices = 200;
    std::uint64_t factor_budget = 1'000'000;

    std::string format_or(const char* def) const { return format.empty() ? def : format; }
};

// "-" reads standard input, an existing path reads the file, anything else
// is taken as one inline graph6 string.
std::vector<std::string> input_lines(const std::string& input) {
    std::vector<std::string> lines;
    auto slurp = [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line))
            if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
                lines.push_back(line);
    };
    if (input == "-") {
        slurp(std::cin);
    } else if (std::filesystem::exists(input)) {
        std::ifstream in(input);
        if (!in) throw std::runtime_error("cannot open " + input);
        slurp(in);
    } else {
        lines.push_back(input);
    }
    return lines;
}

std::vector<Graph> input_graphs(const std::string& input) {
    std::vector<Graph> graphs;
    for (const auto& line : input_lines(input)) graphs.push_back(graph6_decode(line));
    return graphs;
}

// "lo..hi" inclusive; a single m yields {m}.
std::vector<std::size_t> m_values(const RunConfig& cfg, std::size_t min_m) {
    std::vector<std::size_t> ms;
    if (!cfg.m_range.empty()) {
        const auto dots = cfg.m_range.find("..");
        if (dots == std::string::npos)
            throw CLI::ValidationError("--m-range", "expected lo..hi");
        const std::size_t lo = std::stoull(cfg.m_range.substr(0, dots));
        const std::size_t hi = std::stoull(cfg.m_range.substr(dots + 2));
        if (lo < min_m || hi < lo)
            throw CLI::ValidationError("--m-range", "range must satisfy " +
                                                        std::to_string(min_m) + " <= lo <= hi");
        for (std::size_t m = lo; m <= hi; ++m) ms.push_back(m);
    } else {
        if (cfg.m < min_m)
            throw CLI::ValidationError("--m", "m must be >= " + std::to_string(min_m));
        ms.push_back(cfg.m);
    }
    return ms;
}

std::optional<std::vector<Int>> t_samples(const RunConfig& cfg) {
    if (cfg.t_samples.empty()) return std::nullopt;
    std::vector<Int> out;
    std::stringstream ss(cfg.t_samples);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.emplace_back(tok);
    return out;
}

std::vector<std::size_t> parse_depths(const std::string& depths) {
    std::vector<std::size_t> out;
    std::stringstream ss(depths);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoull(tok));
    return out;
}

int cmd_walk_det(const RunConfig& cfg) {
    const std::string fmt = cfg.format_or("human");
    for (const Graph& g : input_graphs(cfg.input)) {
        const Int det = walk_det(g);
        const unsigned long half = g.order() / 2;
        const bool div_ok = divisible(det, pow2(half));
        if (fmt == "jsonl") {
            json j{{"graph6", graph6_encode(g)},
                   {"n", g.order()},
                   {"walk_det", dec(det)},
                   {"val2", det == 0 ? json(nullptr) : json(two_adic_valuation(det))},
                   {"div_ok", div_ok}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "graph6: " << graph6_encode(g) << "  n: " << g.order() << "\n"
                      << "det W: " << dec(det) << "\n"
                      << "2-adic valuation: "
                      << (det == 0 ? std::string("inf")
                                   : std::to_string(two_adic_valuation(det)))
                      << "\n"
                      << "divisible by 2^" << half << ": " << (div_ok ? "yes" : "no") << "\n";
        }
        if (!div_ok) return 1;
    }
    return 0;
}

int cmd_charpoly(const RunConfig& cfg) {
    const std::string fmt = cfg.format_or("human");
    for (const Graph& g : input_graphs(cfg.input)) {
        const IntPoly p = charpoly(g.adjacency_matrix());
        if (fmt == "jsonl") {
            json coeffs = json::array();
            for (const Int& c : p.coeffs()) coeffs.push_back(dec(c));
            std::cout << json{{"graph6", graph6_encode(g)}, {"coeffs", coeffs}}.dump()
                      << "\n";
        } else {
            std::cout << p.str() << "\n";
        }
    }
    return 0;
}

int cmd_a0(const RunConfig& cfg) {
    const std::string fmt = cfg.format_or("human");
    for (const Graph& g : input_graphs(cfg.input)) {
        if (fmt == "jsonl")
            std::cout << json{{"graph6", graph6_encode(g)}, {"a0", dec(a0(g))}}.dump()
                      << "\n";
        else
            std::cout << dec(a0(g)) << "\n";
    }
    return 0;
}

int cmd_rooted_product(const RunConfig& cfg) {
    for (const Graph& g : input_graphs(cfg.input))
        std::cout << graph6_encode(rooted_product_path(g, cfg.m)) << "\n";
    return 0;
}

int cmd_verify(const std::string& identity, const RunConfig& cfg) {
    const bool needs_graph = identity == "theorem" || identity == "schwenk";
    const std::size_t min_m = identity == "theorem" ? 2 : 1;
    const auto ms = m_values(cfg, min_m);
    const auto ts = t_samples(cfg);

    std::vector<Certificate> certs;
    if (needs_graph) {
        for (const Graph& g : input_graphs(cfg.input))
            for (std::size_t m : ms)
                certs.push_back(identity == "theorem" ? verify_main_theorem(g, m)
                                                      : verify_schwenk(g, m));
    } else {
        for (std::size_t m : ms) {
            if (identity == "dilcher")
                certs.push_back(verify_dilcher_stolarsky(m));
            else if (identity == "newres")
                certs.push_back(verify_newres(m, ts));
            else if (identity == "res1")
                certs.push_back(verify_res1(m, ts));
            else if (identity == "res2")
                certs.push_back(verify_res2(m, ts));
            else
                throw CLI::ValidationError("verify", "unknown identity " + identity);
        }
    }

    bool all_pass = true;
    for (const Certificate& c : certs) {
        std::cout << c.to_jsonl() << "\n";
        all_pass = all_pass && c.pass;
    }
    return all_pass ? 0 : 1;
}

int cmd_spectral(const RunConfig& cfg) {
    const std::string fmt = cfg.format_or("human");
    bool all_pass = true;
    for (const Graph& g : input_graphs(cfg.input)) {
        const SpectralReport sr = verify_eigenvector_lemma(g, cfg.m, cfg.tol);
        const WalkdetEigenReport wr = verify_walkdet_eigen_formula(g, cfg.det_tol);
        const bool pass = sr.pass && wr.pass;
        all_pass = all_pass && pass;
        if (fmt == "jsonl") {
            json j{{"graph6", graph6_encode(g)},
                   {"m", cfg.m},
                   {"max_eigen_residual", sr.max_eigen_residual},
                   {"max_emn_residual", sr.max_emn_residual},
                   {"max_spectrum_diff", sr.max_spectrum_diff},
                   {"min_mu_gap", sr.min_mu_gap},
                   {"min_s_m1_abs", sr.min_s_m1_abs},
                   {"walk_det", dec(wr.exact)},
                   {"eigen_product", wr.approx},
                   {"walkdet_error", wr.error},
                   {"pass", pass}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "graph6: " << graph6_encode(g) << "  m: " << cfg.m << "\n"
                      << "max eigenvector residual:  " << sr.max_eigen_residual << "\n"
                      << "max e^T eta residual:      " << sr.max_emn_residual << "\n"
                      << "max spectrum difference:   " << sr.max_spectrum_diff << "\n"
                      << "min mu gap:                " << sr.min_mu_gap << "\n"
                      << "min |S_{m-1}(mu)|:         " << sr.min_s_m1_abs << "\n"
                      << "det W vs eigen product:    " << dec(wr.exact) << " vs "
                      << wr.approx << " (error " << wr.error << ")\n"
                      << (pass ? "pass" : "FAIL") << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_dgs_check(const RunConfig& cfg) {
    const std::string fmt = cfg.format_or("human");
    for (const Graph& g : input_graphs(cfg.input)) {
        const FStarReport rep = fstar_check(g);
        const WangStatus wang = wang_condition(g, cfg.factor_budget);
        if (fmt == "jsonl") {
            json j = rep.to_json();
            j["graph6"] = graph6_encode(g);
            j["wang_condition"] = to_string(wang);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "graph6: " << graph6_encode(g) << "  n: " << rep.n << "\n"
                      << "det W: " << dec(rep.walk_det) << "  a0: " << dec(rep.a0) << "\n"
                      << "family member: " << (rep.member ? "yes" : "no") << "\n"
                      << "wang condition: " << to_string(wang) << "\n";
        }
    }
    return 0;
}

int cmd_dgs_grow(const RunConfig& cfg) {
    const auto graphs = input_graphs(cfg.input);
    bool ok = true;
    for (const Graph& g : graphs) {
        const FamilyRecord rec = grow_family(g, parse_depths(cfg.depths), cfg.max_vertices);
        std::cout << rec.to_json().dump(2) << "\n";
        ok = ok && !rec.counterexample.has_value();
    }
    return ok ? 0 : 1;
}

int cmd_scan(const RunConfig& cfg) {
    const std::string fmt = cfg.format_or("jsonl");
    const auto lines = input_lines(cfg.input);
    const auto entries = scan_corpus(lines, cfg.workers);

    bool any_error = false;
    if (fmt == "csv")
        std::cout << "line,graph6,n,n_even,walk_det,a0,member\n";
    for (const ScanEntry& e : entries) {
        if (!e.report) {
            any_error = true;
            std::cerr << "scan: line " << e.line_no << ": " << e.error << "\n";
            continue;
        }
        const FStarReport& r = *e.report;
        if (cfg.members_only && !r.member) continue;
        if (fmt == "csv") {
            std::cout << e.line_no << "," << e.graph6 << "," << r.n << ","
                      << (r.n_even ? "true" : "false") << "," << dec(r.walk_det) << ","
                      << dec(r.a0) << "," << (r.member ? "true" : "false") << "\n";
        } else {
            std::cout << e.to_json().dump() << "\n";
        }
    }
    return any_error ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for walk matrices, rooted products with paths, and "
                 "Chebyshev resultant identities"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input,
                        "inline graph6 string, file of graph6 lines, or - for stdin")
            ->required();
    };
    auto add_format = [&](CLI::App* sub, const std::string& def,
                          std::vector<std::string> allowed) {
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember(std::move(allowed)))
            ->default_str(def);
    };

    auto* walkdet = app.add_subcommand("walk-det", "det W(G), 2-adic valuation, divisibility");
    add_input(walkdet);
    add_format(walkdet, "human", {"human", "jsonl"});

    auto* chrp = app.add_subcommand("charpoly", "characteristic polynomial of the adjacency matrix");
    add_input(chrp);
    add_format(chrp, "human", {"human", "jsonl"});

    auto* a0cmd = app.add_subcommand("a0", "constant term of the characteristic polynomial");
    add_input(a0cmd);
    add_format(a0cmd, "human", {"human", "jsonl"});

    auto* rp = app.add_subcommand("rooted-product", "graph6 of G with an m-vertex path attached to every vertex");
    add_input(rp);
    rp->add_option("--m,-m", cfg.m, "path order")->required()->check(CLI::Range(std::size_t(1), std::size_t(1) << 20));

    auto* verify = app.add_subcommand("verify", "certificate-producing identity verification (JSONL)");
    std::string identity;
    verify->add_option("identity", identity, "theorem|schwenk|dilcher|newres|res1|res2")
        ->required()
        ->check(CLI::IsMember({"theorem", "schwenk", "dilcher", "newres", "res1", "res2"}));
    verify->add_option("input", cfg.input, "graph6 input (theorem/schwenk only)");
    verify->add_option("--m,-m", cfg.m, "single m value");
    verify->add_option("--m-range", cfg.m_range, "inclusive range lo..hi");
    verify->add_option("--t-samples", cfg.t_samples, "comma-separated t overrides (newres/res1/res2)");

    auto* spectral = app.add_subcommand("spectral", "floating-point eigen-structure residual report");
    add_input(spectral);
    spectral->add_option("--m,-m", cfg.m, "path order")->check(CLI::Range(std::size_t(1), std::size_t(1) << 20));
    spectral->add_option("--tol", cfg.tol, "residual tolerance");
    spectral->add_option("--det-tol", cfg.det_tol, "walk determinant relative tolerance");
    add_format(spectral, "human", {"human", "jsonl"});

    auto* check = app.add_subcommand("dgs-check", "family membership and the odd square-free condition");
    add_input(check);
    check->add_option("--factor-budget", cfg.factor_budget, "iteration cap for factorization");
    add_format(check, "human", {"human", "jsonl"});

    auto* grow = app.add_subcommand("dgs-grow", "iterated rooted-product family growth (JSON)");
    add_input(grow);
    grow->add_option("--depths", cfg.depths, "comma-separated path orders, each >= 2");
    grow->add_option("--max-vertices", cfg.max_vertices, "vertex cap for grown graphs");

    auto* scan = app.add_subcommand("scan", "family membership report per corpus line");
    add_input(scan);
    scan->add_option("--workers", cfg.workers, "worker thread count")
        ->envname("WALKMAT_WORKERS")
        ->check(CLI::Range(1u, 1024u));
    scan->add_flag("--members-only", cfg.members_only, "emit only family members");
    add_format(scan, "jsonl", {"jsonl", "csv"});

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(walkdet)) return cmd_walk_det(cfg);
        if (app.got_subcommand(chrp)) return cmd_charpoly(cfg);
        if (app.got_subcommand(a0cmd)) return cmd_a0(cfg);
        if (app.got_subcommand(rp)) return cmd_rooted_product(cfg);
        if (app.got_subcommand(verify)) {
            if ((identity == "theorem" || identity == "schwenk") && cfg.input.empty())
                throw CLI::ValidationError("verify", "this identity needs a graph input");
            return cmd_verify(identity, cfg);
        }
        if (app.got_subcommand(spectral)) return cmd_spectral(cfg);
        if (app.got_subcommand(check)) return cmd_dgs_check(cfg);
        if (app.got_subcommand(grow)) return cmd_dgs_grow(cfg);
        if (app.got_subcommand(scan)) return cmd_scan(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
