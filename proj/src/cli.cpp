#include "goodlab/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "goodlab/bounds.hpp"
#include "goodlab/errors.hpp"
#include "goodlab/generators.hpp"
#include "goodlab/graph.hpp"
#include "goodlab/labeller.hpp"
#include "goodlab/report.hpp"
#include "goodlab/walks.hpp"

namespace goodlab::cli {

namespace {

using Json = Report::Json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << contents << '\n';
}

Json walk_json(const Walk& w) { return Json(w); }

Json rationals_json(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

Json epsilon_json(const EpsilonResult& eps) {
    return Json{{"t", eps.params.t},
                {"c", eps.params.c},
                {"q_prime", eps.params.q_prime},
                {"q", to_string(eps.params.q())},
                {"alpha", to_string(eps.alpha)},
                {"epsilon", to_string(eps.epsilon)}};
}

Json verdict_json(const GoodnessVerdict& v) {
    Json out{{"status", to_string(v.status)},
             {"paths_explored", v.paths_explored},
             {"cap_hit", v.cap_hit}};
    if (v.witness) {
        out["witness"] = Json{{"from", v.witness->from},
                              {"to", v.witness->to},
                              {"first", walk_json(v.witness->first)},
                              {"second", walk_json(v.witness->second)}};
    }
    return out;
}

Json certificate_json(const BadnessCertificate& cert) {
    Json out{{"applies", cert.applies},
             {"degree_condition", cert.degree_condition},
             {"density_condition", cert.density_condition},
             {"n", cert.n},
             {"dbar", to_string(cert.dbar)},
             {"delta", cert.delta},
             {"t", cert.t},
             {"c", cert.c},
             {"epsilon", cert.eps ? epsilon_json(*cert.eps) : Json(nullptr)}};
    if (cert.r_prime) {
        out["trace"] = Json{{"r_prime", *cert.r_prime},
                            {"r", to_string(cert.r)},
                            {"scaled_r_power", to_string(cert.scaled_r_power)},
                            {"scaled_r_power_dominates", cert.scaled_r_power_dominates},
                            {"r_exceeds_threshold", cert.r_exceeds_threshold},
                            {"integrality_values", rationals_json(cert.integrality_values)},
                            {"integrality_ok", cert.integrality_ok},
                            {"g_t", to_string(cert.g_t)},
                            {"g_t_closed_form", to_string(cert.g_t_closed_form)},
                            {"n_squared", to_string(cert.n_squared)},
                            {"exceeds_n_squared", cert.exceeds_n_squared}};
    }
    return out;
}

struct GlobalOptions {
    bool json = false;
    bool timing = false;
    unsigned threads = 1;
};

// Every handler fills the report and returns an exit code.
using Handler = std::function<int(Report&)>;

Rational q_from_options(const std::string& q_text, long q_prime) {
    if (!q_text.empty()) return parse_rational(q_text);
    return make_bound_params(1, 1, q_prime).q();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"goodlab: good edge-labellings of graphs", "goodlab"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions global;
    app.add_flag("--json", global.json, "Emit the report as JSON");
    app.add_flag("--timing", global.timing, "Include wall time in the report");
    app.add_option("--threads", global.threads, "Worker threads (0 = all cores)");

    Handler handler;
    std::string command;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a graph from a family");
    std::string family;
    std::vector<std::size_t> family_params;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("family", family, "path|cycle|complete|complete_bipartite|hypercube|random_regular|petersen")
        ->required();
    gen->add_option("params", family_params, "Family parameters");
    gen->add_option("--seed", gen_seed, "Seed for random_regular");
    gen->add_option("-o,--out", gen_out, "Write the edge-list file here");
    gen->callback([&] {
        command = "gen";
        handler = [&](Report& report) {
            report.params()["family"] = family;
            report.params()["params"] = family_params;
            Graph g = generate(family, family_params, gen_seed);
            if (family == "random_regular") report.set_seed(gen_seed);
            const std::string doc = write_graph(g);
            if (!gen_out.empty()) write_file(gen_out, doc);
            report.result() = Json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"graph", doc}};
            return kExitOk;
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Decide whether a labelling is good");
    std::string graph_path;
    std::string labelling_path;
    std::uint64_t cap = kDefaultPathCap;
    verify->add_option("graph", graph_path)->required();
    verify->add_option("labelling", labelling_path)->required();
    verify->add_option("--cap", cap, "Nondecreasing paths explored per source before giving up");
    verify->callback([&] {
        command = "verify";
        handler = [&](Report& report) {
            report.params()["cap"] = cap;
            const std::string graph_text = slurp(graph_path);
            const std::string lab_text = slurp(labelling_path);
            report.add_input("graph", graph_path, graph_text);
            report.add_input("labelling", labelling_path, lab_text);
            Graph g = parse_graph(graph_text);
            Labelling phi = parse_labelling(lab_text, g);
            auto verdict = is_good(g, phi, cap, global.threads);
            report.result() = verdict_json(verdict);
            return verdict.status == Verdict::inconclusive ? kExitInconclusive : kExitOk;
        };
    });

    // count
    auto* count = app.add_subcommand("count", "Count nice k-walks");
    std::size_t walk_k = 1;
    bool find_duplicates = false;
    std::uint64_t walk_budget = kDefaultWalkBudget;
    count->add_option("graph", graph_path)->required();
    count->add_option("labelling", labelling_path)->required();
    count->add_option("--k", walk_k, "Walk length")->required();
    count->add_flag("--duplicates", find_duplicates,
                    "Also search for two nice k-walks with equal ordered endpoints");
    count->add_option("--budget", walk_budget, "Walk enumeration budget for --duplicates");
    count->callback([&] {
        command = "count";
        handler = [&](Report& report) {
            report.params()["k"] = walk_k;
            if (find_duplicates) report.params()["budget"] = walk_budget;
            const std::string graph_text = slurp(graph_path);
            const std::string lab_text = slurp(labelling_path);
            report.add_input("graph", graph_path, graph_text);
            report.add_input("labelling", labelling_path, lab_text);
            Graph g = parse_graph(graph_text);
            Labelling phi = parse_labelling(lab_text, g);
            report.result()["count"] = to_string(count_nice_walks(g, phi, walk_k));
            if (find_duplicates) {
                auto dup = find_duplicate_nice_walks(g, phi, walk_k, walk_budget);
                if (dup) {
                    report.result()["duplicate"] = Json{{"from", dup->from},
                                                        {"to", dup->to},
                                                        {"first", walk_json(dup->first)},
                                                        {"second", walk_json(dup->second)}};
                } else {
                    report.result()["duplicate"] = nullptr;
                }
            }
            return kExitOk;
        };
    });

    // label
    auto* label = app.add_subcommand("label", "Construct a labelling");
    std::string method;
    std::size_t label_k = 0;
    std::uint64_t label_seed = 1;
    std::uint64_t max_rounds = 100000;
    std::uint64_t budget = kDefaultOrderingBudget;
    std::size_t dimension = 0;
    bool allow_low_girth = false;
    std::string label_out;
    std::string label_graph_out;
    label->add_option("graph", graph_path, "Graph file (not used by --method hypercube)");
    label->add_option("--method", method)
        ->required()
        ->check(CLI::IsMember({"random", "mt", "exhaustive", "hypercube"}));
    label->add_option("--k", label_k, "Path length for --method mt");
    label->add_option("--seed", label_seed);
    label->add_option("--max-rounds", max_rounds);
    label->add_option("--budget", budget, "Orderings tried by --method exhaustive");
    label->add_option("--dim", dimension, "Dimension for --method hypercube");
    label->add_flag("--allow-low-girth", allow_low_girth, "Run mt even when girth < 2k");
    label->add_option("-o,--out", label_out, "Write the labelling file here");
    label->add_option("--graph-out", label_graph_out, "Write the hypercube graph file here");
    label->callback([&] {
        command = "label";
        handler = [&](Report& report) {
            report.params()["method"] = method;
            Graph g;
            if (method == "hypercube") {
                report.params()["dim"] = dimension;
            } else {
                if (graph_path.empty()) throw ValidationError("a graph file is required");
                const std::string graph_text = slurp(graph_path);
                report.add_input("graph", graph_path, graph_text);
                g = parse_graph(graph_text);
            }

            Labelling phi;
            int code = kExitOk;
            if (method == "random") {
                report.set_seed(label_seed);
                phi = random_labelling(g, label_seed);
            } else if (method == "mt") {
                if (label_k == 0) throw ValidationError("--method mt needs --k >= 1");
                report.params()["k"] = label_k;
                report.params()["max_rounds"] = max_rounds;
                report.params()["allow_low_girth"] = allow_low_girth;
                report.set_seed(label_seed);
                auto res = mt_label(g, label_k, label_seed, max_rounds, allow_low_girth);
                phi = std::move(res.labelling);
                report.result()["terminated"] = res.stats.terminated;
                report.result()["rounds"] = res.stats.rounds;
                report.result()["remaining_paths"] = res.stats.remaining_paths;
                if (!res.stats.terminated) code = kExitInconclusive;
            } else if (method == "exhaustive") {
                report.params()["budget"] = budget;
                auto res = exhaustive_decide_good(g, budget, global.threads);
                report.result()["status"] = to_string(res.status);
                report.result()["orderings_checked"] = res.orderings_checked;
                if (res.status == ExhaustiveStatus::budget_exceeded) code = kExitInconclusive;
                if (!res.witness) {
                    report.result()["labelling"] = nullptr;
                    return code;
                }
                phi = std::move(*res.witness);
            } else {
                auto cube = hypercube_labelling(dimension);
                g = std::move(cube.graph);
                phi = std::move(cube.labelling);
                const std::string doc = write_graph(g);
                if (!label_graph_out.empty()) write_file(label_graph_out, doc);
                report.result()["graph"] = doc;
            }
            const std::string lab_doc = write_labelling(g, phi);
            if (!label_out.empty()) write_file(label_out, lab_doc);
            report.result()["labelling"] = lab_doc;
            if (method != "exhaustive") {
                report.result()["verdict"] = to_string(is_good(g, phi, kDefaultPathCap, global.threads).status);
            }
            return code;
        };
    });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Evaluate the bound calculus exactly");
    std::string op;
    std::size_t bt = 1;
    std::size_t bc = 1;
    std::size_t bk = 1;
    long q_prime = 2;
    std::string q_text;
    std::string n_text = "1";
    std::string m_text = "0";
    std::string delta_text = "1";
    std::vector<std::int64_t> schedule;
    std::size_t bg = 3;
    bounds->add_option("--op", op)
        ->required()
        ->check(CLI::IsMember({"ab", "g", "lemma1", "q", "epsilon", "lll", "corollary", "identity"}));
    bounds->add_option("--t", bt);
    bounds->add_option("--c", bc);
    bounds->add_option("--k", bk);
    bounds->add_option("--q-prime", q_prime, "q = 2^-q'");
    bounds->add_option("--q", q_text, "Explicit rational q (overrides --q-prime)");
    bounds->add_option("--n", n_text);
    bounds->add_option("--m", m_text);
    bounds->add_option("--delta", delta_text);
    bounds->add_option("--schedule", schedule, "Degree thresholds for --op lemma1, outermost first")->delimiter(',');
    bounds->add_option("--g", bg, "Target girth for --op corollary");
    bounds->callback([&] {
        command = "bounds";
        handler = [&](Report& report) {
            auto& params = report.params();
            auto& result = report.result();
            params["op"] = op;
            if (op == "ab") {
                const Rational q = q_from_options(q_text, q_prime);
                params["t"] = bt;
                params["q"] = to_string(q);
                auto table = ab_sequences(bt, q);
                result = Json{{"a", rationals_json(table.a)}, {"b", rationals_json(table.b)}};
            } else if (op == "g" || op == "identity") {
                const Rational q = q_from_options(q_text, q_prime);
                const Rational n = parse_rational(n_text);
                const Rational m = parse_rational(m_text);
                const Rational d = parse_rational(delta_text);
                params["n"] = to_string(n);
                params["m"] = to_string(m);
                params["delta"] = to_string(d);
                params["k"] = bk;
                params["q"] = to_string(q);
                if (op == "g") {
                    result["value"] = to_string(g_value(n, m, d, bk, q));
                } else {
                    result["residual"] = to_string(recursion_identity_residual(n, m, d, bk, q));
                }
            } else if (op == "lemma1") {
                const auto n = parse_rational(n_text);
                const auto m = parse_rational(m_text);
                const auto d = parse_rational(delta_text);
                if (!is_integer(n) || !is_integer(m) || !is_integer(d)) {
                    throw ValidationError("lemma1 takes integer n, m and delta");
                }
                params["n"] = to_string(n);
                params["m"] = to_string(m);
                params["delta"] = to_string(d);
                params["k"] = bk;
                params["schedule"] = schedule;
                auto as_int = [](const Rational& r) {
                    return boost::multiprecision::numerator(r).convert_to<std::int64_t>();
                };
                result["value"] = to_string(lemma1_lower(as_int(n), as_int(m), as_int(d), schedule, bk));
            } else if (op == "q") {
                params["t"] = bt;
                params["c"] = bc;
                auto found = find_q_prime(bt, bc);
                auto table = ab_sequences(found);
                result = Json{{"q_prime", found.q_prime},
                              {"q", to_string(found.q())},
                              {"a_t", to_string(table.a_at(bt))},
                              {"b_t", to_string(table.b_at(bt))}};
            } else if (op == "epsilon") {
                params["t"] = bt;
                params["c"] = bc;
                result = epsilon_json(epsilon(bt, bc));
            } else if (op == "lll") {
                const auto d = parse_rational(delta_text);
                if (!is_integer(d)) throw ValidationError("lll takes an integer --delta");
                const auto delta = boost::multiprecision::numerator(d).convert_to<std::int64_t>();
                params["delta"] = delta;
                auto th = lll_min_k(delta);
                result = Json{{"k", th.k},
                              {"girth_threshold", th.girth_threshold},
                              {"four_e_upper_bound", to_string(four_e_upper_bound())}};
            } else {
                params["g"] = bg;
                auto cor = corollary_params(bg);
                result["special_case"] = cor.special_case;
                if (cor.t) {
                    result["t"] = *cor.t;
                    if (!cor.eps) {
                        result["epsilon"] = nullptr;
                        return kExitOk;
                    }
                    result["epsilon"] = epsilon_json(*cor.eps);
                    result["threshold"] = to_string(*cor.threshold);
                    if (cor.d_min) {
                        result["d_min"] = *cor.d_min;
                        result["witness_inequality"] = *cor.witness_inequality;
                    } else {
                        result["d_min"] = "above search cap";
                    }
                }
            }
            return kExitOk;
        };
    });

    // certify
    auto* certify = app.add_subcommand("certify", "Badness certificate from degree statistics");
    std::size_t ct = 1;
    std::size_t cc = 1;
    std::string dbar_text;
    std::int64_t cert_n = 0;
    std::int64_t cert_delta = 0;
    certify->add_option("graph", graph_path, "Graph file (or give --n, --dbar, --delta)");
    certify->add_option("--t", ct)->required();
    certify->add_option("--c", cc)->required();
    certify->add_option("--n", cert_n);
    certify->add_option("--dbar", dbar_text);
    certify->add_option("--delta", cert_delta);
    certify->callback([&] {
        command = "certify";
        handler = [&](Report& report) {
            report.params()["t"] = ct;
            report.params()["c"] = cc;
            std::int64_t n = cert_n;
            Rational dbar;
            std::int64_t delta = cert_delta;
            if (!graph_path.empty()) {
                const std::string graph_text = slurp(graph_path);
                report.add_input("graph", graph_path, graph_text);
                Graph g = parse_graph(graph_text);
                auto stats = degree_stats(g);
                n = static_cast<std::int64_t>(g.vertex_count());
                dbar = stats.avg_degree;
                delta = static_cast<std::int64_t>(stats.max_degree);
                report.result()["forbidden_screen"] = Json{
                    {"contains_k3", forbidden_screen(g).contains_k3},
                    {"contains_k23", forbidden_screen(g).contains_k23}};
            } else {
                if (n < 1 || dbar_text.empty()) {
                    throw ValidationError("certify needs a graph file or --n, --dbar and --delta");
                }
                dbar = parse_rational(dbar_text);
                report.params()["n"] = n;
                report.params()["dbar"] = to_string(dbar);
                report.params()["delta"] = delta;
            }
            report.result()["certificate"] = certificate_json(theorem1_certify(n, dbar, delta, ct, cc));
            return kExitOk;
        };
    });

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "Maximum edge count of a good graph on n vertices");
    std::vector<std::size_t> gamma_ns;
    std::size_t gamma_cap = kDefaultGammaCap;
    std::string out_dir;
    gamma_cmd->add_option("--n", gamma_ns, "Vertex count (repeatable)")->required();
    gamma_cmd->add_option("--max-n", gamma_cap, "Largest n accepted");
    gamma_cmd->add_option("--out-dir", out_dir, "Write witness graph and labelling files here");
    gamma_cmd->callback([&] {
        command = "gamma";
        handler = [&](Report& report) {
            report.params()["n"] = gamma_ns;
            report.params()["max_n"] = gamma_cap;
            Json table = Json::array();
            for (std::size_t n : gamma_ns) {
                auto entry = gamma(n, gamma_cap, global.threads);
                const std::string graph_doc = write_graph(entry.witness_graph);
                const std::string lab_doc = write_labelling(entry.witness_graph, entry.witness_labelling);
                Json row{{"n", entry.n},
                         {"gamma", entry.gamma},
                         {"graphs_screened_out", entry.graphs_screened_out},
                         {"graphs_decided", entry.graphs_decided},
                         {"graph", graph_doc},
                         {"labelling", lab_doc}};
                if (!out_dir.empty()) {
                    std::filesystem::create_directories(out_dir);
                    const std::string stem = out_dir + "/gamma_" + std::to_string(n);
                    write_file(stem + ".graph", graph_doc);
                    write_file(stem + ".lab", lab_doc);
                    row["graph_file"] = stem + ".graph";
                    row["labelling_file"] = stem + ".lab";
                }
                table.push_back(std::move(row));
            }
            report.result()["table"] = std::move(table);
            return kExitOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInvalid;
    }

    Report report(command);
    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        code = handler(report);
    } catch (const BudgetError& e) {
        err << "goodlab: " << e.what() << '\n';
        return kExitInconclusive;
    } catch (const std::exception& e) {
        err << "goodlab: " << e.what() << '\n';
        return kExitInvalid;
    }
    if (global.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        report.set_wall_time_ms(std::chrono::duration<double, std::milli>(elapsed).count());
    }
    out << (global.json ? report.json_text() : report.human_text());
    return code;
}

}  // namespace goodlab::cli
