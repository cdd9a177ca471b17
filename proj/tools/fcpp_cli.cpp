// Command-line front-end: generators, pipeline, evaluation, verification.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fcpp/io.hpp"
#include "fcpp/oracles.hpp"
#include "fcpp/requests.hpp"

using nlohmann::json;

namespace {

fcpp::Digraph load_digraph(const std::string& input) {
    if (input.empty()) return fcpp::read_digraph(std::cin);
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open input file: " + input);
    return fcpp::read_digraph(in);
}

void emit(const std::string& output, const std::string& text) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) throw std::invalid_argument("cannot open output file: " + output);
    out << text;
}

fcpp::Ordering load_ordering(const std::string& spec, int n) {
    if (spec == "canonical") return fcpp::Ordering::identity(n);
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open ordering file: " + spec);
    return fcpp::read_ordering(in, n);
}

std::vector<fcpp::Arc> load_requests(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open requests file: " + path);
    return fcpp::read_requests(in);
}

std::vector<long long> load_weights(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open weights file: " + path);
    std::vector<long long> w;
    long long x;
    while (in >> x) w.push_back(x);
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("weights file must hold exactly n integers");
    return w;
}

// Rebuild the identity-matching request instance from a heap-indexed
// bi-oriented complete binary tree (the `gen --family bintree` layout).
fcpp::RequestInstance instance_from_tree(const fcpp::Digraph& d,
                                         const std::vector<fcpp::Arc>* requests) {
    int h = 0;
    while ((1 << (h + 2)) - 1 <= d.n) ++h;
    if ((1 << (h + 1)) - 1 != d.n)
        throw std::invalid_argument("digraph is not a complete binary tree");
    fcpp::RequestInstance inst = fcpp::gen_binary_tree_requests(h, fcpp::MatchingMode::identity);
    if (inst.graph.arcs != d.arcs)
        throw std::invalid_argument("digraph is not a heap-indexed bi-oriented complete binary tree");
    if (!requests) return inst;
    // regroup the explicit requests by the lowest common ancestor
    for (auto& m : inst.matchings) m.clear();
    inst.requests.clear();
    int first_leaf = (1 << h) - 1;
    for (auto [u, v] : *requests) {
        if (u < first_leaf || u >= d.n || v < first_leaf || v >= d.n || u == v)
            throw std::invalid_argument("requests must pair distinct leaves");
        int a = u, b = v;
        while (a != b) {
            if (a > b) a = (a - 1) / 2;
            else b = (b - 1) / 2;
        }
        fcpp::Arc req{std::min(u, v), std::max(u, v)};
        inst.matchings[a].push_back(req);
        inst.requests.push_back(req);
    }
    return inst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced bi-trees, circuit separators, and forward-connectivity orderings"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    std::string input, output, weights_file;
    std::uint64_t seed = 0;
    bool json_out = false;
    app.add_option("--input", input, "digraph file (default: stdin)");
    app.add_option("--output", output, "output file (default: stdout)");
    app.add_option("--seed", seed, "seed for randomized generators");
    app.add_flag("--json", json_out, "prefer JSON output where applicable");
    app.add_option("--weights", weights_file, "per-vertex weights, one integer per line");

    // gen
    auto* gen = app.add_subcommand("gen", "emit a digraph from a named family");
    std::string family = "random", matching = "identity", requests_out;
    int gen_n = 8, gen_k = 1, gen_h = 2, gen_extra = 0;
    gen->add_option("--family", family, "prop2 | bintree | random | circuit")->required();
    gen->add_option("--n", gen_n, "vertex count (random, circuit)");
    gen->add_option("--k", gen_k, "block parameter (prop2)");
    gen->add_option("--h", gen_h, "tree height (bintree)");
    gen->add_option("--extra", gen_extra, "extra arcs beyond the circuit (random)");
    gen->add_option("--matching", matching, "identity | hypercube | random (bintree)");
    gen->add_option("--requests-out", requests_out, "write the request set here (bintree)");

    // dfs
    auto* dfs = app.add_subcommand("dfs", "left-maximal DFS tree as DOT");
    int root = 0;
    dfs->add_option("--root", root, "root vertex");

    // ico
    auto* ico = app.add_subcommand("ico", "balanced (I,C,O)-decomposition as JSON");
    std::string dot_out;
    ico->add_option("--dot", dot_out, "also write a DOT rendering here");

    // bitree
    auto* bitree = app.add_subcommand("bitree", "balanced bi-tree as JSON");
    bitree->add_option("--dot", dot_out, "also write a DOT rendering here");

    // order
    auto* order = app.add_subcommand("order", "forward-pair maximizing ordering (pipeline)");

    // schedule
    auto* schedule = app.add_subcommand("schedule", "arc schedule from an ordering");
    std::string ordering_spec = "canonical";
    schedule->add_option("--ordering", ordering_spec, "ordering file or 'canonical'");

    // eval
    auto* eval = app.add_subcommand("eval", "forward/temporal/request counts");
    std::string eval_schedule, eval_requests;
    bool couples = false;
    eval->add_option("--ordering", ordering_spec, "ordering file or 'canonical'");
    eval->add_option("--schedule", eval_schedule, "schedule file to evaluate");
    eval->add_option("--requests", eval_requests, "requests file to evaluate");
    eval->add_flag("--couples", couples, "treat requests as ordered couples");

    // cover
    auto* cover = app.add_subcommand("cover", "forward cover of a bi-oriented graph");

    // verify
    auto* verify = app.add_subcommand("verify", "run a checker on the pipeline output");
    std::string what, orderings_file;
    verify->add_option("--what", what, "dfs | ico | bitree | cover")->required();
    verify->add_option("--orderings", orderings_file, "orderings file (cover), one per line");
    verify->add_option("--root", root, "root vertex (dfs)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force references");
    bool do_t = false, do_dag = false, do_maxreq = false;
    std::string oracle_requests;
    oracle->add_flag("--t", do_t, "exhaustive max forward pairs (n <= 8)");
    oracle->add_flag("--dag-bitree", do_dag, "max bi-tree size of an acyclic digraph");
    oracle->add_flag("--max-requests", do_maxreq, "max satisfiable requests on a bi-oriented tree");
    oracle->add_option("--requests", oracle_requests, "requests file (max-requests)");

    // let the global --input/--output/... flags appear after the subcommand
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);

        if (gen->parsed()) {
            std::ostringstream text;
            if (family == "prop2") {
                fcpp::write_digraph(text, fcpp::gen_prop2(gen_k).graph);
            } else if (family == "bintree") {
                fcpp::MatchingMode mode = fcpp::MatchingMode::identity;
                if (matching == "hypercube") mode = fcpp::MatchingMode::hypercube;
                else if (matching == "random") mode = fcpp::MatchingMode::seeded_random;
                else if (matching != "identity") throw std::invalid_argument("unknown matching mode");
                auto inst = fcpp::gen_binary_tree_requests(gen_h, mode, seed);
                fcpp::write_digraph(text, inst.graph);
                if (!requests_out.empty()) {
                    std::ostringstream reqs;
                    fcpp::write_requests(reqs, inst.requests);
                    emit(requests_out, reqs.str());
                }
            } else if (family == "random") {
                fcpp::write_digraph(text, fcpp::gen_random_strong(gen_n, gen_extra, seed));
            } else if (family == "circuit") {
                fcpp::write_digraph(text, fcpp::gen_circuit(gen_n));
            } else {
                throw std::invalid_argument("unknown family: " + family);
            }
            emit(output, text.str());
        } else if (dfs->parsed()) {
            auto d = load_digraph(input);
            auto t = fcpp::left_maximal_dfs(d, root);
            if (json_out) {
                json j;
                j["root"] = t.root;
                j["parent"] = t.parent;
                j["dfs_index"] = t.dfs_index;
                emit(output, j.dump() + "\n");
            } else {
                emit(output, fcpp::dot_dfs_tree(d, t));
            }
        } else if (ico->parsed()) {
            auto d = load_digraph(input);
            auto dec = fcpp::balanced_ico(d);
            if (!dot_out.empty()) emit(dot_out, fcpp::dot_ico(d, dec));
            emit(output, fcpp::json_ico(dec) + "\n");
        } else if (bitree->parsed()) {
            auto d = load_digraph(input);
            std::vector<long long> w;
            if (!weights_file.empty()) w = load_weights(weights_file, d.n);
            auto b = fcpp::balanced_bitree(d, w);
            if (!dot_out.empty()) emit(dot_out, fcpp::dot_bitree(d, b));
            emit(output, fcpp::json_bitree(b) + "\n");
        } else if (order->parsed()) {
            auto d = load_digraph(input);
            auto r = fcpp::fcpp_approx(d);
            long long sixth = (d.n + 5) / 6;
            json summary;
            summary["n"] = d.n;
            summary["forward_pairs"] = r.forward_pairs;
            summary["lower_bound"] = sixth * sixth - 1;
            summary["ratio_of_max"] =
                d.n > 1 ? 2.0 * static_cast<double>(r.forward_pairs) / d.n / (d.n - 1) : 0.0;
            if (!output.empty()) {
                std::ostringstream ord;
                fcpp::write_ordering(ord, r.ordering);
                emit(output, ord.str());
            }
            std::cout << summary.dump() << '\n';
        } else if (schedule->parsed()) {
            auto d = load_digraph(input);
            auto ord = load_ordering(ordering_spec, d.n);
            std::ostringstream text;
            fcpp::write_schedule(text, d, fcpp::schedule_from_ordering(d, ord));
            emit(output, text.str());
        } else if (eval->parsed()) {
            auto d = load_digraph(input);
            auto ord = load_ordering(ordering_spec, d.n);
            json report;
            report["n"] = d.n;
            report["forward_pairs"] = fcpp::count_forward_pairs(d, ord);
            if (!eval_schedule.empty()) {
                std::ifstream in(eval_schedule);
                if (!in) throw std::invalid_argument("cannot open schedule file: " + eval_schedule);
                report["temporal_pairs"] = fcpp::count_temporal_pairs(d, fcpp::read_schedule(in, d));
            }
            if (!eval_requests.empty()) {
                auto reqs = load_requests(eval_requests);
                report["satisfied"] = fcpp::count_satisfied_requests(d, ord, reqs, couples);
                report["total"] = reqs.size();
            }
            std::cout << report.dump() << '\n';
        } else if (cover->parsed()) {
            auto d = load_digraph(input);
            auto orderings = fcpp::forward_cover_bioriented(d);
            std::ostringstream text;
            for (const auto& o : orderings) fcpp::write_ordering(text, o);
            emit(output, text.str());
            json report;
            report["n"] = d.n;
            report["cover_size"] = orderings.size();
            (output.empty() ? std::cerr : std::cout) << report.dump() << '\n';
        } else if (verify->parsed()) {
            auto d = load_digraph(input);
            fcpp::CheckResult res;
            if (what == "dfs") {
                auto t = fcpp::left_maximal_dfs(d, root);
                res = fcpp::verify_dfs_tree(d, t);
                if (res) res = fcpp::verify_left_maximal(t);
            } else if (what == "ico") {
                res = fcpp::verify_ico(d, fcpp::balanced_ico(d), /*check_balance=*/true);
            } else if (what == "bitree") {
                auto b = fcpp::balanced_bitree(d);
                res = fcpp::verify_bitree(d, b);
                if (res && 6 * std::min(b.minus_size(), b.plus_size()) < d.n)
                    res = {false, "bi-tree side below n/6"};
            } else if (what == "cover") {
                if (orderings_file.empty()) throw std::invalid_argument("--orderings required for cover");
                std::ifstream in(orderings_file);
                if (!in) throw std::invalid_argument("cannot open orderings file");
                std::vector<fcpp::Ordering> orderings;
                std::string line;
                while (std::getline(in, line)) {
                    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                    std::istringstream ls(line);
                    orderings.push_back(fcpp::read_ordering(ls, d.n));
                }
                res = fcpp::verify_forward_cover(d, orderings);
            } else {
                throw std::invalid_argument("unknown checker: " + what);
            }
            json report;
            report["ok"] = res.ok;
            if (!res.ok) report["reason"] = res.reason;
            std::cout << report.dump() << '\n';
            return res.ok ? 0 : 1;
        } else if (oracle->parsed()) {
            auto d = load_digraph(input);
            json report;
            if (do_t) {
                auto r = fcpp::brute_force_t(d);
                report["t"] = r.t;
                report["best_ordering"] = r.best.perm;
            }
            if (do_dag) report["dag_bitree_max"] = fcpp::dag_balanced_bitree_max(d);
            if (do_maxreq) {
                std::vector<fcpp::Arc> reqs;
                const std::vector<fcpp::Arc>* reqp = nullptr;
                if (!oracle_requests.empty()) {
                    reqs = load_requests(oracle_requests);
                    reqp = &reqs;
                }
                auto inst = instance_from_tree(d, reqp);
                auto opt = fcpp::max_requests_on_tree(inst);
                report["max_satisfied"] = opt.max_satisfied;
                report["exact"] = opt.exact;
            }
            std::cout << report.dump() << '\n';
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const fcpp::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
