#include "gseq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "gseq/errors.hpp"
#include "gseq/graph.hpp"
#include "gseq/pattern.hpp"
#include "gseq/potential.hpp"
#include "gseq/seqcore.hpp"
#include "gseq/sigma.hpp"

namespace gseq::cli {

using json = nlohmann::json;
using graphcore::SimpleGraph;
using seqcore::DegreeSequence;

namespace {

struct GlobalOpts {
    bool json_out = false;
    int threads = 1;
    int realize_limit = 10;
    uint64_t node_budget = 100'000'000;
    uint64_t switch_budget = 1'000'000;
    bool accept_cost = false;
};

DegreeSequence parse_sequence_arg(const std::string& text, std::ostream& err) {
    bool was_unsorted = false;
    DegreeSequence pi = DegreeSequence::parse(text, &was_unsorted);
    if (was_unsorted)
        err << "warning: sequence was not nonincreasing; terms were sorted\n";
    return pi;
}

json graph_json(const SimpleGraph& g) {
    json edges = json::array();
    for (const graphcore::Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.n()}, {"m", g.edge_count()}, {"edges", edges}};
}

json sequence_json(const DegreeSequence& pi) { return json(pi.terms()); }

void emit(const GlobalOpts& g, std::ostream& out, const json& doc, const std::string& text) {
    if (g.json_out)
        out << doc.dump(2) << '\n';
    else
        out << text;
}

long long integer_arg(const std::string& text, const std::string& what) {
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw gseq::ParseError(what + ": expected an integer, got '" + text + "'");
    }
    if (pos != text.size())
        throw gseq::ParseError(what + ": expected an integer, got '" + text + "'");
    return v;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"degree-sequence toolkit: graphicality, realizations, potentially-H "
                 "decisions and degree-sum thresholds"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_flag("--json", g.json_out, "emit a machine-readable JSON document");
    app.add_option("--threads", g.threads, "worker cap for parallel sweeps")
        ->envname("GSEQ_THREADS")
        ->check(CLI::PositiveNumber);
    app.add_option("--realize-limit", g.realize_limit,
                   "vertex-count guard for realization searches")
        ->envname("GSEQ_REALIZE_LIMIT");
    app.add_option("--node-budget", g.node_budget, "containment search node budget")
        ->envname("GSEQ_NODE_BUDGET");
    app.add_option("--switch-budget", g.switch_budget, "2-switch search state budget")
        ->envname("GSEQ_SWITCH_BUDGET");
    app.add_flag("--accept-cost", g.accept_cost,
                 "lift the realization/sweep size guards and accept the cost");

    // graphical <seq>
    std::string seq_text;
    bool use_recursive = false;
    auto* cmd_graphical = app.add_subcommand("graphical", "test whether a sequence is graphical");
    cmd_graphical->add_option("sequence", seq_text, "comma-separated degrees")->required();
    cmd_graphical->add_flag("--recursive", use_recursive, "decide by repeated laying off");
    cmd_graphical->callback([&] {
        DegreeSequence pi = parse_sequence_arg(seq_text, err);
        bool ok = use_recursive ? seqcore::is_graphical_recursive(pi) : seqcore::is_graphical(pi);
        emit(g, out,
             {{"command", "graphical"},
              {"sequence", sequence_json(pi)},
              {"method", use_recursive ? "recursive" : "erdos-gallai"},
              {"graphical", ok}},
             std::string(ok ? "true" : "false") + "\n");
    });

    // layoff <seq> <k>
    std::string layoff_seq;
    int layoff_k = 0;
    auto* cmd_layoff = app.add_subcommand("layoff", "lay off the k-th degree (1-based)");
    cmd_layoff->add_option("sequence", layoff_seq)->required();
    cmd_layoff->add_option("k", layoff_k, "1-based index of the laid-off degree")->required();
    cmd_layoff->callback([&] {
        DegreeSequence pi = parse_sequence_arg(layoff_seq, err);
        DegreeSequence res = seqcore::layoff(pi, layoff_k);
        emit(g, out,
             {{"command", "layoff"},
              {"sequence", sequence_json(pi)},
              {"k", layoff_k},
              {"result", sequence_json(res)}},
             res.to_string() + "\n");
    });

    // realize <seq> [--all]
    std::string realize_seq;
    bool realize_all = false;
    auto* cmd_realize = app.add_subcommand("realize", "emit realizations of a graphical sequence");
    cmd_realize->add_option("sequence", realize_seq)->required();
    cmd_realize->add_flag("--all", realize_all, "emit every realization, not just the first");
    cmd_realize->callback([&] {
        DegreeSequence pi = parse_sequence_arg(realize_seq, err);
        potential::RealizeOptions opts{g.realize_limit, g.accept_cost};
        json list = json::array();
        std::string text;
        int count = 0;
        potential::realizations(
            pi,
            [&](const SimpleGraph& graph) {
                ++count;
                if (g.json_out)
                    list.push_back(graph_json(graph));
                else {
                    if (count > 1) text += "\n";
                    text += graph.to_text();
                }
                return realize_all;
            },
            opts);
        emit(g, out,
             {{"command", "realize"},
              {"sequence", sequence_json(pi)},
              {"count", count},
              {"realizations", list}},
             text);
    });

    // potential <seq> <pattern>
    std::string pot_seq, pot_pattern;
    bool pot_exhaustive = false;
    auto* cmd_potential =
        app.add_subcommand("potential", "find a realization containing the pattern");
    cmd_potential->add_option("sequence", pot_seq)->required();
    cmd_potential->add_option("pattern", pot_pattern, "pattern expression, e.g. U(K3,P3)")
        ->required();
    cmd_potential->add_flag("--exhaustive", pot_exhaustive,
                            "scan all realizations instead of the pruned search");
    cmd_potential->callback([&] {
        DegreeSequence pi = parse_sequence_arg(pot_seq, err);
        SimpleGraph H = build(graphcore::parse_pattern(pot_pattern));
        auto mode = pot_exhaustive ? potential::PotentialMode::exhaustive
                                   : potential::PotentialMode::pruned;
        potential::RealizeOptions opts{g.realize_limit, g.accept_cost};
        auto witness = potential::is_potentially(pi, H, mode, opts);
        json doc{{"command", "potential"},
                 {"sequence", sequence_json(pi)},
                 {"pattern", pot_pattern},
                 {"potential", witness.has_value()}};
        std::string text = witness ? "true\n" : "false\n";
        if (witness) {
            doc["witness"] = {{"realization", graph_json(witness->realization)},
                              {"embedding", witness->embedding.map}};
            text += "embedding:";
            for (int h : witness->embedding.map) text += " " + std::to_string(h);
            text += "\n" + witness->realization.to_text();
        }
        emit(g, out, doc, text);
    });

    // clique-top <seq> <r>
    std::string ct_seq;
    int ct_r = 0;
    auto* cmd_ct = app.add_subcommand(
        "clique-top", "test whether the r+1 largest degrees can induce a clique");
    cmd_ct->add_option("sequence", ct_seq)->required();
    cmd_ct->add_option("r", ct_r)->required();
    cmd_ct->callback([&] {
        DegreeSequence pi = parse_sequence_arg(ct_seq, err);
        bool ok = potential::is_potentially_clique_top(pi, ct_r);
        emit(g, out,
             {{"command", "clique-top"},
              {"sequence", sequence_json(pi)},
              {"r", ct_r},
              {"potential", ok}},
             std::string(ok ? "true" : "false") + "\n");
    });

    // rule <seq> <tag> <r>
    std::string rule_seq, rule_tag;
    int rule_r = 0;
    auto* cmd_rule =
        app.add_subcommand("rule", "evaluate the hypotheses of a sufficient condition");
    cmd_rule->add_option("sequence", rule_seq)->required();
    cmd_rule->add_option("tag", rule_tag, "one of T2_1 T2_2 T2_3 T2_4 L2_2 L2_4 L2_5 L3_1")
        ->required();
    cmd_rule->add_option("r", rule_r)->required();
    cmd_rule->callback([&] {
        DegreeSequence pi = parse_sequence_arg(rule_seq, err);
        auto tag = potential::rule_tag_from_string(rule_tag);
        if (!tag) throw gseq::ParseError("unknown rule tag '" + rule_tag + "'");
        bool ok = potential::sufficient_condition(pi, {*tag, rule_r});
        emit(g, out,
             {{"command", "rule"},
              {"sequence", sequence_json(pi)},
              {"rule", potential::to_string(*tag)},
              {"r", rule_r},
              {"satisfied", ok}},
             std::string(ok ? "true" : "false") + "\n");
    });

    // sigma-formula <family> [key=value...] <n>
    std::vector<std::string> formula_args;
    auto* cmd_formula =
        app.add_subcommand("sigma-formula", "closed-form threshold value of a family");
    cmd_formula->add_option("args", formula_args,
                            "family (thm11|ejl|pmatch|c4|turan-k3), its key=value "
                            "parameter if any, then n")
        ->required()
        ->expected(-2);
    cmd_formula->callback([&] {
        if (formula_args.size() < 2) throw gseq::ParseError("sigma-formula: need family and n");
        auto family = sigma::family_from_string(formula_args.front());
        if (!family)
            throw gseq::ParseError("unknown formula family '" + formula_args.front() + "'");
        long long n = integer_arg(formula_args.back(), "sigma-formula n");
        int param = 0;
        bool have_param = false;
        for (size_t i = 1; i + 1 < formula_args.size(); ++i) {
            const std::string& kv = formula_args[i];
            size_t eq = kv.find('=');
            if (eq == std::string::npos)
                throw gseq::ParseError("sigma-formula: expected key=value, got '" + kv + "'");
            std::string key = kv.substr(0, eq);
            param = static_cast<int>(integer_arg(kv.substr(eq + 1), "sigma-formula " + key));
            bool key_ok = (*family == sigma::FamilyTag::thm11 && key == "r") ||
                          (*family == sigma::FamilyTag::ejl_lower && key == "k") ||
                          (*family == sigma::FamilyTag::p_matching && key == "p");
            if (!key_ok)
                throw gseq::ParseError("sigma-formula: unexpected parameter '" + key +
                                       "' for family " + std::string(sigma::to_string(*family)));
            have_param = true;
        }
        bool needs_param = *family == sigma::FamilyTag::thm11 ||
                           *family == sigma::FamilyTag::ejl_lower ||
                           *family == sigma::FamilyTag::p_matching;
        if (needs_param && !have_param)
            throw gseq::ParseError("sigma-formula: family " +
                                   std::string(sigma::to_string(*family)) +
                                   " needs its parameter (r=/k=/p=)");
        long long value = sigma::closed_form_sigma({*family, param}, n);
        json doc{{"command", "sigma-formula"},
                 {"family", sigma::to_string(*family)},
                 {"n", n},
                 {"value", value}};
        if (needs_param) doc["param"] = param;
        emit(g, out, doc, std::to_string(value) + "\n");
    });

    // sigma-brute <pattern> <n> [--no-zeros]
    std::string brute_pattern;
    int brute_n = 0;
    bool brute_no_zeros = false;
    auto* cmd_brute =
        app.add_subcommand("sigma-brute", "exhaustive threshold sweep for a pattern");
    cmd_brute->add_option("pattern", brute_pattern)->required();
    cmd_brute->add_option("n", brute_n)->required();
    cmd_brute->add_flag("--no-zeros", brute_no_zeros, "restrict to sequences without zero terms");
    cmd_brute->callback([&] {
        SimpleGraph H = build(graphcore::parse_pattern(brute_pattern));
        sigma::SigmaOptions opts;
        opts.override_limit = g.accept_cost;
        opts.threads = g.threads;
        opts.progress = [&](const std::string& line) { err << line << '\n'; };
        sigma::SigmaResult res = sigma::sigma_bruteforce(H, brute_n, !brute_no_zeros, opts);
        json doc{{"command", "sigma-brute"},
                 {"pattern", brute_pattern},
                 {"n", brute_n},
                 {"allow_zeros", res.allow_zeros},
                 {"value", res.value},
                 {"certificate",
                  res.certificate ? sequence_json(*res.certificate) : json(nullptr)}};
        std::string text = std::to_string(res.value) + "\ncertificate: " +
                           (res.certificate ? res.certificate->to_string() : "none") + "\n";
        emit(g, out, doc, text);
    });

    // extremal <r> <n> [--graph]
    int ext_r = 0, ext_n = 0;
    bool ext_graph = false;
    auto* cmd_ext =
        app.add_subcommand("extremal", "threshold certificate sequence and construction");
    cmd_ext->add_option("r", ext_r)->required();
    cmd_ext->add_option("n", ext_n)->required();
    cmd_ext->add_flag("--graph", ext_graph, "also print the construction");
    cmd_ext->callback([&] {
        DegreeSequence tmpl = sigma::extremal_sequence(ext_r, ext_n);
        json doc{{"command", "extremal"},
                 {"r", ext_r},
                 {"n", ext_n},
                 {"sequence", sequence_json(tmpl)},
                 {"sigma", tmpl.sigma()}};
        std::string text = tmpl.to_string() + "\nsigma: " + std::to_string(tmpl.sigma()) + "\n";
        if (ext_graph) {
            SimpleGraph G = sigma::extremal_construction(ext_r, ext_n);
            doc["graph"] = graph_json(G);
            text += G.to_text();
        }
        emit(g, out, doc, text);
    });

    // verify <r> <n> <pattern>
    int ver_r = 0, ver_n = 0;
    std::string ver_pattern;
    auto* cmd_verify = app.add_subcommand(
        "verify", "check the closed form against its extremal certificate for a removed graph U");
    cmd_verify->add_option("r", ver_r)->required();
    cmd_verify->add_option("n", ver_n)->required();
    cmd_verify->add_option("pattern", ver_pattern, "the removed graph U, e.g. U(K3,P3)")
        ->required();
    cmd_verify->callback([&] {
        SimpleGraph U = build(graphcore::parse_pattern(ver_pattern));
        sigma::VerifyOptions opts;
        opts.node_budget = g.node_budget;
        opts.progress = [&](const std::string& line) { err << line << '\n'; };
        sigma::TheoremReport rep = sigma::verify_theorem(ver_r, ver_n, U, opts);
        json doc{{"command", "verify"},
                 {"r", rep.r},
                 {"n", rep.n},
                 {"pattern", ver_pattern},
                 {"branch", rep.odd_branch ? "odd" : "even"},
                 {"items",
                  {{"sequence_matches_construction", rep.sequence_matches_construction},
                   {"sigma_matches", rep.sigma_matches},
                   {"pattern_absent", rep.pattern_absent}}},
                 {"certificate_sigma", rep.certificate_sigma},
                 {"formula_value", rep.formula_value},
                 {"containment_nodes", rep.containment_nodes},
                 {"seconds", rep.seconds},
                 {"pass", rep.all_pass()}};
        emit(g, out, doc, rep.to_text());
    });

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const gseq::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const gseq::DomainError& e) {
        err << "refused: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace gseq::cli
