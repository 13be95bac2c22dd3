// lipwb command-line front end.
//
// Exit codes: 0 all requested checks pass exactly, 1 a check or verification
// failed (the report is still written), 2 usage or input error, 3 model
// definition error.

#include "lipwb/acceptance.hpp"
#include "lipwb/analytic.hpp"
#include "lipwb/errors.hpp"
#include "lipwb/json_io.hpp"
#include "lipwb/pipeline.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace lipwb;

namespace {

struct Config {
    std::string command;
    std::string model, space_file, theorem, element, function, pairs, out, format = "json";
    std::vector<std::string> params;
    std::size_t n = 10;
    long first = 2;
    std::size_t support = 4, random = 100, levels = 3, resolution = kAnalyticResolution;
    std::uint64_t seed = kDefaultSeed;
    double horizon = kAnalyticHorizon;
    std::string analytic_id = "x2-over-absx-plus-2";
};

struct Outcome {
    Json doc;
    bool passed = true;
};

std::map<std::string, Q> parse_params(const std::vector<std::string>& kv) {
    std::map<std::string, Q> out;
    for (const auto& s : kv) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError("parameter '" + s + "' is not key=value");
        out[s.substr(0, eq)] = parse_rational(s.substr(eq + 1));
    }
    return out;
}

MetricModel resolve_model(const Config& c, const std::string& fallback) {
    std::string name = c.model.empty() ? fallback : c.model;
    if (name == "pow4") {
        if (!c.params.empty()) throw ModelDefinitionError("pow4 takes no parameters");
        return pow4_model();
    }
    return catalog(name, parse_params(c.params));
}

SpacePtr resolve_space(const Config& c, const std::string& fallback) {
    if (!c.space_file.empty()) return space_from_json(parse_json_text(read_file(c.space_file)));
    if (c.model == "integers") return integer_space(c.n);
    return truncate(resolve_model(c, fallback), c.n);
}

// Inline JSON when the text starts with '{', otherwise a file path.
Json json_arg(const std::string& s) { return parse_json_text(!s.empty() && s[0] == '{' ? s : read_file(s)); }

std::vector<IndexPair> parse_pairs(const std::string& s) {
    std::vector<IndexPair> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) throw ParseError("pair '" + tok + "' is not p-q");
        try {
            out.emplace_back(std::stoul(tok.substr(0, dash)), std::stoul(tok.substr(dash + 1)));
        } catch (const std::exception&) {
            throw ParseError("pair '" + tok + "' is not p-q");
        }
    }
    return out;
}

std::vector<IndexPair> default_pairs(const FiniteMetricSpace& sp) {
    std::vector<IndexPair> out;
    for (std::size_t r = 1; r + 1 < sp.size(); r += 2) out.emplace_back(r, r + 1);
    return out;
}

Outcome cmd_validate(const Config& c) {
    Outcome o;
    SpacePtr sp;
    QMat dist;
    std::string name;
    if (!c.space_file.empty()) {
        auto j = parse_json_text(read_file(c.space_file));
        for (const auto& row : j.at("dist")) dist.push_back(qvec_from_json(row));
        name = j.value("name", std::string("space"));
    } else {
        auto m = resolve_model(c, "discrete");
        dist.assign(c.n, QVec(c.n));
        for (std::size_t i = 0; i < c.n; ++i)
            for (std::size_t j = 0; j < c.n; ++j) dist[i][j] = i == j ? Q(0) : m.row_rule(i, j);
        name = m.name;
    }
    auto rep = validate(dist);
    o.passed = rep.passed;
    o.doc["command"] = "validate";
    o.doc["space"] = name;
    o.doc["N"] = dist.size();
    o.doc["passed"] = rep.passed;
    Json v = Json::array();
    for (const auto& x : rep.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}, {"values", qvec_to_json(x.values)}});
    o.doc["violations"] = v;
    return o;
}

Outcome cmd_norm(const Config& c) {
    if (c.function.empty()) throw ParseError("norm needs --function");
    auto j = json_arg(c.function);
    SpacePtr sp = j.at("space").is_object() ? nullptr : resolve_space(c, "discrete");
    if (sp && j.at("space").is_string() && j.at("space").get<std::string>() != sp->name) {
        Json fixed = j;
        fixed["space"] = sp->name;
        j = fixed;
    }
    auto f = function_from_json(j, sp);
    Outcome o;
    o.doc["command"] = "norm";
    o.doc["space"] = f.space->name;
    o.doc["attainment"] = attainment_to_json(attainment_report(f));
    return o;
}

Outcome cmd_free_norm(const Config& c) {
    if (c.element.empty()) throw ParseError("free-norm needs --element");
    auto sp = resolve_space(c, "discrete");
    auto mu = free_element_from_json(json_arg(c.element), sp);
    auto lp = free_norm_lp(mu);
    Q flow = free_norm_flow(mu);
    Outcome o;
    o.passed = lp.norm == flow;
    o.doc["command"] = "free-norm";
    o.doc["space"] = sp->name;
    o.doc["N"] = sp->size();
    o.doc["element"] = free_element_to_json(mu);
    o.doc["lp"] = free_norm_to_json(lp);
    o.doc["flow_norm"] = q_to_json(flow);
    o.doc["agree"] = lp.norm == flow;
    return o;
}

Outcome cmd_check(const Config& c) {
    Outcome o;
    o.doc["command"] = "check";
    o.doc["theorem"] = c.theorem;
    o.doc["N"] = c.n;
    CheckResult r;
    const std::string& t = c.theorem;
    if (t == "thm43" || t == "thm45" || t == "thm46" || t == "thm310") {
        auto m = resolve_model(c, t == "thm43" ? "dmqr41" : t == "thm45" ? "example44" : t == "thm46" ? "dmqr44" : "dmqr41");
        o.doc["model"] = m.name;
        if (t == "thm43") r = check_thm43(m, c.n);
        else if (t == "thm45") r = check_thm45(m, c.first, c.n);
        else if (t == "thm46") {
            if (!m.eps) throw ParseError("thm46 from the command line needs a model with a declared eps sequence");
            r = check_thm46(m, EpsSpec{m.eps, std::nullopt}, c.n);
        } else {
            auto rep = check_thm310(m, c.n);
            r.passed = rep.passed;
            r.clause = rep.failed_clause;
            for (long w : rep.witness) r.witness.push_back(static_cast<std::size_t>(w));
            r.values = rep.witness_values;
        }
    } else if (t == "thm34" || t == "thm37" || t == "prop42" || t == "prop31") {
        auto sp = resolve_space(c, "discrete");
        o.doc["space"] = sp->name;
        auto pairs = c.pairs.empty() ? default_pairs(*sp) : parse_pairs(c.pairs);
        if (t == "thm34") r = check_thm34(*sp, pairs);
        else if (t == "thm37") r = check_thm37(*sp, pairs);
        else {
            std::vector<std::size_t> pts, partners;
            for (auto [p, q] : pairs) {
                pts.push_back(p);
                partners.push_back(q);
            }
            r = t == "prop42" ? check_prop42(*sp, pts) : check_prop31(*sp, pts, partners);
        }
    } else {
        throw ParseError("unknown theorem '" + t + "' for check");
    }
    o.passed = r.passed;
    o.doc["result"] = check_to_json(r);
    return o;
}

Outcome cmd_verify(const Config& c) {
    const std::string& t = c.theorem;
    Family fam;
    std::optional<bool> checker;
    if (t == "prop23") fam = build_prop23(resolve_space(c, "prop23"));
    else if (t == "thm34" || t == "thm37") {
        auto sp = resolve_space(c, t == "thm34" ? "discrete" : "example35");
        auto pairs = c.pairs.empty() ? default_pairs(*sp) : parse_pairs(c.pairs);
        checker = bool(t == "thm34" ? check_thm34(*sp, pairs) : check_thm37(*sp, pairs));
        fam = t == "thm34" ? build_thm34(sp, pairs) : build_thm37(sp, pairs);
    } else if (t == "prop42") {
        SpacePtr sp = c.model.empty() && c.space_file.empty() ? integer_space(c.n) : resolve_space(c, "discrete");
        std::vector<std::size_t> pts;
        if (c.pairs.empty())
            for (std::size_t r = 2; r < sp->size(); r += 2) pts.push_back(r);
        else
            for (auto [p, q] : parse_pairs(c.pairs)) pts.push_back(p);
        checker = bool(check_prop42(*sp, pts));
        fam = build_prop42(sp, pts);
    } else if (t == "thm43") {
        auto m = resolve_model(c, "dmqr41");
        checker = bool(check_thm43(m, c.n));
        fam = build_thm43(m, c.n);
    } else if (t == "thm45") {
        auto m = resolve_model(c, "example44");
        checker = bool(check_thm45(m, c.first, c.n));
        fam = build_thm45(m, c.first, c.n);
    } else if (t == "thm46") {
        auto m = resolve_model(c, "dmqr44");
        if (!m.eps) throw ParseError("thm46 from the command line needs a model with a declared eps sequence");
        EpsSpec e{m.eps, std::nullopt};
        checker = bool(check_thm46(m, e, c.n));
        fam = build_thm46(m, e, c.n);
    } else if (t == "thm51") fam = build_thm51_star(c.levels);
    else if (t == "prop53") fam = build_prop53_catalog(c.levels);
    else if (t == "thm57") {
        Q cc = 2;
        auto p = parse_params(c.params);
        if (p.count("c")) cc = p["c"];
        fam = build_thm57(cc, c.levels, c.support);
    } else throw ParseError("unknown theorem '" + t + "' for verify");
    const std::size_t m = fam.members.size();
    auto rep = verify_isometry(fam, standard_battery(m, std::min(m, c.support), c.random, c.seed));
    Outcome o;
    o.passed = rep.exact_pass;
    o.doc = report_to_json(rep, fam.space->size(), checker);
    o.doc["limit_family"] = fam.limit_family;
    return o;
}

Outcome cmd_pipeline(const Config& c) {
    auto m = resolve_model(c, "example48");
    auto res = main_theorem_pipeline(m, c.n);
    Outcome o;
    o.passed = res.invariants_hold() && res.report.exact_pass;
    o.doc["command"] = "pipeline";
    o.doc["model"] = m.name;
    o.doc["N"] = c.n;
    o.doc["case"] = to_string(res.which);
    o.doc["subspace_indices"] = res.subspace_indices;
    if (!res.eps.empty()) {
        Json e = Json::object();
        for (const auto& [n, v] : res.eps) e[std::to_string(n)] = q_to_json(v);
        o.doc["eps"] = e;
    }
    if (!res.sigma.empty()) {
        o.doc["sigma"] = res.sigma;
        o.doc["tau"] = res.tau;
        o.doc["eps"] = qvec_to_json(res.pair_eps);
    }
    if (!res.c.empty()) o.doc["c"] = qvec_to_json(res.c);
    o.doc["invariant_failures"] = res.invariant_failures;
    o.doc["limit_family"] = res.family.limit_family;
    o.doc["report"] = report_to_json(res.report, c.n);
    return o;
}

Outcome cmd_report(const Config&) {
    Outcome o;
    o.doc["command"] = "report";
    Json crit = Json::array();
    for (const auto& r : run_acceptance()) {
        crit.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"details", r.details},
                        {"supplementary", r.supplementary}});
        o.passed = o.passed && r.passed;
    }
    o.doc["criteria"] = crit;
    o.doc["seed"] = kDefaultSeed;
    return o;
}

Outcome cmd_sample_analytic(const Config& c) {
    auto r = sample_analytic(c.analytic_id, c.resolution, c.horizon);
    Outcome o;
    o.passed = r.grid_ok && r.horizon_ok;
    o.doc["command"] = "sample-analytic";
    o.doc["exact"] = false;
    o.doc["function"] = r.function_id;
    o.doc["resolution"] = r.resolution;
    o.doc["horizon"] = r.horizon;
    o.doc["max_grid_slope"] = r.max_grid_slope;
    o.doc["slope_at_horizon"] = r.slope_at_horizon;
    o.doc["closed_form"] = r.closed_form;
    o.doc["grid_ok"] = r.grid_ok;
    o.doc["horizon_ok"] = r.horizon_ok;
    return o;
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string to_markdown(const Json& doc) {
    std::ostringstream md;
    md << "# lipwb " << (doc.contains("command") ? scalar(doc["command"]) : "verify") << "\n\n";
    if (doc.contains("criteria")) {
        md << "| # | criterion | result |\n|---|---|---|\n";
        for (const auto& c : doc["criteria"])
            md << "| " << c["id"].get<int>() << " | " << scalar(c["title"]) << " | " << (c["passed"].get<bool>() ? "PASS" : "FAIL")
               << " |\n";
        for (const auto& c : doc["criteria"]) {
            md << "\n## " << c["id"].get<int>() << ". " << scalar(c["title"]) << "\n\n";
            for (const auto& d : c["details"]) md << "- " << scalar(d) << "\n";
            for (const auto& s : c["supplementary"]) md << "- note: " << scalar(s) << "\n";
        }
        return md.str();
    }
    for (const auto& [k, v] : doc.items()) {
        if (k == "command") continue;
        if (v.is_structured()) md << "\n**" << k << "**\n\n```json\n" << v.dump(2) << "\n```\n";
        else md << "- **" << k << "**: " << scalar(v) << "\n";
    }
    return md.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for Lipschitz-free and norm-attainment constructions"};
    app.require_subcommand(1);
    Config c;
    auto common = [&](CLI::App* s) {
        s->add_option("--model", c.model, "catalog model name (or pow4, integers)");
        s->add_option("--space", c.space_file, "metric space JSON file");
        s->add_option("--n", c.n, "number of points")->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
        s->add_option("--param", c.params, "model parameter key=value (repeatable)");
        s->add_option("--out", c.out, "output path");
        s->add_option("--format", c.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
    };
    struct Sub {
        const char* name;
        const char* help;
    };
    for (auto [name, help] : std::vector<Sub>{{"validate", "check the metric axioms"},
                                              {"norm", "Lipschitz norm and attainment of a function"},
                                              {"free-norm", "free-space norm by LP and by transport"},
                                              {"check", "evaluate a theorem's hypotheses"},
                                              {"verify", "build a family and verify the isometry"},
                                              {"pipeline", "main theorem construction"},
                                              {"report", "full acceptance suite"},
                                              {"sample-analytic", "floating-point sampling of the analytic example"}}) {
        auto* s = app.add_subcommand(name, help);
        common(s);
        s->callback([&c, s] { c.command = s->get_name(); });
        std::string n = name;
        if (n == "check" || n == "verify") {
            s->add_option("--theorem", c.theorem, "theorem id")->required();
            s->add_option("--pairs", c.pairs, "anchor pairs p-q,p-q (rows)");
            s->add_option("--first", c.first, "first sequence index (thm45)");
        }
        if (n == "verify") {
            s->add_option("--support", c.support, "sign-vector support size");
            s->add_option("--random", c.random, "random vector count");
            s->add_option("--seed", c.seed, "battery seed");
            s->add_option("--levels", c.levels, "sign levels (thm51, prop53, thm57)");
        }
        if (n == "norm") s->add_option("--function", c.function, "function JSON (inline or path)");
        if (n == "free-norm") s->add_option("--element", c.element, "free element JSON (inline or path)");
        if (n == "sample-analytic") {
            s->add_option("--function", c.analytic_id, "function id");
            s->add_option("--resolution", c.resolution, "grid intervals");
            s->add_option("--horizon", c.horizon, "sampling horizon");
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Outcome o;
    try {
        if (c.command == "validate") o = cmd_validate(c);
        else if (c.command == "norm") o = cmd_norm(c);
        else if (c.command == "free-norm") o = cmd_free_norm(c);
        else if (c.command == "check") o = cmd_check(c);
        else if (c.command == "verify") o = cmd_verify(c);
        else if (c.command == "pipeline") o = cmd_pipeline(c);
        else if (c.command == "report") o = cmd_report(c);
        else o = cmd_sample_analytic(c);
        if (!o.doc.contains("seed")) o.doc["seed"] = c.seed;
    } catch (const ModelDefinitionError& e) {
        std::cerr << "model definition error: " << e.what() << "\n";
        return 3;
    } catch (const DichotomyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const bool md = c.format == "markdown";
    std::string text = md ? to_markdown(o.doc) : o.doc.dump(2) + "\n";
    std::string out = c.out;
    if (out.empty())
        if (const char* dir = std::getenv("LIPWB_OUT_DIR"); dir && *dir)
            out = std::string(dir) + "/" + c.command + (md ? ".md" : ".json");
    try {
        if (!out.empty()) {
            write_atomic(out, text);
            if (c.command == "report" && !md) {
                std::string md_path = out.size() > 5 && out.substr(out.size() - 5) == ".json" ? out.substr(0, out.size() - 5) + ".md"
                                                                                              : out + ".md";
                write_atomic(md_path, to_markdown(o.doc));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << text;
    return o.passed ? 0 : 1;
}
