#include "cli.hpp"

#include "lt/entailment.hpp"
#include "lt/error.hpp"
#include "lt/json_io.hpp"
#include "lt/proofcheck.hpp"
#include "lt/ptplus.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace lt::cli {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Non-blank lines not starting with '#'.
std::vector<std::string> read_lines(const std::string &path) {
    std::vector<std::string> out;
    std::istringstream in(read_file(path));
    for (std::string line; std::getline(in, line);) {
        line = trim(line);
        if (!line.empty() && line.front() != '#')
            out.push_back(line);
    }
    return out;
}

struct query {
    std::vector<std::string> premises;
    std::string conclusion;
};

/// `p1, p2 |- c`; without a turnstile the whole text is the conclusion.
query split_query(const std::string &text) {
    query q;
    const auto pos = text.find("|-");
    if (pos == std::string::npos) {
        q.conclusion = trim(text);
        return q;
    }
    const auto lhs = trim(std::string_view(text).substr(0, pos));
    if (!lhs.empty())
        q.premises = split(lhs, ',');
    q.conclusion = trim(std::string_view(text).substr(pos + 2));
    if (std::ranges::any_of(q.premises, [](const std::string &p) { return p.empty(); }))
        throw error("empty premise in '" + text + "'");
    return q;
}

/// `P0=[11,01]`; an empty string binds nothing.
void bind_assignment(Homomorphism &h, const std::string &text) {
    if (trim(text).empty())
        return;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw error("assignment '" + text + "' is not of the form P<i>=[...]");
    const auto f = parse_formula(trim(std::string_view(text).substr(0, eq)));
    if (f.kind() != connective::var)
        throw error("assignment target must be a variable: '" + text + "'");
    auto body = trim(std::string_view(text).substr(eq + 1));
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw error("denotation must be bracketed: '" + body + "'");
    std::vector<std::string> members;
    const auto inner = trim(std::string_view(body).substr(1, body.size() - 2));
    if (!inner.empty())
        for (auto m : split(inner, ',')) {
            std::erase(m, '"');
            members.push_back(m);
        }
    h.bind(f.index(), parse_denotation(h.algebra(), members));
}

std::vector<Formula> parse_all(const std::vector<std::string> &texts) {
    std::vector<Formula> out;
    for (const auto &t : texts)
        out.push_back(parse_formula(t));
    return out;
}

std::vector<LabelledFormula> parse_all_labelled(const std::vector<std::string> &texts) {
    std::vector<LabelledFormula> out;
    for (const auto &t : texts)
        out.push_back(parse_labelled(t));
    return out;
}

unsigned default_max_n() {
    if (const char *env = std::getenv("LT_MAX_N")) {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception &) {
            throw error(std::string("LT_MAX_N is not a number: ") + env);
        }
    }
    return lt::default_max_n;
}

struct search_flags {
    unsigned max_n = 0;
    std::string restriction = "all";
    std::uint64_t budget = default_budget;
    unsigned jobs = 1;
    bool no_timing = false;

    void attach(CLI::App *cmd, bool with_class) {
        cmd->add_option("--max-n", max_n, "largest algebra 2^n to search (default 3, or LT_MAX_N)");
        if (with_class)
            cmd->add_option("--class", restriction, "homomorphism class")->check(CLI::IsMember({"all", "principal"}));
        cmd->add_option("--budget", budget, "homomorphisms per algebra before giving up");
        cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
        cmd->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");
    }
};

class timer {
public:
    timer() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t ms(bool enabled) const {
        if (!enabled)
            return 0;
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

int verdict_exit(search_status s) {
    switch (s) {
    case search_status::entailed:
        return exit_ok;
    case search_status::countermodel:
        return exit_negative;
    case search_status::budget_exceeded:
        return exit_budget;
    }
    return exit_usage;
}

} // namespace

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Logic of Teams workbench", "lt"};
    app.require_subcommand(1);
    std::function<int()> action;

    // parse / expand
    std::string expr;
    auto *parse_cmd = app.add_subcommand("parse", "print the syntax tree of a formula");
    parse_cmd->add_option("formula", expr)->required();
    parse_cmd->callback([&] {
        action = [&] {
            out << dump(parse_formula(expr)) << "\n";
            return exit_ok;
        };
    });
    auto *expand_cmd = app.add_subcommand("expand", "unfold derived connectives");
    expand_cmd->add_option("formula", expr)->required();
    expand_cmd->callback([&] {
        action = [&] {
            out << to_string(expand(parse_formula(expr))) << "\n";
            return exit_ok;
        };
    });

    // eval
    unsigned n = 0;
    std::vector<std::string> assigns;
    bool native = false;
    auto *eval_cmd = app.add_subcommand("eval", "denotation of a formula under a homomorphism");
    eval_cmd->add_option("--n", n, "number of atoms of the algebra")->required();
    eval_cmd->add_option("--assign", assigns, "P<i>=[bits,...], repeatable");
    eval_cmd->add_flag("--native", native, "evaluate derived connectives natively");
    eval_cmd->add_option("formula", expr)->required();
    eval_cmd->callback([&] {
        action = [&] {
            Homomorphism h(AlgebraSpec::of(n));
            for (const auto &a : assigns)
                bind_assignment(h, a);
            const auto d = eval(h, parse_formula(expr), native ? eval_mode::native : eval_mode::expand);
            out << json{{"algebra_n", n}, {"denotation", to_json(d)}}.dump() << "\n";
            return exit_ok;
        };
    });

    // entail / lentail
    std::string query_text;
    std::string premises_file;
    search_flags sf;
    auto *entail_cmd = app.add_subcommand("entail", "search for a countermodel to Δ |- ψ");
    entail_cmd->add_option("query", query_text, "\"P0, P1 |- P0 & P1\"")->required();
    entail_cmd->add_option("--premises", premises_file, "file with one premise per line");
    sf.attach(entail_cmd, true);
    entail_cmd->callback([&] {
        action = [&] {
            auto q = split_query(query_text);
            if (!premises_file.empty()) {
                auto extra = read_lines(premises_file);
                q.premises.insert(q.premises.begin(), extra.begin(), extra.end());
            }
            const auto prem = parse_all(q.premises);
            const auto concl = parse_formula(q.conclusion);
            const EngineEcho echo{sf.max_n, sf.restriction == "all" ? class_restriction::all
                                                                    : class_restriction::principal_variables,
                                  sf.budget};
            timer t;
            auto r = find_countermodel(prem, concl, echo.max_n, echo.restriction, {sf.budget, sf.jobs});
            out << verdict_json(r, echo, t.ms(!sf.no_timing)).dump() << "\n";
            return verdict_exit(r.status);
        };
    });

    auto *lentail_cmd = app.add_subcommand("lentail", "search for a countermodel to Γ |- b : ψ");
    lentail_cmd->add_option("query", query_text, "\"p0 : P0 |- p0 : P0 | P1\"")->required();
    lentail_cmd->add_option("--premises", premises_file, "file with one labelled formula per line");
    sf.attach(lentail_cmd, false);
    lentail_cmd->callback([&] {
        action = [&] {
            auto q = split_query(query_text);
            if (!premises_file.empty()) {
                auto extra = read_lines(premises_file);
                q.premises.insert(q.premises.begin(), extra.begin(), extra.end());
            }
            const auto prem = parse_all_labelled(q.premises);
            const auto concl = parse_labelled(q.conclusion);
            const EngineEcho echo{sf.max_n, class_restriction::all, sf.budget};
            timer t;
            auto r = find_labelled_countermodel(prem, concl, echo.max_n, {sf.budget, sf.jobs});
            out << verdict_json(r, echo, t.ms(!sf.no_timing)).dump() << "\n";
            return verdict_exit(r.status);
        };
    });

    // check-proof
    std::string proof_file;
    std::string assumptions_file;
    auto *check_cmd = app.add_subcommand("check-proof", "check a labelled natural deduction proof");
    check_cmd->add_option("proof", proof_file, "proof JSON")->required();
    check_cmd->add_option("--assumptions", assumptions_file, "labelled formulas, one per line or a JSON array");
    check_cmd->callback([&] {
        action = [&] {
            const json doc = json::parse(read_file(proof_file));
            std::vector<LabelledFormula> gamma;
            const json *proof = &doc;
            if (doc.contains("proof")) {
                proof = &doc.at("proof");
                if (doc.contains("assumptions"))
                    for (const auto &a : doc.at("assumptions"))
                        gamma.push_back(parse_labelled(a.get<std::string>()));
            }
            if (!assumptions_file.empty()) {
                const auto text = read_file(assumptions_file);
                const auto first = text.find_first_not_of(" \t\r\n");
                if (first != std::string::npos && text[first] == '[') {
                    for (const auto &a : json::parse(text))
                        gamma.push_back(parse_labelled(a.get<std::string>()));
                } else {
                    for (const auto &line : read_lines(assumptions_file))
                        gamma.push_back(parse_labelled(line));
                }
            }
            const auto d = derivation_from_json(*proof);
            const auto r = check(d, gamma);
            json j = to_json(r);
            j["conclusion"] = to_string(d.conclusion());
            out << j.dump() << "\n";
            return r.ok() ? exit_ok : exit_negative;
        };
    });

    // pt eval / pt entail
    unsigned k = 1;
    auto *pt_cmd = app.add_subcommand("pt", "valuational team semantics");
    pt_cmd->require_subcommand(1);
    auto *pt_eval_cmd = pt_cmd->add_subcommand("eval", "teams satisfying a formula");
    pt_eval_cmd->add_option("--k", k, "number of variables")->required();
    pt_eval_cmd->add_option("formula", expr)->required();
    pt_eval_cmd->callback([&] {
        action = [&] {
            const auto d = pt_eval(parse_formula(expr), k);
            json teams = json::array();
            for (auto t : d.elements())
                teams.push_back(team_to_strings(k, t));
            out << json{{"k", k}, {"teams", teams}}.dump() << "\n";
            return exit_ok;
        };
    });
    auto *pt_entail_cmd = pt_cmd->add_subcommand("entail", "team entailment Δ |- ψ");
    pt_entail_cmd->add_option("--k", k, "number of variables")->required();
    pt_entail_cmd->add_option("query", query_text)->required();
    pt_entail_cmd->callback([&] {
        action = [&] {
            const auto q = split_query(query_text);
            const auto r = pt_entails(parse_all(q.premises), parse_formula(q.conclusion), k);
            out << to_json(r, k).dump() << "\n";
            return r.holds ? exit_ok : exit_negative;
        };
    });

    // bridge verify-f
    std::string hom_file;
    std::size_t depth = 3;
    auto *bridge_cmd = app.add_subcommand("bridge", "relate algebraic and team semantics");
    bridge_cmd->require_subcommand(1);
    auto *verify_cmd = bridge_cmd->add_subcommand("verify-f", "check X ∈ H(φ) iff f*(X) ∈ H_V(φ)");
    verify_cmd->add_option("--hom", hom_file, "homomorphism JSON {\"n\":..,\"assign\":{..}}")->required();
    verify_cmd->add_option("--k", k, "number of variables")->required();
    verify_cmd->add_option("--depth", depth, "largest formula depth (default 3)");
    verify_cmd->callback([&] {
        action = [&] {
            const auto h = homomorphism_from_json(json::parse(read_file(hom_file)));
            const auto r = verify_f_representation(h, k, depth);
            out << to_json(r, k, depth).dump() << "\n";
            return r.holds ? exit_ok : exit_negative;
        };
    });

    // classes principal-check
    std::string denotation_text;
    auto *classes_cmd = app.add_subcommand("classes", "definable classes of homomorphisms");
    classes_cmd->require_subcommand(1);
    auto *principal_cmd = classes_cmd->add_subcommand("principal-check", "is a denotation a principal ideal");
    principal_cmd->add_option("--n", n, "number of atoms of the algebra")->required();
    principal_cmd->add_option("denotation", denotation_text, "[bits,...]")->required();
    principal_cmd->callback([&] {
        action = [&] {
            Homomorphism h(AlgebraSpec::of(n));
            bind_assignment(h, "P0=" + denotation_text);
            const auto &d = h.at(0);
            const auto p = Formula::var(0);
            const bool principal = is_principal_ideal(d);
            const bool valid = eval(h, Formula::int_or(p, Formula::strict_not(p))).is_full();
            out << json{{"principal", principal},
                        {"join", to_bitstring(d.algebra(), join_of(d))},
                        {"excluded_middle_valid", valid}}
                       .dump()
                << "\n";
            return principal ? exit_ok : exit_negative;
        };
    });

    std::ranges::reverse(args);
    try {
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    try {
        if (entail_cmd->parsed() || lentail_cmd->parsed())
            if (entail_cmd->count("--max-n") + lentail_cmd->count("--max-n") == 0)
                sf.max_n = default_max_n();
        return action();
    } catch (const budget_exceeded &e) {
        err << "lt: " << e.what() << "\n";
        return exit_budget;
    } catch (const std::exception &e) {
        err << "lt: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace lt::cli
