#include "lt/json_io.hpp"

#include "lt/error.hpp"

namespace lt {

namespace {

std::string var_name(var_index v) { return "P" + std::to_string(v); }
std::string atom_name(atom_index p) { return "p" + std::to_string(p); }

var_index parse_var_name(const std::string &s) {
    auto f = parse_formula(s);
    if (f.kind() != connective::var)
        throw error("expected a variable name, got '" + s + "'");
    return f.index();
}

atom_index parse_atom_name(const std::string &s) {
    auto a = parse_label(s);
    if (a.kind() != label_kind::atom)
        throw error("expected a label atom, got '" + s + "'");
    return a.index();
}

} // namespace

json to_json(const Denotation &d) { return to_strings(d); }

Denotation denotation_from_json(AlgebraSpec alg, const json &j) {
    if (!j.is_array())
        throw error("a denotation is a list of bit-strings");
    return parse_denotation(alg, j.get<std::vector<std::string>>());
}

json to_json(const Homomorphism &h) {
    json assign = json::object();
    for (const auto &[v, d] : h.assignment())
        assign[var_name(v)] = to_json(d);
    return {{"n", h.algebra().n_atoms}, {"assign", assign}};
}

Homomorphism homomorphism_from_json(const json &j) {
    if (!j.is_object() || !j.contains("n"))
        throw error("a homomorphism needs \"n\" and \"assign\"");
    const auto alg = AlgebraSpec::of(j.at("n").get<unsigned>());
    Homomorphism h(alg);
    if (j.contains("assign"))
        for (const auto &[k, v] : j.at("assign").items())
            h.bind(parse_var_name(k), denotation_from_json(alg, v));
    return h;
}

json to_json(const LabelValuation &h) {
    json out = json::object();
    for (const auto &[p, e] : h.assignment())
        out[atom_name(p)] = to_bitstring(h.algebra(), e);
    return out;
}

std::string_view status_name(search_status s) noexcept {
    switch (s) {
    case search_status::entailed:
        return "entailed_up_to_n";
    case search_status::countermodel:
        return "countermodel";
    case search_status::budget_exceeded:
        return "budget_exceeded";
    }
    return "?";
}

std::string_view name(class_restriction c) noexcept {
    return c == class_restriction::all ? "all" : "principal";
}

const char *const finite_search_note =
    "no countermodel in any algebra 2^n up to n; every finite Boolean algebra is complete, and some "
    "entailments fail only over a non-complete (hence infinite) algebra, so this is not a proof of entailment";

json verdict_json(const SearchReport &r, const EngineEcho &engine, std::int64_t elapsed_ms) {
    json out;
    out["status"] = status_name(r.status);
    out["n"] = r.n;
    out["explored"] = r.explored;
    out["elapsed_ms"] = elapsed_ms;
    out["engine"] = {{"max_n", engine.max_n}, {"class", name(engine.restriction)}, {"budget", engine.budget}};
    if (r.countermodel) {
        json cm = to_json(r.countermodel->hom);
        if (r.countermodel->labels)
            cm["labels"] = to_json(*r.countermodel->labels);
        out["countermodel"] = cm;
        out["witness"] = to_bitstring(r.countermodel->algebra(), r.countermodel->witness);
    }
    if (r.status == search_status::entailed)
        out["note"] = finite_search_note;
    return out;
}

json to_json(const CheckResult &r) {
    if (r.ok())
        return {{"status", "ok"}};
    const auto &v = *r.violation;
    return {{"status", "violation"}, {"reason", name(v.kind)}, {"path", v.path}, {"detail", v.detail}};
}

json to_json(const PtEntailment &r, unsigned k) {
    json out{{"k", k}, {"status", r.holds ? "entailed" : "counter_team"}};
    if (r.counter_team)
        out["team"] = team_to_strings(k, *r.counter_team);
    return out;
}

json to_json(const FRepresentationReport &r, unsigned k, std::size_t depth) {
    json out{{"status", r.holds ? "ok" : "mismatch"},
             {"k", k},
             {"depth", depth},
             {"formulas_checked", r.formulas_checked}};
    if (r.failing_formula)
        out["formula"] = to_string(*r.failing_formula);
    if (r.failing_set)
        out["set"] = r.failing_set->bits;
    return out;
}

Derivation derivation_from_json(const json &j) {
    if (!j.is_object())
        throw error("a proof node must be an object");
    if (j.contains("assume")) {
        if (!j.contains("id") || !j.at("id").is_string())
            throw error("assumption without an id");
        return Derivation::assume(j.at("id").get<std::string>(), parse_labelled(j.at("assume").get<std::string>()));
    }
    if (!j.contains("rule") || !j.contains("conclusion"))
        throw error("a rule node needs \"rule\" and \"conclusion\"");
    const auto rule_text = j.at("rule").get<std::string>();
    const auto rule = parse_rule_name(rule_text);
    if (!rule)
        throw error("unknown rule '" + rule_text + "'");

    std::vector<Derivation> premises;
    if (j.contains("premises"))
        for (const auto &p : j.at("premises"))
            premises.push_back(derivation_from_json(p));
    std::vector<std::vector<std::string>> discharges;
    if (j.contains("discharges"))
        discharges = j.at("discharges").get<std::vector<std::vector<std::string>>>();
    std::vector<atom_index> fresh;
    if (j.contains("fresh"))
        for (const auto &p : j.at("fresh"))
            fresh.push_back(parse_atom_name(p.get<std::string>()));

    return Derivation::rule(*rule, parse_labelled(j.at("conclusion").get<std::string>()), std::move(premises),
                            std::move(discharges), std::move(fresh));
}

json to_json(const Derivation &d) {
    if (d.is_assumption())
        return {{"assume", to_string(d.conclusion())}, {"id", d.id()}};
    json premises = json::array();
    for (const auto &p : d.premises())
        premises.push_back(to_json(p));
    json out{{"rule", name(d.rule_name())}, {"conclusion", to_string(d.conclusion())}, {"premises", premises}};
    if (!d.discharges().empty())
        out["discharges"] = d.discharges();
    if (!d.fresh().empty()) {
        json fresh = json::array();
        for (auto p : d.fresh())
            fresh.push_back(atom_name(p));
        out["fresh"] = fresh;
    }
    return out;
}

} // namespace lt
