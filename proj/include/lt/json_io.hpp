#pragma once

// JSON interchange for denotations, homomorphisms, verdicts and proof trees.
// Objects use nlohmann::json, whose keys are kept sorted, so serialisation
// is byte-stable.

#include "lt/entailment.hpp"
#include "lt/proofcheck.hpp"
#include "lt/ptplus.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace lt {

using json = nlohmann::json;

json to_json(const Denotation &d);
Denotation denotation_from_json(AlgebraSpec alg, const json &j);

/// {"n": 2, "assign": {"P0": ["00", "01"]}}
json to_json(const Homomorphism &h);
Homomorphism homomorphism_from_json(const json &j);

/// {"p0": "01", ...}
json to_json(const LabelValuation &h);

std::string_view status_name(search_status s) noexcept;
std::string_view name(class_restriction c) noexcept;

struct EngineEcho {
    unsigned max_n = default_max_n;
    class_restriction restriction = class_restriction::all;
    std::uint64_t budget = default_budget;
};

/// Text attached to every entailed_up_to_n verdict.
extern const char *const finite_search_note;

/// {status, n, countermodel?, witness?, note?, explored, elapsed_ms, engine}
json verdict_json(const SearchReport &r, const EngineEcho &engine, std::int64_t elapsed_ms);

/// {"status": "ok"} or {"status": "violation", "reason", "path", "detail"}
json to_json(const CheckResult &r);

/// {"status": "entailed" | "counter_team", "k", "team"?}
json to_json(const PtEntailment &r, unsigned k);

json to_json(const FRepresentationReport &r, unsigned k, std::size_t depth);

/// Proof trees. Rule nodes: {"rule", "conclusion", "premises", "discharges", "fresh"};
/// assumptions: {"assume": "p0 : P0", "id": "u1"}. Throws lt::error on malformed input.
Derivation derivation_from_json(const json &j);
json to_json(const Derivation &d);

} // namespace lt
