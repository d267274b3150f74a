#include "perilink/serialize.hpp"

namespace perilink {

namespace {

template <typename F>
auto parse(const char* what, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad ") + what + " JSON: " + e.what());
    }
}

std::size_t index_field(const Json& j, const char* key) {
    const Int v = j.at(key).get<Int>();
    if (v < 1) throw std::invalid_argument(std::string("index ") + key + " must be positive");
    return static_cast<std::size_t>(v);
}

}  // namespace

Json to_json(const Weight& w) { return Json(std::vector<Int>(w.entries().begin(), w.entries().end())); }

Weight weight_from_json(const Json& j) {
    return parse("weight", [&] { return Weight(j.get<std::vector<Int>>()); });
}

Json to_json(const ParityWeight& pw) { return Json{{"weight", to_json(pw.weight)}, {"parity", pw.parity}}; }

ParityWeight parity_weight_from_json(const Json& j) {
    return parse("parity weight", [&] {
        const int eps = j.at("parity").get<int>();
        if (eps != 0 && eps != 1) throw std::invalid_argument("parity must be 0 or 1");
        return ParityWeight(weight_from_json(j.at("weight")), eps);
    });
}

Json to_json(const Reflection& r) { return Json{{"i", r.i}, {"j", r.j}, {"k", r.k}}; }

Json to_json(const Move& m) {
    Json j{{"kind", kind_name(m.kind)}};
    switch (m.kind) {
    case MoveKind::even_reflection:
        j["i"] = m.reflection.i;
        j["j"] = m.reflection.j;
        j["k"] = m.reflection.k;
        break;
    case MoveKind::donkin_jump:
        j["target"] = m.target ? to_json(*m.target) : Json();
        break;
    case MoveKind::odd_up_2e:
    case MoveKind::odd_down_2e:
        j["j"] = m.index;
        break;
    case MoveKind::odd_up_pair:
    case MoveKind::odd_down_pair:
        j["i"] = m.index;
        break;
    }
    return j;
}

Move move_from_json(const Json& j) {
    return parse("move", [&] {
        const MoveKind kind = kind_from_name(j.at("kind").get<std::string>());
        switch (kind) {
        case MoveKind::even_reflection:
            return Move::even(Reflection{index_field(j, "i"), index_field(j, "j"), j.at("k").get<Int>()});
        case MoveKind::donkin_jump:
            return Move::jump(weight_from_json(j.at("target")));
        case MoveKind::odd_up_2e: return Move::up_2e(index_field(j, "j"));
        case MoveKind::odd_down_2e: return Move::down_2e(index_field(j, "j"));
        case MoveKind::odd_up_pair: return Move::up_pair(index_field(j, "i"));
        case MoveKind::odd_down_pair: return Move::down_pair(index_field(j, "i"));
        }
        throw std::invalid_argument("unknown move kind");
    });
}

std::string_view mode_name(EligibilityMode mode) { return mode == EligibilityMode::strict ? "strict" : "nonstrict"; }

EligibilityMode mode_from_name(std::string_view name) {
    if (name == "strict") return EligibilityMode::strict;
    if (name == "nonstrict") return EligibilityMode::nonstrict;
    throw std::invalid_argument("unknown eligibility mode " + std::string(name));
}

Json to_json(const Certificate& c) {
    Json steps = Json::array();
    for (const Move& m : c.steps) steps.push_back(to_json(m));
    return Json{{"p", c.p}, {"start", to_json(c.start)}, {"steps", steps}, {"end", to_json(c.end)}, {"mode", mode_name(c.mode)}};
}

Certificate certificate_from_json(const Json& j) {
    return parse("certificate", [&] {
        Certificate c{j.at("p").get<Int>(), parity_weight_from_json(j.at("start")), {}, parity_weight_from_json(j.at("end")),
                      EligibilityMode::nonstrict};
        for (const Json& s : j.at("steps")) c.steps.push_back(move_from_json(s));
        if (j.contains("mode")) c.mode = mode_from_name(j.at("mode").get<std::string>());
        return c;
    });
}

Json to_json(const Verification& v) {
    Json j{{"ok", v.ok}};
    if (!v.ok) {
        j["failing_step"] = v.failing_step;
        j["reason"] = v.reason;
    }
    return j;
}

Json to_json(const IrreducibilityVerdict& v) {
    Json pairs = Json::array();
    for (const auto& [u, w] : v.failing_pairs) pairs.push_back({u, w});
    return Json{{"irreducible", v.irreducible}, {"failing_pairs", pairs}};
}

Json to_json(const RecipeRow& row) {
    Json j{{"recipe", recipe_name(row.id)},
           {"a", row.params.a},
           {"i", row.params.i},
           {"n", row.params.n},
           {"p", row.params.p},
           {"status", status_name(row.status)}};
    if (row.status != RecipeStatus::succeeded) {
        j["detail"] = row.detail;
        j["failing_step"] = row.failing_step;
    }
    if (row.certificate) j["certificate"] = to_json(*row.certificate);
    return j;
}

Json to_json(const RecipeReport& report) {
    Json counts = Json::array();
    for (const auto& c : report.counts)
        counts.push_back(
            {{"recipe", recipe_name(c.id)}, {"applicable", c.applicable}, {"succeeded", c.succeeded}, {"failed", c.failed}});
    Json rows = Json::array();
    for (const auto& r : report.rows) rows.push_back(to_json(r));
    return Json{{"failures", report.failures()}, {"counts", counts}, {"rows", rows}};
}

Json to_json(const CensusReport& report) {
    Json reps = Json::array();
    for (const auto& r : report.representatives) reps.push_back(to_json(r));
    Json rows = Json::array();
    for (const auto& r : report.rows)
        rows.push_back({{"key", to_json(r.key)}, {"representative", to_json(r.representative)},
                        {"certificate", to_json(r.certificate)}});
    return Json{{"p", report.p},     {"n", report.n},          {"box", {report.lo, report.hi}},
                {"four_blocks", report.four_blocks()}, {"representatives", reps}, {"rows", rows}};
}

}  // namespace perilink
