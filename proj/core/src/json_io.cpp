#include "paralogic/json_io.hpp"

#include "paralogic/printer.hpp"

#include <json.hpp>

namespace paralogic {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json formula_to_tree(const formula& f) {
    switch (f.kind()) {
    case connective::atom:
        return {{"tag", "atom"}, {"name", f.atom_name()}};
    case connective::falsum:
        return {{"tag", "falsum"}};
    case connective::negation:
        return {{"tag", "not"}, {"child", formula_to_tree(f.body())}};
    case connective::conjunction:
        return {{"tag", "and"},
                {"lhs", formula_to_tree(f.lhs())},
                {"rhs", formula_to_tree(f.rhs())}};
    case connective::disjunction:
        return {{"tag", "or"},
                {"lhs", formula_to_tree(f.lhs())},
                {"rhs", formula_to_tree(f.rhs())}};
    default:
        return {{"tag", "implies"},
                {"lhs", formula_to_tree(f.lhs())},
                {"rhs", formula_to_tree(f.rhs())}};
    }
}

ordered_json sequent_to_tree(const sequent& s) {
    ordered_json left = ordered_json::array();
    ordered_json right = ordered_json::array();
    for (const formula& f : s.left())
        left.push_back(formula_to_tree(f));
    for (const formula& f : s.right())
        right.push_back(formula_to_tree(f));
    return {{"left", std::move(left)}, {"right", std::move(right)}};
}

ordered_json valuation_to_tree(const valuation& v) {
    ordered_json out = ordered_json::object();
    for (const auto& [atom, value] : v)
        out[atom] = to_string(value);
    return out;
}

ordered_json proof_to_tree(const proof_node& n) {
    ordered_json out;
    out["sequent"] = to_string(n.conclusion());
    if (n.is_leaf()) {
        ordered_json closure;
        closure["kind"] = to_string(n.closed_by().kind);
        if (n.closed_by().witness)
            closure["witness"] = to_string(*n.closed_by().witness);
        out["closure"] = std::move(closure);
    } else {
        out["rule"] = std::string(n.rule());
        out["principal"] = to_string(n.principal());
        ordered_json premises = ordered_json::array();
        for (const proof_node& child : n.premises())
            premises.push_back(proof_to_tree(child));
        out["premises"] = std::move(premises);
    }
    return out;
}

[[noreturn]] void bad_document(const std::string& what) {
    throw parse_error("malformed formula document: " + what, 0, {});
}

formula tree_to_formula(const ordered_json& j) {
    if (!j.is_object() || !j.contains("tag") || !j["tag"].is_string())
        bad_document("expected an object with a \"tag\" field");
    const std::string tag = j["tag"].get<std::string>();
    if (tag == "atom") {
        if (!j.contains("name") || !j["name"].is_string())
            bad_document("atom without a string \"name\"");
        try {
            return formula::atom(j["name"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            bad_document(e.what());
        }
    }
    if (tag == "falsum")
        return formula::falsum();
    if (tag == "not") {
        if (!j.contains("child"))
            bad_document("\"not\" without a \"child\"");
        return ~tree_to_formula(j["child"]);
    }
    if (tag == "and" || tag == "or" || tag == "implies") {
        if (!j.contains("lhs") || !j.contains("rhs"))
            bad_document("\"" + tag + "\" without \"lhs\"/\"rhs\"");
        formula lhs = tree_to_formula(j["lhs"]);
        formula rhs = tree_to_formula(j["rhs"]);
        if (tag == "and")
            return std::move(lhs) & std::move(rhs);
        if (tag == "or")
            return std::move(lhs) | std::move(rhs);
        return std::move(lhs) >> std::move(rhs);
    }
    bad_document("unknown tag \"" + tag + "\"");
}

ordered_json parse_document(std::string_view text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what(), e.byte > 0 ? e.byte - 1 : 0, {});
    }
}

} // namespace

std::string to_json(const formula& f) { return formula_to_tree(f).dump(); }

std::string to_json(const sequent& s) { return sequent_to_tree(s).dump(); }

std::string to_json(const valuation& v) { return valuation_to_tree(v).dump(); }

std::string to_json(const truth_table& table) {
    ordered_json out;
    out["logic"] = std::string(name_of(table.logic));
    out["formula"] = to_string(table.subject);
    out["atoms"] = table.atoms;
    ordered_json rows = ordered_json::array();
    for (const truth_table_row& row : table.rows) {
        ordered_json r;
        r["inputs"] = valuation_to_tree(row.inputs);
        r["value"] = to_string(row.value);
        r["designated"] = row.designated;
        rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    return out.dump();
}

std::string to_json(const proof_node& n) { return proof_to_tree(n).dump(); }

formula formula_from_json(std::string_view text) {
    return tree_to_formula(parse_document(text));
}

sequent sequent_from_json(std::string_view text) {
    ordered_json j = parse_document(text);
    if (!j.is_object() || !j.contains("left") || !j.contains("right") ||
        !j["left"].is_array() || !j["right"].is_array())
        throw parse_error(
            "malformed sequent document: expected {\"left\":[...],"
            "\"right\":[...]}",
            0, {});
    std::vector<formula> left, right;
    for (const ordered_json& f : j["left"])
        left.push_back(tree_to_formula(f));
    for (const ordered_json& f : j["right"])
        right.push_back(tree_to_formula(f));
    return sequent(std::move(left), std::move(right));
}

} // namespace paralogic
