#include "sck/report.hpp"

#include <sstream>

namespace sck {

namespace {

const char* const kPluralKeys[] = {"events", "norms", "goals", "desires"};

std::string origin(const KnowledgeBase& kb, FactId id) {
    const Provenance& p = kb.provenance(id);
    if (const auto* a = std::get_if<Asserted>(&p)) {
        return kb.source_name(a->source) + ":" + std::to_string(a->span.line) + ":" +
               std::to_string(a->span.column_begin);
    }
    return std::get<Derived>(p).rule_id;
}

void tree_lines(const KnowledgeBase& kb, const DerivationTree& tree, int depth, std::ostringstream& out) {
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << kb.render(kb.fact(tree.fact));
    if (tree.rule_id.empty()) {
        out << "  [asserted " << origin(kb, tree.fact) << "]\n";
    } else {
        out << "  [" << tree.rule_id << "]\n";
    }
    for (const DerivationTree& child : tree.children) tree_lines(kb, child, depth + 1, out);
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

Json to_json(const SaturationStats& stats) {
    Json fires = Json::object();
    for (const auto& [rule, count] : stats.rule_fire_counts) fires[rule] = count;
    return Json{{"rounds", stats.rounds},
                {"facts_asserted", stats.facts_asserted},
                {"facts_derived", stats.facts_derived},
                {"rule_fire_counts", std::move(fires)}};
}

Json to_json(const KnowledgeBase& kb, std::span<const Binding> bindings) {
    Json out = Json::array();
    for (const Binding& b : bindings) {
        Json row = Json::object();
        for (const auto& [var, term] : b.values) row[var] = kb.render(term);
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const KnowledgeBase& kb, const DerivationTree& tree) {
    Json node{{"fact", kb.render(kb.fact(tree.fact))}};
    if (tree.rule_id.empty()) {
        node["asserted"] = origin(kb, tree.fact);
    } else {
        node["rule"] = tree.rule_id;
        Json children = Json::array();
        for (const DerivationTree& child : tree.children) children.push_back(to_json(kb, child));
        node["premises"] = std::move(children);
    }
    return node;
}

Json to_json(const HarvestReport& report) {
    Json out{{"target", report.target}, {"level", std::string(harvest_level_name(report.level))}};
    Json witnesses = Json::object();
    for (std::size_t k = 0; k < report.items.size(); ++k) {
        Json names = Json::array();
        for (const HarvestEntry& e : report.items[k]) {
            names.push_back(e.item);
            witnesses[e.item] = Json{{"players", e.players}, {"contexts", e.contexts}};
        }
        out[kPluralKeys[k]] = std::move(names);
    }
    out["witnesses"] = std::move(witnesses);
    return out;
}

Json to_json(std::span<const Violation> violations) {
    Json out = Json::array();
    for (const Violation& v : violations) {
        Json row{{"severity", v.severity == Severity::Error ? "error" : "warning"},
                 {"id", v.id},
                 {"axiom_ref", v.axiom_ref},
                 {"scope", v.scope}};
        if (v.position) row["position"] = *v.position;
        if (!v.missing.empty()) row["missing"] = v.missing;
        row["message"] = v.message;
        out.push_back(std::move(row));
    }
    return out;
}

Json rules_to_json(const std::vector<Rule>& rules) {
    Json out = Json::array();
    for (const Rule& r : rules) {
        Json premises = Json::array();
        for (const Pattern& p : r.premises) premises.push_back(describe(p, r));
        Json conditions = Json::array();
        for (const Condition& c : r.conditions) conditions.push_back(describe(c, r));
        Json conclusions = Json::array();
        for (const Pattern& p : r.conclusions) conclusions.push_back(describe(p, r));
        out.push_back(Json{{"id", r.id},
                           {"axiom_ref", r.axiom_ref},
                           {"premises", std::move(premises)},
                           {"conditions", std::move(conditions)},
                           {"conclusions", std::move(conclusions)}});
    }
    return out;
}

std::string stats_text(const SaturationStats& stats) {
    std::ostringstream out;
    out << stats.facts_asserted << " asserted, " << stats.facts_derived << " derived, " << stats.rounds
        << (stats.rounds == 1 ? " round\n" : " rounds\n");
    for (const auto& [rule, count] : stats.rule_fire_counts) out << "  " << rule << " " << count << "\n";
    return out.str();
}

std::string bindings_text(const KnowledgeBase& kb, std::span<const Binding> bindings) {
    std::ostringstream out;
    for (const Binding& b : bindings) {
        std::vector<std::string> parts;
        for (const auto& [var, term] : b.values) parts.push_back("?" + var + " = " + kb.render(term));
        out << (parts.empty() ? std::string("true") : join(parts, ", ")) << "\n";
    }
    out << bindings.size() << (bindings.size() == 1 ? " binding\n" : " bindings\n");
    return out.str();
}

std::string tree_text(const KnowledgeBase& kb, const DerivationTree& tree) {
    std::ostringstream out;
    tree_lines(kb, tree, 0, out);
    return out.str();
}

std::string harvest_text(const HarvestReport& report) {
    std::ostringstream out;
    out << harvest_level_name(report.level) << " " << join(report.target, ", ") << "\n";
    for (std::size_t k = 0; k < report.items.size(); ++k) {
        out << kPluralKeys[k] << ":";
        if (report.items[k].empty()) out << " none";
        out << "\n";
        for (const HarvestEntry& e : report.items[k]) {
            out << "  " << e.item;
            if (!e.players.empty()) out << "  from " << join(e.players, ", ");
            if (!e.contexts.empty()) out << "  via " << join(e.contexts, ", ");
            out << "\n";
        }
    }
    return out.str();
}

std::string violations_text(std::span<const Violation> violations) {
    std::ostringstream out;
    for (const Violation& v : violations) out << format_violation(v) << "\n";
    return out.str();
}

std::string rules_text(const std::vector<Rule>& rules) {
    std::ostringstream out;
    for (const Rule& r : rules) {
        std::vector<std::string> lhs;
        for (const Pattern& p : r.premises) lhs.push_back(describe(p, r));
        for (const Condition& c : r.conditions) lhs.push_back(describe(c, r));
        std::vector<std::string> rhs;
        for (const Pattern& p : r.conclusions) rhs.push_back(describe(p, r));
        out << r.id << " (" << r.axiom_ref << "): " << join(lhs, ", ") << " => " << join(rhs, ", ") << "\n";
    }
    return out.str();
}

}  // namespace sck
