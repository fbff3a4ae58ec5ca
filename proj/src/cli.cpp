#include "sck/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sck/engine.hpp"
#include "sck/error.hpp"
#include "sck/parser.hpp"
#include "sck/report.hpp"
#include "sck/validate.hpp"

namespace sck::cli {

namespace {

struct Settings {
    std::string mode = "strict";
    std::string format = "text";
    std::optional<std::size_t> fact_cap;
    std::vector<std::string> inputs;

    // check
    bool strict_obligations = false;
    // saturate
    std::string out_path;
    // query / explain
    std::string query_mode = "stored";
    // harvest
    std::string level;
    std::vector<std::string> target;
    // export
    bool with_derived = false;
};

// Signals an exit code after a message has been written.
struct Exit {
    int code;
};

class Runner {
public:
    Runner(const Settings& s, std::ostream& out, std::ostream& err) : s_(s), out_(out), err_(err) {}

    int check() {
        KnowledgeBase kb = load();
        std::vector<Violation> sorts = check_sorts(kb);
        if (!sorts.empty()) {
            emit_violations(sorts);
            throw Exit{kExitInput};
        }
        saturate_kb(kb);
        std::vector<Violation> warnings = check_obligations(kb);
        emit_violations(warnings);
        if (!json()) out_ << "0 errors, " << warnings.size() << (warnings.size() == 1 ? " warning\n" : " warnings\n");
        return s_.strict_obligations && !warnings.empty() ? kExitObligations : kExitOk;
    }

    int saturate() {
        KnowledgeBase kb = load();
        const SaturationStats stats = saturate_kb(kb);
        if (!s_.out_path.empty()) {
            std::ofstream file(s_.out_path, std::ios::binary);
            if (!file) {
                err_ << "error: cannot write '" << s_.out_path << "'\n";
                throw Exit{kExitUsage};
            }
            file << serialize(kb, /*with_derived=*/true);
        }
        if (json()) {
            out_ << to_json(stats).dump(2) << "\n";
        } else {
            out_ << stats_text(stats);
        }
        return kExitOk;
    }

    int query() {
        const auto [paths, pattern] = split_last("pattern");
        const Atom atom = atom_of(pattern);
        KnowledgeBase kb = load(paths);
        saturate_kb(kb);
        const QueryMode mode = s_.query_mode == "virtual" ? QueryMode::Virtual : QueryMode::Stored;
        const std::vector<Binding> bindings = sck::query(kb, atom, mode);
        if (json()) {
            out_ << to_json(kb, bindings).dump(2) << "\n";
        } else {
            out_ << bindings_text(kb, bindings);
        }
        return kExitOk;
    }

    int explain() {
        const auto [paths, text] = split_last("fact");
        const Atom atom = atom_of(text);
        KnowledgeBase kb = load(paths);
        saturate_kb(kb);
        const std::optional<Fact> fact = resolve_fact(kb, atom);
        if (!fact) throw Error(ErrorKind::NotPresent, "fact is not in the knowledge base: " + text);
        const DerivationTree tree = sck::explain(kb, *fact);
        if (json()) {
            out_ << to_json(kb, tree).dump(2) << "\n";
        } else {
            out_ << tree_text(kb, tree);
        }
        return kExitOk;
    }

    int harvest() {
        const std::optional<HarvestLevel> level = harvest_level_from_name(s_.level);
        if (!level) {
            err_ << "error: unknown level '" << s_.level << "' (expected rc, corc, role, cor or context)\n";
            throw Exit{kExitUsage};
        }
        KnowledgeBase kb = load();
        saturate_kb(kb);
        const HarvestReport report = sck::harvest(kb, *level, s_.target);
        if (json()) {
            out_ << to_json(report).dump(2) << "\n";
        } else {
            out_ << harvest_text(report);
        }
        return kExitOk;
    }

    int export_kb() {
        KnowledgeBase kb = load();
        if (s_.with_derived) saturate_kb(kb);
        out_ << serialize(kb, s_.with_derived);
        return kExitOk;
    }

    int export_rules() {
        if (json()) {
            out_ << rules_to_json(catalog()).dump(2) << "\n";
        } else {
            out_ << rules_text(catalog());
        }
        return kExitOk;
    }

private:
    bool json() const { return s_.format == "json"; }

    SortMode sort_mode() const { return s_.mode == "lenient" ? SortMode::Lenient : SortMode::Strict; }

    std::size_t fact_cap() const {
        if (s_.fact_cap) return *s_.fact_cap;
        if (const char* env = std::getenv("SCK_FACT_CAP"); env && *env) {
            try {
                std::size_t used = 0;
                const unsigned long long cap = std::stoull(env, &used);
                if (used == std::char_traits<char>::length(env)) return static_cast<std::size_t>(cap);
            } catch (const std::exception&) {
            }
            err_ << "error: SCK_FACT_CAP must be a non-negative integer\n";
            throw Exit{kExitUsage};
        }
        return kDefaultFactCap;
    }

    std::pair<std::vector<std::string>, std::string> split_last(const char* what) const {
        if (s_.inputs.size() < 2) {
            err_ << "error: expected input files followed by a " << what << "\n";
            throw Exit{kExitUsage};
        }
        std::vector<std::string> paths(s_.inputs.begin(), s_.inputs.end() - 1);
        return {std::move(paths), s_.inputs.back()};
    }

    Atom atom_of(const std::string& text) const {
        auto parsed = parse_atom(text);
        if (auto* e = std::get_if<ParseError>(&parsed)) {
            e->source = "<pattern>";
            err_ << format_diagnostic(*e) << "\n";
            throw Exit{kExitUsage};
        }
        return std::get<Atom>(std::move(parsed));
    }

    KnowledgeBase load() { return load(s_.inputs); }

    KnowledgeBase load(const std::vector<std::string>& paths) {
        if (paths.empty()) {
            err_ << "error: no input files\n";
            throw Exit{kExitUsage};
        }
        std::vector<SourceText> docs;
        for (const std::string& path : paths) {
            std::ifstream file(path, std::ios::binary);
            if (!file) {
                err_ << "error: cannot read '" << path << "'\n";
                throw Exit{kExitUsage};
            }
            docs.push_back({path, std::string(std::istreambuf_iterator<char>(file), {})});
        }
        LoadResult loaded = load_documents(docs, sort_mode());
        if (!loaded.ok()) {
            for (const Diagnostic& d : loaded.errors) err_ << format_diagnostic(d) << "\n";
            throw Exit{kExitInput};
        }
        return std::move(*loaded.kb);
    }

    SaturationStats saturate_kb(KnowledgeBase& kb) {
        SaturationOptions options;
        options.fact_cap = fact_cap();
        return sck::saturate(kb, options);
    }

    void emit_violations(const std::vector<Violation>& violations) {
        if (json()) {
            out_ << to_json(violations).dump(2) << "\n";
        } else {
            out_ << violations_text(violations);
        }
    }

    const Settings& s_;
    std::ostream& out_;
    std::ostream& err_;
};

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SortConflict:
        case ErrorKind::SortViolation:
        case ErrorKind::UnknownEntity:
        case ErrorKind::ResourceLimit:
            return kExitInput;
        case ErrorKind::NotPresent:
        case ErrorKind::UnknownTarget:
        case ErrorKind::UnboundIntervalVariable:
        case ErrorKind::InvalidArgument:
            return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Sorted knowledge bases of social contexts: load, saturate, check, query, explain, harvest.", "sck"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--mode", s.mode, "Sort checking: strict or lenient")
        ->check(CLI::IsMember({"strict", "lenient"}));
    app.add_option("--format", s.format, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--fact-cap", s.fact_cap, "Maximum facts during saturation (default 1000000, env SCK_FACT_CAP)");

    auto* check = app.add_subcommand("check", "Parse, check sorts and report unmet obligations");
    check->add_option("files", s.inputs, "Input .sck files")->required();
    check->add_flag("--strict-obligations", s.strict_obligations, "Exit 1 if any obligation warning is reported");

    auto* saturate = app.add_subcommand("saturate", "Compute the fixpoint and print statistics");
    saturate->add_option("files", s.inputs, "Input .sck files")->required();
    saturate->add_option("--out", s.out_path, "Write the saturated knowledge base to this file");

    auto* query = app.add_subcommand("query", "Answer a pattern such as \"play(Lucy, ?r, u, ?t)\"");
    query->add_option("args", s.inputs, "Input .sck files followed by the pattern")->required();
    query->add_option("--query-mode", s.query_mode, "stored or virtual (temporal closure for play/coPlay)")
        ->check(CLI::IsMember({"stored", "virtual"}));

    auto* explain = app.add_subcommand("explain", "Print the derivation of a stored fact");
    explain->add_option("args", s.inputs, "Input .sck files followed by the fact")->required();

    auto* harvest = app.add_subcommand("harvest", "Report intrinsic information gathered for a target");
    harvest->add_option("files", s.inputs, "Input .sck files")->required();
    harvest->add_option("--level", s.level, "rc, corc, role, cor or context")->required();
    harvest->add_option("--target", s.target, "Comma-separated target names, e.g. doctor,hospital")
        ->required()
        ->delimiter(',');

    auto* export_cmd = app.add_subcommand("export", "Print the knowledge base in canonical form");
    export_cmd->add_option("files", s.inputs, "Input .sck files");
    export_cmd->add_flag("--with-derived", s.with_derived, "Include the saturated fixpoint");

    auto* rules = app.add_subcommand("rules", "Inspect the rule catalog");
    auto* rules_export = rules->add_subcommand("export", "Print every rule with its axiom reference");
    rules->require_subcommand(1);

    std::vector<std::string> argv_storage{"sck"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Runner runner(s, out, err);
    try {
        if (*check) return runner.check();
        if (*saturate) return runner.saturate();
        if (*query) return runner.query();
        if (*explain) return runner.explain();
        if (*harvest) return runner.harvest();
        if (*export_cmd) return runner.export_kb();
        if (*rules_export) return runner.export_rules();
    } catch (const Exit& e) {
        return e.code;
    } catch (const Error& e) {
        err << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e.kind());
    }
    return kExitUsage;
}

}  // namespace sck::cli
