#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "sck/knowledge_base.hpp"

namespace sck {

/// Located message. Parse errors carry an expected-token hint; sort
/// conflicts also point at the earlier declaration.
struct Diagnostic {
    std::string source;
    Span span;
    std::string message;
    std::string expected;
    std::optional<Span> related;
};

using ParseError = Diagnostic;

std::string format_diagnostic(const Diagnostic& d);

struct NameArg {
    std::string text;
    Span span;
};

struct IntervalArg {
    Interval value;
    Span span;
};

/// `?name`, only legal in query patterns.
struct VariableArg {
    std::string name;
    Span span;
};

using Arg = std::variant<NameArg, IntervalArg, VariableArg>;

Span arg_span(const Arg& arg);

struct Atom {
    Predicate pred = Predicate::InsC;
    std::vector<Arg> args;
    Span span;

    bool ground() const;
};

struct Declaration {
    std::string name;
    Sort sort = Sort::Player;
    // `instance_context u : University` names the abstract context here.
    std::optional<NameArg> abstract_context;
};

struct FactStatement {
    Atom atom;
};

struct Statement {
    std::variant<Declaration, FactStatement> node;
    Span span;
    std::uint32_t source = 0;  // index into ParseResult/LoadInput source names
};

struct ParseOptions {
    SortMode mode = SortMode::Strict;
    std::string source_name = "<input>";
};

struct ParseResult {
    std::vector<Statement> statements;
    std::vector<ParseError> errors;

    bool ok() const { return errors.empty(); }
};

/// Parses one or more `.sck` documents that share a declaration scope.
///
/// Each bad statement yields one error and parsing resumes at the next
/// statement. In strict mode a name must be declared before it is used in a
/// fact; conflicting re-declarations are reported in either mode.
class DocumentParser {
public:
    explicit DocumentParser(SortMode mode = SortMode::Strict) : mode_(mode) {}

    ParseResult parse(std::string_view text, std::string source_name);

    const std::vector<std::string>& sources() const { return sources_; }

private:
    struct Seen {
        Sort sort;
        std::uint32_t source;
        Span span;
    };

    SortMode mode_;
    std::vector<std::string> sources_;
    std::unordered_map<std::string, Seen> declared_;

    friend class StatementParser;
};

ParseResult parse_document(std::string_view text, const ParseOptions& options = {});

/// Parses a single atom, optionally terminated by '.', allowing `?var`
/// arguments. Used for queries and for naming facts to explain.
std::variant<Atom, ParseError> parse_atom(std::string_view text);

struct LoadResult {
    std::optional<KnowledgeBase> kb;
    std::vector<Diagnostic> errors;

    bool ok() const { return kb.has_value(); }
};

/// Interns every declaration, then asserts every fact with Asserted
/// provenance. `sources` names the documents statements refer to.
/// In lenient mode undeclared names are declared with the sort their
/// position forces; positions admitting either context sort still need an
/// explicit declaration.
LoadResult statements_to_kb(std::span<const Statement> statements, std::span<const std::string> sources,
                            SortMode mode = SortMode::Strict);

/// Convenience: parse every (name, text) document and load them together.
struct SourceText {
    std::string name;
    std::string text;
};
LoadResult load_documents(std::span<const SourceText> documents, SortMode mode = SortMode::Strict);

/// Canonical text: declarations sorted by name, then facts in canonical
/// order. Only asserted facts unless `with_derived`.
std::string serialize(const KnowledgeBase& kb, bool with_derived = false);

}  // namespace sck
