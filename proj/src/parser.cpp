#include "sck/parser.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

#include "sck/error.hpp"

namespace sck {

namespace {

enum class Tok { Name, Int, Variable, LParen, RParen, LBracket, RBracket, Comma, Colon, Dot, Bad, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    Span span;
};

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::uint32_t line = 1;
    std::uint32_t col = 1;
    std::size_t i = 0;
    auto emit = [&](Tok kind, std::size_t begin, std::size_t end) {
        const auto width = static_cast<std::uint32_t>(end - begin);
        out.push_back(Token{kind, std::string(text.substr(begin, end - begin)), Span{line, col, col + width}});
        col += width;
        i = end;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
        } else if (name_start(c)) {
            std::size_t j = i + 1;
            while (j < text.size() && name_char(text[j])) ++j;
            emit(Tok::Name, i, j);
        } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                   (c == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            emit(Tok::Int, i, j);
        } else if (c == '?' && i + 1 < text.size() && name_start(text[i + 1])) {
            std::size_t j = i + 2;
            while (j < text.size() && name_char(text[j])) ++j;
            emit(Tok::Variable, i, j);
        } else {
            Tok kind = Tok::Bad;
            switch (c) {
                case '(': kind = Tok::LParen; break;
                case ')': kind = Tok::RParen; break;
                case '[': kind = Tok::LBracket; break;
                case ']': kind = Tok::RBracket; break;
                case ',': kind = Tok::Comma; break;
                case ':': kind = Tok::Colon; break;
                case '.': kind = Tok::Dot; break;
                default: break;
            }
            // Keep multi-byte UTF-8 sequences together in the message.
            std::size_t j = i + 1;
            if (kind == Tok::Bad) {
                while (j < text.size() && (static_cast<unsigned char>(text[j]) & 0xC0) == 0x80) ++j;
            }
            emit(kind, i, j);
        }
    }
    out.push_back(Token{Tok::End, "", Span{line, col, col}});
    return out;
}

struct Failure {
    Span span;
    std::string message;
    std::string expected;
};

Span join(Span a, Span b) {
    if (b.line != a.line) return Span{a.line, a.column_begin, a.column_begin + 1};
    return Span{a.line, a.column_begin, std::max(a.column_end, b.column_end)};
}

bool is_declaration_keyword(std::string_view word) {
    auto sort = sort_from_keyword(word);
    return sort && *sort != Sort::Interval;
}

}  // namespace

// Recursive descent over the token stream of one document.
class StatementParser {
public:
    StatementParser(std::vector<Token> tokens, bool allow_variables)
        : tokens_(std::move(tokens)), allow_variables_(allow_variables) {}

    bool at_end() const { return peek().kind == Tok::End; }
    const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }

    const Token& expect(Tok kind, std::string_view what) {
        const Token& t = peek();
        if (t.kind != kind) fail(t, "unexpected " + found(t), std::string(what));
        ++pos_;
        return t;
    }

    [[noreturn]] static void fail(const Token& at, std::string message, std::string expected) {
        throw Failure{at.span, std::move(message), std::move(expected)};
    }

    static std::string found(const Token& t) {
        if (t.kind == Tok::End) return "end of input";
        return "'" + t.text + "'";
    }

    std::variant<Declaration, FactStatement> statement(Span& span) {
        const Token& first = peek();
        span = first.span;
        if (first.kind != Tok::Name) fail(first, "unexpected " + found(first), "a declaration or fact");
        std::variant<Declaration, FactStatement> node;
        if (is_declaration_keyword(first.text) && peek(1).kind == Tok::Name) {
            node = declaration();
        } else {
            node = FactStatement{atom()};
        }
        const Token& dot = expect(Tok::Dot, "'.' ending the statement");
        span = join(span, dot.span);
        return node;
    }

    Declaration declaration() {
        const Token& keyword = expect(Tok::Name, "declaration keyword");
        Declaration d;
        d.sort = *sort_from_keyword(keyword.text);
        d.name = expect(Tok::Name, "entity name").text;
        if (peek().kind == Tok::Colon) {
            if (d.sort != Sort::InstanceContext) {
                fail(peek(), "only instance_context declarations take ': AbstractContext'", "'.'");
            }
            ++pos_;
            const Token& type = expect(Tok::Name, "abstract context name");
            d.abstract_context = NameArg{type.text, type.span};
        }
        return d;
    }

    Atom atom() {
        const Token& head = expect(Tok::Name, "predicate name");
        auto pred = predicate_from_name(head.text);
        if (!pred) fail(head, "unknown predicate '" + head.text + "'", "predicate name");
        Atom a;
        a.pred = *pred;
        expect(Tok::LParen, "'(' after predicate");
        a.args.push_back(arg());
        while (peek().kind == Tok::Comma) {
            ++pos_;
            a.args.push_back(arg());
        }
        const Token& close = expect(Tok::RParen, "',' or ')'");
        a.span = join(head.span, close.span);
        const PredicateInfo& info = predicate_info(a.pred);
        if (a.args.size() != info.arity) {
            throw Failure{a.span,
                          "arity mismatch: " + head.text + " takes " + std::to_string(info.arity) + " arguments, got " +
                              std::to_string(a.args.size()),
                          std::to_string(info.arity) + " arguments"};
        }
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            const bool wants_interval = info.signature[i] == mask_of(Sort::Interval);
            if (std::holds_alternative<VariableArg>(a.args[i])) continue;
            const bool is_interval = std::holds_alternative<IntervalArg>(a.args[i]);
            if (wants_interval && !is_interval) {
                throw Failure{arg_span(a.args[i]),
                              "argument " + std::to_string(i + 1) + " of " + head.text + " must be an interval",
                              "'[' INT ',' INT ']'"};
            }
            if (!wants_interval && is_interval) {
                throw Failure{arg_span(a.args[i]),
                              "argument " + std::to_string(i + 1) + " of " + head.text + " must be a name", "name"};
            }
        }
        return a;
    }

    Arg arg() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Name: ++pos_; return NameArg{t.text, t.span};
            case Tok::LBracket: return interval();
            case Tok::Variable:
                if (!allow_variables_) fail(t, "variables such as '" + t.text + "' are only allowed in queries", "name");
                ++pos_;
                return VariableArg{t.text.substr(1), t.span};
            default: fail(t, "unexpected " + found(t), "name or interval");
        }
    }

    IntervalArg interval() {
        const Token& open = expect(Tok::LBracket, "'['");
        const Token& lo = expect(Tok::Int, "interval start");
        expect(Tok::Comma, "',' inside interval");
        const Token& hi = expect(Tok::Int, "interval end");
        const Token& close = expect(Tok::RBracket, "']' closing interval");
        const Span span = join(open.span, close.span);
        Interval value{};
        auto parse_int = [&](const Token& tok, std::int64_t& out) {
            auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), out);
            if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
                throw Failure{tok.span, "malformed interval: '" + tok.text + "' is not a 64-bit integer", "integer"};
            }
        };
        parse_int(lo, value.start);
        parse_int(hi, value.end);
        if (!value.valid()) {
            throw Failure{span, "malformed interval: start " + lo.text + " is after end " + hi.text, "start <= end"};
        }
        return IntervalArg{value, span};
    }

    // Skip the rest of a broken statement: up to and including the next '.'
    // on the line where the error was found.
    void recover(std::uint32_t error_line) {
        while (!at_end() && peek().span.line <= error_line) {
            const Tok kind = peek().kind;
            ++pos_;
            if (kind == Tok::Dot) return;
        }
    }

    std::size_t position() const { return pos_; }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    bool allow_variables_;
};

Span arg_span(const Arg& arg) {
    return std::visit([](const auto& a) { return a.span; }, arg);
}

bool Atom::ground() const {
    return std::none_of(args.begin(), args.end(), [](const Arg& a) { return std::holds_alternative<VariableArg>(a); });
}

std::string format_diagnostic(const Diagnostic& d) {
    std::ostringstream os;
    os << d.source << ':' << d.span.line << ':' << d.span.column_begin << ": " << d.message;
    if (!d.expected.empty()) os << " (expected " << d.expected << ')';
    if (d.related) os << " [see line " << d.related->line << ':' << d.related->column_begin << ']';
    return os.str();
}

ParseResult DocumentParser::parse(std::string_view text, std::string source_name) {
    const auto source = static_cast<std::uint32_t>(sources_.size());
    sources_.push_back(source_name);
    ParseResult result;
    StatementParser p(tokenize(text), /*allow_variables=*/false);

    auto report = [&](Span span, std::string message, std::string expected, std::optional<Span> related = {}) {
        result.errors.push_back(Diagnostic{source_name, span, std::move(message), std::move(expected), related});
    };

    while (!p.at_end()) {
        const std::size_t start = p.position();
        Span span;
        std::variant<Declaration, FactStatement> node;
        try {
            node = p.statement(span);
        } catch (const Failure& f) {
            report(f.span, f.message, f.expected);
            p.recover(std::max(f.span.line, p.peek().span.line));
            if (p.position() == start) p.recover(p.peek().span.line);
            continue;
        }

        if (auto* decl = std::get_if<Declaration>(&node)) {
            auto declare = [&](const std::string& name, Sort sort, Span at) -> bool {
                auto [it, inserted] = declared_.try_emplace(name, Seen{sort, source, at});
                if (!inserted && it->second.sort != sort) {
                    report(at,
                           "conflicting declaration: '" + name + "' was declared as " +
                               std::string(sort_keyword(it->second.sort)),
                           std::string(sort_keyword(it->second.sort)), it->second.span);
                    return false;
                }
                return true;
            };
            bool ok = declare(decl->name, decl->sort, span);
            if (ok && decl->abstract_context) {
                ok = declare(decl->abstract_context->text, Sort::AbstractContext, decl->abstract_context->span);
            }
            if (!ok) continue;
        } else if (mode_ == SortMode::Strict) {
            const Atom& atom = std::get<FactStatement>(node).atom;
            bool ok = true;
            for (const Arg& a : atom.args) {
                const auto* name = std::get_if<NameArg>(&a);
                if (name && !declared_.contains(name->text)) {
                    report(name->span, "undeclared entity '" + name->text + "'", "a declaration before first use");
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
        }
        result.statements.push_back(Statement{std::move(node), span, source});
    }
    return result;
}

ParseResult parse_document(std::string_view text, const ParseOptions& options) {
    DocumentParser parser(options.mode);
    return parser.parse(text, options.source_name);
}

std::variant<Atom, ParseError> parse_atom(std::string_view text) {
    StatementParser p(tokenize(text), /*allow_variables=*/true);
    try {
        Atom a = p.atom();
        if (p.peek().kind == Tok::Dot) p.expect(Tok::Dot, "'.'");
        if (!p.at_end()) StatementParser::fail(p.peek(), "unexpected " + StatementParser::found(p.peek()), "end of input");
        return a;
    } catch (const Failure& f) {
        return ParseError{"<query>", f.span, f.message, f.expected, std::nullopt};
    }
}

LoadResult statements_to_kb(std::span<const Statement> statements, std::span<const std::string> sources,
                            SortMode mode) {
    LoadResult result;
    KnowledgeBase kb(mode);
    std::vector<std::uint32_t> source_ids;
    for (const std::string& s : sources) source_ids.push_back(kb.add_source(s));
    auto source_of = [&](std::uint32_t index) -> std::string {
        return index < sources.size() ? sources[index] : std::string("<input>");
    };
    if (source_ids.empty()) source_ids.push_back(kb.add_source("<input>"));

    struct FirstSeen {
        std::uint32_t source;
        Span span;
    };
    std::unordered_map<std::string, FirstSeen> first_declared;

    auto declare = [&](const std::string& name, Sort sort, std::uint32_t source, Span span) {
        try {
            kb.declare_entity(name, sort);
            first_declared.try_emplace(name, FirstSeen{source, span});
        } catch (const Error& e) {
            std::optional<Span> related;
            if (auto it = first_declared.find(name); it != first_declared.end()) related = it->second.span;
            result.errors.push_back(Diagnostic{source_of(source), span, e.what(), "", related});
        }
    };

    for (const Statement& st : statements) {
        if (const auto* d = std::get_if<Declaration>(&st.node)) {
            declare(d->name, d->sort, st.source, st.span);
            if (d->abstract_context) {
                declare(d->abstract_context->text, Sort::AbstractContext, st.source, d->abstract_context->span);
            }
        }
    }

    auto assert_one = [&](const Fact& fact, std::uint32_t source, Span span, const std::vector<Span>& arg_spans) {
        if (mode == SortMode::Strict) {
            if (auto breaches = kb.sort_breaches(fact); !breaches.empty()) {
                const std::size_t pos = breaches.front();
                const Term& bad = kb.term(fact.args[pos]);
                result.errors.push_back(Diagnostic{
                    source_of(source), pos < arg_spans.size() ? arg_spans[pos] : span,
                    "sort violation (" + std::string(predicate_info(fact.pred).axiom_ref) + "): argument " +
                        std::to_string(pos + 1) + " of " + kb.render(fact) + " is " + std::string(sort_keyword(bad.sort)),
                    "", std::nullopt});
                return;
            }
        }
        kb.assert_fact(fact, Asserted{source_ids.at(std::min<std::size_t>(source, source_ids.size() - 1)), span});
    };

    for (const Statement& st : statements) {
        if (const auto* d = std::get_if<Declaration>(&st.node)) {
            if (!d->abstract_context) continue;
            auto c = kb.find_entity(d->name);
            auto type = kb.find_entity(d->abstract_context->text);
            if (c && type) assert_one(Fact(Predicate::InsC, {*c, *type}), st.source, st.span, {st.span, d->abstract_context->span});
            continue;
        }
        const Atom& atom = std::get<FactStatement>(st.node).atom;
        const PredicateInfo& info = predicate_info(atom.pred);
        std::vector<TermId> args;
        std::vector<Span> spans;
        bool ok = true;
        for (std::size_t i = 0; i < atom.args.size() && ok; ++i) {
            const Arg& a = atom.args[i];
            spans.push_back(arg_span(a));
            if (const auto* iv = std::get_if<IntervalArg>(&a)) {
                args.push_back(kb.intern_interval(iv->value));
            } else if (const auto* name = std::get_if<NameArg>(&a)) {
                if (auto id = kb.find_entity(name->text)) {
                    args.push_back(*id);
                    continue;
                }
                const SortMask allowed = info.signature[i];
                if (mode == SortMode::Strict) {
                    result.errors.push_back(Diagnostic{source_of(st.source), name->span,
                                                       "undeclared entity '" + name->text + "'",
                                                       "a declaration before first use", std::nullopt});
                    ok = false;
                } else if (std::popcount(static_cast<unsigned>(allowed)) != 1) {
                    result.errors.push_back(Diagnostic{
                        source_of(st.source), name->span,
                        "cannot infer the sort of '" + name->text + "' (argument " + std::to_string(i + 1) + " of " +
                            std::string(info.name) + " admits several sorts); declare it explicitly",
                        "abstract_context or instance_context declaration", std::nullopt});
                    ok = false;
                } else {
                    const auto sort = static_cast<Sort>(std::countr_zero(static_cast<unsigned>(allowed)));
                    args.push_back(kb.declare_entity(name->text, sort));
                    first_declared.try_emplace(name->text, FirstSeen{st.source, name->span});
                }
            } else {
                result.errors.push_back(Diagnostic{source_of(st.source), arg_span(a),
                                                   "variables are not allowed in facts", "name", std::nullopt});
                ok = false;
            }
        }
        if (ok) assert_one(Fact(atom.pred, args), st.source, st.span, spans);
    }

    if (result.errors.empty()) result.kb.emplace(std::move(kb));
    return result;
}

LoadResult load_documents(std::span<const SourceText> documents, SortMode mode) {
    DocumentParser parser(mode);
    std::vector<Statement> statements;
    std::vector<Diagnostic> errors;
    for (const SourceText& doc : documents) {
        ParseResult r = parser.parse(doc.text, doc.name);
        std::move(r.statements.begin(), r.statements.end(), std::back_inserter(statements));
        std::move(r.errors.begin(), r.errors.end(), std::back_inserter(errors));
    }
    if (!errors.empty()) return LoadResult{std::nullopt, std::move(errors)};
    return statements_to_kb(statements, parser.sources(), mode);
}

std::string serialize(const KnowledgeBase& kb, bool with_derived) {
    std::string out;
    for (TermId id : kb.entities_sorted()) {
        const Term& t = kb.term(id);
        out += sort_keyword(t.sort);
        out += ' ';
        out += t.name;
        out += ".\n";
    }
    const std::vector<FactId> facts = kb.sorted_facts(with_derived);
    if (!out.empty() && !facts.empty()) out += '\n';
    for (FactId id : facts) {
        out += kb.render(kb.fact(id));
        out += ".\n";
    }
    return out;
}

}  // namespace sck
