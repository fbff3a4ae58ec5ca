#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sck/engine.hpp"
#include "sck/error.hpp"
#include "sck/parser.hpp"
#include "sck/report.hpp"
#include "sck/validate.hpp"

namespace py = pybind11;

namespace {

using namespace sck;

SortMode mode_from(const std::string& name) {
    if (name == "strict") return SortMode::Strict;
    if (name == "lenient") return SortMode::Lenient;
    throw Error(ErrorKind::InvalidArgument, "mode must be 'strict' or 'lenient', got '" + name + "'");
}

Atom atom_from(const std::string& text) {
    auto parsed = parse_atom(text);
    if (auto* e = std::get_if<ParseError>(&parsed)) {
        e->source = "<pattern>";
        throw Error(ErrorKind::InvalidArgument, format_diagnostic(*e));
    }
    return std::get<Atom>(std::move(parsed));
}

Fact fact_from(const KnowledgeBase& kb, const std::string& text) {
    const Atom atom = atom_from(text);
    if (!atom.ground()) throw Error(ErrorKind::InvalidArgument, "expected a ground fact: " + text);
    const auto fact = resolve_fact(kb, atom);
    if (!fact) throw Error(ErrorKind::NotPresent, "not in the knowledge base: " + text);
    return *fact;
}

py::tuple load(const std::vector<std::pair<std::string, std::string>>& documents, const std::string& mode) {
    std::vector<SourceText> docs;
    for (const auto& [name, text] : documents) docs.push_back({name, text});
    LoadResult r = load_documents(docs, mode_from(mode));
    py::list diagnostics;
    for (const Diagnostic& d : r.errors) {
        py::dict entry;
        entry["source"] = d.source;
        entry["line"] = d.span.line;
        entry["column"] = d.span.column_begin;
        entry["message"] = d.message;
        entry["text"] = format_diagnostic(d);
        diagnostics.append(entry);
    }
    if (!r.ok()) return py::make_tuple(py::none(), diagnostics);
    return py::make_tuple(std::move(*r.kb), diagnostics);
}

}  // namespace

PYBIND11_MODULE(_sck, m) {
    m.doc() = "Native core of the sck package; the Python API lives in sck.";

    static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object instance = py::reinterpret_borrow<py::object>(error)(e.what());
            instance.attr("kind") = std::string(error_kind_name(e.kind()));
            PyErr_SetObject(error.ptr(), instance.ptr());
        }
    });

    py::class_<KnowledgeBase>(m, "KnowledgeBase")
        .def("__len__", &KnowledgeBase::size)
        .def_property_readonly("asserted_count", &KnowledgeBase::asserted_count)
        .def(
            "saturate",
            [](KnowledgeBase& kb, std::size_t fact_cap) {
                SaturationOptions options;
                options.fact_cap = fact_cap;
                return to_json(saturate(kb, options)).dump();
            },
            py::arg("fact_cap") = kDefaultFactCap)
        .def(
            "query",
            [](const KnowledgeBase& kb, const std::string& pattern, const std::string& mode) {
                QueryMode qm = QueryMode::Stored;
                if (mode == "virtual") {
                    qm = QueryMode::Virtual;
                } else if (mode != "stored") {
                    throw Error(ErrorKind::InvalidArgument, "query mode must be 'stored' or 'virtual'");
                }
                return to_json(kb, query(kb, atom_from(pattern), qm)).dump();
            },
            py::arg("pattern"), py::arg("mode") = "stored")
        .def("contains",
             [](const KnowledgeBase& kb, const std::string& fact) {
                 const Atom atom = atom_from(fact);
                 const auto f = resolve_fact(kb, atom);
                 return f.has_value() && kb.contains(*f);
             })
        .def("holds",
             [](const KnowledgeBase& kb, const std::string& fact) {
                 const Atom atom = atom_from(fact);
                 if (!atom.ground()) throw Error(ErrorKind::InvalidArgument, "expected a ground fact: " + fact);
                 return !query(kb, atom, QueryMode::Virtual).empty();
             })
        .def("explain",
             [](const KnowledgeBase& kb, const std::string& fact) {
                 return to_json(kb, explain(kb, fact_from(kb, fact))).dump();
             })
        .def("explain_text",
             [](const KnowledgeBase& kb, const std::string& fact) {
                 return tree_text(kb, explain(kb, fact_from(kb, fact)));
             })
        .def("harvest",
             [](const KnowledgeBase& kb, const std::string& level, const std::vector<std::string>& target) {
                 const auto l = harvest_level_from_name(level);
                 if (!l) throw Error(ErrorKind::InvalidArgument, "unknown harvest level '" + level + "'");
                 return to_json(harvest(kb, *l, target)).dump();
             })
        .def("check_sorts", [](const KnowledgeBase& kb) { return to_json(check_sorts(kb)).dump(); })
        .def("check_obligations", [](const KnowledgeBase& kb) { return to_json(check_obligations(kb)).dump(); })
        .def("export", &serialize, py::arg("with_derived") = false);

    m.def("load", &load, py::arg("documents"), py::arg("mode") = "strict");
    m.def("rules", [] { return rules_to_json(catalog()).dump(); });
    m.attr("DEFAULT_FACT_CAP") = kDefaultFactCap;
}
