#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qct/ct_io.hpp"
#include "qct/error.hpp"
#include "qct/generator.hpp"
#include "qct/oracle.hpp"
#include "qct/reasoner.hpp"

namespace py = pybind11;

namespace {

using SymTriad = std::tuple<std::string, std::string, std::string>;

SymTriad named(const qct::CalculusSchema& s, const qct::Triad& t) {
    return {s.symbol(t.alpha), s.symbol(t.gamma), s.symbol(t.beta)};
}

std::vector<SymTriad> named(const qct::CalculusSchema& s, const std::vector<qct::Triad>& ts) {
    std::vector<SymTriad> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back(named(s, t));
    return out;
}

qct::Triad parse_triad(const qct::CalculusSchema& s, const std::string& a, const std::string& g,
                       const std::string& b) {
    return {s.index_of(a), s.index_of(g), s.index_of(b)};
}

std::vector<std::string> symbols_of(const qct::RelationSet& r) {
    std::vector<std::string> out;
    for (qct::Rel x : r.members()) out.push_back(r.schema()->symbol(x));
    return out;
}

qct::RelationSet relation_of(const qct::SchemaPtr& s, const std::vector<std::string>& syms) {
    qct::RelationSet r(s);
    for (const auto& x : syms) r.insert(s->index_of(x));
    return r;
}

py::dict stats_dict(const qct::GenStats& st) {
    py::dict d;
    d["loop"] = st.loop;
    d["triad"] = st.triad;
    d["last_found"] = st.last_found ? py::cast(*st.last_found) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_qct, m) {
    m.doc() = "Composition tables of qualitative calculi";

    auto base = py::register_exception<qct::Error>(m, "QctError", PyExc_ValueError);
    py::register_exception<qct::ParseError>(m, "ParseError", base.ptr());
    py::register_exception<qct::SchemaMismatch>(m, "SchemaMismatch", base.ptr());
    py::register_exception<qct::DomainError>(m, "DomainError", base.ptr());
    py::register_exception<qct::BudgetExceeded>(m, "BudgetExceeded", base.ptr());

    py::class_<qct::CalculusSchema, std::shared_ptr<qct::CalculusSchema>>(m, "Schema")
        .def_property_readonly("name", &qct::CalculusSchema::name)
        .def_property_readonly("symbols", &qct::CalculusSchema::symbols)
        .def_property_readonly("identity",
                               [](const qct::CalculusSchema& s) { return s.symbol(s.identity()); })
        .def("converse", [](const qct::CalculusSchema& s, const std::string& r) { return s.symbol(s.converse(s.index_of(r))); })
        .def("__len__", &qct::CalculusSchema::size);

    m.def("schema", [](const std::string& name) { return std::const_pointer_cast<qct::CalculusSchema>(qct::build_schema(name)); },
          py::arg("calculus"));

    py::class_<qct::CompositionTable>(m, "Table")
        .def_property_readonly("schema", [](const qct::CompositionTable& t) {
            return std::const_pointer_cast<qct::CalculusSchema>(t.schema());
        })
        .def("__len__", &qct::CompositionTable::triad_count)
        .def("triads", [](const qct::CompositionTable& t) { return named(*t.schema(), t.triads()); })
        .def("__contains__", [](const qct::CompositionTable& t, const SymTriad& x) {
            return t.contains(parse_triad(*t.schema(), std::get<0>(x), std::get<1>(x), std::get<2>(x)));
        })
        .def("cell", [](const qct::CompositionTable& t, const std::string& a, const std::string& b) {
            return symbols_of(t.cell(t.schema()->index_of(a), t.schema()->index_of(b)));
        }, py::arg("alpha"), py::arg("beta"))
        .def("hits", [](const qct::CompositionTable& t, const std::string& a, const std::string& g, const std::string& b) {
            return t.hits(parse_triad(*t.schema(), a, g, b));
        })
        .def_property_readonly("has_hits", &qct::CompositionTable::has_hits)
        .def("probabilities", [](const qct::CompositionTable& t, const std::string& a, const std::string& b) {
            std::vector<std::pair<std::string, double>> out;
            for (auto [g, p] : qct::composition_probabilities(t, t.schema()->index_of(a), t.schema()->index_of(b)))
                out.emplace_back(t.schema()->symbol(g), p);
            return out;
        })
        .def_property_readonly("provenance", [](const qct::CompositionTable& t) {
            py::dict d;
            for (const auto& [k, v] : t.provenance()) d[py::str(k)] = v;
            return d;
        })
        .def("same_triads", &qct::CompositionTable::same_triads)
        .def("issubset", &qct::CompositionTable::subset_of)
        .def("permutation_closed", [](const qct::CompositionTable& t) { return qct::permutation_closed(t); })
        .def("to_text", [](const qct::CompositionTable& t) { return qct::write_ct(t); })
        .def("save", [](const qct::CompositionTable& t, const std::filesystem::path& p) { qct::write_ct_file(t, p); });

    m.def("read_table", [](const std::string& text) { return qct::read_ct(text); }, py::arg("text"));
    m.def("load_table", [](const std::filesystem::path& p) { return qct::read_ct_file(p); }, py::arg("path"));

    m.def("domain_size", [](const std::string& tok, const std::string& params) {
        return qct::domain_size(qct::DomainSpec::parse(tok, params));
    }, py::arg("domain"), py::arg("params"));

    m.def(
        "generate",
        [](const std::string& tok, const std::string& params, std::optional<std::uint64_t> max_loops,
           std::optional<std::uint64_t> stall, std::optional<std::uint64_t> target, std::uint64_t seed,
           bool converse_shortcut, bool seed_identity, bool hits, bool witnesses, unsigned shards) {
            const auto spec = qct::DomainSpec::parse(tok, params);
            std::vector<qct::TerminationCondition> parts;
            if (max_loops) parts.push_back(qct::TerminationCondition::max_loops(*max_loops));
            if (stall) parts.push_back(qct::TerminationCondition::stall_window(*stall));
            if (target) parts.push_back(qct::TerminationCondition::target_triads(*target));
            const auto psi = parts.empty() ? qct::TerminationCondition::standard()
                                           : qct::TerminationCondition::all_of(parts);
            qct::GenOptions opts{converse_shortcut, seed_identity, hits, witnesses};
            qct::GenResult r = [&] {
                py::gil_scoped_release release;
                return qct::generate_sharded(spec, psi, seed, opts, shards);
            }();
            if (witnesses) qct::verify_witnesses(r.table, spec);
            return py::make_tuple(std::move(r.table), stats_dict(r.stats));
        },
        py::arg("domain"), py::arg("params"), py::kw_only(), py::arg("max_loops") = py::none(),
        py::arg("stall") = py::none(), py::arg("target") = py::none(), py::arg("seed") = 0,
        py::arg("converse_shortcut") = true, py::arg("seed_identity") = true, py::arg("hits") = false,
        py::arg("witnesses") = false, py::arg("shards") = 1);

    m.def(
        "enumerate",
        [](const std::string& tok, const std::string& params, std::uint64_t budget) {
            const auto spec = qct::DomainSpec::parse(tok, params);
            py::gil_scoped_release release;
            return qct::enumerate_ct(spec, budget);
        },
        py::arg("domain"), py::arg("params"), py::kw_only(), py::arg("budget") = qct::default_triple_budget);

    m.def("diff", [](const qct::CompositionTable& a, const qct::CompositionTable& b) {
        const auto d = qct::diff_ct(a, b);
        return py::make_tuple(named(*a.schema(), d.missing), named(*a.schema(), d.extra));
    }, py::arg("a"), py::arg("b"));

    m.def("compose", [](const qct::CompositionTable& t, const std::vector<std::string>& left,
                        const std::vector<std::string>& right) {
        return symbols_of(qct::weak_compose(t, relation_of(t.schema(), left), relation_of(t.schema(), right)));
    }, py::arg("table"), py::arg("left"), py::arg("right"));

    m.def("closure", [](const qct::CompositionTable& t, const std::string& network) -> std::optional<std::string> {
        const auto closed = qct::algebraic_closure(qct::ConstraintNetwork::parse(t.schema(), network), t);
        if (!closed) return std::nullopt;
        return closed->to_text();
    }, py::arg("table"), py::arg("network"), "Closed network text, or None when a label empties.");

    m.def("indu_filter", &qct::indu_candidate_filter, py::arg("ia"), py::arg("pa"));
}
