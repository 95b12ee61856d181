#include "qct/generator.hpp"

#include <thread>

#include "domain_models.hpp"
#include "qct/error.hpp"
#include "qct/oracle.hpp"

namespace qct {

TerminationCondition::TerminationCondition(Kind kind, std::uint64_t limit,
                                           std::vector<TerminationCondition> parts)
    : kind_(kind), limit_(limit), parts_(std::move(parts)) {}

TerminationCondition TerminationCondition::max_loops(std::uint64_t limit) {
    if (limit == 0) throw Error("max-loops must be positive");
    return {Kind::max_loops, limit, {}};
}

TerminationCondition TerminationCondition::stall_window(std::uint64_t window) {
    if (window == 0) throw Error("stall window must be positive");
    return {Kind::stall_window, window, {}};
}

TerminationCondition TerminationCondition::target_triads(std::uint64_t count) {
    if (count == 0) throw Error("target triad count must be positive");
    return {Kind::target_triads, count, {}};
}

TerminationCondition TerminationCondition::all_of(std::vector<TerminationCondition> parts) {
    if (parts.empty()) throw Error("empty termination condition");
    if (parts.size() == 1) return parts.front();
    return {Kind::all_of, 0, std::move(parts)};
}

TerminationCondition TerminationCondition::any_of(std::vector<TerminationCondition> parts) {
    if (parts.empty()) throw Error("empty termination condition");
    if (parts.size() == 1) return parts.front();
    return {Kind::any_of, 0, std::move(parts)};
}

TerminationCondition TerminationCondition::standard() {
    return all_of({max_loops(1'000'000), stall_window(100'000)});
}

bool TerminationCondition::keep_going(const GenStats& stats) const {
    switch (kind_) {
        case Kind::max_loops: return stats.loop < limit_;
        case Kind::stall_window: return stats.loop <= stats.last_found.value_or(0) + limit_;
        case Kind::target_triads: return stats.triad < limit_;
        case Kind::all_of:
            for (const auto& p : parts_)
                if (!p.keep_going(stats)) return false;
            return true;
        case Kind::any_of:
            for (const auto& p : parts_)
                if (p.keep_going(stats)) return true;
            return false;
    }
    return false;
}

std::string TerminationCondition::to_string() const {
    switch (kind_) {
        case Kind::max_loops: return "max-loops(" + std::to_string(limit_) + ")";
        case Kind::stall_window: return "stall(" + std::to_string(limit_) + ")";
        case Kind::target_triads: return "target(" + std::to_string(limit_) + ")";
        case Kind::all_of:
        case Kind::any_of: {
            const char* sep = kind_ == Kind::all_of ? "&" : "|";
            std::string out = "(";
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                if (i) out += sep;
                out += parts_[i].to_string();
            }
            return out + ")";
        }
    }
    return "?";
}

namespace {

template <class Model>
GenResult run(const Model& model, const DomainSpec& spec_of_model, const CalculusSchema& schema,
              const SchemaPtr& schema_ptr, const TerminationCondition& psi, std::uint64_t seed,
              const GenOptions& opts) {
    using E = typename Model::element_type;

    if (opts.seed_identity && model.size() < 3)
        throw DomainError("domain has fewer than three elements; cannot draw distinct triples");

    GenResult result{CompositionTable(schema_ptr, opts.record_hits, opts.record_witnesses), GenStats{}};
    CompositionTable& table = result.table;
    GenStats& stats = result.stats;

    if (opts.seed_identity) {
        // Only relations the domain realises: a restricted calculus such as
        // opra2-grid4 lacks the others entirely.
        const auto realized = realized_relations(spec_of_model);
        const auto seeds = realized ? seed_identity_triads(schema, *realized) : seed_identity_triads(schema);
        for (const Triad& t : seeds) table.insert(t, 0);
    }
    stats.triad = table.triad_count();

    Rng rng(seed);
    while (psi.keep_going(stats)) {
        ++stats.loop;
        const E a = model.sample(rng);
        E b = model.sample(rng);
        E c = model.sample(rng);
        if (opts.seed_identity) {
            while (b == a) b = model.sample(rng);
            while (c == a || c == b) c = model.sample(rng);
        }

        const Rel ab = model.relate(a, b);
        const Rel bc = model.relate(b, c);
        const Rel ac = model.relate(a, c);
        Rel ba, cb, ca;
        if (opts.use_converse_shortcut) {
            ba = schema.converse(ab);
            cb = schema.converse(bc);
            ca = schema.converse(ac);
        } else {
            ba = model.relate(b, a);
            cb = model.relate(c, b);
            ca = model.relate(c, a);
        }

        // Triad ⟨ρ(x,y), ρ(x,z), ρ(y,z)⟩ for each ordering (x,y,z) of a,b,c.
        const std::array<Triad, 6> images = {{
            {ab, ac, bc},  // a b c
            {ba, bc, ac},  // b a c
            {ac, ab, cb},  // a c b
            {bc, ba, ca},  // b c a
            {cb, ca, ba},  // c b a
            {ca, cb, ab},  // c a b
        }};

        bool found = false;
        if (opts.record_witnesses) {
            const Element ea(a), eb(b), ec(c);
            const std::array<Witness, 6> triples = {{
                {ea, eb, ec}, {eb, ea, ec}, {ea, ec, eb}, {eb, ec, ea}, {ec, eb, ea}, {ec, ea, eb},
            }};
            for (std::size_t i = 0; i < 6; ++i) found |= table.insert(images[i], triples[i]);
        } else {
            for (const Triad& t : images) found |= table.insert(t);
        }
        if (found) {
            stats.last_found = stats.loop;
            stats.triad = table.triad_count();
        }
    }
    return result;
}

}  // namespace

GenResult generate_ct(const DomainSpec& spec, const TerminationCondition& psi, std::uint64_t seed,
                      const GenOptions& opts) {
    const SchemaPtr schema = build_schema(spec.calculus());
    GenResult result = detail::visit_domain(
        spec, [&](const auto& model) { return run(model, spec, *schema, schema, psi, seed, opts); });

    CompositionTable& t = result.table;
    set_domain_provenance(t, spec);
    t.set_provenance("method", "sample");
    t.set_provenance("rng", "mt19937_64");
    t.set_provenance("seed", std::to_string(seed));
    t.set_provenance("psi", psi.to_string());
    t.set_provenance("converse_shortcut", opts.use_converse_shortcut ? "1" : "0");
    t.set_provenance("seed_identity", opts.seed_identity ? "1" : "0");
    t.set_provenance("hits", opts.record_hits ? "1" : "0");
    t.set_provenance("witnesses", opts.record_witnesses ? "1" : "0");
    t.set_provenance("loops", std::to_string(result.stats.loop));
    t.set_provenance("last_found", std::to_string(result.stats.last_found.value_or(0)));
    return result;
}

GenResult generate_sharded(const DomainSpec& spec, const TerminationCondition& psi, std::uint64_t seed,
                           const GenOptions& opts, unsigned shards) {
    if (shards <= 1) return generate_ct(spec, psi, seed, opts);

    std::vector<std::optional<GenResult>> parts(shards);
    std::vector<std::exception_ptr> errors(shards);
    {
        std::vector<std::jthread> workers;
        for (unsigned i = 0; i < shards; ++i) {
            workers.emplace_back([&, i] {
                try {
                    parts[i].emplace(generate_ct(spec, psi, derive_seed(seed, i), opts));
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<CompositionTable> tables;
    std::vector<GenStats> stats;
    for (auto& p : parts) {
        tables.push_back(std::move(p->table));
        stats.push_back(p->stats);
    }
    CompositionTable merged = merge_tables(tables);
    merged.set_provenance("seed", std::to_string(seed));
    merged.set_provenance("shards", std::to_string(shards));
    GenStats merged_stats = merge_stats(stats, merged);
    return {std::move(merged), merged_stats};
}

CompositionTable merge_tables(const std::vector<CompositionTable>& tables) {
    if (tables.empty()) throw Error("nothing to merge");
    const CompositionTable& first = tables.front();
    const auto domain = domain_of(first);
    CompositionTable merged(first.schema(), first.has_hits(), first.has_witnesses());
    for (const auto& [k, v] : first.provenance()) merged.set_provenance(k, v);

    std::uint64_t loops = 0;
    for (const CompositionTable& t : tables) {
        require_same_schema(*first.schema(), *t.schema());
        if (domain_of(t) != domain)
            throw SchemaMismatch("cannot merge tables generated on different domains");
        merged.merge_from(t);
        if (auto l = t.provenance_value("loops")) loops += std::stoull(*l);
    }
    if (merged.provenance_value("loops")) merged.set_provenance("loops", std::to_string(loops));
    if (merged.provenance_value("last_found")) merged.set_provenance("last_found", "-");
    return merged;
}

GenStats merge_stats(const std::vector<GenStats>& stats, const CompositionTable& merged) {
    GenStats out;
    for (const auto& s : stats) out.loop += s.loop;
    out.triad = merged.triad_count();
    out.last_found.reset();
    return out;
}

std::size_t verify_witnesses(const CompositionTable& table, const DomainSpec& spec) {
    const Domain domain(spec);
    require_same_schema(*domain.schema(), *table.schema());
    std::size_t checked = 0;
    for (const auto& [key, w] : table.witnesses()) {
        const Triad expected = table.triad_at(key);
        const Triad actual{domain.relate(w[0], w[1]), domain.relate(w[0], w[2]), domain.relate(w[1], w[2])};
        if (actual != expected || !table.contains(expected))
            throw Error("witness " + to_string(w[0]) + " " + to_string(w[1]) + " " + to_string(w[2]) +
                        " does not realise " + to_string(*table.schema(), expected));
        ++checked;
    }
    return checked;
}

}  // namespace qct
