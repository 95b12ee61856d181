#include "qct/oracle.hpp"

#include "domain_models.hpp"
#include "qct/error.hpp"

namespace qct {

std::vector<Element> enumerate_elements(const DomainSpec& spec) { return Domain(spec).enumerate(); }

std::optional<RelationSet> realized_relations(const DomainSpec& spec, std::uint64_t budget) {
    const SchemaPtr schema = build_schema(spec.calculus());
    const std::uint64_t size = domain_size(spec);
    if (size > 2'000'000 || size * size > budget) return std::nullopt;
    RelationSet out(schema);
    detail::visit_domain(spec, [&](const auto& model) {
        const auto elements = model.enumerate();
        for (const auto& a : elements)
            for (const auto& b : elements) out.insert(model.relate(a, b));
    });
    return out;
}

CompositionTable enumerate_ct(const DomainSpec& spec, std::uint64_t budget) {
    const SchemaPtr schema = build_schema(spec.calculus());
    CompositionTable table(schema);

    const std::uint64_t size = domain_size(spec);
    if (size > 2'000'000 || size * size * size > budget)
        throw BudgetExceeded(spec.token() + " " + spec.params_string() + ": " + std::to_string(size) +
                             "^3 triples exceed the budget of " + std::to_string(budget));

    detail::visit_domain(spec, [&](const auto& model) {
        const auto elements = model.enumerate();
        const std::size_t n = elements.size();

        // All pairwise relations once; the triple scan only reads this matrix.
        std::vector<Rel> rel(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = model.relate(elements[i], elements[j]);

        for (std::size_t a = 0; a < n; ++a) {
            const Rel* from_a = &rel[a * n];
            for (std::size_t b = 0; b < n; ++b) {
                const Rel alpha = from_a[b];
                const Rel* from_b = &rel[b * n];
                for (std::size_t c = 0; c < n; ++c) {
                    const Triad t{alpha, from_a[c], from_b[c]};
                    if (!table.contains(t)) table.insert(t, 0);
                }
            }
        }
    });

    set_domain_provenance(table, spec);
    table.set_provenance("method", "enumerate");
    table.set_provenance("elements", std::to_string(size));
    return table;
}

}  // namespace qct
