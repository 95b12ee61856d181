#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qct/relation.hpp"
#include "qct/table.hpp"

namespace qct {

inline constexpr std::size_t default_max_variables = 256;

/// Qualitative constraint network: one relation label per ordered pair of
/// variables. Labels on the diagonal start as {id}, all others as the
/// universal relation; label(j, i) is always the converse of label(i, j).
class ConstraintNetwork {
public:
    ConstraintNetwork(SchemaPtr schema, std::size_t variables,
                      std::size_t max_variables = default_max_variables);

    const SchemaPtr& schema() const noexcept { return schema_; }
    std::size_t size() const noexcept { return n_; }

    const RelationSet& label(std::size_t i, std::size_t j) const { return labels_.at(i * n_ + j); }
    // Replaces label(i, j) and its converse.
    void set_label(std::size_t i, std::size_t j, const RelationSet& r);
    // Intersects label(i, j) with r. Returns true if the label shrank.
    bool constrain(std::size_t i, std::size_t j, const RelationSet& r);

    bool has_empty_label() const;

    /// Text form:
    ///   vars: <n>
    ///   <i> <j> <sym>[,<sym>...]
    /// Unlisted pairs are universal; repeated pairs intersect; '#' starts a
    /// comment.
    static ConstraintNetwork parse(SchemaPtr schema, std::string_view text,
                                   std::size_t max_variables = default_max_variables);
    // Writes every pair i < j whose label is not universal.
    std::string to_text() const;

    friend bool operator==(const ConstraintNetwork& a, const ConstraintNetwork& b) {
        return a.n_ == b.n_ && a.labels_ == b.labels_;
    }

private:
    SchemaPtr schema_;
    std::size_t n_;
    std::vector<RelationSet> labels_;
};

/// Union of cell(alpha, beta) over alpha in a, beta in b.
RelationSet weak_compose(const CompositionTable& table, const RelationSet& a, const RelationSet& b);

/// Applies label(i,j) <- label(i,j) ∩ label(i,k) ∘w label(k,j) until nothing
/// changes. Returns the refined network, or nullopt when a label empties.
/// This is algebraic closure only; a closed network need not be consistent.
std::optional<ConstraintNetwork> algebraic_closure(const ConstraintNetwork& net, const CompositionTable& table);

/// True iff gamma is in cell(alpha, beta).
bool triangle_is_ct_consistent(const CompositionTable& table, const Triad& t);

/// Candidate INDU triads ⟨α^p, γ^q, β^r⟩: ⟨α,γ,β⟩ in the IA table,
/// ⟨p,q,r⟩ in the PA table, and all three refined symbols valid INDU
/// relations. Both input tables must be complete (409 and 13 triads).
CompositionTable indu_candidate_filter(const CompositionTable& ia_table, const CompositionTable& pa_table);

}  // namespace qct
