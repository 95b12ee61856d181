#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qct/calculi.hpp"
#include "qct/relation.hpp"

namespace qct {

/// Counters of one generation run. `last_found` is the loop in which the
/// newest triad first appeared; it is cleared for merged tables.
struct GenStats {
    std::uint64_t loop = 0;
    std::uint64_t triad = 0;
    std::optional<std::uint64_t> last_found = 0;

    friend bool operator==(const GenStats&, const GenStats&) = default;
};

std::string to_string(const GenStats& stats);

using Witness = std::array<Element, 3>;
using Provenance = std::vector<std::pair<std::string, std::string>>;

/// Weak composition table: cell(alpha, beta) holds every gamma such that
/// ⟨alpha, gamma, beta⟩ is a recorded triad. Optionally keeps a hit counter
/// per triad and the first element triple (x, y, z) that produced it, with
/// x alpha y, x gamma z, y beta z.
class CompositionTable {
public:
    explicit CompositionTable(SchemaPtr schema, bool record_hits = false, bool record_witnesses = false);

    const SchemaPtr& schema() const noexcept { return schema_; }
    std::size_t n() const noexcept { return n_; }

    bool contains(const Triad& t) const {
        return (cells_[cell_offset(t.alpha, t.beta) + (t.gamma >> 6)] >> (t.gamma & 63)) & 1u;
    }

    /// Records a triad. Returns true iff it was not present before. The hit
    /// counter (when kept) grows by `hits` either way, saturating at 2^64-1.
    bool insert(const Triad& t, std::uint64_t hits = 1);
    bool insert(const Triad& t, const Witness& witness, std::uint64_t hits = 1);

    RelationSet cell(Rel alpha, Rel beta) const;
    // Raw words of a cell, width words_per_cell().
    const std::uint64_t* cell_words(Rel alpha, Rel beta) const { return &cells_[cell_offset(alpha, beta)]; }
    std::size_t words_per_cell() const noexcept { return words_; }

    std::uint64_t triad_count() const noexcept { return count_; }
    // Counts set bits cell by cell.
    std::uint64_t recount() const;
    // All triads in canonical file order: by alpha, then beta, then gamma.
    std::vector<Triad> triads() const;

    bool has_hits() const noexcept { return !hits_.empty(); }
    std::uint64_t hits(const Triad& t) const;
    void set_hits(const Triad& t, std::uint64_t value);

    bool has_witnesses() const noexcept { return record_witnesses_; }
    const Witness* witness(const Triad& t) const;
    const std::unordered_map<std::uint64_t, Witness>& witnesses() const noexcept { return witnesses_; }
    Triad triad_at(std::uint64_t key) const;

    const Provenance& provenance() const noexcept { return provenance_; }
    void set_provenance(const std::string& key, const std::string& value);
    std::optional<std::string> provenance_value(const std::string& key) const;
    void clear_provenance() { provenance_.clear(); }

    // Same schema and same set of triads.
    bool same_triads(const CompositionTable& other) const;
    // Every triad of this table is in other.
    bool subset_of(const CompositionTable& other) const;

    // Cell-wise union; hit counts add; witnesses keep the first seen.
    void merge_from(const CompositionTable& other);

private:
    std::size_t cell_offset(Rel alpha, Rel beta) const { return (std::size_t(alpha) * n_ + beta) * words_; }
    std::uint64_t key(const Triad& t) const { return (std::uint64_t(t.alpha) * n_ + t.beta) * n_ + t.gamma; }

    SchemaPtr schema_;
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> cells_;
    std::uint64_t count_ = 0;
    std::vector<std::uint64_t> hits_;
    bool record_witnesses_;
    std::unordered_map<std::uint64_t, Witness> witnesses_;
    Provenance provenance_;
};

/// Empirical composition probabilities from hit counts: for each gamma in
/// cell(alpha, beta), hits(alpha, gamma, beta) divided by the cell's total.
std::vector<std::pair<Rel, double>> composition_probabilities(const CompositionTable& table, Rel alpha,
                                                              Rel beta);

// Records the domain token and its parameters as provenance entries.
void set_domain_provenance(CompositionTable& table, const DomainSpec& spec);
// The domain a table was produced on, if its provenance names one.
std::optional<DomainSpec> domain_of(const CompositionTable& table);

// Every triad present has all six permutation images present.
bool permutation_closed(const CompositionTable& table);

}  // namespace qct
