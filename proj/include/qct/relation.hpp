#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qct {

// Index of a basic relation inside its schema.
using Rel = std::uint16_t;

/// The basic relations of a qualitative calculus: their symbols in a fixed
/// order, the converse permutation and the identity relation.
///
/// Schemas are immutable once built and are shared through
/// `SchemaPtr`. Two schemas are interchangeable when their names and symbol
/// lists agree, see `same_schema`.
class CalculusSchema {
public:
    CalculusSchema(std::string name, std::vector<std::string> symbols,
                   std::vector<Rel> converse, Rel identity);

    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    const std::string& symbol(Rel r) const { return symbols_.at(r); }
    Rel converse(Rel r) const { return converse_.at(r); }
    Rel identity() const noexcept { return identity_; }

    std::optional<Rel> find(std::string_view symbol) const;
    // Throws qct::Error for an unknown symbol.
    Rel index_of(std::string_view symbol) const;

private:
    std::string name_;
    std::vector<std::string> symbols_;
    std::vector<Rel> converse_;
    Rel identity_;
    std::unordered_map<std::string, Rel> lookup_;
};

using SchemaPtr = std::shared_ptr<const CalculusSchema>;

bool same_schema(const CalculusSchema& a, const CalculusSchema& b);
void require_same_schema(const CalculusSchema& a, const CalculusSchema& b);

/// A set of basic relations, i.e. a general relation of the calculus.
class RelationSet {
public:
    explicit RelationSet(SchemaPtr schema);

    static RelationSet empty(SchemaPtr schema) { return RelationSet(std::move(schema)); }
    static RelationSet universal(SchemaPtr schema);
    static RelationSet singleton(SchemaPtr schema, Rel r);
    static RelationSet of(SchemaPtr schema, std::initializer_list<Rel> members);
    // Parses a comma separated symbol list.
    static RelationSet parse(SchemaPtr schema, std::string_view symbols);

    const SchemaPtr& schema() const noexcept { return schema_; }
    std::size_t width() const noexcept { return schema_->size(); }

    bool contains(Rel r) const { return (words_[r >> 6] >> (r & 63)) & 1u; }
    void insert(Rel r) { words_[r >> 6] |= std::uint64_t{1} << (r & 63); }
    void erase(Rel r) { words_[r >> 6] &= ~(std::uint64_t{1} << (r & 63)); }

    std::size_t count() const;
    bool is_empty() const;
    std::vector<Rel> members() const;
    bool subset_of(const RelationSet& other) const;

    RelationSet& operator|=(const RelationSet& other);
    RelationSet& operator&=(const RelationSet& other);
    friend RelationSet operator|(RelationSet a, const RelationSet& b) { return a |= b; }
    friend RelationSet operator&(RelationSet a, const RelationSet& b) { return a &= b; }
    friend bool operator==(const RelationSet& a, const RelationSet& b);

    // Raw words; bits past width() are always zero.
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }
    std::vector<std::uint64_t>& words() noexcept { return words_; }

    // Space separated symbols in schema order.
    std::string to_string() const;

private:
    SchemaPtr schema_;
    std::vector<std::uint64_t> words_;
};

RelationSet converse_set(const CalculusSchema& schema, const RelationSet& s);

/// ⟨alpha, gamma, beta⟩: x alpha y, x gamma z, y beta z is satisfiable.
struct Triad {
    Rel alpha{};
    Rel gamma{};
    Rel beta{};

    friend bool operator==(const Triad&, const Triad&) = default;
    friend auto operator<=>(const Triad&, const Triad&) = default;
};

bool valid_triad(const CalculusSchema& schema, const Triad& t);

/// The six images of a triad under relabelling of its three elements, in
/// the order x y z, y x z, x z y, y z x, z y x, z x y. Duplicates are kept.
std::array<Triad, 6> triad_permutations(const CalculusSchema& schema, const Triad& t);

/// Triads forced by the identity relation:
/// ⟨id,β,β⟩, ⟨α,α,id⟩ and ⟨α,id,α~⟩ for every basic relation. Sorted, unique.
std::vector<Triad> seed_identity_triads(const CalculusSchema& schema);
// Same, restricted to basic relations in `relations` (those a domain realises).
std::vector<Triad> seed_identity_triads(const CalculusSchema& schema, const RelationSet& relations);

std::string to_string(const CalculusSchema& schema, const Triad& t);

}  // namespace qct
