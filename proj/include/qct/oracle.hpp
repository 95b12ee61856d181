#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qct/calculi.hpp"
#include "qct/table.hpp"

namespace qct {

inline constexpr std::uint64_t default_triple_budget = 2'000'000'000ULL;

// Every element of the finite domain, in a fixed order.
std::vector<Element> enumerate_elements(const DomainSpec& spec);

inline constexpr std::uint64_t default_pair_budget = 200'000'000ULL;

/// Basic relations that hold between some pair of domain elements, or
/// nullopt when |D|^2 exceeds `budget`.
std::optional<RelationSet> realized_relations(const DomainSpec& spec,
                                              std::uint64_t budget = default_pair_budget);

/// Exact composition table of the calculus restricted to the domain: gamma is
/// in cell(alpha, beta) iff some triple (a, b, c) of domain elements has
/// a alpha b, b beta c, a gamma c. Throws BudgetExceeded when |D|^3 exceeds
/// `budget`.
CompositionTable enumerate_ct(const DomainSpec& spec, std::uint64_t budget = default_triple_budget);

}  // namespace qct
