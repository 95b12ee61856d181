#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qct/calculi.hpp"
#include "qct/table.hpp"

namespace qct {

/// The loop guard of the sampler: generation continues while it holds.
///   max_loops(L)      Loop < L, i.e. exactly L loops
///   stall_window(w)   Loop <= LastFound + w
///   target_triads(N)  Triad < N
/// all_of / any_of combine guards; all_of stops as soon as one part fails.
class TerminationCondition {
public:
    enum class Kind { max_loops, stall_window, target_triads, all_of, any_of };

    static TerminationCondition max_loops(std::uint64_t limit);
    static TerminationCondition stall_window(std::uint64_t window);
    static TerminationCondition target_triads(std::uint64_t count);
    static TerminationCondition all_of(std::vector<TerminationCondition> parts);
    static TerminationCondition any_of(std::vector<TerminationCondition> parts);

    // max_loops(10^6) and stall_window(10^5).
    static TerminationCondition standard();

    Kind kind() const noexcept { return kind_; }
    std::uint64_t limit() const noexcept { return limit_; }
    const std::vector<TerminationCondition>& parts() const noexcept { return parts_; }

    bool keep_going(const GenStats& stats) const;
    // Compact form without spaces, e.g. "max-loops(1000000)&stall(100000)".
    std::string to_string() const;

private:
    TerminationCondition(Kind kind, std::uint64_t limit, std::vector<TerminationCondition> parts);

    Kind kind_;
    std::uint64_t limit_;
    std::vector<TerminationCondition> parts_;
};

struct GenOptions {
    // Derive the primed relations by converse instead of relating again.
    bool use_converse_shortcut = true;
    // Pre-record the identity triads and draw pairwise distinct elements.
    bool seed_identity = true;
    bool record_hits = false;
    bool record_witnesses = false;
};

struct GenResult {
    CompositionTable table;
    GenStats stats;
};

/// Harvests c-triads from random element triples of the domain until the
/// termination condition fails. Deterministic in (spec, psi, seed, opts).
GenResult generate_ct(const DomainSpec& spec, const TerminationCondition& psi, std::uint64_t seed,
                      const GenOptions& opts = {});

/// Runs `shards` independent generations with seeds derived from `seed` on
/// separate threads and merges them. Relation content does not depend on
/// scheduling.
GenResult generate_sharded(const DomainSpec& spec, const TerminationCondition& psi, std::uint64_t seed,
                           const GenOptions& opts, unsigned shards);

/// Cell-wise union of tables over the same calculus and domain. Hit counts
/// add; the `loops` provenance entry is summed and `last_found` cleared.
CompositionTable merge_tables(const std::vector<CompositionTable>& tables);

// Stats of a merged run: loops summed, triad recounted, last_found cleared.
GenStats merge_stats(const std::vector<GenStats>& stats, const CompositionTable& merged);

// Checks every stored witness re-relates to its triad. Returns the number
// checked; throws qct::Error on the first mismatch.
std::size_t verify_witnesses(const CompositionTable& table, const DomainSpec& spec);

}  // namespace qct
