#include "qct/table.hpp"

#include <bit>
#include <limits>

#include "qct/error.hpp"

namespace qct {

std::string to_string(const GenStats& stats) {
    return "Loop=" + std::to_string(stats.loop) + " Triad=" + std::to_string(stats.triad) +
           " LastFound=" + (stats.last_found ? std::to_string(*stats.last_found) : std::string("-"));
}

CompositionTable::CompositionTable(SchemaPtr schema, bool record_hits, bool record_witnesses)
    : schema_(std::move(schema)),
      n_(schema_->size()),
      words_((n_ + 63) / 64),
      cells_(n_ * n_ * words_, 0),
      record_witnesses_(record_witnesses) {
    if (record_hits) hits_.assign(n_ * n_ * n_, 0);
}

bool CompositionTable::insert(const Triad& t, std::uint64_t hits) {
    std::uint64_t& word = cells_[cell_offset(t.alpha, t.beta) + (t.gamma >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (t.gamma & 63);
    const bool fresh = (word & bit) == 0;
    word |= bit;
    if (fresh) ++count_;
    if (!hits_.empty()) {
        std::uint64_t& h = hits_[key(t)];
        h = (h > std::numeric_limits<std::uint64_t>::max() - hits) ? std::numeric_limits<std::uint64_t>::max()
                                                                   : h + hits;
    }
    return fresh;
}

bool CompositionTable::insert(const Triad& t, const Witness& witness, std::uint64_t hits) {
    const bool fresh = insert(t, hits);
    if (record_witnesses_) witnesses_.try_emplace(key(t), witness);
    return fresh;
}

RelationSet CompositionTable::cell(Rel alpha, Rel beta) const {
    if (alpha >= n_ || beta >= n_) throw Error("cell index out of range");
    RelationSet out(schema_);
    const std::uint64_t* w = cell_words(alpha, beta);
    std::copy(w, w + words_, out.words().begin());
    return out;
}

std::uint64_t CompositionTable::recount() const {
    std::uint64_t total = 0;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) total += cell(Rel(a), Rel(b)).count();
    return total;
}

std::vector<Triad> CompositionTable::triads() const {
    std::vector<Triad> out;
    out.reserve(count_);
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) {
            const std::uint64_t* w = cell_words(Rel(a), Rel(b));
            for (std::size_t wi = 0; wi < words_; ++wi) {
                std::uint64_t bits = w[wi];
                while (bits) {
                    const Rel g = static_cast<Rel>(wi * 64 + std::countr_zero(bits));
                    out.push_back({Rel(a), g, Rel(b)});
                    bits &= bits - 1;
                }
            }
        }
    }
    return out;
}

std::uint64_t CompositionTable::hits(const Triad& t) const { return hits_.empty() ? 0 : hits_[key(t)]; }

void CompositionTable::set_hits(const Triad& t, std::uint64_t value) {
    if (hits_.empty()) hits_.assign(n_ * n_ * n_, 0);
    hits_[key(t)] = value;
}

const Witness* CompositionTable::witness(const Triad& t) const {
    auto it = witnesses_.find(key(t));
    return it == witnesses_.end() ? nullptr : &it->second;
}

Triad CompositionTable::triad_at(std::uint64_t k) const {
    const Rel g = static_cast<Rel>(k % n_);
    k /= n_;
    return {static_cast<Rel>(k / n_), g, static_cast<Rel>(k % n_)};
}

void CompositionTable::set_provenance(const std::string& key_, const std::string& value) {
    for (auto& [k, v] : provenance_) {
        if (k == key_) {
            v = value;
            return;
        }
    }
    provenance_.emplace_back(key_, value);
}

std::optional<std::string> CompositionTable::provenance_value(const std::string& key_) const {
    for (const auto& [k, v] : provenance_)
        if (k == key_) return v;
    return std::nullopt;
}

bool CompositionTable::same_triads(const CompositionTable& other) const {
    return same_schema(*schema_, *other.schema_) && cells_ == other.cells_;
}

bool CompositionTable::subset_of(const CompositionTable& other) const {
    require_same_schema(*schema_, *other.schema_);
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i] & ~other.cells_[i]) return false;
    return true;
}

void CompositionTable::merge_from(const CompositionTable& other) {
    require_same_schema(*schema_, *other.schema_);
    for (const Triad& t : other.triads()) insert(t, 0);
    if (other.has_hits()) {
        if (hits_.empty()) hits_.assign(n_ * n_ * n_, 0);
        for (std::size_t i = 0; i < hits_.size(); ++i) {
            const std::uint64_t add = other.hits_[i];
            hits_[i] = hits_[i] > std::numeric_limits<std::uint64_t>::max() - add
                           ? std::numeric_limits<std::uint64_t>::max()
                           : hits_[i] + add;
        }
    }
    if (record_witnesses_)
        for (const auto& [k, w] : other.witnesses_) witnesses_.try_emplace(k, w);
}

std::vector<std::pair<Rel, double>> composition_probabilities(const CompositionTable& table, Rel alpha,
                                                              Rel beta) {
    const auto members = table.cell(alpha, beta).members();
    long double total = 0;
    for (Rel g : members) total += table.hits({alpha, g, beta});
    std::vector<std::pair<Rel, double>> out;
    for (Rel g : members) {
        const auto h = table.hits({alpha, g, beta});
        out.emplace_back(g, total > 0 ? static_cast<double>(h / total) : 0.0);
    }
    return out;
}

void set_domain_provenance(CompositionTable& table, const DomainSpec& spec) {
    table.set_provenance("domain", spec.token());
    for (const auto& [k, v] : spec.params()) table.set_provenance(k, v);
}

std::optional<DomainSpec> domain_of(const CompositionTable& table) {
    auto token = table.provenance_value("domain");
    if (!token) return std::nullopt;
    std::string params;
    for (const char* key : {"M", "M1", "M2"}) {
        if (auto v = table.provenance_value(key)) params += std::string(key) + "=" + *v + ",";
    }
    return DomainSpec::parse(*token, params);
}

bool permutation_closed(const CompositionTable& table) {
    for (const Triad& t : table.triads())
        for (const Triad& p : triad_permutations(*table.schema(), t))
            if (!table.contains(p)) return false;
    return true;
}

}  // namespace qct
