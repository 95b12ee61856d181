#include "qct/relation.hpp"

#include <algorithm>
#include <bit>

#include "qct/error.hpp"

namespace qct {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

}  // namespace

CalculusSchema::CalculusSchema(std::string name, std::vector<std::string> symbols,
                               std::vector<Rel> converse, Rel identity)
    : name_(std::move(name)),
      symbols_(std::move(symbols)),
      converse_(std::move(converse)),
      identity_(identity) {
    const std::size_t n = symbols_.size();
    if (n == 0) throw Error("schema " + name_ + ": no relations");
    if (converse_.size() != n) throw Error("schema " + name_ + ": converse has wrong length");
    if (identity_ >= n) throw Error("schema " + name_ + ": identity out of range");
    for (std::size_t i = 0; i < n; ++i) {
        if (symbols_[i].empty()) throw Error("schema " + name_ + ": empty relation symbol");
        if (!lookup_.emplace(symbols_[i], static_cast<Rel>(i)).second)
            throw Error("schema " + name_ + ": duplicate symbol " + symbols_[i]);
        if (converse_[i] >= n || converse_[converse_[i]] != i)
            throw Error("schema " + name_ + ": converse is not an involution at " + symbols_[i]);
    }
    if (converse_[identity_] != identity_)
        throw Error("schema " + name_ + ": identity is not self-converse");
}

std::optional<Rel> CalculusSchema::find(std::string_view symbol) const {
    auto it = lookup_.find(std::string(symbol));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

Rel CalculusSchema::index_of(std::string_view symbol) const {
    if (auto r = find(symbol)) return *r;
    throw Error("unknown " + name_ + " relation symbol '" + std::string(symbol) + "'");
}

bool same_schema(const CalculusSchema& a, const CalculusSchema& b) {
    return &a == &b || (a.name() == b.name() && a.symbols() == b.symbols());
}

void require_same_schema(const CalculusSchema& a, const CalculusSchema& b) {
    if (!same_schema(a, b))
        throw SchemaMismatch("schema mismatch: " + a.name() + " vs " + b.name());
}

RelationSet::RelationSet(SchemaPtr schema)
    : schema_(std::move(schema)), words_(word_count(schema_->size()), 0) {}

RelationSet RelationSet::universal(SchemaPtr schema) {
    RelationSet s(std::move(schema));
    for (std::size_t i = 0; i < s.width(); ++i) s.insert(static_cast<Rel>(i));
    return s;
}

RelationSet RelationSet::singleton(SchemaPtr schema, Rel r) {
    RelationSet s(std::move(schema));
    s.insert(r);
    return s;
}

RelationSet RelationSet::of(SchemaPtr schema, std::initializer_list<Rel> members) {
    RelationSet s(std::move(schema));
    for (Rel r : members) s.insert(r);
    return s;
}

RelationSet RelationSet::parse(SchemaPtr schema, std::string_view symbols) {
    RelationSet s(schema);
    std::size_t pos = 0;
    while (pos <= symbols.size()) {
        std::size_t comma = symbols.find(',', pos);
        if (comma == std::string_view::npos) comma = symbols.size();
        std::string_view tok = symbols.substr(pos, comma - pos);
        if (tok.empty()) throw Error("empty relation symbol in '" + std::string(symbols) + "'");
        if (tok == "*") {
            s |= universal(schema);
        } else {
            s.insert(schema->index_of(tok));
        }
        pos = comma + 1;
    }
    return s;
}

std::size_t RelationSet::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool RelationSet::is_empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<Rel> RelationSet::members() const {
    std::vector<Rel> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            out.push_back(static_cast<Rel>(wi * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

bool RelationSet::subset_of(const RelationSet& other) const {
    require_same_schema(*schema_, *other.schema_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

RelationSet& RelationSet::operator|=(const RelationSet& other) {
    require_same_schema(*schema_, *other.schema_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

RelationSet& RelationSet::operator&=(const RelationSet& other) {
    require_same_schema(*schema_, *other.schema_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

bool operator==(const RelationSet& a, const RelationSet& b) {
    return same_schema(*a.schema_, *b.schema_) && a.words_ == b.words_;
}

std::string RelationSet::to_string() const {
    std::string out;
    for (Rel r : members()) {
        if (!out.empty()) out += ' ';
        out += schema_->symbol(r);
    }
    return out;
}

RelationSet converse_set(const CalculusSchema& schema, const RelationSet& s) {
    require_same_schema(schema, *s.schema());
    RelationSet out(s.schema());
    for (Rel r : s.members()) out.insert(schema.converse(r));
    return out;
}

bool valid_triad(const CalculusSchema& schema, const Triad& t) {
    const auto n = schema.size();
    return t.alpha < n && t.gamma < n && t.beta < n;
}

std::array<Triad, 6> triad_permutations(const CalculusSchema& schema, const Triad& t) {
    const Rel a = t.alpha, b = t.beta, g = t.gamma;
    const Rel ac = schema.converse(a), bc = schema.converse(b), gc = schema.converse(g);
    return {{
        {a, g, b},
        {ac, b, g},
        {g, a, bc},
        {b, ac, gc},
        {bc, gc, ac},
        {gc, bc, a},
    }};
}

std::vector<Triad> seed_identity_triads(const CalculusSchema& schema) {
    const Rel id = schema.identity();
    std::vector<Triad> out;
    for (std::size_t i = 0; i < schema.size(); ++i) {
        const Rel r = static_cast<Rel>(i);
        out.push_back({id, r, r});
        out.push_back({r, r, id});
        out.push_back({r, id, schema.converse(r)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Triad> seed_identity_triads(const CalculusSchema& schema, const RelationSet& relations) {
    require_same_schema(schema, *relations.schema());
    std::vector<Triad> out;
    for (const Triad& t : seed_identity_triads(schema))
        if (relations.contains(t.alpha) && relations.contains(t.gamma) && relations.contains(t.beta))
            out.push_back(t);
    return out;
}

std::string to_string(const CalculusSchema& schema, const Triad& t) {
    return "<" + schema.symbol(t.alpha) + "," + schema.symbol(t.gamma) + "," +
           schema.symbol(t.beta) + ">";
}

}  // namespace qct
