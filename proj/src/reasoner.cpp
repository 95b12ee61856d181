#include "qct/reasoner.hpp"

#include <deque>
#include <sstream>

#include "qct/calculi.hpp"
#include "qct/error.hpp"

namespace qct {

ConstraintNetwork::ConstraintNetwork(SchemaPtr schema, std::size_t variables, std::size_t max_variables)
    : schema_(std::move(schema)), n_(variables) {
    if (variables == 0) throw Error("network needs at least one variable");
    if (variables > max_variables)
        throw Error("network has " + std::to_string(variables) + " variables; limit is " +
                    std::to_string(max_variables));
    const RelationSet universal = RelationSet::universal(schema_);
    const RelationSet identity = RelationSet::singleton(schema_, schema_->identity());
    labels_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) labels_.push_back(i == j ? identity : universal);
}

void ConstraintNetwork::set_label(std::size_t i, std::size_t j, const RelationSet& r) {
    if (i >= n_ || j >= n_) throw Error("variable index out of range");
    require_same_schema(*schema_, *r.schema());
    if (i == j) {
        labels_[i * n_ + i] = r & converse_set(*schema_, r);
        return;
    }
    labels_[i * n_ + j] = r;
    labels_[j * n_ + i] = converse_set(*schema_, r);
}

bool ConstraintNetwork::constrain(std::size_t i, std::size_t j, const RelationSet& r) {
    const RelationSet before = label(i, j);
    RelationSet next = before & r;
    if (next == before) return false;
    set_label(i, j, next);
    return true;
}

bool ConstraintNetwork::has_empty_label() const {
    for (const auto& l : labels_)
        if (l.is_empty()) return true;
    return false;
}

ConstraintNetwork ConstraintNetwork::parse(SchemaPtr schema, std::string_view text, std::size_t max_variables) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<ConstraintNetwork> net;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        try {
            if (!net) {
                std::size_t n = 0;
                if (first != "vars:" || !(fields >> n))
                    throw Error("expected 'vars: <n>' header");
                net.emplace(schema, n, max_variables);
                continue;
            }
            std::size_t i = 0, j = 0;
            std::string symbols, extra;
            try {
                i = std::stoul(first);
            } catch (const std::exception&) {
                throw Error("expected a variable index, got '" + first + "'");
            }
            if (!(fields >> j >> symbols)) throw Error("expected '<i> <j> <sym>[,<sym>...]'");
            if (fields >> extra) throw Error("trailing text '" + extra + "'");
            if (i >= net->size() || j >= net->size()) throw Error("variable index out of range");
            net->constrain(i, j, RelationSet::parse(schema, symbols));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!net) throw ParseError(line_no, "missing 'vars: <n>' header");
    return *net;
}

std::string ConstraintNetwork::to_text() const {
    std::string out = "vars: " + std::to_string(n_) + "\n";
    const RelationSet universal = RelationSet::universal(schema_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            const RelationSet& l = label(i, j);
            if (l == universal) continue;
            out += std::to_string(i) + " " + std::to_string(j) + " ";
            bool first = true;
            for (Rel r : l.members()) {
                if (!first) out += ',';
                out += schema_->symbol(r);
                first = false;
            }
            out += '\n';
        }
    }
    return out;
}

RelationSet weak_compose(const CompositionTable& table, const RelationSet& a, const RelationSet& b) {
    require_same_schema(*table.schema(), *a.schema());
    require_same_schema(*table.schema(), *b.schema());
    RelationSet out(table.schema());
    auto& words = out.words();
    const std::size_t w = table.words_per_cell();
    const auto rhs = b.members();
    for (Rel alpha : a.members()) {
        for (Rel beta : rhs) {
            const std::uint64_t* cell = table.cell_words(alpha, beta);
            for (std::size_t i = 0; i < w; ++i) words[i] |= cell[i];
        }
    }
    return out;
}

std::optional<ConstraintNetwork> algebraic_closure(const ConstraintNetwork& input, const CompositionTable& table) {
    require_same_schema(*input.schema(), *table.schema());
    ConstraintNetwork net = input;
    if (net.has_empty_label()) return std::nullopt;
    const std::size_t n = net.size();

    std::deque<std::pair<std::size_t, std::size_t>> queue;
    std::vector<char> queued(n * n, 0);
    auto push = [&](std::size_t i, std::size_t j) {
        for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
            if (!queued[x * n + y]) {
                queued[x * n + y] = 1;
                queue.emplace_back(x, y);
            }
        }
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) push(i, j);

    // Refines label(x, z) by label(x, y) ∘w label(y, z).
    auto revise = [&](std::size_t x, std::size_t y, std::size_t z) -> bool {
        const RelationSet composed = weak_compose(table, net.label(x, y), net.label(y, z));
        if (!net.constrain(x, z, composed)) return true;
        if (net.label(x, z).is_empty()) return false;
        push(x, z);
        return true;
    };

    while (!queue.empty()) {
        const auto [i, j] = queue.front();
        queue.pop_front();
        queued[i * n + j] = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (!revise(i, j, k)) return std::nullopt;
            if (!revise(k, i, j)) return std::nullopt;
        }
    }
    return net;
}

bool triangle_is_ct_consistent(const CompositionTable& table, const Triad& t) {
    if (!valid_triad(*table.schema(), t)) throw Error("triad index out of range");
    return table.contains(t);
}

CompositionTable indu_candidate_filter(const CompositionTable& ia_table, const CompositionTable& pa_table) {
    require_same_schema(*ia_table.schema(), *build_schema("ia"));
    require_same_schema(*pa_table.schema(), *build_schema("pa"));
    if (ia_table.triad_count() != 409)
        throw Error("IA table is incomplete: " + std::to_string(ia_table.triad_count()) + " triads, expected 409");
    if (pa_table.triad_count() != 13)
        throw Error("PA table is incomplete: " + std::to_string(pa_table.triad_count()) + " triads, expected 13");

    CompositionTable out(build_schema("indu"));
    const auto pa_triads = pa_table.triads();
    for (const Triad& i : ia_table.triads()) {
        for (const Triad& p : pa_triads) {
            const auto a = indu::combine(i.alpha, p.alpha);
            const auto g = indu::combine(i.gamma, p.gamma);
            const auto b = indu::combine(i.beta, p.beta);
            if (a && g && b) out.insert({*a, *g, *b}, 0);
        }
    }
    out.set_provenance("method", "indu-filter");
    return out;
}

}  // namespace qct
