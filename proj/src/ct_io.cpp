#include "qct/ct_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qct/calculi.hpp"
#include "qct/error.hpp"

namespace qct {

namespace {

constexpr std::string_view magic = "# qct v1";

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto start = s.find_first_not_of(" \t\r", pos);
        if (start == std::string_view::npos) break;
        auto end = s.find_first_of(" \t\r", start);
        if (end == std::string_view::npos) end = s.size();
        out.push_back(s.substr(start, end - start));
        pos = end;
    }
    return out;
}

bool has_space(const std::string& s) { return s.find_first_of(" \t\r\n") != std::string::npos; }

}  // namespace

void write_ct(const CompositionTable& table, std::ostream& out) {
    const CalculusSchema& schema = *table.schema();
    out << magic << '\n';
    out << "calculus: " << schema.name() << '\n';
    out << "relations:";
    for (const auto& s : schema.symbols()) out << ' ' << s;
    out << '\n';
    if (!table.provenance().empty()) {
        out << "provenance:";
        for (const auto& [k, v] : table.provenance()) {
            if (k.empty() || has_space(k) || has_space(v) || k.find('=') != std::string::npos)
                throw Error("provenance entry '" + k + "' cannot be written");
            out << ' ' << k << '=' << v;
        }
        out << '\n';
    }
    out << "table:\n";
    const std::size_t n = table.n();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const RelationSet cell = table.cell(Rel(a), Rel(b));
            if (cell.is_empty()) continue;
            out << schema.symbol(Rel(a)) << " ; " << schema.symbol(Rel(b)) << " ;";
            for (Rel g : cell.members()) {
                out << ' ' << schema.symbol(g);
                if (table.has_hits()) out << '@' << table.hits({Rel(a), g, Rel(b)});
            }
            out << '\n';
        }
    }
}

std::string write_ct(const CompositionTable& table) {
    std::ostringstream out;
    write_ct(table, out);
    return out.str();
}

void write_ct_file(const CompositionTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    write_ct(table, out);
    if (!out) throw Error("failed writing " + path.string());
}

CompositionTable read_ct(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!trim(line).empty()) return true;
        }
        return false;
    };
    auto header = [&](std::string_view key) -> std::string_view {
        std::string_view l = line;
        if (!l.starts_with(key) || l.size() <= key.size() || l[key.size()] != ':')
            throw ParseError(line_no, "expected '" + std::string(key) + ":'");
        return trim(l.substr(key.size() + 1));
    };

    if (!std::getline(in, line)) throw ParseError(1, "empty input");
    ++line_no;
    if (trim(line) != magic) {
        if (trim(line).starts_with("# qct "))
            throw ParseError(line_no, "unsupported format version '" + std::string(trim(line)) + "'");
        throw ParseError(line_no, "not a qct table (missing '# qct v1')");
    }

    if (!next()) throw ParseError(line_no, "missing calculus line");
    SchemaPtr schema;
    try {
        schema = build_schema(header("calculus"));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(line_no, e.what());
    }

    if (!next()) throw ParseError(line_no, "missing relations line");
    const auto listed = split_ws(header("relations"));
    std::vector<Rel> seen(schema->size(), 0);
    for (auto sym : listed) {
        auto r = schema->find(sym);
        if (!r) throw ParseError(line_no, "unknown relation symbol '" + std::string(sym) + "'");
        if (seen[*r]++) throw ParseError(line_no, "relation '" + std::string(sym) + "' listed twice");
    }
    if (listed.size() != schema->size())
        throw ParseError(line_no, "relations line lists " + std::to_string(listed.size()) + " of " +
                                      std::to_string(schema->size()) + " relations");

    if (!next()) throw ParseError(line_no, "missing table line");
    Provenance provenance;
    if (std::string_view(line).starts_with("provenance:")) {
        for (auto kv : split_ws(header("provenance"))) {
            const auto eq = kv.find('=');
            if (eq == std::string_view::npos || eq == 0)
                throw ParseError(line_no, "malformed provenance entry '" + std::string(kv) + "'");
            provenance.emplace_back(std::string(kv.substr(0, eq)), std::string(kv.substr(eq + 1)));
        }
        if (!next()) throw ParseError(line_no, "missing table line");
    }
    if (trim(line) != "table:") throw ParseError(line_no, "expected 'table:'");

    struct Entry {
        Triad triad;
        std::optional<std::uint64_t> hits;
    };
    std::vector<Entry> entries;
    std::vector<char> seen_cell(schema->size() * schema->size(), 0);
    bool any_hits = false;
    auto lookup = [&](std::string_view sym) {
        auto r = schema->find(sym);
        if (!r) throw ParseError(line_no, "unknown relation symbol '" + std::string(sym) + "'");
        return *r;
    };
    while (next()) {
        std::string_view l = line;
        const auto p1 = l.find(';');
        const auto p2 = p1 == std::string_view::npos ? p1 : l.find(';', p1 + 1);
        if (p2 == std::string_view::npos || l.find(';', p2 + 1) != std::string_view::npos)
            throw ParseError(line_no, "expected '<alpha> ; <beta> ; <gamma> ...'");
        const auto alpha_sym = trim(l.substr(0, p1));
        const auto beta_sym = trim(l.substr(p1 + 1, p2 - p1 - 1));
        if (alpha_sym.empty() || beta_sym.empty()) throw ParseError(line_no, "missing cell index");
        const Rel alpha = lookup(alpha_sym);
        const Rel beta = lookup(beta_sym);
        if (seen_cell[alpha * schema->size() + beta]++)
            throw ParseError(line_no, "duplicate cell " + std::string(alpha_sym) + " ; " + std::string(beta_sym));
        const auto gammas = split_ws(l.substr(p2 + 1));
        if (gammas.empty()) throw ParseError(line_no, "empty cell");
        std::vector<char> in_cell(schema->size(), 0);
        for (auto g : gammas) {
            std::optional<std::uint64_t> hits;
            if (const auto at = g.find('@'); at != std::string_view::npos) {
                const std::string count(g.substr(at + 1));
                if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos)
                    throw ParseError(line_no, "malformed hit count in '" + std::string(g) + "'");
                try {
                    hits = std::stoull(count);
                } catch (const std::exception&) {
                    throw ParseError(line_no, "hit count out of range in '" + std::string(g) + "'");
                }
                g = g.substr(0, at);
                any_hits = true;
            }
            const Rel gamma = lookup(g);
            if (in_cell[gamma]++) throw ParseError(line_no, "relation '" + std::string(g) + "' repeated in cell");
            entries.push_back({{alpha, gamma, beta}, hits});
        }
    }

    CompositionTable table(schema, any_hits);
    for (const auto& [k, v] : provenance) table.set_provenance(k, v);
    for (const auto& e : entries) {
        table.insert(e.triad, 0);
        if (e.hits) table.set_hits(e.triad, *e.hits);
    }
    return table;
}

CompositionTable read_ct(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_ct(in);
}

CompositionTable read_ct_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return read_ct(in);
}

CtDiff diff_ct(const CompositionTable& a, const CompositionTable& b) {
    require_same_schema(*a.schema(), *b.schema());
    CtDiff d;
    for (const Triad& t : b.triads())
        if (!a.contains(t)) d.missing.push_back(t);
    for (const Triad& t : a.triads())
        if (!b.contains(t)) d.extra.push_back(t);
    return d;
}

}  // namespace qct
