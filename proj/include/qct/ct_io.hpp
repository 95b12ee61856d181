#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qct/table.hpp"

namespace qct {

/// Composition tables in the line-oriented `qct v1` text format:
///
///   # qct v1
///   calculus: <name>
///   relations: <sym> <sym> ...
///   provenance: <key>=<value> ...          (optional)
///   table:
///   <alpha> ; <beta> ; <gamma> <gamma> ...   one line per nonempty cell
///
/// Cells are written row-major by (alpha, beta) in schema order with gammas
/// in schema order; with hit counts each gamma is written `<sym>@<count>`.
/// Files name relations by symbol, so a file written under one relation
/// order reads back under another.
void write_ct(const CompositionTable& table, std::ostream& out);
std::string write_ct(const CompositionTable& table);
void write_ct_file(const CompositionTable& table, const std::filesystem::path& path);

CompositionTable read_ct(std::istream& in);
CompositionTable read_ct(std::string_view text);
CompositionTable read_ct_file(const std::filesystem::path& path);

struct CtDiff {
    std::vector<Triad> missing;  // in b, not in a
    std::vector<Triad> extra;    // in a, not in b
    bool identical() const { return missing.empty() && extra.empty(); }
};

CtDiff diff_ct(const CompositionTable& a, const CompositionTable& b);

}  // namespace qct
