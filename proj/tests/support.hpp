#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "qct/calculi.hpp"
#include "qct/table.hpp"

namespace qct::test {

inline SchemaPtr pa_schema() { return build_schema("pa"); }
inline SchemaPtr ia_schema() { return build_schema("ia"); }
inline SchemaPtr rcc8_schema() { return build_schema("rcc8"); }

inline Triad triad(const CalculusSchema& s, const char* a, const char* g, const char* b) {
    return {s.index_of(a), s.index_of(g), s.index_of(b)};
}

// The point algebra table written out by hand, rows alpha, columns beta.
inline CompositionTable pa_reference_table() {
    const SchemaPtr s = pa_schema();
    CompositionTable t(s);
    const char* cells[3][3] = {{"<", "<", "<,=,>"}, {"<", "=", ">"}, {"<,=,>", ">", ">"}};
    for (Rel a = 0; a < 3; ++a)
        for (Rel b = 0; b < 3; ++b)
            for (Rel g : RelationSet::parse(s, cells[a][b]).members()) t.insert({a, g, b});
    return t;
}

// Allen relation from the four endpoint comparisons, looked up by name.
inline std::string ia_by_endpoints(const Interval& x, const Interval& y) {
    auto cmp = [](int p, int q) { return p < q ? '<' : p == q ? '=' : '>'; };
    const std::string key{cmp(x.lo, y.lo), cmp(x.lo, y.hi), cmp(x.hi, y.lo), cmp(x.hi, y.hi)};
    static const std::vector<std::pair<std::string, std::string>> rows = {
        {"<<<<", "b"},  {">>>>", "bi"}, {"<<=<", "m"},  {">=>>", "mi"}, {"<<><", "o"},
        {"><>>", "oi"}, {"=<><", "s"},  {"=<>>", "si"}, {"><><", "d"},  {"<<>>", "di"},
        {"><>=", "f"},  {"<<>=", "fi"}, {"=<>=", "eq"},
    };
    for (const auto& [k, name] : rows)
        if (k == key) return name;
    return "?";
}

// RCC-8 from connection, overlap and (non-tangential) part predicates.
inline std::string rcc8_from_predicates(bool connected, bool overlap, bool a_in_b, bool b_in_a,
                                        bool a_in_interior_b, bool b_in_interior_a) {
    if (!connected) return "DC";
    if (!overlap) return "EC";
    if (a_in_b && b_in_a) return "EQ";
    if (a_in_b) return a_in_interior_b ? "NTPP" : "TPP";
    if (b_in_a) return b_in_interior_a ? "NTPPi" : "TPPi";
    return "PO";
}

// Disks through metric facts about closed balls in the plane.
inline std::string rcc8_disk_reference(const Disk& a, const Disk& b) {
    const double d = std::hypot(double(a.cx - b.cx), double(a.cy - b.cy));
    const double tol = 1e-12;
    const bool connected = d <= a.r + b.r + tol;
    const bool overlap = d < a.r + b.r - tol;
    const bool a_in_b = d + a.r <= b.r + tol;
    const bool b_in_a = d + b.r <= a.r + tol;
    const bool a_in_int_b = d + a.r < b.r - tol;
    const bool b_in_int_a = d + b.r < a.r - tol;
    return rcc8_from_predicates(connected, overlap, a_in_b, b_in_a, a_in_int_b, b_in_int_a);
}

// Boxes through point membership on the half-integer lattice, which
// contains every corner, edge and open cell of integer boxes.
inline std::string rcc8_rect_reference(const Rect& a, const Rect& b, int M) {
    auto in_closed = [](const Rect& r, int hx, int hy) {
        return 2 * r.x1 <= hx && hx <= 2 * r.x2 && 2 * r.y1 <= hy && hy <= 2 * r.y2;
    };
    auto in_open = [](const Rect& r, int hx, int hy) {
        return 2 * r.x1 < hx && hx < 2 * r.x2 && 2 * r.y1 < hy && hy < 2 * r.y2;
    };
    bool connected = false, overlap = false;
    bool a_in_b = true, b_in_a = true, a_in_int_b = true, b_in_int_a = true;
    for (int hx = 0; hx <= 2 * M; ++hx)
        for (int hy = 0; hy <= 2 * M; ++hy) {
            const bool ca = in_closed(a, hx, hy), cb = in_closed(b, hx, hy);
            const bool oa = in_open(a, hx, hy), ob = in_open(b, hx, hy);
            connected |= ca && cb;
            overlap |= oa && ob;
            if (ca && !cb) a_in_b = false;
            if (cb && !ca) b_in_a = false;
            if (ca && !ob) a_in_int_b = false;
            if (cb && !oa) b_in_int_a = false;
        }
    return rcc8_from_predicates(connected, overlap, a_in_b, b_in_a, a_in_int_b, b_in_int_a);
}

}  // namespace qct::test
