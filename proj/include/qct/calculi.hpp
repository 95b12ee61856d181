#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qct/relation.hpp"
#include "qct/rng.hpp"

namespace qct {

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

struct Point {
    int value{};
    friend bool operator==(const Point&, const Point&) = default;
};

// Closed interval [lo, hi], lo < hi.
struct Interval {
    int lo{};
    int hi{};
    int length() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Closed axis-parallel box [x1,x2] x [y1,y2].
struct Rect {
    int x1{}, x2{}, y1{}, y2{};
    friend bool operator==(const Rect&, const Rect&) = default;
};

// Closed disk B((cx,cy), r).
struct Disk {
    int cx{}, cy{}, r{};
    friend bool operator==(const Disk&, const Disk&) = default;
};

/// Oriented point. Angles are indices k on a grid of `grid` steps, meaning
/// k * 2pi / grid. Cartesian positions are (x, y) = (a, b); polar positions are
/// (rho, theta) = (a, b) with theta an angle index and the origin stored as
/// rho = 0, theta = 0.
struct OPoint {
    enum class Frame : std::uint8_t { cartesian, polar };

    Frame frame = Frame::cartesian;
    int a{};
    int b{};
    int orientation{};
    int grid = 1;

    static OPoint cartesian(int x, int y, int orientation, int grid) {
        return {Frame::cartesian, x, y, orientation, grid};
    }
    static OPoint polar(int rho, int theta, int orientation, int grid) {
        return {Frame::polar, rho, rho == 0 ? 0 : theta, orientation, grid};
    }

    bool same_position(const OPoint& o) const { return frame == o.frame && a == o.a && b == o.b; }
    friend bool operator==(const OPoint&, const OPoint&) = default;
};

using Element = std::variant<Point, Interval, Rect, Disk, OPoint>;

std::string to_string(const Element& e);

// ---------------------------------------------------------------------------
// Relation indices. These orders are the published schema orders.
// ---------------------------------------------------------------------------

namespace pa {
inline constexpr Rel lt = 0, eq = 1, gt = 2;
}

namespace ia {
inline constexpr Rel b = 0, bi = 1, m = 2, mi = 3, o = 4, oi = 5, s = 6, si = 7, d = 8, di = 9,
                     f = 10, fi = 11, eq = 12;
inline constexpr std::size_t count = 13;
}  // namespace ia

namespace rcc8 {
inline constexpr Rel DC = 0, EC = 1, PO = 2, TPP = 3, NTPP = 4, TPPi = 5, NTPPi = 6, EQ = 7;
}

namespace indu {
inline constexpr std::size_t count = 25;
// INDU relation for an IA relation refined by a duration comparison (PA
// relation on lengths); nullopt when containment forbids that duration.
std::optional<Rel> combine(Rel ia_rel, Rel pa_rel);
// Inverse of combine.
std::pair<Rel, Rel> split(Rel indu_rel);
}  // namespace indu

namespace opra {
inline constexpr double default_epsilon = 1e-9;
inline std::size_t relation_count(int m) { return std::size_t(4 * m) * std::size_t(4 * m + 1); }
// Index of m∠_s^t (distinct positions).
inline Rel pair_index(int m, int s, int t) { return static_cast<Rel>(s * 4 * m + t); }
// Index of m∠_s (coinciding positions).
inline Rel same_index(int m, int s) { return static_cast<Rel>(16 * m * m + s); }
}  // namespace opra

// ---------------------------------------------------------------------------
// Classification functions
// ---------------------------------------------------------------------------

Rel pa_relate(Point a, Point b);
Rel ia_relate(const Interval& a, const Interval& b);
Rel indu_relate(const Interval& a, const Interval& b);
Rel rcc8_relate_rect(const Rect& a, const Rect& b);
Rel rcc8_relate_disk(const Disk& a, const Disk& b);

/// Sector of the direction `delta` (radians, measured counterclockwise from
/// the own orientation) for granularity m. Rays sit at k*pi/m and get index
/// 2k; the open sector between ray k and ray k+1 gets 2k+1. A direction within
/// `epsilon` of a ray (circular distance) is on that ray.
int opra_sector(int m, double delta, double epsilon = opra::default_epsilon);

// Angle of grid index k on a grid of n steps.
double grid_angle(int k, int n);

/// OPRA_m relation between two oriented points sharing frame and grid.
Rel opra_relate(int m, const OPoint& a, const OPoint& b);

// ---------------------------------------------------------------------------
// Schemas
// ---------------------------------------------------------------------------

/// Schema for a calculus name (pa, ia, indu, rcc8, opra<m>) or for any domain
/// token, which resolves to its calculus. Schemas are cached and shared.
SchemaPtr build_schema(std::string_view calculus);

// ---------------------------------------------------------------------------
// Domains
// ---------------------------------------------------------------------------

enum class DomainKind { pa, ia, indu, rcc8_rect, rcc8_disk, opra_cart, opra_polar, opra2_grid4 };

/// A finite subdomain: the calculus, its element kind and grid parameters.
///   pa:            points 0..M-1
///   ia, indu:      intervals [p,q], 0 <= p < q < M
///   rcc8-rect:     boxes with corners in [0,M)^2
///   rcc8-disk:     centres in [0,M]^2, radii in [1,M]
///   opra{m}-cart:  positions [-M1,M1]^2, M2 orientations
///   opra{m}-polar: rho in [0,M1], M2 position angles, M2 orientations
///   opra2-grid4:   opra2-cart with M2 fixed at 4
struct DomainSpec {
    DomainKind kind = DomainKind::pa;
    int m = 0;  // OPRA granularity
    int M = 0;
    int M1 = 0;
    int M2 = 0;

    // token: pa, ia, indu, rcc8-rect, rcc8-disk, opra<m>-cart, opra<m>-polar,
    // opra2-grid4. params: "M=8" or "M1=4,M2=16" (comma or space separated).
    static DomainSpec parse(std::string_view token, std::string_view params);

    std::string token() const;
    // Parameters as key=value pairs in canonical order.
    std::vector<std::pair<std::string, std::string>> params() const;
    std::string params_string() const;
    std::string calculus() const;

    // Throws DomainError when parameters cannot form any element.
    void validate() const;

    friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

/// Runtime view of a finite subdomain: sampling, enumeration and relating of
/// type-erased elements. The generator and oracle use typed fast paths
/// internally; this class serves tests, bindings and witness checks.
class Domain {
public:
    explicit Domain(DomainSpec spec);

    const DomainSpec& spec() const noexcept { return spec_; }
    const SchemaPtr& schema() const noexcept { return schema_; }

    std::uint64_t size() const;
    std::vector<Element> enumerate() const;
    Element sample(Rng& rng) const;
    Rel relate(const Element& a, const Element& b) const;

private:
    DomainSpec spec_;
    SchemaPtr schema_;
};

std::uint64_t domain_size(const DomainSpec& spec);

}  // namespace qct
