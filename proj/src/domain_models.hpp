#pragma once

// Typed element models behind Domain. Each model exposes
//   element_type, size(), enumerate(), sample(rng), relate(a, b)
// and is dispatched on with visit_domain().

#include <cmath>
#include <cstdint>
#include <vector>

#include "qct/calculi.hpp"
#include "qct/error.hpp"

namespace qct::detail {

Rel opra_classify(int m, double ax, double ay, double aphi, double bx, double by, double bphi,
                  bool same_position);

struct PointModel {
    using element_type = Point;
    int M;

    std::uint64_t size() const { return static_cast<std::uint64_t>(M); }
    std::vector<Point> enumerate() const {
        std::vector<Point> out;
        for (int v = 0; v < M; ++v) out.push_back({v});
        return out;
    }
    Point sample(Rng& rng) const { return {rng.below(M)}; }
    Rel relate(Point a, Point b) const { return pa_relate(a, b); }
};

// Intervals [p,q] with 0 <= p < q < M; sampled as two distinct grid values.
struct IntervalModel {
    using element_type = Interval;
    int M;
    bool duration;  // INDU instead of IA

    std::uint64_t size() const { return std::uint64_t(M) * std::uint64_t(M - 1) / 2; }
    std::vector<Interval> enumerate() const {
        std::vector<Interval> out;
        for (int p = 0; p < M; ++p)
            for (int q = p + 1; q < M; ++q) out.push_back({p, q});
        return out;
    }
    Interval sample(Rng& rng) const {
        int p = rng.below(M);
        int q = rng.below(M - 1);
        if (q >= p) ++q;
        return p < q ? Interval{p, q} : Interval{q, p};
    }
    Rel relate(const Interval& a, const Interval& b) const {
        return duration ? indu_relate(a, b) : ia_relate(a, b);
    }
};

struct RectModel {
    using element_type = Rect;
    int M;

    std::uint64_t size() const {
        const std::uint64_t pairs = std::uint64_t(M) * std::uint64_t(M - 1) / 2;
        return pairs * pairs;
    }
    std::vector<Rect> enumerate() const {
        std::vector<Interval> sides = IntervalModel{M, false}.enumerate();
        std::vector<Rect> out;
        for (const auto& xs : sides)
            for (const auto& ys : sides) out.push_back({xs.lo, xs.hi, ys.lo, ys.hi});
        return out;
    }
    Rect sample(Rng& rng) const {
        IntervalModel side{M, false};
        Interval xs = side.sample(rng);
        Interval ys = side.sample(rng);
        return {xs.lo, xs.hi, ys.lo, ys.hi};
    }
    Rel relate(const Rect& a, const Rect& b) const { return rcc8_relate_rect(a, b); }
};

struct DiskModel {
    using element_type = Disk;
    int M;

    std::uint64_t size() const { return std::uint64_t(M + 1) * std::uint64_t(M + 1) * std::uint64_t(M); }
    std::vector<Disk> enumerate() const {
        std::vector<Disk> out;
        for (int x = 0; x <= M; ++x)
            for (int y = 0; y <= M; ++y)
                for (int r = 1; r <= M; ++r) out.push_back({x, y, r});
        return out;
    }
    Disk sample(Rng& rng) const {
        const int x = rng.below(M + 1);
        const int y = rng.below(M + 1);
        const int r = 1 + rng.below(M);
        return {x, y, r};
    }
    Rel relate(const Disk& a, const Disk& b) const { return rcc8_relate_disk(a, b); }
};

struct OpraModel {
    using element_type = OPoint;
    int m;
    int M1;
    int M2;
    bool polar;
    std::vector<double> angle_;
    std::vector<double> cos_;
    std::vector<double> sin_;

    OpraModel(int m_, int M1_, int M2_, bool polar_) : m(m_), M1(M1_), M2(M2_), polar(polar_) {
        for (int k = 0; k < M2; ++k) {
            const double a = grid_angle(k, M2);
            angle_.push_back(a);
            cos_.push_back(std::cos(a));
            sin_.push_back(std::sin(a));
        }
    }

    std::uint64_t size() const {
        if (polar) return (1 + std::uint64_t(M1) * std::uint64_t(M2)) * std::uint64_t(M2);
        const std::uint64_t side = 2 * std::uint64_t(M1) + 1;
        return side * side * std::uint64_t(M2);
    }

    std::vector<OPoint> enumerate() const {
        std::vector<OPoint> out;
        if (polar) {
            for (int phi = 0; phi < M2; ++phi) out.push_back(OPoint::polar(0, 0, phi, M2));
            for (int rho = 1; rho <= M1; ++rho)
                for (int theta = 0; theta < M2; ++theta)
                    for (int phi = 0; phi < M2; ++phi)
                        out.push_back(OPoint::polar(rho, theta, phi, M2));
        } else {
            for (int x = -M1; x <= M1; ++x)
                for (int y = -M1; y <= M1; ++y)
                    for (int phi = 0; phi < M2; ++phi)
                        out.push_back(OPoint::cartesian(x, y, phi, M2));
        }
        return out;
    }

    OPoint sample(Rng& rng) const {
        if (polar) {
            const int rho = rng.below(M1 + 1);
            const int theta = rng.below(M2);
            const int phi = rng.below(M2);
            return OPoint::polar(rho, theta, phi, M2);
        }
        const int x = rng.below(2 * M1 + 1) - M1;
        const int y = rng.below(2 * M1 + 1) - M1;
        const int phi = rng.below(M2);
        return OPoint::cartesian(x, y, phi, M2);
    }

    double x_of(const OPoint& p) const { return polar ? p.a * cos_[p.b] : double(p.a); }
    double y_of(const OPoint& p) const { return polar ? p.a * sin_[p.b] : double(p.b); }

    Rel relate(const OPoint& a, const OPoint& b) const {
        return opra_classify(m, x_of(a), y_of(a), angle_[a.orientation], x_of(b), y_of(b),
                             angle_[b.orientation], a.same_position(b));
    }
};

template <class F>
decltype(auto) visit_domain(const DomainSpec& spec, F&& f) {
    spec.validate();
    switch (spec.kind) {
        case DomainKind::pa: return f(PointModel{spec.M});
        case DomainKind::ia: return f(IntervalModel{spec.M, false});
        case DomainKind::indu: return f(IntervalModel{spec.M, true});
        case DomainKind::rcc8_rect: return f(RectModel{spec.M});
        case DomainKind::rcc8_disk: return f(DiskModel{spec.M});
        case DomainKind::opra_cart:
        case DomainKind::opra2_grid4: return f(OpraModel{spec.m, spec.M1, spec.M2, false});
        case DomainKind::opra_polar: return f(OpraModel{spec.m, spec.M1, spec.M2, true});
    }
    throw DomainError("unhandled domain kind");
}

}  // namespace qct::detail
