#include "qct/calculi.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "domain_models.hpp"
#include "qct/error.hpp"

namespace qct {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

int cmp(int a, int b) { return (a > b) - (a < b); }

// Allowed duration comparisons per IA relation, as bit masks over {<,=,>}.
constexpr std::array<unsigned, ia::count> indu_durations = {
    7, 7,  // b bi
    7, 7,  // m mi
    7, 7,  // o oi
    1, 4,  // s si
    1, 4,  // d di
    1, 4,  // f fi
    2,     // eq
};

struct InduTables {
    std::array<std::array<int, 3>, ia::count> index{};
    std::array<std::pair<Rel, Rel>, indu::count> parts{};

    InduTables() {
        int next = 0;
        for (std::size_t r = 0; r < ia::count; ++r) {
            for (Rel p = 0; p < 3; ++p) {
                if (indu_durations[r] & (1u << p)) {
                    index[r][p] = next;
                    parts[next] = {static_cast<Rel>(r), p};
                    ++next;
                } else {
                    index[r][p] = -1;
                }
            }
        }
    }
};

const InduTables& indu_tables() {
    static const InduTables tables;
    return tables;
}

const std::array<const char*, ia::count> ia_symbols = {"b", "bi", "m", "mi", "o",  "oi", "s",
                                                       "si", "d", "di", "f", "fi", "eq"};
const std::array<const char*, 3> pa_symbols = {"<", "=", ">"};

SchemaPtr make_pa() {
    return std::make_shared<const CalculusSchema>(
        "pa", std::vector<std::string>{"<", "=", ">"}, std::vector<Rel>{pa::gt, pa::eq, pa::lt}, pa::eq);
}

std::vector<Rel> ia_converse() {
    std::vector<Rel> conv(ia::count);
    for (Rel r = 0; r < 12; ++r) conv[r] = r ^ 1;
    conv[ia::eq] = ia::eq;
    return conv;
}

SchemaPtr make_ia() {
    return std::make_shared<const CalculusSchema>(
        "ia", std::vector<std::string>(ia_symbols.begin(), ia_symbols.end()), ia_converse(), ia::eq);
}

SchemaPtr make_indu() {
    const auto conv_ia = ia_converse();
    const std::array<Rel, 3> conv_pa = {pa::gt, pa::eq, pa::lt};
    std::vector<std::string> symbols;
    std::vector<Rel> conv;
    for (Rel r = 0; r < indu::count; ++r) {
        auto [i, p] = indu::split(r);
        symbols.push_back(std::string(ia_symbols[i]) + pa_symbols[p]);
        conv.push_back(*indu::combine(conv_ia[i], conv_pa[p]));
    }
    return std::make_shared<const CalculusSchema>("indu", std::move(symbols), std::move(conv),
                                                  *indu::combine(ia::eq, pa::eq));
}

SchemaPtr make_rcc8() {
    return std::make_shared<const CalculusSchema>(
        "rcc8", std::vector<std::string>{"DC", "EC", "PO", "TPP", "NTPP", "TPPi", "NTPPi", "EQ"},
        std::vector<Rel>{rcc8::DC, rcc8::EC, rcc8::PO, rcc8::TPPi, rcc8::NTPPi, rcc8::TPP, rcc8::NTPP,
                         rcc8::EQ},
        rcc8::EQ);
}

// OPRA_m: m∠_s^t is written "s_t", m∠_s is written "s".
SchemaPtr make_opra(int m) {
    const int q = 4 * m;
    std::vector<std::string> symbols(opra::relation_count(m));
    std::vector<Rel> conv(opra::relation_count(m));
    for (int s = 0; s < q; ++s) {
        for (int t = 0; t < q; ++t) {
            symbols[opra::pair_index(m, s, t)] = std::to_string(s) + "_" + std::to_string(t);
            conv[opra::pair_index(m, s, t)] = opra::pair_index(m, t, s);
        }
    }
    for (int s = 0; s < q; ++s) {
        symbols[opra::same_index(m, s)] = std::to_string(s);
        conv[opra::same_index(m, s)] = opra::same_index(m, (q - s) % q);
    }
    return std::make_shared<const CalculusSchema>("opra" + std::to_string(m), std::move(symbols),
                                                  std::move(conv), opra::same_index(m, 0));
}

std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

// "opra<m>" prefix of a token; returns m and the remainder.
std::optional<std::pair<int, std::string_view>> split_opra(std::string_view token) {
    if (!token.starts_with("opra")) return std::nullopt;
    std::string_view rest = token.substr(4);
    std::size_t digits = 0;
    while (digits < rest.size() && rest[digits] >= '0' && rest[digits] <= '9') ++digits;
    if (digits == 0) return std::nullopt;
    auto m = parse_int(rest.substr(0, digits));
    if (!m || *m < 1 || *m > 8) return std::nullopt;
    return std::make_pair(*m, rest.substr(digits));
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(const Element& e) {
    struct V {
        std::string operator()(const Point& p) const { return std::to_string(p.value); }
        std::string operator()(const Interval& i) const {
            return "[" + std::to_string(i.lo) + "," + std::to_string(i.hi) + "]";
        }
        std::string operator()(const Rect& r) const {
            return "[" + std::to_string(r.x1) + "," + std::to_string(r.x2) + "]x[" +
                   std::to_string(r.y1) + "," + std::to_string(r.y2) + "]";
        }
        std::string operator()(const Disk& d) const {
            return "B((" + std::to_string(d.cx) + "," + std::to_string(d.cy) + ")," +
                   std::to_string(d.r) + ")";
        }
        std::string operator()(const OPoint& p) const {
            const std::string phi = std::to_string(p.orientation) + "/" + std::to_string(p.grid);
            if (p.frame == OPoint::Frame::polar)
                return "(rho=" + std::to_string(p.a) + ",theta=" + std::to_string(p.b) + "/" +
                       std::to_string(p.grid) + ",phi=" + phi + ")";
            return "((" + std::to_string(p.a) + "," + std::to_string(p.b) + "),phi=" + phi + ")";
        }
    };
    return std::visit(V{}, e);
}

namespace indu {

std::optional<Rel> combine(Rel ia_rel, Rel pa_rel) {
    if (ia_rel >= ia::count || pa_rel > 2) return std::nullopt;
    const int idx = indu_tables().index[ia_rel][pa_rel];
    if (idx < 0) return std::nullopt;
    return static_cast<Rel>(idx);
}

std::pair<Rel, Rel> split(Rel indu_rel) { return indu_tables().parts.at(indu_rel); }

}  // namespace indu

Rel pa_relate(Point a, Point b) {
    return a.value < b.value ? pa::lt : (a.value == b.value ? pa::eq : pa::gt);
}

Rel ia_relate(const Interval& x, const Interval& y) {
    if (x.hi < y.lo) return ia::b;
    if (x.hi == y.lo) return ia::m;
    if (y.hi < x.lo) return ia::bi;
    if (y.hi == x.lo) return ia::mi;
    const int lo = cmp(x.lo, y.lo);
    const int hi = cmp(x.hi, y.hi);
    if (lo == 0) return hi == 0 ? ia::eq : (hi < 0 ? ia::s : ia::si);
    if (hi == 0) return lo > 0 ? ia::f : ia::fi;
    if (lo > 0) return hi < 0 ? ia::d : ia::oi;
    return hi > 0 ? ia::di : ia::o;
}

Rel indu_relate(const Interval& a, const Interval& b) {
    const Rel i = ia_relate(a, b);
    const Rel p = pa_relate({a.length()}, {b.length()});
    auto r = indu::combine(i, p);
    // Containment relations fix the duration order, so this cannot fail.
    if (!r) throw Error("inconsistent INDU classification");
    return *r;
}

Rel rcc8_relate_rect(const Rect& a, const Rect& b) {
    // Closed boxes meet iff both closed projections meet.
    const bool closed_meet = std::max(a.x1, b.x1) <= std::min(a.x2, b.x2) &&
                             std::max(a.y1, b.y1) <= std::min(a.y2, b.y2);
    if (!closed_meet) return rcc8::DC;
    const bool open_meet = std::max(a.x1, b.x1) < std::min(a.x2, b.x2) &&
                           std::max(a.y1, b.y1) < std::min(a.y2, b.y2);
    if (!open_meet) return rcc8::EC;
    if (a == b) return rcc8::EQ;
    const bool a_in_b = b.x1 <= a.x1 && a.x2 <= b.x2 && b.y1 <= a.y1 && a.y2 <= b.y2;
    if (a_in_b) {
        const bool strict = b.x1 < a.x1 && a.x2 < b.x2 && b.y1 < a.y1 && a.y2 < b.y2;
        return strict ? rcc8::NTPP : rcc8::TPP;
    }
    const bool b_in_a = a.x1 <= b.x1 && b.x2 <= a.x2 && a.y1 <= b.y1 && b.y2 <= a.y2;
    if (b_in_a) {
        const bool strict = a.x1 < b.x1 && b.x2 < a.x2 && a.y1 < b.y1 && b.y2 < a.y2;
        return strict ? rcc8::NTPPi : rcc8::TPPi;
    }
    return rcc8::PO;
}

Rel rcc8_relate_disk(const Disk& a, const Disk& b) {
    const long long dx = a.cx - b.cx;
    const long long dy = a.cy - b.cy;
    const long long d2 = dx * dx + dy * dy;
    const long long sum = a.r + b.r;
    const long long gap = a.r - b.r;
    if (d2 > sum * sum) return rcc8::DC;
    if (d2 == sum * sum) return rcc8::EC;
    if (d2 == 0 && gap == 0) return rcc8::EQ;
    if (gap < 0) {
        if (d2 == gap * gap) return rcc8::TPP;
        if (d2 < gap * gap) return rcc8::NTPP;
    } else if (gap > 0) {
        if (d2 == gap * gap) return rcc8::TPPi;
        if (d2 < gap * gap) return rcc8::NTPPi;
    }
    return rcc8::PO;
}

double grid_angle(int k, int n) { return two_pi * static_cast<double>(k) / static_cast<double>(n); }

int opra_sector(int m, double delta, double epsilon) {
    double d = std::fmod(delta, two_pi);
    if (d < 0) d += two_pi;
    if (d >= two_pi) d = 0;
    const double unit = std::numbers::pi / m;
    const double q = d / unit;
    const double k = std::nearbyint(q);
    if (std::abs(d - k * unit) <= epsilon) return 2 * (static_cast<int>(k) % (2 * m));
    return 2 * static_cast<int>(std::floor(q)) + 1;
}

namespace detail {

Rel opra_classify(int m, double ax, double ay, double aphi, double bx, double by, double bphi,
                  bool same_position) {
    if (same_position) return opra::same_index(m, opra_sector(m, bphi - aphi));
    const int s = opra_sector(m, std::atan2(by - ay, bx - ax) - aphi);
    const int t = opra_sector(m, std::atan2(ay - by, ax - bx) - bphi);
    return opra::pair_index(m, s, t);
}

}  // namespace detail

Rel opra_relate(int m, const OPoint& a, const OPoint& b) {
    if (a.frame != b.frame || a.grid != b.grid)
        throw DomainError("opra_relate: o-points use different coordinate conventions");
    auto xy = [](const OPoint& p) -> std::pair<double, double> {
        if (p.frame == OPoint::Frame::cartesian) return {double(p.a), double(p.b)};
        const double theta = grid_angle(p.b, p.grid);
        return {p.a * std::cos(theta), p.a * std::sin(theta)};
    };
    const auto [ax, ay] = xy(a);
    const auto [bx, by] = xy(b);
    return detail::opra_classify(m, ax, ay, grid_angle(a.orientation, a.grid), bx, by,
                                 grid_angle(b.orientation, b.grid), a.same_position(b));
}

// ---------------------------------------------------------------------------

SchemaPtr build_schema(std::string_view calculus) {
    static std::mutex mutex;
    static std::map<std::string, SchemaPtr, std::less<>> cache;

    std::string name;
    if (calculus == "pa" || calculus == "ia" || calculus == "indu" || calculus == "rcc8") {
        name = std::string(calculus);
    } else if (calculus == "rcc8-rect" || calculus == "rcc8-disk") {
        name = "rcc8";
    } else if (auto o = split_opra(calculus);
               o && (o->second.empty() || o->second == "-cart" || o->second == "-polar" ||
                     (o->first == 2 && o->second == "-grid4"))) {
        name = "opra" + std::to_string(o->first);
    } else {
        throw Error("unknown calculus '" + std::string(calculus) + "'");
    }

    std::lock_guard lock(mutex);
    if (auto it = cache.find(name); it != cache.end()) return it->second;
    SchemaPtr schema;
    if (name == "pa") schema = make_pa();
    else if (name == "ia") schema = make_ia();
    else if (name == "indu") schema = make_indu();
    else if (name == "rcc8") schema = make_rcc8();
    else schema = make_opra(split_opra(name)->first);
    cache.emplace(name, schema);
    return schema;
}

// ---------------------------------------------------------------------------

DomainSpec DomainSpec::parse(std::string_view token, std::string_view params) {
    DomainSpec spec;
    if (token == "pa") spec.kind = DomainKind::pa;
    else if (token == "ia") spec.kind = DomainKind::ia;
    else if (token == "indu") spec.kind = DomainKind::indu;
    else if (token == "rcc8-rect") spec.kind = DomainKind::rcc8_rect;
    else if (token == "rcc8-disk") spec.kind = DomainKind::rcc8_disk;
    else if (token == "opra2-grid4") {
        spec.kind = DomainKind::opra2_grid4;
        spec.m = 2;
    } else if (auto o = split_opra(token); o && o->second == "-cart") {
        spec.kind = DomainKind::opra_cart;
        spec.m = o->first;
    } else if (auto o2 = split_opra(token); o2 && o2->second == "-polar") {
        spec.kind = DomainKind::opra_polar;
        spec.m = o2->first;
    } else {
        throw DomainError("unknown domain '" + std::string(token) + "'");
    }

    std::size_t pos = 0;
    while (pos < params.size()) {
        std::size_t end = params.find_first_of(", ", pos);
        if (end == std::string_view::npos) end = params.size();
        std::string_view kv = params.substr(pos, end - pos);
        pos = end + 1;
        if (kv.empty()) continue;
        const auto eq = kv.find('=');
        if (eq == std::string_view::npos) throw DomainError("malformed parameter '" + std::string(kv) + "'");
        const std::string_view key = kv.substr(0, eq);
        const auto value = parse_int(kv.substr(eq + 1));
        if (!value) throw DomainError("parameter " + std::string(key) + " is not an integer");
        if (key == "M") spec.M = *value;
        else if (key == "M1") spec.M1 = *value;
        else if (key == "M2") spec.M2 = *value;
        else throw DomainError("unknown parameter '" + std::string(key) + "'");
    }
    if (spec.kind == DomainKind::opra2_grid4) {
        if (spec.M2 != 0 && spec.M2 != 4) throw DomainError("opra2-grid4 fixes M2=4");
        spec.M2 = 4;
    }
    spec.validate();
    return spec;
}

std::string DomainSpec::token() const {
    switch (kind) {
        case DomainKind::pa: return "pa";
        case DomainKind::ia: return "ia";
        case DomainKind::indu: return "indu";
        case DomainKind::rcc8_rect: return "rcc8-rect";
        case DomainKind::rcc8_disk: return "rcc8-disk";
        case DomainKind::opra_cart: return "opra" + std::to_string(m) + "-cart";
        case DomainKind::opra_polar: return "opra" + std::to_string(m) + "-polar";
        case DomainKind::opra2_grid4: return "opra2-grid4";
    }
    return "?";
}

std::vector<std::pair<std::string, std::string>> DomainSpec::params() const {
    switch (kind) {
        case DomainKind::opra_cart:
        case DomainKind::opra_polar: return {{"M1", std::to_string(M1)}, {"M2", std::to_string(M2)}};
        case DomainKind::opra2_grid4: return {{"M1", std::to_string(M1)}};
        default: return {{"M", std::to_string(M)}};
    }
}

std::string DomainSpec::params_string() const {
    std::string out;
    for (const auto& [k, v] : params()) {
        if (!out.empty()) out += ',';
        out += k + "=" + v;
    }
    return out;
}

std::string DomainSpec::calculus() const {
    switch (kind) {
        case DomainKind::pa: return "pa";
        case DomainKind::ia: return "ia";
        case DomainKind::indu: return "indu";
        case DomainKind::rcc8_rect:
        case DomainKind::rcc8_disk: return "rcc8";
        default: return "opra" + std::to_string(m);
    }
}

void DomainSpec::validate() const {
    auto fail = [&](const std::string& why) { throw DomainError(token() + ": " + why); };
    switch (kind) {
        case DomainKind::pa:
        case DomainKind::rcc8_disk:
            if (M < 1) fail("M must be at least 1");
            break;
        case DomainKind::ia:
        case DomainKind::indu:
        case DomainKind::rcc8_rect:
            if (M < 2) fail("M must be at least 2");
            break;
        case DomainKind::opra_cart:
        case DomainKind::opra_polar:
        case DomainKind::opra2_grid4:
            if (m < 1) fail("granularity m must be at least 1");
            if (M1 < 1) fail("M1 must be at least 1");
            if (M2 < 1) fail("M2 must be at least 1");
            if (kind == DomainKind::opra2_grid4 && (m != 2 || M2 != 4)) fail("requires m=2, M2=4");
            break;
    }
}

std::uint64_t domain_size(const DomainSpec& spec) {
    return detail::visit_domain(spec, [](const auto& model) { return model.size(); });
}

// ---------------------------------------------------------------------------

Domain::Domain(DomainSpec spec) : spec_(spec), schema_(build_schema(spec.calculus())) {
    spec_.validate();
}

std::uint64_t Domain::size() const { return domain_size(spec_); }

std::vector<Element> Domain::enumerate() const {
    return detail::visit_domain(spec_, [](const auto& model) {
        std::vector<Element> out;
        for (const auto& e : model.enumerate()) out.emplace_back(e);
        return out;
    });
}

Element Domain::sample(Rng& rng) const {
    return detail::visit_domain(spec_, [&](const auto& model) { return Element(model.sample(rng)); });
}

Rel Domain::relate(const Element& a, const Element& b) const {
    if (a.index() != b.index()) throw DomainError("cannot relate elements of different kinds");
    switch (spec_.kind) {
        case DomainKind::pa: return pa_relate(std::get<Point>(a), std::get<Point>(b));
        case DomainKind::ia: return ia_relate(std::get<Interval>(a), std::get<Interval>(b));
        case DomainKind::indu: return indu_relate(std::get<Interval>(a), std::get<Interval>(b));
        case DomainKind::rcc8_rect: return rcc8_relate_rect(std::get<Rect>(a), std::get<Rect>(b));
        case DomainKind::rcc8_disk: return rcc8_relate_disk(std::get<Disk>(a), std::get<Disk>(b));
        default: return opra_relate(spec_.m, std::get<OPoint>(a), std::get<OPoint>(b));
    }
}

}  // namespace qct
