#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "qct/error.hpp"
#include "qct/generator.hpp"
#include "qct/oracle.hpp"
#include "qct/reasoner.hpp"
#include "support.hpp"

using namespace qct;
using qct::test::triad;

namespace {

const CompositionTable& table_for(const std::string& tok, const std::string& params) {
    static std::map<std::string, CompositionTable> cache;
    const std::string key = tok + " " + params;
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_ct(DomainSpec::parse(tok, params))).first;
    return it->second;
}

ConstraintNetwork random_network(const SchemaPtr& s, std::size_t n, Rng& rng, int keep_percent) {
    ConstraintNetwork net(s, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.below(3) == 0) continue;
            RelationSet r(s);
            for (std::size_t k = 0; k < s->size(); ++k)
                if (rng.below(100) < keep_percent) r.insert(Rel(k));
            if (!r.is_empty()) net.set_label(i, j, r);
        }
    return net;
}

ConstraintNetwork permuted(const ConstraintNetwork& net, const std::vector<std::size_t>& p) {
    ConstraintNetwork out(net.schema(), net.size());
    for (std::size_t i = 0; i < net.size(); ++i)
        for (std::size_t j = 0; j < net.size(); ++j)
            if (i != j) out.set_label(p[i], p[j], net.label(i, j));
    return out;
}

bool is_fixed_point(const ConstraintNetwork& net, const CompositionTable& t) {
    const std::size_t n = net.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!net.label(i, j).subset_of(weak_compose(t, net.label(i, k), net.label(k, j)))) return false;
    return true;
}

}  // namespace

TEST_CASE("weak composition") {
    const auto& pa = table_for("pa", "M=3");
    auto s = pa.schema();
    CHECK(weak_compose(pa, RelationSet::parse(s, "<"), RelationSet::parse(s, "<")).to_string() == "<");
    CHECK(weak_compose(pa, RelationSet::parse(s, "<"), RelationSet::parse(s, ">")).to_string() == "< = >");
    for (const char* tok : {"ia", "rcc8-rect"}) {
        const auto& t = table_for(tok, "M=6");
        auto sch = t.schema();
        auto id = RelationSet::singleton(sch, sch->identity());
        for (Rel b = 0; b < sch->size(); ++b) {
            auto beta = RelationSet::singleton(sch, b);
            CHECK(weak_compose(t, id, beta) == beta);
            CHECK(weak_compose(t, beta, id) == beta);
        }
    }
}

TEST_CASE("triangle checks") {
    const auto& rcc = table_for("rcc8-rect", "M=6");
    CHECK(triangle_is_ct_consistent(rcc, triad(*rcc.schema(), "NTPP", "NTPP", "NTPP")));
    const auto& pa = table_for("pa", "M=3");
    CHECK_FALSE(triangle_is_ct_consistent(pa, triad(*pa.schema(), "<", ">", "<")));
    for (const CompositionTable* t : {&rcc, &pa, &table_for("ia", "M=6")}) {
        auto s = t->schema();
        for (Rel a = 0; a < s->size(); ++a)
            CHECK(triangle_is_ct_consistent(*t, {a, s->identity(), s->converse(a)}));
    }
}

TEST_CASE("network labels stay converse symmetric") {
    auto s = build_schema("ia");
    ConstraintNetwork net(s, 3);
    CHECK(net.label(0, 0).to_string() == "eq");
    CHECK(net.label(0, 1).count() == 13);
    net.set_label(0, 1, RelationSet::parse(s, "b,m"));
    CHECK(net.label(1, 0).to_string() == "bi mi");
    CHECK(net.constrain(1, 0, RelationSet::parse(s, "bi,o")));
    CHECK(net.label(0, 1).to_string() == "b");
    CHECK_FALSE(net.constrain(0, 1, RelationSet::parse(s, "b,o")));
    CHECK_THROWS(ConstraintNetwork(s, 300));
    CHECK_THROWS(ConstraintNetwork(s, 0));
}

TEST_CASE("closure examples") {
    const auto& ia = table_for("ia", "M=6");
    auto s = ia.schema();
    auto net = ConstraintNetwork::parse(s, "vars: 3\n0 1 b\n1 2 b\n");
    auto closed = algebraic_closure(net, ia);
    REQUIRE(closed);
    CHECK(closed->label(0, 2).to_string() == "b");
    CHECK(algebraic_closure(*closed, ia) == closed);

    const auto& pa = table_for("pa", "M=3");
    auto bad = ConstraintNetwork::parse(pa.schema(), "vars: 3\n0 1 <\n1 2 <\n0 2 >\n");
    CHECK_FALSE(algebraic_closure(bad, pa).has_value());
}

TEST_CASE("network text format") {
    auto s = build_schema("ia");
    auto net = ConstraintNetwork::parse(s, "# comment\nvars: 4\n0 1 b,m  # trailing\n\n1 0 mi\n2 3 *\n");
    CHECK(net.label(0, 1).to_string() == "m");
    CHECK(ConstraintNetwork::parse(s, net.to_text()) == net);
    try {
        ConstraintNetwork::parse(s, "vars: 3\n0 1 b\n1 2 zz\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(ConstraintNetwork::parse(s, "0 1 b\n"), ParseError);
    CHECK_THROWS_AS(ConstraintNetwork::parse(s, "vars: 2\n0 5 b\n"), ParseError);
    CHECK_THROWS_AS(ConstraintNetwork::parse(s, ""), ParseError);
}

TEST_CASE("closure reaches one fixed point whatever the order") {
    for (const auto& [tok, params, keep] : std::vector<std::tuple<const char*, const char*, int>>{
             {"pa", "M=3", 60}, {"ia", "M=6", 50}, {"rcc8-rect", "M=6", 45}, {"indu", "M=11", 55}}) {
        CAPTURE(tok);
        const auto& t = table_for(tok, params);
        Rng rng(31);
        int consistent = 0;
        for (int n = 0; n < 300; ++n) {
            const std::size_t vars = 3 + rng.below(5);
            auto net = random_network(t.schema(), vars, rng, keep);
            auto once = algebraic_closure(net, t);
            std::vector<std::size_t> p(vars);
            std::iota(p.begin(), p.end(), 0);
            for (std::size_t i = vars - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
            auto other = algebraic_closure(permuted(net, p), t);
            REQUIRE(once.has_value() == other.has_value());
            if (!once) continue;
            ++consistent;
            CHECK(permuted(*once, p) == *other);
            CHECK(algebraic_closure(*once, t) == once);
            CHECK(is_fixed_point(*once, t));
            for (std::size_t i = 0; i < vars; ++i)
                for (std::size_t j = 0; j < vars; ++j) CHECK(once->label(i, j).subset_of(net.label(i, j)));
        }
        CHECK(consistent > 20);
    }
}

TEST_CASE("networks read off real configurations are never refuted") {
    struct Case {
        const char* tok;
        const char* params;
        const char* table_tok;
        const char* table_params;
    };
    for (const Case& c : std::vector<Case>{
             {"pa", "M=20", "pa", "M=3"},
             {"ia", "M=12", "ia", "M=6"},
             {"indu", "M=14", "indu", "M=11"},
             {"rcc8-rect", "M=8", "rcc8-rect", "M=6"},
             {"rcc8-disk", "M=6", "rcc8-rect", "M=6"},
             {"opra1-polar", "M1=6,M2=8", "opra1-polar", "M1=2,M2=8"},
             {"opra2-grid4", "M1=6", "opra2-grid4", "M1=2"}}) {
        CAPTURE(c.tok);
        const auto& t = table_for(c.table_tok, c.table_params);
        Domain d(DomainSpec::parse(c.tok, c.params));
        Rng rng(1000);
        for (int n = 0; n < 10000; ++n) {
            const std::size_t vars = 3 + rng.below(4);
            std::vector<Element> elems;
            for (std::size_t i = 0; i < vars; ++i) elems.push_back(d.sample(rng));
            ConstraintNetwork net(t.schema(), vars);
            for (std::size_t i = 0; i < vars; ++i)
                for (std::size_t j = i + 1; j < vars; ++j)
                    net.set_label(i, j, RelationSet::singleton(t.schema(), d.relate(elems[i], elems[j])));
            auto closed = algebraic_closure(net, t);
            REQUIRE(closed.has_value());
            REQUIRE(*closed == net);
        }
    }
}

TEST_CASE("indu candidates from interval and point tables") {
    auto filtered = indu_candidate_filter(table_for("ia", "M=6"), table_for("pa", "M=3"));
    auto s = filtered.schema();
    CHECK(s->name() == "indu");
    CHECK(filtered.triad_count() == 2053);
    CHECK(filtered.contains(triad(*s, "b<", "b<", "b<")));
    CHECK_FALSE(s->find("d=").has_value());
    CHECK_FALSE(s->find("d>").has_value());
    CHECK(filtered.same_triads(table_for("indu", "M=11")));
    CHECK_THROWS(indu_candidate_filter(table_for("ia", "M=4"), table_for("pa", "M=3")));
}
