#include <doctest.h>

#include "qct/error.hpp"
#include "qct/oracle.hpp"
#include "support.hpp"

using namespace qct;

namespace {

CompositionTable oracle(const char* tok, const std::string& params) {
    return enumerate_ct(DomainSpec::parse(tok, params));
}

// Straight triple loop over relate calls, no relation matrix.
CompositionTable naive_oracle(const DomainSpec& spec) {
    Domain d(spec);
    CompositionTable t(d.schema());
    auto elems = d.enumerate();
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems) t.insert({d.relate(a, b), d.relate(a, c), d.relate(b, c)});
    return t;
}

}  // namespace

TEST_CASE("point algebra table matches the hand written one") {
    auto t = oracle("pa", "M=3");
    CHECK(t.triad_count() == 13);
    CHECK(t.same_triads(test::pa_reference_table()));
    CHECK(t.cell(pa::lt, pa::lt).to_string() == "<");
    CHECK(t.cell(pa::lt, pa::gt).to_string() == "< = >");
}

TEST_CASE("interval algebra counts by grid size") {
    CHECK(oracle("ia", "M=4").triad_count() == 139);
    CHECK(oracle("ia", "M=5").triad_count() == 319);
    CHECK(oracle("ia", "M=6").triad_count() == 409);
    CHECK(oracle("indu", "M=6").triad_count() == 1045);
}

TEST_CASE("rcc8 boxes at M=6") {
    auto t = oracle("rcc8-rect", "M=6");
    CHECK(t.triad_count() == 193);
    CHECK(permutation_closed(t));
}

TEST_CASE("matrix scan agrees with a naive triple loop") {
    for (const auto& [tok, params] : std::vector<std::pair<const char*, const char*>>{
             {"ia", "M=6"}, {"indu", "M=6"}, {"rcc8-disk", "M=2"}, {"opra1-cart", "M1=1,M2=4"}}) {
        CAPTURE(tok);
        auto spec = DomainSpec::parse(tok, params);
        CHECK(enumerate_ct(spec).same_triads(naive_oracle(spec)));
    }
}

TEST_CASE("exhaustive tables grow with the grid") {
    for (const char* tok : {"ia", "indu", "rcc8-rect"}) {
        CAPTURE(tok);
        std::optional<CompositionTable> prev;
        for (int M = 2; M <= 5; ++M) {
            auto t = oracle(tok, "M=" + std::to_string(M));
            CHECK(permutation_closed(t));
            if (prev) CHECK(prev->subset_of(t));
            prev = t;
        }
    }
    auto small = oracle("opra1-polar", "M1=1,M2=4");
    CHECK(small.subset_of(oracle("opra1-polar", "M1=2,M2=4")));
}

TEST_CASE("triple budget is enforced") {
    auto spec = DomainSpec::parse("ia", "M=6");
    CHECK_THROWS_AS(enumerate_ct(spec, 15 * 15 * 15 - 1), BudgetExceeded);
    CHECK_NOTHROW(enumerate_ct(spec, 15 * 15 * 15));
    CHECK_THROWS_AS(enumerate_ct(DomainSpec::parse("opra3-polar", "M1=4,M2=24")), BudgetExceeded);
}

TEST_CASE("realised relations") {
    auto all = realized_relations(DomainSpec::parse("ia", "M=6"));
    REQUIRE(all);
    CHECK(all->count() == 13);
    auto grid = realized_relations(DomainSpec::parse("opra2-grid4", "M1=2"));
    REQUIRE(grid);
    CHECK(grid->count() == 36);
    CHECK_FALSE(realized_relations(DomainSpec::parse("ia", "M=6"), 10).has_value());
}

TEST_CASE("oracle provenance") {
    auto t = oracle("rcc8-disk", "M=2");
    CHECK(t.provenance_value("method") == "enumerate");
    CHECK(t.provenance_value("elements") == std::to_string(domain_size(DomainSpec::parse("rcc8-disk", "M=2"))));
    CHECK(domain_of(t) == DomainSpec::parse("rcc8-disk", "M=2"));
}
