#include <doctest.h>

#include <limits>
#include <set>

#include "qct/error.hpp"
#include "qct/table.hpp"
#include "support.hpp"

using namespace qct;
using qct::test::triad;

TEST_CASE("insert is idempotent in membership") {
    auto ia = build_schema("ia");
    CompositionTable t(ia);
    CHECK(t.triad_count() == 0);
    CHECK(t.insert(triad(*ia, "b", "b", "b")));
    CHECK(t.triad_count() == 1);
    CHECK_FALSE(t.insert(triad(*ia, "b", "b", "b")));
    CHECK(t.triad_count() == 1);

    auto perms = triad_permutations(*ia, triad(*ia, "b", "o", "o"));
    CompositionTable u(ia);
    for (const Triad& p : perms) u.insert(p);
    CHECK(u.triad_count() == std::set<Triad>(perms.begin(), perms.end()).size());
    CHECK(u.recount() == u.triad_count());
    CHECK(permutation_closed(u));
}

TEST_CASE("hit counts grow and saturate") {
    auto pa = build_schema("pa");
    CompositionTable t(pa, true);
    const Triad x = triad(*pa, "<", "<", "<");
    t.insert(x);
    t.insert(x, 4);
    CHECK(t.hits(x) == 5);
    t.set_hits(x, std::numeric_limits<std::uint64_t>::max() - 1);
    t.insert(x, 10);
    CHECK(t.hits(x) == std::numeric_limits<std::uint64_t>::max());
    CHECK(t.hits(triad(*pa, ">", ">", ">")) == 0);
}

TEST_CASE("witness keeps the first triple") {
    auto pa = build_schema("pa");
    CompositionTable t(pa, false, true);
    const Triad x = triad(*pa, "<", "<", "<");
    t.insert(x, Witness{Point{0}, Point{1}, Point{2}});
    t.insert(x, Witness{Point{3}, Point{5}, Point{9}});
    REQUIRE(t.witness(x) != nullptr);
    CHECK(std::get<Point>((*t.witness(x))[2]).value == 2);
    CHECK(t.witness(triad(*pa, "=", "=", "=")) == nullptr);
}

TEST_CASE("complete point algebra table") {
    auto t = test::pa_reference_table();
    auto pa = t.schema();
    CHECK(t.triad_count() == 13);
    CHECK(t.cell(pa::lt, pa::gt) == RelationSet::universal(pa));
    CHECK(t.cell(pa::lt, pa::lt).to_string() == "<");
    CHECK(CompositionTable(pa).triad_count() == 0);
    CHECK(permutation_closed(t));
}

TEST_CASE("triad count matches a brute force recount") {
    auto o = build_schema("opra2");
    CompositionTable t(o);
    Rng rng(3);
    for (int n = 0; n < 20000; ++n) {
        t.insert({Rel(rng.below(72)), Rel(rng.below(72)), Rel(rng.below(72))});
        if (n % 1000 == 0) REQUIRE(t.recount() == t.triad_count());
    }
    std::uint64_t brute = 0;
    for (Rel a = 0; a < 72; ++a)
        for (Rel b = 0; b < 72; ++b) brute += t.cell(a, b).count();
    CHECK(brute == t.triad_count());
    CHECK(t.triads().size() == t.triad_count());
}

TEST_CASE("merge is a union with added hits") {
    auto pa = build_schema("pa");
    CompositionTable a(pa, true), b(pa, true);
    a.insert(triad(*pa, "<", "<", "<"), 2);
    b.insert(triad(*pa, "<", "<", "<"), 3);
    b.insert(triad(*pa, ">", ">", ">"), 1);
    CompositionTable m = a;
    m.merge_from(b);
    CHECK(m.triad_count() == 2);
    CHECK(m.hits(triad(*pa, "<", "<", "<")) == 5);
    CHECK(a.subset_of(m));
    CHECK(b.subset_of(m));

    CompositionTable self = test::pa_reference_table();
    self.merge_from(test::pa_reference_table());
    CHECK(self.same_triads(test::pa_reference_table()));
    self.merge_from(CompositionTable(pa));
    CHECK(self.same_triads(test::pa_reference_table()));

    CHECK_THROWS_AS(m.merge_from(CompositionTable(build_schema("ia"))), SchemaMismatch);
}

TEST_CASE("composition probabilities from hits") {
    auto pa = build_schema("pa");
    CompositionTable t(pa, true);
    t.insert(triad(*pa, "<", "<", ">"), 1);
    t.insert(triad(*pa, "<", "=", ">"), 1);
    t.insert(triad(*pa, "<", ">", ">"), 2);
    auto p = composition_probabilities(t, pa::lt, pa::gt);
    REQUIRE(p.size() == 3);
    CHECK(p[0].second == doctest::Approx(0.25));
    CHECK(p[2].first == pa::gt);
    CHECK(p[2].second == doctest::Approx(0.5));
    CHECK(composition_probabilities(t, pa::gt, pa::gt).empty());
}

TEST_CASE("domain provenance round trip") {
    CompositionTable t(build_schema("opra2"));
    auto spec = DomainSpec::parse("opra2-polar", "M1=4,M2=16");
    set_domain_provenance(t, spec);
    CHECK(t.provenance_value("domain") == "opra2-polar");
    CHECK(domain_of(t) == spec);
    CHECK_FALSE(domain_of(CompositionTable(build_schema("ia"))).has_value());
}
