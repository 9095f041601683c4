#include <vector>

#include "doctest.h"
#include "hg3/oracle.hpp"
#include "hg3/realize.hpp"

using namespace hg3;

TEST_CASE("tetrahedron sequence is graphic with a K4 witness") {
    OracleVerdict v = is_graphic_exhaustive(DegreeSequence({3, 3, 3, 3}));
    REQUIRE(v.status == OracleStatus::graphic);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->num_edges() == 4);  // all of C(4,3)
    for (int i = 0; i < 4; ++i) CHECK(v.witness->degree(i) == 3);
}

TEST_CASE("non-graphic examples") {
    // Sum 8 is not divisible by 3.
    CHECK(is_graphic_exhaustive(DegreeSequence({2, 2, 2, 2})).status ==
          OracleStatus::non_graphic);
    // Sum 30 = 3 * 10 edges, but only C(3,2) = 3 distinct triples exist
    // inside {0,1,2} and every other triple would hit a zero-degree vertex.
    CHECK(is_graphic_exhaustive(DegreeSequence({10, 10, 10, 0, 0, 0})).status ==
          OracleStatus::non_graphic);
    CHECK_FALSE(
        is_graphic_exhaustive(DegreeSequence({10, 10, 10, 0, 0, 0}))
            .witness.has_value());
}

TEST_CASE("witness realizes the input in order") {
    DegreeSequence d({4, 3, 2, 2, 2, 2, 3});  // sum 18
    OracleVerdict v = is_graphic_exhaustive(d);
    if (v.status == OracleStatus::graphic) {
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->degree_sequence() == d);
    }
    CHECK(v.status != OracleStatus::budget_exceeded);
}

TEST_CASE("the oracle is deterministic") {
    DegreeSequence d({5, 4, 4, 3, 2, 3});
    OracleVerdict a = is_graphic_exhaustive(d);
    OracleVerdict b = is_graphic_exhaustive(d);
    CHECK(a.status == b.status);
    CHECK(a.nodes_explored == b.nodes_explored);
    if (a.witness && b.witness) CHECK(*a.witness == *b.witness);
}

TEST_CASE("a tiny budget reports budget_exceeded") {
    // Dense 9-vertex instance: far more than 2 nodes are needed.
    DegreeSequence d({9, 9, 9, 9, 9, 9, 9, 9, 9});
    OracleVerdict v = is_graphic_exhaustive(d, 2);
    CHECK(v.status == OracleStatus::budget_exceeded);
    CHECK(v.nodes_explored <= 3);  // the bailing node itself is counted
}

TEST_CASE("agreement with the interval decision on small sequences") {
    // Every n = 5 multiset with entries <= 6: decide-graphic must be
    // confirmed graphic by the oracle (the converse need not hold).
    std::vector<long long> v(5);
    long long confirmed = 0;
    for (v[0] = 0; v[0] <= 6; ++v[0])
        for (v[1] = v[0]; v[1] <= 6; ++v[1])
            for (v[2] = v[1]; v[2] <= 6; ++v[2])
                for (v[3] = v[2]; v[3] <= 6; ++v[3])
                    for (v[4] = v[3]; v[4] <= 6; ++v[4]) {
                        DegreeSequence d(v);
                        Graphicality g = decide_graphic_interval(d);
                        OracleVerdict o = is_graphic_exhaustive(d);
                        REQUIRE(o.status != OracleStatus::budget_exceeded);
                        if (g == Graphicality::graphic) {
                            CHECK(o.status == OracleStatus::graphic);
                            ++confirmed;
                        }
                        if (g == Graphicality::fails_mod3) {
                            CHECK(o.status == OracleStatus::non_graphic);
                        }
                    }
    CHECK(confirmed > 0);
}
