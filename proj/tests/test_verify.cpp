#include <set>

#include "doctest.h"
#include "domino/families.hpp"
#include "domino/reduction.hpp"
#include "domino/verify.hpp"

using namespace domino;

TEST_CASE("theorem names round trip") {
    for (auto t : {Theorem::Open4, Theorem::Wall4, Theorem::Open2, Theorem::Wall2, Theorem::K2kk, Theorem::K2k1k,
                   Theorem::DoubleWall})
        CHECK(parse_theorem(to_string(t)) == t);
    CHECK_FALSE(parse_theorem("5open"));
}

TEST_CASE("fuzz corpus is deterministic and well formed") {
    const auto a = fuzz_corpus(17, 120, 36);
    const auto b = fuzz_corpus(17, 120, 36);
    REQUIRE(a.size() == 120);
    std::set<std::string> ids;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].region == b[i].region);
        const Region& r = a[i].region;
        CHECK(r.size() % 2 == 0);
        CHECK(r.size() >= 4);
        CHECK(r.size() <= 36);
        CHECK(is_hole_free(r));
        CHECK_FALSE(find_symmetry_axes(r).empty());
        CHECK(a[i].id == content_hash(r));
        ids.insert(a[i].id);
    }
    CHECK(ids.size() == a.size());
    CHECK(fuzz_corpus(18, 5, 36)[0].id != a[0].id);
}

TEST_CASE("hole detection") {
    CHECK(is_hole_free(rectangle(3, 3)));
    CHECK_FALSE(is_hole_free(parse_region("###\n#.#\n###")));
    CHECK(is_hole_free(parse_region("###\n#..\n###")));
}

TEST_CASE("family corpus respects the size bound") {
    const auto corpus = family_corpus(40);
    CHECK(corpus.size() > 30);
    std::set<std::string> ids;
    for (const auto& [id, r] : corpus) {
        CHECK(r.size() <= 40);
        ids.insert(id);
    }
    CHECK(ids.size() == corpus.size());
}

TEST_CASE("every theorem holds on a small corpus") {
    auto corpus = family_corpus(40);
    const auto fuzz = fuzz_corpus(2, 120, 30);
    corpus.insert(corpus.end(), fuzz.begin(), fuzz.end());
    for (auto t : {Theorem::Open4, Theorem::Wall4, Theorem::Open2, Theorem::Wall2, Theorem::K2kk, Theorem::K2k1k,
                   Theorem::DoubleWall}) {
        const auto rows = verify_theorem(t, corpus);
        CHECK_MESSAGE(!rows.empty(), to_string(t));
        for (const auto& row : rows) {
            CHECK_MESSAGE(row.pass(), row.region << ' ' << row.rule << ' ' << row.corner);
            CHECK(row.rule == to_string(t));
        }
    }
}

TEST_CASE("csv layout") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
    VerifyRow pass{"r1", "4open", "vertical@8", "c", 3, 4, 1, 1};
    VerifyRow fail{"r0", "4open", "vertical@8", "c", 3, 4, 1, 2};
    const std::string csv = to_csv({pass, fail});
    CHECK(csv.rfind("# domino-verify v1\nregion,rule,axis,corner,k,modulus,lhs,rhs,result\n", 0) == 0);
    CHECK(csv.find("r0,4open,vertical@8,c,3,4,1,2,FAIL\nr1,") != std::string::npos);
    CHECK(csv.substr(csv.size() - 5) == "pass\n");
}
