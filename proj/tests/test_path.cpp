#include <doctest.h>

#include "corepath/path.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace corepath;

TEST_SUITE("path") {

TEST_CASE("words validate their characters") {
    CHECK(PathWord::parse("udf").text() == "udf");
    CHECK(PathWord().empty());
    CHECK(PathWord::flats(3).text() == "fff");
    auto code = thrown_code([] { PathWord::parse("uxd"); });
    REQUIRE(code);
    CHECK(*code == Errc::InvalidCharacter);
}

TEST_CASE("slices, counts and concatenation") {
    PathWord w = PathWord::parse("uufdd");
    CHECK(w.slice(1, 3).text() == "ufd");
    CHECK((w.slice(0, 2) + w.slice(2, 3)).text() == w.text());
    CHECK(w.nonflat_count() == 4);
    CHECK(w.flat_count() == 1);
    CHECK(PathWord::parse("ud") < PathWord::parse("uf"));
}

TEST_CASE("reverse complement is an involution") {
    CHECK(complement(PathWord::parse("udf")).text() == "duf");
    CHECK(reverse_complement(PathWord::parse("uufdd")).text() == "uufdd");
    oracle::for_each_word(5, [](const std::string& t) {
        PathWord w = PathWord::parse(t);
        CHECK(reverse_complement(reverse_complement(w)) == w);
        CHECK(reverse_complement(w).text() == oracle::reverse_complement(t));
    });
}

TEST_CASE("profile agrees with direct geometry") {
    for (int n = 0; n <= 5; ++n)
        oracle::for_each_word(n, [&](const std::string& t) {
            for (int start : {0, 1, -2}) {
                PathProfile p = profile(PathWord::parse(t), start);
                oracle::Shape s = oracle::shape(t, start);
                CHECK(p.end_height() == s.end);
                CHECK(p.min_height == s.lo);
                CHECK(p.max_height == s.hi);
                CHECK(p.corner_count == s.corners);
                CHECK(p.run_count == s.runs);
                CHECK(p.flat_count == s.flats);
                CHECK(p.nonflat_count == s.nonflats);
                CHECK(p.heights.size() == t.size() + 1);
            }
        });
}

TEST_CASE("strip boundary alternates sides") {
    CHECK(boundary_line(0) == 0);
    CHECK(boundary_line(1) == 1);
    CHECK(boundary_line(2) == -1);
    CHECK(boundary_line(3) == 2);
    CHECK(boundary_line(4) == -2);
    CHECK(boundary_line(5) == 3);
}

TEST_CASE("width index picks the unique tight strip") {
    for (int n = 0; n <= 6; ++n)
        oracle::for_each_word(n, [&](const std::string& t) {
            PathWord w = PathWord::parse(t);
            int m = w.nonflat_count(), r = w.flat_count();
            oracle::Shape sf = oracle::shape(t, m & 1);
            if (sf.end == 0) {
                int k = width_index_free(w);
                CHECK(oracle::free_tight_member(t, m, r, k));
                if (k > 0) {
                    bool fits_narrower = sf.lo >= oracle::strip_lo(k - 1) &&
                                         sf.hi <= oracle::strip_hi(k - 1);
                    CHECK_FALSE(fits_narrower);
                }
            } else {
                CHECK(thrown_code([&] { width_index_free(w); }) == Errc::NotFreeMotzkin);
            }
            oracle::Shape sp = oracle::shape(t, 0);
            if (sp.lo >= 0)
                CHECK(width_index_prefix(w) == sp.hi);
            else
                CHECK(thrown_code([&] { width_index_prefix(w); }) == Errc::NotMotzkinPrefix);
        });
}

TEST_CASE("family membership matches the raw definitions") {
    for (int n = 0; n <= 6; ++n)
        oracle::for_each_word(n, [&](const std::string& t) {
            PathWord w = PathWord::parse(t);
            int m = w.nonflat_count(), r = w.flat_count();
            for (int k = 0; k <= n + 1; ++k) {
                CHECK(is_member(w, {Family::FreeMotzkinTight, m, r, k}) ==
                      oracle::free_tight_member(t, m, r, k));
                CHECK(is_member(w, {Family::MotzkinPrefixTight, m, r, k}) ==
                      oracle::prefix_tight_member(t, m, r, k));
                CHECK(is_member(w, {Family::CornerlessFreeTight, m, r, k}) ==
                      oracle::cornerless_free_member(t, m, r, k));
                CHECK(is_member(w, {Family::CornerlessPrefixTight, m, r, k}) ==
                      oracle::cornerless_prefix_member(t, m, r, k));
            }
            CHECK(is_member(w, {Family::CornerlessMotzkin, m, r, 0}) ==
                  oracle::cornerless_motzkin_member(t, n, r));
            CHECK(is_member(w, {Family::SymmetricCornerlessMotzkin, m, r, 0}) ==
                  oracle::symmetric_member(t, n, r));
            CHECK_FALSE(is_member(w, {Family::FreeMotzkinTight, m + 1, r, 1}));
        });
}

TEST_CASE("run counting erases flats") {
    CHECK(run_count(PathWord()) == 0);
    CHECK(run_count(PathWord::parse("fff")) == 0);
    CHECK(run_count(PathWord::parse("ufffu")) == 1);
    for (int n = 0; n <= 6; ++n)
        oracle::for_each_word(n, [&](const std::string& t) {
            CHECK(run_count(PathWord::parse(t)) == oracle::shape(t, 0).runs);
        });
}

TEST_CASE("family names are stable") {
    CHECK(std::string(family_name(Family::FreeMotzkinTight)) == "free");
    CHECK(std::string(family_name(Family::MotzkinPrefixTight)) == "prefix");
    CHECK(std::string(family_name(Family::CornerlessMotzkin)) == "cornerless");
    CHECK(std::string(family_name(Family::SymmetricCornerlessMotzkin)) == "symmetric");
}

} // TEST_SUITE
