#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "corepath/counting.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace corepath;

namespace {

std::vector<std::string> scan_members(int n, const std::function<bool(const std::string&)>& keep) {
    std::vector<std::string> out;
    oracle::for_each_word(n, [&](const std::string& w) {
        if (keep(w))
            out.push_back(w);
    });
    return out;
}

std::vector<std::string> texts(const std::vector<PathWord>& words) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const PathWord& w : words)
        out.push_back(w.text());
    return out;
}

} // namespace

TEST_SUITE("counting") {

TEST_CASE("binomial satisfies the Pascal recurrence") {
    for (long long n = 1; n <= 12; ++n)
        for (long long k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(60, 30) == BigCount("118264581564861424"));
    CHECK(thrown_code([] { binomial(-1, 0); }) == Errc::OutOfRange);
}

TEST_CASE("narayana numbers count peaks") {
    const long long kCatalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (int m = 0; m <= 9; ++m)
        CHECK(catalan(m) == kCatalan[m]);
    for (int m = 1; m <= 7; ++m) {
        std::map<int, long long> by_peaks;
        oracle::for_each_dyck(m, [&](const std::string& w) { ++by_peaks[oracle::peak_count(w)]; });
        BigCount sum = 0;
        for (int i = 1; i <= m; ++i) {
            CHECK(narayana(m, i) == by_peaks[i]);
            sum += narayana(m, i);
        }
        CHECK(sum == catalan(m));
    }
    CHECK(thrown_code([] { narayana(3, 0); }) == Errc::OutOfRange);
    CHECK(thrown_code([] { narayana(3, 4); }) == Errc::OutOfRange);
}

TEST_CASE("symmetric peak counts match the palindromic scan") {
    for (int m = 1; m <= 7; ++m) {
        std::map<int, long long> by_peaks;
        oracle::for_each_dyck(m, [&](const std::string& w) {
            if (w == oracle::reverse_complement(w))
                ++by_peaks[oracle::peak_count(w)];
        });
        for (int i = 1; i <= m; ++i)
            CHECK(symmetric_dyck_peak_count(m, i) == by_peaks[i]);
    }
    CHECK(thrown_code([] { symmetric_dyck_peak_count(0, 1); }) == Errc::OutOfRange);
}

TEST_CASE("core counts match the transfer-matrix scan") {
    for (int t = 1; t <= 6; ++t)
        for (int m = 0; m <= 5; ++m)
            CHECK(cc(t, m) == oracle::cornerless_motzkin_count(2 * m + t - 1, t - 1));
    for (int t = 1; t <= 7; ++t)
        for (int m = 0; m <= 5; ++m)
            CHECK(scc(t, m) == oracle::symmetric_cornerless_motzkin_count(2 * m + t - 1, t - 1));
    CHECK(thrown_code([] { cc(0, 1); }) == Errc::OutOfRange);
    CHECK(thrown_code([] { scc(2, -1); }) == Errc::OutOfRange);
}

TEST_CASE("closed forms agree with the sums") {
    for (int m = 0; m <= 12; ++m) {
        CHECK(cc(3, m) == 2 * m + 1);
        CHECK(cc(4, m) == (5LL * m * m + 5 * m + 2) / 2);
        CHECK(scc(4, m) == 3 * m / 2 + 1);
        CHECK(scc(6, m) == (10LL * m * (m + 1) + (m % 2 ? -1 : 1) * (2LL * m + 1) + 7) / 8);
    }
}

TEST_CASE("strip counts match the flat-free scans") {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= 6; ++k) {
            CHECK(cigler_count(n, k) == oracle::strip_free_count(n, k));
            CHECK(cigler_count(n, k) == oracle::strip_prefix_count(n, k));
        }
    CHECK(thrown_code([] { cigler_count(-1, 2); }) == Errc::OutOfRange);
}

TEST_CASE("formula tables carry the frozen rows") {
    CountTable ordinary = cc_table(2, 6, 1, 8);
    REQUIRE(ordinary.cells.size() == 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(ordinary.cells[i][j] == fixtures::kOrdinaryTable[i][j]);

    CountTable paired = scc_paired_table(1, 8);
    REQUIRE(paired.cells.size() == 5);
    CHECK(paired.row_keys.front() == "2,3");
    CHECK(paired.row_keys.back() == "10,11");
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(paired.cells[i][j] == fixtures::kSelfConjugateTable[i][j]);
    for (int t = 2; t <= 10; t += 2)
        for (int m = 0; m <= 8; ++m)
            CHECK(scc(t, m) == scc(t + 1, m));

    std::string csv = paired.to_csv();
    CHECK(csv.find("\"2,3\",1,1,") != std::string::npos);
    CHECK(paired.to_plain().find("2,3") != std::string::npos);
    nlohmann::json j = paired.to_json();
    CHECK(j["cells"][0][0] == "1");
    CHECK(j["rows"][1] == "4,5");
}

TEST_CASE("enumeration agrees with raw scans") {
    const Family tight[] = {Family::FreeMotzkinTight, Family::MotzkinPrefixTight,
                            Family::CornerlessFreeTight, Family::CornerlessPrefixTight};
    for (int m = 0; m <= 6; ++m)
        for (int r = 0; m + r <= 6; ++r)
            for (int k = 0; k <= m + 1; ++k)
                for (Family family : tight) {
                    FamilySpec spec{family, m, r, k};
                    auto member = [&](const std::string& w) {
                        switch (family) {
                            case Family::FreeMotzkinTight:
                                return oracle::free_tight_member(w, m, r, k);
                            case Family::MotzkinPrefixTight:
                                return oracle::prefix_tight_member(w, m, r, k);
                            case Family::CornerlessFreeTight:
                                return oracle::cornerless_free_member(w, m, r, k);
                            default:
                                return oracle::cornerless_prefix_member(w, m, r, k);
                        }
                    };
                    std::vector<std::string> expected = scan_members(m + r, member);
                    CHECK(texts(collect_family(spec)) == expected);
                    CHECK(count_family(spec) == expected.size());
                }
    for (int len = 0; len <= 7; ++len)
        for (int flats = 0; flats <= len; ++flats) {
            FamilySpec plain{Family::CornerlessMotzkin, len - flats, flats, 0};
            CHECK(texts(collect_family(plain)) == scan_members(len, [&](const std::string& w) {
                      return oracle::cornerless_motzkin_member(w, len, flats);
                  }));
            FamilySpec symmetric{Family::SymmetricCornerlessMotzkin, len - flats, flats, 0};
            CHECK(texts(collect_family(symmetric)) == scan_members(len, [&](const std::string& w) {
                      return oracle::symmetric_member(w, len, flats);
                  }));
        }
}

TEST_CASE("enumeration stops when the visitor declines") {
    FamilySpec spec{Family::MotzkinPrefixTight, 3, 1, 2};
    int seen = 0;
    bool finished = enumerate_family(spec, [&](const PathWord&) { return ++seen < 2; });
    CHECK(!finished);
    CHECK(seen == 2);
    CHECK(enumerate_family(spec, [](const PathWord&) { return true; }));
}

TEST_CASE("family counts reproduce the core formulas") {
    for (int t = 1; t <= 5; ++t)
        for (int m = 0; m <= 4; ++m) {
            CHECK(count_family({Family::CornerlessMotzkin, 2 * m, t - 1, 0}) == cc(t, m));
            CHECK(count_family({Family::SymmetricCornerlessMotzkin, 2 * m, t - 1, 0}) ==
                  scc(t, m));
        }
}

} // TEST_SUITE
