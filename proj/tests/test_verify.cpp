#include <doctest.h>

#include <algorithm>

#include "corepath/verify.hpp"
#include "support.hpp"

using namespace corepath;

namespace {

bool suite_failed(const std::vector<PropertyResult>& results) {
    return std::any_of(results.begin(), results.end(),
                       [](const PropertyResult& r) { return !r.passed; });
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("suite names are recognized") {
    std::vector<std::string> names = verify_suite_names();
    CHECK(names.size() == 7);
    CHECK(names.back() == "all");
    for (const std::string& name : names)
        CHECK(is_verify_suite(name));
    CHECK(!is_verify_suite("nonsense"));
    CHECK(thrown_code([] { run_verify_suite("nonsense", {}); }) == Errc::OutOfRange);
}

TEST_CASE("all properties hold on small sizes") {
    VerifyOptions options;
    options.max_size = 8;
    options.workers = 1;
    std::vector<PropertyResult> results = run_verify_suite("all", options);
    CHECK(!results.empty());
    CHECK(all_passed(results));
    for (const PropertyResult& r : results) {
        CHECK(is_verify_suite(r.suite));
        CHECK(!r.name.empty());
        CHECK(!r.detail.empty());
    }
}

TEST_CASE("worker count does not change the verdicts") {
    VerifyOptions one;
    one.max_size = 6;
    one.workers = 1;
    VerifyOptions four = one;
    four.workers = 4;
    std::vector<PropertyResult> a = run_verify_suite("bijection", one);
    std::vector<PropertyResult> b = run_verify_suite("bijection", four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].passed == b[i].passed);
    }
}

TEST_CASE("every dispatch fault is caught") {
    const PhiMutation mutations[] = {
        PhiMutation::WidenMirrorCutoff,    PhiMutation::FlipParityDispatch,
        PhiMutation::IgnoreBreakInCase1,   PhiMutation::IgnoreBreakInCase2,
        PhiMutation::SkipMirrorOnEvenWidth,
    };
    for (PhiMutation mutation : mutations) {
        VerifyOptions options;
        options.max_size = 7;
        options.workers = 1;
        options.mutation = mutation;
        bool caught = suite_failed(run_verify_suite("bijection", options)) ||
                      suite_failed(run_verify_suite("runs", options)) ||
                      suite_failed(run_verify_suite("cornerless", options));
        CHECK(caught);
    }
}

} // TEST_SUITE
