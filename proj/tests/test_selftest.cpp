#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "core/json_io.hpp"
#include "core/parallel.hpp"
#include "core/selftest.hpp"

using namespace domcert;

TEST_CASE("parallel_for covers every index exactly once") {
    for (int jobs : {1, 2, 7}) {
        auto hits = std::vector<std::atomic<int>>(257);
        parallel_for(hits.size(), jobs, [&](std::size_t i) { hits[i].fetch_add(1); });
        for (const auto& h : hits) CHECK(h.load() == 1);
    }
    bool ran = false;
    parallel_for(0, 4, [&](std::size_t) { ran = true; });
    CHECK_FALSE(ran);
}

TEST_CASE("parallel_for rethrows the first failure") {
    auto boom = [](std::size_t i) {
        if (i == 13) throw std::runtime_error("unit 13 failed");
    };
    CHECK_THROWS_AS(parallel_for(64, 4, boom), std::runtime_error);
    CHECK_THROWS_AS(parallel_for(64, 1, boom), std::runtime_error);
}

TEST_CASE("selftest passes and reports per suite") {
    SelfTestReport report = run_selftest(2);
    CHECK(report.ok);
    Json j = parse_json(report.json);
    CHECK(j["status"] == "ok");
    REQUIRE(j["suites"].is_array());
    CHECK(j["suites"].size() == 4);
    for (const Json& suite : j["suites"]) {
        CAPTURE(suite["name"].get<std::string>());
        CHECK(suite["status"] == "ok");
        CHECK(suite["failures"] == 0);
        CHECK(suite["checks"].get<long>() > 0);
    }
    auto names = std::vector<std::string>();
    for (const Json& suite : j["suites"]) names.push_back(suite["name"].get<std::string>());
    CHECK(names == std::vector<std::string>{"dominance-order", "tensor-products", "cone-geometry",
                                            "certificates"});
}

TEST_CASE("selftest report does not depend on the job count") {
    SelfTestReport one = run_selftest(1);
    for (int jobs : {2, 3, 8}) {
        SelfTestReport many = run_selftest(jobs);
        CHECK(many.ok == one.ok);
        CHECK(many.json == one.json);
    }
}
