#include <catch2/catch_amalgamated.hpp>

#include "qsym/verify.hpp"

using namespace qsym;

TEST_CASE("every registered suite passes at a small degree") {
    SuiteOptions opt;
    opt.max_degree = 3;
    opt.with_oracle = true;
    for (const SuiteEntry& entry : suite_registry()) {
        SuiteReport rep = entry.run(opt);
        INFO(rep.name << ": " << rep.failures.dump());
        CHECK(rep.ok());
        CHECK(rep.cases > 0);
    }
}

TEST_CASE("registry lookup") {
    CHECK(find_suite("beldend") != nullptr);
    CHECK(find_suite("oracle-all") != nullptr);
    CHECK(find_suite("no-such-suite") == nullptr);
    CHECK(suite_registry().size() == 17);
}

TEST_CASE("report json shape") {
    SuiteOptions opt;
    opt.max_degree = 2;
    SuiteReport rep = run_omega(opt);
    nlohmann::json j = rep.to_json();
    CHECK(j["suite"] == "omega");
    CHECK(j["degree"] == 2);
    CHECK(j["cases"].is_number());
    CHECK(j["failures"].is_array());
}
