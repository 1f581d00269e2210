#include "doctest.h"
#include "hagakit/verify.hpp"

using namespace hagakit;

TEST_CASE("verification suite passes on defaults") {
    VerifyOptions options;
    options.samples = 200;
    options.seed = 7;
    const auto results = run_verification(options);
    CHECK(results.size() >= 20);
    for (const CheckResult& check : results) {
        INFO(check.name, " residual=", check.max_residual, " tol=", check.tolerance);
        CHECK(check.pass);
    }
    CHECK(all_pass(results));
}

TEST_CASE("suite is robust at a single sample") {
    VerifyOptions options;
    options.samples = 1;
    options.seed = 0;
    CHECK(all_pass(run_verification(options)));
}

TEST_CASE("suite is deterministic for a fixed seed") {
    VerifyOptions options;
    options.samples = 50;
    options.seed = 99;
    const auto first = run_verification(options);
    const auto second = run_verification(options);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].name == second[i].name);
        CHECK(first[i].max_residual == second[i].max_residual);
        CHECK(first[i].pass == second[i].pass);
    }
}

TEST_CASE("injected perturbation makes the suite fail") {
    VerifyOptions options;
    options.samples = 50;
    options.seed = 7;
    options.perturb = 1e-3;
    const auto results = run_verification(options);
    CHECK_FALSE(all_pass(results));
    int failed = 0;
    for (const CheckResult& check : results) {
        if (!check.pass) ++failed;
    }
    CHECK(failed >= 10);  // corruption reaches every measuring check
}
