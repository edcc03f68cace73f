#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "bcvharmonic.h"

namespace {

struct Engine {
    bcvh_engine* eng = bcvh_create();
    ~Engine() { bcvh_destroy(eng); }
};

} // namespace

TEST_SUITE("capi") {

TEST_CASE("lifecycle") {
    Engine e;
    REQUIRE(e.eng != nullptr);
    CHECK(std::strcmp(bcvh_version(), "0.1.0") == 0);
    bcvh_destroy(nullptr); // must be a harmless no-op
    bcvh_string_free(nullptr);
}

TEST_CASE("classification round trip") {
    Engine e;
    bcvh_classification c{};
    REQUIRE(bcvh_classify(e.eng, 1.0, 0.0, 3, &c) == BCVH_OK);
    CHECK(c.tag == BCVH_CASE_POSITIVE_BUNDLE_CURVATURE);
    REQUIRE(c.n_roots == 1);
    CHECK(c.kappa_sq[0] == doctest::Approx(8.0));
    REQUIRE(c.has_radius != 0);
    CHECK(c.rho == doctest::Approx(0.5));
    CHECK(c.radius[0] == doctest::Approx(1.0 / std::sqrt(12.0)));

    REQUIRE(bcvh_classify(e.eng, 0.9, 2.0, 10, &c) == BCVH_OK);
    CHECK(c.tag == BCVH_CASE_SU2_NEGATIVE);
    REQUIRE(c.n_roots == 2);
    CHECK(c.kappa_sq[0] == doctest::Approx(0.4));
    CHECK(c.kappa_sq[1] == doctest::Approx(2.0));
    REQUIRE(c.has_r_bound != 0);
    CHECK(c.r_bound == doctest::Approx(8.9814239699).epsilon(1e-6));

    REQUIRE(bcvh_classify(e.eng, -1.0, 1.0, 7, &c) == BCVH_OK);
    CHECK(c.tag == BCVH_CASE_NO_SOLUTION);
    CHECK(c.n_roots == 0);

    bcvh_quadratic q{};
    REQUIRE(bcvh_quadratic_condition(e.eng, 1.0, 1.0, 2, &q) == BCVH_OK);
    CHECK(q.b == doctest::Approx(-2.5));
    CHECK(q.c == doctest::Approx(-1.5));
    REQUIRE(q.n_positive == 1);
    CHECK(q.positive[0] == doctest::Approx(3.0));
}

TEST_CASE("argument and domain errors") {
    Engine e;
    bcvh_classification c{};
    CHECK(bcvh_classify(e.eng, 1.0, 1.0, 1, &c) == BCVH_INVALID_ARGUMENT);
    CHECK(std::string(bcvh_last_error(e.eng)).size() > 0);
    CHECK(bcvh_classify(e.eng, 1.0, 1.0, 3, nullptr) == BCVH_INVALID_ARGUMENT);

    bcvh_helicoid h{};
    CHECK(bcvh_helicoid_tension3(e.eng, 2.0, -1.0, 1.0, &h) == BCVH_INADMISSIBLE);
    CHECK(bcvh_helicoid_tension3(e.eng, 0.5, 1.0, 1.0, &h) == BCVH_INADMISSIBLE);

    double R = 0.0, rho = 0.0;
    CHECK(bcvh_circle_radius(e.eng, -1.0, 1.0, &R, &rho) == BCVH_INVALID_ARGUMENT);

    double rb = 0.0;
    CHECK(bcvh_r_bound(e.eng, 1.0, 1.0, &rb) == BCVH_INADMISSIBLE);
}

TEST_CASE("tension evaluations") {
    Engine e;
    bcvh_tension3_result t{};
    REQUIRE(bcvh_tension3(e.eng, 1.0, 0.0, std::sqrt(8.0), &t) == BCVH_OK);
    CHECK(std::abs(t.residuals[0]) <= 1e-9);
    CHECK(std::abs(t.residuals[1]) <= 1e-9);
    CHECK(std::abs(t.residuals[2]) <= 1e-9);

    double tau[3] = {1.0, 1.0, 1.0};
    REQUIRE(bcvh_r_tension(e.eng, 1.0, 2.0, 1.0, 5, tau) == BCVH_OK);
    CHECK(std::abs(tau[0]) <= 1e-12);
    CHECK(std::abs(tau[1]) <= 1e-12);
    CHECK(std::abs(tau[2]) <= 1e-9);
    REQUIRE(bcvh_r_tension(e.eng, 1.0, 2.0, 1.5, 5, tau) == BCVH_OK);
    CHECK(std::abs(tau[2]) > 1e-3);

    double R = 0.0, rho = 0.0;
    REQUIRE(bcvh_circle_radius(e.eng, 1.0, 2.0, &R, &rho) == BCVH_OK);
    CHECK(rho == doctest::Approx(0.5));
    CHECK(R == doctest::Approx(0.5 / std::sqrt(2.0)));
    REQUIRE(bcvh_circle_radius(e.eng, 1.0, 2.0, &R, nullptr) == BCVH_OK);

    bcvh_helicoid h{};
    REQUIRE(bcvh_helicoid_tension3(e.eng, 0.5, -1.0, 1.0, &h) == BCVH_OK);
    CHECK(h.t1 == doctest::Approx(102.5).epsilon(1e-9));
    CHECK(h.t2 == doctest::Approx(102.5).epsilon(1e-9));
    CHECK(h.t3 == doctest::Approx(-2.5).epsilon(1e-9));
    CHECK(h.norm_a2 == doctest::Approx(1.5));
    CHECK(h.alpha_signed == doctest::Approx(-0.5));
}

TEST_CASE("bounds") {
    Engine e;
    double rb = 0.0, ra = 0.0;
    REQUIRE(bcvh_r_bound(e.eng, 0.9, 2.0, &rb) == BCVH_OK);
    REQUIRE(bcvh_r_a(e.eng, 0.9, &ra) == BCVH_OK);
    CHECK(rb == doctest::Approx(ra).epsilon(1e-13));
    CHECK(rb == doctest::Approx(8.9814239699).epsilon(1e-6));
    CHECK(bcvh_r_a(e.eng, 0.2, &ra) == BCVH_INADMISSIBLE);
}

TEST_CASE("verification report") {
    Engine e;
    char* report = nullptr;
    int all_passed = 0;
    REQUIRE(bcvh_verify(e.eng, "classify", &report, &all_passed) == BCVH_OK);
    REQUIRE(report != nullptr);
    CHECK(all_passed == 1);

    const nlohmann::json doc = nlohmann::json::parse(report);
    CHECK(doc.at("all_passed").get<bool>());
    REQUIRE(doc.at("suites").is_array());
    REQUIRE(doc.at("suites").size() == 1);
    CHECK(doc.at("suites")[0].at("suite").get<std::string>() == "classify");
    CHECK(doc.at("suites")[0].at("checks").size() > 0);
    for (const auto& check : doc.at("suites")[0].at("checks")) {
        CHECK(check.contains("name"));
        CHECK(check.contains("residual"));
        CHECK(check.contains("tol"));
        CHECK(check.contains("passed"));
    }
    bcvh_string_free(report);

    CHECK(bcvh_verify(e.eng, "no-such-suite", &report, &all_passed) == BCVH_INVALID_ARGUMENT);

    // custom configuration passes through
    bcvh_verify_config cfg{};
    cfg.tol_exact = 1e-8;
    cfg.seed = 12345;
    report = nullptr;
    REQUIRE(bcvh_verify_ex(e.eng, "classify", &cfg, &report, &all_passed) == BCVH_OK);
    CHECK(all_passed == 1);
    bcvh_string_free(report);
}

TEST_CASE("diagram buffers") {
    Engine e;
    const int res_l = 5, res_m = 4;
    int tags[res_l * res_m];
    double lv[res_l], mv[res_m];
    REQUIRE(bcvh_diagram(e.eng, 6, 0.0, 2.0, -1.0, 2.0, res_l, res_m, tags, lv, mv) == BCVH_OK);
    CHECK(lv[0] == doctest::Approx(0.0));
    CHECK(lv[res_l - 1] == doctest::Approx(2.0));
    CHECK(mv[0] == doctest::Approx(-1.0));
    CHECK(mv[res_m - 1] == doctest::Approx(2.0));
    for (int i = 0; i < res_l * res_m; ++i) {
        CHECK(tags[i] >= 0);
        CHECK(tags[i] <= 3);
    }
    // top row (m = 2), first column (l = 0): inside the solvable cone
    CHECK(tags[(res_m - 1) * res_l + 0] == BCVH_CASE_POSITIVE_BUNDLE_CURVATURE);
    // bottom row (m = -1): nothing anywhere
    for (int il = 0; il < res_l; ++il)
        CHECK(tags[il] == BCVH_CASE_NO_SOLUTION);

    CHECK(bcvh_diagram(e.eng, 6, 0.0, 2.0, -1.0, 2.0, 1, res_m, tags, lv, mv) ==
          BCVH_INVALID_ARGUMENT);
}

} // TEST_SUITE
