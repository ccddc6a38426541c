#include "aiimpact/errors.hpp"
#include "aiimpact/shock.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace aiimpact;

namespace {

WiodExposure exposure(const std::string &code, double lo, double ce, double up,
                      double total = 100.0) {
    WiodExposure e;
    e.wiod_code = code;
    e.exposed_wage_bill_bb = {lo, ce, up};
    e.total_wage_bill_bb = total;
    return e;
}

} // namespace

TEST_CASE("cost savings factor") {
    CostSavings cs;
    CHECK(cs.phi() == doctest::Approx(0.0621).epsilon(1e-12));
    cs.annualization_divisor = 10;
    CHECK(cs.phi() == doctest::Approx(0.00621).epsilon(1e-12));
    cs.task_fraction = 1.5;
    CHECK_THROWS_AS(cs.validate(), ValidationError);
}

TEST_CASE("productivity_shock") {
    CostSavings cs;
    SUBCASE("zero exposure gives zero shock") {
        std::vector<WiodExposure> exp{exposure("A03", 0, 0, 0)};
        auto shocks = productivity_shock(exp, {{"A03", 50.0}}, cs);
        CHECK(shocks[0].value.central == 0.0);
        CHECK(shocks[0].value.upper == 0.0);
    }
    SUBCASE("phi = 0 gives zero shock") {
        CostSavings zero = cs;
        zero.task_fraction = 0;
        std::vector<WiodExposure> exp{exposure("P85", 1, 2, 3)};
        auto shocks = productivity_shock(exp, {{"P85", 332.0}}, zero);
        CHECK(shocks[0].value.central == 0.0);
    }
    SUBCASE("education calibration: central shock 0.00233 on y = 332") {
        // exposed wage bill chosen so phi * ewb / y = 0.233%
        double ewb = 0.00233 * 332.0 / cs.phi();
        std::vector<WiodExposure> exp{exposure("P85", ewb / 2, ewb, ewb * 2)};
        auto shocks = productivity_shock(exp, {{"P85", 332.0}}, cs);
        CHECK(shocks[0].value.central == doctest::Approx(0.00233).epsilon(1e-12));
    }
    SUBCASE("zero output with nonzero exposure is an error; with zero exposure is fine") {
        std::vector<WiodExposure> bad{exposure("X", 0, 1, 2)};
        CHECK_THROWS_AS(productivity_shock(bad, {{"X", 0.0}}, cs), ComputationError);
        std::vector<WiodExposure> ok{exposure("X", 0, 0, 0)};
        CHECK(productivity_shock(ok, {{"X", 0.0}}, cs)[0].value.central == 0.0);
    }
    SUBCASE("linearity in phi") {
        std::vector<WiodExposure> exp{exposure("A", 1, 2, 3), exposure("B", 0.5, 0.7, 0.9)};
        std::map<std::string, double> y{{"A", 10.0}, {"B", 20.0}};
        auto base = productivity_shock(exp, y, cs);
        CostSavings doubled = cs;
        doubled.task_fraction *= 2;
        auto scaled = productivity_shock(exp, y, doubled);
        for (std::size_t i = 0; i < base.size(); ++i)
            for (Variant v : kAllVariants)
                CHECK(scaled[i].value.get(v) ==
                      doctest::Approx(2.0 * base[i].value.get(v)).epsilon(1e-12));
    }
    SUBCASE("bound ordering is inherited from exposure") {
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> u(0, 5);
        for (int i = 0; i < 100; ++i) {
            double lo = u(rng), ce = lo + u(rng), up = ce + u(rng);
            std::vector<WiodExposure> exp{exposure("A", lo, ce, up)};
            auto s = productivity_shock(exp, {{"A", 100.0}}, cs);
            CHECK(s[0].value.lower <= s[0].value.central);
            CHECK(s[0].value.central <= s[0].value.upper);
        }
    }
}

TEST_CASE("domar_weights") {
    SUBCASE("single industry") {
        auto w = domar_weights({{"A", 7.0}});
        CHECK(w[0].lambda == 1.0);
    }
    SUBCASE("two equal industries") {
        auto w = domar_weights({{"A", 5.0}, {"B", 5.0}});
        CHECK(w[0].lambda == 0.5);
        CHECK(w[1].lambda == 0.5);
    }
    SUBCASE("random fixture matches sum-and-divide oracle; weights sum to 1") {
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> u(0.1, 500.0);
        std::map<std::string, double> y;
        for (int i = 0; i < 55; ++i)
            y["I" + std::to_string(i)] = u(rng);
        double total = 0;
        for (auto &[c, v] : y)
            total += v;
        auto w = domar_weights(y);
        double sum = 0;
        for (const auto &dw : w) {
            CHECK(dw.lambda == doctest::Approx(y.at(dw.wiod_code) / total).epsilon(1e-12));
            sum += dw.lambda;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("all-zero outputs are an error") {
        CHECK_THROWS_AS(domar_weights({{"A", 0.0}, {"B", 0.0}}), ComputationError);
    }
}

TEST_CASE("aggregate_log_output_change") {
    CostSavings cs;
    SUBCASE("all shocks zero") {
        std::vector<ProductivityShock> shocks{{"A", {}}, {"B", {}}};
        std::vector<DomarWeight> w{{"A", 0.3}, {"B", 0.7}};
        CHECK(aggregate_log_output_change(shocks, w, Variant::central) == 0.0);
    }
    SUBCASE("single industry with lambda 1 returns its shock") {
        std::vector<ProductivityShock> shocks{{"A", {0.001, 0.002, 0.003}}};
        std::vector<DomarWeight> w{{"A", 1.0}};
        CHECK(aggregate_log_output_change(shocks, w, Variant::central) == 0.002);
    }
    SUBCASE("3-industry fixture against hand-computed weighted sum") {
        std::vector<ProductivityShock> shocks{
            {"A", {0, 0.001, 0}}, {"B", {0, 0.004, 0}}, {"C", {0, 0.01, 0}}};
        std::vector<DomarWeight> w{{"A", 0.5}, {"B", 0.25}, {"C", 0.25}};
        // 0.5*0.001 + 0.25*0.004 + 0.25*0.01 = 0.004
        CHECK(aggregate_log_output_change(shocks, w, Variant::central) ==
              doctest::Approx(0.004).epsilon(1e-12));
    }
    SUBCASE("consistency with sum(dy)/sum(y)") {
        std::mt19937 rng(23);
        std::uniform_real_distribution<double> u(0.1, 100.0);
        std::map<std::string, double> y;
        std::vector<ProductivityShock> shocks;
        for (int i = 0; i < 20; ++i) {
            std::string code = "I" + std::to_string(i);
            y[code] = u(rng);
            double s = std::uniform_real_distribution<double>(0, 0.01)(rng);
            shocks.push_back({code, {s / 2, s, s * 2}});
        }
        auto w = domar_weights(y);
        double total_y = 0, total_dy = 0;
        for (const auto &s : shocks) {
            total_y += y.at(s.wiod_code);
            total_dy += y.at(s.wiod_code) * s.value.central;
        }
        CHECK(aggregate_log_output_change(shocks, w, Variant::central) ==
              doctest::Approx(total_dy / total_y).epsilon(1e-12));
    }
    SUBCASE("code-set mismatch is an error") {
        std::vector<ProductivityShock> shocks{{"A", {}}};
        std::vector<DomarWeight> w{{"B", 1.0}};
        CHECK_THROWS_AS(aggregate_log_output_change(shocks, w, Variant::central),
                        ComputationError);
    }
}

TEST_CASE("merge_variant_exposures rejects misaligned tables") {
    std::vector<IndustryExposure> a{{"A", 1, 2, 0.5}};
    std::vector<IndustryExposure> b{{"B", 1, 2, 0.5}};
    CHECK_THROWS_AS(merge_variant_exposures(a, b, a), ComputationError);
    std::vector<IndustryExposure> empty;
    CHECK_THROWS_AS(merge_variant_exposures(a, a, empty), ComputationError);
}
