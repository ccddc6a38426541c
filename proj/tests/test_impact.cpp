#include "aiimpact/csv.hpp"
#include "aiimpact/errors.hpp"
#include "aiimpact/impact.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace aiimpact;

namespace {

IndustryAccount account(const std::string &code, double y, double e, double c) {
    return {code, 2014, y, e, c};
}

ProductivityShock shock(const std::string &code, double lo, double ce, double up) {
    return {code, {lo, ce, up}};
}

} // namespace

TEST_CASE("intensities") {
    SUBCASE("education reference year") {
        // output 332 $BB, energy 16.13 PJ/$BB * output, emissions 4.10 ktCO2/PJ * energy
        auto acc = account("P85", 332.0, 16.13 * 332.0, 4.10 * 16.13 * 332.0);
        auto in = intensities(acc);
        CHECK(in.energy_per_output == doctest::Approx(16.13).epsilon(1e-12));
        CHECK(in.emissions_per_energy == doctest::Approx(4.10).epsilon(1e-12));
    }
    SUBCASE("trade and repair reference year") {
        auto acc = account("G45", 389.0, 0.54 * 389.0, 60.29 * 0.54 * 389.0);
        auto in = intensities(acc);
        CHECK(in.energy_per_output == doctest::Approx(0.54).epsilon(1e-12));
        CHECK(in.emissions_per_energy == doctest::Approx(60.29).epsilon(1e-12));
    }
    SUBCASE("degenerate zeros resolve to zero with diagnostics") {
        std::vector<std::string> diags;
        auto in = intensities(account("X", 0, 0, 0), &diags);
        CHECK(in.energy_per_output == 0.0);
        CHECK(in.emissions_per_energy == 0.0);
        CHECK(diags.size() == 2);
    }
    SUBCASE("reconstruction identity on reference accounts") {
        std::mt19937 rng(31);
        std::uniform_real_distribution<double> u(0.01, 1000.0);
        for (int i = 0; i < 100; ++i) {
            auto acc = account("X", u(rng), u(rng), u(rng));
            auto in = intensities(acc);
            CHECK(in.energy_per_output * acc.output_bb ==
                  doctest::Approx(acc.energy_pj).epsilon(1e-9));
            CHECK(in.emissions_per_energy * in.energy_per_output * acc.output_bb ==
                  doctest::Approx(acc.emissions_kt).epsilon(1e-9));
        }
    }
}

TEST_CASE("industry_impact") {
    SUBCASE("education central row") {
        auto acc = account("P85", 332.0, 16.13 * 332.0, 4.10 * 16.13 * 332.0);
        auto in = intensities(acc);
        auto row = industry_impact(shock("P85", 0.0001, 0.00233, 0.01), acc, in);
        CHECK(row.delta_output_bb.central == doctest::Approx(0.774).epsilon(0.01));
        CHECK(row.delta_energy_pj.central == doctest::Approx(12.477).epsilon(0.01));
        CHECK(row.delta_emissions_kt.central == doctest::Approx(51.133).epsilon(0.01));
    }
    SUBCASE("zero shock gives zero row") {
        auto acc = account("X", 100, 50, 25);
        auto row = industry_impact(shock("X", 0, 0, 0), acc, intensities(acc));
        CHECK(row.delta_output_bb.central == 0.0);
        CHECK(row.delta_energy_pj.upper == 0.0);
        CHECK(row.delta_emissions_kt.lower == 0.0);
    }
    SUBCASE("trade and repair central row") {
        auto acc = account("G45", 389.0, 0.54 * 389.0, 60.29 * 0.54 * 389.0);
        auto row = industry_impact(shock("G45", 0.0001, 0.00076, 0.002), acc, intensities(acc));
        CHECK(row.delta_output_bb.central == doctest::Approx(0.296).epsilon(0.01));
        CHECK(row.delta_energy_pj.central == doctest::Approx(0.161).epsilon(0.01));
        CHECK(row.delta_emissions_kt.central == doctest::Approx(9.711).epsilon(0.01));
    }
    SUBCASE("code mismatch is an error") {
        auto acc = account("X", 100, 50, 25);
        CHECK_THROWS_AS(industry_impact(shock("Y", 0, 0, 0), acc, intensities(acc)),
                        ComputationError);
    }
    SUBCASE("proportional-chain identity and bound ordering") {
        std::mt19937 rng(17);
        std::uniform_real_distribution<double> u(0.01, 400.0);
        for (int i = 0; i < 200; ++i) {
            auto acc = account("X", u(rng), u(rng), u(rng));
            auto in = intensities(acc);
            double lo = std::uniform_real_distribution<double>(0, 0.005)(rng);
            double ce = lo + std::uniform_real_distribution<double>(0, 0.005)(rng);
            double up = ce + std::uniform_real_distribution<double>(0, 0.005)(rng);
            auto row = industry_impact(shock("X", lo, ce, up), acc, in);
            for (Variant v : kAllVariants) {
                double s = v == Variant::lower ? lo : v == Variant::central ? ce : up;
                double direct = in.emissions_per_energy * in.energy_per_output *
                                acc.output_bb * s;
                CHECK(row.delta_emissions_kt.get(v) ==
                      doctest::Approx(direct).epsilon(1e-12));
            }
            CHECK(row.delta_output_bb.lower <= row.delta_output_bb.central);
            CHECK(row.delta_energy_pj.central <= row.delta_energy_pj.upper);
        }
    }
}

TEST_CASE("aggregate") {
    SUBCASE("all-zero rows") {
        std::vector<ImpactRow> rows{{"A", {}, {}, {}}, {"B", {}, {}, {}}};
        auto agg = aggregate(rows);
        CHECK(agg.delta_energy_pj.central == 0.0);
        CHECK(agg.delta_emissions_kt.upper == 0.0);
    }
    SUBCASE("3 synthetic rows against hand-added sums") {
        std::vector<ImpactRow> rows{
            {"A", {0, 1, 2}, {0, 10, 20}, {0, 100, 200}},
            {"B", {1, 2, 3}, {5, 6, 7}, {50, 60, 70}},
            {"C", {0, 0, 0}, {0.5, 0.5, 0.5}, {1, 2, 3}},
        };
        auto agg = aggregate(rows);
        CHECK(agg.delta_output_bb.central == doctest::Approx(3.0));
        CHECK(agg.delta_energy_pj.central == doctest::Approx(16.5));
        CHECK(agg.delta_emissions_kt.central == doctest::Approx(162.0));
        CHECK(agg.delta_energy_pj.upper == doctest::Approx(27.5));
    }
    SUBCASE("duplicate codes are an error") {
        std::vector<ImpactRow> rows{{"A", {}, {}, {}}, {"A", {}, {}, {}}};
        CHECK_THROWS_AS(aggregate(rows), ComputationError);
    }
}

TEST_CASE("contextualize") {
    ContextTotals ctx;
    ctx.national_capacity_gw = 1144.0;
    ctx.national_emissions_gtco2 = 5.0;
    ctx.comparators = {{"chatgpt_inference", 0.2}, {"fleet_low", 5.7}, {"fleet_high", 8.9}};

    auto rep = contextualize(28.0, 897.0, ctx);
    CHECK(rep.delta_energy_twh == doctest::Approx(7.78).epsilon(0.003));
    CHECK(rep.average_capacity_gw == doctest::Approx(0.888).epsilon(0.005));
    CHECK(rep.capacity_share * 100 == doctest::Approx(0.078).epsilon(0.03));
    CHECK(rep.emissions_share * 100 == doctest::Approx(0.0179).epsilon(0.02));
    REQUIRE(rep.comparator_ratios.size() == 3);
    CHECK(rep.comparator_ratios[0].ratio == doctest::Approx(38.9).epsilon(0.03));

    SUBCASE("unit round trip: GW back to PJ") {
        double pj = rep.average_capacity_gw * kHoursPerYear / 1000.0 * kPjPerTwh;
        CHECK(pj == doctest::Approx(28.0).epsilon(1e-9));
    }
    SUBCASE("nonpositive context is an error") {
        ContextTotals bad = ctx;
        bad.national_capacity_gw = 0;
        CHECK_THROWS_AS(contextualize(28.0, 897.0, bad), ValidationError);
        ContextTotals bad2 = ctx;
        bad2.comparators[0].energy_twh = 0;
        CHECK_THROWS_AS(contextualize(28.0, 897.0, bad2), ValidationError);
    }
}

TEST_CASE("aggregate over the bundled central reference table reproduces the totals") {
    auto t = aiimpact::csv::read_file(testutil::fixture("fixtures/table_central.csv"));
    std::vector<ImpactRow> rows;
    auto col = [&](const char *name) { return t.column(name); };
    for (std::size_t r = 1; r <= t.rows.size(); ++r) {
        ImpactRow row;
        row.wiod_code = t.rows[r - 1][col("wiod_code")];
        row.delta_output_bb = {csv::parse_double(t, r, col("dy_lower")),
                               csv::parse_double(t, r, col("dy_central")),
                               csv::parse_double(t, r, col("dy_upper"))};
        row.delta_energy_pj = {csv::parse_double(t, r, col("de_lower")),
                               csv::parse_double(t, r, col("de_central")),
                               csv::parse_double(t, r, col("de_upper"))};
        row.delta_emissions_kt = {csv::parse_double(t, r, col("dc_lower")),
                                  csv::parse_double(t, r, col("dc_central")),
                                  csv::parse_double(t, r, col("dc_upper"))};
        rows.push_back(std::move(row));
    }
    REQUIRE(rows.size() == 55);
    auto agg = aggregate(rows);
    CHECK(agg.delta_energy_pj.central > 27.5);
    CHECK(agg.delta_energy_pj.central < 28.5);
    CHECK(agg.delta_emissions_kt.central > 890.0);
    CHECK(agg.delta_emissions_kt.central < 905.0);
}
