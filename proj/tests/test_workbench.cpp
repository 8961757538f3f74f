#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "envbounds/errors.hpp"
#include "scratch_dir.hpp"
#include "workbench/commands.hpp"
#include "workbench/format.hpp"
#include "workbench/reproduce.hpp"
#include "workbench/spec_file.hpp"

using namespace envbounds;
using namespace envbounds::workbench;
using nlohmann::json;

namespace {

std::filesystem::path write(const test::ScratchDir& dir, const std::string& name, const std::string& body) {
    const auto p = dir.path() / name;
    std::ofstream(p) << body;
    return p;
}

}  // namespace

TEST_SUITE("spec_file") {
    TEST_CASE("valid documents") {
        const auto p = parse_potential_spec(R"({"d": 3, "terms": [{"a": 1, "q": 2}, {"a": 0.5, "q": 4}]})");
        CHECK(p.dimension() == 3);
        CHECK(p.terms().size() == 2);
        const auto c = parse_potential_spec(
            R"({"d": 3, "terms": [{"a": -1, "q": -1}, {"a": 1, "q": 2}],
                "extensions": {"allow_coulomb": true, "allow_fractional": false}})");
        CHECK_FALSE(c.certified());
    }

    TEST_CASE("errors name the offending field") {
        CHECK_THROWS_WITH_AS(parse_potential_spec(R"({"terms": []})"), "spec.d: missing", SpecParseError);
        CHECK_THROWS_WITH_AS(parse_potential_spec(R"({"d": 1.5, "terms": []})"), "spec.d: expected an integer",
                             SpecParseError);
        CHECK_THROWS_WITH_AS(parse_potential_spec(R"({"d": 1, "terms": [{"a": 1, "q": 2}, {"a": 1, "q": "x"}]})"),
                             "spec.terms[1].q: expected a number", SpecParseError);
        CHECK_THROWS_WITH_AS(parse_potential_spec(R"({"d": 1, "terms": [{"a": 0, "q": 2}]})"),
                             "spec: potential: no confining term", SpecParseError);
        CHECK_THROWS_AS(parse_potential_spec(R"({"d": 1, "terms": [], "colour": 1})"), SpecParseError);
        CHECK_THROWS_AS(parse_potential_spec("{\"d\": 1,\n \"terms\": [}"), SpecParseError);
        CHECK_THROWS_AS(load_potential_spec("/nonexistent/spec.json"), SpecParseError);
    }
}

TEST_SUITE("reproduce") {
    TEST_CASE("table 1") {
        PCache cache;
        const auto t = reproduce_table(1, {}, &cache);
        CHECK(t.rows.size() == 5);
        CHECK(t.columns == std::vector<std::string>{"P", "beta"});
        CHECK(t.passed());
        CHECK(t.count(CellStatus::flagged) == 0);
        for (const auto& r : t.rows)
            for (const auto& c : r.cells) CHECK(c.deviation <= 1e-5);
    }

    TEST_CASE("tables 2 and 3") {
        PCache cache;
        for (int table : {2, 3}) {
            const auto t = reproduce_table(table, {}, &cache);
            CHECK(t.rows.size() == 11);
            CHECK(t.columns == std::vector<std::string>{"exact", "lower", "upper", "E_b", "E_L"});
            CHECK(t.passed());
            CHECK(t.count(CellStatus::flagged) == (table == 3 ? 1 : 0));
        }
    }

    TEST_CASE("a tight tolerance fails cells") {
        PCache cache;
        CHECK_FALSE(reproduce_table(2, {}, &cache, 1e-9).passed());
    }

    TEST_CASE("csv layout and determinism") {
        PCache cache;
        const auto t = reproduce_table(2, {}, &cache);
        const std::string csv = render_csv(t);
        std::istringstream in(csv);
        std::string header, first;
        std::getline(in, header);
        std::getline(in, first);
        CHECK(header == "lambda,exact,lower,upper,E_b,E_L");
        CHECK(first.rfind("0.001,", 0) == 0);
        CHECK(csv == render_csv(reproduce_table(2, {}, &cache)));
        PCache fresh;
        CHECK(render_json(t) == render_json(reproduce_table(2, {}, &fresh)));
        const auto j = json::parse(render_json(t));
        CHECK(j["rows"].size() == 11);
        CHECK(j["failed"] == 0);
    }

    TEST_CASE("printed precision") {
        CHECK(fixed_decimals(1.0065, 5) == "1.00650");
        CHECK(sig10_string(1.0 / 3.0) == "0.3333333333");
        CHECK(sig10(2.0 / 3.0) == 0.6666666667);
    }
}

TEST_SUITE("commands") {
    TEST_CASE("cache path precedence") {
        ::unsetenv(kCacheEnvVar);
        CHECK(resolve_cache_path(std::nullopt) == "pcache.json");
        ::setenv(kCacheEnvVar, "/tmp/from-env.json", 1);
        CHECK(resolve_cache_path(std::nullopt) == "/tmp/from-env.json");
        CHECK(resolve_cache_path(std::string("flag.json")) == "flag.json");
        ::unsetenv(kCacheEnvVar);
    }

    TEST_CASE("solve") {
        test::ScratchDir dir;
        const auto q = write(dir, "q.json", R"({"d": 1, "terms": [{"a": 1, "q": 2}, {"a": 0.1, "q": 4}]})");
        auto o = cmd_solve(q, 1, 0, std::nullopt, std::nullopt);
        REQUIRE(o.exit_code == kExitOk);
        auto j = json::parse(o.out);
        CHECK(std::abs(j["energy"].get<double>() - 1.06529) < 5e-6);
        CHECK(j["nodes"] == 0);
        CHECK(j["config"]["abs_tol"] == 1e-9);

        const auto h = write(dir, "h.json", R"({"d": 3, "terms": [{"a": 1, "q": 2}]})");
        j = json::parse(cmd_solve(h, 1, 0, std::nullopt, std::nullopt).out);
        CHECK(j["energy"] == 3.0);
        j = json::parse(cmd_solve(h, 1, 0, 5, std::nullopt).out);
        CHECK(j["energy"] == 5.0);

        const auto z = write(dir, "z.json", R"({"d": 1, "terms": [{"a": 0, "q": 2}]})");
        o = cmd_solve(z, 1, 0, std::nullopt, std::nullopt);
        CHECK(o.exit_code == kExitBadInput);
        CHECK(o.err.find("no confining term") != std::string::npos);

        const auto bad = write(dir, "bad.json", "{ not json");
        CHECK(cmd_solve(bad, 1, 0, std::nullopt, std::nullopt).exit_code == kExitBadInput);
        CHECK(cmd_solve(h, 1, 0, std::nullopt, -1.0).exit_code == kExitBadInput);
    }

    TEST_CASE("pnumber") {
        PCache cache;
        auto j = json::parse(cmd_pnumber(4, 1, 0, 1, "auto", std::nullopt, cache).out);
        CHECK(j["P"] == 0.6482831016);
        CHECK(j["source"] == "numeric");
        j = json::parse(cmd_pnumber(2, 2, 1, 3, "auto", std::nullopt, cache).out);
        CHECK(j["P"] == 4.5);
        CHECK(j["source"] == "closed_form");
        j = json::parse(cmd_pnumber(4, 1, 0, 1, "gamma-upper", std::nullopt, cache).out);
        CHECK(j["P"] == 0.6580370065);
        CHECK(cmd_pnumber(4, 2, 0, 1, "gamma-upper", std::nullopt, cache).exit_code == kExitBadInput);
    }

    TEST_CASE("bounds") {
        test::ScratchDir dir;
        PCache cache;
        const auto q = write(dir, "q.json", R"({"d": 1, "terms": [{"a": 1, "q": 2}, {"a": 0.01, "q": 4}]})");
        auto j = json::parse(cmd_bounds(q, 1, 0, std::nullopt, false, std::nullopt, cache).out);
        CHECK(std::abs(j["lower_A"]["value"].get<double>() - 1.00248) < 1e-5);
        CHECK(std::abs(j["mixed_B"]["value"].get<double>() - 1.00697) < 1e-5);
        CHECK(j["exact"].is_null());
        const auto s = write(dir, "s.json", R"({"d": 1, "terms": [{"a": 1, "q": 2}, {"a": 100, "q": 6}]})");
        j = json::parse(cmd_bounds(s, 1, 0, std::nullopt, true, std::nullopt, cache).out);
        CHECK(std::abs(j["exact"].get<double>() - 3.71698) < 1e-5);
        CHECK(std::abs(j["gamma_upper_B"]["value"].get<double>() - 3.946987) < 1e-6);
        const auto r4 = write(dir, "r4.json", R"({"d": 1, "terms": [{"a": 1, "q": 4}]})");
        j = json::parse(cmd_bounds(r4, 1, 0, std::nullopt, true, std::nullopt, cache).out);
        CHECK(std::abs(j["mixed_B"]["value"].get<double>() - j["exact"].get<double>()) < 1e-7);
    }

    TEST_CASE("reproduce writes a file and reports through the exit code") {
        test::ScratchDir dir;
        PCache cache;
        const auto out = dir.path() / "t1.csv";
        auto o = cmd_reproduce(1, "csv", std::nullopt, out, cache);
        CHECK(o.exit_code == kExitOk);
        CHECK(o.out.empty());
        CHECK(std::filesystem::file_size(out) > 0);
        CHECK(o.err.find("table 1: ok") != std::string::npos);
        o = cmd_reproduce(3, "json", 1e-9, std::nullopt, cache);
        CHECK(o.exit_code == kExitCheckFailed);
        CHECK(cmd_reproduce(4, "csv", std::nullopt, std::nullopt, cache).exit_code == kExitBadInput);
    }

    TEST_CASE("anharmonic") {
        PCache cache;
        ModelChoice lower;
        lower.kind = "lower";
        auto j = json::parse(cmd_anharmonic_energy(lower, 0.01, cache).out);
        CHECK(std::abs(j["energy"].get<double>() - 1.00248) < 1e-5);
        ModelChoice explicit_model;
        explicit_model.alpha = 0.25;
        explicit_model.beta = 0.0625;
        j = json::parse(cmd_anharmonic_lambda(explicit_model, j["energy"].get<double>(), cache).out);
        CHECK(j["lambda"].get<double>() == doctest::Approx(0.01).epsilon(1e-8));
        ModelChoice half;
        half.alpha = 1.0;
        CHECK(cmd_anharmonic_energy(half, 1, cache).exit_code == kExitBadInput);
        j = json::parse(cmd_anharmonic_scale({1, 4, 1, 2}).out);
        CHECK(j["lambda"] == 0.125);
        CHECK(j["energy_scale"] == 2.0);
        j = json::parse(cmd_anharmonic_bhattacharya(2, 10, std::nullopt).out);
        CHECK(std::abs(j["energy"].get<double>() - 2.45005) < 1e-5);
        j = json::parse(cmd_anharmonic_dasgupta(2, 0, 10, 1.06036209).out);
        CHECK(std::abs(j["energy"].get<double>() - 2.430207134) < 1e-9);
    }

    TEST_CASE("cache actions") {
        test::ScratchDir dir;
        PCache cache(dir.path() / "c.json");
        CHECK(cmd_cache("warm", cache).exit_code == kExitOk);
        CHECK(cache.size() == 5);
        CHECK(json::parse(cmd_cache("show", cache).out).size() == 5);
        CHECK(cmd_cache("path", cache).out == (dir.path() / "c.json").string() + "\n");
        cmd_cache("clear", cache);
        CHECK(cache.size() == 0);
        CHECK(cmd_cache("explode", cache).exit_code == kExitBadInput);
    }
}
