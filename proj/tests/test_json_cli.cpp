#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "roots/cli.hpp"
#include "roots/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace roots;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
    io::json json() const { return io::json::parse(out); }
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const io::json& payload) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << payload.dump(2);
    return path.string();
}

io::json sign_set_payload() {
    io::json gram = io::json::array();
    for (int i = 0; i < 4; ++i) {
        io::json row = io::json::array();
        for (int j = 0; j < 4; ++j)
            row.push_back(i == j ? "1/4" : "0");
        gram.push_back(row);
    }
    io::json vectors = io::json::array();
    for (int bits = 0; bits < 16; ++bits) {
        io::json v = io::json::array();
        for (int i = 0; i < 4; ++i)
            v.push_back((bits >> i) & 1 ? -1 : 1);
        vectors.push_back(v);
    }
    return io::json{{"basis_gram", gram}, {"vectors", vectors}};
}

}  // namespace

TEST_CASE("rational JSON values are canonical strings and parse leniently") {
    CHECK(io::rational_to_json(Rational(1, 2)) == "1/2");
    CHECK(io::rational_to_json(Rational(-7)) == "-7");
    CHECK(io::rational_from_json(io::json("2/4"), "x") == Rational(1, 2));
    CHECK(io::rational_from_json(io::json(3), "x") == 3);
    CHECK_THROWS_AS(io::rational_from_json(io::json("nope"), "x"), io::ParseError);
    CHECK_THROWS_AS(io::rational_from_json(io::json(1.5), "x"), io::ParseError);
    try {
        io::rational_from_json(io::json("bad"), "vectors[3][1]");
        FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
        CHECK(std::string(e.what()).find("vectors[3][1]") != std::string::npos);
    }
}

TEST_CASE("root sets round-trip through JSON") {
    auto d4 = catalog::build(catalog::Family::D, 4);
    auto j = io::rootset_to_json(d4);
    CHECK(j.contains("norms"));
    auto back = io::rootset_from_json(j, "input");
    CHECK(back.vectors() == d4.vectors());
    CHECK(back.basis_form() == d4.basis_form());

    // Emission is deterministic.
    CHECK(io::rootset_to_json(d4).dump() == j.dump());
}

TEST_CASE("malformed payloads fail with located errors") {
    io::json good = sign_set_payload();

    io::json no_vectors = good;
    no_vectors.erase("vectors");
    CHECK_THROWS_AS(io::rootset_from_json(no_vectors, "input"), io::ParseError);

    io::json asym = good;
    asym["basis_gram"][0][1] = "1/3";
    CHECK_THROWS_AS(io::rootset_from_json(asym, "input"), io::ParseError);

    io::json ragged = good;
    ragged["vectors"][2].erase(3);
    CHECK_THROWS_AS(io::rootset_from_json(ragged, "input"), io::ParseError);

    io::json with_zero = good;
    io::json zero = io::json::array();
    for (int i = 0; i < 4; ++i)
        zero.push_back(0);
    with_zero["vectors"].push_back(zero);
    CHECK_THROWS_AS(io::rootset_from_json(with_zero, "input"), io::ParseError);
}

TEST_CASE("weight configurations round-trip through JSON") {
    weights::WeightConfig cfg;
    cfg.shape = weights::Shape::I;
    cfg.basis_form = GramMatrix::identity_scaled(4, Rational(1, 4));
    cfg.A = {Vec(4, Rational(0))};
    for (std::size_t i = 0; i < 4; ++i) {
        Vec v(4, Rational(0));
        v[i] = 1;
        cfg.B.push_back(v);
    }
    auto j = io::weight_config_to_json(cfg);
    auto back = io::weight_config_from_json(j, "config");
    CHECK(back.shape == cfg.shape);
    CHECK(back.A == cfg.A);
    CHECK(back.B == cfg.B);
    CHECK(back.basis_form == cfg.basis_form);

    io::json bad = j;
    bad["shape"] = "V";
    CHECK_THROWS_AS(io::weight_config_from_json(bad, "config"), io::ParseError);
}

TEST_CASE("cli: catalog") {
    auto r = run_cli({"catalog", "D", "4", "--json"});
    REQUIRE(r.exit_code == 0);
    auto j = r.json();
    CHECK(j["vectors"].size() == 24);

    CHECK(run_cli({"catalog", "X", "4"}).exit_code == 2);
    CHECK(run_cli({"catalog", "E", "9"}).exit_code == 2);
    CHECK(run_cli({"catalog", "D", "4", "--frobnicate"}).exit_code == 2);
}

TEST_CASE("cli: closure emits the closure and its complement") {
    auto path = write_temp("rootsys_test_w16.json", sign_set_payload());
    auto r = run_cli({"closure", path, "--json"});
    REQUIRE(r.exit_code == 0);
    auto j = r.json();
    CHECK(j["closure"]["vectors"].size() == 24);
    CHECK(j["complement"]["vectors"].size() == 8);

    // Byte-identical across runs.
    auto again = run_cli({"closure", path, "--json"});
    CHECK(again.out == r.out);
}

TEST_CASE("cli: closure rejects non-subsystems with exit code 2") {
    io::json payload;
    payload["basis_gram"] = io::json::array({io::json::array({"1"})});
    payload["vectors"] = io::json::array({io::json::array({1}), io::json::array({-1}),
                                          io::json::array({3}), io::json::array({-3})});
    auto path = write_temp("rootsys_test_multiples.json", payload);
    auto r = run_cli({"closure", path});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("R2") != std::string::npos);

    CHECK(run_cli({"closure", "/nonexistent/file.json"}).exit_code == 2);
}

TEST_CASE("cli: admissible") {
    auto path = write_temp("rootsys_test_w16.json", sign_set_payload());
    auto r = run_cli({"admissible", path, "--json"});
    REQUIRE(r.exit_code == 0);
    auto j = r.json();
    CHECK(j["admissible"] == true);
    CHECK(j["complement"]["vectors"].size() == 8);
    CHECK(j["complement_identification"]["components"].size() == 4);
}

TEST_CASE("cli: identify") {
    auto d4 = catalog::build(catalog::Family::D, 4);
    auto path = write_temp("rootsys_test_d4.json", io::rootset_to_json(d4));
    auto r = run_cli({"identify", path, "--json"});
    REQUIRE(r.exit_code == 0);
    auto j = r.json();
    REQUIRE(j["components"].size() == 1);
    CHECK(j["components"][0]["family"] == "D");
    CHECK(j["components"][0]["rank"] == 4);
    CHECK(j["components"][0]["roots"] == 24);
    CHECK(j["total_roots"] == 24);

    // The bare sign set is not a root system: malformed input for identify.
    auto bad_path = write_temp("rootsys_test_w16.json", sign_set_payload());
    auto bad = run_cli({"identify", bad_path});
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("R4") != std::string::npos);
}

TEST_CASE("cli: weights") {
    weights::WeightConfig cfg;
    cfg.shape = weights::Shape::I;
    cfg.basis_form = GramMatrix::identity_scaled(4, Rational(1, 4));
    cfg.A = {Vec(4, Rational(0))};
    for (std::size_t i = 0; i < 4; ++i) {
        Vec v(4, Rational(0));
        v[i] = 1;
        cfg.B.push_back(v);
    }
    auto path = write_temp("rootsys_test_cfg.json", io::weight_config_to_json(cfg));
    auto r = run_cli({"weights", "--shape", "I", "--config", path, "--json"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.json()["vectors"].size() == 16);

    CHECK(run_cli({"weights", "--shape", "II", "--config", path}).exit_code == 2);
    CHECK(run_cli({"weights", "--shape", "Z", "--config", path}).exit_code == 2);
}

TEST_CASE("cli: verify subcommands and exit codes") {
    auto r14 = run_cli({"verify", "r14", "--json"});
    REQUIRE(r14.exit_code == 0);  // infeasible is the expected status here
    CHECK(r14.json()["status"] == "INFEASIBLE");

    auto theorem = run_cli({"verify", "theorem", "--case", "IV", "--json"});
    REQUIRE(theorem.exit_code == 0);
    auto j = theorem.json();
    CHECK(j["status"] == "VERIFIED");
    CHECK(j["artifacts"]["g_identification"]["components"][0]["family"] == "E");
    CHECK(j["artifacts"]["g_identification"]["components"][0]["rank"] == 8);

    CHECK(run_cli({"verify", "theorem", "--case", "V"}).exit_code == 2);
    CHECK(run_cli({"verify", "lemma-gram", "--q", "5"}).exit_code == 2);
    CHECK(run_cli({"verify", "prop-bounds", "--case", "P9"}).exit_code == 2);
    CHECK(run_cli({"verify"}).exit_code == 2);
}

TEST_CASE("cli: verify all with filter") {
    auto filtered = run_cli({"verify", "all", "--filter", "theorem", "--json"});
    REQUIRE(filtered.exit_code == 0);
    auto j = filtered.json();
    CHECK(j["all_expected"] == true);
    CHECK(j["reports"].size() == 4);

    CHECK(run_cli({"verify", "all", "--filter", "bogus"}).exit_code == 2);
}

TEST_CASE("cli: help and unknown commands") {
    CHECK(run_cli({"--help"}).exit_code == 0);
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({}).exit_code == 2);
}
