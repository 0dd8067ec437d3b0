#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lpc/cli.hpp"
#include "lpc/code_io.hpp"
#include "lpc/cpecc_rs.hpp"
#include "lpc/errors.hpp"
#include "lpc/mds_cpc.hpp"
#include "lpc/simulate.hpp"

using namespace lpc;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int rc = run_cli(args, out, err);
    return {rc, out.str(), err.str()};
}

std::filesystem::path work_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "lpc_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::vector<Wire> parse_wires(const std::string& line) {
    std::vector<Wire> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(static_cast<Wire>(std::stoul(item)));
    return out;
}

}  // namespace

TEST_CASE("bus state") {
    BusState bus(4);
    bus.apply(Codeword(4, {1, 3}), 0.5);
    bus.apply(Codeword(4, {1}), 0.5);
    CHECK(bus.state == std::vector<std::uint8_t>{0, 0, 0, 1});
    CHECK(bus.transitions == std::vector<std::uint64_t>{0, 2, 0, 1});
    CHECK(bus.proxy[1] == doctest::Approx(0.75));
    CHECK(bus.proxy[3] == doctest::Approx(0.25));
    CHECK(bus.hottest(2) == std::vector<Wire>{1, 3});
    // ties go to the lower index
    CHECK(BusState(5).hottest(3) == std::vector<Wire>{0, 1, 2});
}

TEST_CASE("simulation") {
    const auto code = LpcCode::from_generator(MdsCpcCode::build_rs(4, 3));

    SUBCASE("zero steps") {
        SimOptions opts;
        opts.steps = 0;
        const auto rep = simulate(code, opts);
        CHECK(rep.steps == 0);
        CHECK(rep.hot_violations == 0);
        CHECK_FALSE(rep.decode_success_rate());
        CHECK(rep.to_json()["decode_success_rate"].is_null());
    }
    SUBCASE("(12,3,3) under top_t") {
        SimOptions opts;
        opts.steps = 10000;
        const auto rep = simulate(code, opts);
        CHECK(rep.hot_violations == 0);
        CHECK(rep.max_transitions == 3);
        CHECK(rep.min_transitions == 3);
        CHECK(rep.weight_mismatches == 0);
        CHECK(rep.decode_success_rate() == 1.0);
        std::uint64_t total = 0;
        for (auto c : rep.wire_transitions) total += c;
        CHECK(total == 30000);
    }
    SUBCASE("identical seeds give identical reports") {
        for (auto policy : {HotPolicy::top_t, HotPolicy::random_t}) {
            SimOptions opts;
            opts.steps = 500;
            opts.policy = policy;
            opts.seed = 9;
            CHECK(simulate(code, opts).to_json() == simulate(code, opts).to_json());
        }
    }
    SUBCASE("fixed hot set") {
        SimOptions opts;
        opts.steps = 300;
        opts.policy = HotPolicy::adversarial_fixed;
        opts.fixed_hot = {0, 4, 8};
        const auto rep = simulate(code, opts);
        CHECK(rep.hot_violations == 0);
        CHECK(rep.wire_transitions[0] == 0);
        CHECK(rep.wire_transitions[4] == 0);
        opts.fixed_hot = {0, 1, 2, 3};
        CHECK_THROWS_AS(simulate(code, opts), ParameterError);
    }
    SUBCASE("CPECC with one flipped wire per step") {
        const auto cpecc = LpcCode::from_generator(CpeccCode::build(8, 4, 1));
        SimOptions opts;
        opts.steps = 10000;
        opts.channel_flips = 1;
        const auto rep = simulate(cpecc, opts);
        CHECK(rep.hot_violations == 0);
        CHECK(rep.decode_attempts == 10000);
        CHECK(rep.decode_success_rate() == 1.0);
    }
    SUBCASE("a plain CPC does not survive flips") {
        SimOptions opts;
        opts.steps = 200;
        opts.channel_flips = 1;
        CHECK(simulate(code, opts).decode_success_rate() < 1.0);
    }
}

TEST_CASE("simulation config") {
    const auto dir = work_dir();
    save_code(LpcCode::from_generator(MdsCpcCode::build_rs(4, 3)), dir / "sim_code.json");
    write_json_file({{"code", "sim_code.json"}, {"steps", 50}, {"policy", "random_t"}, {"seed", 3}}, dir / "sim.json");
    const auto rep = simulate_config_file(dir / "sim.json");
    CHECK(rep.steps == 50);
    CHECK(rep.policy == HotPolicy::random_t);
    CHECK_THROWS_AS(parse_sim_config({{"steps", 5}}), FormatError);
    CHECK_THROWS_AS(parse_sim_config({{"code", "x"}, {"policy", "coolest"}}), FormatError);
    CHECK_THROWS_AS(parse_sim_config({{"code", "x"}, {"policy", "adversarial_fixed"}}), FormatError);
    CHECK_THROWS_AS(parse_sim_config({{"code", "x"}, {"steps", "many"}}), FormatError);
}

TEST_CASE("command line") {
    const auto dir = work_dir();
    const std::string code_file = (dir / "code.json").string();

    SUBCASE("bounds") {
        const auto r = cli({"bounds", "12", "3", "3"});
        CHECK(r.code == 0);
        CHECK(r.out.find("84") != std::string::npos);
        CHECK(r.out.find("70") != std::string::npos);
        const auto j = nlohmann::json::parse(cli({"--json", "bounds", "12", "3", "3"}).out);
        CHECK(j["cpc_count_bound"] == "84");
        CHECK(j["cpc_turan_bound"] == "70");
    }
    SUBCASE("construct, verify, encode, decode") {
        auto r = cli({"construct", "mds_cpc", "--q", "4", "--w", "3", "-o", code_file});
        REQUIRE(r.code == 0);
        r = cli({"verify", code_file, "--exhaustive"});
        CHECK(r.code == 0);
        CHECK(r.out.rfind("PASS", 0) == 0);
        r = cli({"encode", code_file, "--codeset", "0", "--hot", "1,5,9"});
        REQUIRE(r.code == 0);
        const auto wires = parse_wires(r.out);
        CHECK(wires.size() == 3);
        for (Wire w : wires) CHECK((w != 1 && w != 5 && w != 9));
        r = cli({"decode", code_file, "--word", r.out.substr(0, r.out.size() - 1)});
        CHECK(r.code == 0);
        CHECK(r.out == "0\n");
        r = cli({"--json", "decode", code_file, "--word", "0,4"});
        CHECK(r.code == 1);
        CHECK(nlohmann::json::parse(r.err)["error"] == "decode");
    }
    SUBCASE("headline construction") {
        const auto r = cli({"--json", "construct", "mds_cpc", "--q", "16", "--w", "6"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["n"] == 96);
        CHECK(j["t"] == 15);
        CHECK(j["size"] == 1048576);
    }
    SUBCASE("construct with files") {
        const std::string inner = std::string(LPC_TEST_DATA) + "/inner_10_3_6.json";
        auto r = cli({"--json", "construct", "recursive_cpc", "--q", "16", "--inner", inner});
        REQUIRE(r.code == 0);
        CHECK(nlohmann::json::parse(r.out)["size"] == 5 * 1048576);

        const std::string mapping = (dir / "map.json").string();
        r = cli({"synth-mapping", "--groups", "0|1,2", "--w", "1", "-o", mapping});
        REQUIRE(r.code == 0);
        CHECK(nlohmann::json::parse(r.out)["verify"]["pass"] == true);

        const std::string gen = (dir / "gen.json").string();
        write_json_file(nlohmann::json::array({{1, 1, 1, 0, 0}, {0, 0, 1, 1, 1}}), gen);
        r = cli({"--json", "construct", "linear_cpc", "--q", "2", "--w", "3", "--generator", gen, "-o", code_file});
        REQUIRE(r.code == 0);
        CHECK(cli({"verify", code_file}).code == 0);
    }
    SUBCASE("compare") {
        const auto r = cli({"--json", "compare", "--n", "96", "--t", "15", "--w", "6", "--sunflower", "81,65",
                            "--sunflower", "137,0", "--concat", "6,16,1,16,1"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["entries"][0]["log2_size"] == 20);
        CHECK(j["entries"][1]["log2_size"] == 16);
        CHECK(j["entries"][2]["applicable"] == false);
    }
    SUBCASE("synth-mapping infeasible") {
        const auto r = cli({"synth-mapping", "--groups", "0|1", "--w", "1"});
        CHECK(r.code == 1);
        CHECK(nlohmann::json::parse(r.out)["feasible"] == false);
    }
    SUBCASE("simulate") {
        save_code(LpcCode::from_generator(MdsCpcCode::build_rs(4, 3)), dir / "sim_code.json");
        write_json_file({{"code", "sim_code.json"}, {"steps", 100}}, dir / "cli_sim.json");
        const auto r = cli({"--json", "simulate", (dir / "cli_sim.json").string()});
        REQUIRE(r.code == 0);
        CHECK(nlohmann::json::parse(r.out)["hot_wire_violations"] == 0);
    }
    SUBCASE("errors") {
        auto r = cli({"frobnicate"});
        CHECK(r.code == 2);
        r = cli({});
        CHECK(r.code == 2);
        r = cli({"construct", "mds_cpc", "--q", "6", "--w", "3"});
        CHECK(r.code == 1);
        CHECK(nlohmann::json::parse(r.err)["error"] == "parameter");
        r = cli({"construct", "mds_cpc", "--q", "4"});
        CHECK(r.code == 1);
        CHECK(nlohmann::json::parse(r.err)["error"] == "format");
        r = cli({"verify", (dir / "absent.json").string()});
        CHECK(r.code == 1);
        r = cli({"encode", code_file, "--codeset", "0", "--hot", "1,x"});
        CHECK(r.code == 1);
        r = cli({"construct", "no_such_thing"});
        CHECK(r.code == 2);
        r = cli({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("synth-mapping") != std::string::npos);
    }
}
