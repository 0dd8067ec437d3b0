#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "lpc/bounds.hpp"
#include "lpc/code_io.hpp"
#include "lpc/errors.hpp"
#include "lpc/mds_cpc.hpp"
#include "lpc/registry.hpp"
#include "lpc/verify.hpp"
#include "support.hpp"

using namespace lpc;
using lpc_test::for_each_subset;
using lpc_test::pascal;

namespace {

Codeword cw(std::uint32_t n, std::vector<Wire> s) { return Codeword(n, std::move(s)); }

std::filesystem::path temp_file(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "lpc_code_model_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

// Every (n - t)-subset of wires contains a member of the codeset.
bool turan_cover(const Codeset& set, unsigned n, unsigned t) {
    bool ok = true;
    for_each_subset(n, n - t, [&](const std::vector<std::uint32_t>& window) {
        std::vector<bool> in(n, false);
        for (auto x : window) in[x] = true;
        const bool covered = std::any_of(set.begin(), set.end(), [&](const Codeword& c) {
            return std::all_of(c.support().begin(), c.support().end(), [&](Wire x) { return in[x]; });
        });
        ok = covered;
        return ok;
    });
    return ok;
}

}  // namespace

TEST_CASE("codeword and hot set basics") {
    const Codeword c = cw(6, {4, 1, 2});
    CHECK(c.support() == std::vector<Wire>{1, 2, 4});
    CHECK(c.weight() == 3);
    CHECK_THROWS_AS(cw(6, {1, 1}), ParameterError);
    CHECK_THROWS_AS(cw(6, {6}), ParameterError);
    CHECK(avoids(c, HotSet({0, 3, 5})));
    CHECK_FALSE(avoids(c, HotSet({4})));
    CHECK_THROWS_AS(HotSet({0, 1, 2}).check(6, 2), ParameterError);
    CHECK_NOTHROW(HotSet({0}).check(6, 2));
    CHECK(hamming_distance(cw(4, {0, 1}), cw(4, {1, 2})) == 2);
    CHECK(grid_wire(4, GridPoint{3, 2}) == 11);
    CHECK(grid_point(4, 11) == GridPoint{3, 2});
}

TEST_CASE("all_words_of_weight counts") {
    for (unsigned n = 1; n <= 9; ++n)
        for (unsigned w = 1; w <= n; ++w) REQUIRE(all_words_of_weight(n, w).size() == pascal(n, w));
    const auto words = all_words_of_weight(4, 2);
    CHECK(words.front() == cw(4, {0, 1}));
    CHECK(words.back() == cw(4, {2, 3}));
}

TEST_CASE("code construction rejects bad parameters") {
    CHECK_THROWS_AS(LpcCode::from_codesets({4, 3, 2, CodeKind::cpc, 0}, {{cw(4, {0, 1})}}), ParameterError);
    CHECK_THROWS_AS(LpcCode::from_codesets({4, 1, 2, CodeKind::cpc, 0}, {{cw(4, {0})}}), ParameterError);
    CHECK_THROWS_AS(LpcCode::from_codesets({4, 1, 2, CodeKind::lpc, 0}, {{cw(4, {0, 1, 2})}}), ParameterError);
    CHECK_THROWS_AS(LpcCode::from_codesets({4, 1, 2, CodeKind::lpc, 0}, {{}}), ParameterError);
}

TEST_CASE("verify_code on small explicit codes") {
    SUBCASE("single codeset of all w-subsets passes for t <= n - w") {
        for (unsigned n = 3; n <= 8; ++n)
            for (unsigned w = 1; w < n; ++w) {
                const auto code = LpcCode::from_codesets({n, n - w, w, CodeKind::cpc, 0}, {all_words_of_weight(n, w)});
                const auto rep = verify_code(code);
                CHECK(rep.pass());
                CHECK(rep.hot_sets_checked == pascal(n, n - w));
            }
    }
    SUBCASE("shared codeword is a disjointness failure with witness") {
        const auto code = LpcCode::from_codesets(
            {4, 1, 2, CodeKind::cpc, 0},
            {{cw(4, {0, 1}), cw(4, {2, 3})}, {cw(4, {0, 2}), cw(4, {1, 3}), cw(4, {2, 3})}});
        const auto rep = verify_code(code);
        CHECK_FALSE(rep.disjoint_ok);
        REQUIRE(rep.disjoint_failure);
        CHECK(rep.disjoint_failure->first == 0);
        CHECK(rep.disjoint_failure->second == 1);
        CHECK(rep.disjoint_failure->word == cw(4, {2, 3}));
        // the symmetric listing reports the same pair
        const auto swapped = LpcCode::from_codesets(
            {4, 1, 2, CodeKind::cpc, 0},
            {{cw(4, {0, 2}), cw(4, {1, 3}), cw(4, {2, 3})}, {cw(4, {0, 1}), cw(4, {2, 3})}});
        const auto rep2 = verify_code(swapped);
        REQUIRE(rep2.disjoint_failure);
        CHECK(rep2.disjoint_failure->word == cw(4, {2, 3}));
    }
    SUBCASE("cooling failure carries the hot set") {
        const auto code = LpcCode::from_codesets({4, 1, 2, CodeKind::cpc, 0}, {{cw(4, {0, 1})}});
        const auto rep = verify_code(code);
        CHECK_FALSE(rep.cooling_ok);
        REQUIRE(rep.cooling_failure);
        CHECK(rep.cooling_failure->codeset == 0);
        CHECK(rep.cooling_failure->hot == std::vector<Wire>{0});
    }
    SUBCASE("mixed weights are fine in an LPC code") {
        const auto code = LpcCode::from_codesets({4, 1, 2, CodeKind::lpc, 0}, {{cw(4, {0, 1}), cw(4, {2})}});
        CHECK(verify_code(code).pass());
    }
    SUBCASE("budget is enforced") {
        const auto code = LpcCode::from_generator(MdsCpcCode::build_rs(16, 6));
        VerifyOptions opts;
        opts.budget = 1000;
        CHECK_THROWS_AS(verify_code(code, opts), BudgetExceeded);
    }
    SUBCASE("sampled runs are reproducible") {
        const auto code = LpcCode::from_generator(MdsCpcCode::build_rs(16, 6));
        VerifyOptions opts;
        opts.mode = VerifyMode::sampled;
        opts.trials = 300;
        opts.seed = 42;
        const auto a = verify_code(code, opts), b = verify_code(code, opts);
        CHECK(a.pass());
        CHECK(a.to_json() == b.to_json());
    }
}

TEST_CASE("threaded exhaustive verification matches single-threaded") {
    const auto code = LpcCode::from_generator(MdsCpcCode::build_rs(4, 3));
    VerifyOptions one, four;
    four.threads = 4;
    CHECK(verify_code(code, one).to_json() == verify_code(code, four).to_json());
}

TEST_CASE("cooling is the Turan cover property on a CPC") {
    const auto code = LpcCode::from_generator(MdsCpcCode::build_rs(4, 3));
    const auto& p = code.params();
    std::vector<Codeset> sets;
    for (std::uint64_t i = 0; i < code.size(); ++i) {
        sets.push_back(code.codeset(i));
        CHECK(turan_cover(sets.back(), p.n, p.t));
    }
    CHECK(verify_code(code).pass());
    // dropping a codeword breaks both views together
    for (std::size_t drop = 0; drop < sets[5].size(); ++drop) {
        Codeset weaker = sets[5];
        weaker.erase(weaker.begin() + static_cast<std::ptrdiff_t>(drop));
        const auto small = LpcCode::from_codesets(p, {weaker});
        CHECK(turan_cover(weaker, p.n, p.t) == verify_code(small).cooling_ok);
    }
}

TEST_CASE("min_distance") {
    const auto two = LpcCode::from_codesets({4, 0, 2, CodeKind::cpc, 0}, {{cw(4, {0, 1})}, {cw(4, {2, 3})}});
    CHECK(min_distance(two) == 4u);
    const auto single = LpcCode::from_codesets({4, 0, 2, CodeKind::cpc, 0}, {{cw(4, {0, 1})}});
    CHECK_FALSE(min_distance(single));
    CHECK_THROWS_AS(min_distance(LpcCode::from_generator(MdsCpcCode::build_rs(16, 6)), 1000), BudgetExceeded);
}

TEST_CASE("bounds against the formulas") {
    SUBCASE("spot values") {
        const auto b = bounds(4, 1, 2);
        CHECK(b.cpc_count == 3);
        CHECK(b.cpc_turan == 3);
        const auto c = bounds(12, 3, 3);
        CHECK(c.cpc_count == 84);
        CHECK(c.cpc_turan == 70);
        CHECK(bounds(9, 4, 5).cpc_count == 1);
        CHECK_THROWS_AS(bounds(5, 3, 3), ParameterError);
    }
    SUBCASE("grid") {
        for (unsigned n = 2; n <= 20; ++n)
            for (unsigned w = 1; w < n; ++w)
                for (unsigned t = 0; t + w <= n; ++t) {
                    CAPTURE(n);
                    CAPTURE(t);
                    CAPTURE(w);
                    const auto b = bounds(n, t, w);
                    std::uint64_t lpc = 0;
                    for (unsigned i = 0; i <= w; ++i) lpc += pascal(n - t, i);
                    const std::uint64_t turan = (n - w + 1) * pascal(n - t - 1, w - 1) / (t + 1);
                    std::uint64_t lpc_turan = turan;
                    for (unsigned i = 0; i < w; ++i) lpc_turan += pascal(n, i);
                    REQUIRE(b.lpc_count == lpc);
                    REQUIRE(b.cpc_count == pascal(n - t, w));
                    REQUIRE(b.cpc_turan == turan);
                    REQUIRE(b.lpc_turan == lpc_turan);
                }
    }
    SUBCASE("big values stay exact") {
        const auto b = bounds(160, 48, 6);
        CHECK(b.cpc_count == binomial(112, 6));
        CHECK(binomial(112, 6) == pascal(112, 6));
    }
}

TEST_CASE("comparison sizes") {
    const auto concat = concat_size({6, 16, 1, 16, 1});
    CHECK(concat.applicable);
    CHECK(concat.n == 96);
    CHECK(concat.log2_size == 20u);

    const auto sun = sunflower_size({96, 15, 6, 81, 65});
    CHECK(sun.applicable);
    CHECK(sun.log2_size == 16u);

    const auto sun160 = sunflower_size({160, 48, 6, 137, 95});
    CHECK(sun160.log2_size == 17u);

    CHECK_FALSE(sunflower_size({96, 15, 6, 137, 0}).applicable);
    CHECK_FALSE(concat_size({6, 16, 1, 16, 17}).applicable);
}

TEST_CASE("save and load") {
    SUBCASE("generator-backed (12,3,3) round trip") {
        const auto code = LpcCode::from_generator(MdsCpcCode::build_rs(4, 3));
        const auto path = temp_file("c1233.json");
        save_code(code, path);
        const auto back = load_any_code(path);
        CHECK(back.params() == code.params());
        REQUIRE(back.size() == code.size());
        for (std::uint64_t i = 0; i < code.size(); ++i) CHECK(back.codeset(i) == code.codeset(i));
    }
    SUBCASE("explicit round trip") {
        const auto gen = LpcCode::from_generator(MdsCpcCode::build_rs(4, 3));
        const auto code = LpcCode::from_codesets(gen.params(), gen.materialize(1000));
        const auto path = temp_file("c1233_explicit.json");
        save_code(code, path);
        const auto back = load_code(path);
        CHECK(back.is_explicit());
        CHECK(back.codesets() == code.codesets());
        CHECK(back.decode(code.codeset(7)[2]) == 7);
    }
    SUBCASE("invalid files are rejected") {
        const auto path = temp_file("bad.json");
        std::ofstream(path) << R"({"version":1,"kind":"cpc","n":4,"t":3,"w":2,"codesets":[[[0,1]]]})";
        CHECK_THROWS_AS(load_code(path), FormatError);
        std::ofstream(path) << R"({"version":2,"kind":"cpc","n":4,"t":1,"w":2,"codesets":[[[0,1]]]})";
        CHECK_THROWS_AS(load_code(path), FormatError);
        std::ofstream(path) << R"({"version":1,"kind":"cpc","n":4,"t":1,"w":2})";
        CHECK_THROWS_AS(load_code(path), FormatError);
        std::ofstream(path) << R"({"version":1,"kind":"cpc","n":4,"t":1,"w":2,"codesets":[[[0,9]]]})";
        CHECK_THROWS_AS(load_code(path), FormatError);
        std::ofstream(path) << "not json";
        CHECK_THROWS_AS(load_code(path), FormatError);
        CHECK_THROWS_AS(load_code(temp_file("missing.json")), FormatError);
    }
    SUBCASE("user-supplied (10,3,6) inner code") {
        const auto inner = load_code(std::string(LPC_TEST_DATA) + "/inner_10_3_6.json");
        CHECK(inner.params() == CodeParams{10, 3, 6, CodeKind::cpc, 0});
        CHECK(inner.size() == 5);
        CHECK(verify_code(inner).pass());
    }
}
