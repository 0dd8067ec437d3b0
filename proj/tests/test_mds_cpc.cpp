#include <doctest.h>

#include <map>
#include <set>

#include "lpc/bounds.hpp"
#include "lpc/errors.hpp"
#include "lpc/mds_cpc.hpp"
#include "lpc/registry.hpp"
#include "lpc/verify.hpp"
#include "support.hpp"

using namespace lpc;
using lpc_test::for_each_subset;

namespace {

// Codewords of the linear code spanned by `g`, enumerated by message.
std::vector<std::vector<Elem>> all_codewords(const GaloisField& f, const MatrixQ& g) {
    const std::uint32_t q = f.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < g.rows(); ++i) total *= q;
    std::vector<std::vector<Elem>> out;
    for (std::uint64_t m = 0; m < total; ++m) {
        const auto msg = index_to_sigma(m, q, g.rows());
        out.push_back(vec_mat(f, msg, g));
    }
    return out;
}

void check_parallel_classes(const LpcCode& code, std::uint32_t q, std::uint32_t w) {
    for (std::uint64_t i = 0; i < code.size(); ++i) {
        const auto set = code.codeset(i);
        REQUIRE(set.size() == q);
        std::vector<int> hits(q * w, 0);
        for (const auto& c : set) {
            REQUIRE(c.weight() == w);
            for (auto x : c.support()) ++hits[x];
            // one lit wire per column
            std::set<std::uint32_t> cols;
            for (auto x : c.support()) cols.insert(x / q);
            REQUIRE(cols.size() == w);
        }
        for (int h : hits) REQUIRE(h == 1);
    }
}

}  // namespace

TEST_CASE("Reed-Solomon parameters") {
    const auto big = MdsCpcCode::build_rs(16, 6);
    CHECK(big->params() == CodeParams{96, 15, 6, CodeKind::cpc, 0});
    CHECK(big->size() == 1048576);
    CHECK(big->length() == 17);
    CHECK(big->dimension() == 6);
    CHECK(big->distance() == 12);

    const auto small = MdsCpcCode::build_rs(4, 3);
    CHECK(small->params() == CodeParams{12, 3, 3, CodeKind::cpc, 0});
    CHECK(small->size() == 16);

    const auto tiny = MdsCpcCode::build_rs(2, 2);
    CHECK(tiny->params() == CodeParams{4, 1, 2, CodeKind::cpc, 0});
    CHECK(tiny->size() == 2);

    CHECK_THROWS_AS(MdsCpcCode::build_rs(4, 4), ParameterError);
    CHECK_THROWS_AS(MdsCpcCode::build_rs(6, 3), ParameterError);
    CHECK_THROWS_AS(MdsCpcCode::build_rs(4, 1), ParameterError);
}

TEST_CASE("(4,1,2) code checked by hand enumeration") {
    const auto code = LpcCode::from_generator(MdsCpcCode::build_rs(2, 2));
    REQUIRE(code.size() == 2);
    const auto a = code.codeset(0), b = code.codeset(1);
    std::set<Codeword> seen;
    for (const auto& set : {a, b})
        for (const auto& c : set) {
            CHECK(c.weight() == 2);
            CHECK(seen.insert(c).second);
        }
    for (Wire h = 0; h < 4; ++h)
        for (const auto& set : {a, b})
            CHECK(std::any_of(set.begin(), set.end(), [&](const Codeword& c) { return !c.contains(h); }));
}

TEST_CASE("(12,3,3) exhaustive") {
    const auto gen = MdsCpcCode::build_rs(4, 3);
    const auto code = LpcCode::from_generator(gen);
    check_parallel_classes(code, 4, 3);
    CHECK(verify_code(code).pass());
    CHECK(code.size() <= bounds(12, 3, 3).cpc_turan);

    // every sigma x every hot 3-set: encode avoids, agrees with the first avoiding member
    // of the materialized codeset, and decodes back
    std::uint64_t cases = 0;
    for (std::uint64_t s = 0; s < 16; ++s) {
        const auto set = code.codeset(s);
        for_each_subset(12, 3, [&](const std::vector<std::uint32_t>& hot) {
            const Codeword c = code.encode(s, HotSet(hot));
            REQUIRE(lpc_test::disjoint(c.support(), hot));
            const auto first = std::find_if(set.begin(), set.end(),
                                            [&](const Codeword& x) { return lpc_test::disjoint(x.support(), hot); });
            REQUIRE(first != set.end());
            REQUIRE(*first == c);
            REQUIRE(code.decode(c) == s);
            ++cases;
            return true;
        });
    }
    CHECK(cases == 3520);

    // empty hot set picks lambda = 0
    const std::vector<Elem> zero{0, 0};
    CHECK(gen->encode_sigma(zero, HotSet()) == gen->codeset_sigma(zero).front());
    CHECK(gen->decode_sigma(gen->codeset_sigma(zero)[2]) == zero);
}

TEST_CASE("minimum distance is at least 2(D + w - N)") {
    for (auto [q, w] : {std::pair{4u, 3u}, {5u, 3u}, {7u, 4u}, {8u, 4u}}) {
        CAPTURE(q);
        CAPTURE(w);
        const auto gen = MdsCpcCode::build_rs(q, w);
        const auto code = LpcCode::from_generator(gen);
        const auto d = min_distance(code);
        REQUIRE(d);
        const int floor = 2 * (static_cast<int>(gen->distance()) + static_cast<int>(w) - static_cast<int>(gen->length()));
        CHECK(static_cast<int>(*d) >= floor);
    }
}

TEST_CASE("projections of the underlying code") {
    for (std::uint32_t q : {3u, 4u}) {
        for (std::uint32_t k = 2; k <= q; ++k) {
            CAPTURE(q);
            CAPTURE(k);
            const GaloisField f(q);
            const MatrixQ g = extended_rs_generator(f, k);
            const std::uint32_t n = q + 1, d = n - k + 1;
            const auto words = all_codewords(f, g);
            REQUIRE(linear_min_weight(f, g) == d);
            // any N-D+1 positions: values never repeat; any N-D positions: at most q repeats
            for (std::uint32_t width : {n - d + 1, n - d}) {
                for_each_subset(n, width, [&](const std::vector<std::uint32_t>& pos) {
                    std::map<std::vector<Elem>, int> seen;
                    for (const auto& c : words) {
                        std::vector<Elem> proj;
                        for (auto p : pos) proj.push_back(c[p]);
                        ++seen[proj];
                    }
                    for (const auto& [key, count] : seen) REQUIRE(count <= (width == n - d ? int(q) : 1));
                    return true;
                });
            }
        }
    }
}

TEST_CASE("(96,15,6) random round trips and operation counts") {
    const auto gen = MdsCpcCode::build_rs(16, 6);
    const auto code = LpcCode::from_generator(gen);
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::uint64_t> pick(0, code.size() - 1);
    std::uint64_t max_enc = 0, max_dec = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const std::uint64_t s = pick(rng);
        const auto hot = lpc_test::random_subset(rng, 96, 15);
        const auto sigma = index_to_sigma(s, 16, 5);
        MulCounter enc;
        const Codeword c = gen->encode_sigma(sigma, HotSet(hot));
        max_enc = std::max(max_enc, enc.count());
        REQUIRE(c.weight() == 6);
        REQUIRE(lpc_test::disjoint(c.support(), hot));
        MulCounter dec;
        const auto back = gen->decode_sigma(c);
        max_dec = std::max(max_dec, dec.count());
        REQUIRE(back == sigma);
        REQUIRE(code.decode(c) == s);
    }
    CHECK(max_enc <= 10u * 96);
    CHECK(max_dec <= 10u * 6 * 6 * 6);
    MESSAGE("max multiplications: encode ", max_enc, ", decode ", max_dec);
}

TEST_CASE("Reed-Solomon and linear decoders agree") {
    const auto gen = MdsCpcCode::build_rs(16, 6);
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        const auto sigma = index_to_sigma(rng() % gen->size(), 16, 5);
        const auto set = gen->codeset_sigma(sigma);
        const auto& c = set[rng() % set.size()];
        CHECK(gen->decode_sigma(c) == gen->decode_sigma_linear(c));
    }
}

TEST_CASE("malformed words are rejected") {
    const auto code = LpcCode::from_generator(MdsCpcCode::build_rs(4, 3));
    CHECK_THROWS_AS(code.decode(Codeword(12, {0, 4})), MalformedCodeword);
    CHECK_THROWS_AS(code.decode(Codeword(12, {0, 1, 4})), MalformedCodeword);
    CHECK_THROWS_AS(code.decode(Codeword(12, {0, 4, 8, 9})), MalformedCodeword);
    CHECK_THROWS_AS(code.encode(16, HotSet()), ParameterError);
    CHECK_THROWS_AS(code.encode(0, HotSet({0, 1, 2, 3})), ParameterError);
}

TEST_CASE("generator path reproduces the Reed-Solomon code") {
    for (auto [q, w] : {std::pair{4u, 3u}, {5u, 3u}, {8u, 4u}, {16u, 6u}}) {
        CAPTURE(q);
        const GaloisField f(q);
        const auto rs = MdsCpcCode::build_rs(q, w);
        const auto lin = MdsCpcCode::build_linear(q, extended_rs_generator(f, w), w);
        CHECK(lin->params() == rs->params());
        CHECK(lin->size() == rs->size());
        CHECK(lin->distance() == rs->distance());
        for (std::uint64_t s : {std::uint64_t{0}, std::uint64_t{1}, rs->size() / 3, rs->size() - 1})
            CHECK(lin->codeset(s) == rs->codeset(s));
    }
}

TEST_CASE("non-MDS generator") {
    // [5,2,3]_2, one short of MDS; w = 3 gives a (6,1,3) code over the 2 x 3 grid
    const GaloisField f(2);
    const MatrixQ g(2, 5, {1, 1, 1, 0, 0,  //
                           0, 0, 1, 1, 1});
    REQUIRE(linear_min_weight(f, g) == 3);
    const auto gen = MdsCpcCode::build_linear(2, g, 3);
    CHECK(gen->distance() == 3);
    const auto code = LpcCode::from_generator(gen);
    CHECK(code.params() == CodeParams{6, 1, 3, CodeKind::cpc, 0});
    CHECK(code.size() == 2);
    CHECK(verify_code(code).pass());
    check_parallel_classes(code, 2, 3);
    for (std::uint64_t s = 0; s < code.size(); ++s)
        for (const auto& c : code.codeset(s)) CHECK(code.decode(c) == s);

    // same code with its columns shuffled so the suffix is not already in block form
    const MatrixQ shuffled(2, 5, {0, 1, 1, 1, 0,  //
                                  1, 1, 0, 0, 1});
    const auto code2 = LpcCode::from_generator(MdsCpcCode::build_linear(2, shuffled, 3));
    CHECK(code2.size() == 2);
    CHECK(verify_code(code2).pass());
}

TEST_CASE("generator shapes outside the construction are rejected") {
    const GaloisField f(2);
    // [4,2,2]_2: N - D + 1 = 3 exceeds w = 2
    const MatrixQ rep(2, 4, {1, 1, 0, 0, 0, 0, 1, 1});
    CHECK_THROWS_AS(MdsCpcCode::build_linear(2, rep, 2), ParameterError);
    // w above D
    CHECK_THROWS_AS(MdsCpcCode::build_linear(4, extended_rs_generator(GaloisField(4), 3), 4), ParameterError);
    // rank deficient
    const MatrixQ low(2, 4, {1, 1, 0, 0, 1, 1, 0, 0});
    CHECK_THROWS_AS(MdsCpcCode::build_linear(2, low, 2), ParameterError);
}

TEST_CASE("descriptors rebuild the same code") {
    const auto code = LpcCode::from_generator(MdsCpcCode::build_rs(8, 4));
    const auto again = build_from_descriptor(code.generator()->descriptor());
    CHECK(again.params() == code.params());
    CHECK(again.codeset(77) == code.codeset(77));
}
