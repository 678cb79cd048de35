#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cdl/scatter.hpp"

using namespace cdl;
using namespace cdl::alg;
using namespace cdl::seed;
using namespace cdl::pattern;
using namespace cdl::scatter;

namespace {

IntMat mat2(long a, long b, long c, long d) {
    IntMat m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

std::map<std::pair<std::vector<int32_t>, long>, long> factor_table(
    const std::vector<DilogFactor>& fs) {
    std::map<std::pair<std::vector<int32_t>, long>, long> t;
    for (auto& f : fs) {
        REQUIRE(f.exponent.get_den() == 1);
        t[{std::vector<int32_t>(f.n.begin(), f.n.end()), 0}] +=
            static_cast<long>(f.exponent.get_num().get_si());
    }
    return t;
}

}  // namespace

TEST_CASE("psi element acts as the published automorphism") {
    SkewForm om = standard_rank2();
    GroupElement p1 = psi_element({1, 0}, Rat(1), om, 8);
    // Psi[e1](y2) = y2 (1+y1)^{{e1,e2}} = y2 (1+y1)^{-1}
    TruncSeries want = one_plus_pow(2, 8, {1, 0}, Rat(-1));
    CHECK(p1.image(1) == want);
    CHECK(p1.image(0).is_one());  // {e1, e1} = 0
    // Psi[n](y^n) = y^n
    GroupElement p11 = psi_element({1, 1}, Rat(1), om, 8);
    CHECK(p11.act_unit({1, 1}).is_one());
    // Psi Psi^{-1} = id
    CHECK(group_mul(p1, psi_element({1, 0}, Rat(-1), om, 8)).is_identity());
    CHECK(group_mul(p1, group_inverse(p1)).is_identity());
}

TEST_CASE("pentagon relation at unit exponents") {
    SkewForm om = standard_rank2();
    int L = 10;
    GroupElement lhs = group_mul(psi_element({0, 1}, Rat(1), om, L),
                                 psi_element({1, 0}, Rat(1), om, L));
    GroupElement rhs = group_mul(
        psi_element({1, 0}, Rat(1), om, L),
        group_mul(psi_element({1, 1}, Rat(1), om, L), psi_element({0, 1}, Rat(1), om, L)));
    CHECK(lhs == rhs);
}

TEST_CASE("commutative relation for pairing zero") {
    SkewForm om = standard_rank2();
    GroupElement a = psi_element({1, 1}, Rat(3), om, 8);
    GroupElement b = psi_element({2, 2}, rat_of(1, 2), om, 8);
    CHECK(group_mul(a, b) == group_mul(b, a));
}

TEST_CASE("pentagon relation for random pairs") {
    SkewForm om = standard_rank2();
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dn(0, 3);
    int L = 8, done = 0;
    while (done < 50) {
        ExpVec n1{dn(rng), dn(rng)}, n2{dn(rng), dn(rng)};
        if (ev_is_zero(n1) || ev_is_zero(n2)) continue;
        Rat c = om.pair(n2, n1);
        if (c == 0) continue;
        Rat e = Rat(1) / c;
        GroupElement lhs = group_mul(psi_element(n2, e, om, L), psi_element(n1, e, om, L));
        GroupElement rhs = group_mul(
            psi_element(n1, e, om, L),
            group_mul(psi_element(ev_add(n1, n2), e, om, L), psi_element(n2, e, om, L)));
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("log and exp round trip") {
    SkewForm om = standard_rank2();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> dc(-4, 4);
    for (int it = 0; it < 8; ++it) {
        LieElement x;
        x.nvars = 2;
        x.trunc = 10;
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b) {
                if (a + b == 0) continue;
                x.add({a, b}, rat_of(dc(rng), 1 + (rng() % 3)));
            }
        GroupElement g = exp_lie(x, om, 10);
        LieElement y = log_group(g);
        CHECK(x.coeffs == y.coeffs);
    }
}

TEST_CASE("ordering the A2 product") {
    SkewForm om = standard_rank2();
    GroupElement g = group_mul(psi_element({0, 1}, Rat(1), om, 10),
                               psi_element({1, 0}, Rat(1), om, 10));
    auto fs = group_log_factorize(g);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].n == ExpVec{1, 0});
    CHECK(fs[0].exponent == Rat(1));
    CHECK(fs[1].n == ExpVec{1, 1});
    CHECK(fs[1].exponent == Rat(1));
    CHECK(fs[2].n == ExpVec{0, 1});
    CHECK(fs[2].exponent == Rat(1));
}

TEST_CASE("ordering the (2,2) product modulo degree 3 and 7") {
    SkewForm om = standard_rank2();
    {
        GroupElement g = group_mul(psi_element({0, 1}, Rat(2), om, 3),
                                   psi_element({1, 0}, Rat(2), om, 3));
        auto fs = group_log_factorize(g);
        std::vector<std::pair<ExpVec, Rat>> want{
            {{1, 0}, Rat(2)}, {{2, 1}, Rat(2)}, {{1, 1}, Rat(4)}, {{1, 2}, Rat(2)}, {{0, 1}, Rat(2)}};
        REQUIRE(fs.size() == want.size());
        for (size_t i = 0; i < fs.size(); ++i) {
            CHECK(fs[i].n == want[i].first);
            CHECK(fs[i].exponent == want[i].second);
        }
    }
    {
        GroupElement g = group_mul(psi_element({0, 1}, Rat(2), om, 7),
                                   psi_element({1, 0}, Rat(2), om, 7));
        auto fs = group_log_factorize(g);
        std::vector<std::pair<ExpVec, Rat>> want{
            {{1, 0}, Rat(2)}, {{2, 1}, Rat(2)}, {{3, 2}, Rat(2)}, {{4, 3}, Rat(2)},
            {{1, 1}, Rat(4)}, {{2, 2}, Rat(2)}, {{3, 4}, Rat(2)}, {{2, 3}, Rat(2)},
            {{1, 2}, Rat(2)}, {{0, 1}, Rat(2)}};
        REQUIRE(fs.size() == want.size());
        for (size_t i = 0; i < fs.size(); ++i) {
            CHECK(fs[i].n == want[i].first);
            CHECK(fs[i].exponent == want[i].second);
        }
    }
}

TEST_CASE("normalization factors") {
    CHECK(normalization_factor({1, 0}, {1, 2}) == Rat(1));
    CHECK(normalization_factor({0, 1}, {1, 2}) == Rat(2));
    CHECK(normalization_factor({1, 1}, {2, 2}) == Rat(2));
    CHECK(normalization_factor({2, 2}, {2, 2}) == Rat(1));
    CHECK(normalization_factor({5, 11}, {1, 5}) == Rat(5));
    CHECK(normalization_factor({1, 2}, {1, 4}) == Rat(2));
}

TEST_CASE("finite type diagrams: A2, B2, G2 wall sets") {
    Rank2Diagram a2 = build_rank2_csd(1, 1, 12);
    REQUIRE(a2.walls.size() == 3);
    CHECK(a2.walls[2].normal == ExpVec{1, 1});
    CHECK(a2.walls[2].ray == ExpVec{1, -1});
    REQUIRE(a2.walls[2].factors.size() == 1);
    CHECK(a2.walls[2].factors[0].exponent == Rat(1));

    Rank2Diagram b2 = build_rank2_csd(1, 2, 12);
    REQUIRE(b2.walls.size() == 4);
    CHECK(b2.walls[0].incoming);
    CHECK(b2.walls[1].incoming);
    CHECK(b2.walls[1].factors[0].exponent == Rat(2));
    CHECK(b2.walls[2].normal == ExpVec{1, 1});
    CHECK(b2.walls[2].ray == ExpVec{1, -2});
    CHECK(b2.walls[2].factors[0].exponent == Rat(2));
    CHECK(b2.walls[3].normal == ExpVec{1, 2});
    CHECK(b2.walls[3].ray == ExpVec{1, -1});
    CHECK(b2.walls[3].factors[0].exponent == Rat(1));

    Rank2Diagram g2 = build_rank2_csd(1, 3, 12);
    REQUIRE(g2.walls.size() == 6);
    std::vector<std::tuple<ExpVec, ExpVec, long>> want{
        {{1, 1}, {1, -3}, 3}, {{2, 3}, {1, -2}, 1}, {{1, 2}, {2, -3}, 3}, {{1, 3}, {1, -1}, 1}};
    for (size_t i = 0; i < want.size(); ++i) {
        const Wall& w = g2.walls[i + 2];
        CHECK(w.normal == std::get<0>(want[i]));
        CHECK(w.ray == std::get<1>(want[i]));
        REQUIRE(w.factors.size() == 1);
        CHECK(w.factors[0].exponent == Rat(std::get<2>(want[i])));
    }
}

TEST_CASE("finite diagrams terminate exactly regardless of truncation") {
    CHECK(build_rank2_csd(1, 1, 20).walls.size() == 3);
    CHECK(build_rank2_csd(1, 2, 20).walls.size() == 4);
    CHECK(build_rank2_csd(1, 3, 16).walls.size() == 6);
}

TEST_CASE("affine (2,2) diagram structure at degree 7") {
    Rank2Diagram d = build_rank2_csd(2, 2, 7);
    // central ray (1,-1) carries Psi[(1,1)]^4 Psi[(2,2)]^2
    bool found = false;
    for (auto& w : d.walls) {
        if (w.incoming || !(w.ray == ExpVec{1, -1})) continue;
        found = true;
        REQUIRE(w.factors.size() == 2);
        CHECK(w.factors[0].n == ExpVec{1, 1});
        CHECK(w.factors[0].exponent == Rat(4));
        CHECK(w.factors[1].n == ExpVec{2, 2});
        CHECK(w.factors[1].exponent == Rat(2));
    }
    CHECK(found);
}

TEST_CASE("(1,4) diagram at degree 7 matches the twisted affine wall data") {
    Rank2Diagram d = build_rank2_csd(1, 4, 7);
    auto table = factor_table([&] {
        std::vector<DilogFactor> all;
        for (size_t w = 2; w < d.walls.size(); ++w)
            for (auto& f : d.walls[w].factors) all.push_back(f);
        return all;
    }());
    std::map<std::pair<std::vector<int32_t>, long>, long> want{
        {{{1, 1}, 0}, 4}, {{{3, 4}, 0}, 1}, {{{2, 3}, 0}, 4}, {{{1, 2}, 0}, 6},
        {{{2, 4}, 0}, 2}, {{{2, 5}, 0}, 4}, {{{1, 3}, 0}, 4}, {{{1, 4}, 0}, 1}};
    CHECK(table == want);
}

TEST_CASE("path ordered products and consistency") {
    for (auto [d1, d2] : std::vector<std::pair<long, long>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}}) {
        Rank2Diagram d = build_rank2_csd(d1, d2, d1 * d2 >= 4 ? 8 : 12);
        auto loop = full_ccw_loop(d);
        CHECK(path_ordered_product(d, loop).is_identity());
        // reversed loop with flipped signs
        std::vector<Crossing> rev(loop.rbegin(), loop.rend());
        for (auto& c : rev) c.sign = -c.sign;
        CHECK(path_ordered_product(d, rev).is_identity());
        // single crossing gives the wall element itself
        std::vector<Crossing> one{{2, 0, 1}};
        GroupElement g = path_ordered_product(d, one);
        const DilogFactor& f = d.walls[2].factors[0];
        CHECK(g == psi_element(f.n, f.exponent, d.omega, d.trunc));
        std::vector<Crossing> oneinv{{2, 0, -1}};
        CHECK(group_mul(path_ordered_product(d, oneinv), g).is_identity());
    }
}

TEST_CASE("path independence between the positive and negative chambers") {
    Rank2Diagram d = build_rank2_csd(1, 2, 10);
    // through the second quadrant
    std::vector<Crossing> pathA{{0, 0, 1}, {1, 0, 1}};
    // through the fourth quadrant: e2-perp right, outgoing in increasing slope, e1-perp lower
    std::vector<Crossing> pathB;
    pathB.push_back({1, 0, 1});
    for (size_t w = d.walls.size(); w-- > 2;)
        for (size_t f = d.walls[w].factors.size(); f-- > 0;) pathB.push_back({w, f, 1});
    pathB.push_back({0, 0, 1});
    CHECK(path_ordered_product(d, pathA) == path_ordered_product(d, pathB));
}

TEST_CASE("period relation for A2, B2, G2 and the trivial involution") {
    PatternRun a2 = run_pattern(make_word(mat2(0, -1, 1, 0), {0, 1, 0, 1, 0}));
    CHECK(period_relation_check(a2, 10));
    PatternRun b2 = run_pattern(make_word(mat2(0, -1, 2, 0), {0, 1, 0, 1, 0, 1}));
    CHECK(period_relation_check(b2, 10));
    PatternRun g2 = run_pattern(make_word(mat2(0, -1, 3, 0), {0, 1, 0, 1, 0, 1, 0, 1}));
    CHECK(period_relation_check(g2, 10));
    PatternRun triv = run_pattern(make_word(mat2(0, -1, 2, 0), {1, 1}));
    CHECK(period_relation_check(triv, 10));
    PatternRun open_run = run_pattern(make_word(mat2(0, -1, 1, 0), {0, 1}));
    CHECK(!period_relation_check(open_run, 10));
}

TEST_CASE("group relation for a three-cycle period through the extension") {
    // odd-rank skew forms are singular, so this also exercises the extension
    IntMat B(3, 3);
    B.at(0, 1) = 1; B.at(1, 0) = -1;
    B.at(1, 2) = 1; B.at(2, 1) = -1;
    PatternRun run = run_pattern(make_word(B, {1, 0, 2, 1, 0, 2, 1, 0}));
    REQUIRE(detect_period(run).has_value());
    CHECK(period_relation_check(run, 8));
}

TEST_CASE("period relation through the principal extension for singular forms") {
    // A1 x A1 with B = 0 is singular; mu_1 mu_1 is a period
    IntMat B(2, 2);
    PatternRun run = run_pattern(make_word(B, {0, 0, 1, 1}));
    CHECK(period_relation_check(run, 8));
}

TEST_CASE("formal loop identity vanishes") {
    {
        Rank2Diagram d = build_rank2_csd(1, 1, 10);
        LogSeries s = loop_di_formal(d, full_ccw_loop(d));
        CHECK(s.is_zero());
    }
    {
        Rank2Diagram d = build_rank2_csd(2, 2, 4);
        LogSeries s = loop_di_formal(d, full_ccw_loop(d));
        CHECK(s.is_zero());
    }
    {
        Rank2Diagram d = build_rank2_csd(1, 2, 8);
        LogSeries s = loop_di_formal(d, {});
        CHECK(s.is_zero());
        // a non-closed crossing list leaves a residual
        LogSeries t = loop_di_formal(d, {{0, 0, 1}});
        CHECK(!t.is_zero());
    }
}

TEST_CASE("G-fan against the diagram support") {
    auto a2 = g_fan_embedding_check(1, 1, 12);
    CHECK(a2.equal);
    CHECK(a2.g_rays.size() == 5);
    auto b2 = g_fan_embedding_check(1, 2, 12);
    CHECK(b2.equal);
    CHECK(b2.g_rays.size() == 6);
    auto g2 = g_fan_embedding_check(1, 3, 12);
    CHECK(g2.equal);
    CHECK(g2.g_rays.size() == 8);
    auto a11 = g_fan_embedding_check(2, 2, 12);
    CHECK(a11.g_rays_in_support);
    CHECK(!a11.equal);
    REQUIRE(a11.complement.has_value());
    CHECK(*a11.complement == ExpVec{1, -1});
}
