#include <catch_amalgamated.hpp>

#include "nullcone/weightsys.hpp"

using namespace nullcone;

namespace {

WeightSystem ws_of(Series s, int r, std::vector<long> fw, long cap = kDefaultDimCap) {
    RootDatum d = build({s, r});
    return weight_system(d, make_weight(d, fw), cap);
}

}  // namespace

TEST_CASE("Weyl dimension formula") {
    RootDatum a1 = build({Series::A, 1});
    for (long k = 1; k <= 6; ++k) CHECK(weyl_dim(a1, make_weight(a1, {k})) == k + 1);

    RootDatum a2 = build({Series::A, 2});
    CHECK(weyl_dim(a2, make_weight(a2, {1, 0})) == 3);
    CHECK(weyl_dim(a2, make_weight(a2, {1, 1})) == 8);
    CHECK(weyl_dim(a2, make_weight(a2, {3, 0})) == 10);

    RootDatum a7 = build({Series::A, 7});
    CHECK(weyl_dim(a7, make_weight(a7, {0, 0, 0, 1, 0, 0, 0})) == 70);

    RootDatum f4 = build({Series::F, 4});
    CHECK(weyl_dim(f4, make_weight(f4, {0, 0, 0, 1})) == 26);
    CHECK(weyl_dim(f4, make_weight(f4, {1, 0, 0, 0})) == 52);

    RootDatum g2 = build({Series::G, 2});
    CHECK(weyl_dim(g2, make_weight(g2, {1, 0})) == 7);
    CHECK(weyl_dim(g2, make_weight(g2, {0, 1})) == 14);

    RootDatum e8 = build({Series::E, 8});
    std::vector<long> adj(8, 0);
    adj[7] = 1;
    CHECK(weyl_dim(e8, make_weight(e8, adj)) == 248);

    RootDatum b6 = build({Series::B, 6});
    CHECK(weyl_dim(b6, make_weight(b6, {0, 0, 0, 0, 0, 1})) == 64);

    CHECK_THROWS_AS(weyl_dim(a2, make_weight(a2, {-1, 0})), ValidationError);
}

TEST_CASE("weight system of the A2 adjoint module") {
    WeightSystem ws = ws_of(Series::A, 2, {1, 1});
    CHECK(ws.dim == 8);
    CHECK(ws.entries.size() == 7);  // six roots plus zero
    QVec zero(ws.datum.ambient, Rat(0));
    CHECK(ws.entries.at(zero) == 2);
    long nonzero = 0;
    for (const auto& [mu, m] : ws.entries)
        if (!is_zero(mu)) {
            CHECK(m == 1);
            ++nonzero;
        }
    CHECK(nonzero == 6);
}

TEST_CASE("weight system of binary quartics") {
    WeightSystem ws = ws_of(Series::A, 1, {4});
    CHECK(ws.dim == 5);
    CHECK(ws.entries.size() == 5);
    RootDatum d = ws.datum;
    for (long k : {-4L, -2L, 0L, 2L, 4L}) {
        QVec mu = scaled(d.fweights[0], Rat(k));
        CHECK(ws.entries.at(mu) == 1);
    }
}

TEST_CASE("minuscule modules have multiplicity-one weights") {
    for (auto [s, r, fw] : std::vector<std::tuple<Series, int, std::vector<long>>>{
             {Series::D, 5, {0, 0, 0, 0, 1}},
             {Series::A, 7, {0, 0, 0, 1, 0, 0, 0}},
             {Series::E, 6, {1, 0, 0, 0, 0, 0}}}) {
        WeightSystem ws = ws_of(s, r, fw);
        CHECK(static_cast<long>(ws.entries.size()) == ws.dim);
        for (const auto& [mu, m] : ws.entries) CHECK(m == 1);
    }
}

TEST_CASE("spin representation of B3") {
    WeightSystem ws = ws_of(Series::B, 3, {0, 0, 1});
    CHECK(ws.dim == 8);
    CHECK(ws.entries.size() == 8);
}

TEST_CASE("a non-minuscule multiplicity: F4 26-dimensional module") {
    WeightSystem ws = ws_of(Series::F, 4, {0, 0, 0, 1});
    CHECK(ws.dim == 26);
    QVec zero(ws.datum.ambient, Rat(0));
    CHECK(ws.entries.at(zero) == 2);  // 24 short-root weights + zero twice
    CHECK(ws.entries.size() == 25);
}

TEST_CASE("dimension cap") {
    CHECK_THROWS_AS(ws_of(Series::A, 7, {0, 0, 0, 1, 0, 0, 0}, 69), ResourceError);
    CHECK_NOTHROW(ws_of(Series::A, 7, {0, 0, 0, 1, 0, 0, 0}, 70));
}

TEST_CASE("weight system invariants on assorted modules") {
    for (auto [s, r, fw] : std::vector<std::tuple<Series, int, std::vector<long>>>{
             {Series::A, 3, {0, 2, 0}},
             {Series::B, 4, {2, 0, 0, 0}},
             {Series::C, 4, {0, 0, 0, 1}},
             {Series::G, 2, {0, 1}},
             {Series::D, 4, {2, 0, 0, 0}}}) {
        WeightSystem ws = ws_of(s, r, fw);
        const RootDatum& d = ws.datum;

        // highest weight present with multiplicity 1 and maximal
        CHECK(ws.entries.at(ws.highest.euclid) == 1);

        long total = 0;
        QVec sum(d.ambient, Rat(0));
        for (const auto& [mu, m] : ws.entries) {
            CHECK(m >= 1);
            total += m;
            sum = add(sum, scaled(mu, Rat(m)));
            CHECK(norm2(mu) <= norm2(ws.highest.euclid));
        }
        CHECK(total == ws.dim);
        CHECK(total == weyl_dim(d, ws.highest));
        CHECK(is_zero(sum));  // multiplicity-weighted sum vanishes

        // Weyl stability with constant multiplicity along orbits
        for (const auto& [mu, m] : ws.entries)
            for (int i = 0; i < d.rank(); ++i)
                CHECK(ws.entries.at(simple_reflection(d, i, mu)) == m);
    }
}
