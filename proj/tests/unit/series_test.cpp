#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qsym/series.hpp"

using namespace qsym;

TEST_CASE("support bounds with sentinel conventions") {
    CHECK(supp_min({1, 0, 1}) == 1);
    CHECK(supp_max({1, 0, 1}) == 3);
    CHECK(supp_min({0, 0, 0}) == kInfSupport);
    CHECK(supp_max({0, 0, 0}) == 0);
    CHECK(supp_min({0, 2, 0}) == 2);
    CHECK(supp_max({0, 2, 0}) == 2);
}

TEST_CASE("series operations on single monomials") {
    const int n = 3, d = 4;
    auto single = [&](std::initializer_list<int> exps) {
        TruncSeries f(n, d);
        f.add_term(Monomial(exps), 1);
        return f;
    };
    TruncSeries x1 = single({1, 0, 0});
    TruncSeries x2 = single({0, 1, 0});
    TruncSeries x1x3 = single({1, 0, 1});

    CHECK(series_op(SeriesOp::prec, x1, x2) == single({1, 1, 0}));
    CHECK(series_op(SeriesOp::prec, x2, x1).is_zero());
    CHECK(series_op(SeriesOp::belg, x2, x2) == single({0, 2, 0}));
    CHECK(series_op(SeriesOp::tvim, x2, x2).is_zero());
    CHECK(series_op(SeriesOp::circ, x1x3, x1) == single({2, 0, 1}));

    CHECK_THROWS_AS(series_op(SeriesOp::mul, TruncSeries(3, 4), TruncSeries(4, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(series_op(SeriesOp::mul, TruncSeries(3, 4), TruncSeries(3, 5)),
                    std::invalid_argument);
}

TEST_CASE("expansions of basis elements") {
    TruncSeries m1 = expand_M(Composition{1}, 3, 3);
    CHECK(m1.terms().size() == 3);
    CHECK(m1.coeff({1, 0, 0}) == 1);
    CHECK(m1.coeff({0, 1, 0}) == 1);
    CHECK(m1.coeff({0, 0, 1}) == 1);

    TruncSeries m11 = expand_M(Composition{1, 1}, 3, 3);
    CHECK(m11.terms().size() == 3);
    CHECK(m11.coeff({1, 1, 0}) == 1);
    CHECK(m11.coeff({1, 0, 1}) == 1);
    CHECK(m11.coeff({0, 1, 1}) == 1);

    TruncSeries f2 = expand_F(Composition{2}, 2, 2);
    CHECK(f2.terms().size() == 3);
    CHECK(f2.coeff({2, 0}) == 1);
    CHECK(f2.coeff({1, 1}) == 1);
    CHECK(f2.coeff({0, 2}) == 1);

    CHECK_THROWS_AS(expand_M(Composition{3}, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(expand_F(Composition{3}, 4, 2), std::invalid_argument);
}

TEST_CASE("expand_elem is linear") {
    CHECK(expand_elem(QSymElem::one(), 3, 2) == series_one(3, 2));
    CHECK(expand_elem(h(2), 2, 2) == expand_F(Composition{2}, 2, 2));

    QSymElem f = monomial(Composition{2}) - monomial(Composition{1, 1});
    TruncSeries expected(2, 2);
    expected.add_term({2, 0}, 1);
    expected.add_term({0, 2}, 1);
    expected.add_term({1, 1}, -1);
    CHECK(expand_elem(f, 2, 2) == expected);

    CHECK_THROWS_AS(expand_elem(monomial(Composition{3}), 4, 2), std::invalid_argument);
}

TEST_CASE("expansion is faithful below the variable count") {
    const int n = 6, d = 5;
    for (int size = 1; size <= 5; ++size) {
        auto comps = compositions_of(size);
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (std::size_t j = i + 1; j < comps.size(); ++j)
                CHECK_FALSE(expand_M(comps[i], n, d) == expand_M(comps[j], n, d));
    }
}

TEST_CASE("both dendriform splittings partition the product, monomial-wise") {
    std::mt19937_64 rng(42);
    const int n = 6, d = 12;
    std::uniform_int_distribution<int> exp_dist(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        Monomial ma(n), mb(n);
        for (int& x : ma) x = exp_dist(rng);
        for (int& x : mb) x = exp_dist(rng);
        TruncSeries a(n, d), b(n, d);
        a.add_term(ma, 1);
        b.add_term(mb, 1);
        TruncSeries ab = series_mul(a, b);
        CHECK(series_op(SeriesOp::prec, a, b) + series_op(SeriesOp::succeq, a, b) == ab);
        CHECK(series_op(SeriesOp::preceq, a, b) + series_op(SeriesOp::succ, a, b) == ab);
    }
}

TEST_CASE("noncommutative expansions") {
    NCTruncSeries mu = expand_Mu(PackedWord{1, 1}, 2, 2);
    CHECK(mu.terms().size() == 2);
    CHECK(mu.coeff({1, 1}) == 1);
    CHECK(mu.coeff({2, 2}) == 1);

    NCTruncSeries x1(2, 2), x2(2, 2);
    x1.add_term({1}, 1);
    x2.add_term({2}, 1);
    NCTruncSeries x1x2(2, 2);
    x1x2.add_term({1, 2}, 1);
    CHECK(nc_series_op(SeriesOp::prec, x1, x2) == x1x2);
    CHECK(nc_series_op(SeriesOp::prec, x2, x1).is_zero());
    NCTruncSeries x2x2(2, 2);
    x2x2.add_term({2, 2}, 1);
    CHECK(nc_series_op(SeriesOp::belg, x2, x2) == x2x2);
    CHECK(nc_series_op(SeriesOp::tvim, x2, x2).is_zero());

    CHECK_THROWS_AS(expand_Mu(PackedWord{1, 2, 3}, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(nc_series_op(SeriesOp::mul, NCTruncSeries(2, 3), NCTruncSeries(3, 3)),
                    std::invalid_argument);
}

TEST_CASE("series parse names") {
    CHECK(parse_series_op("mul") == SeriesOp::mul);
    CHECK(parse_series_op("succeq") == SeriesOp::succeq);
    CHECK_THROWS_AS(parse_series_op("nope"), std::invalid_argument);
}
