#include <catch2/catch_amalgamated.hpp>

#include "qsym/qsym.hpp"
#include "qsym/series.hpp"

using namespace qsym;

namespace {

std::vector<Composition> comps_up_to(int max_size) {
    std::vector<Composition> out;
    for (int n = 0; n <= max_size; ++n)
        for (const Composition& c : compositions_of(n)) out.push_back(c);
    return out;
}

} // namespace

TEST_CASE("monomial and fundamental basis elements") {
    CHECK(monomial(Composition{}) == QSymElem::one());
    CHECK(monomial(Composition{2, 1}).coeff(Composition{2, 1}) == 1);
    CHECK(monomial(Composition{1}).terms().size() == 1);

    QSymElem f2 = fundamental(Composition{2});
    CHECK(f2.coeff(Composition{2}) == 1);
    CHECK(f2.coeff(Composition{1, 1}) == 1);
    CHECK(f2.terms().size() == 2);
    CHECK(fundamental(Composition{}) == QSymElem::one());
    CHECK(fundamental(Composition{1, 1}) == monomial(Composition{1, 1}));
}

TEST_CASE("product on the monomial basis") {
    QSymElem m1 = monomial(Composition{1});
    QSymElem prod = mul(m1, m1);
    CHECK(prod.coeff(Composition{1, 1}) == 2);
    CHECK(prod.coeff(Composition{2}) == 1);
    CHECK(prod.terms().size() == 2);

    CHECK(mul(QSymElem::one(), monomial(Composition{2, 1})) == monomial(Composition{2, 1}));

    QSymElem p21 = mul(monomial(Composition{2}), m1);
    CHECK(p21.coeff(Composition{2, 1}) == 1);
    CHECK(p21.coeff(Composition{1, 2}) == 1);
    CHECK(p21.coeff(Composition{3}) == 1);
    CHECK(p21.terms().size() == 3);
}

TEST_CASE("product is associative and commutative with unit, total degree <= 6") {
    auto comps = comps_up_to(6);
    for (const Composition& a : comps) {
        CHECK(mul(QSymElem::one(), monomial(a)) == monomial(a));
        for (const Composition& b : comps) {
            if (a.size() + b.size() > 6) continue;
            CHECK(mul(monomial(a), monomial(b)) == mul(monomial(b), monomial(a)));
            for (const Composition& c : comps) {
                if (a.size() + b.size() + c.size() > 6) continue;
                CHECK(mul(mul(monomial(a), monomial(b)), monomial(c)) ==
                      mul(monomial(a), mul(monomial(b), monomial(c))));
            }
        }
    }
}

TEST_CASE("coproduct deconcatenates") {
    TensorElem d = coproduct(monomial(Composition{1, 1}));
    CHECK(d.coeff(Composition{}, Composition{1, 1}) == 1);
    CHECK(d.coeff(Composition{1}, Composition{1}) == 1);
    CHECK(d.coeff(Composition{1, 1}, Composition{}) == 1);
    CHECK(d.terms().size() == 3);

    TensorElem du = coproduct(QSymElem::one());
    CHECK(du.coeff(Composition{}, Composition{}) == 1);
    CHECK(du.terms().size() == 1);

    TensorElem d2 = coproduct(monomial(Composition{2}));
    CHECK(d2.coeff(Composition{}, Composition{2}) == 1);
    CHECK(d2.coeff(Composition{2}, Composition{}) == 1);
    CHECK(d2.terms().size() == 2);
}

TEST_CASE("counit extracts the constant coefficient") {
    CHECK(counit(QSymElem::one()) == 1);
    CHECK(counit(monomial(Composition{3})) == 0);
    QSymElem f = QSymElem::one() * Int(5) + monomial(Composition{1}) * Int(2);
    CHECK(counit(f) == 5);
}

TEST_CASE("bialgebra axioms up to degree 5") {
    auto comps = comps_up_to(5);
    for (const Composition& a : comps) {
        QSymElem f = monomial(a);
        TensorElem d = coproduct(f);
        // counit legs
        QSymElem left, right;
        for (const auto& [key, c] : d.terms()) {
            left += monomial(key.second) * (c * counit(monomial(key.first)));
            right += monomial(key.first) * (c * counit(monomial(key.second)));
        }
        CHECK(left == f);
        CHECK(right == f);
        // coassociativity via double deconcatenation
        std::map<std::vector<std::vector<int>>, Int> lhs, rhs;
        for (const auto& [key, c] : d.terms()) {
            TensorElem dl = coproduct(monomial(key.first));
            for (const auto& [k2, c2] : dl.terms())
                lhs[{k2.first.parts(), k2.second.parts(), key.second.parts()}] += c * c2;
            TensorElem dr = coproduct(monomial(key.second));
            for (const auto& [k2, c2] : dr.terms())
                rhs[{key.first.parts(), k2.first.parts(), k2.second.parts()}] += c * c2;
        }
        CHECK(lhs == rhs);
    }
    // multiplicativity of the coproduct on pairs
    for (const Composition& a : comps)
        for (const Composition& b : comps) {
            if (a.size() + b.size() > 5) continue;
            CHECK(coproduct(mul(monomial(a), monomial(b))) ==
                  tensor_mul(coproduct(monomial(a)), coproduct(monomial(b))));
        }
}

TEST_CASE("fundamental coordinates") {
    CoeffMap c11 = m_to_f(monomial(Composition{1, 1}));
    REQUIRE(c11.size() == 1);
    CHECK(c11.at(Composition{1, 1}) == 1);

    CoeffMap c2 = m_to_f(monomial(Composition{2}));
    REQUIRE(c2.size() == 2);
    CHECK(c2.at(Composition{2}) == 1);
    CHECK(c2.at(Composition{1, 1}) == -1);

    CoeffMap cu = m_to_f(QSymElem::one());
    REQUIRE(cu.size() == 1);
    CHECK(cu.at(Composition{}) == 1);

    CoeffMap c21 = m_to_f(fundamental(Composition{2, 1}));
    REQUIRE(c21.size() == 1);
    CHECK(c21.at(Composition{2, 1}) == 1);

    // round trip on everything supported in degree <= 6
    for (const Composition& a : comps_up_to(6)) {
        QSymElem f = monomial(a);
        CHECK(from_f_coords(m_to_f(f)) == f);
        QSymElem g = fundamental(a);
        CHECK(from_f_coords(m_to_f(g)) == g);
    }
}

TEST_CASE("antipode") {
    CHECK(antipode(QSymElem::one()) == QSymElem::one());
    CHECK(antipode(fundamental(Composition{2})) == fundamental(Composition{1, 1}));
    CHECK(antipode(monomial(Composition{1})) == monomial(Composition{1}) * Int(-1));

    // convolution axiom on basis elements of degree <= 6
    for (const Composition& a : comps_up_to(6)) {
        QSymElem left, right;
        const auto& parts = a.parts();
        for (std::size_t i = 0; i <= parts.size(); ++i) {
            Composition pre(std::vector<int>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(i)));
            Composition suf(std::vector<int>(parts.begin() + static_cast<std::ptrdiff_t>(i), parts.end()));
            left += mul(antipode(monomial(pre)), monomial(suf));
            right += mul(monomial(pre), antipode(monomial(suf)));
        }
        QSymElem expected = QSymElem::one() * counit(monomial(a));
        CHECK(left == expected);
        CHECK(right == expected);
    }
}

TEST_CASE("h and e") {
    CHECK(h(0) == QSymElem::one());
    CHECK(h(1) == monomial(Composition{1}));
    CHECK(h(2) == fundamental(Composition{2}));
    CHECK(e(0) == QSymElem::one());
    CHECK(e(1) == monomial(Composition{1}));
    CHECK(e(2) == monomial(Composition{1, 1}));
    CHECK(e(3) == fundamental(Composition{1, 1, 1}));
    CHECK_THROWS_AS(h(-1), std::invalid_argument);
    CHECK_THROWS_AS(e(-1), std::invalid_argument);

    // oracle: e_2 is the sum over i < j of x_i x_j at n = 6
    TruncSeries expected(6, 5);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            Monomial m(6, 0);
            m[static_cast<std::size_t>(i)] = 1;
            m[static_cast<std::size_t>(j)] = 1;
            expected.add_term(m, 1);
        }
    CHECK(expand_elem(e(2), 6, 5) == expected);
}

TEST_CASE("product agrees with the truncated expansion oracle") {
    auto comps = comps_up_to(5);
    for (const Composition& a : comps)
        for (const Composition& b : comps) {
            if (a.size() + b.size() > 5) continue;
            CHECK(expand_elem(mul(monomial(a), monomial(b)), 6, 5) ==
                  series_mul(expand_M(a, 6, 5), expand_M(b, 6, 5)));
        }
}

TEST_CASE("element arithmetic and degree") {
    QSymElem z;
    CHECK(z.is_zero());
    CHECK(z.degree() == kZeroDegree);
    QSymElem f = monomial(Composition{2, 1});
    CHECK(f.degree() == 3);
    CHECK((f - f).is_zero());
    CHECK((f * Int(0)).is_zero());
    QSymElem g = f + f;
    CHECK(g.coeff(Composition{2, 1}) == 2);
}
