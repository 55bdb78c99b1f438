#include <catch2/catch_amalgamated.hpp>

#include "qsym/nsym.hpp"

using namespace qsym;

namespace {

std::vector<Composition> comps_up_to(int max_size) {
    std::vector<Composition> out;
    for (int n = 0; n <= max_size; ++n)
        for (const Composition& c : compositions_of(n)) out.push_back(c);
    return out;
}

} // namespace

TEST_CASE("ribbon product") {
    NSymElem p = ribbon_mul(ribbon(Composition{1}), ribbon(Composition{1}));
    CHECK(p.coeff(Composition{1, 1}) == 1);
    CHECK(p.coeff(Composition{2}) == 1);
    CHECK(p.terms().size() == 2);

    CHECK(ribbon_mul(NSymElem::one(), ribbon(Composition{2, 1})) == ribbon(Composition{2, 1}));

    NSymElem q = ribbon_mul(ribbon(Composition{2}), ribbon(Composition{1, 1}));
    CHECK(q.coeff(Composition{2, 1, 1}) == 1);
    CHECK(q.coeff(Composition{3, 1}) == 1);
    CHECK(q.terms().size() == 2);
}

TEST_CASE("ribbon product is associative with unit, total degree <= 6") {
    auto comps = comps_up_to(6);
    for (const Composition& a : comps) {
        CHECK(ribbon_mul(NSymElem::one(), ribbon(a)) == ribbon(a));
        CHECK(ribbon_mul(ribbon(a), NSymElem::one()) == ribbon(a));
        for (const Composition& b : comps) {
            if (a.size() + b.size() > 6) continue;
            for (const Composition& c : comps) {
                if (a.size() + b.size() + c.size() > 6) continue;
                CHECK(ribbon_mul(ribbon_mul(ribbon(a), ribbon(b)), ribbon(c)) ==
                      ribbon_mul(ribbon(a), ribbon_mul(ribbon(b), ribbon(c))));
            }
        }
    }
}

TEST_CASE("pairing is the duality of ribbon and fundamental") {
    CHECK(pairing(ribbon(Composition{1, 2}), fundamental(Composition{1, 2})) == 1);
    CHECK(pairing(ribbon(Composition{1, 2}), fundamental(Composition{2, 1})) == 0);
    CHECK(pairing(NSymElem::one(), monomial(Composition{2})) == 0);
    CHECK(pairing(NSymElem::one(), QSymElem::one()) == 1);

    for (const Composition& a : compositions_of(4))
        for (const Composition& b : compositions_of(4))
            CHECK(pairing(ribbon(a), fundamental(b)) == (a == b ? 1 : 0));
}

TEST_CASE("perp") {
    QSymElem f = monomial(Composition{2, 1});
    CHECK(perp(NSymElem::one(), f) == f);
    CHECK(perp(ribbon(Composition{1}), fundamental(Composition{1, 2})) == fundamental(Composition{2}));
    CHECK(perp(ribbon(Composition{2}), fundamental(Composition{2})) == QSymElem::one());
}

TEST_CASE("perp is adjoint to left multiplication") {
    auto small = comps_up_to(3);
    for (const Composition& g : small)
        for (const Composition& x : small)
            for (const Composition& fc : small) {
                QSymElem f = fundamental(fc);
                CHECK(pairing(ribbon_mul(ribbon(g), ribbon(x)), f) ==
                      pairing(ribbon(x), perp(ribbon(g), f)));
            }
}

TEST_CASE("perp of a product composes in reverse order") {
    auto small = comps_up_to(3);
    for (const Composition& a : small)
        for (const Composition& b : small)
            for (const Composition& fc : small) {
                QSymElem f = monomial(fc);
                CHECK(perp(ribbon_mul(ribbon(a), ribbon(b)), f) ==
                      perp(ribbon(b), perp(ribbon(a), f)));
            }
}

TEST_CASE("creation operator") {
    CHECK(W(1, QSymElem::one()) == fundamental(Composition{1}));
    CHECK(W(2, QSymElem::one()) == fundamental(Composition{2}));
    CHECK(W(1, monomial(Composition{1})) == monomial(Composition{1, 1}));
    CHECK_THROWS_AS(W(0, QSymElem::one()), std::invalid_argument);
    CHECK_THROWS_AS(W(-3, QSymElem::one()), std::invalid_argument);
    CHECK(W(2, QSymElem::zero()).is_zero());
}

TEST_CASE("zabrocki construction") {
    CHECK(zabrocki_dual_immaculate(Composition{}) == QSymElem::one());
    QSymElem s2 = zabrocki_dual_immaculate(Composition{2});
    CHECK(s2 == fundamental(Composition{2}));
    CHECK(zabrocki_dual_immaculate(Composition{1, 1}) == monomial(Composition{1, 1}));
}

TEST_CASE("f_setminus") {
    CHECK(f_setminus(Composition{2, 1}, 2).is_zero());
    CHECK(f_setminus(Composition{2, 1}, 1) == fundamental(Composition{2}));
    CHECK(f_setminus(Composition{3}, 1) == fundamental(Composition{2}));
    CHECK(f_setminus(Composition{}, 1).is_zero());
    CHECK(f_setminus(Composition{3}, 3) == QSymElem::one());
    CHECK_THROWS_AS(f_setminus(Composition{2}, 0), std::invalid_argument);
}
