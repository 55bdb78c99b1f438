#include <catch2/catch_amalgamated.hpp>

#include "qsym/shuffle.hpp"

using namespace qsym;

TEST_CASE("smap counts on the defining examples") {
    CHECK(smap_count(Composition{1}, Composition{1}, Composition{1, 1}) == 1);
    CHECK(smap_count(Composition{1}, Composition{1}, Composition{2}) == 0);
    CHECK(smap_count(Composition{}, Composition{1}, Composition{1}) == 0);
    CHECK(smap_count(Composition{2}, Composition{1}, Composition{2, 1}) == 1);
    CHECK(smap_count(Composition{2}, Composition{1}, Composition{1, 2}) == 0);
    CHECK(smap_count(Composition{2}, Composition{1}, Composition{3}) == 0);
    // size mismatch short-circuits to zero
    CHECK(smap_count(Composition{2}, Composition{1}, Composition{1, 1}) == 0);
    CHECK(smap_count(Composition{}, Composition{}, Composition{}) == 0);
}

TEST_CASE("overlapping shuffle counts") {
    CHECK(overlapping_shuffle_count(Composition{1}, Composition{1}, Composition{1, 1}) == 2);
    CHECK(overlapping_shuffle_count(Composition{1}, Composition{1}, Composition{2}) == 1);
    CHECK(overlapping_shuffle_count(Composition{}, Composition{}, Composition{}) == 1);
    CHECK(overlapping_shuffle_count(Composition{2}, Composition{1, 1}, Composition{2, 1, 1}) == 1);
}

TEST_CASE("fast recursion matches the definitional map enumeration") {
    std::vector<Composition> small;
    for (int n = 0; n <= 3; ++n)
        for (const Composition& c : compositions_of(n)) small.push_back(c);
    for (const Composition& alpha : small)
        for (const Composition& beta : small)
            for (const Composition& gamma : compositions_of(alpha.size() + beta.size())) {
                CHECK(smap_count(alpha, beta, gamma) == smap_count_by_maps(alpha, beta, gamma));
                CHECK(overlapping_shuffle_count(alpha, beta, gamma) ==
                      overlapping_shuffle_count_by_maps(alpha, beta, gamma));
            }
}

TEST_CASE("term maps agree with pointwise counts") {
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3 - p; ++q)
            for (const Composition& alpha : compositions_of(p))
                for (const Composition& beta : compositions_of(q)) {
                    CoeffMap smap = smap_terms(alpha, beta);
                    CoeffMap shuffle = overlapping_shuffle_terms(alpha, beta);
                    for (const Composition& gamma : compositions_of(p + q)) {
                        Int s = smap_count(alpha, beta, gamma);
                        Int t = overlapping_shuffle_count(alpha, beta, gamma);
                        auto it = smap.find(gamma);
                        CHECK((it == smap.end() ? Int(0) : it->second) == s);
                        auto jt = shuffle.find(gamma);
                        CHECK((jt == shuffle.end() ? Int(0) : jt->second) == t);
                        // an smap is an overlapping shuffle with a side condition
                        CHECK(s <= t);
                    }
                }
}
