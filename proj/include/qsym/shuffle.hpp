#pragma once

#include <map>
#include <vector>

#include "qsym/composition.hpp"
#include "qsym/ints.hpp"

namespace qsym {

using CoeffMap = std::map<Composition, Int, CanonicalLess>;

namespace detail {

// Interleaving walk shared by the shuffle and smap structure constants.
// Each output part consumes the next part of alpha, the next part of beta,
// or both at once (their sum). When require_alpha_first is set, the first
// output part must come from alpha alone; this encodes the condition
// min f(S0) < min f(S1) on the corresponding maps, because the fiber of the
// first output position is the one holding the overall minimum.
inline void interleave_terms(const std::vector<int>& a, const std::vector<int>& b,
                             std::size_t i, std::size_t j, std::vector<int>& acc,
                             bool require_alpha_first, CoeffMap& out) {
    if (i == a.size() && j == b.size()) {
        out[Composition(acc)] += 1;
        return;
    }
    const bool first = acc.empty();
    if (i < a.size()) {
        acc.push_back(a[i]);
        interleave_terms(a, b, i + 1, j, acc, require_alpha_first, out);
        acc.pop_back();
    }
    if (first && require_alpha_first) return;
    if (j < b.size()) {
        acc.push_back(b[j]);
        interleave_terms(a, b, i, j + 1, acc, require_alpha_first, out);
        acc.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        acc.push_back(a[i] + b[j]);
        interleave_terms(a, b, i + 1, j + 1, acc, require_alpha_first, out);
        acc.pop_back();
    }
}

inline Int interleave_count(const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<int>& g, std::size_t i, std::size_t j,
                            std::size_t u, bool require_alpha_first) {
    if (u == g.size())
        return (i == a.size() && j == b.size()) ? Int(1) : Int(0);
    Int total = 0;
    if (i < a.size() && a[i] == g[u])
        total += interleave_count(a, b, g, i + 1, j, u + 1, require_alpha_first);
    if (u == 0 && require_alpha_first) return total;
    if (j < b.size() && b[j] == g[u])
        total += interleave_count(a, b, g, i, j + 1, u + 1, require_alpha_first);
    if (i < a.size() && j < b.size() && a[i] + b[j] == g[u])
        total += interleave_count(a, b, g, i + 1, j + 1, u + 1, require_alpha_first);
    return total;
}

// Definitional count: enumerate every map f from the tagged disjoint union of
// the part index sets into {1,...,len(gamma)} and test the defining
// properties directly. Exponential; kept as the reference path.
inline Int count_by_map_enumeration(const Composition& alpha, const Composition& beta,
                                    const Composition& gamma, bool require_min_condition) {
    const int la = alpha.length(), lb = beta.length(), n = gamma.length();
    const int total = la + lb;
    if (total == 0) {
        if (n != 0) return 0;
        // The unique empty map; min over an empty image is +infinity.
        return require_min_condition ? Int(0) : Int(1);
    }
    if (n == 0) return 0;
    std::vector<int> f(static_cast<std::size_t>(total), 1);
    Int count = 0;
    while (true) {
        bool ok = true;
        for (int p = 1; p < la && ok; ++p)
            if (f[static_cast<std::size_t>(p - 1)] >= f[static_cast<std::size_t>(p)]) ok = false;
        for (int q = 1; q < lb && ok; ++q)
            if (f[static_cast<std::size_t>(la + q - 1)] >= f[static_cast<std::size_t>(la + q)]) ok = false;
        if (ok && require_min_condition) {
            // min f(S0) < min f(S1), with min of an empty set = +infinity
            int min0 = la > 0 ? f[0] : n + 1;
            int min1 = lb > 0 ? f[static_cast<std::size_t>(la)] : n + 1;
            if (la == 0) ok = false;           // infinity is never < anything
            else if (lb > 0 && min0 >= min1) ok = false;
        }
        if (ok) {
            std::vector<int> fiber(static_cast<std::size_t>(n), 0);
            for (int p = 0; p < la; ++p)
                fiber[static_cast<std::size_t>(f[static_cast<std::size_t>(p)] - 1)] += alpha.part(p);
            for (int q = 0; q < lb; ++q)
                fiber[static_cast<std::size_t>(f[static_cast<std::size_t>(la + q)] - 1)] += beta.part(q);
            for (int u = 0; u < n && ok; ++u)
                if (fiber[static_cast<std::size_t>(u)] != gamma.part(u)) ok = false;
            if (ok) ++count;
        }
        int pos = total - 1;
        while (pos >= 0 && f[static_cast<std::size_t>(pos)] == n) {
            f[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++f[static_cast<std::size_t>(pos)];
    }
    return count;
}

} // namespace detail

/// Structure constants of the product on the monomial basis: the number of
/// overlapping shuffles (alpha, beta) -> gamma.
inline Int overlapping_shuffle_count(const Composition& alpha, const Composition& beta,
                                     const Composition& gamma) {
    if (gamma.size() != alpha.size() + beta.size()) return 0;
    return detail::interleave_count(alpha.parts(), beta.parts(), gamma.parts(), 0, 0, 0, false);
}

/// Structure constants of the restricted product: the number of smaps
/// (alpha, beta) -> gamma, i.e. overlapping shuffles whose first output part
/// comes from alpha alone. Zero whenever alpha is empty.
inline Int smap_count(const Composition& alpha, const Composition& beta,
                      const Composition& gamma) {
    if (gamma.size() != alpha.size() + beta.size()) return 0;
    if (alpha.empty()) return 0;
    return detail::interleave_count(alpha.parts(), beta.parts(), gamma.parts(), 0, 0, 0, true);
}

/// Slow definitional counterparts, by exhaustive map enumeration.
inline Int overlapping_shuffle_count_by_maps(const Composition& alpha, const Composition& beta,
                                             const Composition& gamma) {
    if (gamma.size() != alpha.size() + beta.size()) return 0;
    return detail::count_by_map_enumeration(alpha, beta, gamma, false);
}

inline Int smap_count_by_maps(const Composition& alpha, const Composition& beta,
                              const Composition& gamma) {
    if (gamma.size() != alpha.size() + beta.size()) return 0;
    return detail::count_by_map_enumeration(alpha, beta, gamma, true);
}

/// All gamma with nonzero overlapping-shuffle count, with multiplicities.
inline CoeffMap overlapping_shuffle_terms(const Composition& alpha, const Composition& beta) {
    CoeffMap out;
    std::vector<int> acc;
    detail::interleave_terms(alpha.parts(), beta.parts(), 0, 0, acc, false, out);
    return out;
}

/// All gamma with nonzero smap count, with multiplicities.
inline CoeffMap smap_terms(const Composition& alpha, const Composition& beta) {
    CoeffMap out;
    if (alpha.empty()) return out;
    std::vector<int> acc;
    detail::interleave_terms(alpha.parts(), beta.parts(), 0, 0, acc, true, out);
    return out;
}

} // namespace qsym
