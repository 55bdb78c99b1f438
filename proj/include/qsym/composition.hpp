#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsym {

/// A finite sequence of positive integers; the index type for the bases of
/// QSym and NSym. The empty composition is written [] and acts as the unit
/// for both concat and odot.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p <= 0)
                throw std::invalid_argument("Composition: parts must be positive");
    }

    Composition(std::initializer_list<int> parts)
        : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Sum of the parts.
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    int part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

/// Pair (n, elems) with elems a strictly increasing subset of {1,...,n-1}.
/// Determines a unique composition of n.
struct PartialSumSet {
    int n = 0;
    std::vector<int> elems;
};

inline PartialSumSet partial_sums(const Composition& alpha) {
    PartialSumSet s;
    s.n = alpha.size();
    int acc = 0;
    for (int i = 0; i + 1 < alpha.length(); ++i) {
        acc += alpha.part(i);
        s.elems.push_back(acc);
    }
    return s;
}

inline Composition from_partial_sums(const PartialSumSet& s) {
    if (s.n < 0)
        throw std::invalid_argument("from_partial_sums: negative ambient size");
    int prev = 0;
    std::vector<int> parts;
    for (int e : s.elems) {
        if (e <= prev || e >= s.n)
            throw std::invalid_argument("from_partial_sums: elems must be strictly increasing within {1,...,n-1}");
        parts.push_back(e - prev);
        prev = e;
    }
    if (s.n > prev)
        parts.push_back(s.n - prev);
    return Composition(std::move(parts));
}

/// Concatenation [alpha, beta].
inline Composition concat(const Composition& alpha, const Composition& beta) {
    std::vector<int> parts = alpha.parts();
    parts.insert(parts.end(), beta.parts().begin(), beta.parts().end());
    return Composition(std::move(parts));
}

/// alpha odot beta: concatenation with the touching parts merged. The empty
/// composition is a two-sided unit.
inline Composition odot(const Composition& alpha, const Composition& beta) {
    if (alpha.empty()) return beta;
    if (beta.empty()) return alpha;
    std::vector<int> parts = alpha.parts();
    parts.back() += beta.part(0);
    parts.insert(parts.end(), beta.parts().begin() + 1, beta.parts().end());
    return Composition(std::move(parts));
}

inline Composition reverse(const Composition& alpha) {
    std::vector<int> parts = alpha.parts();
    std::reverse(parts.begin(), parts.end());
    return Composition(std::move(parts));
}

/// The conjugate composition: the unique beta of n = |alpha| whose partial-sum
/// set is the complement of that of reverse(alpha) in {1,...,n-1}.
inline Composition omega(const Composition& alpha) {
    PartialSumSet d = partial_sums(reverse(alpha));
    PartialSumSet c;
    c.n = d.n;
    auto it = d.elems.begin();
    for (int v = 1; v < d.n; ++v) {
        if (it != d.elems.end() && *it == v) { ++it; continue; }
        c.elems.push_back(v);
    }
    return from_partial_sums(c);
}

/// Canonical ordering used for iteration and all serialized output: graded by
/// size, then within a size by descending lexicographic comparison of parts.
/// This matches the order in which compositions_of yields.
inline bool canonical_less(const Composition& a, const Composition& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

struct CanonicalLess {
    bool operator()(const Composition& a, const Composition& b) const {
        return canonical_less(a, b);
    }
};

/// All compositions of n, by descending first part, then recursively on the
/// remainder. 2^{n-1} results for n >= 1, just the empty composition for 0.
inline std::vector<Composition> compositions_of(int n) {
    if (n < 0)
        throw std::invalid_argument("compositions_of: n must be nonnegative");
    std::vector<Composition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(acc);
            return;
        }
        for (int first = rest; first >= 1; --first) {
            acc.push_back(first);
            self(self, rest - first);
            acc.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

namespace detail {

// Compositions of n whose partial-sum set keeps `kept` and ranges over all
// subsets of `optional_elems` on top of it.
inline std::vector<Composition> cut_subsets(int n, const std::vector<int>& kept,
                                            const std::vector<int>& optional_elems) {
    std::vector<Composition> out;
    const int k = static_cast<int>(optional_elems.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        PartialSumSet s;
        s.n = n;
        s.elems = kept;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i))
                s.elems.push_back(optional_elems[static_cast<std::size_t>(i)]);
        std::sort(s.elems.begin(), s.elems.end());
        out.push_back(from_partial_sums(s));
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

} // namespace detail

/// All beta of size |alpha| with D(beta) a subset of D(alpha); 2^{|D(alpha)|}
/// of them, in canonical order.
inline std::vector<Composition> coarsenings(const Composition& alpha) {
    return detail::cut_subsets(alpha.size(), {}, partial_sums(alpha).elems);
}

/// All beta of size |alpha| with D(beta) a superset of D(alpha), in canonical
/// order. These index the monomial expansion of the fundamental basis.
inline std::vector<Composition> refinements(const Composition& alpha) {
    const int n = alpha.size();
    std::vector<int> base = partial_sums(alpha).elems;
    std::vector<int> rest;
    for (int v = 1; v < n; ++v)
        if (!std::binary_search(base.begin(), base.end(), v))
            rest.push_back(v);
    return detail::cut_subsets(n, base, rest);
}

/// Lexicographic order with a proper prefix counting as smaller.
inline bool lex_leq(const Composition& beta, const Composition& alpha) {
    const auto& b = beta.parts();
    const auto& a = alpha.parts();
    std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] != a[i]) return b[i] < a[i];
    }
    return b.size() <= a.size();
}

inline std::string to_string(const Composition& alpha) {
    std::string s = "[";
    for (int i = 0; i < alpha.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(alpha.part(i));
    }
    s += ']';
    return s;
}

} // namespace qsym
