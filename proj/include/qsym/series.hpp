#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/ints.hpp"
#include "qsym/qsym.hpp"
#include "qsym/words.hpp"

namespace qsym {

/// Commutative monomial in n variables, as an exponent vector.
using Monomial = std::vector<int>;

inline int monomial_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

/// min Supp, with the empty support reported as kInfSupport.
inline int supp_min(const Monomial& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) return static_cast<int>(i) + 1;
    return kInfSupport;
}

/// max Supp, with the empty support reported as 0.
inline int supp_max(const Monomial& m) {
    for (std::size_t i = m.size(); i > 0; --i)
        if (m[i - 1] > 0) return static_cast<int>(i);
    return 0;
}

enum class SeriesOp { mul, prec, succeq, preceq, succ, circ, belg, tvim };

/// The monomial-level keep condition for each operation, in terms of the
/// supports of the two factors.
inline bool series_op_keeps(SeriesOp op, int min0, int max0, int min1) {
    switch (op) {
        case SeriesOp::mul: return true;
        case SeriesOp::prec: return min0 < min1;
        case SeriesOp::succeq: return min0 >= min1;
        case SeriesOp::preceq: return min0 <= min1;
        case SeriesOp::succ: return min0 > min1;
        case SeriesOp::circ: return min0 == min1;
        case SeriesOp::belg: return max0 <= min1;
        case SeriesOp::tvim: return max0 < min1;
    }
    return false;
}

inline SeriesOp parse_series_op(const std::string& name) {
    if (name == "mul") return SeriesOp::mul;
    if (name == "prec") return SeriesOp::prec;
    if (name == "succeq") return SeriesOp::succeq;
    if (name == "preceq") return SeriesOp::preceq;
    if (name == "succ") return SeriesOp::succ;
    if (name == "circ") return SeriesOp::circ;
    if (name == "belg") return SeriesOp::belg;
    if (name == "tvim") return SeriesOp::tvim;
    throw std::invalid_argument("unknown series operation: " + name);
}

/// Degree-truncated polynomial in n commuting variables. Products whose
/// degree exceeds d are silently dropped, so results are only meaningful in
/// total degree <= d.
class TruncSeries {
public:
    TruncSeries(int n, int d) : n_(n), d_(d) {
        if (n < 0 || d < 0) throw std::invalid_argument("TruncSeries: need n, d >= 0");
    }

    int vars() const { return n_; }
    int max_degree() const { return d_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        if (static_cast<int>(m.size()) != n_)
            throw std::invalid_argument("TruncSeries: monomial has wrong variable count");
        if (monomial_degree(m) > d_) return;
        Int& slot = terms_[m];
        slot += c;
        if (slot == 0) terms_.erase(m);
    }

    TruncSeries& operator+=(const TruncSeries& g) {
        check_compatible(g);
        for (const auto& [m, c] : g.terms_) add_term(m, c);
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& g) {
        check_compatible(g);
        for (const auto& [m, c] : g.terms_) add_term(m, -c);
        return *this;
    }
    TruncSeries& operator*=(const Int& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend TruncSeries operator+(TruncSeries f, const TruncSeries& g) { return f += g; }
    friend TruncSeries operator-(TruncSeries f, const TruncSeries& g) { return f -= g; }
    friend TruncSeries operator*(TruncSeries f, const Int& s) { return f *= s; }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

    void check_compatible(const TruncSeries& g) const {
        if (n_ != g.n_ || d_ != g.d_)
            throw std::invalid_argument("TruncSeries: mismatched (n, d)");
    }

private:
    int n_;
    int d_;
    std::map<Monomial, Int> terms_;
};

inline TruncSeries series_one(int n, int d) {
    TruncSeries f(n, d);
    f.add_term(Monomial(static_cast<std::size_t>(n), 0), 1);
    return f;
}

/// Monomial-wise restricted product.
inline TruncSeries series_op(SeriesOp op, const TruncSeries& f, const TruncSeries& g) {
    f.check_compatible(g);
    TruncSeries out(f.vars(), f.max_degree());
    for (const auto& [ma, a] : f.terms()) {
        const int min0 = supp_min(ma), max0 = supp_max(ma);
        for (const auto& [mb, b] : g.terms()) {
            if (!series_op_keeps(op, min0, max0, supp_min(mb))) continue;
            Monomial prod = ma;
            for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += mb[i];
            out.add_term(prod, a * b);
        }
    }
    return out;
}

inline TruncSeries series_mul(const TruncSeries& f, const TruncSeries& g) {
    return series_op(SeriesOp::mul, f, g);
}

/// M_alpha restricted to variables x_1..x_n.
inline TruncSeries expand_M(const Composition& alpha, int n, int d) {
    if (alpha.size() > d) throw std::invalid_argument("expand_M: |alpha| exceeds degree bound");
    TruncSeries out(n, d);
    const int l = alpha.length();
    std::vector<int> idx(static_cast<std::size_t>(l));
    auto rec = [&](auto&& self, int pos, int low) -> void {
        if (pos == l) {
            Monomial m(static_cast<std::size_t>(n), 0);
            for (int p = 0; p < l; ++p) m[static_cast<std::size_t>(idx[static_cast<std::size_t>(p)])] = alpha.part(p);
            out.add_term(m, 1);
            return;
        }
        for (int i = low; i < n; ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// F_alpha restricted to variables x_1..x_n: weakly increasing index words
/// with strict rises at the partial sums of alpha.
inline TruncSeries expand_F(const Composition& alpha, int n, int d) {
    if (alpha.size() > d) throw std::invalid_argument("expand_F: |alpha| exceeds degree bound");
    TruncSeries out(n, d);
    const int size = alpha.size();
    std::vector<int> cuts = partial_sums(alpha).elems;
    std::vector<int> idx(static_cast<std::size_t>(size));
    auto strict_after = [&](int j) {
        // positions are 1-based in the defining condition
        return std::binary_search(cuts.begin(), cuts.end(), j);
    };
    auto rec = [&](auto&& self, int pos, int low) -> void {
        if (pos == size) {
            Monomial m(static_cast<std::size_t>(n), 0);
            for (int p = 0; p < size; ++p) ++m[static_cast<std::size_t>(idx[static_cast<std::size_t>(p)])];
            out.add_term(m, 1);
            return;
        }
        for (int i = low; i < n; ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            self(self, pos + 1, strict_after(pos + 1) ? i + 1 : i);
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Linear extension of expand_M over an element.
inline TruncSeries expand_elem(const QSymElem& f, int n, int d) {
    if (f.degree() > d) throw std::invalid_argument("expand_elem: degree exceeds bound");
    TruncSeries out(n, d);
    for (const auto& [alpha, c] : f.terms()) {
        TruncSeries m = expand_M(alpha, n, d);
        m *= c;
        out += m;
    }
    return out;
}

/// Degree-truncated noncommutative polynomial in n letters; keys are words.
class NCTruncSeries {
public:
    NCTruncSeries(int n, int d) : n_(n), d_(d) {
        if (n < 0 || d < 0) throw std::invalid_argument("NCTruncSeries: need n, d >= 0");
    }

    int vars() const { return n_; }
    int max_degree() const { return d_; }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const std::vector<int>& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const std::vector<int>& w, const Int& c) {
        if (c == 0) return;
        for (int x : w)
            if (x < 1 || x > n_) throw std::invalid_argument("NCTruncSeries: letter out of range");
        if (static_cast<int>(w.size()) > d_) return;
        Int& slot = terms_[w];
        slot += c;
        if (slot == 0) terms_.erase(w);
    }

    NCTruncSeries& operator+=(const NCTruncSeries& g) {
        check_compatible(g);
        for (const auto& [w, c] : g.terms_) add_term(w, c);
        return *this;
    }
    NCTruncSeries& operator-=(const NCTruncSeries& g) {
        check_compatible(g);
        for (const auto& [w, c] : g.terms_) add_term(w, -c);
        return *this;
    }
    NCTruncSeries& operator*=(const Int& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend NCTruncSeries operator+(NCTruncSeries f, const NCTruncSeries& g) { return f += g; }
    friend NCTruncSeries operator-(NCTruncSeries f, const NCTruncSeries& g) { return f -= g; }
    friend NCTruncSeries operator*(NCTruncSeries f, const Int& s) { return f *= s; }

    friend bool operator==(const NCTruncSeries&, const NCTruncSeries&) = default;

    void check_compatible(const NCTruncSeries& g) const {
        if (n_ != g.n_ || d_ != g.d_)
            throw std::invalid_argument("NCTruncSeries: mismatched (n, d)");
    }

private:
    int n_;
    int d_;
    std::map<std::vector<int>, Int> terms_;
};

inline NCTruncSeries nc_series_one(int n, int d) {
    NCTruncSeries f(n, d);
    f.add_term({}, 1);
    return f;
}

namespace detail {

inline int word_supp_min(const std::vector<int>& w) {
    int m = kInfSupport;
    for (int x : w) m = std::min(m, x);
    return m;
}

inline int word_supp_max(const std::vector<int>& w) {
    int m = 0;
    for (int x : w) m = std::max(m, x);
    return m;
}

} // namespace detail

/// Word-wise filtered concatenation.
inline NCTruncSeries nc_series_op(SeriesOp op, const NCTruncSeries& f, const NCTruncSeries& g) {
    f.check_compatible(g);
    NCTruncSeries out(f.vars(), f.max_degree());
    for (const auto& [u, a] : f.terms()) {
        const int min0 = detail::word_supp_min(u), max0 = detail::word_supp_max(u);
        for (const auto& [v, b] : g.terms()) {
            if (!series_op_keeps(op, min0, max0, detail::word_supp_min(v))) continue;
            std::vector<int> w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add_term(w, a * b);
        }
    }
    return out;
}

/// M_u restricted to letters X_1..X_n: all words with packing u.
inline NCTruncSeries expand_Mu(const PackedWord& u, int n, int d) {
    if (u.size() > d) throw std::invalid_argument("expand_Mu: length exceeds degree bound");
    NCTruncSeries out(n, d);
    const int k = u.max_letter();
    std::vector<int> image(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int pos, int low) -> void {
        if (pos == k) {
            std::vector<int> w;
            w.reserve(static_cast<std::size_t>(u.size()));
            for (int x : u.letters()) w.push_back(image[static_cast<std::size_t>(x - 1)]);
            out.add_term(w, 1);
            return;
        }
        for (int i = low; i <= n; ++i) {
            image[static_cast<std::size_t>(pos)] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

/// Linear extension of expand_Mu over a WQSym element.
inline NCTruncSeries expand_wq(const WQSymElem& f, int n, int d) {
    NCTruncSeries out(n, d);
    for (const auto& [u, c] : f.terms()) {
        if (u.size() > d) throw std::invalid_argument("expand_wq: degree exceeds bound");
        NCTruncSeries m = expand_Mu(u, n, d);
        m *= c;
        out += m;
    }
    return out;
}

} // namespace qsym
