#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qsym/composition.hpp"
#include "qsym/ints.hpp"
#include "qsym/shuffle.hpp"

namespace qsym {

/// Degree reported for the zero element (standing in for minus infinity).
inline constexpr int kZeroDegree = -1;

/// An element of QSym over the integers, stored in the monomial basis.
/// Zero coefficients are never kept.
class QSymElem {
public:
    QSymElem() = default;
    explicit QSymElem(CoeffMap terms) : terms_(std::move(terms)) { prune(); }

    static QSymElem zero() { return QSymElem{}; }
    static QSymElem one() {
        QSymElem f;
        f.terms_[Composition{}] = 1;
        return f;
    }

    const CoeffMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Composition& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Int(0) : it->second;
    }

    int degree() const {
        int d = kZeroDegree;
        for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.size());
        return d;
    }

    void add_term(const Composition& alpha, const Int& c) {
        if (c == 0) return;
        Int& slot = terms_[alpha];
        slot += c;
        if (slot == 0) terms_.erase(alpha);
    }

    QSymElem& operator+=(const QSymElem& g) {
        for (const auto& [alpha, c] : g.terms_) add_term(alpha, c);
        return *this;
    }
    QSymElem& operator-=(const QSymElem& g) {
        for (const auto& [alpha, c] : g.terms_) add_term(alpha, -c);
        return *this;
    }
    QSymElem& operator*=(const Int& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& [alpha, c] : terms_) c *= s;
        return *this;
    }

    friend QSymElem operator+(QSymElem f, const QSymElem& g) { return f += g; }
    friend QSymElem operator-(QSymElem f, const QSymElem& g) { return f -= g; }
    friend QSymElem operator-(QSymElem f) { return f *= Int(-1); }
    friend QSymElem operator*(QSymElem f, const Int& s) { return f *= s; }
    friend QSymElem operator*(const Int& s, QSymElem f) { return f *= s; }

    friend bool operator==(const QSymElem&, const QSymElem&) = default;

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    }

    CoeffMap terms_;
};

/// M_alpha.
inline QSymElem monomial(const Composition& alpha) {
    QSymElem f;
    f.add_term(alpha, 1);
    return f;
}

/// F_alpha = sum of M_beta over all beta refining alpha.
inline QSymElem fundamental(const Composition& alpha) {
    QSymElem f;
    for (const Composition& beta : refinements(alpha)) f.add_term(beta, 1);
    return f;
}

/// Product, via overlapping-shuffle structure constants on the M basis.
inline QSymElem mul(const QSymElem& f, const QSymElem& g) {
    QSymElem out;
    for (const auto& [alpha, a] : f.terms())
        for (const auto& [beta, b] : g.terms())
            for (const auto& [gamma, n] : overlapping_shuffle_terms(alpha, beta))
                out.add_term(gamma, a * b * n);
    return out;
}

inline QSymElem operator*(const QSymElem& f, const QSymElem& g) { return mul(f, g); }

using TensorKey = std::pair<Composition, Composition>;

struct TensorKeyLess {
    bool operator()(const TensorKey& a, const TensorKey& b) const {
        if (a.first != b.first) return canonical_less(a.first, b.first);
        return canonical_less(a.second, b.second);
    }
};

using TensorMap = std::map<TensorKey, Int, TensorKeyLess>;

/// An element of QSym tensor QSym, used for coproducts.
class TensorElem {
public:
    TensorElem() = default;

    const TensorMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Composition& a, const Composition& b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Composition& a, const Composition& b, const Int& c) {
        if (c == 0) return;
        TensorKey key{a, b};
        Int& slot = terms_[key];
        slot += c;
        if (slot == 0) terms_.erase(key);
    }

    TensorElem& operator+=(const TensorElem& t) {
        for (const auto& [key, c] : t.terms_) add_term(key.first, key.second, c);
        return *this;
    }
    friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
    friend bool operator==(const TensorElem&, const TensorElem&) = default;

private:
    TensorMap terms_;
};

/// Componentwise product on tensors: (a ox b)(c ox d) = ac ox bd.
inline TensorElem tensor_mul(const TensorElem& s, const TensorElem& t) {
    TensorElem out;
    for (const auto& [ks, cs] : s.terms())
        for (const auto& [kt, ct] : t.terms()) {
            QSymElem left = mul(monomial(ks.first), monomial(kt.first));
            QSymElem right = mul(monomial(ks.second), monomial(kt.second));
            for (const auto& [a, ca] : left.terms())
                for (const auto& [b, cb] : right.terms())
                    out.add_term(a, b, cs * ct * ca * cb);
        }
    return out;
}

/// Deconcatenation coproduct, extended linearly from the M basis.
inline TensorElem coproduct(const QSymElem& f) {
    TensorElem out;
    for (const auto& [alpha, c] : f.terms()) {
        const auto& parts = alpha.parts();
        for (std::size_t i = 0; i <= parts.size(); ++i) {
            Composition left(std::vector<int>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(i)));
            Composition right(std::vector<int>(parts.begin() + static_cast<std::ptrdiff_t>(i), parts.end()));
            out.add_term(left, right, c);
        }
    }
    return out;
}

/// The coefficient of M_{[]}.
inline Int counit(const QSymElem& f) { return f.coeff(Composition{}); }

/// Coordinates of f on the fundamental basis, by inclusion-exclusion:
/// M_beta = sum over gamma refining beta of (-1)^{len gamma - len beta} F_gamma.
inline CoeffMap m_to_f(const QSymElem& f) {
    CoeffMap out;
    for (const auto& [beta, c] : f.terms()) {
        for (const Composition& gamma : refinements(beta)) {
            Int& slot = out[gamma];
            slot += c * neg_one_pow(gamma.length() - beta.length());
            if (slot == 0) out.erase(gamma);
        }
    }
    return out;
}

/// Rebuild an element from fundamental-basis coordinates.
inline QSymElem from_f_coords(const CoeffMap& coords) {
    QSymElem out;
    for (const auto& [alpha, c] : coords) out += fundamental(alpha) * c;
    return out;
}

/// Antipode: S(F_alpha) = (-1)^{|alpha|} F_{omega(alpha)}, applied in
/// fundamental coordinates.
inline QSymElem antipode(const QSymElem& f) {
    CoeffMap image;
    for (const auto& [alpha, c] : m_to_f(f)) {
        Composition target = omega(alpha);
        Int& slot = image[target];
        slot += c * neg_one_pow(alpha.size());
        if (slot == 0) image.erase(target);
    }
    return from_f_coords(image);
}

/// Complete homogeneous h_m = F_{(m)}; h_0 = 1.
inline QSymElem h(int m) {
    if (m < 0) throw std::invalid_argument("h: m must be nonnegative");
    if (m == 0) return QSymElem::one();
    return fundamental(Composition{m});
}

/// Elementary e_m = M_{(1^m)}; e_0 = 1.
inline QSymElem e(int m) {
    if (m < 0) throw std::invalid_argument("e: m must be nonnegative");
    return monomial(Composition(std::vector<int>(static_cast<std::size_t>(m), 1)));
}

} // namespace qsym
