#pragma once

#include "qsym/dendriform.hpp"
#include "qsym/qsym.hpp"

namespace qsym {

/// An element of NSym over the integers, in the ribbon basis. This is the
/// only NSym basis the library implements; it is dual to the fundamental
/// basis of QSym under the pairing below.
class NSymElem {
public:
    NSymElem() = default;
    explicit NSymElem(CoeffMap terms) : terms_(std::move(terms)) { prune(); }

    static NSymElem zero() { return NSymElem{}; }
    static NSymElem one() {
        NSymElem x;
        x.terms_[Composition{}] = 1;
        return x;
    }

    const CoeffMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Composition& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Composition& alpha, const Int& c) {
        if (c == 0) return;
        Int& slot = terms_[alpha];
        slot += c;
        if (slot == 0) terms_.erase(alpha);
    }

    NSymElem& operator+=(const NSymElem& y) {
        for (const auto& [alpha, c] : y.terms_) add_term(alpha, c);
        return *this;
    }
    NSymElem& operator-=(const NSymElem& y) {
        for (const auto& [alpha, c] : y.terms_) add_term(alpha, -c);
        return *this;
    }
    NSymElem& operator*=(const Int& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& [alpha, c] : terms_) c *= s;
        return *this;
    }

    friend NSymElem operator+(NSymElem x, const NSymElem& y) { return x += y; }
    friend NSymElem operator-(NSymElem x, const NSymElem& y) { return x -= y; }
    friend NSymElem operator*(NSymElem x, const Int& s) { return x *= s; }
    friend NSymElem operator*(const Int& s, NSymElem x) { return x *= s; }

    friend bool operator==(const NSymElem&, const NSymElem&) = default;

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    }

    CoeffMap terms_;
};

/// R_alpha.
inline NSymElem ribbon(const Composition& alpha) {
    NSymElem x;
    x.add_term(alpha, 1);
    return x;
}

/// R_alpha R_beta = R_{[alpha,beta]} + R_{alpha odot beta} for nonempty
/// alpha, beta; R_{[]} is the unit.
inline NSymElem ribbon_mul(const NSymElem& x, const NSymElem& y) {
    NSymElem out;
    for (const auto& [alpha, a] : x.terms())
        for (const auto& [beta, b] : y.terms()) {
            Int c = a * b;
            out.add_term(concat(alpha, beta), c);
            if (!alpha.empty() && !beta.empty()) out.add_term(odot(alpha, beta), c);
        }
    return out;
}

inline NSymElem operator*(const NSymElem& x, const NSymElem& y) { return ribbon_mul(x, y); }

/// The duality pairing with (R_alpha, F_beta) = [alpha = beta].
inline Int pairing(const NSymElem& x, const QSymElem& f) {
    CoeffMap coords = m_to_f(f);
    Int total = 0;
    for (const auto& [alpha, c] : x.terms()) {
        auto it = coords.find(alpha);
        if (it != coords.end()) total += c * it->second;
    }
    return total;
}

/// The adjoint of left multiplication by g, acting on QSym through the
/// coproduct: g perp f = sum over the coproduct of (g, f_(1)) f_(2).
inline QSymElem perp(const NSymElem& g, const QSymElem& f) {
    QSymElem out;
    for (const auto& [alpha, c] : f.terms()) {
        const auto& parts = alpha.parts();
        for (std::size_t i = 0; i <= parts.size(); ++i) {
            Composition left(std::vector<int>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(i)));
            Int weight = pairing(g, monomial(left));
            if (weight == 0) continue;
            Composition right(std::vector<int>(parts.begin() + static_cast<std::ptrdiff_t>(i), parts.end()));
            out.add_term(right, c * weight);
        }
    }
    return out;
}

/// The creation operator
/// W_m = sum over alpha of (-1)^{|alpha|} F_{alpha odot (m)} R_{omega(alpha)} perp,
/// truncated to |alpha| <= degree(f) (higher alpha annihilate f).
inline QSymElem W(int m, const QSymElem& f) {
    if (m <= 0) throw std::invalid_argument("W: m must be positive");
    QSymElem out;
    const Composition em{m};
    for (int k = 0; k <= f.degree(); ++k)
        for (const Composition& alpha : compositions_of(k)) {
            QSymElem p = perp(ribbon(omega(alpha)), f);
            if (p.is_zero()) continue;
            out += mul(fundamental(odot(alpha, em)), p) * neg_one_pow(k);
        }
    return out;
}

/// The dual immaculate function obtained by composing creation operators:
/// (W_{alpha_1} o W_{alpha_2} o ... o W_{alpha_l})(1).
inline QSymElem zabrocki_dual_immaculate(const Composition& alpha) {
    QSymElem acc = QSymElem::one();
    for (int i = alpha.length() - 1; i >= 0; --i) acc = W(alpha.part(i), acc);
    return acc;
}

/// F_alpha with m stripped from the last part: zero if alpha is empty or its
/// last part is below m; drops the last part when it equals m; otherwise
/// shrinks it by m.
inline QSymElem f_setminus(const Composition& alpha, int m) {
    if (m <= 0) throw std::invalid_argument("f_setminus: m must be positive");
    if (alpha.empty() || alpha.part(alpha.length() - 1) < m) return QSymElem::zero();
    std::vector<int> parts = alpha.parts();
    if (parts.back() == m) parts.pop_back();
    else parts.back() -= m;
    return fundamental(Composition(std::move(parts)));
}

} // namespace qsym
