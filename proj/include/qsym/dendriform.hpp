#pragma once

#include <span>

#include "qsym/qsym.hpp"

namespace qsym {

/// Restricted product: M_alpha prec M_beta = sum of smap-counted M_gamma.
/// Satisfies f prec g + f succeq g = f g, and 1 prec g = 0 for every g
/// supported away from the constant term (indeed 1 prec 1 = 0 as well).
inline QSymElem prec(const QSymElem& f, const QSymElem& g) {
    QSymElem out;
    for (const auto& [alpha, a] : f.terms())
        for (const auto& [beta, b] : g.terms())
            for (const auto& [gamma, n] : smap_terms(alpha, beta))
                out.add_term(gamma, a * b * n);
    return out;
}

/// The complementary half of the product: f succeq g = f g - f prec g.
inline QSymElem succeq(const QSymElem& f, const QSymElem& g) {
    return mul(f, g) - prec(f, g);
}

/// f succ g = g prec f (the ambient product is commutative).
inline QSymElem succ(const QSymElem& f, const QSymElem& g) { return prec(g, f); }

/// f preceq g = f g - f succ g; equals g succeq f.
inline QSymElem preceq(const QSymElem& f, const QSymElem& g) {
    return mul(f, g) - succ(f, g);
}

/// Associative unital operation with M_alpha belg M_beta equal to
/// M_{[alpha,beta]} + M_{alpha odot beta} for nonempty alpha, beta, and to
/// M_{[alpha,beta]} when either is empty.
inline QSymElem belg(const QSymElem& f, const QSymElem& g) {
    QSymElem out;
    for (const auto& [alpha, a] : f.terms())
        for (const auto& [beta, b] : g.terms()) {
            Int c = a * b;
            out.add_term(concat(alpha, beta), c);
            if (!alpha.empty() && !beta.empty()) out.add_term(odot(alpha, beta), c);
        }
    return out;
}

/// Associative unital operation with M_alpha tvim M_beta = M_{[alpha,beta]}.
inline QSymElem tvim(const QSymElem& f, const QSymElem& g) {
    QSymElem out;
    for (const auto& [alpha, a] : f.terms())
        for (const auto& [beta, b] : g.terms())
            out.add_term(concat(alpha, beta), a * b);
    return out;
}

/// Left-to-right fold of belg over the factors, ending at 1.
inline QSymElem belg_chain(std::span<const QSymElem> factors) {
    QSymElem acc = QSymElem::one();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) acc = belg(*it, acc);
    return acc;
}

/// Left-to-right fold of tvim over the factors, ending at 1.
inline QSymElem tvim_chain(std::span<const QSymElem> factors) {
    QSymElem acc = QSymElem::one();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) acc = tvim(*it, acc);
    return acc;
}

inline QSymElem belg_chain(const std::vector<QSymElem>& factors) {
    return belg_chain(std::span<const QSymElem>(factors));
}

inline QSymElem tvim_chain(const std::vector<QSymElem>& factors) {
    return tvim_chain(std::span<const QSymElem>(factors));
}

} // namespace qsym
