#pragma once

#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsym/nsym.hpp"
#include "qsym/qsym.hpp"
#include "qsym/words.hpp"

namespace qsym {

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
    }
    long long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected an integer");
        return std::stoll(s.substr(start, pos - start));
    }
};

inline std::vector<int> bracketed_ints(Cursor& cur) {
    if (!cur.eat('[')) cur.fail("expected '['");
    std::vector<int> out;
    if (cur.eat(']')) return out;
    while (true) {
        out.push_back(static_cast<int>(cur.integer()));
        if (cur.eat(']')) break;
        if (!cur.eat(',')) cur.fail("expected ',' or ']'");
    }
    return out;
}

// Parses "c1*B1[..] + c2*B2[..] - ..." and reports each term through emit.
// Bare integers denote multiples of the empty-indexed basis element.
template <class Emit>
void parse_terms(const std::string& text, const std::string& bases, Emit&& emit) {
    Cursor cur{text};
    if (cur.done()) cur.fail("empty element");
    bool first = true;
    while (!cur.done()) {
        Int sign = 1;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            cur.eat(c);
            if (c == '-') sign = -1;
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }
        first = false;
        c = cur.peek();
        Int coeff = sign;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = sign * Int(cur.integer());
            have_coeff = true;
            if (!cur.eat('*')) {
                emit(coeff, '\0', std::vector<int>{});
                continue;
            }
        }
        c = cur.peek();
        if (bases.find(c) == std::string::npos) {
            if (have_coeff) cur.fail("expected a basis letter after '*'");
            cur.fail(std::string("expected a basis letter (one of ") + bases + ")");
        }
        cur.eat(c);
        emit(coeff, c, bracketed_ints(cur));
    }
}

} // namespace detail

inline Composition parse_composition(const std::string& text) {
    detail::Cursor cur{text};
    std::vector<int> parts = detail::bracketed_ints(cur);
    if (!cur.done()) cur.fail("trailing input after composition");
    return Composition(std::move(parts));
}

inline Word parse_word(const std::string& text) {
    detail::Cursor cur{text};
    std::vector<int> letters = detail::bracketed_ints(cur);
    if (!cur.done()) cur.fail("trailing input after word");
    return Word(std::move(letters));
}

/// Accepts mixed M/F terms; F terms are converted to the monomial basis.
inline QSymElem parse_qsym_elem(const std::string& text) {
    QSymElem out;
    detail::parse_terms(text, "MF", [&](const Int& c, char basis, const std::vector<int>& parts) {
        Composition alpha{parts};
        if (basis == 'F') out += fundamental(alpha) * c;
        else out.add_term(alpha, c); // '\0' means a bare constant: M[]
    });
    return out;
}

inline WQSymElem parse_wqsym_elem(const std::string& text) {
    WQSymElem out;
    detail::parse_terms(text, "M", [&](const Int& c, char, const std::vector<int>& letters) {
        out.add_term(PackedWord(letters), c);
    });
    return out;
}

namespace detail {

inline std::string format_terms_common(const std::vector<std::pair<std::string, Int>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms) {
        Int a = c;
        if (first) {
            if (a < 0) { out += '-'; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1) { out += a.str(); out += '*'; }
        out += key;
        first = false;
    }
    return out;
}

} // namespace detail

inline std::string format_qsym_elem(const QSymElem& f, char basis = 'M') {
    std::vector<std::pair<std::string, Int>> terms;
    if (basis == 'M') {
        for (const auto& [alpha, c] : f.terms()) terms.emplace_back("M" + to_string(alpha), c);
    } else if (basis == 'F') {
        for (const auto& [alpha, c] : m_to_f(f)) terms.emplace_back("F" + to_string(alpha), c);
    } else {
        throw std::invalid_argument("format_qsym_elem: basis must be 'M' or 'F'");
    }
    return detail::format_terms_common(terms);
}

inline std::string format_nsym_elem(const NSymElem& x) {
    std::vector<std::pair<std::string, Int>> terms;
    for (const auto& [alpha, c] : x.terms()) terms.emplace_back("R" + to_string(alpha), c);
    return detail::format_terms_common(terms);
}

inline std::string format_wqsym_elem(const WQSymElem& f) {
    std::vector<std::pair<std::string, Int>> terms;
    for (const auto& [u, c] : f.terms()) terms.emplace_back("M" + to_string(u.word()), c);
    return detail::format_terms_common(terms);
}

inline std::string format_fqsym_elem(const FQSymElem& f) {
    std::vector<std::pair<std::string, Int>> terms;
    for (const auto& [s, c] : f.terms()) terms.emplace_back("G" + to_string(s.word()), c);
    return detail::format_terms_common(terms);
}

/// JSON term list: {"basis": "M"|"F", "terms": [{"comp": [...], "coeff": "<decimal>"}]},
/// terms in canonical composition order.
inline nlohmann::json qsym_to_json(const QSymElem& f, char basis = 'M') {
    nlohmann::json j;
    j["basis"] = std::string(1, basis);
    j["terms"] = nlohmann::json::array();
    auto push = [&](const Composition& alpha, const Int& c) {
        j["terms"].push_back({{"comp", alpha.parts()}, {"coeff", c.str()}});
    };
    if (basis == 'M') {
        for (const auto& [alpha, c] : f.terms()) push(alpha, c);
    } else if (basis == 'F') {
        for (const auto& [alpha, c] : m_to_f(f)) push(alpha, c);
    } else {
        throw std::invalid_argument("qsym_to_json: basis must be 'M' or 'F'");
    }
    return j;
}

inline QSymElem qsym_from_json(const nlohmann::json& j) {
    const std::string basis = j.at("basis").get<std::string>();
    if (basis != "M" && basis != "F")
        throw std::invalid_argument("qsym_from_json: basis must be \"M\" or \"F\"");
    QSymElem out;
    for (const auto& term : j.at("terms")) {
        Composition alpha(term.at("comp").get<std::vector<int>>());
        Int c(term.at("coeff").get<std::string>());
        if (basis == "F") out += fundamental(alpha) * c;
        else out.add_term(alpha, c);
    }
    return out;
}

} // namespace qsym
