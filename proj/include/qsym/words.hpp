#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/composition.hpp"
#include "qsym/ints.hpp"
#include "qsym/qsym.hpp"

namespace qsym {

/// Sentinel for the minimum over an empty support; larger than every letter.
inline constexpr int kInfSupport = std::numeric_limits<int>::max();

/// A finite sequence of positive integers, letter i standing for X_i.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {
        for (int x : letters_)
            if (x <= 0) throw std::invalid_argument("Word: letters must be positive");
    }
    Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

    const std::vector<int>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int letter(int i) const { return letters_.at(static_cast<std::size_t>(i)); }

    int supp_min() const {
        int m = kInfSupport;
        for (int x : letters_) m = std::min(m, x);
        return m;
    }
    int supp_max() const {
        int m = 0;
        for (int x : letters_) m = std::max(m, x);
        return m;
    }

    Word prefix(int len) const {
        return Word(std::vector<int>(letters_.begin(), letters_.begin() + len));
    }
    Word suffix_from(int len) const {
        return Word(std::vector<int>(letters_.begin() + len, letters_.end()));
    }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
};

inline Word concat(const Word& u, const Word& v) {
    std::vector<int> letters = u.letters();
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return Word(std::move(letters));
}

/// Letter shift: replace every letter k by k + j (j >= 0).
inline Word shift_letters(const Word& w, int j) {
    if (j < 0) throw std::invalid_argument("shift_letters: shift must be nonnegative");
    std::vector<int> letters = w.letters();
    for (int& x : letters) x += j;
    return Word(std::move(letters));
}

inline bool is_packed(const Word& w) {
    int k = w.supp_max();
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    for (int x : w.letters()) {
        if (x > k) return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    for (int v = 1; v <= k; ++v)
        if (!seen[static_cast<std::size_t>(v)]) return false;
    return true;
}

inline bool is_permutation(const Word& w) {
    int n = w.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int x : w.letters()) {
        if (x > n || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

/// A word whose support is an initial segment {1,...,k}.
class PackedWord {
public:
    PackedWord() = default;
    explicit PackedWord(Word w) : word_(std::move(w)) {
        if (!is_packed(word_)) throw std::invalid_argument("PackedWord: support is not an initial segment");
    }
    explicit PackedWord(std::vector<int> letters) : PackedWord(Word(std::move(letters))) {}
    PackedWord(std::initializer_list<int> letters) : PackedWord(Word(letters)) {}

    const Word& word() const { return word_; }
    const std::vector<int>& letters() const { return word_.letters(); }
    int size() const { return word_.size(); }
    bool empty() const { return word_.empty(); }
    int max_letter() const { return word_.supp_max(); }

    friend bool operator==(const PackedWord&, const PackedWord&) = default;

private:
    Word word_;
};

/// A packed word with distinct letters: a permutation in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(Word w) : word_(std::move(w)) {
        if (!is_permutation(word_)) throw std::invalid_argument("Permutation: letters must be a bijection onto {1..n}");
    }
    explicit Permutation(std::vector<int> letters) : Permutation(Word(std::move(letters))) {}
    Permutation(std::initializer_list<int> letters) : Permutation(Word(letters)) {}

    const Word& word() const { return word_; }
    const std::vector<int>& letters() const { return word_.letters(); }
    int size() const { return word_.size(); }

    PackedWord packed() const { return PackedWord(word_); }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    Word word_;
};

/// Order-preserving relabeling of the support onto {1,...,k}.
inline PackedWord pack(const Word& w) {
    std::vector<int> supp = w.letters();
    std::sort(supp.begin(), supp.end());
    supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
    std::vector<int> letters = w.letters();
    for (int& x : letters)
        x = static_cast<int>(std::lower_bound(supp.begin(), supp.end(), x) - supp.begin()) + 1;
    return PackedWord(Word(std::move(letters)));
}

/// Standardization: relabel by rank, ties broken left to right.
inline Permutation standardize(const Word& w) {
    const int n = w.size();
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return w.letter(a) < w.letter(b); });
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) out[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])] = r + 1;
    return Permutation(Word(std::move(out)));
}

/// Deterministic order on words: by length, then lexicographic on letters.
inline bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters() < b.letters();
}

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
    bool operator()(const PackedWord& a, const PackedWord& b) const { return word_less(a.word(), b.word()); }
    bool operator()(const Permutation& a, const Permutation& b) const { return word_less(a.word(), b.word()); }
};

template <class Key>
class WordIndexedElem {
public:
    using TermMap = std::map<Key, Int, WordLess>;

    WordIndexedElem() = default;

    static WordIndexedElem zero() { return WordIndexedElem{}; }
    static WordIndexedElem one() {
        WordIndexedElem f;
        f.terms_[Key{}] = 1;
        return f;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Key& u) const {
        auto it = terms_.find(u);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Key& u, const Int& c) {
        if (c == 0) return;
        Int& slot = terms_[u];
        slot += c;
        if (slot == 0) terms_.erase(u);
    }

    WordIndexedElem& operator+=(const WordIndexedElem& g) {
        for (const auto& [u, c] : g.terms_) add_term(u, c);
        return *this;
    }
    WordIndexedElem& operator-=(const WordIndexedElem& g) {
        for (const auto& [u, c] : g.terms_) add_term(u, -c);
        return *this;
    }
    WordIndexedElem& operator*=(const Int& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& [u, c] : terms_) c *= s;
        return *this;
    }

    friend WordIndexedElem operator+(WordIndexedElem f, const WordIndexedElem& g) { return f += g; }
    friend WordIndexedElem operator-(WordIndexedElem f, const WordIndexedElem& g) { return f -= g; }
    friend WordIndexedElem operator*(WordIndexedElem f, const Int& s) { return f *= s; }
    friend WordIndexedElem operator*(const Int& s, WordIndexedElem f) { return f *= s; }

    friend bool operator==(const WordIndexedElem&, const WordIndexedElem&) = default;

private:
    TermMap terms_;
};

/// Elements of WQSym in the monomial basis, indexed by packed words.
using WQSymElem = WordIndexedElem<PackedWord>;

/// Elements of FQSym, indexed by permutations.
using FQSymElem = WordIndexedElem<Permutation>;

inline WQSymElem wq_monomial(const PackedWord& u) {
    WQSymElem f;
    f.add_term(u, 1);
    return f;
}

inline FQSymElem fq_g(const Permutation& s) {
    FQSymElem f;
    f.add_term(s, 1);
    return f;
}

/// Constant term (the coefficient of the empty word).
inline Int constant_term(const WQSymElem& f) { return f.coeff(PackedWord{}); }

enum class WordOp { mul, prec, circ, succ, belg, tvim };

inline WordOp parse_word_op(const std::string& name) {
    if (name == "mul") return WordOp::mul;
    if (name == "prec") return WordOp::prec;
    if (name == "circ") return WordOp::circ;
    if (name == "succ") return WordOp::succ;
    if (name == "belg") return WordOp::belg;
    if (name == "tvim") return WordOp::tvim;
    throw std::invalid_argument("unknown word operation: " + name);
}

inline bool word_op_keeps(WordOp op, int min0, int max0, int min1) {
    switch (op) {
        case WordOp::mul: return true;
        case WordOp::prec: return min0 < min1;
        case WordOp::circ: return min0 == min1;
        case WordOp::succ: return min0 > min1;
        case WordOp::belg: return max0 <= min1;
        case WordOp::tvim: return max0 < min1;
    }
    return false;
}

namespace detail {

// Enumerate the packed words w of length |u| + |v| with pack(w[:l]) = u and
// pack(w[l:]) = v. Such w are exactly the images of u and v under a pair of
// strictly increasing maps into {1,...,K} whose ranges jointly cover
// {1,...,K}.  For each admissible pair of ranges (A, B) the visit callback
// receives w together with min A, max A, min B.
template <class Visit>
void visit_stitched_words(const PackedWord& u, const PackedWord& v, Visit&& visit) {
    const int a = u.max_letter();
    const int b = v.max_letter();
    std::vector<int> setA, setB;
    for (int K = std::max(a, b); K <= a + b; ++K) {
        if (K == 0) {
            visit(PackedWord{}, kInfSupport, 0, kInfSupport);
            continue;
        }
        std::vector<int> comb(static_cast<std::size_t>(a));
        // A runs over a-subsets of {1..K}; B must contain the complement.
        std::function<void(int, int)> chooseA = [&](int pos, int low) {
            if (pos == a) {
                setA.assign(comb.begin(), comb.end());
                std::vector<int> forced;
                std::vector<bool> inA(static_cast<std::size_t>(K) + 1, false);
                for (int x : setA) inA[static_cast<std::size_t>(x)] = true;
                for (int x = 1; x <= K; ++x)
                    if (!inA[static_cast<std::size_t>(x)]) forced.push_back(x);
                const int extra = b - static_cast<int>(forced.size());
                if (extra < 0) return;
                // B = forced complement plus `extra` elements taken from A.
                std::vector<int> pick(static_cast<std::size_t>(extra));
                std::function<void(int, int)> chooseB = [&](int bpos, int blow) {
                    if (bpos == extra) {
                        setB = forced;
                        setB.insert(setB.end(), pick.begin(), pick.end());
                        std::sort(setB.begin(), setB.end());
                        std::vector<int> letters;
                        letters.reserve(static_cast<std::size_t>(u.size() + v.size()));
                        for (int x : u.letters()) letters.push_back(setA[static_cast<std::size_t>(x - 1)]);
                        for (int x : v.letters()) letters.push_back(setB[static_cast<std::size_t>(x - 1)]);
                        const int minA = setA.empty() ? kInfSupport : setA.front();
                        const int maxA = setA.empty() ? 0 : setA.back();
                        const int minB = setB.empty() ? kInfSupport : setB.front();
                        visit(PackedWord(Word(std::move(letters))), minA, maxA, minB);
                        return;
                    }
                    for (std::size_t i = static_cast<std::size_t>(blow); i < setA.size(); ++i) {
                        pick[static_cast<std::size_t>(bpos)] = setA[i];
                        chooseB(bpos + 1, static_cast<int>(i) + 1);
                    }
                };
                chooseB(0, 0);
                return;
            }
            for (int x = low; x <= K; ++x) {
                comb[static_cast<std::size_t>(pos)] = x;
                chooseA(pos + 1, x + 1);
            }
        };
        chooseA(0, 1);
    }
}

// Reference path: filter every word over {1,...,a+b} of the right length.
inline std::vector<PackedWord> stitched_words_by_filter(const PackedWord& u, const PackedWord& v,
                                                        WordOp op) {
    const int n = u.size() + v.size();
    const int kmax = std::max(1, u.max_letter() + v.max_letter());
    std::vector<PackedWord> out;
    std::vector<int> letters(static_cast<std::size_t>(n), 1);
    auto emit = [&]() {
        Word w((std::vector<int>(letters)));
        if (!is_packed(w)) return;
        Word p = w.prefix(u.size());
        Word s = w.suffix_from(u.size());
        if (!(pack(p) == u) || !(pack(s) == v)) return;
        if (!word_op_keeps(op, p.supp_min(), p.supp_max(), s.supp_min())) return;
        out.push_back(PackedWord(w));
    };
    if (n == 0) {
        if (word_op_keeps(op, kInfSupport, 0, kInfSupport)) out.push_back(PackedWord{});
        return out;
    }
    while (true) {
        emit();
        int pos = n - 1;
        while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == kmax) {
            letters[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++letters[static_cast<std::size_t>(pos)];
    }
    std::sort(out.begin(), out.end(), WordLess{});
    return out;
}

} // namespace detail

/// One operation applied to a pair of basis words.
inline WQSymElem wq_op_terms(WordOp op, const PackedWord& u, const PackedWord& v) {
    WQSymElem out;
    detail::visit_stitched_words(u, v, [&](const PackedWord& w, int minA, int maxA, int minB) {
        if (word_op_keeps(op, minA, maxA, minB)) out.add_term(w, 1);
    });
    return out;
}

/// Bilinear extension over elements.
inline WQSymElem wq_op(WordOp op, const WQSymElem& f, const WQSymElem& g) {
    WQSymElem out;
    for (const auto& [u, a] : f.terms())
        for (const auto& [v, b] : g.terms()) {
            WQSymElem part = wq_op_terms(op, u, v);
            part *= a * b;
            out += part;
        }
    return out;
}

inline WQSymElem wq_mul(const PackedWord& u, const PackedWord& v) {
    return wq_op_terms(WordOp::mul, u, v);
}

inline WQSymElem wq_mul(const WQSymElem& f, const WQSymElem& g) {
    return wq_op(WordOp::mul, f, g);
}

/// The two operations under which FQSym is closed. Anything else throws.
inline FQSymElem fq_op(WordOp op, const Permutation& s, const Permutation& t) {
    if (op != WordOp::succ && op != WordOp::belg)
        throw std::invalid_argument("fq_op: only succ and belg preserve FQSym");
    const int l = s.size(), m = t.size(), n = l + m;
    FQSymElem out;
    // The prefix of a permutation realising (s, t) is determined by its
    // value set A; the suffix takes the complement in pattern t.
    std::vector<int> setA(static_cast<std::size_t>(l));
    std::function<void(int, int)> choose = [&](int pos, int low) {
        if (pos == l) {
            std::vector<bool> inA(static_cast<std::size_t>(n) + 1, false);
            for (int x : setA) inA[static_cast<std::size_t>(x)] = true;
            std::vector<int> setB;
            for (int x = 1; x <= n; ++x)
                if (!inA[static_cast<std::size_t>(x)]) setB.push_back(x);
            const int minA = setA.empty() ? kInfSupport : setA.front();
            const int maxA = setA.empty() ? 0 : setA.back();
            const int minB = setB.empty() ? kInfSupport : setB.front();
            if (!word_op_keeps(op, minA, maxA, minB)) return;
            std::vector<int> letters;
            letters.reserve(static_cast<std::size_t>(n));
            for (int x : s.letters()) letters.push_back(setA[static_cast<std::size_t>(x - 1)]);
            for (int x : t.letters()) letters.push_back(setB[static_cast<std::size_t>(x - 1)]);
            out.add_term(Permutation(Word(std::move(letters))), 1);
            return;
        }
        for (int x = low; x <= n; ++x) {
            setA[static_cast<std::size_t>(pos)] = x;
            choose(pos + 1, x + 1);
        }
    };
    choose(0, 1);
    return out;
}

/// Bilinear extension over FQSym elements.
inline FQSymElem fq_op(WordOp op, const FQSymElem& f, const FQSymElem& g) {
    FQSymElem out;
    for (const auto& [s, a] : f.terms())
        for (const auto& [t, b] : g.terms()) {
            FQSymElem part = fq_op(op, s, t);
            part *= a * b;
            out += part;
        }
    return out;
}

/// All packed words of a given length.
inline std::vector<PackedWord> all_packed_words(int n) {
    std::vector<PackedWord> out;
    if (n == 0) {
        out.push_back(PackedWord{});
        return out;
    }
    std::vector<int> letters(static_cast<std::size_t>(n), 1);
    while (true) {
        Word w((std::vector<int>(letters)));
        if (is_packed(w)) out.push_back(PackedWord(w));
        int pos = n - 1;
        while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == n) {
            letters[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++letters[static_cast<std::size_t>(pos)];
    }
    std::sort(out.begin(), out.end(), WordLess{});
    return out;
}

/// The embedding FQSym -> WQSym: G_sigma = sum of M_w over packed w with
/// std w = sigma. The fiber is generated directly: w = phi(sigma) for the
/// weakly increasing surjections phi, where phi may send i and i+1 to the
/// same letter only if i appears to the left of i+1 in sigma (otherwise the
/// left-to-right tie-break of standardization would swap their ranks).
inline WQSymElem g_basis(const Permutation& sigma) {
    const int n = sigma.size();
    WQSymElem out;
    if (n == 0) {
        out.add_term(PackedWord{}, 1);
        return out;
    }
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 0; j < n; ++j) pos[static_cast<std::size_t>(sigma.letters()[static_cast<std::size_t>(j)])] = j;
    std::vector<int> letter_of(static_cast<std::size_t>(n) + 1, 0);
    letter_of[1] = 1;
    auto rec = [&](auto&& self, int value) -> void {
        if (value > n) {
            std::vector<int> w(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                w[static_cast<std::size_t>(j)] =
                    letter_of[static_cast<std::size_t>(sigma.letters()[static_cast<std::size_t>(j)])];
            out.add_term(PackedWord(Word(std::move(w))), 1);
            return;
        }
        if (pos[static_cast<std::size_t>(value - 1)] < pos[static_cast<std::size_t>(value)]) {
            letter_of[static_cast<std::size_t>(value)] = letter_of[static_cast<std::size_t>(value - 1)];
            self(self, value + 1);
        }
        letter_of[static_cast<std::size_t>(value)] = letter_of[static_cast<std::size_t>(value - 1)] + 1;
        self(self, value + 1);
    };
    rec(rec, 2);
    return out;
}

inline WQSymElem embed(const FQSymElem& f) {
    WQSymElem out;
    for (const auto& [sigma, c] : f.terms()) {
        WQSymElem g = g_basis(sigma);
        g *= c;
        out += g;
    }
    return out;
}

/// Inverse of embed where it exists: the coefficient must be constant across
/// each standardization fiber.
inline std::optional<FQSymElem> to_fqsym(const WQSymElem& f) {
    FQSymElem out;
    std::map<Permutation, Int, WordLess> seen;
    for (const auto& [w, c] : f.terms()) seen.emplace(standardize(w.word()), c);
    WQSymElem rebuilt;
    for (const auto& [sigma, c] : seen) {
        WQSymElem fiber = g_basis(sigma);
        fiber *= c;
        rebuilt += fiber;
        out.add_term(sigma, c);
    }
    if (!(rebuilt == f)) return std::nullopt;
    return out;
}

/// The Parikh composition of the commutative image of u.
inline Composition parikh(const PackedWord& u) {
    std::vector<int> counts(static_cast<std::size_t>(u.max_letter()), 0);
    for (int x : u.letters()) ++counts[static_cast<std::size_t>(x - 1)];
    return Composition(std::move(counts));
}

/// The projection WQSym -> QSym, M_u -> M_{Parikh(u)}.
inline QSymElem project(const WQSymElem& f) {
    QSymElem out;
    for (const auto& [u, c] : f.terms()) out.add_term(parikh(u), c);
    return out;
}

/// Noncommutative complete homogeneous H_m = G_{(1,2,...,m)}.
inline FQSymElem H(int m) {
    if (m < 0) throw std::invalid_argument("H: m must be nonnegative");
    std::vector<int> letters(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) letters[static_cast<std::size_t>(i)] = i + 1;
    return fq_g(Permutation(Word(std::move(letters))));
}

/// Noncommutative elementary E_m = G_{(m,m-1,...,1)}.
inline FQSymElem E(int m) {
    if (m < 0) throw std::invalid_argument("E: m must be nonnegative");
    std::vector<int> letters(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) letters[static_cast<std::size_t>(i)] = m - i;
    return fq_g(Permutation(Word(std::move(letters))));
}

inline std::string to_string(const Word& w) {
    std::string s = "[";
    for (int i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w.letter(i));
    }
    s += ']';
    return s;
}

} // namespace qsym
