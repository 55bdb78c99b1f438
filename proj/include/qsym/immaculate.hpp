#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "qsym/dendriform.hpp"
#include "qsym/qsym.hpp"

namespace qsym {

/// A filling of the diagram of `shape`: rows weakly increase left to right,
/// and the first column strictly increases top to bottom.
struct ImmaculateTableau {
    Composition shape;
    std::vector<std::vector<int>> rows;

    bool valid() const {
        if (static_cast<int>(rows.size()) != shape.length()) return false;
        for (int i = 0; i < shape.length(); ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            if (static_cast<int>(row.size()) != shape.part(i)) return false;
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j] < 1) return false;
                if (j > 0 && row[j - 1] > row[j]) return false;
            }
            if (i > 0 && rows[static_cast<std::size_t>(i - 1)][0] >= row[0]) return false;
        }
        return true;
    }
};

namespace detail {

// Fill rows top to bottom. Each row is a weakly increasing sequence drawn
// from the remaining content; the row's first entry must exceed the previous
// row's first entry.
inline Int count_fillings(const Composition& shape, std::vector<int>& remaining,
                          int row, int min_first) {
    if (row == shape.length()) {
        for (int r : remaining)
            if (r != 0) return 0;
        return 1;
    }
    const int width = shape.part(row);
    const int k = static_cast<int>(remaining.size());
    // Choose the row as a weakly increasing sequence; recurse per column.
    std::function<Int(int, int, int)> fill_row = [&](int col, int low, int first) -> Int {
        if (col == width) return count_fillings(shape, remaining, row + 1, first);
        Int sum = 0;
        for (int v = low; v <= k; ++v) {
            auto& avail = remaining[static_cast<std::size_t>(v - 1)];
            if (avail == 0) continue;
            --avail;
            sum += fill_row(col + 1, v, first);
            ++avail;
        }
        return sum;
    };
    // First entry must be strictly larger than the previous row's first entry.
    Int sum = 0;
    for (int v = min_first + 1; v <= k; ++v) {
        auto& avail = remaining[static_cast<std::size_t>(v - 1)];
        if (avail == 0) continue;
        --avail;
        sum += fill_row(1, v, v);
        ++avail;
    }
    return sum;
}

} // namespace detail

/// K_{alpha,beta}: the number of immaculate tableaux of shape alpha whose
/// entry multiset has exactly beta_j copies of j. Zero if |beta| != |alpha|.
inline Int count_tableaux(const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size()) return 0;
    std::vector<int> remaining = beta.parts();
    return detail::count_fillings(alpha, remaining, 0, 0);
}

/// All immaculate tableaux of shape alpha with entries at most max_entry,
/// in lexicographic order of the row-reading word.
inline std::vector<ImmaculateTableau> enumerate_tableaux(const Composition& alpha,
                                                         int max_entry) {
    std::vector<ImmaculateTableau> out;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(alpha.length()));
    std::function<void(int, int)> next_row = [&](int row, int min_first) {
        if (row == alpha.length()) {
            out.push_back(ImmaculateTableau{alpha, rows});
            return;
        }
        const int width = alpha.part(row);
        auto& cells = rows[static_cast<std::size_t>(row)];
        cells.assign(static_cast<std::size_t>(width), 0);
        std::function<void(int, int)> next_cell = [&](int col, int low) {
            if (col == width) {
                next_row(row + 1, cells[0]);
                return;
            }
            for (int v = low; v <= max_entry; ++v) {
                cells[static_cast<std::size_t>(col)] = v;
                next_cell(col + 1, v);
            }
        };
        for (int v = min_first + 1; v <= max_entry; ++v) {
            cells[0] = v;
            next_cell(1, v);
        }
        cells.clear();
    };
    next_row(0, 0);
    return out;
}

/// The dual immaculate function of shape alpha, as the K-weighted sum of
/// monomial terms over all contents. Results are cached per shape.
inline QSymElem dual_immaculate_tableaux(const Composition& alpha) {
    static std::map<Composition, QSymElem, CanonicalLess> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(alpha);
        if (it != cache.end()) return it->second;
    }
    QSymElem out;
    for (const Composition& beta : compositions_of(alpha.size()))
        out.add_term(beta, count_tableaux(alpha, beta));
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(alpha, out);
    return out;
}

/// The same function built by creation operators:
/// h_{alpha_1} prec (h_{alpha_2} prec (... prec (h_{alpha_l} prec 1)...)).
inline QSymElem dual_immaculate_creation(const Composition& alpha) {
    QSymElem acc = QSymElem::one();
    for (int i = alpha.length() - 1; i >= 0; --i) acc = prec(h(alpha.part(i)), acc);
    return acc;
}

} // namespace qsym
