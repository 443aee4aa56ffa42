#include "cag/linalg.hpp"

namespace cag {
namespace linalg {

KernelResult kernel_of(std::vector<std::vector<NFElem>> rows, size_t ncols,
                       const FieldPtr& K) {
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        NFElem inv = rows[r][c].inv();
        for (size_t j = c; j < ncols; ++j) rows[r][j] = rows[r][j] * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            NFElem f = rows[i][c];
            for (size_t j = c; j < ncols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_col.push_back((int)c);
        ++r;
    }
    KernelResult res;
    res.rank = (int)r;
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (size_t free_c = 0; free_c < ncols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<NFElem> v(ncols, NFElem::zero(K));
        v[free_c] = NFElem::one(K);
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -rows[i][free_c];
        res.kernel.push_back(std::move(v));
    }
    return res;
}

int rank_of(const std::vector<std::vector<NFElem>>& rows, size_t ncols, const FieldPtr& K) {
    return kernel_of(rows, ncols, K).rank;
}

std::vector<size_t> independent_rows(const std::vector<std::vector<NFElem>>& rows,
                                     size_t ncols, const FieldPtr& K) {
    std::vector<size_t> picked;
    std::vector<std::vector<NFElem>> acc;
    int rank = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        acc.push_back(rows[i]);
        int r = rank_of(acc, ncols, K);
        if (r > rank) {
            rank = r;
            picked.push_back(i);
        } else {
            acc.pop_back();
        }
    }
    return picked;
}

}  // namespace linalg
}  // namespace cag
