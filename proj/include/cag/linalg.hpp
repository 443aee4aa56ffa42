#ifndef CAG_LINALG_HPP
#define CAG_LINALG_HPP

#include <vector>

#include "cag/numberfield.hpp"

namespace cag {
namespace linalg {

using arith::FieldPtr;
using arith::NFElem;

struct KernelResult {
    int rank;
    std::vector<std::vector<NFElem>> kernel;
};

// exact Gaussian elimination; kernel vectors have 1 at their free column
KernelResult kernel_of(std::vector<std::vector<NFElem>> rows, size_t ncols,
                       const FieldPtr& K);

int rank_of(const std::vector<std::vector<NFElem>>& rows, size_t ncols, const FieldPtr& K);

// indices of a maximal linearly independent subset, greedy in order
std::vector<size_t> independent_rows(const std::vector<std::vector<NFElem>>& rows,
                                     size_t ncols, const FieldPtr& K);

}  // namespace linalg
}  // namespace cag

#endif
