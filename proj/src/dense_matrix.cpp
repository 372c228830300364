#include "causet/dense_matrix.hpp"

#include <sstream>

#include "causet/model_spec.hpp"

namespace causet {

std::string DenseMatrix::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << format_number((*this)(i, j));
    os << '\n';
  }
  return os.str();
}

}  // namespace causet
