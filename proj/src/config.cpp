#include "rnc/config.hpp"

namespace rnc {

PointConfiguration::PointConfiguration(int dimension,
                                       std::vector<std::vector<Rat>> columns)
    : dimension_(dimension), columns_(std::move(columns)) {
  if (dimension_ < 1) throw std::invalid_argument("dimension must be >= 1");
  for (const auto& col : columns_) {
    if (static_cast<int>(col.size()) != dimension_ + 1) {
      throw std::invalid_argument("point has wrong coordinate length");
    }
    bool nonzero = false;
    for (const Rat& c : col) {
      if (c != 0) nonzero = true;
    }
    if (!nonzero) {
      throw std::invalid_argument("zero column is not a valid projective point");
    }
  }
}

const std::vector<Rat>& PointConfiguration::point(int label) const {
  if (label < 1 || label > size()) {
    throw std::out_of_range("point label out of range");
  }
  return columns_[label - 1];
}

}  // namespace rnc
