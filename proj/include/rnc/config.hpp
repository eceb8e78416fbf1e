#pragma once

#include <stdexcept>
#include <vector>

#include "rnc/rational.hpp"

namespace rnc {

// n labeled points of P^d with exact rational homogeneous coordinates,
// one column per point. Labels are 1..n in column order.
class PointConfiguration {
 public:
  PointConfiguration(int dimension, std::vector<std::vector<Rat>> columns);

  int dimension() const { return dimension_; }
  int ambient() const { return dimension_ + 1; }
  int size() const { return static_cast<int>(columns_.size()); }
  // 1-based point label.
  const std::vector<Rat>& point(int label) const;

 private:
  int dimension_;
  std::vector<std::vector<Rat>> columns_;
};

}  // namespace rnc
