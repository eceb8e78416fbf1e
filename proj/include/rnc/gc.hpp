#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rnc/bracket.hpp"
#include "rnc/config.hpp"

namespace rnc {

// Element of the exterior algebra of an m-dimensional space, stored by its
// C(m,k) coordinates on increasing basis k-subsets (bitmask keys). Step 0 is
// a scalar; step m is a scalar times the top form.
class Extensor {
 public:
  Extensor(int ambient, int step);

  static Extensor zero(int ambient, int step) { return Extensor(ambient, step); }
  static Extensor scalar(int ambient, Rat value);
  // Basis vector e_i (1-based) as a step-1 extensor.
  static Extensor basis(int ambient, int i);
  // Step-1 extensor from coordinates.
  static Extensor vector(const std::vector<Rat>& coords);

  int ambient() const { return ambient_; }
  int step() const { return step_; }
  bool is_zero() const { return coords_.empty(); }
  // Coefficient on the basis subset encoded as a bitmask (bit i-1 = e_i).
  Rat coord(std::uint32_t mask) const;
  const std::map<std::uint32_t, Rat>& coords() const { return coords_; }
  // The scalar value of a step-0 or step-m extensor.
  Rat scalar_value() const;

  void add(std::uint32_t mask, const Rat& c);
  Extensor& operator+=(const Extensor& other);
  Extensor operator*(const Rat& c) const;
  bool operator==(const Extensor& other) const = default;

 private:
  int ambient_;
  int step_;
  std::map<std::uint32_t, Rat> coords_;
};

// Wedge product. Zero when the steps sum past the ambient dimension or the
// factors are dependent.
Extensor join(const Extensor& a, const Extensor& b);

// The shuffle expansion of the meet; steps j, k with j + k >= m, result step
// j + k - m. Independent of the factorizations of a and b.
Extensor meet(const Extensor& a, const Extensor& b);

// True iff v lies in the span encoded by the nonzero extensor a.
bool span_contains(const Extensor& a, const Extensor& v);

// Abstract syntax tree of joins and meets of point atoms.
struct GCExpression;
using GCExpr = std::shared_ptr<const GCExpression>;

struct GCExpression {
  enum class Kind { Point, Join, Meet };
  Kind kind;
  Index label = 0;               // Point
  std::vector<GCExpr> children;  // Join / Meet

  static GCExpr point(Index label);
  static GCExpr join_of(std::vector<GCExpr> children);
  static GCExpr meet_of(std::vector<GCExpr> children);
};

bool gc_equal(const GCExpr& a, const GCExpr& b);

// Formal step of the expression in the given ambient dimension; throws if a
// node's step falls outside [0, m] or a meet is undefined.
int formal_step(const GCExpr& expr, int ambient);

// Parenthesized text form, e.g. "((1 2 ^ 4 5 7) v (2 3 ^ 5 6 7) v 7)".
// 'v' is join, '^' is meet, integers are point labels. Parser and printer
// round-trip exactly.
std::string gc_to_string(const GCExpr& expr);
GCExpr parse_gc(const std::string& text);

// Symbolic expansion of a step-0 (or top-step) simple expression into a
// bracket polynomial of width = ambient over the point labels.
BracketPolynomial expand_to_brackets(const GCExpr& expr, int ambient);

// Numeric evaluation at a configuration; ambient = d + 1. For step-0
// expressions the scalar agrees with evaluate_poly of expand_to_brackets.
Extensor evaluate_expr(const GCExpr& expr, const PointConfiguration& config);

}  // namespace rnc
