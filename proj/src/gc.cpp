#include "rnc/gc.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rnc {

namespace {

// Parity of the interleave of two disjoint ascending bit sets: number of
// pairs (x in a, y in b) with x > y.
int merge_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  while (b) {
    int y = std::countr_zero(b);
    b &= b - 1;
    inversions += std::popcount(a >> (y + 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// All subsets of the set bits of `mask` with `count` elements.
void enumerate_subsets(std::uint32_t mask, int count,
                       const std::function<void(std::uint32_t)>& fn) {
  std::vector<int> bits;
  for (std::uint32_t m = mask; m; m &= m - 1) bits.push_back(std::countr_zero(m));
  if (count > static_cast<int>(bits.size())) return;
  std::vector<int> pick(count);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == count) {
      std::uint32_t s = 0;
      for (int d = 0; d < count; ++d) s |= 1u << pick[d];
      fn(s);
      return;
    }
    for (int i = start; i <= static_cast<int>(bits.size()) - (count - depth); ++i) {
      pick[depth] = bits[i];
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

Extensor::Extensor(int ambient, int step) : ambient_(ambient), step_(step) {
  if (ambient < 1 || ambient > 30) {
    throw std::invalid_argument("ambient dimension out of range");
  }
  if (step < 0 || step > ambient) {
    throw std::invalid_argument("extensor step out of range");
  }
}

Extensor Extensor::scalar(int ambient, Rat value) {
  Extensor e(ambient, 0);
  e.add(0, value);
  return e;
}

Extensor Extensor::basis(int ambient, int i) {
  if (i < 1 || i > ambient) throw std::invalid_argument("basis index out of range");
  Extensor e(ambient, 1);
  e.add(1u << (i - 1), Rat(1));
  return e;
}

Extensor Extensor::vector(const std::vector<Rat>& coords) {
  Extensor e(static_cast<int>(coords.size()), 1);
  for (size_t i = 0; i < coords.size(); ++i) e.add(1u << i, coords[i]);
  return e;
}

Rat Extensor::coord(std::uint32_t mask) const {
  auto it = coords_.find(mask);
  return it == coords_.end() ? Rat(0) : it->second;
}

Rat Extensor::scalar_value() const {
  if (step_ != 0 && step_ != ambient_) {
    throw std::logic_error("scalar_value requires step 0 or the top step");
  }
  return coord(step_ == 0 ? 0 : (1u << ambient_) - 1);
}

void Extensor::add(std::uint32_t mask, const Rat& c) {
  if (c == 0) return;
  if (std::popcount(mask) != step_) {
    throw std::logic_error("coordinate mask does not match extensor step");
  }
  auto [it, inserted] = coords_.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coords_.erase(it);
  }
}

Extensor& Extensor::operator+=(const Extensor& other) {
  if (other.ambient_ != ambient_ || other.step_ != step_) {
    throw std::invalid_argument("extensor shape mismatch in addition");
  }
  for (const auto& [m, c] : other.coords_) add(m, c);
  return *this;
}

Extensor Extensor::operator*(const Rat& c) const {
  Extensor r(ambient_, step_);
  if (c == 0) return r;
  for (const auto& [m, v] : coords_) r.coords_.emplace(m, v * c);
  return r;
}

Extensor join(const Extensor& a, const Extensor& b) {
  const int m = a.ambient();
  if (b.ambient() != m) throw std::invalid_argument("ambient mismatch in join");
  const int step = a.step() + b.step();
  if (step > m) return Extensor::zero(m, m);
  Extensor r(m, step);
  for (const auto& [ma, ca] : a.coords()) {
    for (const auto& [mb, cb] : b.coords()) {
      if (ma & mb) continue;
      r.add(ma | mb, ca * cb * merge_sign(ma, mb));
    }
  }
  return r;
}

Extensor meet(const Extensor& a, const Extensor& b) {
  const int m = a.ambient();
  if (b.ambient() != m) throw std::invalid_argument("ambient mismatch in meet");
  const int j = a.step(), k = b.step();
  if (j + k < m) throw std::invalid_argument("meet undefined: step sum below ambient");
  const std::uint32_t full = (1u << m) - 1;
  Extensor r(m, j + k - m);
  for (const auto& [ta, ca] : a.coords()) {
    enumerate_subsets(ta, m - k, [&](std::uint32_t s) {
      std::uint32_t rest = ta & ~s;
      // [e_S B] pairs only the complementary coordinate of B.
      Rat bc = b.coord(full & ~s);
      if (bc == 0) return;
      int sign = merge_sign(s, rest) * merge_sign(s, full & ~s);
      r.add(rest, ca * bc * sign);
    });
  }
  return r;
}

bool span_contains(const Extensor& a, const Extensor& v) {
  if (a.is_zero()) throw std::invalid_argument("span of the zero extensor is undefined");
  if (v.step() != 1) throw std::invalid_argument("span_contains expects a step-1 vector");
  return join(a, v).is_zero();
}

GCExpr GCExpression::point(Index label) {
  auto e = std::make_shared<GCExpression>();
  e->kind = Kind::Point;
  e->label = label;
  return e;
}

GCExpr GCExpression::join_of(std::vector<GCExpr> children) {
  if (children.empty()) throw std::invalid_argument("empty join");
  if (children.size() == 1) return children.front();
  auto e = std::make_shared<GCExpression>();
  e->kind = Kind::Join;
  e->children = std::move(children);
  return e;
}

GCExpr GCExpression::meet_of(std::vector<GCExpr> children) {
  if (children.empty()) throw std::invalid_argument("empty meet");
  if (children.size() == 1) return children.front();
  auto e = std::make_shared<GCExpression>();
  e->kind = Kind::Meet;
  e->children = std::move(children);
  return e;
}

bool gc_equal(const GCExpr& a, const GCExpr& b) {
  if (a->kind != b->kind) return false;
  if (a->kind == GCExpression::Kind::Point) return a->label == b->label;
  if (a->children.size() != b->children.size()) return false;
  for (size_t i = 0; i < a->children.size(); ++i) {
    if (!gc_equal(a->children[i], b->children[i])) return false;
  }
  return true;
}

int formal_step(const GCExpr& expr, int ambient) {
  switch (expr->kind) {
    case GCExpression::Kind::Point:
      return 1;
    case GCExpression::Kind::Join: {
      int step = 0;
      for (const auto& c : expr->children) step += formal_step(c, ambient);
      if (step > ambient) {
        throw std::invalid_argument("join step exceeds ambient dimension");
      }
      return step;
    }
    case GCExpression::Kind::Meet: {
      int step = formal_step(expr->children.front(), ambient);
      for (size_t i = 1; i < expr->children.size(); ++i) {
        int k = formal_step(expr->children[i], ambient);
        if (step + k < ambient) {
          throw std::invalid_argument("meet step sum below ambient dimension");
        }
        step = step + k - ambient;
      }
      return step;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

bool is_point_juxtaposition(const GCExpr& e) {
  if (e->kind != GCExpression::Kind::Join) return false;
  for (const auto& c : e->children) {
    if (c->kind != GCExpression::Kind::Point) return false;
  }
  return true;
}

void print_node(const GCExpr& e, std::ostringstream& out) {
  switch (e->kind) {
    case GCExpression::Kind::Point:
      out << e->label;
      return;
    case GCExpression::Kind::Join:
      if (is_point_juxtaposition(e)) {
        for (size_t i = 0; i < e->children.size(); ++i) {
          if (i) out << ' ';
          out << e->children[i]->label;
        }
        return;
      }
      out << '(';
      for (size_t i = 0; i < e->children.size(); ++i) {
        if (i) out << " v ";
        print_node(e->children[i], out);
      }
      out << ')';
      return;
    case GCExpression::Kind::Meet:
      out << '(';
      for (size_t i = 0; i < e->children.size(); ++i) {
        if (i) out << " ^ ";
        print_node(e->children[i], out);
      }
      out << ')';
      return;
  }
}

class GCParser {
 public:
  explicit GCParser(const std::string& text) : s_(text) {}

  GCExpr parse() {
    GCExpr e = parse_join();
    skip_ws();
    if (pos_ != s_.size()) throw std::invalid_argument("trailing input in expression");
    return e;
  }

 private:
  GCExpr parse_join() {
    std::vector<GCExpr> parts{parse_meet()};
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == 'v') {
        ++pos_;
        parts.push_back(parse_meet());
      } else {
        break;
      }
    }
    return GCExpression::join_of(std::move(parts));
  }

  GCExpr parse_meet() {
    std::vector<GCExpr> parts{parse_juxt()};
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        parts.push_back(parse_juxt());
      } else {
        break;
      }
    }
    return GCExpression::meet_of(std::move(parts));
  }

  GCExpr parse_juxt() {
    std::vector<GCExpr> parts;
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '(') {
        ++pos_;
        parts.push_back(parse_join());
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != ')') {
          throw std::invalid_argument("missing ')'");
        }
        ++pos_;
      } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        parts.push_back(GCExpression::point(std::stoi(s_.substr(start, pos_ - start))));
      } else {
        break;
      }
    }
    if (parts.empty()) throw std::invalid_argument("expected point or '('");
    return GCExpression::join_of(std::move(parts));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

// Symbolic extensor: linear combination of wedges of point atoms, with
// bracket-polynomial coefficients of width = ambient.
struct SymExtensor {
  int ambient;
  int step;
  std::map<std::vector<Index>, BracketPolynomial> terms;  // sorted factor lists

  void add(const std::vector<Index>& factors, const BracketPolynomial& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms.emplace(factors, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
};

SymExtensor sym_join(const SymExtensor& a, const SymExtensor& b) {
  SymExtensor r{a.ambient, a.step + b.step, {}};
  if (r.step > a.ambient) {
    throw std::invalid_argument("join step exceeds ambient dimension");
  }
  for (const auto& [la, pa] : a.terms) {
    for (const auto& [lb, pb] : b.terms) {
      // Merge the sorted factor lists; a repeated point kills the wedge.
      std::vector<Index> merged;
      merged.reserve(la.size() + lb.size());
      size_t i = 0, j = 0;
      long inversions = 0;
      bool dead = false;
      while (i < la.size() || j < lb.size()) {
        if (j == lb.size() || (i < la.size() && la[i] < lb[j])) {
          merged.push_back(la[i++]);
        } else if (i == la.size() || lb[j] < la[i]) {
          inversions += static_cast<long>(la.size() - i);
          merged.push_back(lb[j++]);
        } else {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      BracketPolynomial c = poly_mul(pa, pb);
      if (inversions % 2 != 0) c = -c;
      r.add(merged, c);
    }
  }
  return r;
}

SymExtensor sym_meet(const SymExtensor& a, const SymExtensor& b, int ambient) {
  const int j = a.step, k = b.step;
  if (j + k < ambient) {
    throw std::invalid_argument("meet step sum below ambient dimension");
  }
  SymExtensor r{ambient, j + k - ambient, {}};
  const int front = ambient - k;
  for (const auto& [la, pa] : a.terms) {
    for (const auto& [lb, pb] : b.terms) {
      std::vector<int> pick(front);
      auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == front) {
          long excess = 0;
          std::vector<Index> bracket_idx, rest;
          size_t pi = 0;
          for (int pos = 0; pos < static_cast<int>(la.size()); ++pos) {
            if (pi < pick.size() && pick[pi] == pos) {
              excess += pos - static_cast<int>(pi);
              bracket_idx.push_back(la[pos]);
              ++pi;
            } else {
              rest.push_back(la[pos]);
            }
          }
          bracket_idx.insert(bracket_idx.end(), lb.begin(), lb.end());
          SignedBracket sb = normalize_bracket(bracket_idx);
          if (sb.is_zero()) return;
          int sign = (excess % 2 == 0 ? 1 : -1) * sb.sign;
          BracketPolynomial c = poly_mul(pa, pb);
          c = poly_mul(c, BracketPolynomial::term(
                              ambient, BracketMonomial{{sb.bracket}}, Rat(sign)));
          r.add(rest, c);
          return;
        }
        for (int p = start;
             p <= static_cast<int>(la.size()) - (front - depth); ++p) {
          pick[depth] = p;
          self(self, p + 1, depth + 1);
        }
      };
      rec(rec, 0, 0);
    }
  }
  return r;
}

SymExtensor sym_eval(const GCExpr& expr, int ambient) {
  switch (expr->kind) {
    case GCExpression::Kind::Point: {
      SymExtensor e{ambient, 1, {}};
      e.add({expr->label}, BracketPolynomial::constant(ambient, Rat(1)));
      return e;
    }
    case GCExpression::Kind::Join: {
      SymExtensor e = sym_eval(expr->children.front(), ambient);
      for (size_t i = 1; i < expr->children.size(); ++i) {
        e = sym_join(e, sym_eval(expr->children[i], ambient));
      }
      return e;
    }
    case GCExpression::Kind::Meet: {
      SymExtensor e = sym_eval(expr->children.front(), ambient);
      for (size_t i = 1; i < expr->children.size(); ++i) {
        e = sym_meet(e, sym_eval(expr->children[i], ambient), ambient);
      }
      return e;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::string gc_to_string(const GCExpr& expr) {
  std::ostringstream out;
  print_node(expr, out);
  return out.str();
}

GCExpr parse_gc(const std::string& text) { return GCParser(text).parse(); }

BracketPolynomial expand_to_brackets(const GCExpr& expr, int ambient) {
  const int step = formal_step(expr, ambient);
  if (step != 0 && step != ambient) {
    throw std::invalid_argument(
        "expression must have step 0 (or the top step) to expand");
  }
  SymExtensor e = sym_eval(expr, ambient);
  BracketPolynomial out(ambient);
  for (const auto& [factors, coeff] : e.terms) {
    if (factors.empty()) {
      out += coeff;
    } else {
      // Top-step wedge of points is the corresponding bracket.
      SignedBracket sb = normalize_bracket(factors);
      out += poly_mul(coeff,
                      BracketPolynomial::from_bracket(sb, ambient));
    }
  }
  return out;
}

Extensor evaluate_expr(const GCExpr& expr, const PointConfiguration& config) {
  switch (expr->kind) {
    case GCExpression::Kind::Point:
      return Extensor::vector(config.point(expr->label));
    case GCExpression::Kind::Join: {
      Extensor e = evaluate_expr(expr->children.front(), config);
      for (size_t i = 1; i < expr->children.size(); ++i) {
        e = join(e, evaluate_expr(expr->children[i], config));
      }
      return e;
    }
    case GCExpression::Kind::Meet: {
      Extensor e = evaluate_expr(expr->children.front(), config);
      for (size_t i = 1; i < expr->children.size(); ++i) {
        e = meet(e, evaluate_expr(expr->children[i], config));
      }
      return e;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace rnc
