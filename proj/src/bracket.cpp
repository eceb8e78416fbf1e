#include "rnc/bracket.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rnc {

std::string Bracket::str() const {
  bool wide = false;
  for (Index i : indices) {
    if (i > 9) wide = true;
  }
  std::ostringstream out;
  out << '[';
  for (size_t k = 0; k < indices.size(); ++k) {
    if (wide && k > 0) out << ',';
    out << indices[k];
  }
  out << ']';
  return out.str();
}

SignedBracket normalize_bracket(const std::vector<Index>& indices) {
  if (indices.empty()) throw std::invalid_argument("empty bracket");
  for (Index i : indices) {
    if (i <= 0) throw std::invalid_argument("bracket indices must be positive");
  }
  std::vector<Index> sorted = indices;
  // Insertion sort, counting inversions.
  long inversions = 0;
  for (size_t i = 1; i < sorted.size(); ++i) {
    Index v = sorted[i];
    size_t j = i;
    while (j > 0 && sorted[j - 1] > v) {
      sorted[j] = sorted[j - 1];
      --j;
      ++inversions;
    }
    sorted[j] = v;
  }
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) return SignedBracket{};
  }
  return SignedBracket{inversions % 2 == 0 ? 1 : -1, Bracket{std::move(sorted)}};
}

BracketMonomial BracketMonomial::from_unsorted(std::vector<Bracket> bs) {
  std::sort(bs.begin(), bs.end());
  return BracketMonomial{std::move(bs)};
}

std::string BracketMonomial::str() const {
  if (brackets.empty()) return "1";
  std::string out;
  for (const Bracket& b : brackets) out += b.str();
  return out;
}

std::strong_ordering compare_monomials(const BracketMonomial& a,
                                       const BracketMonomial& b) {
  size_t n = std::min(a.brackets.size(), b.brackets.size());
  for (size_t k = 0; k < n; ++k) {
    auto c = a.brackets[k] <=> b.brackets[k];
    if (c != std::strong_ordering::equal) return c;
  }
  return a.brackets.size() <=> b.brackets.size();
}

bool is_standard(const BracketMonomial& m) {
  for (size_t k = 0; k + 1 < m.brackets.size(); ++k) {
    const auto& cur = m.brackets[k].indices;
    const auto& nxt = m.brackets[k + 1].indices;
    if (cur.size() != nxt.size()) {
      throw std::invalid_argument("mixed bracket widths in monomial");
    }
    for (size_t row = 0; row < cur.size(); ++row) {
      if (cur[row] > nxt[row]) return false;
    }
  }
  return true;
}

BracketPolynomial::BracketPolynomial(int width) : width_(width) {
  if (width < 1) throw std::invalid_argument("bracket width must be >= 1");
}

BracketPolynomial BracketPolynomial::constant(int width, Rat c) {
  BracketPolynomial p(width);
  p.add_term(BracketMonomial{}, c);
  return p;
}

BracketPolynomial BracketPolynomial::term(int width, BracketMonomial m, Rat c) {
  for (const Bracket& b : m.brackets) {
    if (b.width() != width) throw std::invalid_argument("bracket width mismatch");
  }
  BracketPolynomial p(width);
  p.add_term(m, c);
  return p;
}

BracketPolynomial BracketPolynomial::from_bracket(const SignedBracket& sb,
                                                  int width) {
  BracketPolynomial p(width);
  if (sb.is_zero()) return p;
  if (sb.bracket.width() != width) {
    throw std::invalid_argument("bracket width mismatch");
  }
  p.add_term(BracketMonomial{{sb.bracket}}, Rat(sb.sign));
  return p;
}

Rat BracketPolynomial::coefficient(const BracketMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::set<Index> BracketPolynomial::support() const {
  std::set<Index> s;
  for (const auto& [m, c] : terms_) {
    for (const Bracket& b : m.brackets) s.insert(b.indices.begin(), b.indices.end());
  }
  return s;
}

void BracketPolynomial::add_term(const BracketMonomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BracketPolynomial BracketPolynomial::operator-() const {
  BracketPolynomial r(width_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

BracketPolynomial& BracketPolynomial::operator+=(const BracketPolynomial& q) {
  if (q.width_ != width_) throw std::invalid_argument("width mismatch in poly_add");
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

BracketPolynomial& BracketPolynomial::operator-=(const BracketPolynomial& q) {
  if (q.width_ != width_) throw std::invalid_argument("width mismatch in poly_add");
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

BracketPolynomial& BracketPolynomial::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

bool BracketPolynomial::operator==(const BracketPolynomial& q) const {
  return width_ == q.width_ && terms_ == q.terms_;
}

BracketPolynomial poly_add(const BracketPolynomial& p,
                           const BracketPolynomial& q) {
  BracketPolynomial r = p;
  r += q;
  return r;
}

BracketPolynomial poly_mul(const BracketPolynomial& p,
                           const BracketPolynomial& q) {
  if (p.width() != q.width()) {
    throw std::invalid_argument("width mismatch in poly_mul");
  }
  BracketPolynomial r(p.width());
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      std::vector<Bracket> bs = mp.brackets;
      bs.insert(bs.end(), mq.brackets.begin(), mq.brackets.end());
      r.add_term(BracketMonomial::from_unsorted(std::move(bs)), cp * cq);
    }
  }
  return r;
}

std::string BracketPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = abs(c);
    if (sgn(c) < 0) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    if (a != 1 || m.brackets.empty()) out << a.get_str();
    if (!m.brackets.empty()) out << m.str();
    first = false;
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  BracketPolynomial parse() {
    skip_ws();
    std::vector<std::pair<BracketMonomial, Rat>> parsed;
    int width = 0;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!parsed.empty()) {
        throw std::invalid_argument("expected '+' or '-' between terms");
      }
      Rat coeff(sign);
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_rational();
        skip_ws();
      }
      std::vector<Bracket> bs;
      while (pos_ < s_.size() && peek() == '[') {
        SignedBracket sb = parse_bracket();
        if (sb.is_zero()) {
          coeff = 0;
        } else {
          coeff *= sb.sign;
          if (width == 0) width = sb.bracket.width();
          if (sb.bracket.width() != width) {
            throw std::invalid_argument("mixed bracket widths in polynomial");
          }
          bs.push_back(sb.bracket);
        }
        skip_ws();
      }
      if (bs.empty() && coeff == sign && !std::isdigit(static_cast<unsigned char>(
              pos_ > 0 ? s_[pos_ - 1] : '\0'))) {
        throw std::invalid_argument("empty term in bracket polynomial");
      }
      parsed.emplace_back(BracketMonomial::from_unsorted(std::move(bs)), coeff);
      skip_ws();
    }
    if (width == 0) {
      throw std::invalid_argument("polynomial text contains no brackets");
    }
    BracketPolynomial p(width);
    for (auto& [m, c] : parsed) p.add_term(m, c);
    return p;
  }

 private:
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  long parse_integer() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw std::invalid_argument("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  Rat parse_rational() {
    long num = parse_integer();
    if (pos_ < s_.size() && peek() == '/') {
      ++pos_;
      long den = parse_integer();
      if (den == 0) throw std::invalid_argument("zero denominator");
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    return Rat(num);
  }

  SignedBracket parse_bracket() {
    ++pos_;  // '['
    std::vector<Index> idx;
    bool comma_form = s_.find(',', pos_) != std::string::npos &&
                      s_.find(',', pos_) < s_.find(']', pos_);
    while (pos_ < s_.size() && peek() != ']') {
      if (comma_form) {
        idx.push_back(static_cast<Index>(parse_integer()));
        if (pos_ < s_.size() && peek() == ',') ++pos_;
      } else {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          throw std::invalid_argument("bad character in bracket");
        }
        idx.push_back(peek() - '0');
        ++pos_;
      }
    }
    if (pos_ >= s_.size()) throw std::invalid_argument("unterminated bracket");
    ++pos_;  // ']'
    return normalize_bracket(idx);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

BracketPolynomial parse_bracket_polynomial(const std::string& text) {
  return PolyParser(text).parse();
}

}  // namespace rnc
