#include "qweyl/parser.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

class Parser {
public:
  // `p` is null for scalar-only parsing; elements then live in a rank-one
  // AJ-B algebra and must stay constant.
  Parser(std::string_view src, const PresentationId* p) : src_(src), p_(p) {
    if (p_ != nullptr) alg_ = *p_;
  }

  NormalElement run() {
    skip();
    if (pos_ == src_.size()) fail("empty expression");
    NormalElement e = expr();
    skip();
    if (pos_ != src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return e;
  }

private:
  std::string_view src_;
  const PresentationId* p_;
  PresentationId alg_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what, std::optional<std::size_t> at = std::nullopt) const {
    throw SyntaxError(at.value_or(pos_), what);
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])) != 0) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool digit_at(std::size_t i) const {
    return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i])) != 0;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (digit_at(pos_)) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  std::int64_t small_int(const std::string& d, std::size_t at) const {
    try {
      std::size_t used = 0;
      long long v = std::stoll(d, &used);
      if (used != d.size()) fail("bad integer", at);
      return v;
    } catch (const std::out_of_range&) {
      throw Error(ErrorCode::ExponentOverflow, "integer '" + d + "' out of range");
    }
  }

  int index(std::size_t at) {
    if (!digit_at(pos_)) fail("expected an index", at);
    std::int64_t v = small_int(digits(), at);
    if (v < 1 || v > 9999) fail("index out of range", at);
    return static_cast<int>(v);
  }

  NormalElement constant(const Scalar& s) const { return NormalElement::constant(alg_, s); }

  NormalElement expr() {
    NormalElement acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  NormalElement term() {
    NormalElement acc = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * unary();
      } else if (peek('/')) {
        std::size_t at = pos_++;
        for (const auto& [f, e] : divisor(at)) {
          if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero at byte " + std::to_string(at));
          acc = acc.scaled(f.inverse().pow(e));
        }
      } else {
        return acc;
      }
    }
  }

  using Factors = std::vector<std::pair<Scalar, std::int64_t>>;

  Scalar scalar_operand(const NormalElement& e, std::size_t at) const {
    auto s = as_scalar(e);
    if (!s) fail("division by a non-scalar", at);
    return *s;
  }

  // The operand of '/' as a list of factors, so that `a / ((f)*(g)^2)`
  // divides by f and g separately and keeps them as distinct denominator
  // factors, exactly as scalars print.
  Factors divisor(std::size_t at) {
    if (peek('-')) {
      ++pos_;
      Factors f = divisor(at);
      f.emplace_back(Scalar(-1), 1);
      return f;
    }
    Factors out;
    if (peek('(')) {
      std::size_t open = pos_++;
      Factors inner = divisor(at);
      while (peek('*')) {
        ++pos_;
        Factors more = divisor(at);
        inner.insert(inner.end(), more.begin(), more.end());
      }
      if (peek(')')) {
        ++pos_;
        out = std::move(inner);
      } else {
        // Not a bare product: reparse the group as an ordinary expression.
        pos_ = open;
        out = {{scalar_operand(atom().value, at), 1}};
      }
    } else {
      Atom a = atom();
      out = {{scalar_operand(a.value, at), 1}};
    }
    while (peek('^')) {
      ++pos_;
      std::int64_t e = exponent();
      for (auto& f : out) f.second *= e;
    }
    return out;
  }

  std::int64_t exponent() {
    skip();
    std::size_t at = pos_;
    bool neg = false;
    if (pos_ < src_.size() && src_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (!digit_at(pos_)) fail("exponent must be an integer literal", at);
    std::int64_t e = small_int(digits(), at);
    return neg ? -e : e;
  }

  NormalElement unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    return power();
  }

  static std::optional<Scalar> as_scalar(const NormalElement& e) {
    if (e.is_zero()) return Scalar();
    if (e.terms().size() != 1 || !e.terms().begin()->first.is_one()) return std::nullopt;
    return e.terms().begin()->second;
  }

  struct Atom {
    NormalElement value;
    // Set for a bare generator so that powers go through NormalElement::generator.
    std::optional<std::pair<Letter, int>> gen;
  };

  NormalElement power() {
    Atom a = atom();
    NormalElement v = a.value;
    bool first = true;
    while (peek('^')) {
      ++pos_;
      std::size_t at = (skip(), pos_);
      std::int64_t e = exponent();
      if (first && a.gen) {
        auto [g, i] = *a.gen;
        if (e < 0 && (g != Letter::Z || !alg_.localized)) {
          throw Error(ErrorCode::NegativeExponent, "negative exponent on a generator at byte " + std::to_string(at));
        }
        v = NormalElement::generator(alg_, g, i, e);
      } else {
        v = raise(v, e, at);
      }
      first = false;
    }
    return v;
  }

  NormalElement raise(const NormalElement& v, std::int64_t e, std::size_t at) const {
    if (auto s = as_scalar(v)) {
      if (s->is_zero() && e < 0) throw Error(ErrorCode::DivisionByZero, "zero to a negative power");
      return constant(s->pow(e));
    }
    if (e < 0) throw Error(ErrorCode::NegativeExponent, "negative power of a non-scalar at byte " + std::to_string(at));
    NormalElement result = constant(1);
    NormalElement base = v;
    for (auto u = static_cast<std::uint64_t>(e); u > 0; u >>= 1u) {
      if (u & 1u) result = result * base;
      if (u > 1) base = base * base;
    }
    return result;
  }

  Atom atom() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    std::size_t at = pos_;
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NormalElement e = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return {e, std::nullopt};
    }
    if (digit_at(pos_)) {
      std::string d = digits();
      return {constant(Scalar(mpq_class(d))), std::nullopt};
    }
    ++pos_;
    switch (c) {
      case 'q': return {constant(Scalar::q(index(at))), std::nullopt};
      case 'c': return {constant(Scalar::generic(index(at))), std::nullopt};
      case 'l': return {constant(lambda_literal(at)), std::nullopt};
      case 'x':
      case 'y':
      case 'z': {
        int i = index(at);
        if (p_ == nullptr) fail("generators are not allowed in a scalar", at);
        if (i > alg_.n()) {
          throw Error(ErrorCode::UnknownGenerator,
                      std::string(1, c) + std::to_string(i) + " at byte " + std::to_string(at) + " (n = " +
                          std::to_string(alg_.n()) + ")");
        }
        Letter g = c == 'x' ? Letter::X : c == 'y' ? Letter::Y : Letter::Z;
        return {NormalElement::generator(alg_, g, i), std::pair{g, i}};
      }
      default: break;
    }
    fail(std::string("unexpected '") + c + "'", at);
  }

  // l12 (single-digit indices) or l<i>_<j>.
  Scalar lambda_literal(std::size_t at) {
    std::size_t start = pos_;
    std::string d = digits();
    int i = 0;
    int j = 0;
    if (pos_ < src_.size() && src_[pos_] == '_') {
      if (d.empty()) fail("expected an index", start);
      ++pos_;
      i = static_cast<int>(small_int(d, start));
      j = index(at);
    } else {
      if (d.size() != 2) fail("lambda literal needs two single-digit indices or the form l<i>_<j>", at);
      i = d[0] - '0';
      j = d[1] - '0';
    }
    if (i < 1 || j < 1 || i == j) fail("invalid lambda indices", at);
    if (i < j) return Scalar::var(Var::lambda(i, j));
    return Scalar::var(Var::lambda(j, i)).inverse();
  }
};

}  // namespace

NormalElement parse_element(std::string_view src, const PresentationId& p) { return Parser(src, &p).run(); }

Scalar parse_scalar(std::string_view src) {
  NormalElement e = Parser(src, nullptr).run();
  if (e.is_zero()) return {};
  return e.terms().begin()->second;
}

}  // namespace qweyl
