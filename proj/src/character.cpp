#include "qweyl/character.hpp"

#include <cctype>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

class CoordParser {
public:
  explicit CoordParser(const std::string& s) : s_(s) {}

  Character parse() {
    std::vector<Coord> out;
    skip();
    expect('[');
    skip();
    if (peek() == ']') throw SyntaxError(pos_, "empty character");
    for (;;) {
      out.push_back(coord());
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      skip();
      if (pos_ != s_.size()) throw SyntaxError(pos_, "trailing input after character");
      return Character(std::move(out));
    }
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (std::isspace(static_cast<unsigned char>(peek())) != 0) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) throw SyntaxError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }
  std::int64_t integer() {
    skip();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    if (std::isdigit(static_cast<unsigned char>(peek())) == 0) throw SyntaxError(pos_, "expected integer");
    while (std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
    try {
      return std::stoll(s_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      throw Error(ErrorCode::ExponentOverflow, "character exponent out of range");
    }
  }
  std::int64_t q_power() {
    skip();
    expect('q');
    skip();
    if (peek() != '^') return 1;
    ++pos_;
    return integer();
  }
  Coord coord() {
    skip();
    if (peek() == 'q') return Coord::integral(q_power());
    if (peek() == '1') {
      ++pos_;
      return Coord::integral(0);
    }
    if (peek() != 'c') throw SyntaxError(pos_, "expected q^<int> or c<t>*q^<int>");
    ++pos_;
    std::int64_t t = integer();
    if (t < 1) throw SyntaxError(pos_, "generic symbol index must be positive");
    skip();
    std::int64_t a = 0;
    if (peek() == '*') {
      ++pos_;
      a = q_power();
    }
    return Coord::generic_symbol(static_cast<int>(t), a);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string q_text(std::int64_t a) { return a == 1 ? "q" : "q^" + std::to_string(a); }

}  // namespace

Character Character::parse(const std::string& text) { return CoordParser(text).parse(); }

int Character::max_symbol() const {
  int m = 0;
  for (const auto& c : coords_) {
    if (c.generic) m = std::max(m, c.t);
  }
  return m;
}

std::string Character::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Coord& c = coords_[i];
    if (i > 0) s += ", ";
    if (!c.generic) {
      s += "q^" + std::to_string(c.alpha);
    } else {
      s += "c" + std::to_string(c.t);
      if (c.alpha != 0) s += "*" + q_text(c.alpha);
    }
  }
  return s + "]";
}

Character act(const std::vector<std::int64_t>& k, const Character& phi) {
  if (k.size() != phi.coords().size()) throw Error(ErrorCode::InvalidArgument, "act: rank mismatch");
  std::vector<Coord> c = phi.coords();
  for (std::size_t i = 0; i < c.size(); ++i) c[i].alpha -= k[i];
  return Character(std::move(c));
}

std::set<int> complexity(const Character& phi) {
  std::set<int> s;
  for (int i = 1; i <= phi.n(); ++i) {
    if (!phi[i].generic) s.insert(i);
  }
  return s;
}

bool same_orbit(const Character& phi, const Character& psi) {
  if (phi.n() != psi.n()) return false;
  for (int i = 1; i <= phi.n(); ++i) {
    if (phi[i].generic != psi[i].generic) return false;
    if (phi[i].generic && phi[i].t != psi[i].t) return false;
  }
  return true;
}

std::vector<Character> tensor_factor(const Character& phi) {
  std::vector<Character> out;
  for (const auto& c : phi.coords()) out.emplace_back(std::vector<Coord>{c});
  return out;
}

Character product(const std::vector<Character>& factors) {
  std::vector<Coord> c;
  for (const auto& f : factors) c.insert(c.end(), f.coords().begin(), f.coords().end());
  return Character(std::move(c));
}

Scalar value(const Character& phi, int i, const ParamContext& ctx) {
  const Coord& c = phi[i];
  Scalar v = ctx.q(i).pow(c.alpha);
  if (c.generic) v *= Scalar::generic(c.t);
  return v;
}

Scalar eval(const Character& phi, const std::vector<std::int64_t>& m, const ParamContext& ctx) {
  if (m.size() != phi.coords().size()) throw Error(ErrorCode::InvalidArgument, "eval: rank mismatch");
  Scalar r(1);
  for (int i = 1; i <= phi.n(); ++i) {
    std::int64_t e = m[static_cast<std::size_t>(i - 1)];
    if (e != 0) r *= value(phi, i, ctx).pow(e);
  }
  return r;
}

}  // namespace qweyl
