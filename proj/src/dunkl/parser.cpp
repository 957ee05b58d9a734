#include "mudef/dunkl/parser.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace mudef::dunkl {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GaussPoly parse() {
    GaussPoly out = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("GaussPoly literal '" + std::string(text_) + "' at " + std::to_string(pos_) +
                                ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_word(std::string_view w) {
    skip();
    return text_.substr(pos_, w.size()) == w;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'x' || c == 'i' ||
           peek_word("mu") || peek_word("gauss");
  }

  GaussPoly sum() {
    GaussPoly acc;
    bool negate = false;
    if (accept('-')) negate = true; else accept('+');
    while (true) {
      const GaussPoly t = product();
      if (negate) acc -= t; else acc += t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else return acc;
    }
  }

  GaussPoly product() {
    GaussPoly acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc.poly_times(factor());
      } else if (accept('/')) {
        skip();
        const std::size_t start = pos_;
        const BigRational d = number();
        if (d == 0) {
          pos_ = start;
          fail("division by zero");
        }
        acc = ComplexMuPoly(MuPolynomial(BigRational(1 / d))) * acc;
      } else if (starts_factor()) {
        acc = acc.poly_times(factor());
      } else {
        return acc;
      }
    }
  }

  static GaussPoly constant(const ComplexMuPoly& c) { return GaussPoly({c}); }

  BigRational number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    mpz_class den = 1;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_++];
        den *= 10;
      }
    }
    if (digits.empty()) fail("expected a number");
    BigRational q(mpz_class(digits, 10), den);
    q.canonicalize();
    return q;
  }

  GaussPoly factor() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      GaussPoly inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (peek_word("gauss")) {
      pos_ += 5;
      return GaussPoly::gaussian();
    }
    if (peek_word("mu")) {
      pos_ += 2;
      return constant(ComplexMuPoly(MuPolynomial::mu()));
    }
    const char c = text_[pos_];
    if (c == 'i') {
      ++pos_;
      return constant(ComplexMuPoly(MuPolynomial(), MuPolynomial(1)));
    }
    if (c == 'x') {
      ++pos_;
      long power = 1;
      if (accept('^')) {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        power = std::stol(std::string(text_.substr(start, pos_ - start)));
        if (power > 1000) fail("exponent too large");
      }
      return GaussPoly::basis(static_cast<int>(power));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return constant(ComplexMuPoly(MuPolynomial(number())));
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GaussPoly parse_gauss_poly(std::string_view text) { return Parser(text).parse(); }

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      BigRational q(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
      if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
      q.canonicalize();
      return q;
    }
    const GaussPoly p = parse_gauss_poly(text);
    if (p.degree() > 0 || !p.coefficient(0).im.is_zero() || p.coefficient(0).re.degree() > 0) {
      throw std::invalid_argument("not a real rational constant");
    }
    return p.coefficient(0).re.coefficient(0);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("bad rational '" + s + "': " + e.what());
  }
}

}  // namespace mudef::dunkl
