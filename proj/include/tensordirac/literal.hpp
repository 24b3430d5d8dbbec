#pragma once

// Text form of multivectors:
//
//   expr  := [sign] term (('+' | '-') [sign] term)*
//   term  := coeff [blade] | blade
//   coeff := real | '(' real ',' real ')'
//   real  := decimal [('e'|'E') ('+'|'-') digits] | integer '/' integer
//   blade := '1' | 'e' digits ('^' 'e' digits)*
//
// Blade digits are strictly ascending over the whole blade, so "e0^e1" and
// "e01" name the same blade. Whitespace is ignored between tokens. An
// exponent needs an explicit sign so that "2e0" reads as 2 e^0.

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tensordirac/multivector.hpp"

namespace tensordirac {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// Exact value of a decimal literal "[+-]ddd[.ddd][e[+-]ddd]".
inline Rational decimal_to_rational(std::string_view text) {
  std::string digits;
  long exponent = 0;
  bool negative = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
    if (text[i] == '.')
      continue;
    digits += text[i];
  }
  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    auto end = text.find_first_of("eE");
    if (end == std::string_view::npos) end = text.size();
    exponent -= static_cast<long>(end - dot - 1);
  }
  if (i < text.size()) exponent += std::stol(std::string(text.substr(i + 1)));
  mpz_class num(digits.empty() ? "0" : digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

template <class S>
struct LiteralCodec;

template <>
struct LiteralCodec<Cplx> {
  static double real_from(std::string_view text, bool fraction, std::size_t pos) {
    if (fraction) {
      auto slash = text.find('/');
      double p = std::stod(std::string(text.substr(0, slash)));
      double q = std::stod(std::string(text.substr(slash + 1)));
      if (q == 0.0) throw ParseError("zero denominator", pos);
      return p / q;
    }
    return std::stod(std::string(text));
  }
  static Cplx make(double re, double im) { return {re, im}; }
  static std::string format_real(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
  }
  static bool is_real(const Cplx& z) { return z.imag() == 0.0; }
  static bool is_negative_real(const Cplx& z) { return z.imag() == 0.0 && z.real() < 0.0; }
  static bool is_unit(const Cplx& z) { return z == Cplx{1.0, 0.0}; }
  static std::string format_re(const Cplx& z) { return format_real(z.real()); }
  static std::string format_im(const Cplx& z) { return format_real(z.imag()); }
};

template <>
struct LiteralCodec<QComplex> {
  static Rational real_from(std::string_view text, bool fraction, std::size_t pos) {
    if (fraction) {
      auto slash = text.find('/');
      mpz_class p(std::string(text.substr(0, slash)), 10);
      mpz_class q(std::string(text.substr(slash + 1)), 10);
      if (q == 0) throw ParseError("zero denominator", pos);
      Rational r(p, q);
      r.canonicalize();
      return r;
    }
    return decimal_to_rational(text);
  }
  static QComplex make(const Rational& re, const Rational& im) { return {re, im}; }
  static std::string format_real(const Rational& v) { return v.get_str(); }
  static bool is_real(const QComplex& z) { return sgn(z.im) == 0; }
  static bool is_negative_real(const QComplex& z) { return sgn(z.im) == 0 && sgn(z.re) < 0; }
  static bool is_unit(const QComplex& z) { return z.re == 1 && sgn(z.im) == 0; }
  static std::string format_re(const QComplex& z) { return format_real(z.re); }
  static std::string format_im(const QComplex& z) { return format_real(z.im); }
};

template <class S>
class LiteralParser {
 public:
  using Codec = LiteralCodec<S>;

  explicit LiteralParser(std::string_view text) : text_(text) {}

  MultiVector<S> parse() {
    MultiVector<S> result;
    skip_ws();
    if (at_end()) throw ParseError("empty multivector literal", pos_);
    bool negate = consume_sign();
    result += signed_term(negate);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = text_[pos_];
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      skip_ws();
      bool neg = (c == '-') != consume_sign();
      result += signed_term(neg);
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool consume_sign() {
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
      skip_ws();
    }
    return neg;
  }

  MultiVector<S> signed_term(bool negate) {
    MultiVector<S> t = term();
    return negate ? -t : t;
  }

  MultiVector<S> term() {
    S coeff = ScalarTraits<S>::one();
    bool have_coeff = false;
    if (peek() == '(') {
      coeff = complex_coeff();
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      // A lone "1" followed by nothing numeric is the scalar blade.
      coeff = Codec::make(real(), 0);
      have_coeff = true;
    } else if (peek() != 'e') {
      throw ParseError("expected coefficient or blade", pos_);
    }
    skip_ws();
    unsigned mask = 0;
    if (peek() == 'e') {
      mask = blade();
    } else if (have_coeff && peek() == '1' && !std::isdigit(static_cast<unsigned char>(peek(1)))) {
      ++pos_;
    } else if (!have_coeff) {
      throw ParseError("expected blade", pos_);
    }
    return MultiVector<S>::blade(mask, coeff);
  }

  S complex_coeff() {
    ++pos_;  // '('
    skip_ws();
    auto re = real_signed();
    skip_ws();
    if (peek() != ',') throw ParseError("expected ','", pos_);
    ++pos_;
    skip_ws();
    auto im = real_signed();
    skip_ws();
    if (peek() != ')') throw ParseError("expected ')'", pos_);
    ++pos_;
    return Codec::make(re, im);
  }

  auto real_signed() {
    std::size_t start = pos_;
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())) && peek() != '.')
      throw ParseError("expected number", start);
    auto v = real();
    return neg ? decltype(v)(-v) : v;
  }

  auto real() {
    std::size_t start = pos_;
    bool any_digit = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
      any_digit = true;
    }
    bool fraction = false;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected denominator", pos_);
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      fraction = true;
    } else {
      if (peek() == '.') {
        ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          ++pos_;
          any_digit = true;
        }
      }
      if ((peek() == 'e' || peek() == 'E') && (peek(1) == '+' || peek(1) == '-') &&
          std::isdigit(static_cast<unsigned char>(peek(2)))) {
        pos_ += 2;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    if (!any_digit) throw ParseError("malformed number", start);
    return Codec::real_from(text_.substr(start, pos_ - start), fraction, start);
  }

  unsigned blade() {
    unsigned mask = 0;
    int last = -1;
    for (;;) {
      std::size_t start = pos_;
      if (peek() != 'e') throw ParseError("expected 'e'", pos_);
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected blade index", pos_);
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        int d = peek() - '0';
        if (d > 3) throw ParseError("blade index outside 0..3", pos_);
        if (d <= last) throw ParseError("blade indices must be strictly ascending", pos_);
        last = d;
        mask |= 1u << d;
        ++pos_;
      }
      (void)start;
      skip_ws();
      if (peek() != '^') break;
      ++pos_;
      skip_ws();
    }
    return mask;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::string blade_name(unsigned mask) {
  if (mask == 0) return "1";
  std::string s = "e";
  for (int mu = 0; mu < kDim; ++mu)
    if (mask & (1u << mu)) s += static_cast<char>('0' + mu);
  return s;
}

}  // namespace detail

template <class S>
MultiVector<S> parse_multivector(std::string_view text) {
  return detail::LiteralParser<S>(text).parse();
}

/// Canonical text: nonzero terms in blade-mask order, unit coefficients
/// dropped on non-scalar blades, real negatives folded into the operator.
template <class S>
std::string format_multivector(const MultiVector<S>& u) {
  using Codec = detail::LiteralCodec<S>;
  std::string out;
  for (unsigned a = 0; a < kBladeCount; ++a) {
    const S& c = u[a];
    if (ScalarTraits<S>::is_zero(c)) continue;
    std::string body;
    bool negative = false;
    if (Codec::is_real(c)) {
      negative = Codec::is_negative_real(c);
      S mag = negative ? S(-c) : c;
      if (Codec::is_unit(mag) && a != 0)
        body = detail::blade_name(a);
      else
        body = Codec::format_re(mag) + (a != 0 ? " " + detail::blade_name(a) : "");
    } else {
      body = "(" + Codec::format_re(c) + "," + Codec::format_im(c) + ")";
      if (a != 0) body += " " + detail::blade_name(a);
    }
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace tensordirac
