#include "spva/text.hpp"

#include <cctype>
#include <sstream>

#include "spva/errors.hpp"

namespace spva {

namespace {

std::string derivative_marks(unsigned m, TextStyle style) {
  if (style == TextStyle::Latex) {
    if (m == 0) return "";
    if (m <= 3) return std::string(m, '\'');
    return "^{(" + std::to_string(m) + ")}";
  }
  if (m <= 3) return std::string(m, '\'');
  return "^(" + std::to_string(m) + ")";
}

std::string format_coeff(const Rational& q, TextStyle style) {
  if (style == TextStyle::Latex && q.get_den() != 1) {
    std::string s = q < 0 ? "-" : "";
    return s + "\\frac{" + mpz_class(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
  }
  return to_string(q);
}

// Joins signed terms "c*body" with proper +/- separators.
class TermWriter {
 public:
  explicit TermWriter(TextStyle style) : style_(style) {}

  void add(const Rational& c, const std::string& body) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (out_.tellp() == 0) {
      if (c < 0) out_ << "-";
    } else {
      out_ << (c < 0 ? " - " : " + ");
    }
    if (body.empty()) {
      out_ << format_coeff(a, style_);
    } else if (a == 1) {
      out_ << body;
    } else {
      out_ << format_coeff(a, style_) << (style_ == TextStyle::Latex ? " " : "*") << body;
    }
  }

  std::string str() {
    std::string s = out_.str();
    return s.empty() ? "0" : s;
  }

 private:
  TextStyle style_;
  std::ostringstream out_;
};

}  // namespace

std::string format(const Monomial& m, const VariableSet& vars, TextStyle style) {
  std::string s;
  for (const auto& f : m.factors()) {
    if (!s.empty()) s += style == TextStyle::Latex ? " " : "*";
    auto id = key_var(f.key);
    std::string base = style == TextStyle::Latex ? vars.latex(id) : vars.name(id);
    s += base + derivative_marks(key_order(f.key), style);
    if (f.exp > 1) s += style == TextStyle::Latex ? "^{" + std::to_string(f.exp) + "}" : "^" + std::to_string(f.exp);
  }
  return s;
}

std::string format(const SPoly& p, const VariableSet& vars, TextStyle style) {
  TermWriter w(style);
  for (const auto& [m, c] : p.terms()) w.add(c, format(m, vars, style));
  return w.str();
}

std::string format(const ChiPoly& p, const VariableSet& vars, TextStyle style) {
  TermWriter w(style);
  for (int n = 0; n <= p.degree(); ++n) {
    std::string chi;
    if (n > 0) {
      chi = style == TextStyle::Latex ? "\\chi" : "X";
      if (n > 1) chi += style == TextStyle::Latex ? "^{" + std::to_string(n) + "}" : "^" + std::to_string(n);
    }
    for (const auto& [m, c] : p.coeff(n).terms()) {
      std::string body = format(m, vars, style);
      if (!chi.empty()) body = body.empty() ? chi : chi + (style == TextStyle::Latex ? " " : "*") + body;
      w.add(c, body);
    }
  }
  return w.str();
}

namespace {

ChiPoly multiply(const ChiPoly& a, const ChiPoly& b) {
  ChiPoly r;
  ChiPoly shifted = a;
  for (int m = 0; m <= b.degree(); ++m) {
    if (m > 0) shifted = shifted.right_mul_chi();
    if (!b.coeff(m).is_zero()) r += shifted.right_mul(b.coeff(m));
  }
  return r;
}

class Parser {
 public:
  Parser(std::string_view text, const VariableSet& vars, bool allow_chi, int line)
      : s_(text), vars_(vars), allow_chi_(allow_chi), line_(line) {}

  ChiPoly parse() {
    ChiPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  unsigned integer() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected integer");
    if (pos_ - b > 6) fail("integer too large");
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(b, pos_ - b))));
  }

  ChiPoly expr() {
    ChiPoly r;
    bool neg = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      neg = true;
    }
    ChiPoly t = term();
    r += neg ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        r += term();
      } else if (peek('-')) {
        ++pos_;
        r -= term();
      } else {
        break;
      }
    }
    return r;
  }

  ChiPoly term() {
    ChiPoly r = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        r = multiply(r, factor());
      } else if (peek('/')) {
        ++pos_;
        unsigned d = integer();
        if (d == 0) fail("division by zero");
        r *= Rational(1, d);
      } else {
        break;
      }
    }
    return r;
  }

  unsigned power() {
    if (peek('^')) {
      ++pos_;
      return integer();
    }
    return 1;
  }

  ChiPoly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ChiPoly e = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return raise(e, power());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      Rational q;
      try {
        q = parse_rational(s_.substr(b, pos_ - b));
      } catch (const std::invalid_argument& e) {
        pos_ = b;
        fail(e.what());
      }
      return ChiPoly(SPoly(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t b = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(b, pos_ - b));
      if (allow_chi_ && name == "X") return raise(ChiPoly::monomial(1, SPoly(1)), power());
      auto v = vars_.find(name);
      if (!v) {
        pos_ = b;
        fail("unknown variable '" + name + "'");
      }
      unsigned order = 0;
      while (pos_ < s_.size() && s_[pos_] == '\'') {
        ++order;
        ++pos_;
      }
      if (order == 0 && pos_ + 1 < s_.size() && s_[pos_] == '^' && s_[pos_ + 1] == '(') {
        pos_ += 2;
        order = integer();
        if (!peek(')')) fail("expected ')'");
        ++pos_;
      }
      if (order > kMaxOrder) fail("derivative order too large");
      return raise(ChiPoly(SPoly::var(*v, order)), power());
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static ChiPoly raise(const ChiPoly& b, unsigned e) {
    ChiPoly r(SPoly(1));
    for (unsigned i = 0; i < e; ++i) r = multiply(r, b);
    return r;
  }

  std::string_view s_;
  const VariableSet& vars_;
  bool allow_chi_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

SPoly parse_spoly(std::string_view text, const VariableSet& vars, int line) {
  return Parser(text, vars, false, line).parse().at_zero();
}

ChiPoly parse_chipoly(std::string_view text, const VariableSet& vars, int line) {
  return Parser(text, vars, true, line).parse();
}

}  // namespace spva
