#include "xytr/io/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "xytr/errors.hpp"

namespace xytr {

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& s, const std::set<std::string>& vars, int line, int col)
      : s_(s), vars_(vars), line_(line), col_(col) {}

  RF parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    RF v = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  const std::string& s_;
  const std::set<std::string>& vars_;
  int line_;
  int col_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line_, static_cast<int>(pos_) + col_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RF expr() {
    RF v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  RF term() {
    RF v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        RF d = unary();
        if (d.is_zero()) {
          pos_ = at;
          throw DivisionByZero("division by zero at line " + std::to_string(line_) + ", column " +
                               std::to_string(static_cast<int>(at) + col_));
        }
        v /= d;
      } else {
        return v;
      }
    }
  }

  RF unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RF power() {
    RF base = atom();
    if (!eat('^')) return base;
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("exponent must be a nonnegative integer literal");
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 4) fail("exponent too large");
    int e = std::stoi(digits);
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') fail("chained exponents need parentheses");
    return base.pow(e);
  }

  RF atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RF v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RF(BigRat(Integer(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (!vars_.count(name)) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      return RF::variable(name);
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

RF parse_expr(const std::string& text, const std::set<std::string>& variables, int line, int column) {
  return ExprParser(text, variables, line, column).parse();
}

CurveSpec parse_curve_text(const std::string& text) {
  CurveSpec spec;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw SyntaxError("expected '='", lineno, 1);
    std::string lhs = trim(line.substr(0, eq));
    std::string rhs = trim(line.substr(eq + 1));
    if (lhs == "x" || lhs == "y") {
      std::string& slot = lhs == "x" ? spec.x_expr : spec.y_expr;
      if (!slot.empty()) throw SyntaxError("duplicate definition of " + lhs, lineno, 1);
      slot = rhs;
      const std::string after = line.substr(eq + 1);
      const int col = static_cast<int>(raw.find_first_not_of(" \t\r") + eq + 1 + after.find_first_not_of(" \t\r")) + 1;
      (lhs == "x" ? spec.x_line : spec.y_line) = lineno;
      (lhs == "x" ? spec.x_col : spec.y_col) = col;
      parse_expr(rhs, {"z"}, lineno, col);
    } else if (lhs.rfind("option", 0) == 0 && lhs.size() > 6 && std::isspace(static_cast<unsigned char>(lhs[6]))) {
      std::string key = trim(lhs.substr(6));
      if (key.empty()) throw SyntaxError("option without a key", lineno, 1);
      spec.options[key] = rhs;
    } else {
      throw SyntaxError("unknown entry '" + lhs + "'", lineno, 1);
    }
  }
  if (spec.x_expr.empty()) throw SyntaxError("missing x definition", lineno + 1, 1);
  if (spec.y_expr.empty()) throw SyntaxError("missing y definition", lineno + 1, 1);
  return spec;
}

CurveSpec read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read curve file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curve_text(ss.str());
}

}  // namespace xytr
