#pragma once

#include <map>
#include <set>
#include <string>

#include "xytr/cas/rational_function.hpp"

namespace xytr {

// Grammar: integer literals, identifiers from `variables`, + - * / with
// the usual precedence, unary minus, ^ with a nonnegative integer literal,
// parentheses. Throws SyntaxError (with line/column) or DivisionByZero.
// column is that of the first character of text.
RF parse_expr(const std::string& text, const std::set<std::string>& variables = {"z"}, int line = 1, int column = 1);

struct CurveSpec {
  std::string x_expr;
  std::string y_expr;
  std::map<std::string, std::string> options;
  int x_line = 0;
  int y_line = 0;
  int x_col = 1;
  int y_col = 1;
};

// Lines `x = <expr>`, `y = <expr>`, `option key = value`, `# comment`.
CurveSpec parse_curve_text(const std::string& text);
CurveSpec read_curve_file(const std::string& path);

}  // namespace xytr
