#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace eqarea {

/// A compiled arithmetic expression in one variable.
///
/// Grammar: numbers, the variable, `pi`, `+ - * /`, `^` or `**` (right
/// associative), unary sign, parentheses, and the functions
/// exp, log, sqrt, abs, sin, cos, tanh.  Parse failures raise ConfigError
/// with the column of the offending token.
class Expression {
 public:
  static Expression parse(std::string_view text, std::string_view variable);

  double operator()(double value) const;

  const std::string& text() const { return text_; }

  struct Node;

 private:
  Expression(std::string text, std::shared_ptr<const Node> root)
      : text_(std::move(text)), root_(std::move(root)) {}

  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace eqarea
