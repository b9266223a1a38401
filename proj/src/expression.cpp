#include "eqarea/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "eqarea/errors.hpp"

namespace eqarea {

struct Expression::Node {
  enum class Kind { kConstant, kVariable, kNegate, kAdd, kSub, kMul, kDiv, kPow, kCall };
  enum class Function { kExp, kLog, kSqrt, kAbs, kSin, kCos, kTanh };

  Kind kind = Kind::kConstant;
  double value = 0.0;
  Function function = Function::kExp;
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;

  double eval(double x) const {
    switch (kind) {
      case Kind::kConstant: return value;
      case Kind::kVariable: return x;
      case Kind::kNegate: return -lhs->eval(x);
      case Kind::kAdd: return lhs->eval(x) + rhs->eval(x);
      case Kind::kSub: return lhs->eval(x) - rhs->eval(x);
      case Kind::kMul: return lhs->eval(x) * rhs->eval(x);
      case Kind::kDiv: return lhs->eval(x) / rhs->eval(x);
      case Kind::kPow: {
        const double exponent = rhs->eval(x);
        // Small integer powers stay exact and defined for negative bases.
        if (exponent == 2.0) {
          const double b = lhs->eval(x);
          return b * b;
        }
        return std::pow(lhs->eval(x), exponent);
      }
      case Kind::kCall: {
        const double a = lhs->eval(x);
        switch (function) {
          case Function::kExp: return std::exp(a);
          case Function::kLog: return std::log(a);
          case Function::kSqrt: return std::sqrt(a);
          case Function::kAbs: return std::abs(a);
          case Function::kSin: return std::sin(a);
          case Function::kCos: return std::cos(a);
          case Function::kTanh: return std::tanh(a);
        }
      }
    }
    return 0.0;
  }
};

namespace {

using Node = Expression::Node;
using NodePtr = std::unique_ptr<Node>;

NodePtr make_binary(Node::Kind kind, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  Parser(std::string_view text, std::string_view variable)
      : text_(text), variable_(variable) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return root;
  }

 private:
  [[noreturn]] void fail(std::string_view what) const {
    throw ConfigError(fmt::format("expression '{}': {} at column {}", text_, what, pos_ + 1));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept("+")) {
        lhs = make_binary(Node::Kind::kAdd, std::move(lhs), term());
      } else if (accept("-")) {
        lhs = make_binary(Node::Kind::kSub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      skip_space();
      if (text_.substr(pos_, 2) != "**" && accept("*")) {
        lhs = make_binary(Node::Kind::kMul, std::move(lhs), unary());
      } else if (accept("/")) {
        lhs = make_binary(Node::Kind::kDiv, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept("-")) {
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::kNegate;
      n->lhs = unary();
      return n;
    }
    if (accept("+")) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept("^") || accept("**")) {
      return make_binary(Node::Kind::kPow, std::move(base), unary());
    }
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (accept("(")) {
      NodePtr inner = expr();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    fail(fmt::format("unexpected character '{}'", c));
  }

  NodePtr number() {
    const std::string tail(text_.substr(pos_));
    char* end = nullptr;
    const double value = std::strtod(tail.c_str(), &end);
    if (end == tail.c_str()) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - tail.c_str());
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::kConstant;
    n->value = value;
    return n;
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    auto n = std::make_unique<Node>();
    if (name == variable_) {
      n->kind = Node::Kind::kVariable;
      return n;
    }
    if (name == "pi") {
      n->kind = Node::Kind::kConstant;
      n->value = std::numbers::pi;
      return n;
    }
    static constexpr std::pair<std::string_view, Node::Function> kFunctions[] = {
        {"exp", Node::Function::kExp},   {"log", Node::Function::kLog},
        {"sqrt", Node::Function::kSqrt}, {"abs", Node::Function::kAbs},
        {"sin", Node::Function::kSin},   {"cos", Node::Function::kCos},
        {"tanh", Node::Function::kTanh},
    };
    for (const auto& [fname, fn] : kFunctions) {
      if (name != fname) continue;
      if (!accept("(")) fail(fmt::format("expected '(' after '{}'", name));
      n->kind = Node::Kind::kCall;
      n->function = fn;
      n->lhs = expr();
      if (!accept(")")) fail("expected ')'");
      return n;
    }
    pos_ = start;
    fail(fmt::format("unknown identifier '{}'", name));
  }

  std::string_view text_;
  std::string_view variable_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text, std::string_view variable) {
  Parser parser(text, variable);
  std::shared_ptr<const Node> root = parser.parse();
  return Expression(std::string(text), std::move(root));
}

double Expression::operator()(double value) const { return root_->eval(value); }

}  // namespace eqarea
