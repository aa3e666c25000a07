#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Small formula language for f(x, y):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?          right associative
//   primary := number | 'x' | 'y' | 'pi' | 'e'
//            | name '(' expr (',' expr)* ')' | '(' expr ')'
//
// '^' binds tighter than unary minus, so -x^2 is -(x^2). Functions: sin, cos,
// tan, exp, log, sqrt, abs (one argument) and pow (two).

namespace bicheb::expr {

enum class TokenKind { Number, Identifier, Operator, Paren, Comma };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos = 0;  // byte offset of the first character
  double number = 0.0;  // TokenKind::Number only
};

/// Throws ParseError at the first character that starts no token.
std::vector<Token> tokenize(std::string_view source);

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Kind { Number, Constant, Variable, Negate, Binary, Call };

  Kind kind;
  double value = 0.0;     // Number and Constant
  std::string name{};     // Constant, Variable, Call
  char op = 0;            // Binary: one of + - * / ^
  std::vector<NodePtr> args{};
  std::size_t pos = 0;    // source offset, not part of structural identity
};

/// `source_length` is the position reported for errors at end of input.
NodePtr parse(std::span<const Token> tokens, std::size_t source_length);

/// Evaluates the tree at (x, y). Integer exponents with |p| <= 16 use
/// repeated multiplication. Division by zero, log of a nonpositive value,
/// sqrt of a negative value or any NaN/Inf result throws EvaluationError
/// naming the offending subexpression.
double eval_ast(const Node& node, double x, double y);

/// Fully parenthesised rendering that parses back to an equal tree.
std::string pretty_print(const Node& node);

/// Same shape, operators, names and bitwise-equal constants; positions ignored.
bool structurally_equal(const Node& a, const Node& b);

/// Parsed formula, immutable and safe to evaluate from several threads.
class Expression {
 public:
  static Expression parse(std::string_view source);

  double operator()(double x, double y) const { return eval_ast(*root_, x, y); }

  const Node& root() const noexcept { return *root_; }
  const std::string& source() const noexcept { return source_; }

 private:
  Expression(std::string source, NodePtr root)
      : source_(std::move(source)), root_(std::move(root)) {}

  std::string source_;
  NodePtr root_;
};

}  // namespace bicheb::expr
