#include "bicheb/expr.hpp"

#include <array>
#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "bicheb/error.hpp"

namespace bicheb::expr {

namespace {

struct FunctionInfo {
  std::string_view name;
  int arity;
};

constexpr std::array kFunctions{
    FunctionInfo{"sin", 1},  FunctionInfo{"cos", 1}, FunctionInfo{"tan", 1},
    FunctionInfo{"exp", 1},  FunctionInfo{"log", 1}, FunctionInfo{"sqrt", 1},
    FunctionInfo{"abs", 1},  FunctionInfo{"pow", 2},
};

const FunctionInfo* find_function(std::string_view name) {
  for (const auto& f : kFunctions)
    if (f.name == name) return &f;
  return nullptr;
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

NodePtr make(Node node) { return std::make_shared<const Node>(std::move(node)); }

class Parser {
 public:
  Parser(std::span<const Token> tokens, std::size_t end)
      : tokens_(tokens), end_(end) {}

  NodePtr run() {
    if (tokens_.empty()) throw ParseError("empty expression", end_);
    NodePtr root = expression();
    if (i_ < tokens_.size())
      throw ParseError("unexpected '" + tokens_[i_].text + "'", tokens_[i_].pos);
    return root;
  }

 private:
  const Token* peek() const { return i_ < tokens_.size() ? &tokens_[i_] : nullptr; }

  bool at_operator(char op) const {
    const Token* t = peek();
    return t && t->kind == TokenKind::Operator && t->text[0] == op;
  }
  bool at_text(TokenKind kind, char c) const {
    const Token* t = peek();
    return t && t->kind == kind && t->text[0] == c;
  }

  std::size_t here() const { return i_ < tokens_.size() ? tokens_[i_].pos : end_; }

  void expect(TokenKind kind, char c) {
    if (!at_text(kind, c)) {
      const Token* t = peek();
      throw ParseError(std::string("expected '") + c + "'" +
                           (t ? " but found '" + t->text + "'" : " at end of input"),
                       here());
    }
    ++i_;
  }

  NodePtr binary(char op, NodePtr lhs, NodePtr rhs, std::size_t pos) {
    return make({.kind = Node::Kind::Binary, .op = op,
                 .args = {std::move(lhs), std::move(rhs)}, .pos = pos});
  }

  NodePtr expression() {
    NodePtr lhs = term();
    while (at_operator('+') || at_operator('-')) {
      const Token& t = tokens_[i_++];
      lhs = binary(t.text[0], lhs, term(), t.pos);
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (at_operator('*') || at_operator('/')) {
      const Token& t = tokens_[i_++];
      lhs = binary(t.text[0], lhs, unary(), t.pos);
    }
    return lhs;
  }

  NodePtr unary() {
    if (at_operator('-')) {
      const std::size_t pos = tokens_[i_++].pos;
      return make({.kind = Node::Kind::Negate, .args = {unary()}, .pos = pos});
    }
    if (at_operator('+')) {
      ++i_;
      return unary();
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (at_operator('^')) {
      const std::size_t pos = tokens_[i_++].pos;
      return binary('^', base, unary(), pos);
    }
    return base;
  }

  NodePtr primary() {
    const Token* t = peek();
    if (!t) throw ParseError("unexpected end of input", end_);

    switch (t->kind) {
      case TokenKind::Number:
        ++i_;
        return make({.kind = Node::Kind::Number, .value = t->number, .pos = t->pos});
      case TokenKind::Paren:
        if (t->text[0] == '(') {
          ++i_;
          NodePtr inner = expression();
          expect(TokenKind::Paren, ')');
          return inner;
        }
        throw ParseError("unbalanced ')'", t->pos);
      case TokenKind::Identifier:
        return identifier();
      default:
        throw ParseError("unexpected '" + t->text + "'", t->pos);
    }
  }

  NodePtr identifier() {
    const Token& t = tokens_[i_++];
    const std::string& name = t.text;
    if (at_text(TokenKind::Paren, '(')) {
      const FunctionInfo* fn = find_function(name);
      if (!fn) throw ParseError("unknown function '" + name + "'", t.pos);
      ++i_;
      std::vector<NodePtr> args{expression()};
      while (at_text(TokenKind::Comma, ',')) {
        ++i_;
        args.push_back(expression());
      }
      expect(TokenKind::Paren, ')');
      if (static_cast<int>(args.size()) != fn->arity)
        throw ParseError(name + " takes " + std::to_string(fn->arity) +
                             " argument(s), got " + std::to_string(args.size()),
                         t.pos);
      return make({.kind = Node::Kind::Call, .name = name, .args = std::move(args),
                   .pos = t.pos});
    }
    if (name == "x" || name == "y")
      return make({.kind = Node::Kind::Variable, .name = name, .pos = t.pos});
    if (name == "pi")
      return make({.kind = Node::Kind::Constant, .value = std::numbers::pi,
                   .name = name, .pos = t.pos});
    if (name == "e")
      return make({.kind = Node::Kind::Constant, .value = std::numbers::e,
                   .name = name, .pos = t.pos});
    if (find_function(name))
      throw ParseError("function '" + name + "' needs an argument list", t.pos);
    throw ParseError("unknown identifier '" + name + "'", t.pos);
  }

  std::span<const Token> tokens_;
  std::size_t end_;
  std::size_t i_ = 0;
};

double int_power(double base, long long p) {
  double result = 1.0;
  const long long n = p < 0 ? -p : p;
  for (long long i = 0; i < n; ++i) result *= base;
  return p < 0 ? 1.0 / result : result;
}

double raise(double base, double exponent, const Node& node) {
  if (exponent == std::trunc(exponent) && std::abs(exponent) <= 16.0) {
    const auto p = static_cast<long long>(exponent);
    if (p < 0 && base == 0.0)
      throw EvaluationError("zero raised to a negative power", pretty_print(node));
    return int_power(base, p);
  }
  return std::pow(base, exponent);
}

double checked(double v, const Node& node) {
  if (!std::isfinite(v))
    throw EvaluationError("non-finite value in " + pretty_print(node), pretty_print(node));
  return v;
}

double call(const Node& node, double x, double y) {
  const std::string& f = node.name;
  const double a = eval_ast(*node.args[0], x, y);
  if (f == "sin") return std::sin(a);
  if (f == "cos") return std::cos(a);
  if (f == "tan") return std::tan(a);
  if (f == "exp") return std::exp(a);
  if (f == "log") {
    if (!(a > 0.0))
      throw EvaluationError("log of nonpositive value in " + pretty_print(node),
                            pretty_print(node));
    return std::log(a);
  }
  if (f == "sqrt") {
    if (a < 0.0)
      throw EvaluationError("sqrt of negative value in " + pretty_print(node),
                            pretty_print(node));
    return std::sqrt(a);
  }
  if (f == "abs") return std::abs(a);
  if (f == "pow") return raise(a, eval_ast(*node.args[1], x, y), node);
  throw EvaluationError("unknown function " + f, pretty_print(node));
}

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < source.size()) {
    const char c = source[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c) || (c == '.' && i + 1 < source.size() && is_digit(source[i + 1]))) {
      while (i < source.size() && (is_digit(source[i]) || source[i] == '.')) ++i;
      // Exponent only when 'e' is followed by digits (optionally signed).
      if (i < source.size() && (source[i] == 'e' || source[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < source.size() && (source[j] == '+' || source[j] == '-')) ++j;
        if (j < source.size() && is_digit(source[j])) {
          i = j;
          while (i < source.size() && is_digit(source[i])) ++i;
        }
      }
      Token t{TokenKind::Number, std::string(source.substr(start, i - start)), start};
      const auto [ptr, ec] =
          std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError("malformed number '" + t.text + "'", start);
      out.push_back(std::move(t));
    } else if (is_ident_start(c)) {
      while (i < source.size() && is_ident_char(source[i])) ++i;
      out.push_back({TokenKind::Identifier, std::string(source.substr(start, i - start)),
                     start});
    } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
      out.push_back({TokenKind::Operator, std::string(1, c), start});
      ++i;
    } else if (c == '(' || c == ')') {
      out.push_back({TokenKind::Paren, std::string(1, c), start});
      ++i;
    } else if (c == ',') {
      out.push_back({TokenKind::Comma, ",", start});
      ++i;
    } else {
      throw ParseError(std::string("illegal character '") + c + "'", start);
    }
  }
  return out;
}

NodePtr parse(std::span<const Token> tokens, std::size_t source_length) {
  return Parser(tokens, source_length).run();
}

double eval_ast(const Node& node, double x, double y) {
  switch (node.kind) {
    case Node::Kind::Number:
    case Node::Kind::Constant:
      return node.value;
    case Node::Kind::Variable:
      return node.name == "x" ? x : y;
    case Node::Kind::Negate:
      return -eval_ast(*node.args[0], x, y);
    case Node::Kind::Call:
      return checked(call(node, x, y), node);
    case Node::Kind::Binary: {
      const double a = eval_ast(*node.args[0], x, y);
      const double b = eval_ast(*node.args[1], x, y);
      switch (node.op) {
        case '+': return checked(a + b, node);
        case '-': return checked(a - b, node);
        case '*': return checked(a * b, node);
        case '/':
          if (b == 0.0)
            throw EvaluationError("division by zero in " + pretty_print(node),
                                  pretty_print(node));
          return checked(a / b, node);
        case '^': return checked(raise(a, b, node), node);
      }
      break;
    }
  }
  throw EvaluationError("malformed expression node", "");
}

std::string pretty_print(const Node& node) {
  switch (node.kind) {
    case Node::Kind::Number: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", node.value);
      return buf;
    }
    case Node::Kind::Constant:
    case Node::Kind::Variable:
      return node.name;
    case Node::Kind::Negate:
      return "(-" + pretty_print(*node.args[0]) + ")";
    case Node::Kind::Binary:
      return "(" + pretty_print(*node.args[0]) + " " + node.op + " " +
             pretty_print(*node.args[1]) + ")";
    case Node::Kind::Call: {
      std::string out = node.name + "(";
      for (std::size_t i = 0; i < node.args.size(); ++i) {
        if (i) out += ", ";
        out += pretty_print(*node.args[i]);
      }
      return out + ")";
    }
  }
  return {};
}

bool structurally_equal(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.name != b.name || a.op != b.op ||
      a.args.size() != b.args.size())
    return false;
  if ((a.kind == Node::Kind::Number || a.kind == Node::Kind::Constant) &&
      a.value != b.value)
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!structurally_equal(*a.args[i], *b.args[i])) return false;
  return true;
}

Expression Expression::parse(std::string_view source) {
  const auto tokens = tokenize(source);
  return Expression(std::string(source), expr::parse(tokens, source.size()));
}

}  // namespace bicheb::expr
