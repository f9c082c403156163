#pragma once

/// Arithmetic expressions in one variable `t`.
///
/// Grammar, loosest to tightest binding:
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := atom ('^' unary)?          right associative
///   atom    := number | 't' | call '(' sum ')' | '(' sum ')'
///   call    := sin | cos | exp | log | abs | sqrt
/// So "-t^2" is -(t^2) and "2^-1" is 0.5. There is no implicit
/// multiplication.

#include <atomic>
#include <memory>
#include <string>

#include "obw/error.hpp"
#include "obw/quad.hpp"

namespace obw {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

enum class ExprKind { number, variable, negate, add, sub, mul, div, pow, call };
enum class Builtin { sin, cos, exp, log, abs, sqrt };

/// Immutable expression tree; copies share nodes.
class Expr {
 public:
  struct Node;

  static Expr number(double v);
  static Expr variable();
  static Expr negate(Expr e);
  static Expr binary(ExprKind kind, Expr lhs, Expr rhs);
  static Expr call(Builtin fn, Expr arg);

  ExprKind kind() const;
  double number_value() const;
  Builtin builtin() const;
  const Expr& lhs() const;  // operand of negate/call, left of binary
  const Expr& rhs() const;

  double eval(double t) const;
  bool depends_on_t() const;

  /// Fully parenthesised text that parses back to the same tree.
  std::string to_string() const;

  friend bool operator==(const Expr& x, const Expr& y);

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Expr parse(const std::string& source);

/// Structural derivative d/dt with constant folding only.
Expr differentiate(const Expr& e);

/// Fn1D whose derivative is the symbolic one. Where the symbolic derivative
/// is not finite (abs at 0, ...) a central difference is used instead and
/// `fallbacks` is incremented.
struct ExprFunction {
  Fn1D fn;
  Expr expr;
  Expr derivative;
  std::shared_ptr<std::atomic<long>> fallbacks;
};

ExprFunction make_expr_function(const std::string& source);

}  // namespace obw
