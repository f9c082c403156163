#include "obw/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <vector>

namespace obw {

struct Expr::Node {
  ExprKind kind = ExprKind::number;
  double value = 0.0;
  Builtin fn = Builtin::sin;
  std::vector<Expr> args;
};

namespace {

const char* builtin_name(Builtin fn) {
  switch (fn) {
    case Builtin::sin: return "sin";
    case Builtin::cos: return "cos";
    case Builtin::exp: return "exp";
    case Builtin::log: return "log";
    case Builtin::abs: return "abs";
    case Builtin::sqrt: return "sqrt";
  }
  return "?";
}

bool lookup_builtin(const std::string& name, Builtin& out) {
  static const std::pair<const char*, Builtin> table[] = {
      {"sin", Builtin::sin}, {"cos", Builtin::cos}, {"exp", Builtin::exp},
      {"log", Builtin::log}, {"abs", Builtin::abs}, {"sqrt", Builtin::sqrt}};
  for (const auto& [n, fn] : table) {
    if (name == n) {
      out = fn;
      return true;
    }
  }
  return false;
}

double apply(Builtin fn, double v) {
  switch (fn) {
    case Builtin::sin: return std::sin(v);
    case Builtin::cos: return std::cos(v);
    case Builtin::exp: return std::exp(v);
    case Builtin::log: return std::log(v);
    case Builtin::abs: return std::abs(v);
    case Builtin::sqrt: return std::sqrt(v);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

const char* op_symbol(ExprKind k) {
  switch (k) {
    case ExprKind::add: return "+";
    case ExprKind::sub: return "-";
    case ExprKind::mul: return "*";
    case ExprKind::div: return "/";
    case ExprKind::pow: return "^";
    default: return "?";
  }
}

}  // namespace

Expr Expr::number(double v) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::number;
  n->value = v;
  return Expr(n);
}

Expr Expr::variable() {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::variable;
  return Expr(n);
}

Expr Expr::negate(Expr e) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::negate;
  n->args = {std::move(e)};
  return Expr(n);
}

Expr Expr::binary(ExprKind kind, Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->args = {std::move(lhs), std::move(rhs)};
  return Expr(n);
}

Expr Expr::call(Builtin fn, Expr arg) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::call;
  n->fn = fn;
  n->args = {std::move(arg)};
  return Expr(n);
}

ExprKind Expr::kind() const { return node_->kind; }
double Expr::number_value() const { return node_->value; }
Builtin Expr::builtin() const { return node_->fn; }
const Expr& Expr::lhs() const { return node_->args.at(0); }
const Expr& Expr::rhs() const { return node_->args.at(1); }

double Expr::eval(double t) const {
  switch (kind()) {
    case ExprKind::number: return number_value();
    case ExprKind::variable: return t;
    case ExprKind::negate: return -lhs().eval(t);
    case ExprKind::add: return lhs().eval(t) + rhs().eval(t);
    case ExprKind::sub: return lhs().eval(t) - rhs().eval(t);
    case ExprKind::mul: return lhs().eval(t) * rhs().eval(t);
    case ExprKind::div: return lhs().eval(t) / rhs().eval(t);
    case ExprKind::pow: return std::pow(lhs().eval(t), rhs().eval(t));
    case ExprKind::call: return apply(builtin(), lhs().eval(t));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

bool Expr::depends_on_t() const {
  if (kind() == ExprKind::variable) return true;
  for (const auto& a : node_->args) {
    if (a.depends_on_t()) return true;
  }
  return false;
}

std::string Expr::to_string() const {
  switch (kind()) {
    case ExprKind::number: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", std::abs(number_value()));
      return std::signbit(number_value()) ? "(-" + std::string(buf) + ")"
                                          : std::string(buf);
    }
    case ExprKind::variable:
      return "t";
    case ExprKind::negate:
      return "(-" + lhs().to_string() + ")";
    case ExprKind::call:
      return std::string(builtin_name(builtin())) + "(" + lhs().to_string() + ")";
    default:
      return "(" + lhs().to_string() + " " + op_symbol(kind()) + " " +
             rhs().to_string() + ")";
  }
}

bool operator==(const Expr& x, const Expr& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  if (x.kind() == ExprKind::number) return x.number_value() == y.number_value();
  if (x.kind() == ExprKind::call && x.builtin() != y.builtin()) return false;
  if (x.node_->args.size() != y.node_->args.size()) return false;
  for (std::size_t i = 0; i < x.node_->args.size(); ++i) {
    if (!(x.node_->args[i] == y.node_->args[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  Expr parse_all() {
    skip_space();
    if (pos_ == src_.size()) throw ParseError("empty expression", pos_);
    Expr e = parse_sum();
    skip_space();
    if (pos_ != src_.size()) {
      throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    }
    return e;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) {
        throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      }
      throw ParseError(std::string("expected '") + c + "' but found '" + src_[pos_] + "'",
                       pos_);
    }
  }

  Expr parse_sum() {
    Expr lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(ExprKind::add, lhs, parse_product());
      } else if (accept('-')) {
        lhs = Expr::binary(ExprKind::sub, lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_product() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(ExprKind::mul, lhs, parse_unary());
      } else if (accept('/')) {
        lhs = Expr::binary(ExprKind::div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) {
      Expr operand = parse_unary();
      // A negated literal is stored as a negative literal so that printed
      // negative numbers read back as the same node.
      if (operand.kind() == ExprKind::number) return Expr::number(-operand.number_value());
      return Expr::negate(operand);
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (accept('^')) return Expr::binary(ExprKind::pow, base, parse_unary());
    return base;
  }

  Expr parse_atom() {
    skip_space();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
    if (accept('(')) {
      Expr inner = parse_sum();
      expect(')');
      return inner;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Expr parse_number() {
    const char* begin = src_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError("malformed number", pos_);
    pos_ += static_cast<std::size_t>(end - begin);
    return Expr::number(v);
  }

  Expr parse_name() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name = src_.substr(start, pos_ - start);
    if (name == "t") return Expr::variable();
    Builtin fn;
    if (!lookup_builtin(name, fn)) {
      throw ParseError("unknown identifier '" + name + "'", start);
    }
    skip_space();
    if (!accept('(')) {
      throw ParseError("function '" + name + "' must be called with one argument", pos_);
    }
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == ')') {
      throw ParseError("function '" + name + "' expects 1 argument, got 0", pos_);
    }
    Expr arg = parse_sum();
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == ',') {
      throw ParseError("function '" + name + "' expects 1 argument, got more", pos_);
    }
    expect(')');
    return Expr::call(fn, arg);
  }
};

// Constructors with constant folding for the differentiator.

bool is_num(const Expr& e, double v) {
  return e.kind() == ExprKind::number && e.number_value() == v;
}

bool is_num(const Expr& e) { return e.kind() == ExprKind::number; }

Expr neg(const Expr& x) {
  if (is_num(x)) return Expr::number(-x.number_value());
  if (x.kind() == ExprKind::negate) return x.lhs();
  return Expr::negate(x);
}

Expr add(const Expr& x, const Expr& y) {
  if (is_num(x) && is_num(y)) return Expr::number(x.number_value() + y.number_value());
  if (is_num(x, 0.0)) return y;
  if (is_num(y, 0.0)) return x;
  return Expr::binary(ExprKind::add, x, y);
}

Expr sub(const Expr& x, const Expr& y) {
  if (is_num(x) && is_num(y)) return Expr::number(x.number_value() - y.number_value());
  if (is_num(y, 0.0)) return x;
  if (is_num(x, 0.0)) return neg(y);
  return Expr::binary(ExprKind::sub, x, y);
}

Expr mul(const Expr& x, const Expr& y) {
  if (is_num(x) && is_num(y)) return Expr::number(x.number_value() * y.number_value());
  if (is_num(x, 0.0) || is_num(y, 0.0)) return Expr::number(0.0);
  if (is_num(x, 1.0)) return y;
  if (is_num(y, 1.0)) return x;
  return Expr::binary(ExprKind::mul, x, y);
}

Expr divide(const Expr& x, const Expr& y) {
  if (is_num(x) && is_num(y) && y.number_value() != 0.0) {
    return Expr::number(x.number_value() / y.number_value());
  }
  if (is_num(x, 0.0)) return Expr::number(0.0);
  if (is_num(y, 1.0)) return x;
  return Expr::binary(ExprKind::div, x, y);
}

Expr power(const Expr& x, const Expr& y) {
  if (is_num(y, 1.0)) return x;
  if (is_num(y, 0.0)) return Expr::number(1.0);
  return Expr::binary(ExprKind::pow, x, y);
}

Expr fn(Builtin f, const Expr& x) {
  if (is_num(x)) {
    const double v = apply(f, x.number_value());
    if (std::isfinite(v)) return Expr::number(v);
  }
  return Expr::call(f, x);
}

}  // namespace

Expr parse(const std::string& source) { return Parser(source).parse_all(); }

Expr differentiate(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::number:
      return Expr::number(0.0);
    case ExprKind::variable:
      return Expr::number(1.0);
    case ExprKind::negate:
      return neg(differentiate(e.lhs()));
    case ExprKind::add:
      return add(differentiate(e.lhs()), differentiate(e.rhs()));
    case ExprKind::sub:
      return sub(differentiate(e.lhs()), differentiate(e.rhs()));
    case ExprKind::mul: {
      const Expr& u = e.lhs();
      const Expr& v = e.rhs();
      return add(mul(differentiate(u), v), mul(u, differentiate(v)));
    }
    case ExprKind::div: {
      const Expr& u = e.lhs();
      const Expr& v = e.rhs();
      return divide(sub(mul(differentiate(u), v), mul(u, differentiate(v))),
                    power(v, Expr::number(2.0)));
    }
    case ExprKind::pow: {
      const Expr& u = e.lhs();
      const Expr& v = e.rhs();
      if (!v.depends_on_t()) {
        return mul(mul(v, power(u, sub(v, Expr::number(1.0)))), differentiate(u));
      }
      if (!u.depends_on_t()) {
        return mul(mul(e, fn(Builtin::log, u)), differentiate(v));
      }
      return mul(e, add(mul(differentiate(v), fn(Builtin::log, u)),
                        divide(mul(v, differentiate(u)), u)));
    }
    case ExprKind::call: {
      const Expr& u = e.lhs();
      const Expr du = differentiate(u);
      switch (e.builtin()) {
        case Builtin::sin: return mul(fn(Builtin::cos, u), du);
        case Builtin::cos: return mul(neg(fn(Builtin::sin, u)), du);
        case Builtin::exp: return mul(fn(Builtin::exp, u), du);
        case Builtin::log: return divide(du, u);
        case Builtin::sqrt:
          return divide(du, mul(Expr::number(2.0), fn(Builtin::sqrt, u)));
        case Builtin::abs:
          return mul(divide(u, fn(Builtin::abs, u)), du);
      }
    }
  }
  return Expr::number(std::numeric_limits<double>::quiet_NaN());
}

ExprFunction make_expr_function(const std::string& source) {
  ExprFunction out{Fn1D{}, parse(source), Expr::number(0.0),
                   std::make_shared<std::atomic<long>>(0)};
  out.derivative = differentiate(out.expr);
  const Expr expr = out.expr;
  const Expr dexpr = out.derivative;
  auto counter = out.fallbacks;
  out.fn.name = source;
  out.fn.value = [expr](double t) { return expr.eval(t); };
  out.fn.derivative = [expr, dexpr, counter](double t) {
    const double d = dexpr.eval(t);
    if (std::isfinite(d)) return d;
    counter->fetch_add(1, std::memory_order_relaxed);
    const double h = std::cbrt(std::numeric_limits<double>::epsilon()) *
                     std::max(1.0, std::abs(t));
    const double central = (expr.eval(t + h) - expr.eval(t - h)) / (2.0 * h);
    if (std::isfinite(central)) return central;
    const double forward =
        (-3.0 * expr.eval(t) + 4.0 * expr.eval(t + h) - expr.eval(t + 2.0 * h)) / (2.0 * h);
    if (std::isfinite(forward)) return forward;
    return (3.0 * expr.eval(t) - 4.0 * expr.eval(t - h) + expr.eval(t - 2.0 * h)) /
           (2.0 * h);
  };
  return out;
}

}  // namespace obw
