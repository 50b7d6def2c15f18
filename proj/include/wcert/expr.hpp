#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "wcert/jet.hpp"

namespace wcert {

enum class UnaryOp { Neg, Ln, Log2, Exp, Sin, Cos, Tan, Arctan, Arcsin, Gamma, LnGamma };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class NamedConst { Pi, E, EulerGamma };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// One node of the expression tree.  Trees are immutable after construction;
/// sharing subtrees is safe.
struct Node {
  struct Constant {
    double value;
  };
  struct Named {
    NamedConst which;
  };
  struct Variable {};
  struct Unary {
    UnaryOp op;
    NodePtr child;
  };
  struct Binary {
    BinaryOp op;
    NodePtr left;
    NodePtr right;
  };

  std::variant<Constant, Named, Variable, Unary, Binary> data;
};

const char* unary_name(UnaryOp op);
const char* binary_name(BinaryOp op);
const char* named_const_name(NamedConst c);
double named_const_value(NamedConst c);

/// A parsed one-variable function f.  Evaluation is pure; instances can be
/// shared across threads freely.
class Expression {
public:
  Expression() = default;

  /// Grammar: infix + - * / ^ with standard precedence, right-associative ^,
  /// parentheses, function application name(arg), identifiers x, pi, e,
  /// euler_gamma.  Whitespace-insensitive.  Throws SyntaxError or
  /// UnknownIdentifierError.
  static Expression parse(std::string_view text);

  /// Canonical text form; parsing it reproduces the identical tree.
  std::string str() const;

  double eval_point(double x) const;
  Jet2 eval_jet2(double x) const;
  Interval eval_interval(const Interval& x) const;
  IntervalJet2 eval_jet2_interval(const Interval& x) const;

  bool uses_variable() const;
  const NodePtr& root() const { return root_; }
  bool valid() const { return root_ != nullptr; }

  friend bool operator==(const Expression& a, const Expression& b);

private:
  explicit Expression(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;
};

/// Structural equality of trees (constants compare by value).
bool structurally_equal(const Node& a, const Node& b);

std::string format_double(double v);

}  // namespace wcert
