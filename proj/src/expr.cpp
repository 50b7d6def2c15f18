#include "wcert/expr.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <optional>

namespace wcert {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;
constexpr double kEulerGamma = 0.57721566490153286061;

struct FunctionEntry {
  const char* name;
  UnaryOp op;
};

constexpr std::array<FunctionEntry, 10> kFunctions = {{
    {"ln", UnaryOp::Ln},
    {"log2", UnaryOp::Log2},
    {"exp", UnaryOp::Exp},
    {"sin", UnaryOp::Sin},
    {"cos", UnaryOp::Cos},
    {"tan", UnaryOp::Tan},
    {"arctan", UnaryOp::Arctan},
    {"arcsin", UnaryOp::Arcsin},
    {"gamma", UnaryOp::Gamma},
    {"lngamma", UnaryOp::LnGamma},
}};

std::optional<UnaryOp> lookup_function(std::string_view name) {
  for (const auto& f : kFunctions)
    if (name == f.name) return f.op;
  return std::nullopt;
}

NodePtr make_constant(double v) { return std::make_shared<Node>(Node{Node::Constant{v}}); }
NodePtr make_named(NamedConst c) { return std::make_shared<Node>(Node{Node::Named{c}}); }
NodePtr make_variable() { return std::make_shared<Node>(Node{Node::Variable{}}); }
NodePtr make_unary(UnaryOp op, NodePtr child) {
  return std::make_shared<Node>(Node{Node::Unary{op, std::move(child)}});
}
NodePtr make_binary(BinaryOp op, NodePtr l, NodePtr r) {
  return std::make_shared<Node>(Node{Node::Binary{op, std::move(l), std::move(r)}});
}

// ---------------------------------------------------------------------------
// Lexing / parsing
// ---------------------------------------------------------------------------

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;  // 0-based byte offset of the first character
  std::string_view text;
  double value = 0.0;
};

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  NodePtr parse() {
    NodePtr e = additive();
    expect(Tok::End, "an operator or end of input");
    return e;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  Token cur_;

  [[noreturn]] void fail(std::size_t pos, const std::string& expected) {
    std::string found = cur_.kind == Tok::End
                            ? "end of input"
                            : "'" + std::string(cur_.text) + "'";
    throw SyntaxError(pos + 1, expected,
                      "syntax error at column " + std::to_string(pos + 1) + ": expected " +
                          expected + ", found " + found);
  }

  void expect(Tok kind, const std::string& expected) {
    if (cur_.kind != kind) fail(cur_.pos, expected);
  }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    cur_ = Token{};
    cur_.pos = pos_;
    if (pos_ >= text_.size()) {
      cur_.kind = Tok::End;
      return;
    }
    char c = text_[pos_];
    auto single = [&](Tok k) {
      cur_.kind = k;
      cur_.text = text_.substr(pos_, 1);
      ++pos_;
    };
    switch (c) {
      case '+': single(Tok::Plus); return;
      case '-': single(Tok::Minus); return;
      case '*': single(Tok::Star); return;
      case '/': single(Tok::Slash); return;
      case '^': single(Tok::Caret); return;
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      lex_number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      cur_.kind = Tok::Ident;
      cur_.text = text_.substr(start, pos_ - start);
      return;
    }
    cur_.text = text_.substr(pos_, 1);
    fail(pos_, "a number, identifier, operator or parenthesis");
  }

  void lex_number() {
    std::size_t start = pos_;
    bool digits = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      digits = true;
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        digits = true;
      }
    }
    if (!digits) fail(start, "a number");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // not an exponent after all ("2e" would otherwise eat the 'e')
      }
    }
    cur_.kind = Tok::Number;
    cur_.text = text_.substr(start, pos_ - start);
    std::string buf(cur_.text);
    cur_.value = std::strtod(buf.c_str(), nullptr);
  }

  NodePtr additive() {
    NodePtr left = multiplicative();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      BinaryOp op = cur_.kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub;
      advance();
      left = make_binary(op, std::move(left), multiplicative());
    }
    return left;
  }

  NodePtr multiplicative() {
    NodePtr left = unary();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      BinaryOp op = cur_.kind == Tok::Star ? BinaryOp::Mul : BinaryOp::Div;
      advance();
      left = make_binary(op, std::move(left), unary());
    }
    return left;
  }

  NodePtr unary() {
    if (cur_.kind == Tok::Minus) {
      advance();
      return make_unary(UnaryOp::Neg, unary());
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (cur_.kind == Tok::Caret) {
      advance();
      return make_binary(BinaryOp::Pow, std::move(base), unary());  // right-associative
    }
    return base;
  }

  NodePtr atom() {
    switch (cur_.kind) {
      case Tok::Number: {
        Token t = take();
        return make_constant(t.value);
      }
      case Tok::LParen: {
        advance();
        NodePtr e = additive();
        expect(Tok::RParen, "')'");
        advance();
        return e;
      }
      case Tok::Ident: {
        Token t = take();
        if (auto fn = lookup_function(t.text)) {
          if (cur_.kind != Tok::LParen)
            fail(cur_.pos, "'(' after function name '" + std::string(t.text) + "'");
          advance();
          NodePtr arg = additive();
          expect(Tok::RParen, "')'");
          advance();
          return make_unary(*fn, std::move(arg));
        }
        if (t.text == "x") return make_variable();
        if (t.text == "pi") return make_named(NamedConst::Pi);
        if (t.text == "e") return make_named(NamedConst::E);
        if (t.text == "euler_gamma") return make_named(NamedConst::EulerGamma);
        throw UnknownIdentifierError(t.pos + 1, std::string(t.text),
                                     "unknown identifier '" + std::string(t.text) +
                                         "' at column " + std::to_string(t.pos + 1));
      }
      default:
        fail(cur_.pos, "a number, identifier or '('");
    }
  }
};

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

int precedence(const Node& n) {
  return std::visit(overloaded{
                        [](const Node::Constant&) { return 5; },
                        [](const Node::Named&) { return 5; },
                        [](const Node::Variable&) { return 5; },
                        [](const Node::Unary& u) { return u.op == UnaryOp::Neg ? 3 : 5; },
                        [](const Node::Binary& b) {
                          switch (b.op) {
                            case BinaryOp::Add:
                            case BinaryOp::Sub: return 1;
                            case BinaryOp::Mul:
                            case BinaryOp::Div: return 2;
                            case BinaryOp::Pow: return 4;
                          }
                          return 5;
                        },
                    },
                    n.data);
}

void print_node(const Node& n, std::string& out);

void print_child(const Node& child, std::string& out, bool parens) {
  if (parens) out += '(';
  print_node(child, out);
  if (parens) out += ')';
}

void print_node(const Node& n, std::string& out) {
  std::visit(overloaded{
                 [&](const Node::Constant& c) { out += format_double(c.value); },
                 [&](const Node::Named& c) { out += named_const_name(c.which); },
                 [&](const Node::Variable&) { out += 'x'; },
                 [&](const Node::Unary& u) {
                   if (u.op == UnaryOp::Neg) {
                     out += '-';
                     print_child(*u.child, out, precedence(*u.child) <= 3);
                   } else {
                     out += unary_name(u.op);
                     out += '(';
                     print_node(*u.child, out);
                     out += ')';
                   }
                 },
                 [&](const Node::Binary& b) {
                   int prec = precedence(n);
                   if (b.op == BinaryOp::Pow) {
                     print_child(*b.left, out, precedence(*b.left) <= prec);
                     out += binary_name(b.op);
                     print_child(*b.right, out, precedence(*b.right) < prec);
                   } else {
                     print_child(*b.left, out, precedence(*b.left) < prec);
                     out += ' ';
                     out += binary_name(b.op);
                     out += ' ';
                     print_child(*b.right, out, precedence(*b.right) <= prec);
                   }
                 },
             },
             n.data);
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

template <class T>
T named_value(double approx) {
  if constexpr (std::is_same_v<T, double>) {
    return approx;
  } else if constexpr (std::is_same_v<T, Interval>) {
    return Interval::around(approx);
  } else if constexpr (std::is_same_v<T, Jet2>) {
    return Jet2(approx);
  } else {
    return IntervalJet2(Interval::around(approx), Interval(0.0), Interval(0.0));
  }
}

void check_finite(double v, const char* op) {
  if (!std::isfinite(v)) throw DomainError(op, v, std::string(op) + ": result is not finite");
}
void check_finite(const Jet2& j, const char* op) {
  check_finite(j.v, op);
  check_finite(j.d1, op);
  check_finite(j.d2, op);
}
void check_finite(const Interval&, const char*) {}
void check_finite(const IntervalJet2&, const char*) {}

std::optional<long> integer_exponent(const Node& n) {
  if (const auto* c = std::get_if<Node::Constant>(&n.data)) {
    double v = c->value;
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) <= 1e6)
      return static_cast<long>(v);
  }
  return std::nullopt;
}

template <class T>
T apply_unary(UnaryOp op, const T& a) {
  switch (op) {
    case UnaryOp::Neg: return -a;
    case UnaryOp::Ln: return op_log(a);
    case UnaryOp::Log2: return op_log2(a);
    case UnaryOp::Exp: return op_exp(a);
    case UnaryOp::Sin: return op_sin(a);
    case UnaryOp::Cos: return op_cos(a);
    case UnaryOp::Tan: return op_tan(a);
    case UnaryOp::Arctan: return op_atan(a);
    case UnaryOp::Arcsin: return op_asin(a);
    case UnaryOp::Gamma: return op_gamma(a);
    case UnaryOp::LnGamma: return op_lngamma(a);
  }
  throw Error(ErrorCode::Internal, "unhandled unary operator");
}

template <class T>
T eval_node(const Node& n, const T& x) {
  return std::visit(
      overloaded{
          [&](const Node::Constant& c) -> T { return T(c.value); },
          [&](const Node::Named& c) -> T { return named_value<T>(named_const_value(c.which)); },
          [&](const Node::Variable&) -> T { return x; },
          [&](const Node::Unary& u) -> T {
            T r = apply_unary(u.op, eval_node(*u.child, x));
            check_finite(r, unary_name(u.op));
            return r;
          },
          [&](const Node::Binary& b) -> T {
            if (b.op == BinaryOp::Pow) {
              if (auto k = integer_exponent(*b.right)) {
                T r = op_pow_int(eval_node(*b.left, x), *k);
                check_finite(r, "pow");
                return r;
              }
            }
            T lhs = eval_node(*b.left, x);
            T rhs = eval_node(*b.right, x);
            T r = [&] {
              switch (b.op) {
                case BinaryOp::Add: return lhs + rhs;
                case BinaryOp::Sub: return lhs - rhs;
                case BinaryOp::Mul: return lhs * rhs;
                case BinaryOp::Div: return op_div(lhs, rhs);
                case BinaryOp::Pow: return op_pow(lhs, rhs);
              }
              throw Error(ErrorCode::Internal, "unhandled binary operator");
            }();
            check_finite(r, binary_name(b.op));
            return r;
          },
      },
      n.data);
}

bool node_uses_variable(const Node& n) {
  return std::visit(overloaded{
                        [](const Node::Constant&) { return false; },
                        [](const Node::Named&) { return false; },
                        [](const Node::Variable&) { return true; },
                        [](const Node::Unary& u) { return node_uses_variable(*u.child); },
                        [](const Node::Binary& b) {
                          return node_uses_variable(*b.left) || node_uses_variable(*b.right);
                        },
                    },
                    n.data);
}

}  // namespace

const char* unary_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg: return "neg";
    case UnaryOp::Ln: return "ln";
    case UnaryOp::Log2: return "log2";
    case UnaryOp::Exp: return "exp";
    case UnaryOp::Sin: return "sin";
    case UnaryOp::Cos: return "cos";
    case UnaryOp::Tan: return "tan";
    case UnaryOp::Arctan: return "arctan";
    case UnaryOp::Arcsin: return "arcsin";
    case UnaryOp::Gamma: return "gamma";
    case UnaryOp::LnGamma: return "lngamma";
  }
  return "?";
}

const char* binary_name(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Pow: return "^";
  }
  return "?";
}

const char* named_const_name(NamedConst c) {
  switch (c) {
    case NamedConst::Pi: return "pi";
    case NamedConst::E: return "e";
    case NamedConst::EulerGamma: return "euler_gamma";
  }
  return "?";
}

double named_const_value(NamedConst c) {
  switch (c) {
    case NamedConst::Pi: return kPi;
    case NamedConst::E: return kE;
    case NamedConst::EulerGamma: return kEulerGamma;
  }
  return 0.0;
}

std::string format_double(double v) {
  char buf[40];
  for (int prec : {15, 16, 17}) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

Expression Expression::parse(std::string_view text) {
  if (text.empty()) throw SyntaxError(1, "an expression", "syntax error: empty input");
  Parser p(text);
  return Expression(p.parse());
}

std::string Expression::str() const {
  if (!root_) return "";
  std::string out;
  print_node(*root_, out);
  return out;
}

double Expression::eval_point(double x) const {
  if (!std::isfinite(x)) throw DomainError("eval", x, "evaluation point is not finite");
  return eval_node<double>(*root_, x);
}

Jet2 Expression::eval_jet2(double x) const {
  if (!std::isfinite(x)) throw DomainError("eval", x, "evaluation point is not finite");
  return eval_node<Jet2>(*root_, Jet2::variable(x));
}

Interval Expression::eval_interval(const Interval& x) const {
  return eval_node<Interval>(*root_, x);
}

IntervalJet2 Expression::eval_jet2_interval(const Interval& x) const {
  return eval_node<IntervalJet2>(*root_, IntervalJet2::variable(x));
}

bool Expression::uses_variable() const { return root_ && node_uses_variable(*root_); }

bool structurally_equal(const Node& a, const Node& b) {
  if (a.data.index() != b.data.index()) return false;
  return std::visit(
      overloaded{
          [&](const Node::Constant& c) {
            return c.value == std::get<Node::Constant>(b.data).value;
          },
          [&](const Node::Named& c) { return c.which == std::get<Node::Named>(b.data).which; },
          [&](const Node::Variable&) { return true; },
          [&](const Node::Unary& u) {
            const auto& o = std::get<Node::Unary>(b.data);
            return u.op == o.op && structurally_equal(*u.child, *o.child);
          },
          [&](const Node::Binary& bin) {
            const auto& o = std::get<Node::Binary>(b.data);
            return bin.op == o.op && structurally_equal(*bin.left, *o.left) &&
                   structurally_equal(*bin.right, *o.right);
          },
      },
      a.data);
}

bool operator==(const Expression& a, const Expression& b) {
  if (!a.root_ || !b.root_) return a.root_ == b.root_;
  return structurally_equal(*a.root_, *b.root_);
}

}  // namespace wcert
