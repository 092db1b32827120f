#include "hyperlattice/dsl.h"

#include <cctype>
#include <set>

#include "hyperlattice/errors.h"
#include "hyperlattice/fields.h"

namespace hyperlattice {

bool operator==(const Ast& a, const Ast& b) {
  return a.kind == b.kind && a.value == b.value && a.index == b.index && a.dagger == b.dagger && a.fermi == b.fermi &&
         a.sites == b.sites && a.mode == b.mode && a.center == b.center && a.modes == b.modes &&
         a.children == b.children;
}

namespace {

// ---------------------------------------------------------------- lexer

struct Token {
  enum class Type { integer, ident, symbol, end };
  Type type = Type::end;
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  const auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    std::size_t j = i;
    if (std::isdigit(c)) {
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.type = Token::Type::integer;
    } else if (std::isalpha(c)) {
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      t.type = Token::Type::ident;
    } else if (std::string_view("+-*/^()[],;").find(static_cast<char>(c)) != std::string_view::npos) {
      j = i + 1;
      t.type = Token::Type::symbol;
    } else {
      throw SyntaxError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, column);
    }
    t.text = std::string(s.substr(i, j - i));
    out.push_back(std::move(t));
    advance(j - i);
  }
  Token end;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Ast parse_all() {
    Ast a = expr();
    if (peek().type != Token::Type::end) fail("unexpected '" + peek().text + "'");
    return a;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_symbol(char c) const { return peek().type == Token::Type::symbol && peek().text[0] == c; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw SyntaxError(t.type == Token::Type::end ? what + " at end of input" : what, t.line, t.column);
  }

  void expect(char c) {
    if (!at_symbol(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    if (!at_symbol(c)) return false;
    ++pos_;
    return true;
  }

  Integer integer() {
    if (peek().type != Token::Type::integer) fail("expected an integer");
    return Integer(tokens_[pos_++].text);
  }

  long long small_integer() {
    const Token& t = peek();
    const Integer v = integer();
    if (!v.fits_slong_p()) throw SyntaxError("integer out of range", t.line, t.column);
    return v.get_si();
  }

  long long signed_integer() {
    const bool negative = accept('-');
    const long long v = small_integer();
    return negative ? -v : v;
  }

  Rational rational() {
    const Token& t = peek();
    Rational q(integer());
    if (accept('/')) {
      const Integer den = integer();
      if (den == 0) throw SyntaxError("zero denominator", t.line, t.column);
      q /= den;
    }
    q.canonicalize();
    return q;
  }

  Rational signed_rational() {
    const bool negative = accept('-');
    const Rational q = rational();
    return negative ? Rational(-q) : q;
  }

  int index() {
    expect('[');
    const Token& t = peek();
    const long long v = small_integer();
    if (v < 1 || v > 1'000'000) throw SyntaxError("index must be a positive integer", t.line, t.column);
    expect(']');
    return static_cast<int>(v);
  }

  Ast expr() {
    Ast left = term();
    while (at_symbol('+') || at_symbol('-')) {
      const bool plus = tokens_[pos_++].text[0] == '+';
      Ast node;
      node.kind = plus ? Ast::Kind::add : Ast::Kind::sub;
      node.children = {std::move(left), term()};
      left = std::move(node);
    }
    return left;
  }

  Ast term() {
    Ast left = unary();
    while (accept('*')) {
      Ast node;
      node.kind = Ast::Kind::mul;
      node.children = {std::move(left), unary()};
      left = std::move(node);
    }
    return left;
  }

  Ast unary() {
    if (accept('-')) {
      Ast node;
      node.kind = Ast::Kind::neg;
      node.children = {unary()};
      return node;
    }
    return power();
  }

  Ast power() {
    Ast base = primary();
    if (!accept('^')) return base;
    Ast node;
    node.kind = Ast::Kind::pow;
    if (accept('(')) {
      node.value = signed_rational();
      expect(')');
    } else {
      node.value = to_rational(signed_integer());
    }
    node.children = {std::move(base)};
    return node;
  }

  SiteLiteral site() {
    if (peek().type != Token::Type::ident || peek().text != "site") fail("expected 'site'");
    ++pos_;
    expect('(');
    SiteLiteral s;
    s.standard = signed_rational();
    expect(';');
    s.offsets.push_back(signed_integer());
    while (accept(',')) s.offsets.push_back(signed_integer());
    expect(')');
    return s;
  }

  Ast primary() {
    const Token& t = peek();
    Ast node;
    if (t.type == Token::Type::integer) {
      node.kind = Ast::Kind::number;
      node.value = rational();
      return node;
    }
    if (accept('(')) {
      node = expr();
      expect(')');
      return node;
    }
    if (t.type != Token::Type::ident) fail(t.type == Token::Type::end ? "expected an operand" : "unexpected '" + t.text + "'");
    const std::string name = t.text;
    ++pos_;
    if (name == "d") {
      node.kind = Ast::Kind::d;
    } else if (name == "W") {
      node.kind = Ast::Kind::w;
    } else if (name == "i") {
      node.kind = Ast::Kind::i;
    } else if (name == "z") {
      node.kind = Ast::Kind::zeta;
      node.index = index();
    } else if (name == "A" || name == "Ad" || name == "C" || name == "Cd") {
      node.kind = Ast::Kind::generator;
      node.fermi = name[0] == 'C';
      node.dagger = name.size() == 2;
      node.index = index();
      expect('(');
      node.sites.push_back(site());
      while (accept(',')) node.sites.push_back(site());
      if (accept(';')) node.mode = signed_integer();
      expect(')');
    } else if (name == "phi" || name == "phid") {
      node.kind = Ast::Kind::field;
      node.dagger = name == "phid";
      node.index = index();
      expect('(');
      expect('[');
      node.center.push_back(signed_rational());
      while (accept(',')) node.center.push_back(signed_rational());
      expect(']');
      if (accept(';')) {
        node.modes.push_back(signed_integer());
        while (accept(',')) node.modes.push_back(signed_integer());
      }
      expect(')');
    } else if (name == "comm" || name == "acomm") {
      node.kind = name == "comm" ? Ast::Kind::comm : Ast::Kind::acomm;
      expect('(');
      node.children.push_back(expr());
      expect(',');
      node.children.push_back(expr());
      expect(')');
    } else if (name == "vev") {
      node.kind = Ast::Kind::vev;
      expect('(');
      node.children.push_back(expr());
      expect(')');
    } else {
      throw SyntaxError("unknown identifier '" + name + "'", t.line, t.column);
    }
    return node;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- printer

int precedence(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::add:
    case Ast::Kind::sub:
      return 1;
    case Ast::Kind::mul:
      return 2;
    case Ast::Kind::neg:
      return 3;
    default:
      return 4;
  }
}

std::string wrap(const Ast& a, bool parens) {
  const std::string s = print(a);
  return parens ? "(" + s + ")" : s;
}

std::string join(const std::vector<long long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out;
}

// ---------------------------------------------------------------- elaboration

struct Shape {
  std::set<bool> fermi;
  std::set<std::size_t> axes;
};

void collect(const Ast& a, Shape& shape) {
  if (a.kind == Ast::Kind::generator) {
    shape.fermi.insert(a.fermi);
    shape.axes.insert(a.sites.size());
  } else if (a.kind == Ast::Kind::field) {
    shape.axes.insert(a.center.size());
  }
  for (const auto& c : a.children) collect(c, shape);
}

using Raw = std::variant<Scalar, OperatorExpr>;

class Elaborator {
 public:
  Elaborator(const EvalContext& context, Statistics statistics, int dimension)
      : ctx_(context), statistics_(statistics), dimension_(dimension) {}

  Raw eval(const Ast& a) {
    switch (a.kind) {
      case Ast::Kind::number:
        return Scalar(a.value);
      case Ast::Kind::d:
        return Scalar(Hyper::delta(1, ctx_.spec.window));
      case Ast::Kind::w:
        return Scalar::sqrt_w_power(ctx_.spec.size(), 2);
      case Ast::Kind::i:
        return Scalar(Cyclotomic::imaginary_unit());
      case Ast::Kind::zeta:
        return Scalar(Cyclotomic::zeta(a.index));
      case Ast::Kind::generator:
        return generator(a);
      case Ast::Kind::field:
        return field(a);
      case Ast::Kind::neg:
        return scale(eval(a.children[0]), Scalar(-1));
      case Ast::Kind::add:
      case Ast::Kind::sub: {
        Raw x = eval(a.children[0]);
        Raw y = eval(a.children[1]);
        if (a.kind == Ast::Kind::sub) y = scale(std::move(y), Scalar(-1));
        if (is_scalar(x) && is_scalar(y)) return std::get<Scalar>(x) + std::get<Scalar>(y);
        return as_op(x) + as_op(y);
      }
      case Ast::Kind::mul: {
        const Raw x = eval(a.children[0]);
        const Raw y = eval(a.children[1]);
        if (is_scalar(x) && is_scalar(y)) return std::get<Scalar>(x) * std::get<Scalar>(y);
        if (is_scalar(x)) return std::get<OperatorExpr>(y) * std::get<Scalar>(x);
        if (is_scalar(y)) return std::get<OperatorExpr>(x) * std::get<Scalar>(y);
        return multiply(std::get<OperatorExpr>(x), std::get<OperatorExpr>(y));
      }
      case Ast::Kind::pow:
        return power(a);
      case Ast::Kind::comm:
      case Ast::Kind::acomm: {
        const Raw x = eval(a.children[0]);
        const Raw y = eval(a.children[1]);
        if (is_scalar(x) && is_scalar(y)) {
          if (a.kind == Ast::Kind::comm) return Scalar();
          return Scalar(2) * std::get<Scalar>(x) * std::get<Scalar>(y);
        }
        return a.kind == Ast::Kind::comm ? commutator(as_op(x), as_op(y)) : anticommutator(as_op(x), as_op(y));
      }
      case Ast::Kind::vev: {
        const Raw x = eval(a.children[0]);
        if (is_scalar(x)) return x;
        return vacuum_expectation(std::get<OperatorExpr>(x));
      }
    }
    throw EvalError("unhandled syntax node");
  }

  OperatorExpr as_op(const Raw& r) const {
    if (const auto* s = std::get_if<Scalar>(&r)) return OperatorExpr::constant(*s, statistics_, dimension_);
    return std::get<OperatorExpr>(r);
  }

 private:
  static bool is_scalar(const Raw& r) { return std::holds_alternative<Scalar>(r); }

  static Raw scale(Raw r, const Scalar& s) {
    if (auto* x = std::get_if<Scalar>(&r)) return *x * s;
    return std::get<OperatorExpr>(r) * s;
  }

  Raw generator(const Ast& a) const {
    Point p;
    for (const auto& s : a.sites) {
      if (static_cast<int>(s.offsets.size()) > ctx_.spec.depth) {
        throw DimensionError("site has " + std::to_string(s.offsets.size()) + " scale offsets, depth is " +
                             std::to_string(ctx_.spec.depth));
      }
      std::vector<long long> m = s.offsets;
      m.resize(static_cast<std::size_t>(ctx_.spec.depth), 0);
      p.emplace_back(s.standard, std::move(m));
    }
    std::optional<int> mode;
    if (a.mode) mode = static_cast<int>(*a.mode);
    return OperatorExpr::generator(Generator{a.index, std::move(p), mode, a.dagger}, statistics_, dimension_);
  }

  Raw field(const Ast& a) const {
    if (!a.modes.empty() && a.modes.size() != a.center.size()) {
      throw DimensionError("field needs one mode per axis");
    }
    std::vector<int> modes;
    for (long long k : a.modes) {
      if (k < -ctx_.spec.half_width || k > ctx_.spec.half_width) {
        throw OutOfWindow("mode " + std::to_string(k) + " outside the window");
      }
      modes.push_back(static_cast<int>(k));
    }
    const MonadField f = a.dagger ? phid(a.center, a.index, modes) : phi(a.center, a.index, modes);
    return expand(f, ctx_.spec, statistics_);
  }

  Raw power(const Ast& a) {
    const Ast& base = a.children[0];
    const Rational& e = a.value;
    if (base.kind == Ast::Kind::w) {
      const Rational twice = 2 * e;
      if (twice.get_den() != 1 || !twice.get_num().fits_sint_p()) throw EvalError("W takes half-integer powers");
      return Scalar::sqrt_w_power(ctx_.spec.size(), static_cast<int>(twice.get_num().get_si()));
    }
    if (e.get_den() != 1 || !e.get_num().fits_sint_p()) throw EvalError("exponent must be an integer");
    const long k = e.get_num().get_si();
    if (base.kind == Ast::Kind::d) return Scalar(Hyper::delta(static_cast<int>(k), ctx_.spec.window));
    if (base.kind == Ast::Kind::i || base.kind == Ast::Kind::zeta) {
      const long n = base.kind == Ast::Kind::i ? 4 : base.index;
      return Scalar(Cyclotomic::zeta(static_cast<int>(n), ((k % n) + n) % n));
    }
    if (k < 0) throw EvalError("negative powers are defined only for d, W, i and z[n]");
    const Raw x = eval(base);
    if (is_scalar(x)) {
      Scalar out(1);
      for (long j = 0; j < k; ++j) out = out * std::get<Scalar>(x);
      return out;
    }
    OperatorExpr out = OperatorExpr::constant(Scalar(1), statistics_, dimension_);
    for (long j = 0; j < k; ++j) out = multiply(out, std::get<OperatorExpr>(x));
    return out;
  }

  const EvalContext& ctx_;
  Statistics statistics_;
  int dimension_;
};

}  // namespace

Ast parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::number:
      return to_string(a.value);
    case Ast::Kind::d:
      return "d";
    case Ast::Kind::w:
      return "W";
    case Ast::Kind::i:
      return "i";
    case Ast::Kind::zeta:
      return "z[" + std::to_string(a.index) + "]";
    case Ast::Kind::generator: {
      std::string out = std::string(a.fermi ? "C" : "A") + (a.dagger ? "d" : "") + "[" + std::to_string(a.index) + "](";
      for (std::size_t i = 0; i < a.sites.size(); ++i) {
        out += (i ? ", site(" : "site(") + to_string(a.sites[i].standard) + "; " + join(a.sites[i].offsets) + ")";
      }
      if (a.mode) out += "; " + std::to_string(*a.mode);
      return out + ")";
    }
    case Ast::Kind::field: {
      std::string out = std::string(a.dagger ? "phid" : "phi") + "[" + std::to_string(a.index) + "]([";
      for (std::size_t i = 0; i < a.center.size(); ++i) out += (i ? ", " : "") + to_string(a.center[i]);
      out += "]";
      if (!a.modes.empty()) out += "; " + join(a.modes);
      return out + ")";
    }
    case Ast::Kind::neg:
      return "-" + wrap(a.children[0], precedence(a.children[0]) < 3);
    case Ast::Kind::add:
    case Ast::Kind::sub:
      return print(a.children[0]) + (a.kind == Ast::Kind::add ? " + " : " - ") +
             wrap(a.children[1], precedence(a.children[1]) <= 1);
    case Ast::Kind::mul:
      return wrap(a.children[0], precedence(a.children[0]) < 2) + "*" +
             wrap(a.children[1], precedence(a.children[1]) <= 2);
    case Ast::Kind::pow: {
      const Ast& base = a.children[0];
      const bool parens = precedence(base) < 4 || (base.kind == Ast::Kind::number && base.value.get_den() != 1);
      std::string e = to_string(a.value);
      if (a.value.get_den() != 1) e = "(" + e + ")";
      return wrap(base, parens) + "^" + e;
    }
    case Ast::Kind::comm:
    case Ast::Kind::acomm:
      return std::string(a.kind == Ast::Kind::comm ? "comm(" : "acomm(") + print(a.children[0]) + ", " +
             print(a.children[1]) + ")";
    case Ast::Kind::vev:
      return "vev(" + print(a.children[0]) + ")";
  }
  return {};
}

std::string Value::str() const {
  if (const auto* s = std::get_if<Scalar>(&v)) return s->str();
  return std::get<OperatorExpr>(v).str();
}

Value elaborate(const Ast& ast, const EvalContext& context) {
  context.spec.validate();
  Shape shape;
  collect(ast, shape);
  if (shape.fermi.size() > 1) throw StatisticsMismatch("expression mixes Bose and Fermi generators");
  if (shape.axes.size() > 1) throw DimensionError("atoms disagree on the number of space axes");
  const Statistics statistics =
      shape.fermi.empty() ? context.statistics : (*shape.fermi.begin() ? Statistics::fermi : Statistics::bose);
  const int dimension = shape.axes.empty() ? 1 : static_cast<int>(*shape.axes.begin());
  Elaborator e(context, statistics, dimension);
  Raw r = e.eval(ast);
  if (auto* op = std::get_if<OperatorExpr>(&r)) return Value{normal_order(*op)};
  return Value{std::get<Scalar>(r)};
}

Value evaluate(std::string_view text, const EvalContext& context) { return elaborate(parse(text), context); }

}  // namespace hyperlattice
