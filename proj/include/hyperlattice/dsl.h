#ifndef HYPERLATTICE_DSL_H
#define HYPERLATTICE_DSL_H

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperlattice/lattice.h"
#include "hyperlattice/operator_expr.h"
#include "hyperlattice/scalar.h"

namespace hyperlattice {

/// Site literal "site(r; m0, m1, ...)" as written; missing scales are zero.
struct SiteLiteral {
  Rational standard;
  std::vector<long long> offsets;

  friend bool operator==(const SiteLiteral& a, const SiteLiteral& b) {
    return a.standard == b.standard && a.offsets == b.offsets;
  }
};

/// Operator-expression syntax tree. Grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' exponent)?
///   exponent:= ['-'] INT | '(' ['-'] INT ['/' INT] ')'
///   primary := INT ['/' INT] | 'd' | 'W' | 'i' | 'z' '[' INT ']' | '(' expr ')'
///            | ('A'|'Ad'|'C'|'Cd') '[' INT ']' '(' site (',' site)* [';' INT] ')'
///            | ('phi'|'phid') '[' INT ']' '(' '[' rat (',' rat)* ']' [';' INT (',' INT)*] ')'
///            | ('comm'|'acomm') '(' expr ',' expr ')' | 'vev' '(' expr ')'
///   site    := 'site' '(' ['-'] rat ';' ['-'] INT (',' ['-'] INT)* ')'
struct Ast {
  enum class Kind { number, d, w, i, zeta, generator, field, neg, add, sub, mul, pow, comm, acomm, vev };

  Kind kind = Kind::number;
  Rational value;                   // number literal, pow exponent
  int index = 0;                    // zeta order, component
  bool dagger = false;              // generator, field
  bool fermi = false;               // generator
  std::vector<SiteLiteral> sites;   // generator
  std::optional<long long> mode;    // generator
  std::vector<Rational> center;     // field
  std::vector<long long> modes;     // field
  std::vector<Ast> children;

  friend bool operator==(const Ast& a, const Ast& b);
};

/// SyntaxError with 1-based line and column on malformed input.
Ast parse(std::string_view text);

/// Canonical text; parse(print(a)) == a.
std::string print(const Ast& ast);

struct EvalContext {
  LatticeSpec spec{1, 2, {}};
  /// Used when only field atoms fix the operator type.
  Statistics statistics = Statistics::bose;
};

/// Either a scalar or a normal-ordered operator expression.
struct Value {
  std::variant<Scalar, OperatorExpr> v;

  bool is_scalar() const { return std::holds_alternative<Scalar>(v); }
  std::string str() const;
};

/// Statistics come from generator atoms (A/Ad Bose, C/Cd Fermi), dimension
/// from site and center arity. Throws StatisticsMismatch, DimensionError,
/// OutOfWindow or EvalError.
Value elaborate(const Ast& ast, const EvalContext& context = {});

Value evaluate(std::string_view text, const EvalContext& context = {});

}  // namespace hyperlattice

#endif  // HYPERLATTICE_DSL_H
