#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace capsula::minilang {

enum class BinOp { Add, Sub, Mul, Div, Lt, Le, Gt, Ge, Eq, Ne };

const char* binop_text(BinOp op);
bool is_comparison(BinOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind { Number, Text, Boolean, Var, Neg, Binary, Call };

  Kind kind = Kind::Number;
  int line = 0;
  double number = 0.0;
  bool truth = false;
  std::string name;          // Var name, Text literal payload, or callee
  std::string ns;            // Call only; empty for builtins
  BinOp op = BinOp::Add;     // Binary only
  ExprPtr lhs;               // Binary
  ExprPtr rhs;               // Binary, Neg
  std::vector<ExprPtr> args; // Call
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Block {
  std::vector<StmtPtr> stmts;
};

struct Stmt {
  enum class Kind { Assign, Call, If, For };

  Kind kind = Kind::Assign;
  int line = 0;         // header line (1-based)
  std::string target;   // Assign target / For loop variable
  ExprPtr expr;         // Assign rhs / Call expression / If condition / For iterable
  Block body;           // If then-branch / For body
  Block else_body;      // If only
  bool has_else = false;
  int else_line = 0;    // line of "} else {"
  int end_line = 0;     // line of the closing "}"
};

struct Script {
  std::string source;
  std::vector<StmtPtr> statements;
  std::vector<std::string> lines; // source split on '\n', index 0 = line 1
};

/// Total number of statement nodes, counting If/For headers and their
/// nested bodies.
int count_statements(const Script& script);
int count_statements(const Block& block);

/// Every line number that carries a statement header or structural brace.
std::vector<int> statement_lines(const Script& script);

} // namespace capsula::minilang
