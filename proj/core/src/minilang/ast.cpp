#include "capsula/minilang/ast.hpp"

namespace capsula::minilang {

const char* binop_text(BinOp op) {
  switch (op) {
  case BinOp::Add: return "+";
  case BinOp::Sub: return "-";
  case BinOp::Mul: return "*";
  case BinOp::Div: return "/";
  case BinOp::Lt: return "<";
  case BinOp::Le: return "<=";
  case BinOp::Gt: return ">";
  case BinOp::Ge: return ">=";
  case BinOp::Eq: return "==";
  case BinOp::Ne: return "!=";
  }
  return "?";
}

bool is_comparison(BinOp op) {
  switch (op) {
  case BinOp::Lt:
  case BinOp::Le:
  case BinOp::Gt:
  case BinOp::Ge:
  case BinOp::Eq:
  case BinOp::Ne:
    return true;
  default:
    return false;
  }
}

int count_statements(const Block& block) {
  int n = 0;
  for (const auto& s : block.stmts) {
    n += 1;
    if (s->kind == Stmt::Kind::If || s->kind == Stmt::Kind::For) {
      n += count_statements(s->body);
      n += count_statements(s->else_body);
    }
  }
  return n;
}

int count_statements(const Script& script) {
  int n = 0;
  for (const auto& s : script.statements) {
    n += 1;
    if (s->kind == Stmt::Kind::If || s->kind == Stmt::Kind::For) {
      n += count_statements(s->body);
      n += count_statements(s->else_body);
    }
  }
  return n;
}

namespace {

void collect_lines(const Block& block, std::vector<int>& out) {
  for (const auto& s : block.stmts) {
    out.push_back(s->line);
    if (s->kind == Stmt::Kind::If || s->kind == Stmt::Kind::For) {
      collect_lines(s->body, out);
      collect_lines(s->else_body, out);
      if (s->else_line) out.push_back(s->else_line);
      out.push_back(s->end_line);
    }
  }
}

} // namespace

std::vector<int> statement_lines(const Script& script) {
  std::vector<int> out;
  for (const auto& s : script.statements) {
    out.push_back(s->line);
    if (s->kind == Stmt::Kind::If || s->kind == Stmt::Kind::For) {
      collect_lines(s->body, out);
      collect_lines(s->else_body, out);
      if (s->else_line) out.push_back(s->else_line);
      out.push_back(s->end_line);
    }
  }
  return out;
}

} // namespace capsula::minilang
