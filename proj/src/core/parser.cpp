#include "sdpabs/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "sdpabs/error.hpp"
#include "sdpabs/term.hpp"

namespace sdpabs {

namespace {

struct SExpr {
  bool is_list = false;
  std::string token;
  std::vector<SExpr> items;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    skip_space();
    while (pos_ < text_.size()) {
      out.push_back(read());
      skip_space();
    }
    return out;
  }

 private:
  SExpr read() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    SExpr node;
    node.line = line_;
    node.column = column_;
    char c = text_[pos_];
    if (c == ')') fail("unexpected ')'");
    if (c == '(') {
      advance();
      node.is_list = true;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unterminated list", node.line, node.column);
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        node.items.push_back(read());
      }
      return node;
    }
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';') break;
      node.token.push_back(d);
      advance();
    }
    return node;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, line_, column_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

[[noreturn]] void fail_at(const SExpr& e, const std::string& message) {
  throw ParseError(message, e.line, e.column);
}

bool is_keyword(const std::string& s) {
  return s == "and" || s == "or" || s == "not" || s == "true" || s == "false" || s == "+" ||
         s == "=" || s == "!=" || s == "<" || s == "<=" || s == "predicates" || s == "goal";
}

std::string symbol_of(const SExpr& e) {
  if (e.is_list) fail_at(e, "expected a symbol");
  Rational ignored;
  if (parse_rational(e.token, ignored)) fail_at(e, "expected a symbol, got number '" + e.token + "'");
  if (is_keyword(e.token)) fail_at(e, "reserved word '" + e.token + "' used as a symbol");
  if (e.token == TermTable::kZeroName)
    fail_at(e, "'" + std::string(TermTable::kZeroName) + "' is reserved for the zero variable");
  return e.token;
}

TermAst parse_term(const SExpr& e) {
  if (!e.is_list) {
    Rational value;
    if (parse_rational(e.token, value)) return TermAst::number(value);
    return TermAst::symbol(symbol_of(e));
  }
  if (e.items.empty()) fail_at(e, "empty term");
  const SExpr& head = e.items.front();
  if (head.is_list) fail_at(head, "expected a function symbol");
  if (head.token == "+") {
    if (e.items.size() != 3) fail_at(e, "'+' takes a term and a rational constant");
    const SExpr& k = e.items[2];
    Rational offset;
    if (k.is_list || !parse_rational(k.token, offset)) fail_at(k, "expected a rational constant");
    return TermAst::plus(parse_term(e.items[1]), offset);
  }
  std::string fn = symbol_of(head);
  if (e.items.size() < 2) fail_at(e, "function application needs at least one argument");
  std::vector<TermAst> args;
  for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(parse_term(e.items[i]));
  return TermAst::apply(std::move(fn), std::move(args));
}

bool relation_of(const std::string& op, Relation& out) {
  if (op == "=") out = Relation::Eq;
  else if (op == "!=") out = Relation::Ne;
  else if (op == "<") out = Relation::Lt;
  else if (op == "<=") out = Relation::Le;
  else return false;
  return true;
}

std::size_t parse_atom(const SExpr& e, Problem& problem) {
  if (!e.is_list || e.items.empty() || e.items.front().is_list) fail_at(e, "expected an atom");
  Relation rel;
  if (!relation_of(e.items.front().token, rel))
    fail_at(e.items.front(), "unknown relation '" + e.items.front().token + "'");
  if (e.items.size() != 3) fail_at(e, "an atom has exactly two terms");
  Atom atom{rel, parse_term(e.items[1]), parse_term(e.items[2])};
  return problem.add_atom(std::move(atom));
}

Formula parse_formula(const SExpr& e, Problem& problem) {
  if (!e.is_list) {
    if (e.token == "true") return Formula::truth();
    if (e.token == "false") return Formula::falsity();
    fail_at(e, "expected a formula, got '" + e.token + "'");
  }
  if (e.items.empty()) fail_at(e, "empty formula");
  const SExpr& head = e.items.front();
  if (!head.is_list) {
    if (head.token == "and" || head.token == "or") {
      if (e.items.size() < 2) fail_at(e, "'" + head.token + "' needs at least one operand");
      std::vector<Formula> children;
      for (std::size_t i = 1; i < e.items.size(); ++i) children.push_back(parse_formula(e.items[i], problem));
      return head.token == "and" ? Formula::conj(std::move(children)) : Formula::disj(std::move(children));
    }
    if (head.token == "not") {
      if (e.items.size() != 2) fail_at(e, "'not' takes exactly one operand");
      return Formula::neg(parse_formula(e.items[1], problem));
    }
  }
  return Formula::atom_of(parse_atom(e, problem));
}

bool is_block(const SExpr& e, const char* name) {
  return e.is_list && !e.items.empty() && !e.items.front().is_list && e.items.front().token == name;
}

void parse_goal_block(const SExpr& block, Problem& problem) {
  if (block.items.size() != 2) fail_at(block, "goal block holds exactly one formula");
  problem.goal = parse_formula(block.items[1], problem);
  problem.has_goal = true;
}

}  // namespace

Problem parse_problem(std::string_view text, ParseOptions options) {
  std::vector<SExpr> top = Reader(text).read_all();
  Problem problem;
  if (top.empty()) throw ParseError("empty input: expected (predicates ...)", 1, 1);
  if (!is_block(top[0], "predicates")) fail_at(top[0], "expected (predicates ...) block first");
  for (std::size_t i = 1; i < top[0].items.size(); ++i)
    problem.predicates.push_back(parse_atom(top[0].items[i], problem));

  if (top.size() >= 2) {
    if (!is_block(top[1], "goal")) fail_at(top[1], "expected (goal ...) block");
    parse_goal_block(top[1], problem);
  } else if (options.require_goal) {
    throw ParseError("missing (goal ...) block", top[0].line, top[0].column);
  }
  if (top.size() > 2) fail_at(top[2], "unexpected trailing input");

  problem.infer_theory();
  return problem;
}

void parse_goal_into(std::string_view text, Problem& problem) {
  std::vector<SExpr> top = Reader(text).read_all();
  if (top.size() != 1 || !is_block(top[0], "goal")) {
    if (top.empty()) throw ParseError("expected (goal ...) block", 1, 1);
    fail_at(top[0], "expected a single (goal ...) block");
  }
  parse_goal_block(top[0], problem);
  problem.infer_theory();
}

}  // namespace sdpabs
