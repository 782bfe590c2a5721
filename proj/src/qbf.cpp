#include "sperner/qbf.hpp"

#include <cstdlib>
#include <sstream>

namespace sperner {

QbfFormula::QbfFormula(std::vector<Quantifier> prefix, std::vector<Clause> matrix)
    : prefix_(std::move(prefix)), matrix_(std::move(matrix)) {
  if (prefix_.empty()) {
    throw InvalidArgument("formula must quantify at least one variable");
  }
  const int n = num_vars();
  for (const Clause& clause : matrix_) {
    for (Literal lit : clause) {
      if (lit == 0 || std::abs(lit) > n) {
        throw InvalidArgument("literal " + std::to_string(lit) + " out of range 1.." +
                              std::to_string(n));
      }
    }
  }
}

bool QbfFormula::matrix_satisfied(const Prefix& assignment) const {
  for (const Clause& clause : matrix_) {
    bool sat = false;
    for (Literal lit : clause) {
      const bool value = assignment[std::abs(lit) - 1];
      if ((lit > 0) == value) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

namespace {

bool eval_from(const QbfFormula& f, Prefix& assignment) {
  const int level = static_cast<int>(assignment.size());
  if (level == f.num_vars()) return f.matrix_satisfied(assignment);
  const bool forall = f.quantifier_at(level) == Quantifier::kForall;
  for (bool bit : {false, true}) {
    assignment.push_back(bit);
    const bool value = eval_from(f, assignment);
    assignment.pop_back();
    if (forall && !value) return false;
    if (!forall && value) return true;
  }
  return forall;
}

// Splits the text into whitespace-separated tokens, remembering line numbers.
struct Token {
  std::string text;
  int line;
};

long parse_int(const Token& tok) {
  char* end = nullptr;
  const long v = std::strtol(tok.text.c_str(), &end, 10);
  if (tok.text.empty() || *end != '\0') {
    throw ParseError("expected integer, got '" + tok.text + "'", tok.line);
  }
  return v;
}

}  // namespace

bool eval_qbf(const QbfFormula& formula, const Prefix& p) {
  if (static_cast<int>(p.size()) > formula.num_vars()) {
    throw InvalidArgument("prefix longer than the number of variables");
  }
  Prefix assignment = p;
  assignment.reserve(formula.num_vars());
  return eval_from(formula, assignment);
}

QbfFormula parse_qdimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  long num_vars = 0;
  long num_clauses = 0;
  std::vector<Quantifier> prefix;
  std::vector<Clause> matrix;
  Clause current;
  bool in_matrix = false;
  int header_line = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::vector<Token> toks;
    for (std::string t; ls >> t;) toks.push_back({t, line_no});
    if (toks.empty() || toks[0].text == "c") continue;

    if (toks[0].text == "p") {
      if (have_header) throw ParseError("duplicate problem line", line_no);
      if (toks.size() != 4 || toks[1].text != "cnf") {
        throw ParseError("malformed problem line, expected 'p cnf <vars> <clauses>'", line_no);
      }
      num_vars = parse_int(toks[2]);
      num_clauses = parse_int(toks[3]);
      if (num_vars < 0 || num_clauses < 0) throw ParseError("negative count", line_no);
      have_header = true;
      header_line = line_no;
      continue;
    }
    if (!have_header) throw ParseError("missing problem line before content", line_no);

    if (toks[0].text == "a" || toks[0].text == "e") {
      if (in_matrix) throw ParseError("quantifier line after clauses", line_no);
      const Quantifier q = toks[0].text == "a" ? Quantifier::kForall : Quantifier::kExists;
      if (toks.back().text != "0") throw ParseError("quantifier line not terminated by 0", line_no);
      for (std::size_t i = 1; i + 1 < toks.size(); ++i) {
        const long v = parse_int(toks[i]);
        if (v <= 0 || v > num_vars) {
          throw ParseError("variable index " + toks[i].text + " out of range", line_no);
        }
        if (v != static_cast<long>(prefix.size()) + 1) {
          if (v <= static_cast<long>(prefix.size())) {
            throw ParseError("variable " + toks[i].text + " quantified twice", line_no);
          }
          throw ParseError("variable " + std::to_string(prefix.size() + 1) +
                               " not quantified (prefix must list variables in order)",
                           line_no);
        }
        prefix.push_back(q);
      }
      continue;
    }

    in_matrix = true;
    for (const Token& tok : toks) {
      const long lit = parse_int(tok);
      if (lit == 0) {
        matrix.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::labs(lit) > num_vars) {
        throw ParseError("variable index " + std::to_string(std::labs(lit)) + " out of range",
                         line_no);
      }
      if (std::labs(lit) > static_cast<long>(prefix.size())) {
        throw ParseError("variable " + std::to_string(std::labs(lit)) + " not quantified",
                         line_no);
      }
      current.push_back(static_cast<Literal>(lit));
    }
  }

  if (!have_header) throw ParseError("missing problem line");
  if (!current.empty()) throw ParseError("last clause not terminated by 0", line_no);
  if (static_cast<long>(prefix.size()) != num_vars) {
    throw ParseError("variable " + std::to_string(prefix.size() + 1) + " not quantified",
                     header_line);
  }
  if (static_cast<long>(matrix.size()) != num_clauses) {
    throw ParseError("problem line declares " + std::to_string(num_clauses) + " clauses, found " +
                         std::to_string(matrix.size()),
                     header_line);
  }
  if (num_vars == 0) throw ParseError("formula has no variables", header_line);
  return QbfFormula(std::move(prefix), std::move(matrix));
}

std::string to_qdimacs(const QbfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.num_vars() << ' ' << formula.matrix().size() << '\n';
  for (int v = 1; v <= formula.num_vars(); ++v) {
    out << (formula.quantifier_at(v - 1) == Quantifier::kForall ? 'a' : 'e') << ' ' << v
        << " 0\n";
  }
  for (const Clause& clause : formula.matrix()) {
    for (Literal lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

Prefix parse_prefix(std::string_view bits) {
  Prefix p;
  p.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgument("prefix must be a bit string");
    p.push_back(c == '1');
  }
  return p;
}

std::string prefix_to_string(const Prefix& p) {
  std::string s;
  s.reserve(p.size());
  for (bool b : p) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace sperner
