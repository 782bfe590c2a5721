#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sperner/error.hpp"

namespace sperner {

enum class Quantifier : std::uint8_t { kForall, kExists };

/// A literal is a non-zero signed variable index: +v for x_v, -v for its negation.
using Literal = int;
using Clause = std::vector<Literal>;

/// Assignment to a leading block of variables, bits[i] is the value of x_{i+1}.
using Prefix = std::vector<bool>;

/// Prenex, closed QBF with a CNF matrix: Q_1 x_1 ... Q_n x_n . (C_1 and ... and C_k).
///
/// Instances are immutable once constructed; the constructor validates that the
/// formula is closed and that the prefix covers exactly x_1..x_n.
class QbfFormula {
 public:
  QbfFormula(std::vector<Quantifier> prefix, std::vector<Clause> matrix);

  int num_vars() const { return static_cast<int>(prefix_.size()); }
  const std::vector<Quantifier>& prefix() const { return prefix_; }
  const std::vector<Clause>& matrix() const { return matrix_; }

  /// Quantifier of x_{level+1}; valid for 0 <= level < num_vars().
  Quantifier quantifier_at(int level) const { return prefix_.at(level); }

  /// CNF evaluation under a full assignment (size == num_vars()).
  bool matrix_satisfied(const Prefix& assignment) const;

  friend bool operator==(const QbfFormula&, const QbfFormula&) = default;

 private:
  std::vector<Quantifier> prefix_;
  std::vector<Clause> matrix_;
};

/// Parses QDIMACS text. Quantifier blocks are flattened in declared order and
/// must declare x_1..x_n in increasing order, each exactly once.
QbfFormula parse_qdimacs(std::string_view text);

/// Canonical QDIMACS: one quantifier line per variable, clauses in input order.
std::string to_qdimacs(const QbfFormula& formula);

/// Truth value of the subformula obtained by fixing x_1..x_|p| to p.
/// An empty prefix decides the formula itself.
bool eval_qbf(const QbfFormula& formula, const Prefix& p);

/// Parses a bit string such as "0110" into a Prefix.
Prefix parse_prefix(std::string_view bits);
std::string prefix_to_string(const Prefix& p);

}  // namespace sperner
