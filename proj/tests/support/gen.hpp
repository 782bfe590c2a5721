#pragma once

// Small property-testing kit: seeded generators, a for_all driver that reports
// the failing seed and case, and the exhaustive formula family.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sperner/qbf.hpp"

namespace gen {

using sperner::Clause;
using sperner::Quantifier;
using sperner::QbfFormula;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

inline std::vector<Quantifier> random_prefix(Rng& rng, int n) {
  std::vector<Quantifier> q(static_cast<std::size_t>(n));
  for (auto& v : q) v = rng.coin() ? Quantifier::kForall : Quantifier::kExists;
  return q;
}

// Random CNF over n variables: up to `max_clauses` clauses of width 1..max_width
// with distinct variables per clause.
inline QbfFormula random_formula(Rng& rng, int n, int max_clauses, int max_width) {
  std::vector<Clause> matrix;
  const int k = rng.uniform(0, max_clauses);
  for (int c = 0; c < k; ++c) {
    const int width = rng.uniform(1, std::min(max_width, n));
    std::vector<int> vars(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vars[static_cast<std::size_t>(i)] = i + 1;
    Clause clause;
    for (int j = 0; j < width; ++j) {
      const int pick = rng.uniform(j, n - 1);
      std::swap(vars[static_cast<std::size_t>(j)], vars[static_cast<std::size_t>(pick)]);
      const int v = vars[static_cast<std::size_t>(j)];
      clause.push_back(rng.coin() ? v : -v);
    }
    matrix.push_back(clause);
  }
  return QbfFormula(random_prefix(rng, n), matrix);
}

inline std::string describe(const QbfFormula& f) {
  std::ostringstream os;
  for (Quantifier q : f.prefix()) os << (q == Quantifier::kForall ? 'A' : 'E');
  os << " :";
  for (const Clause& c : f.matrix()) {
    os << " (";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ")";
  }
  return os.str();
}

// Every clause of width 1..2 over x_1..x_n with distinct variables.
inline std::vector<Clause> all_small_clauses(int n) {
  std::vector<Clause> out;
  for (int v = 1; v <= n; ++v) {
    out.push_back({v});
    out.push_back({-v});
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int sa : {1, -1}) {
        for (int sb : {1, -1}) out.push_back({sa * a, sb * b});
      }
    }
  }
  return out;
}

// All prefixes times all matrices of at most two distinct small clauses, n = 1..max_n.
inline std::vector<QbfFormula> exhaustive_family(int max_n) {
  std::vector<QbfFormula> out;
  for (int n = 1; n <= max_n; ++n) {
    const std::vector<Clause> clauses = all_small_clauses(n);
    std::vector<std::vector<Clause>> matrices{{}};
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      matrices.push_back({clauses[i]});
      for (std::size_t j = i + 1; j < clauses.size(); ++j) matrices.push_back({clauses[i], clauses[j]});
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Quantifier> q(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        q[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? Quantifier::kForall : Quantifier::kExists;
      }
      for (const auto& m : matrices) out.emplace_back(q, m);
    }
  }
  return out;
}

// Runs `prop` on `runs` generated cases. On the first failure prints the seed
// and the case description and returns false.
template <typename T>
bool for_all(std::uint64_t seed, int runs, const std::function<T(Rng&)>& make,
             const std::function<bool(const T&)>& prop,
             const std::function<std::string(const T&)>& show) {
  for (int i = 0; i < runs; ++i) {
    Rng rng(seed + static_cast<std::uint64_t>(i));
    const T value = make(rng);
    if (!prop(value)) {
      std::cerr << "property failed, seed " << seed + static_cast<std::uint64_t>(i) << ": "
                << show(value) << "\n";
      return false;
    }
  }
  return true;
}

}  // namespace gen
