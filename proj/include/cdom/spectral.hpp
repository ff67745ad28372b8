#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cdom/domination.hpp"
#include "cdom/graph.hpp"

namespace cdom {

using BigInt = boost::multiprecision::cpp_int;

// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  int dim() const noexcept { return n_; }
  std::int64_t operator()(int i, int j) const { return data_[index(i, j)]; }
  std::int64_t& operator()(int i, int j) { return data_[index(i, j)]; }

  std::int64_t trace() const;
  std::int64_t sum_of_squares() const;
  double frobenius_norm() const;
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<std::int64_t> data_;
};

// Adjacency matrix with ones on the diagonal at the marked vertices.
struct DominationMatrix {
  IntMatrix entries;
  VertexSet marked;
  DominationKind source_kind = DominationKind::dominating;

  int dim() const noexcept { return entries.dim(); }
};

// Throws DomainError unless `set` is a dominating (resp. connected
// dominating) set of g. Minimality is not required.
DominationMatrix build_domination_matrix(const Graph& g, const VertexSet& set, DominationKind kind);
// Adjacency plus marked diagonal, no domination check.
IntMatrix marked_adjacency(const Graph& g, const VertexSet& marked);

// det(xI - M) = coeffs[0] x^n + coeffs[1] x^(n-1) + ... + coeffs[n].
struct CharPoly {
  std::vector<BigInt> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  double evaluate(double x) const;
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

// Exact Faddeev-LeVerrier recursion. Runs in checked 64-bit arithmetic and
// repeats in arbitrary precision when an intermediate overflows.
CharPoly char_poly(const IntMatrix& m);
inline CharPoly char_poly(const DominationMatrix& m) { return char_poly(m.entries); }

// Forces the arbitrary-precision path; exposed for cross-checking.
CharPoly char_poly_wide(const IntMatrix& m);

BigInt determinant(const IntMatrix& m);
inline BigInt determinant(const DominationMatrix& m) { return determinant(m.entries); }

struct Spectrum {
  std::vector<double> values;  // non-increasing
  double off_diag_residual = 0.0;
  int sweeps = 0;
};

inline constexpr double kDefaultJacobiTol = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;

// Cyclic Jacobi, row-major sweep over the upper triangle, until the
// off-diagonal Frobenius norm drops below tol * max(1, ||M||_F).
// Throws ConvergenceError after kMaxJacobiSweeps sweeps.
Spectrum eigenvalues(const IntMatrix& m, double tol = kDefaultJacobiTol);
inline Spectrum eigenvalues(const DominationMatrix& m, double tol = kDefaultJacobiTol) {
  return eigenvalues(m.entries, tol);
}

// Sum of absolute eigenvalues.
double energy(const Spectrum& s);

struct EnergyReport {
  int n = 0;
  int m = 0;
  DominationKind kind = DominationKind::dominating;
  VertexSet set;
  int gamma_used = 0;
  CharPoly charpoly;
  Spectrum spectrum;
  BigInt det;
  double energy = 0.0;
  // sum(lambda) - gamma and sum(lambda^2) - (2m + gamma)
  double trace_residual = 0.0;
  double power_residual = 0.0;
};

// Energy of the matrix marked by a given (verified) set.
EnergyReport energy_for_set(const Graph& g, const VertexSet& set, DominationKind kind,
                            double tol = kDefaultJacobiTol);
// Energies over the canonical certificates of the domination module.
EnergyReport c_dominating_energy(const Graph& g, double tol = kDefaultJacobiTol);
EnergyReport dominating_energy(const Graph& g, double tol = kDefaultJacobiTol);
EnergyReport energy_report(const Graph& g, DominationKind kind, double tol = kDefaultJacobiTol);

struct EnergySpread {
  double min_energy = 0.0;
  double max_energy = 0.0;
  std::size_t count = 0;
  bool complete = true;  // false when the set enumeration hit the limit
};

EnergySpread energy_spread_over_min_sets(const Graph& g, DominationKind kind, std::size_t limit);

}  // namespace cdom
