#include "cdom/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace cdom {

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

std::int64_t IntMatrix::sum_of_squares() const {
  std::int64_t s = 0;
  for (auto v : data_) s += v * v;
  return s;
}

double IntMatrix::frobenius_norm() const { return std::sqrt(static_cast<double>(sum_of_squares())); }

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix marked_adjacency(const Graph& g, const VertexSet& marked) {
  const int n = g.order();
  if (marked.universe() != n) throw DomainError("marked set does not index into the graph");
  IntMatrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = g.has_edge(i, j) ? 1 : 0;
    if (marked.contains(i)) a(i, i) = 1;
  }
  return a;
}

DominationMatrix build_domination_matrix(const Graph& g, const VertexSet& set, DominationKind kind) {
  if (set.universe() != g.order()) throw DomainError("set does not index into the graph");
  const bool ok = kind == DominationKind::dominating ? is_dominating_set(g, set)
                                                      : !set.empty() && is_connected_dominating_set(g, set);
  if (!ok) {
    throw DomainError(std::string("set is not a ") + std::string(to_string(kind)) + " set of the graph");
  }
  return {marked_adjacency(g, set), set, kind};
}

double CharPoly::evaluate(double x) const {
  double acc = 0.0;
  for (const auto& c : coeffs) acc = acc * x + static_cast<double>(c);
  return acc;
}

namespace {

struct Overflow {};

// Checked 64-bit operations; BigInt needs no checks.
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return -a;
}
inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt neg(const BigInt& a) { return -a; }

// M_1 = I, c_k = -tr(A M_k) / k, M_{k+1} = A M_k + c_k I.
template <class Int>
std::vector<Int> faddeev_leverrier(const IntMatrix& a) {
  const int n = a.dim();
  const auto sz = static_cast<std::size_t>(n);
  std::vector<Int> c(sz + 1, Int{0});
  c[0] = Int{1};
  if (n == 0) return c;

  // Sparse rows of A: (column, value) pairs.
  std::vector<std::vector<std::pair<int, Int>>> rows(sz);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j) != 0) rows[static_cast<std::size_t>(i)].emplace_back(j, Int{a(i, j)});

  std::vector<Int> m(sz * sz, Int{0});
  for (std::size_t i = 0; i < sz; ++i) m[i * sz + i] = Int{1};
  std::vector<Int> am(sz * sz);

  for (int k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < sz; ++i) {
      for (std::size_t j = 0; j < sz; ++j) {
        Int acc{0};
        for (const auto& [l, v] : rows[i]) acc = add(acc, mul(v, m[static_cast<std::size_t>(l) * sz + j]));
        am[i * sz + j] = acc;
      }
    }
    Int tr{0};
    for (std::size_t i = 0; i < sz; ++i) tr = add(tr, am[i * sz + i]);
    const Int kk{k};
    if (tr % kk != 0) throw std::logic_error("Faddeev-LeVerrier: inexact division");
    c[static_cast<std::size_t>(k)] = neg(tr / kk);
    if (k == n) break;
    m = am;
    for (std::size_t i = 0; i < sz; ++i) m[i * sz + i] = add(m[i * sz + i], c[static_cast<std::size_t>(k)]);
  }
  return c;
}

}  // namespace

CharPoly char_poly_wide(const IntMatrix& m) { return {faddeev_leverrier<BigInt>(m)}; }

CharPoly char_poly(const IntMatrix& m) {
  try {
    const auto narrow = faddeev_leverrier<std::int64_t>(m);
    CharPoly p;
    p.coeffs.assign(narrow.begin(), narrow.end());
    return p;
  } catch (const Overflow&) {
    return char_poly_wide(m);
  }
}

BigInt determinant(const IntMatrix& m) {
  const auto p = char_poly(m);
  const BigInt& last = p.coeffs.back();
  return m.dim() % 2 == 0 ? last : BigInt(-last);
}

Spectrum eigenvalues(const IntMatrix& m, double tol) {
  if (!(tol > 0.0)) throw DomainError("eigensolver tolerance must be positive");
  if (!m.is_symmetric()) throw DomainError("eigensolver requires a symmetric matrix");
  const int n = m.dim();
  const auto sz = static_cast<std::size_t>(n);
  std::vector<double> a(sz * sz);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * sz + static_cast<std::size_t>(j)] = static_cast<double>(m(i, j));
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * sz + static_cast<std::size_t>(j)]; };

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
    return std::sqrt(2.0 * s);
  };

  const double threshold = tol * std::max(1.0, m.frobenius_norm());
  Spectrum out;
  double off = off_norm();
  while (off >= threshold) {
    if (out.sweeps == kMaxJacobiSweeps) {
      throw ConvergenceError("Jacobi did not converge in " + std::to_string(kMaxJacobiSweeps) + " sweeps", off);
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (std::abs(theta) > 1e150) t = 0.5 / std::abs(theta);
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = c * arp - s * arq;
          at(r, q) = at(q, r) = s * arp + c * arq;
        }
      }
    }
    ++out.sweeps;
    off = off_norm();
  }
  out.off_diag_residual = off;
  out.values.resize(sz);
  for (int i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = at(i, i);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

double energy(const Spectrum& s) {
  double e = 0.0;
  for (double v : s.values) e += std::abs(v);
  return e;
}

EnergyReport energy_for_set(const Graph& g, const VertexSet& set, DominationKind kind, double tol) {
  const auto dm = build_domination_matrix(g, set, kind);
  EnergyReport r;
  r.n = g.order();
  r.m = g.size();
  r.kind = kind;
  r.set = set;
  r.gamma_used = set.size();
  r.charpoly = char_poly(dm);
  r.det = r.n % 2 == 0 ? r.charpoly.coeffs.back() : BigInt(-r.charpoly.coeffs.back());
  r.spectrum = eigenvalues(dm, tol);
  r.energy = energy(r.spectrum);
  double sum = 0.0;
  double squares = 0.0;
  for (double v : r.spectrum.values) {
    sum += v;
    squares += v * v;
  }
  r.trace_residual = sum - r.gamma_used;
  r.power_residual = squares - (2.0 * r.m + r.gamma_used);
  return r;
}

EnergyReport energy_report(const Graph& g, DominationKind kind, double tol) {
  const auto cert = kind == DominationKind::dominating ? minimum_dominating_set(g) : minimum_connected_dominating_set(g);
  return energy_for_set(g, cert.set, kind, tol);
}

EnergyReport c_dominating_energy(const Graph& g, double tol) {
  return energy_report(g, DominationKind::connected_dominating, tol);
}

EnergyReport dominating_energy(const Graph& g, double tol) { return energy_report(g, DominationKind::dominating, tol); }

EnergySpread energy_spread_over_min_sets(const Graph& g, DominationKind kind, std::size_t limit) {
  const auto sets = enumerate_minimum_sets(g, kind, limit);
  EnergySpread out;
  out.count = sets.sets.size();
  out.complete = sets.complete;
  out.min_energy = std::numeric_limits<double>::infinity();
  out.max_energy = -std::numeric_limits<double>::infinity();
  for (const auto& s : sets.sets) {
    const double e = energy(eigenvalues(build_domination_matrix(g, s, kind)));
    out.min_energy = std::min(out.min_energy, e);
    out.max_energy = std::max(out.max_energy, e);
  }
  return out;
}

}  // namespace cdom
