#include "cospec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cospec {

ExactPoly char_poly(const Graph& g) {
  const std::size_t n = g.order();
  // c[k] is the coefficient of x^k; M_k = A M_{k-1} + c[n-k+1] I.
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  std::vector<BigInt> m(n * n, 0);
  std::vector<BigInt> am(n * n, 0);
  std::vector<std::vector<Vertex>> nbrs(n);
  for (Vertex v = 0; v < n; ++v) nbrs[v] = g.neighbors(v).members();

  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (Vertex l : nbrs[i]) s += m[l * n + j];
        am[i * n + j] = std::move(s);
      }
    for (std::size_t i = 0; i < n; ++i) am[i * n + i] += c[n - k + 1];
    std::swap(m, am);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (Vertex l : nbrs[i]) trace += m[l * n + i];
    BigInt q, r;
    boost::multiprecision::divide_qr(trace, BigInt(k), q, r);
    if (r != 0) throw std::logic_error("Faddeev-LeVerrier trace not divisible");
    c[n - k] = -q;
  }
  return ExactPoly(std::move(c));
}

MultiplicitySpectrum square_free_decomposition(const ExactPoly& p) {
  if (!p.is_monic()) throw std::invalid_argument("square_free_decomposition expects a monic polynomial");
  MultiplicitySpectrum out;
  out.mult_zero = root_multiplicity(p, 0);
  out.mult_minus_one = root_multiplicity(p, -1);
  if (p.degree() == 0) return out;

  const ExactPoly dp = p.derivative();
  const ExactPoly a0 = gcd(p, dp);
  ExactPoly b = divide_exact(p, a0);
  ExactPoly c = divide_exact(dp, a0);
  ExactPoly d = c - b.derivative();
  for (std::size_t i = 1; b.degree() > 0; ++i) {
    const ExactPoly a = d.is_zero() ? b : gcd(b, d);
    if (!a.is_monic()) throw std::logic_error("square-free factor is not monic");
    if (a.degree() > 0) out.records.push_back({a, i});
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - b.derivative();
  }
  return out;
}

namespace {

// Divides out the positive content only, keeping the sign of every coefficient.
ExactPoly reduce_positive(const ExactPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = p.content();
  std::vector<BigInt> v = p.coeffs();
  for (auto& x : v) x /= g;
  return ExactPoly(std::move(v));
}

int sign(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::size_t sign_changes(const std::vector<ExactPoly>& chain, const BigInt& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& s : chain) {
    const int sg = sign(s.evaluate(x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

}  // namespace

std::size_t count_distinct_roots_open(const ExactPoly& square_free, const BigInt& a, const BigInt& b) {
  if (!(a < b)) throw std::invalid_argument("count_distinct_roots_open needs a < b");
  if (square_free.is_zero()) throw std::invalid_argument("count_distinct_roots_open of the zero polynomial");
  ExactPoly f = square_free;
  if (f.degree() > 0 && f.evaluate(a) == 0) f = divide_exact(f, ExactPoly::linear_root(a));
  if (f.degree() > 0 && f.evaluate(b) == 0) f = divide_exact(f, ExactPoly::linear_root(b));
  if (f.degree() <= 0) return 0;
  if (f.evaluate(a) == 0 || f.evaluate(b) == 0)
    throw std::invalid_argument("count_distinct_roots_open expects a square-free polynomial");

  std::vector<ExactPoly> chain{reduce_positive(f), reduce_positive(f.derivative())};
  while (chain.back().degree() > 0) {
    ExactPoly r = positive_pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(-reduce_positive(r));
  }
  const std::size_t va = sign_changes(chain, a);
  const std::size_t vb = sign_changes(chain, b);
  if (vb > va) throw std::logic_error("Sturm chain produced a negative root count");
  return va - vb;
}

std::size_t count_eigs_open_interval(const MultiplicitySpectrum& spectrum, const BigInt& a, const BigInt& b) {
  std::size_t total = 0;
  for (const auto& rec : spectrum.records) total += rec.multiplicity * count_distinct_roots_open(rec.factor, a, b);
  return total;
}

std::size_t count_eigs_open_interval(const Graph& g, long a, long b) {
  return count_eigs_open_interval(square_free_decomposition(char_poly(g)), BigInt(a), BigInt(b));
}

std::size_t rank_exact(const Graph& g, long shift) {
  const std::size_t n = g.order();
  std::vector<BigInt> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(i, j)) m[i * n + j] = 1;
    m[i * n + i] += shift;
  }
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[rank * n + j]);
    const BigInt p = m[rank * n + col];
    for (std::size_t i = rank + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        BigInt v = p * m[i * n + j] - m[i * n + col] * m[rank * n + j];
        m[i * n + j] = v / prev;
      }
      m[i * n + col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, double tol, int max_sweeps) {
  if (!(tol > 0)) throw std::invalid_argument("jacobi tolerance must be positive");
  if (a.size() != n * n) throw std::invalid_argument("jacobi expects an n*n matrix");
  const auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  const auto off_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() >= tol) {
    if (sweep++ == max_sweeps)
      throw std::runtime_error("jacobi did not converge within " + std::to_string(max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150)
          t = 1.0 / (2.0 * theta);
        else
          t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = c * arp - s * arq;
          at(r, q) = at(q, r) = s * arp + c * arq;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

std::vector<double> numeric_eigenvalues(const Graph& g, double tol, int max_sweeps) {
  const std::size_t n = g.order();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(i, j)) a[i * n + j] = 1.0;
  return jacobi_eigenvalues(std::move(a), n, tol, max_sweeps);
}

}  // namespace cospec
