#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "cospec/spectral.hpp"

namespace support {

// Compares numeric and exact eigenvalue counts on every integer window
// (a, b) with -n-1 <= a < b <= n+1. A window is skipped when a numeric
// eigenvalue sits within `margin` of an endpoint that is not an exact
// root. Returns the first disagreeing window, if any.
struct WindowMismatch {
  long a = 0, b = 0;
  std::size_t numeric = 0, exact = 0;
};

inline std::optional<WindowMismatch> numeric_exact_disagreement(const cospec::Graph& g, double margin,
                                                                std::size_t* windows_checked = nullptr) {
  using cospec::BigInt;
  const auto n = static_cast<long>(g.order());
  const cospec::ExactPoly p = cospec::char_poly(g);
  const cospec::MultiplicitySpectrum s = cospec::square_free_decomposition(p);
  const std::vector<double> eig = cospec::numeric_eigenvalues(g);

  const auto near = [&](long e) {
    for (double x : eig)
      if (std::abs(x - static_cast<double>(e)) <= margin) return true;
    return false;
  };
  std::vector<char> skip_endpoint(static_cast<std::size_t>(2 * n + 3), 0);
  for (long e = -n - 1; e <= n + 1; ++e)
    skip_endpoint[static_cast<std::size_t>(e + n + 1)] = near(e) && p.evaluate(BigInt(e)) != 0;

  for (long a = -n - 1; a <= n + 1; ++a) {
    if (skip_endpoint[static_cast<std::size_t>(a + n + 1)]) continue;
    for (long b = a + 1; b <= n + 1; ++b) {
      if (skip_endpoint[static_cast<std::size_t>(b + n + 1)]) continue;
      std::size_t numeric = 0;
      for (double x : eig)
        if (x > static_cast<double>(a) + margin && x < static_cast<double>(b) - margin) ++numeric;
      const std::size_t exact = cospec::count_eigs_open_interval(s, BigInt(a), BigInt(b));
      if (windows_checked) ++*windows_checked;
      if (numeric != exact) return WindowMismatch{a, b, numeric, exact};
    }
  }
  return std::nullopt;
}

// Sorted spectra of g and g - v satisfy lambda_i >= mu_i >= lambda_{i+1}
// up to tol.
inline bool interlaces(const std::vector<double>& lambda, const std::vector<double>& mu, double tol) {
  if (mu.size() + 1 != lambda.size()) return false;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (lambda[i] < mu[i] - tol || mu[i] < lambda[i + 1] - tol) return false;
  return true;
}

}  // namespace support
