#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tamari {

using BigInt = boost::multiprecision::cpp_int;

/// Focused-derivation counts by goal size n and context length k:
///   r(n, k): irreducible contexts,  l(n, k): arbitrary contexts.
/// Entries outside 0 <= n <= max_size, 1 <= k <= n+1 read as zero.
class CountTable {
 public:
  explicit CountTable(std::size_t max_size);

  std::size_t max_size() const noexcept { return r_.size() - 1; }
  const BigInt& r(std::size_t n, std::size_t k) const;
  const BigInt& l(std::size_t n, std::size_t k) const;

 private:
  friend CountTable dp_tables(std::size_t max_size);

  // r_[n] and l_[n] are indexed by k and have length n + 3 (k = 0..n+2).
  std::vector<std::vector<BigInt>> r_;
  std::vector<std::vector<BigInt>> l_;
};

/// r(n,k) = [n=0][k=1] + sum_{a+b+1=n, i+j=k} r(a,i) l(b,j)
/// l(n,k) = l(n,k+1) + r(n,k)
CountTable dp_tables(std::size_t max_size);

/// Number of intervals A <= B among trees with n products: l(n, 1).
BigInt intervals(std::size_t n);
std::vector<BigInt> interval_counts(std::size_t max_size);  // n = 0..max_size

/// Polynomial in x; index = exponent.
using Poly = std::vector<BigInt>;

/// (p(x) - p(1)) / (x - 1), exactly: coefficient k is the sum of p_j for j > k.
Poly difference_quotient(const Poly& p);

/// Bivariate series in z and x truncated after z^order.
class Series {
 public:
  explicit Series(std::size_t order) : coeffs_(order + 1) {}

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Poly& operator[](std::size_t n) const { return coeffs_.at(n); }
  Poly& operator[](std::size_t n) { return coeffs_.at(n); }

  /// Coefficient of z^n x^k (zero when absent).
  BigInt coeff(std::size_t n, std::size_t k) const;
  /// Substitutes x = 1.
  std::vector<BigInt> at_x_one() const;

  friend bool operator==(const Series&, const Series&);

 private:
  std::vector<Poly> coeffs_;
};

struct SeriesSolution {
  Series r;
  Series l;
};

/// Solves R = z R L + x with L = x (R(z,x) - R(z,1)) / (x - 1) by fixed-point
/// iteration from R = x, up to z^order.
SeriesSolution series_solve(std::size_t order);

/// 2 (4n+1)! / ((n+1)! (3n+2)!).
BigInt tutte_formula(std::size_t n);

struct ChapotonMismatch {
  std::size_t n;
  std::size_t k;
  BigInt lhs;
  BigInt rhs;
};

/// With Phi = R - x, checks Phi = x^2 z (1 + Phi/x) (1 + (Phi - Phi(1))/(x - 1))
/// coefficient by coefficient up to z^order. Returns the first mismatch in
/// (n, k) order, or nullopt.
std::optional<ChapotonMismatch> chapoton_check(std::size_t order);
std::optional<ChapotonMismatch> chapoton_check(const Series& r);

}  // namespace tamari
