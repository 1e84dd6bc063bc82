#include "tamari/count.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace tamari {

namespace {

const BigInt& zero() {
  static const BigInt z = 0;
  return z;
}

const BigInt& lookup(const std::vector<std::vector<BigInt>>& table, std::size_t n, std::size_t k) {
  if (n >= table.size() || k >= table[n].size()) return zero();
  return table[n][k];
}

}  // namespace

// ---------------------------------------------------------------------------
// Dynamic programming over focused derivations

CountTable::CountTable(std::size_t max_size) : r_(max_size + 1), l_(max_size + 1) {
  for (std::size_t n = 0; n <= max_size; ++n) {
    r_[n].assign(n + 3, BigInt(0));
    l_[n].assign(n + 3, BigInt(0));
  }
}

const BigInt& CountTable::r(std::size_t n, std::size_t k) const { return lookup(r_, n, k); }
const BigInt& CountTable::l(std::size_t n, std::size_t k) const { return lookup(l_, n, k); }

CountTable dp_tables(std::size_t max_size) {
  CountTable t(max_size);
  for (std::size_t n = 0; n <= max_size; ++n) {
    auto& r = t.r_[n];
    if (n == 0) r[1] = 1;  // p |- p
    // TimesR: Gamma_irr |- A (size a, length i) with Delta |- B (size b, length j).
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t b = n - 1 - a;
      for (std::size_t i = 1; i <= a + 1; ++i) {
        const BigInt& ri = t.r_[a][i];
        if (ri == 0) continue;
        for (std::size_t j = 1; j <= b + 1; ++j) r[i + j] += ri * t.l_[b][j];
      }
    }
    // TimesL folds two formulas into one: l(n,k) = l(n,k+1) + r(n,k).
    auto& l = t.l_[n];
    for (std::size_t k = n + 1; k >= 1; --k) l[k] = l[k + 1] + r[k];
  }
  return t;
}

BigInt intervals(std::size_t n) { return dp_tables(n).l(n, 1); }

std::vector<BigInt> interval_counts(std::size_t max_size) {
  const CountTable t = dp_tables(max_size);
  std::vector<BigInt> out;
  out.reserve(max_size + 1);
  for (std::size_t n = 0; n <= max_size; ++n) out.push_back(t.l(n, 1));
  return out;
}

// ---------------------------------------------------------------------------
// Series

Poly difference_quotient(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly q(p.size() - 1);
  BigInt tail = 0;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    tail += p[k + 1];
    q[k] = tail;
  }
  return q;
}

BigInt Series::coeff(std::size_t n, std::size_t k) const {
  if (n >= coeffs_.size() || k >= coeffs_[n].size()) return 0;
  return coeffs_[n][k];
}

std::vector<BigInt> Series::at_x_one() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& p : coeffs_) {
    BigInt s = 0;
    for (const auto& c : p) s += c;
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_product(Poly& acc, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return;
  if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += a[i] * b[j];
  }
}

// x * (P(x) - P(1)) / (x - 1)
Poly shifted_difference(const Poly& p) {
  Poly q = difference_quotient(p);
  q.insert(q.begin(), BigInt(0));
  trim(q);
  return q;
}

}  // namespace

bool operator==(const Series& a, const Series& b) {
  if (a.order() != b.order()) return false;
  for (std::size_t n = 0; n <= a.order(); ++n) {
    const std::size_t width = std::max(a[n].size(), b[n].size());
    for (std::size_t k = 0; k < width; ++k) {
      if (a.coeff(n, k) != b.coeff(n, k)) return false;
    }
  }
  return true;
}

SeriesSolution series_solve(std::size_t order) {
  Series r(order);
  r[0] = {0, 1};
  // After round t the coefficients through z^t are final, so round t only
  // computes z-degrees up to min(t, order). The extra last round must not
  // change anything.
  for (std::size_t round = 1; round <= order + 1; ++round) {
    const std::size_t degree = std::min(round, order);
    std::vector<Poly> l(degree);
    for (std::size_t n = 0; n < degree; ++n) l[n] = shifted_difference(r[n]);
    Series next(order);
    next[0] = {0, 1};
    for (std::size_t n = 1; n <= degree; ++n) {
      for (std::size_t a = 0; a < n; ++a) add_product(next[n], r[a], l[n - 1 - a]);
      trim(next[n]);
    }
    if (round == order + 1 && !(next == r)) {
      throw std::logic_error("series_solve: coefficients did not stabilise");
    }
    r = std::move(next);
  }
  Series l(order);
  for (std::size_t n = 0; n <= order; ++n) l[n] = shifted_difference(r[n]);
  return SeriesSolution{std::move(r), std::move(l)};
}

// ---------------------------------------------------------------------------
// Closed form

namespace {

BigInt factorial(std::size_t n) {
  static std::mutex mutex;
  static std::vector<BigInt> memo{BigInt(1)};
  std::lock_guard lock(mutex);
  while (memo.size() <= n) memo.push_back(memo.back() * memo.size());
  return memo[n];
}

}  // namespace

BigInt tutte_formula(std::size_t n) {
  const BigInt numerator = 2 * factorial(4 * n + 1);
  const BigInt denominator = factorial(n + 1) * factorial(3 * n + 2);
  if (numerator % denominator != 0) throw std::logic_error("tutte_formula: inexact division");
  return numerator / denominator;
}

std::optional<ChapotonMismatch> chapoton_check(const Series& r) {
  const std::size_t order = r.order();
  Series phi = r;
  if (phi[0].size() < 2) phi[0].resize(2, BigInt(0));
  phi[0][1] -= 1;

  // (1 + Phi/x) and (1 + (Phi - Phi(1))/(x - 1)), both truncated after z^(order-1).
  std::vector<Poly> lhs_factor(order), rhs_factor(order);
  for (std::size_t n = 0; n < order; ++n) {
    Poly down = phi[n].empty() ? Poly{} : Poly(phi[n].begin() + 1, phi[n].end());
    Poly diff = difference_quotient(phi[n]);
    if (n == 0) {
      if (down.empty()) down.resize(1, BigInt(0));
      if (diff.empty()) diff.resize(1, BigInt(0));
      down[0] += 1;
      diff[0] += 1;
    }
    lhs_factor[n] = std::move(down);
    rhs_factor[n] = std::move(diff);
  }

  Series rhs(order);
  for (std::size_t n = 1; n <= order; ++n) {
    Poly prod;
    for (std::size_t a = 0; a < n; ++a) add_product(prod, lhs_factor[a], rhs_factor[n - 1 - a]);
    prod.insert(prod.begin(), 2, BigInt(0));  // times x^2
    rhs[n] = std::move(prod);
  }

  for (std::size_t n = 0; n <= order; ++n) {
    const std::size_t width = std::max(phi[n].size(), rhs[n].size());
    for (std::size_t k = 0; k < width; ++k) {
      BigInt left = phi.coeff(n, k);
      BigInt right = rhs.coeff(n, k);
      if (left != right) return ChapotonMismatch{n, k, std::move(left), std::move(right)};
    }
  }
  return std::nullopt;
}

std::optional<ChapotonMismatch> chapoton_check(std::size_t order) {
  return chapoton_check(series_solve(order).r);
}

}  // namespace tamari
