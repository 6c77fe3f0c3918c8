#include "nssbound/fock.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "nssbound/errors.hpp"

namespace nssbound {

namespace {

constexpr double kUnitarityTolerance = 1e-12;

// Pascal triangle rows up to `n`; entries are exact in double for n <= 56.
std::vector<std::vector<double>> binomial_table(int n) {
  std::vector<std::vector<double>> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1.0);
    for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

std::vector<double> factorial_table(int n) {
  std::vector<double> f(n + 1, 1.0);
  for (int i = 1; i <= n; ++i) f[i] = f[i - 1] * i;
  return f;
}

Complex ipow(Complex base, int e) {
  Complex out{1.0, 0.0};
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

BeamSplitter::BeamSplitter(Complex t, Complex r) : t_(t), r_(r) {
  const double total = std::norm(t) + std::norm(r);
  if (!(std::abs(total - 1.0) <= kUnitarityTolerance)) {
    throw InvalidArgument("beamsplitter: |t|^2 + |r|^2 = " + std::to_string(total) +
                          ", expected 1");
  }
}

BeamSplitter BeamSplitter::from_transmission(Complex t) {
  const double t2 = std::norm(t);
  if (t2 > 1.0 + kUnitarityTolerance) {
    throw InvalidArgument("beamsplitter: |t| > 1");
  }
  return BeamSplitter(t, Complex{std::sqrt(std::max(0.0, 1.0 - t2)), 0.0});
}

BeamSplitter BeamSplitter::inverse() const { return BeamSplitter(std::conj(t_), -r_); }

Eigen::Matrix2cd BeamSplitter::matrix() const {
  Eigen::Matrix2cd m;
  m << t_, r_, -std::conj(r_), std::conj(t_);
  return m;
}

TwoModeState::TwoModeState(int total_photons) : total_(total_photons) {
  if (total_photons < 0) throw InvalidArgument("two-mode state: negative photon number");
}

TwoModeState TwoModeState::basis(FockPair pair) {
  if (pair.n < 0 || pair.k < 0) throw InvalidArgument("fock pair: negative occupation");
  TwoModeState s(pair.n + pair.k);
  s.set(pair, Complex{1.0, 0.0});
  return s;
}

void TwoModeState::set(FockPair pair, Complex amplitude) {
  if (pair.n < 0 || pair.k < 0 || pair.n + pair.k != total_) {
    throw InvalidArgument("two-mode state: pair outside the photon-number sector");
  }
  amplitudes_[pair] = amplitude;
}

Complex TwoModeState::amplitude(FockPair pair) const {
  auto it = amplitudes_.find(pair);
  return it == amplitudes_.end() ? Complex{} : it->second;
}

double TwoModeState::norm() const {
  double s = 0.0;
  for (const auto& [pair, a] : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

TwoModeState apply_beamsplitter(const BeamSplitter& bs, const TwoModeState& state,
                                int photon_cap) {
  const int total = state.total_photons();
  if (total > photon_cap) {
    throw ResourceError("beamsplitter oracle: " + std::to_string(total) +
                        " photons exceed the cap of " + std::to_string(photon_cap));
  }
  const auto c = binomial_table(total);
  const auto f = factorial_table(total);
  const Complex t = bs.t();
  const Complex r = bs.r();
  const Complex mr = -std::conj(r);
  const Complex tc = std::conj(t);

  std::vector<Complex> out(total + 1, Complex{});  // indexed by signal occupation
  for (const auto& [pair, amp] : state.amplitudes()) {
    if (amp == Complex{}) continue;
    const int n = pair.n;
    const int k = pair.k;
    // (T a + R b)^n (-R* a + T* b)^k / sqrt(n! k!)
    for (int j = 0; j <= n; ++j) {
      const Complex left = c[n][j] * ipow(t, j) * ipow(r, n - j);
      for (int i = 0; i <= k; ++i) {
        const Complex right = c[k][i] * ipow(mr, i) * ipow(tc, k - i);
        const int a = j + i;
        const int b = total - a;
        const double scale = std::sqrt((f[a] / f[n]) * (f[b] / f[k]));
        out[a] += amp * left * right * scale;
      }
    }
  }

  TwoModeState result(total);
  for (int a = 0; a <= total; ++a) {
    if (out[a] != Complex{}) result.set({a, total - a}, out[a]);
  }
  return result;
}

double jacobi_polynomial(int order, int beta, double x) {
  if (order < 0) throw InvalidArgument("jacobi: negative order");
  if (order > kMaxJacobiOrder) {
    throw ResourceError("jacobi: order " + std::to_string(order) + " exceeds the cap");
  }
  if (beta < 0) {
    const int l = -beta;
    if (l > order) throw InvalidArgument("jacobi: beta < -order is not supported");
    return std::pow(0.5 * (x + 1.0), l) * jacobi_polynomial(order - l, l, x);
  }
  if (order == 0) return 1.0;

  const double b = beta;
  double prev = 1.0;
  double cur = 1.0 + 0.5 * (b + 2.0) * (x - 1.0);
  for (int n = 2; n <= order; ++n) {
    const double s = 2.0 * n + b;  // 2n + alpha + beta with alpha = 0
    const double a1 = 2.0 * n * (n + b) * (s - 2.0);
    const double a2 = (s - 1.0) * (s * (s - 2.0) * x - b * b);
    const double a3 = 2.0 * (n - 1.0) * (n + b - 1.0) * s;
    const double next = (a2 * cur - a3 * prev) / a1;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex diagonal_element(const BeamSplitter& bs, FockPair pair) {
  if (pair.n < 0 || pair.k < 0) throw InvalidArgument("fock pair: negative occupation");
  const Complex t = bs.t();
  const double x = 2.0 * std::norm(t) - 1.0;
  if (pair.k >= pair.n) {
    return ipow(std::conj(t), pair.k - pair.n) * jacobi_polynomial(pair.n, pair.k - pair.n, x);
  }
  return ipow(t, pair.n - pair.k) * jacobi_polynomial(pair.k, pair.n - pair.k, x);
}

}  // namespace nssbound
