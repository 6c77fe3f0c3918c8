#include "nssbound/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "nssbound/errors.hpp"
#include "nssbound/fock.hpp"

namespace nssbound {

namespace {

constexpr double kTrimTolerance = 1e-14;
constexpr double kDedupTolerance = 1e-9;
constexpr double kMultiplicityTolerance = 1e-8;

void trim(std::vector<double>& c, double rel) {
  double scale = 0.0;
  for (double x : c) scale = std::max(scale, std::abs(x));
  while (!c.empty() && std::abs(c.back()) <= rel * scale) c.pop_back();
}

int sign(double x) { return (x > 0.0) - (x < 0.0); }

double bisect(const RealPolynomial& p, double lo, double hi) {
  int slo = sign(p(lo));
  for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const int s = sign(p(mid));
    if (s == 0) return mid;
    if (s == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> roots_in(const RealPolynomial& p, double a, double b) {
  std::vector<double> out;
  if (p.degree() < 1) return out;
  if (p.degree() == 1) {
    const double r = -p.coefficient(0) / p.coefficient(1);
    if (r >= a && r <= b) out.push_back(r);
    return out;
  }

  std::vector<double> pts{a};
  for (double c : roots_in(p.derivative(), a, b)) pts.push_back(c);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());

  const double tol = 1e-12 * p.max_abs_coefficient();
  for (double x : pts) {
    if (std::abs(p(x)) <= tol) out.push_back(x);
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double fu = p(pts[i]);
    const double fv = p(pts[i + 1]);
    if (std::abs(fu) > tol && std::abs(fv) > tol && sign(fu) != sign(fv)) {
      out.push_back(bisect(p, pts[i], pts[i + 1]));
    }
  }

  std::sort(out.begin(), out.end());
  std::vector<double> merged;
  for (double r : out) {
    if (!merged.empty() && r - merged.back() <= kDedupTolerance) {
      if (std::abs(p(r)) < std::abs(p(merged.back()))) merged.back() = r;
    } else {
      merged.push_back(r);
    }
  }
  return merged;
}

// Remainder of a / b (ascending coefficients).
std::vector<double> remainder(std::vector<double> a, const std::vector<double>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    const double f = a.back() / b.back();
    for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
    a.pop_back();
  }
  return a;
}

double eval(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

int sign_variations(const std::vector<std::vector<double>>& seq, double x) {
  int count = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = sign(eval(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

RealPolynomial::RealPolynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) {
  trim(coeffs_, kTrimTolerance);
  if (degree() > kMaxDegree) throw InvalidArgument("polynomial: degree above 4");
}

double RealPolynomial::coefficient(int power) const {
  return power >= 0 && power < static_cast<int>(coeffs_.size()) ? coeffs_[power] : 0.0;
}

double RealPolynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double RealPolynomial::operator()(double x) const { return eval(coeffs_, x); }

RealPolynomial RealPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return RealPolynomial();
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return RealPolynomial(std::move(d));
}

RealPolynomial quartic_real(int m, int n) {
  if (m < 0 || n < 0) throw InvalidArgument("quartic: negative photon number");
  const double M = m;
  const double N = n;
  return RealPolynomial({M * N, M + N - 1.0, -(M + N + 2.0 * M * N + 1.0), -(M + N + 3.0),
                         (M + 1.0) * (N + 1.0)});
}

Complex quartic_complex(int m, int n, Complex t) {
  if (m < 0 || n < 0) throw InvalidArgument("quartic: negative photon number");
  const double a = std::norm(t);
  const Complex tc = std::conj(t);
  const double M = m;
  const double N = n;
  return a * a * (M + 1.0) * (N + 1.0) - a * tc * (M + N + 3.0) - 2.0 * tc * tc -
         a * (M + N + 2.0 * M * N - 1.0) + tc * (M + N - 1.0) + M * N;
}

Complex jacobi_constraint(int m, int n, Complex t) {
  if (m < 0 || n < 0) throw InvalidArgument("jacobi constraint: negative photon number");
  const double x = 2.0 * std::norm(t) - 1.0;
  auto P = [x](int order, int beta) { return jacobi_polynomial(order, beta, x); };
  const Complex tc = std::conj(t);
  const Complex lhs = tc * (P(0, m) * P(2, n - 2) - P(2, m - 2) * P(0, n)) +
                      tc * tc * (P(0, m) * P(1, n - 1) - P(1, m - 1) * P(0, n));
  const double rhs = P(1, m - 1) * P(2, n - 2) - P(2, m - 2) * P(1, n - 1);
  return lhs - rhs;
}

PhysicalRoots solve_physical_roots(const RealPolynomial& p) {
  if (p.is_zero()) throw DegenerateError("root solver: zero polynomial");
  if (p.degree() < 1) throw InvalidArgument("root solver: constant polynomial");

  PhysicalRoots out;
  out.roots = roots_in(p, -1.0, 1.0);
  for (double r : out.roots) {
    int mult = 1;
    RealPolynomial d = p.derivative();
    while (mult < p.degree() && !d.is_zero() &&
           std::abs(d(r)) <= kMultiplicityTolerance * std::max(1.0, d.max_abs_coefficient())) {
      ++mult;
      d = d.derivative();
    }
    out.multiplicities.push_back(mult);
  }
  return out;
}

int sturm_root_count(const RealPolynomial& p, double a, double b) {
  if (p.is_zero()) throw DegenerateError("sturm: zero polynomial");
  std::vector<std::vector<double>> seq;
  seq.emplace_back(p.coefficients().begin(), p.coefficients().end());
  const auto d = p.derivative();
  seq.emplace_back(d.coefficients().begin(), d.coefficients().end());
  while (!seq.back().empty() && seq.back().size() > 1) {
    auto r = remainder(seq[seq.size() - 2], seq.back());
    double scale = 0.0;
    for (double x : seq[seq.size() - 2]) scale = std::max(scale, std::abs(x));
    while (!r.empty() && std::abs(r.back()) <= 1e-10 * scale) r.pop_back();
    if (r.empty()) break;
    for (double& x : r) x = -x;
    seq.push_back(std::move(r));
  }
  if (seq.back().empty()) seq.pop_back();
  return sign_variations(seq, a) - sign_variations(seq, b);
}

AdjacentRoots closed_form_adjacent(int n) {
  if (n < 0) throw InvalidArgument("adjacent roots: negative n");
  const double N = n;
  AdjacentRoots r;
  r.t_plus = std::sqrt(N / (N + 2.0));
  r.t_minus = -r.t_plus;
  r.t3 = (1.0 - std::sqrt(N * N + 2.0 * N + 2.0)) / (N + 1.0);
  return r;
}

RealPolynomial cubic_m_zero(int n) {
  if (n < 1) throw InvalidArgument("m = 0 cubic: requires n >= 1");
  const double N = n;
  return RealPolynomial({(N - 1.0) / (N + 1.0), -1.0, -(N + 3.0) / (N + 1.0), 1.0});
}

}  // namespace nssbound
