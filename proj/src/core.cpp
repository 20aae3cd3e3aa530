#include "entropyforge/core.hpp"

#include <algorithm>
#include <cstring>

namespace eforge {

double logBig(const BigInt& x) {
  if (x <= 0) throw std::domain_error("logBig: nonpositive");
  size_t bits = boost::multiprecision::msb(x);
  if (bits <= 900) return std::log(x.convert_to<double>());
  BigInt top = x >> (bits - 62);
  return std::log(top.convert_to<double>()) + (double)(bits - 62) * std::log(2.0);
}

double BigRational::toDouble() const { return std::exp(logBig(num) - logBig(den)); }

std::string Perm::oneLine() const {
  static const char* digits = "123456789abcdefg";
  std::string s;
  for (int i = 0; i < deg; ++i) s.push_back(digits[img[i]]);
  return s;
}

Perm Perm::fromOneLine(const std::string& s) {
  if (s.empty() || s.size() > kMaxDeg) throw std::invalid_argument("perm length");
  Perm p;
  p.deg = (uint8_t)s.size();
  std::array<bool, kMaxDeg> seen{};
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    int v;
    if (c >= '1' && c <= '9') v = c - '1';
    else if (c >= 'a' && c <= 'g') v = 9 + (c - 'a');
    else throw std::invalid_argument("perm digit");
    if (v >= (int)s.size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
    p.img[i] = (uint8_t)v;
  }
  return p;
}

MeanSe meanSe(const std::vector<double>& xs) {
  MeanSe r;
  if (xs.empty()) return r;
  double s = 0;
  for (double x : xs) s += x;
  r.mean = s / (double)xs.size();
  if (xs.size() < 2) return r;
  double v = 0;
  for (double x : xs) v += (x - r.mean) * (x - r.mean);
  v /= (double)(xs.size() - 1);
  r.se = std::sqrt(v / (double)xs.size());
  return r;
}

SlopeFit leastSquares(const std::vector<double>& xs, const std::vector<double>& ys) {
  SlopeFit f;
  size_t n = xs.size();
  if (n < 2 || ys.size() != n) return f;
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) { mx += xs[i]; my += ys[i]; }
  mx /= (double)n;
  my /= (double)n;
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  if (n > 2) {
    double rss = 0;
    for (size_t i = 0; i < n; ++i) {
      double e = ys[i] - (f.intercept + f.slope * xs[i]);
      rss += e * e;
    }
    f.slopeSe = std::sqrt(rss / (double)(n - 2) / sxx);
  }
  return f;
}

namespace {

// regularized incomplete gamma P(a, x), series + continued fraction
double gammaP(double a, double x) {
  if (x < 0 || a <= 0) return 0;
  if (x == 0) return 0;
  double gln = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - gln);
  }
  // continued fraction for Q, return 1-Q
  double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -(double)i * ((double)i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::fabs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  double q = std::exp(-x + a * std::log(x) - gln) * h;
  return 1.0 - q;
}

}  // namespace

double chiSquareSurvival(double x, int dof) {
  if (x <= 0) return 1.0;
  return 1.0 - gammaP(0.5 * (double)dof, 0.5 * x);
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace eforge
