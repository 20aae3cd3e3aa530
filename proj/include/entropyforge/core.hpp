#pragma once

#include <array>
#include <cstdint>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eforge {

using BigInt = boost::multiprecision::cpp_int;

// log of a positive cpp_int that may exceed double range
double logBig(const BigInt& x);

// Exact nonnegative rational with BigInt parts. Only the few operations the
// exponent calculus needs.
struct BigRational {
  BigInt num{0};
  BigInt den{1};

  void normalizeSign() {
    if (den < 0) { den = -den; num = -num; }
  }
  double toDouble() const;
  // a/b <=> c/d by cross multiplication
  static int cmp(const BigRational& a, const BigRational& b) {
    BigInt l = a.num * b.den, r = b.num * a.den;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
};

// Deterministic splittable RNG (SplitMix64 core). std::uniform_int_distribution
// is implementation-defined, so bounded draws are done by hand to keep outputs
// byte-identical across platforms and runs.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  static uint64_t mix(uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Substream derivation rule (documented in output metadata): the worker for
  // sample index i uses Rng(mix(seed ^ (i + 1) * 0xD1342543DE82EF95)).
  static Rng substream(uint64_t seed, uint64_t index) {
    return Rng(mix(seed ^ ((index + 1) * 0xD1342543DE82EF95ULL)));
  }

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform on [0, n), rejection-free Lemire reduction with widening
  uint64_t below(uint64_t n) {
    while (true) {
      uint64_t x = next();
      __uint128_t m = (__uint128_t)x * n;
      uint64_t lo = (uint64_t)m;
      if (lo >= n) return (uint64_t)(m >> 64);
      uint64_t t = -n % n;
      if (lo >= t) return (uint64_t)(m >> 64);
    }
  }

  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

// Permutation of {1,..,deg}, deg <= 16. Stored 0-based.
struct Perm {
  static constexpr int kMaxDeg = 16;
  std::array<uint8_t, kMaxDeg> img{};
  uint8_t deg = 1;

  static Perm identity(int d) {
    Perm p;
    p.deg = (uint8_t)d;
    for (int i = 0; i < d; ++i) p.img[i] = (uint8_t)i;
    return p;
  }
  static Perm transposition(int d, int a, int b) {  // 1-based points
    Perm p = identity(d);
    std::swap(p.img[a - 1], p.img[b - 1]);
    return p;
  }
  static Perm uniform(int d, Rng& rng) {
    Perm p = identity(d);
    for (int i = d - 1; i > 0; --i)
      std::swap(p.img[i], p.img[rng.below((uint64_t)i + 1)]);
    return p;
  }
  static Perm fromOneLine(const std::string& s);

  int at(int i) const { return img[i - 1] + 1; }  // 1-based
  int preimage(int i) const {
    for (int j = 0; j < deg; ++j)
      if (img[j] == i - 1) return j + 1;
    throw std::logic_error("perm preimage");
  }
  bool isIdentity() const {
    for (int i = 0; i < deg; ++i)
      if (img[i] != i) return false;
    return true;
  }
  // apply *this first, then o: the word product (*this)·o
  Perm then(const Perm& o) const {
    Perm r;
    r.deg = deg;
    for (int i = 0; i < deg; ++i) r.img[i] = o.img[img[i]];
    return r;
  }
  Perm inverse() const {
    Perm r;
    r.deg = deg;
    for (int i = 0; i < deg; ++i) r.img[img[i]] = (uint8_t)i;
    return r;
  }
  bool fixes(int i) const { return img[i - 1] == i - 1; }
  bool operator==(const Perm& o) const {
    if (deg != o.deg) return false;
    for (int i = 0; i < deg; ++i)
      if (img[i] != o.img[i]) return false;
    return true;
  }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  std::string oneLine() const;  // "213.." (points > 9 as letters a..g)
  uint64_t rank() const {       // lexicographic index, for table lookups
    uint64_t r = 0;
    for (int i = 0; i < deg; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < deg; ++j)
        if (img[j] < img[i]) ++smaller;
      r = r * (uint64_t)(deg - i) + (uint64_t)smaller;
    }
    return r;
  }
};

// ---- small statistics helpers ----

struct MeanSe {
  double mean = 0, se = 0;
};
MeanSe meanSe(const std::vector<double>& xs);

struct SlopeFit {
  double slope = 0, intercept = 0, slopeSe = 0;
};
SlopeFit leastSquares(const std::vector<double>& xs, const std::vector<double>& ys);

// P(Chi2_k >= x), via the regularized upper incomplete gamma function
double chiSquareSurvival(double x, int dof);

uint64_t fnv1a(const std::string& s);

}  // namespace eforge
