#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "entropyforge/core.hpp"
#include "entropyforge/group.hpp"

namespace eforge {

// beta values are ratios of logs of integers, kept exact.
// value = log(num) / log(den), num, den >= 2.
struct LogRatio {
  BigInt num{1};
  BigInt den{1};
  double toDouble() const { return logBig(num) / logBig(den); }
  // compare against a rational p/q via num^q <=> den^p
  int cmpRational(long p, long q) const;
  bool equalsRational(long p, long q) const { return cmpRational(p, q) == 0; }
};

// Small exact rational for thresholds theta and design targets.
struct Rational {
  long num = 0;
  long den = 1;
  double toDouble() const { return (double)num / (double)den; }
};

// Abstract bounded integer sequence; designed sequences are not eventually
// periodic, so the profile works against this interface.
class ISeq {
 public:
  virtual ~ISeq() = default;
  virtual int d(int i) const = 0;
  virtual int c(int i) const { return d(i) - 1; }
  virtual int dMin() const = 0;
  virtual int dMax() const = 0;
};

class ValencyISeq : public ISeq {
 public:
  ValencyISeq(ValencySeq v, CSeq c) : v_(std::move(v)), c_(std::move(c)) {}
  int d(int i) const override { return v_.d(i); }
  int c(int i) const override { return c_.c(v_, i); }
  int dMin() const override { return v_.dMin; }
  int dMax() const override { return v_.dMax; }

 private:
  ValencySeq v_;
  CSeq c_;
};

// Exact arithmetic for k(n), beta(n), l(n), beta'(n) over a (possibly
// generalized) sequence with p_l = c_l / ((c_l+1) d_l).
class ExponentProfile {
 public:
  explicit ExponentProfile(std::shared_ptr<const ISeq> seq) : seq_(std::move(seq)) {}
  static ExponentProfile of(const ValencySeq& v, const CSeq& c = {});
  static ExponentProfile constant(int d);

  const ISeq& seq() const { return *seq_; }

  // k(n) = min{k : p_0..p_k n <= 1}, exact integer comparison; n >= 2
  int kOfN(const BigInt& n) const;
  LogRatio betaOfN(const BigInt& n) const;

  // k^theta(n) = min{k : (p_0+theta)..(p_k+theta) n <= N0}
  int kTheta(const BigInt& n, Rational theta, long n0 = 1) const;
  LogRatio betaTheta(const BigInt& n, Rational theta, long n0 = 1) const;

  // l(n) = max{l : prod d_i/p_i <= n}; empty when n below the first threshold
  std::optional<int> lOfN(const BigInt& n) const;
  std::optional<LogRatio> betaPrime(const BigInt& n) const;

  // h(x) = d_0..d_{k(x)} for the unique k with x_{k-1} < x <= x_k
  BigInt hOfX(const BigInt& x) const;

  // threshold x_k = prod 1/p_i as an exact rational
  BigRational threshold(int k) const;
  BigInt prodD(int k) const;  // d_0..d_k

  // Exact sweep over the sawtooth segments of [2, nMax]:
  // per segment (x_{k-1}, x_k] the extreme values of beta(n).
  struct Segment {
    int k;
    BigInt nLo, nHi;       // integer endpoints of the segment within range
    double betaAtLo, betaAtHi;  // beta is decreasing on the segment
  };
  std::vector<Segment> segments(const BigInt& nMax, const BigInt& nMin = 2) const;

  // sup over n in [nMin, nMax] of (beta(n) - betaRef) * log n  (Fact 4.4's C)
  double measureC(double betaRef, const BigInt& nMax, const BigInt& nMin = 16) const;

 private:
  std::shared_ptr<const ISeq> seq_;
};

// closed forms
double betaConst(int d);                  // 1/(2 - log(d-1)/log d)
double betaPrimeConst(int d);             // 1/(3 - log(d-1)/log d)
double betaDC(int d, int c);              // 1/(1 + log((c+1)/c)/log d)
double betaPrimeDC(int d, int c);         // 1/(2 + log((c+1)/c)/log d)

struct DesignError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Admissible target for the oscillating designer.
struct DesignTarget {
  Rational alpha, beta;
  int d = 2, D = 16;
  void validate() const;  // beta_d <= alpha <= beta <= beta_D
};

// #{i <= n : d_i = d} = floor(lambda n); beta(n) -> beta.
class ConstantDesign : public ISeq {
 public:
  ConstantDesign(double beta, int d, int D);
  int d(int i) const override;
  int dMin() const override { return lo_; }
  int dMax() const override { return hi_; }
  double lambda() const { return lambda_; }

 private:
  int lo_, hi_;
  double lambda_;
};

// Alternating D-blocks and d-blocks with exact first-crossing switches.
// C is measured from the produced sequence, not prescribed.
class OscillatingDesign : public ISeq {
 public:
  explicit OscillatingDesign(DesignTarget t);
  int d(int i) const override;
  int dMin() const override { return t_.d; }
  int dMax() const override { return t_.D; }
  const std::vector<int>& switchIndices() const { return switches_; }
  void ensure(int count) const;

 private:
  void emitOne() const;
  DesignTarget t_;
  mutable std::vector<int8_t> emitted_;  // 0 = d, 1 = D
  mutable std::vector<int> switches_;
  mutable bool phaseUp_ = true;
  mutable int phaseLen_ = 0;
  mutable BigInt A_{1};        // prod d_i
  mutable BigInt Xn_{1}, Xd_{1};  // threshold x_k as a fraction
};

// Fact 4.5 greedy: d_{k+1} = d if h(x_k) >= g(x_k) else D, with the
// precondition certified at every checkpoint.
struct ApproxResult {
  std::vector<int> seq;
  double maxRatio = 0, minRatio = 0;  // h/g over checkpoints
  bool preconditionOk = true;
  double witnessX = 0;  // first violated checkpoint when !preconditionOk
};
ApproxResult approximateFunction(const std::function<double(double)>& g, int d, int D,
                                 double xMax);

// Pseudo-period exponents of a sampled function table.
struct PseudoPeriod {
  double uEst = 0, lEst = 0;
  double uRef = 0;               // (alpha-1)/(beta-1)
  double lRefLow = 0, lRefHigh = 0;  // beta/alpha, (beta-1/2)/(alpha-1/2)
  int uWitnesses = 0, lWitnesses = 0;
};
// table: (n, H(n)) with n increasing. The empirical infima allow the
// definitions' N0 by minimizing over suffixes of the table.
PseudoPeriod pseudoPeriodExponents(const std::vector<std::pair<double, double>>& table,
                                   double alpha, double beta);

}  // namespace eforge
