#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "entropyforge/words.hpp"

namespace eforge {

// Y_n = s_1 k_1 ... s_n k_n s_{n+1}, all letters uniform and independent.
Word sampleWord(const GroupSpec& g, int level, int n, Rng& rng);

struct WalkStats {
  int64_t n = 0, samples = 0;
  double meanActivity = 0, seActivity = 0;
  double meanSupport = 0, seSupport = 0;
  double phiTrivial = 0, sePhiTrivial = 0;  // mean of (1/#F)^a
  std::map<int, int64_t> childLenHist;      // m_t of the top rewrite, all t
};
// Deterministic under any thread count: per-sample substreams, merged in
// sample order. threads = 0 reads ENTROPYFORGE_THREADS (default hw).
WalkStats estimateWalkStats(const GroupSpec& g, int n, int64_t samples, uint64_t seed,
                            int threads = 0);

struct ChildLenReport {
  int n = 0;
  int64_t samples = 0;
  double p0 = 0;  // c_0 / ((c_0+1) d_0)
  std::map<int, int64_t> hist;
  double tvVsBinomial = 0;
  double tvRunsVsBinomial = 0;  // exact law of m_t vs Binomial(n, p0), for reference
};
ChildLenReport childLengthDistribution(const GroupSpec& g, int n, int64_t samples,
                                       uint64_t seed, int coordinate = 1);

std::vector<double> binomialPmf(int n, double p);
// Exact law of the number of 1-runs in n iid uniform draws from {1..d} hitting 1,
// merged further by the structural-skip positions: this is the distribution the
// rewriting actually produces for m_t.
std::vector<double> childLenExactLaw(int n, int d, int c);
double totalVariation(const std::vector<double>& a, const std::vector<double>& b);

// ---- exact small-n engine ----

struct ExactDistribution {
  int n = 0;
  BigInt total;  // |S|^{n+1} |HF|^n
  struct Item {
    BigInt count;
    int64_t activity = 0;  // of the stored representative word (word invariant)
    int64_t support = 0;   // of the element
    Word rep;
  };
  std::unordered_map<std::string, Item> items;
  std::string identityKey;

  double entropyNats() const;
  BigRational returnProb() const;       // P(Y_n = 1)
  BigRational phiTrivialProb() const;   // P(phi_n = id), from element supports
  BigRational expectedSupport() const;  // E #supp(phi_n)
};

// Exact distribution of Y_n over canonical forms by stepwise convolution.
ExactDistribution exactDistribution(const GroupSpec& g, int n, size_t keyBudget = 1'000'000);
// All distributions for n = 0..nMax in one pass.
std::vector<ExactDistribution> exactDistributions(const GroupSpec& g, int nMax,
                                                  size_t keyBudget = 1'000'000);

// E[(1/#F)^{a(Y_n)}] and E[a(Y_n)] exactly, by enumerating the F-stripped word
// tuples (a(w) is a word invariant, independent of the boundary letters).
struct StrippedExact {
  BigRational phiTrivialGeom;  // E[(1/#F)^a], denominator #F^n * |tuples|
  BigRational expectedActivity;
};
StrippedExact strippedExact(const GroupSpec& g, int n);

// ---- norms and drift ----

// Exact word norms for the step set S·HF·S by breadth-first closure.
struct NormOracle {
  std::unordered_map<std::string, int> normByKey;
  int radius = 0;
  int64_t stepSetSize = 0;  // distinct step elements
};
NormOracle normOracle(const GroupSpec& g, int radius, size_t keyBudget = 1'000'000);

struct DriftBounds {
  double exactDrift = 0;  // E||Y_n|| from the exact distribution (n small)
  double lower = 0;       // (H - log(n+1)) / log |steps|
  double upper = 0;       // sqrt(2 n (H + log 2))
  int64_t censored = 0;
};
DriftBounds driftBounds(const GroupSpec& g, int n, const ExactDistribution& dist,
                        const NormOracle& norms);

}  // namespace eforge
