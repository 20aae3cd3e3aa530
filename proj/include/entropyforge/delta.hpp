#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entropyforge/words.hpp"

namespace eforge {

// Word in the free product S'' * (H''F''), alternating normal form.
struct FreeSyllable {
  bool isS = true;
  Perm s;
  KLetter k;
};
struct FreeProductWord {
  std::vector<FreeSyllable> syll;
  bool trivial() const { return syll.empty(); }
  int length() const { return (int)syll.size(); }
};
// Reduce a raw syllable sequence to normal form (drops identities, merges
// adjacent same-factor syllables, cascades).
FreeProductWord freeReduce(const GroupSpec& g, int level, const std::vector<FreeSyllable>& raw);
FreeProductWord freeConcat(const GroupSpec& g, int level, const FreeProductWord& a,
                           const FreeProductWord& b);

struct MissingQuotientData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Second-block group at one level: trivial (d'_l = 0), the full free product
// (d'_l = infinity), or a finite quotient realized as the free product
// truncated at an agreement radius (exact within, error beyond).
struct QuotientSpec {
  enum class Kind { Trivial, FreeProduct, TruncatedFree };
  Kind kind = Kind::Trivial;
  int agreementRadius = 0;                  // TruncatedFree only
  std::optional<uint64_t> dPrime;           // finite block size when given
  bool isTrivialGroup() const { return kind == Kind::Trivial; }
};

struct DeltaSpec {
  GroupSpec base;
  std::map<int, QuotientSpec> levels;  // absent level => trivial block
  std::string embeddingNote = "s'',h'',f'' realized by right regular representations on disjoint blocks";

  const QuotientSpec& at(int level) const;
  void validate() const;  // finite d' large enough for the regular embeddings
};

struct DeltaRootComponent {
  Perm sigma;            // S_{d_l} part
  FreeProductWord tail;  // S''*(H''F'') part, normal form
  bool trivial(const QuotientSpec& q) const;
};

struct DeltaRewrite {
  std::vector<Word> gammaChildren;  // letter-for-letter the base rewrite
  DeltaRootComponent root;
};
DeltaRewrite rewriteDelta(const DeltaSpec& ds, const Word& w);

// Localisation decision procedure (exact; throws MissingQuotientData when a
// truncated block is interrogated beyond its agreement radius).
bool isTrivialDelta(const DeltaSpec& ds, const Word& w, TrivBudget* budget = nullptr);

// Prop 7.6 quotient (drop primes) and Fact 7.9 lift.
Word quotientToGamma(const DeltaSpec& ds, const Word& w);
Word liftFromLevel1(const DeltaSpec& ds, const Word& level1Word);

// Scale-interleaving scheduler: free blocks at levels 1 + ceil(log2 R_i) + 1,
// truncated at agreement radius 2 R_{i+1} + 1 (the last block stays free).
DeltaSpec scheduleScales(const GroupSpec& base, const std::vector<int>& radii,
                         const std::string& mode = "entropy");

// A word trivial in Gamma whose rewrite carries a free-product witness at
// `level` (requires d_l >= 3 along the way; used by the localisation tests).
Word localisationWitness(const GroupSpec& base, int level);

}  // namespace eforge
