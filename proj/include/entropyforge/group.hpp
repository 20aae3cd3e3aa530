#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entropyforge/core.hpp"

namespace eforge {

// Bounded, eventually periodic valency sequence d_0, d_1, ...
struct ValencySeq {
  std::vector<int> prefix;
  std::vector<int> pattern;  // repeats forever after the prefix
  int dMin = 2, dMax = 2;
  std::vector<int> distinctValues;  // sorted, over prefix+pattern

  static ValencySeq make(std::vector<int> prefix, std::vector<int> pattern);
  static ValencySeq constant(int d) { return make({}, {d}); }

  int d(int level) const {
    if (level < (int)prefix.size()) return prefix[level];
    return pattern[(level - (int)prefix.size()) % pattern.size()];
  }
  int period() const { return (int)pattern.size(); }
  bool isConstant() const { return prefix.empty() && pattern.size() == 1; }
  int valueIndex(int value) const;
  // distinct values of {d_m : m >= level}, sorted
  std::vector<int> valuesFrom(int level) const;
  bool valueOccursFrom(int value, int level) const;
  ValencySeq shifted(int l) const;
};

// Relative-saturation sequence c_l, 1 <= c_l <= d_l - 1; defaults to d_l-1.
struct CSeq {
  std::vector<int> prefix;
  std::vector<int> pattern;
  bool isDefault = true;  // c_l = d_l - 1

  int c(const ValencySeq& v, int level) const {
    if (isDefault) return v.d(level) - 1;
    if (level < (int)prefix.size()) return prefix[level];
    return pattern[(level - (int)prefix.size()) % pattern.size()];
  }
  CSeq shifted(int l) const;
};

// Finite group F of boundary labels, elements indexed 0..order-1 with 0 = id.
struct FGroup {
  enum class Kind { Cyclic, Symmetric };
  Kind kind = Kind::Cyclic;
  int size = 2;   // Z/size or S_size
  int order = 2;  // size or size!

  static FGroup cyclic(int n);
  static FGroup symmetric(int n);  // n <= 5

  uint16_t mul(uint16_t a, uint16_t b) const;
  uint16_t inv(uint16_t a) const;
  bool abelian() const { return kind == Kind::Cyclic || size <= 2; }
  std::string name(uint16_t a) const;

 private:
  std::vector<Perm> perms_;  // Symmetric only, indexed by rank
  uint16_t rankOf(const Perm& p) const { return (uint16_t)p.rank(); }
};

enum class HModelKind { DiagonalFull, CustomPortrait };

// Explicit finite-state portrait model for directed generators (constant
// valency only). The canonical instance is the dihedral h = (h, s).
struct CustomPortrait {
  int order = 1;
  std::vector<std::vector<uint16_t>> mul;
  std::vector<uint16_t> inv;
  std::vector<uint16_t> child;            // spine component
  std::vector<std::vector<Perm>> rooted;  // positions 2..c+1
  std::vector<Perm> rootComp;             // must fix 1
  std::vector<std::string> names;

  static CustomPortrait dinfinity();  // {1, h} on the binary tree, h = (h, s)
};

// Abstract directed element. Diagonal model: one component per distinct
// valency value. Custom model: index into the portrait tables.
struct HElem {
  static constexpr int kMaxComps = 4;
  std::array<Perm, kMaxComps> comps{};
  uint8_t ncomps = 0;
  uint16_t id = 0;

  bool operator==(const HElem& o) const {
    if (ncomps != o.ncomps || id != o.id) return false;
    for (int i = 0; i < ncomps; ++i)
      if (!(comps[i] == o.comps[i])) return false;
    return true;
  }
};

// One HF letter: directed part times boundary label (they commute).
struct KLetter {
  HElem h;
  uint16_t f = 0;
  bool operator==(const KLetter& o) const { return f == o.f && h == o.h; }
};

struct GroupConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class GroupSpec {
 public:
  ValencySeq valency;
  CSeq cseq;
  HModelKind hkind = HModelKind::DiagonalFull;
  CustomPortrait portrait;
  FGroup fgroup;
  bool saturatedFlag = true;
  std::string label;

  static GroupSpec fromJson(const std::string& jsonText);
  static GroupSpec fromJsonFile(const std::string& path);
  static GroupSpec diagonal(ValencySeq v, FGroup f, CSeq c = {});
  static GroupSpec dinfinityF(FGroup f);

  void validate() const;  // throws GroupConfigError
  GroupSpec shifted(int l) const;
  std::string describe() const;

  int d(int level) const { return valency.d(level); }
  int c(int level) const { return cseq.c(valency, level); }

  // ---- abstract H group ----
  HElem hId() const;
  bool hIsId(const HElem& h) const;
  HElem hMul(const HElem& a, const HElem& b) const;
  HElem hInv(const HElem& a) const;
  uint64_t hOrder() const;
  HElem hFromIndex(uint64_t idx) const;  // enumeration of H
  HElem hUniform(Rng& rng) const;
  std::string hName(const HElem& h) const;

  // ---- realization of h at a level ----
  Perm hRootComp(const HElem& h, int level) const;  // fixes 1
  HElem hChild(const HElem& h, int level) const;
  // rooted component at position i (2 <= i <= c(level)+1), an element of S_{d_{level+1}}
  Perm hRootedComp(const HElem& h, int level, int i) const;
  // true iff the realization of h from `level` on is the trivial automorphism
  bool hTrivialFrom(const HElem& h, int level) const;
  // true iff nontrivial rooted components keep occurring at arbitrarily deep levels
  bool hInfiniteType(const HElem& h, int level) const;

  // ---- HF letters ----
  KLetter kId() const { return KLetter{hId(), 0}; }
  bool kIsId(const KLetter& k) const { return k.f == 0 && hIsId(k.h); }
  KLetter kMul(const KLetter& a, const KLetter& b) const {
    return KLetter{hMul(a.h, b.h), fgroup.mul(a.f, b.f)};
  }
  KLetter kInv(const KLetter& a) const {
    return KLetter{hInv(a.h), fgroup.inv(a.f)};
  }
  uint64_t kOrder() const { return hOrder() * fgroup.order; }
  KLetter kUniform(Rng& rng) const {
    return KLetter{hUniform(rng), (uint16_t)rng.below(fgroup.order)};
  }

  Perm sUniform(int level, Rng& rng) const { return Perm::uniform(d(level), rng); }

  // Saturation: uniform measure on H projects to uniform on every rooted
  // factor. Verified by enumeration when |H| <= 10^4.
  void checkSaturation() const;
};

// vertex of the tree: digits 1..d_l, one per level, 1-based values
using VertexPath = std::vector<uint8_t>;
// boundary ray u·1^inf: explicit prefix, implicit all-ones tail
using Ray = std::vector<uint8_t>;

bool rayIsSpine(const Ray& r);  // equals 1^inf
std::string rayToString(const Ray& r);
Ray normalizeRay(Ray r);  // trim trailing 1s

}  // namespace eforge
