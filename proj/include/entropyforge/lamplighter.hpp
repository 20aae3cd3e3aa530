#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "entropyforge/group.hpp"

namespace eforge {

// D_inf = <s, h | s^2 = h^2 = 1> as isometries of Z: h: x -> -x, s: x -> 1-x.
// This matches the tree generators s = (1,1)σ and h = (h, s): the basepoint
// 1^inf corresponds to 0 and w(1^inf) corresponds to w(0).
struct Dinf {
  int8_t eps = 1;  // +1 translation-like, -1 reflection-like
  int64_t t = 0;   // w(0)

  static Dinf id() { return {}; }
  static Dinf s() { return {-1, 1}; }
  static Dinf h() { return {-1, 0}; }
  int64_t apply(int64_t x) const { return eps * x + t; }
  // word product: apply *this first, then o
  Dinf then(const Dinf& o) const {
    return Dinf{(int8_t)(eps * o.eps), o.eps * t + o.t};
  }
  Dinf inverse() const { return Dinf{eps, eps == 1 ? -t : t}; }
  bool operator==(const Dinf& o) const { return eps == o.eps && t == o.t; }
  bool operator<(const Dinf& o) const { return t != o.t ? t < o.t : eps < o.eps; }
};

// Position of an orbit point along the Schreier half-line: 1^inf=0, s=1, sh=2...
int64_t halfLineIndex(int64_t t);
// Covering map c(w) = half-line index of w(1^inf); c(w) = c(hw), 2-to-1.
int64_t coveringMap(const Dinf& w);

// Element of the lamplighter F wr_{Dinf} Dinf; F must be abelian.
struct LampElement {
  std::map<Dinf, uint16_t> lamps;  // finite support, values in F \ {0} only
  Dinf pos;
  bool isId() const { return lamps.empty() && pos == Dinf::id(); }
};

struct LampGroup {
  FGroup F;
  explicit LampGroup(FGroup f);

  LampElement mulGen(const LampElement& x, const Dinf& d) const;      // x · d
  LampElement mulLamp(const LampElement& x, uint16_t f) const;        // x · f (lamp at pos^{-1})
  LampElement mul(const LampElement& a, const LampElement& b) const;  // general product
};

// One coupled trajectory: X in F wr Dinf and the projected extended-group data
// (boundary function phi over orbit points), advanced by increments h s h' f.
struct LampWalk {
  LampGroup G;
  LampElement X;                    // cover position
  Dinf treePart;                    // image in Dinf
  std::map<int64_t, uint16_t> phi;  // orbit point t -> F label (trivial dropped)
  int64_t coveringViolations = 0;

  explicit LampWalk(FGroup f) : G(std::move(f)) {}
  void step(Rng& rng);         // multiply by h s h' f, all uniform
  bool coverTrivial() const { return X.isId(); }
  bool projectedTrivial() const { return treePart == Dinf::id() && phi.empty(); }
  void checkCovering();        // phi(x) == sum over c^{-1}(x) of lamps, counts violations
};

// Exact word norm in F wr Dinf for the step set {h s h' f}. Interval DP over
// the required landing set on the Cayley line; exact (BFS-validated on the
// 10-ball by the tests).
int64_t lampNorm(const LampGroup& G, const LampElement& e);

// All elements of norm <= radius with their norms, by BFS over the step set.
std::vector<std::pair<LampElement, int>> lampBall(const LampGroup& G, int radius);

}  // namespace eforge
