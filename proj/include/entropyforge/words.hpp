#pragma once

#include <map>
#include <string>
#include <vector>

#include "entropyforge/group.hpp"

namespace eforge {

// Alternate word s_1 k_1 s_2 ... s_n k_n s_{n+1} at a given level.
// Invariant: s.size() == k.size() + 1. Identity letters are first-class.
struct Word {
  int level = 0;
  std::vector<Perm> s;
  std::vector<KLetter> k;

  int n() const { return (int)k.size(); }
  static Word identity(const GroupSpec& g, int level) {
    Word w;
    w.level = level;
    w.s.push_back(Perm::identity(g.d(level)));
    return w;
  }
};

struct RawLetter {
  bool isS = true;
  Perm s;
  KLetter k;
  static RawLetter S(Perm p) { RawLetter r; r.isS = true; r.s = p; return r; }
  static RawLetter K(KLetter x) { RawLetter r; r.isS = false; r.k = x; return r; }
};

// Merge packs of consecutive same-group letters into canonical alternate form.
Word canonicalAlternate(const GroupSpec& g, int level, const std::vector<RawLetter>& raw);

Word wordInverse(const GroupSpec& g, const Word& w);
Word wordConcat(const GroupSpec& g, const Word& a, const Word& b);
Word stripBoundary(const Word& w);  // drop all f parts

struct RewriteTrace {
  // per k-factor j of the input: target child t (0-based) and the index of the
  // k-pack of that child it was merged into
  std::vector<std::pair<int, int>> route;
};

struct RewriteResult {
  std::vector<Word> children;
  Perm root;  // s_1 σ_{h_1} s_2 ... s_{n+1}
};

RewriteResult rewriteStep(const GroupSpec& g, const Word& w, RewriteTrace* trace = nullptr);

// Iterated rewriting down to words of length <= 1 (the minimal tree).
struct WordTreeNode {
  Word word;
  Perm sigma;                          // root permutation of `word`
  std::vector<WordTreeNode> children;  // empty iff m_v <= 1
  bool isLeaf() const { return children.empty(); }
};
WordTreeNode rewriteFull(const GroupSpec& g, const Word& w);

struct ActivitySummary {
  int64_t activity = 0;       // # active leaves (m_v == 1)
  int64_t support = 0;        // # active leaves with nontrivial boundary label
  int depth = 0;              // minimal tree depth
  int64_t leafCount = 0;      // all leaves
  std::vector<int> childLen;  // m_t of the top-level rewrite (n >= 2 only)
};
// Streaming computation, no tree retained.
ActivitySummary activitySummary(const GroupSpec& g, const Word& w);
int64_t activity(const GroupSpec& g, const Word& w);

// Active boundary points with their F labels (labels may be trivial here).
std::vector<std::pair<Ray, uint16_t>> activeBoundary(const GroupSpec& g, const Word& w);
// Finite support map of the element's boundary function; trivial labels dropped.
std::vector<std::pair<Ray, uint16_t>> boundaryFunction(const GroupSpec& g, const Word& w);

// Ascendance forest on the k-factors of all rewritten words.
struct AscendanceForest {
  struct Node {
    int vertexId;  // index into `vertices`
    int j;         // k-factor index within that word
  };
  std::vector<std::string> vertices;       // tree paths, "" = root, "12" = vertex (1,2)
  std::vector<Word> vertexWords;           // rewritten word at each vertex
  std::vector<Node> nodes;
  std::vector<std::pair<int, int>> edges;  // indices into nodes: (parent factor, child factor)
  bool acyclic = true;
  int64_t components = 0;
  // per active leaf: node ids of the original word's factors in its component, j-ordered
  std::vector<std::vector<int>> leafSources;
  std::vector<int> leafVertexIds;
};
AscendanceForest ascendanceForest(const GroupSpec& g, const Word& w);

// {(s_1 h_1 ... h_{j-1} s_j)^{-1}(1^inf) : j = 1..n} — the boundary points the
// word's suffixes touch; Prop 3.5(4) realized through its proof (the printed
// set there also lists the basepoint and the full-word image, which breaks the
// exact count; see notes).
std::vector<Ray> invertedOrbit(const GroupSpec& g, const Word& w);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TrivBudget {
  size_t cap = 1'000'000;
  size_t used = 0;
  void charge(size_t c = 1) {
    used += c;
    if (used > cap) throw BudgetExceeded("triviality state budget exceeded");
  }
};

// Word problem: tree part by recursion over the rewriting with a finite-state
// spine descent, boundary part via the forest products.
bool isTrivial(const GroupSpec& g, const Word& w, TrivBudget* budget = nullptr);

// Complete invariant: equal keys <=> equal group elements.
struct CanonicalForm {
  std::string key;
  int64_t activity = 0;
  int64_t support = 0;
  int depth = 0;
  std::vector<std::pair<Ray, uint16_t>> boundary;
};
CanonicalForm canonicalForm(const GroupSpec& g, const Word& w, TrivBudget* budget = nullptr);
std::string canonicalKey(const GroupSpec& g, const Word& w);

// ---- action / oracles ----
VertexPath actVertex(const GroupSpec& g, const Word& w, const VertexPath& v);
// image ray and the value of the element's boundary function at x
std::pair<Ray, uint16_t> actRay(const GroupSpec& g, const Word& w, const Ray& x);

// Brute-force equality to a depth: compare the action on every vertex with
// |v| <= depth and the boundary labels on every ray u·1^inf with |u| <= depth.
bool oracleEqual(const GroupSpec& g, const Word& a, const Word& b, int depth);
bool oracleTrivial(const GroupSpec& g, const Word& w, int depth);
// depth that makes the oracle sound for words of length n
int oracleDepth(const GroupSpec& g, int n);

// ---- (de)serialization for the CLI ----
std::string wordToString(const GroupSpec& g, const Word& w);
Word wordFromString(const GroupSpec& g, int level, const std::string& text);
std::string wordTreeJson(const GroupSpec& g, const Word& w);     // debug dump
std::string minimalTreeJson(const GroupSpec& g, const Word& w);  // debug dump

}  // namespace eforge
