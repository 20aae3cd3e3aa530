#include "entropyforge/group.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace eforge {

using nlohmann::json;

// ---- ValencySeq ----

ValencySeq ValencySeq::make(std::vector<int> prefix, std::vector<int> pattern) {
  if (pattern.empty()) throw GroupConfigError("valency pattern must be nonempty");
  ValencySeq v;
  v.prefix = std::move(prefix);
  v.pattern = std::move(pattern);
  std::set<int> vals;
  for (int d : v.prefix) vals.insert(d);
  for (int d : v.pattern) vals.insert(d);
  for (int d : vals) {
    if (d < 2) throw GroupConfigError("valency value < 2");
    if (d > Perm::kMaxDeg) throw GroupConfigError("valency value > 16 unsupported");
  }
  if (vals.size() > HElem::kMaxComps)
    throw GroupConfigError("more than 4 distinct valency values unsupported");
  v.distinctValues.assign(vals.begin(), vals.end());
  v.dMin = *vals.begin();
  v.dMax = *vals.rbegin();
  return v;
}

int ValencySeq::valueIndex(int value) const {
  for (size_t i = 0; i < distinctValues.size(); ++i)
    if (distinctValues[i] == value) return (int)i;
  throw std::logic_error("unknown valency value");
}

std::vector<int> ValencySeq::valuesFrom(int level) const {
  std::set<int> vals(pattern.begin(), pattern.end());
  for (int m = level; m < (int)prefix.size(); ++m) vals.insert(prefix[m]);
  return std::vector<int>(vals.begin(), vals.end());
}

bool ValencySeq::valueOccursFrom(int value, int level) const {
  for (int m = level; m < (int)prefix.size(); ++m)
    if (prefix[m] == value) return true;
  for (int x : pattern)
    if (x == value) return true;
  return false;
}

ValencySeq ValencySeq::shifted(int l) const {
  std::vector<int> pre = prefix;
  std::vector<int> pat = pattern;
  if (l <= (int)pre.size()) {
    pre.erase(pre.begin(), pre.begin() + l);
  } else {
    int r = (l - (int)pre.size()) % (int)pat.size();
    pre.clear();
    std::rotate(pat.begin(), pat.begin() + r, pat.end());
  }
  return make(pre, pat);
}

CSeq CSeq::shifted(int l) const {
  if (isDefault) return {};
  CSeq c;
  c.isDefault = false;
  c.prefix = prefix;
  c.pattern = pattern;
  if (l <= (int)c.prefix.size()) {
    c.prefix.erase(c.prefix.begin(), c.prefix.begin() + l);
  } else {
    int r = (l - (int)c.prefix.size()) % (int)c.pattern.size();
    c.prefix.clear();
    std::rotate(c.pattern.begin(), c.pattern.begin() + r, c.pattern.end());
  }
  return c;
}

// ---- FGroup ----

FGroup FGroup::cyclic(int n) {
  if (n < 1 || n > 4096) throw GroupConfigError("cyclic F size out of range");
  FGroup f;
  f.kind = Kind::Cyclic;
  f.size = n;
  f.order = n;
  return f;
}

FGroup FGroup::symmetric(int n) {
  if (n < 1 || n > 5) throw GroupConfigError("symmetric F size out of range (<= 5)");
  FGroup f;
  f.kind = Kind::Symmetric;
  f.size = n;
  f.order = 1;
  for (int i = 2; i <= n; ++i) f.order *= i;
  f.perms_.resize(f.order);
  // enumerate by rank: generate all permutations in lexicographic order
  Perm p = Perm::identity(n);
  std::array<uint8_t, Perm::kMaxDeg> a{};
  for (int i = 0; i < n; ++i) a[i] = (uint8_t)i;
  do {
    Perm q;
    q.deg = (uint8_t)n;
    for (int i = 0; i < n; ++i) q.img[i] = a[i];
    f.perms_[q.rank()] = q;
  } while (std::next_permutation(a.begin(), a.begin() + n));
  (void)p;
  return f;
}

uint16_t FGroup::mul(uint16_t a, uint16_t b) const {
  if (kind == Kind::Cyclic) return (uint16_t)((a + b) % order);
  return rankOf(perms_[a].then(perms_[b]));
}

uint16_t FGroup::inv(uint16_t a) const {
  if (kind == Kind::Cyclic) return (uint16_t)((order - a) % order);
  return rankOf(perms_[a].inverse());
}

std::string FGroup::name(uint16_t a) const {
  if (kind == Kind::Cyclic) return std::to_string(a);
  return perms_[a].oneLine();
}

// ---- CustomPortrait ----

CustomPortrait CustomPortrait::dinfinity() {
  CustomPortrait p;
  p.order = 2;
  p.mul = {{0, 1}, {1, 0}};
  p.inv = {0, 1};
  p.child = {0, 1};  // h = (h, s)
  Perm id2 = Perm::identity(2);
  Perm swap2 = Perm::transposition(2, 1, 2);
  p.rooted = {{id2}, {swap2}};
  p.rootComp = {id2, id2};
  p.names = {"e", "h"};
  return p;
}

// ---- GroupSpec ----

GroupSpec GroupSpec::diagonal(ValencySeq v, FGroup f, CSeq c) {
  GroupSpec g;
  g.valency = std::move(v);
  g.cseq = std::move(c);
  g.hkind = HModelKind::DiagonalFull;
  g.fgroup = std::move(f);
  g.validate();
  return g;
}

GroupSpec GroupSpec::dinfinityF(FGroup f) {
  GroupSpec g;
  g.valency = ValencySeq::constant(2);
  g.hkind = HModelKind::CustomPortrait;
  g.portrait = CustomPortrait::dinfinity();
  g.fgroup = std::move(f);
  g.label = "dinfinity";
  g.validate();
  return g;
}

void GroupSpec::validate() const {
  for (int l = 0; l < (int)(valency.prefix.size() + valency.pattern.size()); ++l) {
    int dd = d(l), cc = c(l);
    if (cc < 1 || cc > dd - 1) throw GroupConfigError("c_l out of range at level " + std::to_string(l));
  }
  if (hkind == HModelKind::CustomPortrait) {
    if (!valency.isConstant())
      throw GroupConfigError("custom portraits require constant valency");
    const auto& p = portrait;
    if (p.order < 1 || (int)p.mul.size() != p.order || (int)p.child.size() != p.order ||
        (int)p.rooted.size() != p.order || (int)p.rootComp.size() != p.order)
      throw GroupConfigError("malformed custom portrait");
    for (int i = 0; i < p.order; ++i) {
      if (!p.rootComp[i].fixes(1))
        throw GroupConfigError("custom portrait root component must fix 1");
      if ((int)p.rooted[i].size() != c(0))
        throw GroupConfigError("custom portrait rooted arity != c");
    }
  }
  if (saturatedFlag) checkSaturation();
}

GroupSpec GroupSpec::shifted(int l) const {
  GroupSpec g = *this;
  g.valency = valency.shifted(l);
  g.cseq = cseq.shifted(l);
  if (hkind == HModelKind::DiagonalFull) {
    // components for values absent from the shifted sequence are dropped
    g.validate();
  }
  return g;
}

std::string GroupSpec::describe() const {
  std::ostringstream os;
  os << "valency prefix=[";
  for (size_t i = 0; i < valency.prefix.size(); ++i)
    os << (i ? "," : "") << valency.prefix[i];
  os << "] pattern=[";
  for (size_t i = 0; i < valency.pattern.size(); ++i)
    os << (i ? "," : "") << valency.pattern[i];
  os << "] hModel=" << (hkind == HModelKind::DiagonalFull ? "diagonal-full" : "custom-portrait")
     << " |H|=" << hOrder() << " |F|=" << fgroup.order << " |HF|=" << kOrder()
     << " cDefault=" << (cseq.isDefault ? "yes" : "no");
  return os.str();
}

HElem GroupSpec::hId() const {
  HElem h;
  if (hkind == HModelKind::DiagonalFull) {
    h.ncomps = (uint8_t)valency.distinctValues.size();
    for (int i = 0; i < h.ncomps; ++i)
      h.comps[i] = Perm::identity(valency.distinctValues[i]);
  }
  return h;
}

bool GroupSpec::hIsId(const HElem& h) const {
  if (hkind == HModelKind::CustomPortrait) return h.id == 0;
  for (int i = 0; i < h.ncomps; ++i)
    if (!h.comps[i].isIdentity()) return false;
  return true;
}

HElem GroupSpec::hMul(const HElem& a, const HElem& b) const {
  HElem r = a;
  if (hkind == HModelKind::CustomPortrait) {
    r.id = portrait.mul[a.id][b.id];
    return r;
  }
  for (int i = 0; i < r.ncomps; ++i) r.comps[i] = a.comps[i].then(b.comps[i]);
  return r;
}

HElem GroupSpec::hInv(const HElem& a) const {
  HElem r = a;
  if (hkind == HModelKind::CustomPortrait) {
    r.id = portrait.inv[a.id];
    return r;
  }
  for (int i = 0; i < r.ncomps; ++i) r.comps[i] = a.comps[i].inverse();
  return r;
}

uint64_t GroupSpec::hOrder() const {
  if (hkind == HModelKind::CustomPortrait) return (uint64_t)portrait.order;
  uint64_t n = 1;
  for (int v : valency.distinctValues) {
    uint64_t f = 1;
    for (int i = 2; i <= v; ++i) f *= (uint64_t)i;
    n *= f;
  }
  return n;
}

HElem GroupSpec::hFromIndex(uint64_t idx) const {
  HElem h = hId();
  if (hkind == HModelKind::CustomPortrait) {
    h.id = (uint16_t)idx;
    return h;
  }
  for (int i = 0; i < h.ncomps; ++i) {
    int v = valency.distinctValues[i];
    uint64_t f = 1;
    for (int j = 2; j <= v; ++j) f *= (uint64_t)j;
    uint64_t r = idx % f;
    idx /= f;
    // unrank: inverse of Perm::rank
    std::vector<uint8_t> avail(v);
    for (int j = 0; j < v; ++j) avail[j] = (uint8_t)j;
    Perm p;
    p.deg = (uint8_t)v;
    for (int pos = 0; pos < v; ++pos) {
      uint64_t radix = 1;
      for (int j = 2; j <= v - pos - 1; ++j) radix *= (uint64_t)j;
      uint64_t q = r / radix;
      r %= radix;
      p.img[pos] = avail[q];
      avail.erase(avail.begin() + q);
    }
    h.comps[i] = p;
  }
  return h;
}

HElem GroupSpec::hUniform(Rng& rng) const {
  HElem h = hId();
  if (hkind == HModelKind::CustomPortrait) {
    h.id = (uint16_t)rng.below((uint64_t)portrait.order);
    return h;
  }
  for (int i = 0; i < h.ncomps; ++i)
    h.comps[i] = Perm::uniform(valency.distinctValues[i], rng);
  return h;
}

std::string GroupSpec::hName(const HElem& h) const {
  if (hkind == HModelKind::CustomPortrait) return portrait.names[h.id];
  std::string s;
  for (int i = 0; i < h.ncomps; ++i) {
    if (i) s.push_back('|');
    s += h.comps[i].oneLine();
  }
  return s;
}

Perm GroupSpec::hRootComp(const HElem& h, int level) const {
  if (hkind == HModelKind::CustomPortrait) return portrait.rootComp[h.id];
  (void)h;
  return Perm::identity(d(level));
}

HElem GroupSpec::hChild(const HElem& h, int level) const {
  if (hkind == HModelKind::CustomPortrait) {
    HElem r = h;
    r.id = portrait.child[h.id];
    return r;
  }
  (void)level;
  return h;  // diagonal embedding: the same abstract tuple one level down
}

Perm GroupSpec::hRootedComp(const HElem& h, int level, int i) const {
  if (hkind == HModelKind::CustomPortrait) return portrait.rooted[h.id][i - 2];
  (void)i;  // all positions carry the same component in the diagonal model
  return h.comps[valency.valueIndex(d(level + 1))];
}

bool GroupSpec::hTrivialFrom(const HElem& h, int level) const {
  if (hkind == HModelKind::DiagonalFull) {
    for (int v : valency.valuesFrom(level + 1))
      if (!h.comps[valency.valueIndex(v)].isIdentity()) return false;
    return true;
  }
  // custom: follow the spine; a revisited all-trivial state closes the cycle
  std::set<uint16_t> seen;
  uint16_t cur = h.id;
  while (true) {
    if (!portrait.rootComp[cur].isIdentity()) return false;
    for (const Perm& b : portrait.rooted[cur])
      if (!b.isIdentity()) return false;
    if (!seen.insert(cur).second) return true;
    cur = portrait.child[cur];
  }
}

bool GroupSpec::hInfiniteType(const HElem& h, int level) const {
  if (hkind == HModelKind::DiagonalFull) {
    for (int v : valency.pattern)
      if (!h.comps[valency.valueIndex(v)].isIdentity()) return true;
    // prefix values die out eventually
    (void)level;
    return false;
  }
  // custom: the spine walk enters a cycle; infinite type iff the cycle carries
  // a nontrivial component
  std::vector<uint16_t> path;
  std::set<uint16_t> seen;
  uint16_t cur = h.id;
  while (seen.insert(cur).second) {
    path.push_back(cur);
    cur = portrait.child[cur];
  }
  // cur starts the cycle
  size_t start = std::find(path.begin(), path.end(), cur) - path.begin();
  for (size_t i = start; i < path.size(); ++i) {
    uint16_t x = path[i];
    if (!portrait.rootComp[x].isIdentity()) return true;
    for (const Perm& b : portrait.rooted[x])
      if (!b.isIdentity()) return true;
  }
  return false;
}

void GroupSpec::checkSaturation() const {
  uint64_t n = hOrder();
  if (n > 10000) return;  // diagonal construction is saturated; enumeration capped
  int classes = (int)(valency.prefix.size() + valency.pattern.size());
  for (int l = 0; l < classes; ++l) {
    int dd1 = d(l + 1);
    uint64_t fact = 1;
    for (int i = 2; i <= dd1; ++i) fact *= (uint64_t)i;
    for (int pos = 2; pos <= c(l) + 1; ++pos) {
      std::map<uint64_t, uint64_t> hist;
      for (uint64_t i = 0; i < n; ++i)
        hist[hRootedComp(hFromIndex(i), l, pos).rank()]++;
      if (hist.size() != fact)
        throw GroupConfigError("saturation: projection at level " + std::to_string(l) +
                               " not surjective");
      for (auto& [r, cnt] : hist)
        if (cnt * fact != n)
          throw GroupConfigError("saturation: projection at level " + std::to_string(l) +
                                 " not equidistributed");
    }
  }
}

// ---- JSON config ----

namespace {

void rejectUnknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw GroupConfigError("unknown field '" + it.key() + "' in " + where);
}

std::vector<int> intList(const json& j) {
  std::vector<int> v;
  for (const auto& x : j) v.push_back(x.get<int>());
  return v;
}

}  // namespace

GroupSpec GroupSpec::fromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GroupConfigError(std::string("config parse error at byte ") +
                           std::to_string(e.byte) + ": " + e.what());
  }
  rejectUnknown(j, {"valency", "hModel", "fGroup", "cSeq", "saturated", "label"}, "config");
  if (!j.contains("valency") || !j.contains("hModel") || !j.contains("fGroup"))
    throw GroupConfigError("config requires valency, hModel, fGroup");

  const json& jv = j["valency"];
  rejectUnknown(jv, {"prefix", "pattern"}, "valency");
  if (!jv.contains("pattern")) throw GroupConfigError("valency.pattern required");
  ValencySeq val = ValencySeq::make(
      jv.contains("prefix") ? intList(jv["prefix"]) : std::vector<int>{}, intList(jv["pattern"]));

  GroupSpec g;
  g.valency = val;

  std::string hm = j["hModel"].get<std::string>();
  if (hm == "diagonal-full") {
    g.hkind = HModelKind::DiagonalFull;
  } else if (hm == "dinf-custom") {
    g.hkind = HModelKind::CustomPortrait;
    g.portrait = CustomPortrait::dinfinity();
    if (!(val.isConstant() && val.d(0) == 2))
      throw GroupConfigError("dinf-custom requires constant binary valency");
  } else {
    throw GroupConfigError("hModel must be 'diagonal-full' or 'dinf-custom'");
  }

  const json& jf = j["fGroup"];
  rejectUnknown(jf, {"structure", "size"}, "fGroup");
  std::string st = jf.at("structure").get<std::string>();
  int size = jf.at("size").get<int>();
  if (st == "cyclic") g.fgroup = FGroup::cyclic(size);
  else if (st == "symmetric") g.fgroup = FGroup::symmetric(size);
  else throw GroupConfigError("fGroup.structure must be cyclic or symmetric");

  if (j.contains("cSeq")) {
    const json& jc = j["cSeq"];
    rejectUnknown(jc, {"prefix", "pattern"}, "cSeq");
    g.cseq.isDefault = false;
    g.cseq.prefix = jc.contains("prefix") ? intList(jc["prefix"]) : std::vector<int>{};
    g.cseq.pattern = intList(jc.at("pattern"));
    if (g.cseq.pattern.empty()) throw GroupConfigError("cSeq.pattern must be nonempty");
  }
  if (j.contains("saturated")) g.saturatedFlag = j["saturated"].get<bool>();
  if (j.contains("label")) g.label = j["label"].get<std::string>();
  g.validate();
  return g;
}

GroupSpec GroupSpec::fromJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return fromJson(ss.str());
}

// ---- rays ----

bool rayIsSpine(const Ray& r) {
  for (uint8_t x : r)
    if (x != 1) return false;
  return true;
}

Ray normalizeRay(Ray r) {
  while (!r.empty() && r.back() == 1) r.pop_back();
  return r;
}

std::string rayToString(const Ray& r) {
  static const char* digits = "0123456789abcdefg";
  std::string s;
  Ray n = normalizeRay(r);
  for (uint8_t x : n) s.push_back(digits[x]);
  s += "1^inf";
  return s;
}

}  // namespace eforge
