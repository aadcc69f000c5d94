#include "canext/order.hpp"

#include <algorithm>

#include "canext/error.hpp"

namespace canext {

namespace {

std::vector<std::string> defaultLabels(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

std::vector<Subset> downRowsFromUp(int n, const std::vector<Subset>& up) {
  std::vector<Subset> down(n, Subset(n));
  for (int i = 0; i < n; ++i)
    up[i].forEach([&](int j) { down[j].set(i); });
  return down;
}

}  // namespace

Preorder Preorder::saturate(int n, const std::vector<std::pair<int, int>>& pairs,
                            std::vector<std::string> labels) {
  requireCarrierWidth(n, "saturate");
  if (labels.empty()) labels = defaultLabels(n);
  if (static_cast<int>(labels.size()) != n)
    throw PreconditionError("saturate: label count does not match carrier size");
  std::vector<Subset> up(n, Subset(n));
  for (int i = 0; i < n; ++i) up[i].set(i);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw PreconditionError("saturate: pair index out of range: (" +
                              std::to_string(a) + "," + std::to_string(b) + ")");
    up[a].set(b);
  }
  // Warshall on bitset rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
  auto down = downRowsFromUp(n, up);
  return Preorder(n, std::move(up), std::move(down), std::move(labels));
}

Preorder Preorder::fromMatrix(int n, const std::vector<bool>& leq,
                              std::vector<std::string> labels) {
  requireCarrierWidth(n, "fromMatrix");
  if (static_cast<int>(leq.size()) != n * n)
    throw PreconditionError("fromMatrix: matrix size mismatch");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i * n + j]) pairs.emplace_back(i, j);
  Preorder p = saturate(n, pairs, std::move(labels));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(i, j) != static_cast<bool>(leq[i * n + j]))
        throw PreconditionError("fromMatrix: relation is not transitive/reflexive at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
  return p;
}

bool Preorder::isAntisymmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (leq(i, j) && leq(j, i)) return false;
  return true;
}

bool Preorder::sameOrderAs(const Preorder& other) const {
  if (n_ != other.n_) return false;
  for (int i = 0; i < n_; ++i)
    if (up_[i] != other.up_[i]) return false;
  return true;
}

Poset::Poset(const Preorder& p) : Preorder(p) {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (leq(i, j) && leq(j, i))
        throw PreconditionError("Poset: not antisymmetric: " + label(i) +
                                " and " + label(j) + " are order-equivalent");
}

MonotoneMap::MonotoneMap(Preorder src, Preorder tgt, std::vector<int> img)
    : source(std::move(src)), target(std::move(tgt)), image(std::move(img)) {
  if (static_cast<int>(image.size()) != source.size())
    throw PreconditionError("MonotoneMap: image size mismatch");
  for (int v : image)
    if (v < 0 || v >= target.size())
      throw PreconditionError("MonotoneMap: image value out of range");
  for (int i = 0; i < source.size(); ++i)
    for (int j = 0; j < source.size(); ++j)
      if (source.leq(i, j) && !target.leq(image[i], image[j]))
        throw PreconditionError("MonotoneMap: not order-preserving at (" +
                                source.label(i) + "," + source.label(j) + ")");
}

std::pair<Poset, MonotoneMap> quotientToPoset(const Preorder& p) {
  const int n = p.size();
  std::vector<int> cls(n, -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(i);
    for (int j = i; j < n; ++j)
      if (p.leq(i, j) && p.leq(j, i)) cls[j] = c;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (p.leq(reps[a], reps[b])) pairs.emplace_back(a, b);
  std::vector<std::string> labels(m);
  for (int c = 0; c < m; ++c) {
    // Class label lists its members so collapsed elements stay visible.
    std::string lab;
    for (int i = 0; i < n; ++i)
      if (cls[i] == c) {
        if (!lab.empty()) lab += "~";
        lab += p.label(i);
      }
    labels[c] = lab;
  }
  Poset q(Preorder::saturate(m, pairs, std::move(labels)));
  MonotoneMap surj(p, q, cls);
  return {std::move(q), std::move(surj)};
}

Subset downSet(const Preorder& p, const Subset& s) {
  Subset out(p.size());
  s.forEach([&](int x) { out |= p.down(x); });
  return out;
}

Subset upSet(const Preorder& p, const Subset& s) {
  Subset out(p.size());
  s.forEach([&](int x) { out |= p.up(x); });
  return out;
}

bool isDirected(const Preorder& p, const Subset& s) {
  if (s.empty()) return false;
  bool ok = true;
  s.forEach([&](int x) {
    s.forEach([&](int y) {
      if (!ok) return;
      if (!(p.up(x) & p.up(y)).intersects(s)) ok = false;
    });
  });
  return ok;
}

bool isCodirected(const Preorder& p, const Subset& s) {
  if (s.empty()) return false;
  bool ok = true;
  s.forEach([&](int x) {
    s.forEach([&](int y) {
      if (!ok) return;
      if (!(p.down(x) & p.down(y)).intersects(s)) ok = false;
    });
  });
  return ok;
}

int maximumOf(const Preorder& p, const Subset& s) {
  int best = -1;
  s.forEach([&](int x) {
    if (s.subsetOf(p.down(x))) {
      if (best < 0) best = x;
    }
  });
  return best;
}

int minimumOf(const Preorder& p, const Subset& s) {
  int best = -1;
  s.forEach([&](int x) {
    if (s.subsetOf(p.up(x))) {
      if (best < 0) best = x;
    }
  });
  return best;
}

Poset productOrder(const Poset& p, const Poset& q) {
  const int np = p.size(), nq = q.size();
  requireCarrierWidth(np * nq, "productOrder");
  std::vector<std::pair<int, int>> pairs;
  for (int i1 = 0; i1 < np; ++i1)
    for (int j1 = 0; j1 < nq; ++j1)
      for (int i2 = 0; i2 < np; ++i2)
        for (int j2 = 0; j2 < nq; ++j2)
          if (p.leq(i1, i2) && q.leq(j1, j2))
            pairs.emplace_back(i1 * nq + j1, i2 * nq + j2);
  std::vector<std::string> labels(np * nq);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j)
      labels[i * nq + j] = "(" + p.label(i) + "," + q.label(j) + ")";
  return Poset(Preorder::saturate(np * nq, pairs, std::move(labels)));
}

Poset dualOrder(const Poset& p) {
  const int n = p.size();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(j, i)) pairs.emplace_back(i, j);
  return Poset(Preorder::saturate(n, pairs, p.labels()));
}

std::vector<std::pair<int, int>> hasseEdges(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !p.leq(i, j)) continue;
      bool covering = true;
      for (int k = 0; k < n && covering; ++k)
        if (k != i && k != j && p.leq(i, k) && p.leq(k, j)) covering = false;
      if (covering) out.emplace_back(i, j);
    }
  return out;
}

namespace {

bool extendIso(const Preorder& p, const Preorder& q, std::vector<int>& img,
               std::vector<bool>& used, int i) {
  const int n = p.size();
  if (i == n) return true;
  for (int c = 0; c < n; ++c) {
    if (used[c]) continue;
    if (p.up(i).count() != q.up(c).count() || p.down(i).count() != q.down(c).count())
      continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) {
      if (p.leq(i, j) != q.leq(c, img[j])) ok = false;
      if (p.leq(j, i) != q.leq(img[j], c)) ok = false;
    }
    if (!ok) continue;
    img[i] = c;
    used[c] = true;
    if (extendIso(p, q, img, used, i + 1)) return true;
    used[c] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> findOrderIsomorphism(const Preorder& p,
                                                     const Preorder& q) {
  if (p.size() != q.size()) return std::nullopt;
  std::vector<int> img(p.size(), -1);
  std::vector<bool> used(p.size(), false);
  if (extendIso(p, q, img, used, 0)) return img;
  return std::nullopt;
}

}  // namespace canext
