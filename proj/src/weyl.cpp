#include "hecke/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace hecke {

Coweight::Coweight(std::vector<int64_t> n_coords) : c_(std::move(n_coords)) {
  if (c_.size() < 2) throw InvalidArgument("coweight needs rank >= 2");
  int64_t s = std::accumulate(c_.begin(), c_.end(), int64_t{0});
  if (s != 0) throw InvalidArgument("coweight coordinates must sum to zero");
}

Coweight Coweight::zero(int n) {
  return Coweight(std::vector<int64_t>(n, 0));
}

Coweight Coweight::from_m(const std::vector<int64_t>& m) {
  if (m.empty()) throw InvalidArgument("m-coordinates need length >= 1");
  std::vector<int64_t> n(m.size() + 1);
  n[0] = m[0];
  for (size_t i = 1; i < m.size(); ++i) n[i] = m[i] - m[i - 1];
  n[m.size()] = -m.back();
  return Coweight(std::move(n));
}

std::vector<int64_t> Coweight::m_coords() const {
  std::vector<int64_t> m(c_.size() - 1);
  int64_t acc = 0;
  for (size_t i = 0; i + 1 < c_.size(); ++i) {
    acc += c_[i];
    m[i] = acc;
  }
  return m;
}

bool Coweight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int64_t x) { return x == 0; });
}

bool Coweight::is_dominant() const {
  for (size_t i = 0; i + 1 < c_.size(); ++i)
    if (c_[i] < c_[i + 1]) return false;
  return true;
}

int64_t Coweight::height() const {
  int64_t h = 0, acc = 0;
  for (size_t i = 0; i + 1 < c_.size(); ++i) {
    acc += c_[i];
    h += std::llabs(acc);
  }
  return h;
}

int64_t Coweight::norm2() const {
  int64_t s = 0;
  for (int64_t x : c_) s += x * x;
  return s;
}

double Coweight::norm() const {
  return std::sqrt(static_cast<double>(norm2()));
}

int64_t Coweight::delta_exponent() const {
  // sum_{i<j} (n_i - n_j) = sum_i (n-1-2i) n_i
  int64_t l = static_cast<int64_t>(c_.size()) - 1;
  int64_t s = 0;
  for (size_t i = 0; i < c_.size(); ++i) s += (l - 2 * static_cast<int64_t>(i)) * c_[i];
  return s;
}

Coweight operator+(const Coweight& a, const Coweight& b) {
  if (a.rank() != b.rank()) throw InvalidArgument("coweight rank mismatch");
  std::vector<int64_t> c(a.c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return Coweight(std::move(c));
}

Coweight operator-(const Coweight& a, const Coweight& b) {
  if (a.rank() != b.rank()) throw InvalidArgument("coweight rank mismatch");
  std::vector<int64_t> c(a.c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
  return Coweight(std::move(c));
}

Coweight operator-(const Coweight& a) {
  std::vector<int64_t> c(a.c_);
  for (auto& x : c) x = -x;
  return Coweight(std::move(c));
}

int compare(const Coweight& a, const Coweight& b) {
  if (a.rank() != b.rank()) throw InvalidArgument("coweight rank mismatch");
  int64_t acc = 0;
  for (int i = 0; i + 1 < a.rank(); ++i) {
    acc += a[i] - b[i];  // m_i of the difference
    if (acc > 0) return 1;
    if (acc < 0) return -1;
  }
  return 0;
}

WeylElement::WeylElement(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw InvalidArgument("not a permutation");
    seen[v] = 1;
  }
}

WeylElement WeylElement::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return WeylElement(std::move(img));
}

WeylElement WeylElement::transposition(int n, int i, int j) {
  auto w = identity(n);
  std::swap(w.img_[i], w.img_[j]);
  return w;
}

WeylElement WeylElement::inverse() const {
  std::vector<int> inv(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<int>(i);
  return WeylElement(std::move(inv));
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.rank() != b.rank()) throw InvalidArgument("weyl rank mismatch");
  std::vector<int> img(a.img_.size());
  for (size_t i = 0; i < img.size(); ++i) img[i] = a.img_[b.img_[i]];
  return WeylElement(std::move(img));
}

Coweight WeylElement::apply(const Coweight& t) const {
  if (rank() != t.rank()) throw InvalidArgument("weyl/coweight rank mismatch");
  std::vector<int64_t> c(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) c[img_[i]] = t[static_cast<int>(i)];
  return Coweight(std::move(c));
}

int WeylElement::inversions() const {
  int count = 0;
  for (size_t i = 0; i < img_.size(); ++i)
    for (size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++count;
  return count;
}

std::vector<WeylElement> all_weyl(int n) {
  if (n < 2 || n > 8) throw BudgetExceeded("weyl group enumeration limited to 2 <= n <= 8");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<WeylElement> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Coweight> weyl_orbit(const Coweight& t) {
  std::vector<int64_t> c(t.n_coords());
  std::sort(c.begin(), c.end());
  std::set<std::vector<int64_t>> seen;
  std::vector<Coweight> out;
  do {
    if (seen.insert(c).second) out.push_back(Coweight(c));
  } while (std::next_permutation(c.begin(), c.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Coweight, WeylElement> dominant_rep(const Coweight& t) {
  int n = t.rank();
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return t[a] > t[b]; });
  std::vector<int> img(n);
  std::vector<int64_t> sorted(n);
  for (int k = 0; k < n; ++k) {
    img[idx[k]] = k;
    sorted[k] = t[idx[k]];
  }
  WeylElement w(std::move(img));
  return {Coweight(std::move(sorted)), w};
}

Coweight dual(const Coweight& t) {
  return dominant_rep(-t).first;
}

namespace {

void enumerate_m(int l, int64_t budget, std::vector<int64_t>& m, int pos,
                 std::vector<Coweight>& out) {
  if (pos == l) {
    Coweight t = Coweight::from_m(m);
    if (t.is_dominant()) out.push_back(t);
    return;
  }
  for (int64_t v = 0; v <= budget; ++v) {
    m[pos] = v;
    enumerate_m(l, budget - v, m, pos + 1, out);
  }
  m[pos] = 0;
}

}  // namespace

std::vector<Coweight> dominant_up_to_height(int n, int64_t bound) {
  if (n < 2) throw InvalidArgument("rank must be >= 2");
  if (bound < 0) throw InvalidArgument("negative height bound");
  // Dominant coweights have nonnegative m-coordinates, so height is just the
  // coordinate sum and the enumeration is a simplex walk.
  std::vector<int64_t> m(n - 1, 0);
  std::vector<Coweight> out;
  enumerate_m(n - 1, bound, m, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coweight> hilbert_basis(int n, int64_t height_bound) {
  if (height_bound < 0) height_bound = 2 * n;
  auto all = dominant_up_to_height(n, height_bound);
  std::vector<Coweight> nonzero;
  for (auto& t : all)
    if (!t.is_zero()) nonzero.push_back(t);
  std::set<std::vector<int64_t>> pool;
  for (auto& t : nonzero) pool.insert(t.n_coords());
  std::vector<Coweight> basis;
  for (auto& t : nonzero) {
    bool splits = false;
    for (auto& a : nonzero) {
      if (a.height() >= t.height()) continue;  // heights of dominant parts add up
      Coweight b = t - a;
      if (!b.is_zero() && b.is_dominant() && pool.count(b.n_coords())) {
        splits = true;
        break;
      }
    }
    if (!splits) basis.push_back(t);
  }
  return basis;
}

std::vector<Coweight> decompose(const Coweight& t) {
  if (!t.is_dominant()) throw InvalidArgument("decompose expects a dominant coweight");
  if (t.is_zero()) return {};
  auto gens = hilbert_basis(t.rank());
  // breadth-first search for a shortest generator sum reaching t
  std::map<std::vector<int64_t>, int> parent;  // state -> generator index used
  std::queue<Coweight> q;
  q.push(Coweight::zero(t.rank()));
  parent[q.front().n_coords()] = -1;
  while (!q.empty()) {
    Coweight cur = q.front();
    q.pop();
    if (cur == t) break;
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Coweight nxt = cur + gens[gi];
      if (nxt.height() > t.height()) continue;
      Coweight rest = t - nxt;
      if (!rest.is_dominant()) continue;
      if (parent.count(nxt.n_coords())) continue;
      parent[nxt.n_coords()] = static_cast<int>(gi);
      q.push(nxt);
    }
  }
  if (!parent.count(t.n_coords()))
    throw Error("no generator decomposition found (height bound too small?)");
  std::vector<Coweight> steps;
  Coweight cur = t;
  while (!cur.is_zero()) {
    int gi = parent.at(cur.n_coords());
    steps.push_back(gens[gi]);
    cur = cur - gens[gi];
  }
  return steps;
}

}  // namespace hecke
