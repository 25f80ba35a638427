#include "picard/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace picard {

namespace {

// Canonical representative of a projective class: scale so the first nonzero
// entry (row-major) is 1. Equal classes get equal representatives.
Mat3 canonical_rep(const Mat3& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!m(i, j).is_zero()) {
        CycNum inv = m(i, j).inverse();
        Mat3 r;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) r(a, b) = m(a, b) * inv;
        return r;
      }
  throw std::invalid_argument("zero matrix has no projective class");
}

// Total order on canonical representatives.
bool canonical_less(const Mat3& a, const Mat3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int c = CycNum::compare(a(i, j), b(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

struct CanonicalLess {
  bool operator()(const Mat3& a, const Mat3& b) const {
    return canonical_less(a, b);
  }
};

}  // namespace

FiniteGroupTable FiniteGroupTable::from_raw(std::vector<std::vector<int>> mul,
                                            std::vector<Mat3> reps,
                                            std::vector<int> gens) {
  FiniteGroupTable t;
  t.mul_ = std::move(mul);
  t.reps_ = std::move(reps);
  t.gens_ = std::move(gens);
  int n = t.size();
  t.inv_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t.mul(a, b) == 0) t.inv_[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < n; ++a)
    if (t.inv(a) < 0) throw std::invalid_argument("table has no inverses");
  return t;
}

long FiniteGroupTable::element_order(int a) const {
  long ord = 1;
  int x = a;
  while (x != 0) {
    x = mul(x, a);
    ++ord;
    if (ord > size()) throw std::logic_error("order exceeds group size");
  }
  return ord;
}

std::vector<long> FiniteGroupTable::order_multiset() const {
  std::vector<long> orders;
  for (int a = 0; a < size(); ++a) orders.push_back(element_order(a));
  std::sort(orders.begin(), orders.end());
  return orders;
}

bool FiniteGroupTable::is_abelian() const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroupTable::find(const Mat3& m) const {
  Mat3 c = canonical_rep(m);
  for (int i = 0; i < size(); ++i)
    if (mat_equal(reps_[static_cast<std::size_t>(i)], c)) return i;
  return -1;
}

std::vector<int> FiniteGroupTable::subgroup(const std::vector<int>& gens) const {
  std::set<int> seen{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : gens) {
        for (int y : {mul(x, g), mul(x, inv(g))})
          if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> FiniteGroupTable::normal_closure(
    const std::vector<int>& gens) const {
  std::vector<int> current = gens;
  while (true) {
    std::set<int> conj;
    for (int g : current)
      for (int h = 0; h < size(); ++h)
        conj.insert(mul(mul(h, g), inv(h)));
    std::vector<int> sub = subgroup({conj.begin(), conj.end()});
    if (sub.size() == current.size() &&
        std::equal(sub.begin(), sub.end(), current.begin()))
      return sub;
    current = std::move(sub);
  }
}

FiniteGroupTable FiniteGroupTable::subgroup_table(
    const std::vector<int>& elements) const {
  std::map<int, int> index_of;
  // keep identity first; preserve this table's canonical order otherwise
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || sorted[0] != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  for (std::size_t i = 0; i < sorted.size(); ++i) index_of[sorted[i]] =
      static_cast<int>(i);
  int n = static_cast<int>(sorted.size());
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index_of.find(this->mul(sorted[static_cast<std::size_t>(a)],
                                        sorted[static_cast<std::size_t>(b)]));
      if (it == index_of.end())
        throw std::invalid_argument("element set is not closed");
      mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          it->second;
    }
  std::vector<Mat3> reps;
  if (!reps_.empty())
    for (int e : sorted) reps.push_back(reps_[static_cast<std::size_t>(e)]);
  return from_raw(std::move(mul), std::move(reps), {});
}

FiniteGroupTable closure(const std::vector<Mat3>& gens, int cap) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  std::map<Mat3, int, CanonicalLess> index_of;
  std::vector<Mat3> elems;  // actual (H-unitary) representatives
  std::vector<Mat3> canon;

  auto add = [&](const Mat3& m) -> int {
    Mat3 c = canonical_rep(m);
    auto it = index_of.find(c);
    if (it != index_of.end()) return it->second;
    if (static_cast<int>(elems.size()) >= cap)
      throw CapExceeded("closure exceeded cap of " + std::to_string(cap) +
                        " elements");
    int id = static_cast<int>(elems.size());
    index_of.emplace(c, id);
    elems.push_back(m);
    canon.push_back(c);
    return id;
  };

  add(Mat3::Identity());
  std::vector<int> gen_ids;
  for (const Mat3& g : gens) gen_ids.push_back(add(g));

  std::size_t next = 0;
  while (next < elems.size()) {
    Mat3 x = elems[next];
    ++next;
    for (const Mat3& g : gens) {
      add(x * g);
      add(x * inverse(g));
    }
  }

  // canonical sort, identity pinned at index 0
  int n = static_cast<int>(elems.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    bool ida = pu_is_identity(elems[static_cast<std::size_t>(a)]);
    bool idb = pu_is_identity(elems[static_cast<std::size_t>(b)]);
    if (ida != idb) return ida;
    return canonical_less(canon[static_cast<std::size_t>(a)],
                          canon[static_cast<std::size_t>(b)]);
  });
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;

  std::map<Mat3, int, CanonicalLess> sorted_index;
  std::vector<Mat3> sorted_elems(static_cast<std::size_t>(n));
  std::vector<Mat3> sorted_canon(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    sorted_elems[static_cast<std::size_t>(i)] =
        elems[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    sorted_canon[static_cast<std::size_t>(i)] =
        canon[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    sorted_index.emplace(sorted_canon[static_cast<std::size_t>(i)], i);
  }

  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mat3 prod = sorted_elems[static_cast<std::size_t>(a)] *
                  sorted_elems[static_cast<std::size_t>(b)];
      auto it = sorted_index.find(canonical_rep(prod));
      if (it == sorted_index.end())
        throw std::logic_error("closure not closed under multiplication");
      mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          it->second;
    }

  std::vector<int> new_gens;
  for (int g : gen_ids) new_gens.push_back(rank[static_cast<std::size_t>(g)]);
  // store canonical representatives so find() is comparison-only
  return FiniteGroupTable::from_raw(std::move(mul), std::move(sorted_canon),
                                    std::move(new_gens));
}

FiniteGroupTable closure(const std::vector<GroupElt>& gens, int cap) {
  std::vector<Mat3> ms;
  for (const GroupElt& g : gens) ms.push_back(g.matrix);
  return closure(ms, cap);
}

bool common_fixed_point(const FiniteGroupTable& t, const Vec3& v) {
  if (vec_is_zero(v)) throw ZeroVector();
  for (int i = 0; i < t.size(); ++i)
    if (!fixes_projectively(t.rep(i), v)) return false;
  return true;
}

FiniteGroupTable center(const FiniteGroupTable& t) {
  std::vector<int> c;
  for (int a = 0; a < t.size(); ++a) {
    bool central = true;
    for (int b = 0; b < t.size() && central; ++b)
      central = t.mul(a, b) == t.mul(b, a);
    if (central) c.push_back(a);
  }
  return t.subgroup_table(c);
}

FiniteGroupTable quotient(const FiniteGroupTable& t,
                          const std::vector<int>& normal_gens) {
  std::vector<int> n = t.normal_closure(normal_gens);
  std::set<int> nset(n.begin(), n.end());
  int size = t.size();
  // coset representative = smallest index in the coset gN
  std::vector<int> coset_rep(static_cast<std::size_t>(size), -1);
  std::vector<int> reps;
  for (int g = 0; g < size; ++g) {
    if (coset_rep[static_cast<std::size_t>(g)] >= 0) continue;
    reps.push_back(g);
    for (int h : n) coset_rep[static_cast<std::size_t>(t.mul(g, h))] = g;
  }
  std::map<int, int> index_of;
  for (std::size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] =
      static_cast<int>(i);
  int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(q),
                                    std::vector<int>(static_cast<std::size_t>(q)));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      int prod = t.mul(reps[static_cast<std::size_t>(a)],
                       reps[static_cast<std::size_t>(b)]);
      mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          index_of.at(coset_rep[static_cast<std::size_t>(prod)]);
    }
  return FiniteGroupTable::from_raw(std::move(mul), {}, {});
}

namespace {

// Greedy small generating set: add elements (in table order) that enlarge the
// generated subgroup until it is everything.
std::vector<int> generating_set(const FiniteGroupTable& t) {
  std::vector<int> gens;
  std::size_t have = 1;
  for (int x = 1; x < t.size() && have < static_cast<std::size_t>(t.size());
       ++x) {
    std::vector<int> trial = gens;
    trial.push_back(x);
    std::size_t sz = t.subgroup(trial).size();
    if (sz > have) {
      gens = std::move(trial);
      have = sz;
    }
  }
  return gens;
}

bool extend_isomorphism(const FiniteGroupTable& a, const FiniteGroupTable& b,
                        const std::vector<int>& gens,
                        const std::vector<std::vector<int>>& word_of,
                        std::vector<int>& image, std::size_t next_gen) {
  if (next_gen == gens.size()) {
    // images of generators fixed; extend along precomputed words and check
    std::vector<int> map(static_cast<std::size_t>(a.size()), -1);
    map[0] = 0;
    std::vector<bool> hit(static_cast<std::size_t>(b.size()), false);
    hit[0] = true;
    for (int x = 1; x < a.size(); ++x) {
      int img = 0;
      for (int letter : word_of[static_cast<std::size_t>(x)]) {
        int gi = letter >= 0 ? image[static_cast<std::size_t>(letter)]
                             : b.inv(image[static_cast<std::size_t>(-letter - 1)]);
        img = b.mul(img, gi);
      }
      if (hit[static_cast<std::size_t>(img)]) return false;  // not injective
      hit[static_cast<std::size_t>(img)] = true;
      map[static_cast<std::size_t>(x)] = img;
    }
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y)
        if (map[static_cast<std::size_t>(a.mul(x, y))] !=
            b.mul(map[static_cast<std::size_t>(x)],
                  map[static_cast<std::size_t>(y)]))
          return false;
    return true;
  }
  long want = a.element_order(gens[next_gen]);
  for (int cand = 0; cand < b.size(); ++cand) {
    if (b.element_order(cand) != want) continue;
    image[next_gen] = cand;
    if (extend_isomorphism(a, b, gens, word_of, image, next_gen + 1))
      return true;
  }
  return false;
}

}  // namespace

bool iso_check(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > 10000)
    throw std::invalid_argument("iso_check capped at order 10^4");
  if (a.order_multiset() != b.order_multiset()) return false;
  if (a.is_abelian() != b.is_abelian()) return false;

  std::vector<int> gens = generating_set(a);
  // express each element of a as a word in the generators (letters g or
  // inverse encoded as -g-1), by BFS
  std::vector<std::vector<int>> word_of(static_cast<std::size_t>(a.size()));
  std::vector<bool> known(static_cast<std::size_t>(a.size()), false);
  known[0] = true;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        int g = gens[gi];
        struct Step {
          int target;
          int letter;
        };
        for (const Step& s :
             {Step{a.mul(x, g), static_cast<int>(gi)},
              Step{a.mul(x, a.inv(g)), -static_cast<int>(gi) - 1}}) {
          if (known[static_cast<std::size_t>(s.target)]) continue;
          known[static_cast<std::size_t>(s.target)] = true;
          word_of[static_cast<std::size_t>(s.target)] =
              word_of[static_cast<std::size_t>(x)];
          word_of[static_cast<std::size_t>(s.target)].push_back(s.letter);
          next.push_back(s.target);
        }
      }
    frontier = std::move(next);
  }

  std::vector<int> image(gens.size(), -1);
  return extend_isomorphism(a, b, gens, word_of, image, 0);
}

std::vector<long> abelian_invariants(const FiniteGroupTable& t) {
  if (!t.is_abelian())
    throw std::invalid_argument("abelian_invariants requires an abelian group");
  std::vector<long> factors;
  FiniteGroupTable cur = t;
  while (cur.size() > 1) {
    // an element of maximal order generates a direct summand
    int best = 1;
    long best_ord = 0;
    for (int x = 1; x < cur.size(); ++x) {
      long o = cur.element_order(x);
      if (o > best_ord) {
        best_ord = o;
        best = x;
      }
    }
    factors.push_back(best_ord);
    cur = quotient(cur, {best});
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

FiniteGroupTable cyclic_group(int n) {
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          (a + b) % n;
  return FiniteGroupTable::from_raw(std::move(mul), {}, {});
}

FiniteGroupTable direct_product(const FiniteGroupTable& a,
                                const FiniteGroupTable& b) {
  int n = a.size() * b.size();
  auto idx = [&](int x, int y) { return x * b.size() + y; };
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int x1 = 0; x1 < a.size(); ++x1)
    for (int y1 = 0; y1 < b.size(); ++y1)
      for (int x2 = 0; x2 < a.size(); ++x2)
        for (int y2 = 0; y2 < b.size(); ++y2)
          mul[static_cast<std::size_t>(idx(x1, y1))]
             [static_cast<std::size_t>(idx(x2, y2))] =
                 idx(a.mul(x1, x2), b.mul(y1, y2));
  return FiniteGroupTable::from_raw(std::move(mul), {}, {});
}

FiniteGroupTable dihedral_group(int n) {
  // elements r^i s^j, 0 <= i < n, j in {0,1}; s r s = r^-1
  int size = 2 * n;
  auto idx = [&](int i, int j) { return j * n + i; };
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(size),
                                    std::vector<int>(static_cast<std::size_t>(size)));
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + (-1)^j1 i2) s^(j1+j2)
          int i = j1 == 0 ? (i1 + i2) % n : ((i1 - i2) % n + n) % n;
          int j = (j1 + j2) % 2;
          mul[static_cast<std::size_t>(idx(i1, j1))]
             [static_cast<std::size_t>(idx(i2, j2))] = idx(i, j);
        }
  return FiniteGroupTable::from_raw(std::move(mul), {}, {});
}

}  // namespace picard
