#include "picard/fp_presentation.hpp"

#include <algorithm>
#include <sstream>

#include "picard/words.hpp"

namespace picard {

namespace {

constexpr int inv_letter(int l) { return l ^ 1; }

std::vector<int> free_reduce(const std::vector<int>& w) {
  std::vector<int> out;
  for (int l : w) {
    if (!out.empty() && out.back() == inv_letter(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace

Presentation::Presentation(std::vector<std::string> gens,
                           std::vector<std::vector<int>> relators)
    : gens_(std::move(gens)) {
  for (auto& r : relators) relators_.push_back(free_reduce(r));
}

std::vector<int> Presentation::parse_letters(const std::string& word) const {
  auto resolve = [this](const std::string& name) -> int {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i] == name) return static_cast<int>(i);
    throw UnknownGenerator(name);
  };
  std::vector<int> letters;
  for (const auto& [sym, exp] : parse_symbol_word(word, resolve)) {
    int l = exp >= 0 ? 2 * sym : 2 * sym + 1;
    for (long k = 0; k < std::abs(exp); ++k) letters.push_back(l);
  }
  return free_reduce(letters);
}

Presentation Presentation::parse(const std::string& text) {
  auto gpos = text.find("gens:");
  auto rpos = text.find("rels:");
  if (gpos == std::string::npos)
    throw ParseError("expected 'gens:'", 0);
  std::string gen_part =
      text.substr(gpos + 5, rpos == std::string::npos
                                ? std::string::npos
                                : rpos - gpos - 5);
  // strip a separating ';'
  auto semi = gen_part.find(';');
  if (semi != std::string::npos) gen_part = gen_part.substr(0, semi);
  Presentation p;
  std::istringstream gs(gen_part);
  std::string name;
  while (gs >> name) p.gens_.push_back(name);
  if (p.gens_.empty()) throw ParseError("no generators", gpos);
  if (rpos != std::string::npos) {
    std::string rel_part = text.substr(rpos + 5);
    std::string current;
    auto flush = [&] {
      // trim
      std::string w = current;
      current.clear();
      std::size_t a = w.find_first_not_of(" \t\n;");
      if (a == std::string::npos) return;
      std::size_t b = w.find_last_not_of(" \t\n;");
      p.relators_.push_back(p.parse_letters(w.substr(a, b - a + 1)));
    };
    for (char c : rel_part) {
      if (c == ',')
        flush();
      else
        current.push_back(c);
    }
    flush();
  }
  return p;
}

std::string Presentation::relator_string(std::size_t i) const {
  const std::vector<int>& r = relators_[i];
  if (r.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (k) os << "*";
    os << gens_[static_cast<std::size_t>(r[k] / 2)];
    if (r[k] % 2) os << "^-1";
  }
  return os.str();
}

Presentation Presentation::with_extra_relators(
    const std::vector<std::string>& words) const {
  Presentation p = *this;
  for (const std::string& w : words)
    p.relators_.push_back(free_reduce(parse_letters(w)));
  return p;
}

namespace {

// Todd-Coxeter working state. Rows are filled in creation order (HLT); a
// final verification pass re-scans every relator so the returned table is a
// checked certificate, not just the algorithm's word.
class Enumerator {
 public:
  Enumerator(const Presentation& p,
             const std::vector<std::string>& subgroup_words, long max_cosets)
      : pres_(p), max_(max_cosets) {
    for (const auto& r : p.relators()) relators_.push_back(r);
    for (const std::string& w : subgroup_words)
      subgens_.push_back(p.parse_letters(w));
    ncols_ = 2 * p.num_generators();
    new_coset();  // coset 0
  }

  CosetTable run() {
    for (const auto& w : subgens_) scan_and_fill(0, w);
    bool stable = false;
    while (!stable) {
      for (std::size_t alpha = 0; alpha < parent_.size(); ++alpha) {
        if (!live(static_cast<int>(alpha))) continue;
        for (const auto& r : relators_) {
          if (!live(static_cast<int>(alpha))) break;
          scan_and_fill(static_cast<int>(alpha), r);
        }
        if (!live(static_cast<int>(alpha))) continue;
        for (int x = 0; x < ncols_; ++x)
          if (at(static_cast<int>(alpha), x) < 0)
            define(static_cast<int>(alpha), x);
      }
      stable = verified();
    }
    return compress();
  }

 private:
  const Presentation& pres_;
  long max_;
  int ncols_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgens_;
  std::vector<std::vector<int>> table_;  // -1 = undefined
  std::vector<int> parent_;              // union-find, parent_[c] <= c
  std::vector<int> queue_;
  long live_count_ = 0;

  int& at(int c, int x) {
    return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
  }
  bool live(int c) { return parent_[static_cast<std::size_t>(c)] == c; }

  int new_coset() {
    if (live_count_ >= max_) throw MaxCosetsExceeded(max_);
    int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.emplace_back(static_cast<std::size_t>(ncols_), -1);
    ++live_count_;
    return c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r)
      r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    --live_count_;
    queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!queue_.empty()) {
      int gamma = queue_.back();
      queue_.pop_back();
      for (int x = 0; x < ncols_; ++x) {
        int delta = at(gamma, x);
        if (delta < 0) continue;
        at(delta, inv_letter(x)) = -1;
        int mu = rep(gamma);
        int nu = rep(delta);
        if (at(mu, x) >= 0)
          merge(nu, at(mu, x));
        else if (at(nu, inv_letter(x)) >= 0)
          merge(mu, at(nu, inv_letter(x)));
        else {
          at(mu, x) = nu;
          at(nu, inv_letter(x)) = mu;
        }
      }
    }
  }

  int define(int c, int x) {
    int d = new_coset();
    at(c, x) = d;
    at(d, inv_letter(x)) = c;
    return d;
  }

  void scan_and_fill(int alpha, const std::vector<int>& w) {
    if (w.empty()) return;
    while (true) {
      alpha = rep(alpha);
      int f = alpha;
      std::size_t i = 0;
      while (i < w.size() && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i == w.size()) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      int b = alpha;
      std::size_t j = w.size();
      while (j > i && at(b, inv_letter(w[j - 1])) >= 0)
        b = at(b, inv_letter(w[--j]));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, inv_letter(w[i])) = f;
        return;
      }
      define(f, w[i]);
      // rescan from the top with the fresh definition
    }
  }

  bool scans_closed(int alpha, const std::vector<int>& w) {
    int f = alpha;
    for (int x : w) {
      f = at(f, x);
      if (f < 0) return false;
    }
    return f == alpha;
  }

  bool verified() {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!live(static_cast<int>(c))) continue;
      for (int x = 0; x < ncols_; ++x)
        if (at(static_cast<int>(c), x) < 0) return false;
      for (const auto& r : relators_)
        if (!scans_closed(static_cast<int>(c), r)) return false;
    }
    for (const auto& w : subgens_)
      if (!scans_closed(rep(0), w)) return false;
    return true;
  }

  CosetTable compress() {
    std::vector<int> index(parent_.size(), -1);
    int n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (live(static_cast<int>(c))) index[c] = n++;
    CosetTable t;
    t.num_cosets = n;
    t.complete = true;
    t.action.assign(static_cast<std::size_t>(n),
                    std::vector<int>(static_cast<std::size_t>(ncols_), -1));
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!live(static_cast<int>(c))) continue;
      for (int x = 0; x < ncols_; ++x) {
        int d = at(static_cast<int>(c), x);
        t.action[static_cast<std::size_t>(index[c])]
                [static_cast<std::size_t>(x)] =
            index[static_cast<std::size_t>(rep(d))];
      }
    }
    return t;
  }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<std::string>& subgroup_words,
                        long max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be >= 1");
  Enumerator e(p, subgroup_words, max_cosets);
  return e.run();
}

FiniteGroupTable regular_representation(const Presentation& p,
                                        const CosetTable& t) {
  if (!t.complete)
    throw std::invalid_argument("need a complete coset table");
  int n = t.num_cosets;
  // defining word (letter sequence) for each element, by BFS from 0
  std::vector<std::vector<int>> word_of(static_cast<std::size_t>(n));
  std::vector<bool> known(static_cast<std::size_t>(n), false);
  known[0] = true;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int c : frontier)
      for (int x = 0; x < 2 * p.num_generators(); ++x) {
        int d = t.action[static_cast<std::size_t>(c)]
                        [static_cast<std::size_t>(x)];
        if (known[static_cast<std::size_t>(d)]) continue;
        known[static_cast<std::size_t>(d)] = true;
        word_of[static_cast<std::size_t>(d)] =
            word_of[static_cast<std::size_t>(c)];
        word_of[static_cast<std::size_t>(d)].push_back(x);
        next.push_back(d);
      }
    frontier = std::move(next);
  }
  for (bool k : known)
    if (!k) throw std::invalid_argument("coset table is not transitive");
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int c = x;
      for (int l : word_of[static_cast<std::size_t>(y)])
        c = t.action[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)];
      mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = c;
    }
  std::vector<int> gens;
  for (int g = 0; g < p.num_generators(); ++g)
    gens.push_back(t.action[0][static_cast<std::size_t>(2 * g)]);
  return FiniteGroupTable::from_raw(std::move(mul), {}, std::move(gens));
}

std::vector<Integer> smith_normal_form(std::vector<std::vector<Integer>> m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // locate a nonzero entry of minimal absolute value in the submatrix
    std::size_t pr = t, pc = t;
    bool found = false;
    Integer best;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        if (m[r][c] == 0) continue;
        Integer a = abs(m[r][c]);
        if (!found || a < best) {
          best = a;
          pr = r;
          pc = c;
          found = true;
        }
      }
    if (!found) break;
    std::swap(m[t], m[pr]);
    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][t], m[r][pc]);
    // clear row and column t
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        Integer q = m[r][t] / m[t][t];  // truncated division is fine here
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) {
          std::swap(m[t], m[r]);
          dirty = true;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        Integer q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) {
          for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][t], m[r][c]);
          dirty = true;
        }
      }
    }
    ++t;
  }
  std::size_t k = std::min(rows, cols);
  std::vector<Integer> d(k, Integer(0));
  for (std::size_t i = 0; i < t; ++i) d[i] = abs(m[i][i]);
  // enforce the divisibility chain: diag(a,b) ~ diag(gcd, lcm)
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < t; ++i) {
      if (d[i] == 0 || d[i + 1] % d[i] == 0) continue;
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[i + 1].get_mpz_t());
      l = d[i] / g * d[i + 1];
      d[i] = g;
      d[i + 1] = l;
      changed = true;
    }
  }
  return d;
}

AbelianInvariants abelianization(const Presentation& p) {
  std::size_t cols = static_cast<std::size_t>(p.num_generators());
  std::vector<std::vector<Integer>> m;
  for (const auto& r : p.relators()) {
    std::vector<Integer> row(cols, Integer(0));
    for (int l : r) row[static_cast<std::size_t>(l / 2)] += (l % 2) ? -1 : 1;
    m.push_back(std::move(row));
  }
  AbelianInvariants inv;
  if (m.empty()) {
    inv.free_rank = static_cast<int>(cols);
    return inv;
  }
  std::vector<Integer> d = smith_normal_form(std::move(m));
  int nonzero = 0;
  for (const Integer& x : d)
    if (x != 0) ++nonzero;
  inv.free_rank = static_cast<int>(cols) - nonzero;
  for (const Integer& x : d)
    if (x > 1) inv.torsion.push_back(x.get_si());
  std::sort(inv.torsion.begin(), inv.torsion.end());
  return inv;
}

HomCheckReport hom_check(const Presentation& p,
                         const std::map<std::string, Mat3>& images) {
  std::vector<Mat3> img;
  for (const std::string& g : p.generators()) {
    auto it = images.find(g);
    if (it == images.end()) throw UnknownGenerator(g);
    img.push_back(it->second);
  }
  HomCheckReport report;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    Mat3 acc = Mat3::Identity();
    for (int l : p.relators()[i]) {
      const Mat3& gm = img[static_cast<std::size_t>(l / 2)];
      acc = acc * (l % 2 ? inverse(gm) : gm);
    }
    report.relators.push_back({p.relator_string(i), pu_is_identity(acc)});
  }
  return report;
}

bool matrix_group_vs_presentation(const FiniteGroupTable& t,
                                  const Presentation& p,
                                  const std::map<std::string, Mat3>& images,
                                  long max_cosets) {
  // images must generate t
  std::vector<int> idx;
  for (const std::string& g : p.generators()) {
    auto it = images.find(g);
    if (it == images.end()) throw UnknownGenerator(g);
    int i = t.find(it->second);
    if (i < 0) return false;
    idx.push_back(i);
  }
  if (t.subgroup(idx).size() != static_cast<std::size_t>(t.size()))
    return false;
  if (!hom_check(p, images).all_hold()) return false;
  CosetTable ct = todd_coxeter(p, {}, max_cosets);
  return ct.num_cosets == t.size();
}

}  // namespace picard
