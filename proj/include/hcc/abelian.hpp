#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hcc/error.hpp"
#include "hcc/group.hpp"

namespace hcc {

inline std::vector<int> prime_factors(std::uint64_t n) {
  std::vector<int> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(static_cast<int>(n));
  return ps;
}

inline std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

/// A cyclic factor Z/p^exponent of a primary decomposition.
struct PrimaryFactor {
  int p;
  int exponent;
  std::int64_t order() const { return ipow(p, exponent); }
  friend bool operator==(const PrimaryFactor&, const PrimaryFactor&) = default;
};

/// Isomorphism type of a finite abelian group as invariant factors
/// d1 | d2 | ... | dk with every di > 1 (the trivial group has none).
struct AbelianInvariants {
  std::vector<std::uint64_t> factors;

  static AbelianInvariants from_primary(std::vector<PrimaryFactor> primary) {
    std::map<int, std::vector<int>> by_prime;
    for (const auto& f : primary)
      if (f.exponent > 0) by_prime[f.p].push_back(f.exponent);
    std::size_t k = 0;
    for (auto& [p, es] : by_prime) {
      std::sort(es.rbegin(), es.rend());
      k = std::max(k, es.size());
    }
    // factors[k-1] is the largest; the i-th largest collects each prime's i-th exponent
    std::vector<std::uint64_t> d(k, 1);
    for (const auto& [p, es] : by_prime)
      for (std::size_t i = 0; i < es.size(); ++i) d[k - 1 - i] *= static_cast<std::uint64_t>(ipow(p, es[i]));
    return AbelianInvariants{std::move(d)};
  }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (auto d : factors) n = detail::sat_mul(n, d);
    return n;
  }
  bool trivial() const { return factors.empty(); }

  std::string str() const {
    if (factors.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += " x ";
      s += "Z" + std::to_string(factors[i]);
    }
    return s;
  }

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Invariant factors of an abelian FiniteGroup read off from the number of
/// solutions of x^(p^j) = 1. Throws NonAbelianEntry on a nonabelian input.
inline AbelianInvariants abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) detail::fail(ErrorKind::NonAbelianEntry, "group '", g.label(), "' is not abelian");
  std::vector<PrimaryFactor> primary;
  std::vector<int> orders(g.order());
  for (int a = 0; a < g.order(); ++a) orders[a] = g.element_order(a);
  for (int p : prime_factors(g.order())) {
    // s[j] = log_p #{x : x^(p^j) = 1}
    std::vector<int> s{0};
    for (int j = 1;; ++j) {
      std::int64_t pj = ipow(p, j);
      std::int64_t count = 0;
      for (int o : orders)
        if (pj % o == 0) ++count;
      int log = 0;
      while (count > 1) {
        count /= p;
        ++log;
      }
      s.push_back(log);
      if (s[j] == s[j - 1]) break;
    }
    // #{i : lambda_i >= j} = s[j] - s[j-1]
    for (std::size_t j = 1; j + 1 < s.size() || j < s.size(); ++j) {
      int at_least_j = s[j] - s[j - 1];
      int at_least_next = j + 1 < s.size() ? s[j + 1] - s[j] : 0;
      for (int c = 0; c < at_least_j - at_least_next; ++c) primary.push_back({p, static_cast<int>(j)});
    }
  }
  return AbelianInvariants::from_primary(std::move(primary));
}

/// Primary cyclic decomposition of a small abelian group presented as a list
/// of opaque element ids with a multiplication. Used for vertex-group
/// subgroups (2-cell ids) whose order is at most a few hundred.
struct CyclicBasis {
  struct Generator {
    PrimaryFactor factor;
    int element;
  };
  std::vector<Generator> generators;
  std::map<int, std::vector<int>> coords;   // element id -> coordinates
  std::map<std::vector<int>, int> element;  // coordinates -> element id

  std::size_t rank() const { return generators.size(); }

  std::vector<PrimaryFactor> factors() const {
    std::vector<PrimaryFactor> f;
    for (const auto& g : generators) f.push_back(g.factor);
    return f;
  }
};

inline CyclicBasis cyclic_basis(const std::vector<int>& elements, int identity,
                                const std::function<int(int, int)>& mul) {
  const int n = static_cast<int>(elements.size());
  std::map<int, int> order;
  for (int x : elements) {
    int k = 1;
    for (int y = x; y != identity; y = mul(y, x)) ++k;
    order[x] = k;
  }
  CyclicBasis basis;
  for (int p : prime_factors(static_cast<std::uint64_t>(n))) {
    std::vector<int> part;
    for (int x : elements) {
      int o = order[x];
      while (o % p == 0) o /= p;
      if (o == 1) part.push_back(x);
    }
    // exponents from counting, as in abelian_invariants
    std::vector<int> lambda;
    {
      std::vector<int> s{0};
      for (int j = 1;; ++j) {
        std::int64_t pj = ipow(p, j), count = 0;
        for (int x : part)
          if (pj % order[x] == 0) ++count;
        int log = 0;
        while (count > 1) {
          count /= p;
          ++log;
        }
        s.push_back(log);
        if (s[j] == s[j - 1]) break;
      }
      for (std::size_t j = 1; j < s.size(); ++j) {
        int at_least_j = s[j] - s[j - 1];
        int at_least_next = j + 1 < s.size() ? s[j + 1] - s[j] : 0;
        for (int c = 0; c < at_least_j - at_least_next; ++c) lambda.push_back(static_cast<int>(j));
      }
      std::sort(lambda.rbegin(), lambda.rend());
    }
    // backtracking search for independent generators of the prescribed orders
    std::vector<int> chosen;
    std::function<bool(const std::vector<int>&)> search = [&](const std::vector<int>& span) -> bool {
      if (chosen.size() == lambda.size()) return span.size() == part.size();
      std::int64_t want = ipow(p, lambda[chosen.size()]);
      for (int g : part) {
        if (order[g] != want) continue;
        std::vector<int> next;
        std::map<int, char> seen;
        bool direct = true;
        for (int x : span) {
          int y = x;
          for (std::int64_t j = 0; j < want; ++j) {
            if (!seen.emplace(y, 1).second) {
              direct = false;
              break;
            }
            next.push_back(y);
            y = mul(y, g);
          }
          if (!direct) break;
        }
        if (!direct) continue;
        chosen.push_back(g);
        if (search(next)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (!search({identity}))
      detail::fail(ErrorKind::NonAbelianEntry, "no cyclic basis found; group is not abelian");
    for (std::size_t i = 0; i < chosen.size(); ++i) basis.generators.push_back({{p, lambda[i]}, chosen[i]});
  }
  // enumerate all coordinate vectors
  std::vector<int> c(basis.generators.size(), 0);
  for (;;) {
    int x = identity;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (int j = 0; j < c[i]; ++j) x = mul(x, basis.generators[i].element);
    if (!basis.coords.emplace(x, c).second)
      detail::fail(ErrorKind::NonAbelianEntry, "cyclic basis is not independent");
    basis.element[c] = x;
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == basis.generators[i].factor.order()) c[i++] = 0;
    if (i == c.size()) break;
  }
  if (static_cast<int>(basis.coords.size()) != n)
    detail::fail(ErrorKind::NonAbelianEntry, "cyclic basis does not span");
  return basis;
}

/// A subgroup L of Z^n containing p^K Z^n, kept in echelon form over Z/p^K.
/// Rows carry the Howell property, so membership and index are exact.
class PrimeLattice {
 public:
  using Vec = std::vector<std::int64_t>;

  PrimeLattice(int p, int K, std::size_t n) : p_(p), K_(K), mod_(ipow(p, K)), rows_(n), pivot_exp_(n, K) {}

  int prime() const { return p_; }
  int exponent() const { return K_; }
  std::int64_t modulus() const { return mod_; }
  std::size_t dimension() const { return rows_.size(); }

  /// Adds p^{e_i} e_i for every coordinate (the relations of sum Z/p^{e_i}).
  void add_relations(const std::vector<int>& exps, std::size_t offset = 0) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] >= K_) continue;
      Vec v(rows_.size(), 0);
      v[offset + i] = ipow(p_, exps[i]);
      insert(std::move(v));
    }
  }

  void insert(Vec v) {
    std::vector<Vec> work;
    work.push_back(std::move(v));
    while (!work.empty()) {
      Vec x = std::move(work.back());
      work.pop_back();
      normalize(x);
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        int a = valuation(x[i]);
        if (!rows_[i].empty() && a >= pivot_exp_[i]) {
          axpy(x, mod_ - x[i] / ipow(p_, pivot_exp_[i]), rows_[i]);
          continue;
        }
        scale(x, inverse_unit(x[i] / ipow(p_, a)));
        if (!rows_[i].empty()) {
          Vec old = std::move(rows_[i]);
          axpy(old, mod_ - ipow(p_, pivot_exp_[i] - a) % mod_, x);
          work.push_back(std::move(old));
        }
        Vec annihilated = x;
        scale(annihilated, ipow(p_, K_ - a) % mod_);
        work.push_back(std::move(annihilated));
        rows_[i] = std::move(x);
        pivot_exp_[i] = a;
        break;
      }
    }
  }

  bool contains(Vec v) const {
    normalize(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (rows_[i].empty()) return false;
      if (valuation(v[i]) < pivot_exp_[i]) return false;
      axpy(v, mod_ - v[i] / ipow(p_, pivot_exp_[i]), rows_[i]);
    }
    return true;
  }

  /// log_p [Z^n : L].
  int log_index() const {
    int s = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) s += rows_[i].empty() ? K_ : pivot_exp_[i];
    return s;
  }

  std::vector<Vec> basis_rows() const {
    std::vector<Vec> out;
    for (const auto& r : rows_)
      if (!r.empty()) out.push_back(r);
    return out;
  }

  /// Row with pivot in column i, empty when the pivot is p^K.
  const Vec& row(std::size_t i) const { return rows_[i]; }

 private:
  int valuation(std::int64_t x) const {
    int a = 0;
    while (x % p_ == 0 && a < K_) {
      x /= p_;
      ++a;
    }
    return a;
  }

  void normalize(Vec& v) const {
    for (auto& x : v) {
      x %= mod_;
      if (x < 0) x += mod_;
    }
  }

  void scale(Vec& v, std::int64_t c) const {
    for (auto& x : v) x = (x * c) % mod_;
  }

  // x += c * y (mod p^K)
  void axpy(Vec& x, std::int64_t c, const Vec& y) const {
    c %= mod_;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (y[i] != 0) x[i] = (x[i] + c * y[i]) % mod_;
  }

  std::int64_t inverse_unit(std::int64_t u) const {
    // extended Euclid; u is coprime to p
    std::int64_t a = ((u % mod_) + mod_) % mod_, m = mod_, x0 = 1, x1 = 0;
    std::int64_t b = m;
    while (b != 0) {
      std::int64_t q = a / b;
      std::tie(a, b) = std::make_pair(b, a - q * b);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    return ((x0 % mod_) + mod_) % mod_;
  }

  int p_;
  int K_;
  std::int64_t mod_;
  std::vector<Vec> rows_;
  std::vector<int> pivot_exp_;
};

/// A p-primary subquotient K/L of sum Z/p^{e_i}, with K-generators that are
/// nontrivial modulo L as representatives.
struct PrimarySubquotient {
  int p = 0;
  std::vector<int> exponents;  // cyclic factor exponents, descending
  std::vector<PrimeLattice::Vec> representatives;

  std::vector<PrimaryFactor> factors() const {
    std::vector<PrimaryFactor> f;
    for (int e : exponents) f.push_back({p, e});
    return f;
  }
};

namespace detail {

inline int max_exponent(const std::vector<int>& a, const std::vector<int>& b = {}) {
  int k = 1;
  for (int e : a) k = std::max(k, e);
  for (int e : b) k = std::max(k, e);
  return k;
}

}  // namespace detail

/// Generators of ker(M : sum Z/p^{src_i} -> sum Z/p^{dst_j}). `images[i]` is
/// the image of the i-th source basis vector in target coordinates.
inline std::vector<PrimeLattice::Vec> prime_kernel(int p, const std::vector<int>& src_exp,
                                                   const std::vector<int>& dst_exp,
                                                   const std::vector<PrimeLattice::Vec>& images) {
  const std::size_t nA = src_exp.size(), nC = dst_exp.size();
  if (nA == 0) return {};
  const int K = detail::max_exponent(src_exp, dst_exp);
  PrimeLattice graph(p, K, nC + nA);
  // target columns come first so that pivots in the source block have zero image
  graph.add_relations(dst_exp, 0);
  graph.add_relations(src_exp, nC);
  for (std::size_t i = 0; i < nA; ++i) {
    PrimeLattice::Vec v(nC + nA, 0);
    for (std::size_t j = 0; j < nC; ++j) v[j] = images[i][j];
    v[nC + i] = 1;
    graph.insert(std::move(v));
  }
  std::vector<PrimeLattice::Vec> out;
  for (std::size_t i = nC; i < nC + nA; ++i) {
    const auto& r = graph.row(i);
    if (r.empty()) continue;
    out.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(nC), r.end());
  }
  return out;
}

/// Structure of span(numerator)/span(denominator) inside sum Z/p^{e_i};
/// the denominator span must be contained in the numerator span.
inline PrimarySubquotient prime_subquotient(int p, const std::vector<int>& exps,
                                            const std::vector<PrimeLattice::Vec>& numerator,
                                            const std::vector<PrimeLattice::Vec>& denominator) {
  const int K = detail::max_exponent(exps);
  const std::size_t n = exps.size();
  PrimeLattice top(p, K, n), bottom(p, K, n);
  top.add_relations(exps);
  bottom.add_relations(exps);
  for (const auto& v : numerator) top.insert(v);
  for (const auto& v : denominator) bottom.insert(v);
  for (const auto& v : denominator)
    if (!top.contains(v)) detail::fail(ErrorKind::InconsistencyDetected, "image not contained in kernel");

  PrimarySubquotient q;
  q.p = p;
  const int total = bottom.log_index() - top.log_index();
  // r[j] = log_p |p^j (top/bottom)|
  std::vector<int> r{total};
  for (int j = 1; r.back() > 0; ++j) {
    PrimeLattice mixed = bottom;
    std::int64_t pj = ipow(p, j);
    for (const auto& row : top.basis_rows()) {
      PrimeLattice::Vec v = row;
      for (auto& x : v) x = (x * pj) % mixed.modulus();
      mixed.insert(std::move(v));
    }
    r.push_back(bottom.log_index() - mixed.log_index());
  }
  // #{factors of order >= p^j} = r[j-1] - r[j]
  for (std::size_t j = r.size() - 1; j >= 1; --j) {
    int at_least = r[j - 1] - r[j];
    int at_least_next = j + 1 < r.size() ? r[j] - r[j + 1] : 0;
    for (int c = 0; c < at_least - at_least_next; ++c) q.exponents.push_back(static_cast<int>(j));
  }
  std::sort(q.exponents.rbegin(), q.exponents.rend());
  PrimeLattice grow = bottom;
  for (const auto& row : top.basis_rows())
    if (!grow.contains(row)) {
      q.representatives.push_back(row);
      grow.insert(row);
    }
  return q;
}

}  // namespace hcc
