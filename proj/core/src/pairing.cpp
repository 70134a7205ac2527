#include "rrgexp/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "rrgexp/symmetric.hpp"  // binomial

namespace rrgexp {

namespace {

std::vector<char> subset_mask(int n, const std::vector<int>& subset) {
  std::vector<char> mask(n, 0);
  for (int v : subset) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex outside [0, n)");
    mask[v] = 1;
  }
  return mask;
}

// Cross-degree of v against the given side mask; self-loop entries (u == v)
// never count.
int cross_degree(const MultiGraph& g, const std::vector<char>& mask, int v) {
  int cd = 0;
  for (int u : g.adjacency[v])
    if (u != v && mask[u] != mask[v]) ++cd;
  return cd;
}

double log_factorial(long long k) {
  double s = 0.0;
  for (long long i = 2; i <= k; ++i) s += std::log(static_cast<double>(i));
  return s;
}

// ln of the number of perfect matchings on m points: (m - 1)!! for even m.
double log_matchings(long long m) {
  double s = 0.0;
  for (long long i = 1; i < m; i += 2) s += std::log(static_cast<double>(i));
  return s;
}

double log_binomial(long long n, long long k) {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

}  // namespace

MultiGraph MultiGraph::from_edges(int n, int delta,
                                  const std::vector<std::pair<int, int>>& edges) {
  if (n <= 0 || delta <= 0 || (static_cast<long long>(n) * delta) % 2 != 0)
    throw InvalidParity("n*delta must be even");
  if (static_cast<long long>(edges.size()) * 2 !=
      static_cast<long long>(n) * delta)
    throw InvalidParity("edge count must equal n*delta/2");
  MultiGraph g;
  g.n = n;
  g.delta = delta;
  g.adjacency.assign(n, {});
  std::vector<int> next_slot(n, 0);
  g.matching.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("edge endpoint outside [0, n)");
    const int hu = u * delta + next_slot[u]++;
    const int hv = v * delta + next_slot[v]++;
    if (next_slot[u] > delta || next_slot[v] > delta)
      throw InvalidParity("vertex degree exceeds delta");
    g.matching.emplace_back(hu, hv);
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (int v = 0; v < n; ++v)
    if (next_slot[v] != delta) throw InvalidParity("vertex degree below delta");
  return g;
}

MultiGraph sample_pairing(int n, int delta, std::uint64_t seed) {
  if (n <= 0 || delta <= 0 || n % 2 != 0 || delta % 2 != 0)
    throw InvalidParity("n and delta must be positive and even");
  const int m = n * delta;
  std::vector<int> halves(m);
  std::iota(halves.begin(), halves.end(), 0);
  // Hand-rolled Fisher-Yates: reproducible across standard libraries.
  std::mt19937_64 rng(seed);
  for (int i = m - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(halves[i], halves[j]);
  }
  MultiGraph g;
  g.n = n;
  g.delta = delta;
  g.seed = seed;
  g.adjacency.assign(n, {});
  g.matching.reserve(m / 2);
  for (int k = 0; k < m; k += 2) {
    const int h1 = halves[k], h2 = halves[k + 1];
    g.matching.emplace_back(h1, h2);
    g.adjacency[h1 / delta].push_back(h2 / delta);
    g.adjacency[h2 / delta].push_back(h1 / delta);
  }
  return g;
}

ConfigurationVector configuration_vector(const MultiGraph& g,
                                         const std::vector<int>& subset) {
  const auto mask = subset_mask(g.n, subset);
  ConfigurationVector cv;
  cv.s.assign(g.delta + 1, 0);
  cv.s_bar.assign(g.delta + 1, 0);
  for (int v = 0; v < g.n; ++v) {
    const int cd = cross_degree(g, mask, v);
    if (mask[v]) {
      ++cv.k;
      cv.c += cd;
      ++cv.s[cd];
    } else {
      ++cv.s_bar[cd];
    }
  }
  return cv;
}

double set_expansion(const MultiGraph& g, const std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  if (k == 0 || k >= g.n) throw EmptyOrFullSet("subset must be proper");
  const auto cv = configuration_vector(g, subset);
  return static_cast<double>(cv.c) / std::min(k, g.n - k);
}

ExpansionResult exact_expansion(const MultiGraph& g) {
  if (g.n > 24) throw TooLarge("exact enumeration guarded at n <= 24");
  const int n = g.n;

  std::vector<char> mask(n, 0);
  long long cut = 0, scr = 0;
  int k = 0;
  // Best as an exact fraction cut/den plus (k, scr) tie-breaks.
  long long best_cut = -1, best_den = 1, best_scr = 0;
  int best_k = 0;
  std::uint32_t best_bits = 0;

  std::uint32_t bits = 0;
  const std::uint32_t total = 1u << n;
  for (std::uint32_t code = 1; code < total; ++code) {
    const int v = std::countr_zero(code);  // Gray-code flip position
    // Toggle v; update the cut from v's adjacency.
    int to_inside = 0, to_outside = 0;
    for (int u : g.adjacency[v]) {
      if (u == v) continue;
      (mask[u] ? to_inside : to_outside)++;
    }
    if (!mask[v]) {
      mask[v] = 1;
      bits |= (1u << v);
      ++k;
      scr += v + 1;
      cut += to_outside - to_inside;
    } else {
      mask[v] = 0;
      bits &= ~(1u << v);
      --k;
      scr -= v + 1;
      cut += to_inside - to_outside;
    }
    if (k < 1 || 2 * k > n) continue;
    const long long den = k;
    bool better = false;
    if (best_cut < 0) {
      better = true;
    } else {
      const long long lhs = cut * best_den, rhs = best_cut * den;
      if (lhs != rhs)
        better = lhs < rhs;
      else if (k != best_k)
        better = k < best_k;
      else
        better = scr < best_scr;
    }
    if (better) {
      best_cut = cut;
      best_den = den;
      best_k = k;
      best_scr = scr;
      best_bits = bits;
    }
  }

  ExpansionResult r;
  r.iota = static_cast<double>(best_cut) / best_den;
  for (int v = 0; v < n; ++v)
    if (best_bits & (1u << v)) r.witness.push_back(v);
  return r;
}

ScoreOrder ScoreOrder::identity(int n) {
  ScoreOrder o;
  o.pi.resize(n);
  std::iota(o.pi.begin(), o.pi.end(), 0);
  return o;
}

ScoreOrder ScoreOrder::random(int n, std::uint64_t seed) {
  ScoreOrder o = identity(n);
  std::mt19937_64 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(o.pi[i], o.pi[j]);
  }
  return o;
}

long long ScoreOrder::score(const std::vector<int>& subset) const {
  long long s = 0;
  for (int v : subset) s += pi[v];
  return s;
}

namespace {

struct SubsetState {
  std::vector<char> mask;
  int k = 0;
  long long cut = 0;
  long long scr = 0;
};

SubsetState make_state(const MultiGraph& g, const ScoreOrder& order,
                       const std::vector<char>& mask) {
  SubsetState st;
  st.mask = mask;
  for (int v = 0; v < g.n; ++v) {
    if (!mask[v]) continue;
    ++st.k;
    st.scr += order.pi[v];
    st.cut += cross_degree(g, mask, v);
  }
  return st;
}

// Lexicographic (iota, |S|, scr) with iota compared as an exact fraction.
bool lex_less(const SubsetState& a, int n_a, const SubsetState& b, int n_b) {
  const long long da = std::min(a.k, n_a - a.k);
  const long long db = std::min(b.k, n_b - b.k);
  const long long lhs = a.cut * db, rhs = b.cut * da;
  if (lhs != rhs) return lhs < rhs;
  if (a.k != b.k) return a.k < b.k;
  return a.scr < b.scr;
}

}  // namespace

ExpansionResult local_search_expansion(const MultiGraph& g,
                                       const ScoreOrder& order,
                                       std::vector<int> start) {
  const int n = g.n;
  auto mask = subset_mask(n, start);
  {
    int k = static_cast<int>(start.size());
    if (k == 0 || k >= n) throw EmptyOrFullSet("start subset must be proper");
    if (2 * k > n)  // prefer the smaller side; same cut, smaller |S|
      for (auto& b : mask) b = !b;
  }
  SubsetState cur = make_state(g, order, mask);

  const int half = g.delta / 2;
  bool improved = true;
  while (improved) {
    improved = false;
    std::vector<int> cd(n);
    for (int v = 0; v < n; ++v) cd[v] = cross_degree(g, cur.mask, v);
    const double iota =
        static_cast<double>(cur.cut) / std::min(cur.k, n - cur.k);

    const auto try_apply = [&](std::vector<char> cand_mask) -> bool {
      int ck = 0;
      for (char b : cand_mask) ck += b;
      if (ck == 0 || ck >= n) return false;
      if (2 * ck > n)
        for (auto& b : cand_mask) b = !b;
      SubsetState cand = make_state(g, order, cand_mask);
      if (!lex_less(cand, n, cur, n)) return false;
      cur = std::move(cand);
      return true;
    };

    // Case I: a vertex with more than half its edges crossing; applicable
    // when iota < 2.
    if (iota < 2.0) {
      for (int v = 0; v < n && !improved; ++v) {
        if (cd[v] <= half) continue;
        auto cand = cur.mask;
        cand[v] = !cand[v];
        improved = try_apply(std::move(cand));
      }
      // Case II: |S| < n/2 and some complement vertex crosses exactly half
      // its edges; pull it in (cut unchanged, min side grows).
      if (!improved && 2 * cur.k < n) {
        for (int v = 0; v < n && !improved; ++v) {
          if (cur.mask[v] || cd[v] != half) continue;
          auto cand = cur.mask;
          cand[v] = 1;
          improved = try_apply(std::move(cand));
        }
      }
    }

    // Equal-cut score-reducing swaps between the two delta/2 shells.
    if (!improved) {
      for (int v = 0; v < n && !improved; ++v) {
        if (!cur.mask[v] || cd[v] != half) continue;
        for (int u = 0; u < n && !improved; ++u) {
          if (cur.mask[u] || cd[u] != half) continue;
          if (order.pi[u] >= order.pi[v]) continue;
          bool adjacent = false;
          for (int w : g.adjacency[v])
            if (w == u) adjacent = true;
          if (adjacent) continue;
          auto cand = cur.mask;
          cand[v] = 0;
          cand[u] = 1;
          improved = try_apply(std::move(cand));
        }
      }
    }
  }

  ExpansionResult r;
  r.iota = static_cast<double>(cur.cut) / std::min(cur.k, n - cur.k);
  for (int v = 0; v < n; ++v)
    if (cur.mask[v]) r.witness.push_back(v);
  return r;
}

bool u_local_membership(const ConfigurationVector& cv, int n, int delta) {
  const int half = delta / 2;
  for (int j = half + 1; j <= delta; ++j)
    if (cv.s[j] != 0 || cv.s_bar[j] != 0) return false;
  if (2 * cv.k < n && cv.s_bar[half] != 0) return false;
  return true;
}

double configuration_probability(int n, int delta,
                                 const ConfigurationVector& cv) {
  const int k = cv.k;
  const long long c = cv.c;
  const long long inside = static_cast<long long>(delta) * k - c;
  const long long outside = static_cast<long long>(delta) * (n - k) - c;
  if (c < 0 || inside < 0 || outside < 0) return 0.0;
  if (inside % 2 != 0 || outside % 2 != 0) return 0.0;

  double logp = log_factorial(k) + log_factorial(n - k) + log_factorial(c) +
                log_matchings(inside) + log_matchings(outside) -
                log_matchings(static_cast<long long>(n) * delta);
  for (int i = 0; i <= delta; ++i) {
    logp -= log_factorial(cv.s[i]) + log_factorial(cv.s_bar[i]);
    const double lb = std::log(std::max(1.0, binomial(delta, i)));
    logp += (cv.s[i] + cv.s_bar[i]) * lb;
  }
  return std::exp(logp);
}

double ordering_probability(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("p, q must be >= 0");
  if (p + q <= 60) {
    // exact in integers for small arguments
    unsigned long long c = 1;
    for (int i = 1; i <= q; ++i) c = c * (p + i) / i;
    return 1.0 / static_cast<double>(c);
  }
  return std::exp(-log_binomial(p + q, q));
}

double lex_bound(int n, int delta, const ConfigurationVector& cv) {
  const int half = delta / 2;
  const long long p = cv.s[half], q = cv.s_bar[half];
  const double l = 2.0 * delta * std::log(static_cast<double>(n)) -
                   log_binomial(p + q, p);
  return l >= 0.0 ? 1.0 : std::exp(l);
}

void write_edge_list(const MultiGraph& g, std::ostream& os) {
  os << g.n << ' ' << g.delta << ' ' << g.seed << '\n';
  for (auto [h1, h2] : g.matching) {
    int u = h1 / g.delta, v = h2 / g.delta;
    if (u > v) std::swap(u, v);
    os << u << ' ' << v << '\n';
  }
}

MultiGraph read_edge_list(std::istream& is) {
  int n = 0, delta = 0;
  std::uint64_t seed = 0;
  if (!(is >> n >> delta >> seed))
    throw std::runtime_error("bad edge-list header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n) * delta / 2);
  int u, v;
  while (is >> u >> v) edges.emplace_back(u, v);
  MultiGraph g = MultiGraph::from_edges(n, delta, edges);
  g.seed = seed;
  return g;
}

}  // namespace rrgexp
