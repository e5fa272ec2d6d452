#include "specrec/gkgraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace specrec {

std::optional<std::size_t> PrimeGraph::index_of(const Int& p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

PrimeGraph build_prime_graph(const SpectrumGenerators& s) {
  std::vector<std::vector<Int>> supports;
  std::set<Int> verts;
  for (const Int& gen : s.generators) {
    if (gen == 1) continue;
    std::vector<Int> sup = factorize(gen).prime_support();
    verts.insert(sup.begin(), sup.end());
    supports.push_back(std::move(sup));
  }

  PrimeGraph g;
  g.vertices.assign(verts.begin(), verts.end());
  const std::size_t n = g.vertices.size();
  g.adjacency.assign(n, std::vector<bool>(n, false));
  for (const auto& sup : supports) {
    for (std::size_t i = 0; i < sup.size(); ++i) {
      std::size_t a = *g.index_of(sup[i]);
      for (std::size_t j = i + 1; j < sup.size(); ++j) {
        std::size_t b = *g.index_of(sup[j]);
        g.adjacency[a][b] = true;
        g.adjacency[b][a] = true;
      }
    }
  }
  return g;
}

std::vector<std::vector<Int>> components(const PrimeGraph& g) {
  const std::size_t n = g.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Int>> comps;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> stack{start};
    std::vector<std::size_t> idx;
    seen[start] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      idx.push_back(v);
      for (std::size_t w = 0; w < n; ++w)
        if (!seen[w] && g.adjacent(v, w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(idx.begin(), idx.end());
    std::vector<Int> comp;
    comp.reserve(idx.size());
    for (std::size_t v : idx) comp.push_back(g.vertices[v]);
    comps.push_back(std::move(comp));
  }
  // vertices are scanned in ascending order, so components already appear by
  // smallest vertex; when 2 is a vertex it is the smallest, so its component
  // is first.
  return comps;
}

namespace {

void coclique_search(const PrimeGraph& g, std::vector<std::size_t> pool,
                     std::size_t chosen, std::size_t& best) {
  for (;;) {
    if (chosen + pool.size() <= best) return;
    if (pool.empty()) {
      best = std::max(best, chosen);
      return;
    }
    std::vector<std::size_t> deg(pool.size(), 0);
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        if (g.adjacent(pool[i], pool[j])) {
          ++deg[i];
          ++deg[j];
        }

    // a vertex of degree 0 or 1 always extends some maximum coclique
    std::size_t low = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (deg[i] <= 1 && (low == pool.size() || deg[i] < deg[low])) low = i;
    if (low != pool.size()) {
      std::size_t v = pool[low];
      ++chosen;
      std::vector<std::size_t> next;
      next.reserve(pool.size());
      for (std::size_t w : pool)
        if (w != v && !g.adjacent(v, w)) next.push_back(w);
      pool = std::move(next);
      continue;
    }

    // branch on a max-degree vertex
    std::size_t pick = 0;
    for (std::size_t i = 1; i < pool.size(); ++i)
      if (deg[i] > deg[pick]) pick = i;
    std::size_t v = pool[pick];

    std::vector<std::size_t> with_v;
    with_v.reserve(pool.size());
    for (std::size_t w : pool)
      if (w != v && !g.adjacent(v, w)) with_v.push_back(w);
    coclique_search(g, std::move(with_v), chosen + 1, best);

    std::vector<std::size_t> without_v;
    without_v.reserve(pool.size() - 1);
    for (std::size_t w : pool)
      if (w != v) without_v.push_back(w);
    coclique_search(g, std::move(without_v), chosen, best);
    return;
  }
}

}  // namespace

unsigned long independence_number(const PrimeGraph& g,
                                  const std::optional<Int>& anchor) {
  std::vector<std::size_t> pool;
  std::size_t chosen = 0;
  if (anchor) {
    auto idx = g.index_of(*anchor);
    if (!idx) throw std::domain_error("anchor is not a vertex of the graph");
    chosen = 1;
    for (std::size_t v = 0; v < g.size(); ++v)
      if (v != *idx && !g.adjacent(v, *idx)) pool.push_back(v);
  } else {
    for (std::size_t v = 0; v < g.size(); ++v) pool.push_back(v);
  }
  std::size_t best = chosen;
  coclique_search(g, std::move(pool), chosen, best);
  return best;
}

namespace {

bool is_pow2(unsigned long n) { return n > 0 && (n & (n - 1)) == 0; }

unsigned long num_after(const std::string& tok, std::size_t colon) {
  return std::stoul(tok.substr(colon + 1));
}

// u^e - tau^e
Int tau_term(const Int& u, int tau, unsigned long e) {
  Int t = pow_int(u, e);
  if (tau < 0 && e % 2 == 1)
    t += 1;
  else
    t -= 1;
  return t;
}

Int exact_div(const Int& num, const Int& den) {
  if (den == 0 || num % den != 0)
    throw std::logic_error("formula division is not exact");
  return num / den;
}

}  // namespace

std::optional<std::string> violated_condition(const Table1Row& row,
                                              unsigned long dim, const Int& u,
                                              int tau) {
  if (tau != 1 && tau != -1) return std::string("tau-in:+1,-1");
  if (!is_prime_power(u)) return std::string("u-prime-power");
  for (const std::string& c : row.conditions) {
    bool ok;
    std::size_t colon = c.find(':');
    std::string head = colon == std::string::npos ? c : c.substr(0, colon);
    if (c == "u-odd")
      ok = u % 2 == 1;
    else if (c == "u-even")
      ok = u % 2 == 0;
    else if (c == "tau-plus")
      ok = tau == 1;
    else if (c == "tau-minus")
      ok = tau == -1;
    else if (c == "dim-odd-prime")
      ok = dim % 2 == 1 && is_prime(Int(dim));
    else if (c == "dim-minus1-odd-prime")
      ok = dim >= 4 && dim % 2 == 0 && is_prime(Int(dim - 1));
    else if (c == "dim-pow2")
      ok = is_pow2(dim);
    else if (c == "dim-pow2-plus1")
      ok = dim >= 2 && is_pow2(dim - 1);
    else if (c == "dim-not-pow2-plus1")
      ok = !(dim >= 2 && is_pow2(dim - 1));
    else if (c == "dim-not-prime")
      ok = !is_prime(Int(dim));
    else if (c == "u-minus-tau-divides-dim")
      ok = Int(dim) % (u - tau) == 0;
    else if (head == "dim-eq")
      ok = dim == num_after(c, colon);
    else if (head == "dim-min")
      ok = dim >= num_after(c, colon);
    else if (head == "u-min")
      ok = u >= static_cast<long>(num_after(c, colon));
    else if (head == "u-eq")
      ok = u == static_cast<long>(num_after(c, colon));
    else if (head == "u-in") {
      ok = false;
      std::string rest = c.substr(colon + 1);
      std::size_t pos = 0;
      while (pos < rest.size()) {
        std::size_t comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        if (u == Int(rest.substr(pos, comma - pos))) ok = true;
        pos = comma + 1;
      }
    } else if (head == "exclude") {
      std::string rest = c.substr(colon + 1);
      std::size_t c1 = rest.find(',');
      std::size_t c2 = rest.find(',', c1 + 1);
      unsigned long xd = std::stoul(rest.substr(0, c1));
      Int xu(rest.substr(c1 + 1, c2 - c1 - 1));
      int xt = rest.substr(c2 + 1) == "-1" ? -1 : 1;
      ok = !(dim == xd && u == xu && tau == xt);
    } else {
      return c;  // unknown token is never satisfied
    }
    if (!ok) return c;
  }
  return std::nullopt;
}

Int evaluate_formula(const std::string& id, unsigned long dim, const Int& u,
                     int tau) {
  std::size_t colon = id.find(':');
  if (id == "char") return char_of(u);
  if (id == "l2-half") {
    int e = u % 4 == 1 ? 1 : -1;
    return exact_div(u + e, 2);
  }
  if (id == "u-minus-1") return u - 1;
  if (id == "u-plus-1") return u + 1;
  if (id == "lu-prime")
    return exact_div(tau_term(u, tau, dim),
                     (u - tau) * gcd_int(Int(dim), u - tau));
  if (id == "lu-prime-plus1")
    return exact_div(tau_term(u, tau, dim - 1), u - tau);
  if (id == "lu-prime-plus1-extra")
    return exact_div(tau_term(u, tau, dim), (u - tau) * (u - tau));
  if (colon != std::string::npos && id.substr(0, colon) == "const")
    return Int(id.substr(colon + 1));
  if (id == "sympl-pow2")
    return exact_div(pow_int(u, dim) + 1, gcd_int(Int(2), u - 1));
  if (id == "sympl-prime")
    return exact_div(pow_int(u, dim) - 1, gcd_int(Int(2), u - 1));
  if (id == "odd-orth-pow2")
    return exact_div(pow_int(u, dim) + 1, gcd_int(Int(2), u + 1));
  if (id == "orth-plus-prime") return exact_div(pow_int(u, dim) - 1, u - 1);
  if (id == "orth-plus-ext")
    return exact_div(pow_int(u, dim - 1) - 1, gcd_int(Int(2), u - 1));
  if (id == "orth-minus-pow2")
    return exact_div(pow_int(u, dim) + 1, gcd_int(Int(2), u - 1));
  if (id == "orth-minus-2-pow2p1") return pow_int(u, dim - 1) + 1;
  if (id == "orth-minus-3-prime") return exact_div(pow_int(u, dim) + 1, 4);
  if (id == "orth-minus-3-pow2p1")
    return exact_div(pow_int(u, dim - 1) + 1, 2);
  throw std::domain_error("unknown formula token: " + id);
}

std::vector<Int> n_value(const Table1Row& row, unsigned long dim, const Int& u,
                         int tau) {
  if (auto bad = violated_condition(row, dim, u, tau))
    throw std::domain_error("condition violated for row " + row.key + ": " +
                            *bad);
  std::vector<Int> out;
  out.reserve(row.formulas.size());
  for (const std::string& f : row.formulas)
    out.push_back(evaluate_formula(f, dim, u, tau));
  return out;
}

std::vector<ComponentOrder> component_orders(const SpectrumGenerators& s,
                                             const PrimeGraph& g) {
  std::vector<std::vector<Int>> comps = components(g);
  std::vector<ComponentOrder> out;
  for (std::size_t ci = 1; ci < comps.size(); ++ci) {
    ComponentOrder co;
    co.primes = comps[ci];
    for (const Int& gen : s.generators) {
      if (gen == 1) continue;
      Int rest = gen;
      for (const Int& p : co.primes)
        while (rest % p == 0) rest /= p;
      if (rest == 1) co.orders.push_back(gen);
    }
    out.push_back(std::move(co));
  }
  return out;
}

}  // namespace specrec
