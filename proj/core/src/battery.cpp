#include "semiord/battery.hpp"

#include <algorithm>
#include <sstream>

#include "semiord/classify.hpp"
#include "semiord/errors.hpp"

namespace semiord {

namespace {

// Comparability components; each must be a chain for the direct-sum tests.
std::vector<std::vector<int>> comparability_components(const Poset& p) {
  const int n = p.size();
  std::vector<int> comp(n, -1);
  int parts = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = parts;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (comp[u] < 0 && p.comparable(v, u)) {
          comp[u] = parts;
          stack.push_back(u);
        }
    }
    ++parts;
  }
  std::vector<std::vector<int>> out(parts);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

// P embeds into the direct sum of n copies of Z iff it is a direct sum of at
// most n chains.
bool embeds_into_chain_sum(const Poset& p, int n) {
  const auto comps = comparability_components(p);
  if (static_cast<int>(comps.size()) > n) return false;
  for (const auto& c : comps) {
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        if (p.incomparable(c[a], c[b])) return false;
  }
  return true;
}

// P embeds into the lex sum over Z of n-element antichains iff it is a weak
// order whose incomparability classes have at most n elements.
bool embeds_into_antichain_layers(const Poset& p, int n) {
  if (!classify(p).is_weak) return false;
  const auto comps = incomparability_components(p);
  // for weak orders the incomparability components are the antichain levels
  for (const auto& level : comps.parts)
    if (static_cast<int>(level.size()) > n) return false;
  return true;
}

// Window poset of Z under x < y iff cone(y - x), on [0, span].
Poset z_cone_window(long long span, const std::function<bool(long long)>& cone) {
  const int n = static_cast<int>(span) + 1;
  BitRel r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && cone(j - i)) r.set(i, j);
  return Poset(std::move(r));
}

// Window poset of Z x Z/2 under the generated cone, elements [0,span] x {0,1}.
Poset half_crown_window(long long span, long long p) {
  const int n = 2 * (static_cast<int>(span) + 1);
  auto lt = [&](long long a, long long s, long long b, long long t) {
    const long long d = b - a;
    if (s == t) return d >= 1;
    return d >= p + 1;
  };
  BitRel r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const long long a = i / 2, s = i % 2, b = j / 2, t = j % 2;
      if (lt(a, s, b, t)) r.set(i, j);
    }
  return Poset(std::move(r));
}

}  // namespace

std::vector<BatteryGroup> standard_battery(int max_size) {
  const long long m = std::max(2, max_size);
  std::vector<BatteryGroup> out;
  for (int n = 1; n <= max_size; ++n) {
    std::ostringstream name;
    name << "Z x Z/" << n << " with cone C1 (direct sum of " << n << " chains)";
    out.push_back({name.str(), [n](const Poset& p) { return embeds_into_chain_sum(p, n); }});
  }
  for (int n = 1; n <= max_size; ++n) {
    std::ostringstream name;
    name << "Z x Z/" << n << " with cone C2 (lex sum of " << n << "-antichains)";
    out.push_back({name.str(), [n](const Poset& p) { return embeds_into_antichain_layers(p, n); }});
  }
  {
    // Z with cone {k : k >= 3}: threshold 3.  Any embedding compresses to
    // consecutive gaps <= 3, so the [0, 3m] window decides exactly.
    const Poset host = z_cone_window(3 * m, [](long long d) { return d >= 3; });
    out.push_back({"Z with cone {k >= 3}",
                   [host](const Poset& p) { return embeds_pattern(host, p).found; }});
  }
  for (int n = 2; n <= 5; ++n) {
    if (n % 2 == 0) {
      // Z with cone {even >= 2} u {k >= n+1}; parity-preserving compression
      // bounds gaps by n+2, so [0, (n+2)m] decides exactly.
      const Poset host = z_cone_window(
          (n + 2) * m, [n](long long d) { return (d >= 2 && d % 2 == 0) || d >= n + 1; });
      std::ostringstream name;
      name << "Z with cone {even >= 2} u {k >= " << n + 1 << "}";
      out.push_back({name.str(),
                     [host](const Poset& p) { return embeds_pattern(host, p).found; }});
    } else {
      // Z x Z/2 with strict cone generated by (1,0) and (p+1,1), n = 2p+1;
      // gaps compress to p+1, so [0, (p+1)m] x {0,1} decides exactly.
      const long long pp = (n - 1) / 2;
      const Poset host = half_crown_window((pp + 1) * m, pp);
      std::ostringstream name;
      name << "Z x Z/2 with cone <(1,0),(" << pp + 1 << ",1)>";
      out.push_back({name.str(),
                     [host](const Poset& p) { return embeds_pattern(host, p).found; }});
    }
  }
  return out;
}

PreceqResult preceq_battery(const Poset& p, const Poset& q) {
  if (p.size() > 6 || q.size() > 6)
    throw ArityError("preceq_battery: posets up to 6 elements");
  const auto battery = standard_battery(6);
  for (const BatteryGroup& g : battery) {
    if (g.embeds(q) && !g.embeds(p)) return {true, g.name};
  }
  return {false, {}};
}

}  // namespace semiord
