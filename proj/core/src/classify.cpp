#include "semiord/classify.hpp"

#include <algorithm>

#include "semiord/errors.hpp"

namespace semiord {

Traces traces(const Poset& p) {
  const int n = p.size();
  BitRel pred(n), succ(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      bool pr = true, su = true;
      for (int z = 0; z < n; ++z) {
        if (p.less(z, x) && !p.less(z, y)) { pr = false; break; }
      }
      for (int z = 0; z < n; ++z) {
        if (p.less(y, z) && !p.less(x, z)) { su = false; break; }
      }
      if (pr) pred.set(x, y);
      if (su) succ.set(x, y);
    }
  }
  return {QuasiOrder(std::move(pred)), QuasiOrder(std::move(succ))};
}

std::vector<std::pair<int, int>> critical_pairs(const Poset& p) {
  const int n = p.size();
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || p.comparable(x, y)) continue;
      bool crit = true;
      for (int z = 0; z < n && crit; ++z) {
        if (p.less(z, x) && !p.less(z, y)) crit = false;  // D(x) subset D(y)
        if (p.less(y, z) && !p.less(x, z)) crit = false;  // U(y) subset U(x)
      }
      if (crit) out.emplace_back(x, y);
    }
  }
  return out;
}

namespace {

std::optional<ForbiddenWitness> find_pattern(const Poset& p, const Poset& pat,
                                             const char* name) {
  PatternMatch m = embeds_pattern(p, pat);
  if (!m.found) return std::nullopt;
  return ForbiddenWitness{name, m.witness};
}

}  // namespace

Classification classify(const Poset& p) {
  Classification c;

  const auto w22 = find_pattern(p, two_plus_two(), "2+2");
  const auto w31 = find_pattern(p, three_plus_one(), "3+1");
  const auto w12 = find_pattern(p, one_plus_chain(2), "1+2");
  const auto w11 = embeds_pattern(p, antichain(2));

  const bool pat_interval = !w22.has_value();
  const bool pat_semiorder = !w22.has_value() && !w31.has_value();
  c.is_chain = !w11.found;
  c.is_weak = !w12.has_value();

  const Traces t = traces(p);
  const bool trace_interval = t.pred.is_total();
  const bool trace_interval_succ = t.succ.is_total();
  const QuasiOrder both = intersect(t.pred, t.succ);
  const bool trace_semiorder = both.is_total();

  // Third route for semiorders: every incomparable pair has a critical
  // orientation.
  const auto crit = critical_pairs(p);
  BitRel critrel(p.size());
  for (const auto& [x, y] : crit) critrel.set(x, y);
  bool crit_semiorder = true;
  for (int x = 0; x < p.size() && crit_semiorder; ++x)
    for (int y = x + 1; y < p.size() && crit_semiorder; ++y)
      if (p.incomparable(x, y) && !critrel.get(x, y) && !critrel.get(y, x))
        crit_semiorder = false;

  if (pat_interval != trace_interval || trace_interval != trace_interval_succ)
    throw CriteriaDisagreement("interval-order criteria disagree");
  if (pat_semiorder != trace_semiorder || trace_semiorder != crit_semiorder)
    throw CriteriaDisagreement("semiorder criteria disagree");

  c.is_interval = pat_interval;
  c.is_semiorder = pat_semiorder;
  c.is_threshold = t.pred.is_total() && t.pred.is_antisymmetric() && t.pred == t.succ;
  c.criteria_agree = true;

  if (w22) c.forbidden_witness = w22;
  else if (w31) c.forbidden_witness = w31;
  else if (w12) c.forbidden_witness = w12;

  // Containments that hold by definition; a failure is a library bug.
  if (c.is_threshold && !c.is_semiorder)
    throw CriteriaDisagreement("threshold order failed the semiorder test");
  if (c.is_weak && !c.is_semiorder)
    throw CriteriaDisagreement("weak order failed the semiorder test");
  if (c.is_semiorder && !c.is_interval)
    throw CriteriaDisagreement("semiorder failed the interval-order test");
  if (c.is_chain && !(c.is_weak && c.is_threshold))
    throw CriteriaDisagreement("chain failed a weaker recognition");
  return c;
}

int antichain_cover_number(const Poset& p) {
  // Mirsky: the minimum number of antichains covering p equals the longest
  // chain size; the level function realizes the cover.
  const int n = p.size();
  std::vector<int> level(n, -1);
  int longest = 0;
  // levels via repeated relaxation (n is small everywhere this is used)
  bool changed = true;
  for (int v = 0; v < n; ++v) level[v] = 1;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (p.less(a, b) && level[b] < level[a] + 1) {
          level[b] = level[a] + 1;
          changed = true;
        }
  }
  for (int v = 0; v < n; ++v) longest = std::max(longest, level[v]);
  return longest;
}

}  // namespace semiord
