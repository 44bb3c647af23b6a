// semiord: recognize, represent and construct interval orders, semiorders and
// threshold orders, on finite posets and on concretely represented groups.
//
// Exit codes: 0 success / property confirmed; 1 property refuted or pattern
// found where a theorem forbids; 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "semiord/battery.hpp"
#include "semiord/classify.hpp"
#include "semiord/clifford.hpp"
#include "semiord/errors.hpp"
#include "semiord/group.hpp"
#include "semiord/io.hpp"
#include "semiord/poset.hpp"
#include "semiord/represent.hpp"
#include "semiord/verify.hpp"

using namespace semiord;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

std::string yesno(bool b) { return b ? "yes" : "no"; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

struct GroupInput {
  GroupPtr group;
  Window window;
};

GroupInput load_group(const std::string& path, const std::string& window_flag) {
  GroupSpecFile spec = parse_group_file(path);
  GroupInput in;
  in.group = spec.group;
  if (!window_flag.empty())
    in.window = make_window(*in.group, parse_window(window_flag).bounds);
  else if (spec.window)
    in.window = *spec.window;
  else
    throw ParseError("no window: give one in the spec file or via --window");
  return in;
}

int cmd_classify(const std::string& path, const std::string& dot_path) {
  const Poset p = parse_poset_file(path);
  const Classification c = classify(p);
  std::cout << "elements=" << p.size() << "\n"
            << "chain=" << yesno(c.is_chain) << "\n"
            << "weak=" << yesno(c.is_weak) << "\n"
            << "interval=" << yesno(c.is_interval) << "\n"
            << "semiorder=" << yesno(c.is_semiorder) << "\n"
            << "threshold=" << yesno(c.is_threshold) << "\n";
  if (c.forbidden_witness) {
    std::cout << "forbidden=" << c.forbidden_witness->pattern << " at";
    for (int v : c.forbidden_witness->elements) std::cout << ' ' << v;
    std::cout << "\n";
  }
  if (!dot_path.empty()) write_file(dot_path, poset_dot(p));
  return kOk;
}

int cmd_traces(const std::string& path) {
  const Poset p = parse_poset_file(path);
  const Traces t = traces(p);
  std::cout << "pred total=" << yesno(t.pred.is_total())
            << " antisymmetric=" << yesno(t.pred.is_antisymmetric()) << "\n";
  std::cout << "succ total=" << yesno(t.succ.is_total())
            << " antisymmetric=" << yesno(t.succ.is_antisymmetric()) << "\n";
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (i != j && t.pred.le(i, j))
        std::cout << "pred " << i << " <= " << j << "\n";
  return kOk;
}

int cmd_critical(const std::string& path) {
  const Poset p = parse_poset_file(path);
  for (const auto& [x, y] : critical_pairs(p)) std::cout << x << ' ' << y << "\n";
  return kOk;
}

int cmd_represent(const std::string& path) {
  const Poset p = parse_poset_file(path);
  const Classification c = classify(p);
  if (c.is_semiorder) {
    const UnitRepresentation rep = unit_representation(p);
    std::cout << "unit representation (threshold 1)\n";
    for (int i = 0; i < p.size(); ++i)
      std::cout << i << ' ' << rat_str(rep.offset[i]) << "\n";
    return kOk;
  }
  if (c.is_interval) {
    const IntervalRepresentation rep = interval_representation(p);
    std::cout << "interval representation\n";
    for (int i = 0; i < p.size(); ++i)
      std::cout << i << ' ' << rat_str(rep.intervals[i].first) << ' '
                << rat_str(rep.intervals[i].second) << "\n";
    return kOk;
  }
  std::cout << "not an interval order";
  if (c.forbidden_witness) {
    std::cout << " (embeds " << c.forbidden_witness->pattern << " at";
    for (int v : c.forbidden_witness->elements) std::cout << ' ' << v;
    std::cout << ")";
  }
  std::cout << "\n";
  return kRefuted;
}

int cmd_dimension(const std::string& path, int max_k) {
  const Poset p = parse_poset_file(path);
  const auto dim = brute_force_dimension(p, max_k);
  if (dim) std::cout << "dimension=" << *dim << "\n";
  else std::cout << "dimension>" << max_k << " (Exceeded)\n";
  return kOk;
}

int cmd_realizer3(long long lo, long long hi, const std::string& alpha_text) {
  const Rational alpha = rat_parse(alpha_text);
  std::vector<Rational> keys;
  for (long long v = lo; v <= hi; ++v) keys.emplace_back(v);
  const Realizer r = realizer_dim3_threshold(keys, alpha);
  const Poset p = threshold_poset(keys, alpha);
  for (std::size_t k = 0; k < r.orders.size(); ++k) {
    std::cout << "L" << k + 1 << ":";
    for (int idx : r.orders[k]) std::cout << ' ' << (lo + idx);
    std::cout << "\n";
  }
  const bool ok = realizer_matches(r, p);
  std::cout << "intersection equals threshold order: " << yesno(ok) << "\n";
  return ok ? kOk : kRefuted;
}

std::optional<Vec> parse_margin(const std::string& text) {
  if (text.empty()) return std::nullopt;
  Vec m;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      m.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw ParseError("bad margin entry: " + tok);
    }
  }
  return m;
}

int cmd_group_check(const GroupInput& in, const std::string& dot_path,
                    const std::string& margin_text) {
  const WindowPoset wp = window_poset(*in.group, in.window);
  const Classification c = classify(wp.poset);
  const ThresholdReport rep = verify_threshold(*in.group, in.window, parse_margin(margin_text));
  std::cout << "spec: " << in.group->describe() << "\n"
            << "window elements=" << wp.elements.size()
            << " interior=" << rep.interior_size << "\n"
            << "window interval=" << yesno(c.is_interval)
            << " semiorder=" << yesno(c.is_semiorder) << "\n"
            << "pred-trace total=" << yesno(rep.pred_total)
            << " antisymmetric=" << yesno(rep.pred_antisymmetric) << "\n";
  if (in.group->as_zn())
    std::cout << "pred-trace matches weight order: " << yesno(rep.pred_matches_weight_order)
              << "\n";
  std::cout << "threshold confirmed: " << yesno(rep.confirmed()) << "\n";
  if (!dot_path.empty()) write_file(dot_path, window_poset_dot(wp));
  // exit 1 only when something a theorem forbids showed up: a group window
  // with interval != semiorder, or a non-total pred trace on the interior
  if (c.is_interval != c.is_semiorder || !rep.pred_total) return kRefuted;
  return kOk;
}

int cmd_group_inc0(const GroupInput& in) {
  for (const Vec& v : inc0(*in.group, in.window)) std::cout << vec_str(v) << "\n";
  return kOk;
}

int cmd_group_kai(const GroupInput& in) {
  const SubgroupReport rep = subgroups_KAI(*in.group, in.window);
  std::cout << "K=" << rep.K.text << "\n"
            << "A=" << rep.A.text << "\n"
            << "I=" << rep.I.text << "\n"
            << "window cross-check: " << yesno(rep.window_cross_check()) << "\n";
  return rep.window_cross_check() ? kOk : kRefuted;
}

int cmd_group_transfer(const GroupInput& in, int max_n) {
  bool violation = false;
  for (int n = 2; n <= max_n; ++n) {
    const TransferReport rep = pattern_transfer_check(*in.group, in.window, n);
    std::cout << "n=" << n << ": " << rep.detail
              << (rep.violation ? "  VIOLATION" : "") << "\n";
    violation = violation || rep.violation;
  }
  return violation ? kRefuted : kOk;
}

int cmd_preceq(const std::string& ppath, const std::string& qpath) {
  const Poset p = parse_poset_file(ppath);
  const Poset q = parse_poset_file(qpath);
  const PreceqResult r = preceq_battery(p, q);
  if (r.refuted)
    std::cout << "Refuted by " << r.witness_group << "\n";
  else
    std::cout << "NotRefuted (battery exhausted; not a proof of preceq)\n";
  return kOk;
}

int cmd_clifford_reduce(const std::string& word_text) {
  std::cout << reduce(parse_clifford_word(word_text)).str() << "\n";
  return kOk;
}

int cmd_clifford_cmp(const std::string& a_text, const std::string& b_text) {
  const CliffordElement a = reduce(parse_clifford_word(a_text));
  const CliffordElement b = reduce(parse_clifford_word(b_text));
  switch (cliff_compare(a, b)) {
    case Cmp::Less: std::cout << "less\n"; break;
    case Cmp::Greater: std::cout << "greater\n"; break;
    default: std::cout << "equal\n"; break;
  }
  return kOk;
}

int cmd_clifford_probe(const std::string& base_text, bool open, int trials,
                       unsigned long long seed) {
  const CliffordElement base = reduce(parse_clifford_word(base_text));
  const CliffordSegment f(base, !open);
  const auto witness = probe_final_segment_normality(f, trials, seed);
  if (!witness) {
    std::cout << "NoneFound for F = " << f.str() << " within " << trials << " trials\n";
    return kOk;
  }
  std::cout << "F = " << f.str() << " is not normal:\n"
            << "  f = " << witness->member.str() << "\n"
            << "  u = " << witness->conjugator.str() << "\n"
            << "  u^-1 f u = " << witness->image.str() << "  (outside F)\n";
  return kOk;
}

int cmd_corpus_verify(int max_n, int trials, unsigned long long seed) {
  VerifyOptions opts;
  opts.corpus_max_n = std::min(max_n, 6);
  opts.dimension_max_n = max_n;
  opts.clifford_fuzz = trials;
  opts.clifford_relation_samples = std::max(1, trials / 10);
  opts.seed = seed;
  const auto results = run_verification(opts);
  bool all = true;
  for (const CheckResult& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "corpus-verify: all checks passed\n"
                    : "corpus-verify: FAILURES present\n");
  return all ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval orders, semiorders and threshold orders on posets and ordered groups"};
  app.require_subcommand(1);

  std::string poset_path, poset_path_b, group_path, window_flag, dot_path, word_a, word_b;
  int max_k = 4;
  int max_n = 5;
  int verify_max_n = 7;
  int trials = 200;
  int verify_trials = 10000;
  long long lo = -8, hi = 8;
  std::string alpha_text = "2";
  bool open_segment = false;
  unsigned long long seed = 20250810;

  auto* c_classify = app.add_subcommand("classify", "recognize a poset file");
  c_classify->add_option("poset", poset_path)->required();
  c_classify->add_option("--dot", dot_path);

  auto* c_traces = app.add_subcommand("traces", "print the pred/succ traces");
  c_traces->add_option("poset", poset_path)->required();

  auto* c_critical = app.add_subcommand("critical", "print the critical pairs");
  c_critical->add_option("poset", poset_path)->required();

  auto* c_repr = app.add_subcommand("represent", "unit or interval representation");
  c_repr->add_option("poset", poset_path)->required();

  auto* c_dim = app.add_subcommand("dimension", "brute-force order dimension");
  c_dim->add_option("poset", poset_path)->required();
  c_dim->add_option("--max-k", max_k);

  auto* c_real = app.add_subcommand("realizer3", "three-order realizer for (Z, <=_alpha)");
  c_real->add_option("--lo", lo);
  c_real->add_option("--hi", hi);
  c_real->add_option("--alpha", alpha_text);

  std::string margin_flag;
  auto* c_gcheck = app.add_subcommand("group-check", "classify a group window");
  c_gcheck->add_option("spec", group_path)->required();
  c_gcheck->add_option("--window", window_flag);
  c_gcheck->add_option("--margin", margin_flag);
  c_gcheck->add_option("--dot", dot_path);

  auto* c_ginc = app.add_subcommand("group-inc0", "elements incomparable to 0");
  c_ginc->add_option("spec", group_path)->required();
  c_ginc->add_option("--window", window_flag);

  auto* c_gkai = app.add_subcommand("group-kai", "exact K(G), A(G), I(G)(0)");
  c_gkai->add_option("spec", group_path)->required();
  c_gkai->add_option("--window", window_flag);

  auto* c_gtrans = app.add_subcommand("group-transfer", "1+n vs (q+1)+p transfer check");
  c_gtrans->add_option("spec", group_path)->required();
  c_gtrans->add_option("--window", window_flag);
  c_gtrans->add_option("--max-n", max_n);

  auto* c_preceq = app.add_subcommand("preceq", "battery refutation of P preceq Q");
  c_preceq->add_option("P", poset_path)->required();
  c_preceq->add_option("Q", poset_path_b)->required();

  auto* c_cred = app.add_subcommand("clifford-reduce", "normal form of a Clifford word");
  c_cred->add_option("word", word_a)->required();

  auto* c_ccmp = app.add_subcommand("clifford-cmp", "compare two Clifford words");
  c_ccmp->add_option("a", word_a)->required();
  c_ccmp->add_option("b", word_b)->required();

  auto* c_cprobe = app.add_subcommand("clifford-probe", "normality probe of a final segment");
  c_cprobe->add_option("base", word_a)->required();
  c_cprobe->add_flag("--open", open_segment);
  c_cprobe->add_option("--trials", trials);
  c_cprobe->add_option("--seed", seed);

  auto* c_verify = app.add_subcommand("corpus-verify", "run the full theorem-as-test suite");
  c_verify->add_option("--max-n", verify_max_n);
  c_verify->add_option("--trials", verify_trials);
  c_verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;  // --help exits 0, usage errors exit 2
  }

  try {
    if (c_classify->parsed()) return cmd_classify(poset_path, dot_path);
    if (c_traces->parsed()) return cmd_traces(poset_path);
    if (c_critical->parsed()) return cmd_critical(poset_path);
    if (c_repr->parsed()) return cmd_represent(poset_path);
    if (c_dim->parsed()) return cmd_dimension(poset_path, max_k);
    if (c_real->parsed()) return cmd_realizer3(lo, hi, alpha_text);
    if (c_gcheck->parsed())
      return cmd_group_check(load_group(group_path, window_flag), dot_path, margin_flag);
    if (c_ginc->parsed()) return cmd_group_inc0(load_group(group_path, window_flag));
    if (c_gkai->parsed()) return cmd_group_kai(load_group(group_path, window_flag));
    if (c_gtrans->parsed()) return cmd_group_transfer(load_group(group_path, window_flag), max_n);
    if (c_preceq->parsed()) return cmd_preceq(poset_path, poset_path_b);
    if (c_cred->parsed()) return cmd_clifford_reduce(word_a);
    if (c_ccmp->parsed()) return cmd_clifford_cmp(word_a, word_b);
    if (c_cprobe->parsed()) return cmd_clifford_probe(word_a, open_segment, trials, seed);
    if (c_verify->parsed()) return cmd_corpus_verify(verify_max_n, verify_trials, seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRefuted;
  }
  return kUsage;
}
