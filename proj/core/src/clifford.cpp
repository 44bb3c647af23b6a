#include "semiord/clifford.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "semiord/errors.hpp"

namespace semiord {

namespace {

struct Letter {
  Rational a;
  int e;  // +1 or -1
};

// One forward application of the defining relation on a positive pair:
// g(a) + g(b) = g((a+b)/2) + g(a), requires a > b.
std::pair<Rational, Rational> forward_step(const Rational& a, const Rational& b) {
  if (!(a > b)) throw CriteriaDisagreement("forward step needs a > b");
  return {(a + b) / 2, a};
}

// Swap an adjacent inversion (L, R) with L.a > R.a into (R', L).
// L.e = +1:  R'.a = (L.a + R.a)/2    (the relation read left to right)
// L.e = -1:  R'.a = 2 R.a - L.a      (derived; certified by validate_swap)
Letter swapped_right(const Letter& L, const Letter& R) {
  if (L.e == 1) return {(L.a + R.a) / 2, R.e};
  return {2 * R.a - L.a, R.e};
}

// Certifies a swap instance using only forward applications of the defining
// relation on positive letters:
//   e=+1: the rewrite IS the relation; check g(La)+g(Ra) forwards to the
//         claimed pair.
//   e=-1: -g(La)+g(Ra)^d = g(B)^d - g(La) with B = 2Ra-La follows from
//         g(La)+g(B) = g(Ra)+g(La), i.e. forward(La, B) == (Ra, La).
void validate_swap(const Letter& L, const Letter& R, const Letter& NR) {
  if (L.e == 1) {
    const auto [m, a] = forward_step(L.a, R.a);
    if (m != NR.a || a != L.a)
      throw CriteriaDisagreement("positive swap disagreed with the defining relation");
  } else {
    const auto [m, a] = forward_step(L.a, NR.a);
    if (m != R.a || a != L.a)
      throw CriteriaDisagreement("inverse swap disagreed with the defining relation");
  }
  if (NR.e != R.e) throw CriteriaDisagreement("swap must preserve the moving exponent");
}

// Strictly decreasing reduction measure: the multiset of (alpha, distance
// from the right end), compared as descending-sorted sequences.
std::vector<std::pair<Rational, std::size_t>> measure(const std::vector<Letter>& w) {
  std::vector<std::pair<Rational, std::size_t>> m;
  m.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    m.emplace_back(w[i].a, w.size() - 1 - i);
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

CliffordElement collect(std::vector<Letter> w) {
  std::vector<std::pair<Rational, long long>> terms;
  for (const Letter& l : w) {
    if (!terms.empty() && terms.back().first == l.a) {
      terms.back().second += l.e;
      if (terms.back().second == 0) terms.pop_back();
    } else {
      terms.emplace_back(l.a, l.e);
    }
  }
  // zero-coefficient deletion can expose equal neighbors; fold until stable
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
      if (terms[i].first == terms[i + 1].first) {
        terms[i].second += terms[i + 1].second;
        terms.erase(terms.begin() + i + 1);
        if (terms[i].second == 0) terms.erase(terms.begin() + i);
        again = true;
        break;
      }
    }
  }
  return CliffordElement::from_terms(std::move(terms));
}

CliffordElement reduce_scan(const CliffordWord& word, bool checked) {
  std::vector<Letter> w;
  w.reserve(word.size());
  for (const CliffordLetter& l : word) {
    if (l.exponent != 1 && l.exponent != -1) throw ParseError("letter exponent must be +-1");
    w.push_back({l.alpha, l.exponent});
  }
  // Left-to-right scan; a swap can create an inversion one step to the left,
  // so back up after each one.  Insertion-equivalent, O(len^2) swaps.
  std::size_t fuel = 4 * w.size() * w.size() + 64;
  std::size_t i = 0;
  while (w.size() > 1 && i + 1 < w.size()) {
    if (w[i].a > w[i + 1].a) {
      if (fuel-- == 0) throw CriteriaDisagreement("reduction exceeded its swap budget");
      const Letter L = w[i], R = w[i + 1];
      const Letter NR = swapped_right(L, R);
      std::vector<std::pair<Rational, std::size_t>> before;
      if (checked) before = measure(w);
      w[i] = NR;
      w[i + 1] = L;
      if (checked) {
        validate_swap(L, R, NR);
        if (!(measure(w) < before))
          throw CriteriaDisagreement("reduction measure failed to decrease");
      }
      if (i > 0) --i;
    } else {
      ++i;
    }
  }
  return collect(std::move(w));
}

}  // namespace

CliffordElement CliffordElement::generator(const Rational& alpha) {
  return multiple(1, alpha);
}

CliffordElement CliffordElement::multiple(long long m, const Rational& alpha) {
  CliffordElement e;
  if (m != 0) e.terms_.emplace_back(alpha, m);
  return e;
}

CliffordElement CliffordElement::from_terms(std::vector<std::pair<Rational, long long>> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].second == 0) throw ParseError("normal form has nonzero coefficients");
    if (i + 1 < terms.size() && !(terms[i].first < terms[i + 1].first))
      throw ParseError("normal form has strictly increasing alphas");
  }
  CliffordElement e;
  e.terms_ = std::move(terms);
  return e;
}

CliffordWord CliffordElement::to_word() const {
  CliffordWord w;
  for (const auto& [a, m] : terms_) {
    const int e = m > 0 ? 1 : -1;
    for (long long k = 0; k < (m > 0 ? m : -m); ++k) w.push_back({a, e});
  }
  return w;
}

std::string CliffordElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << ' ';
    const auto& [a, m] = terms_[i];
    os << (m > 0 ? "+" : "") << m << "*g(" << rat_str(a) << ")";
  }
  return os.str();
}

CliffordElement reduce(const CliffordWord& w) { return reduce_scan(w, false); }
CliffordElement reduce_checked(const CliffordWord& w) { return reduce_scan(w, true); }

CliffordElement reduce_rtl(const CliffordWord& word) {
  // Process letters right to left, prepending into a sorted word; the new
  // letter bubbles right, renaming the letters it passes.
  std::vector<Letter> sorted;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->exponent != 1 && it->exponent != -1) throw ParseError("letter exponent must be +-1");
    Letter mover{it->alpha, it->exponent};
    std::vector<Letter> next;
    next.reserve(sorted.size() + 1);
    std::size_t k = 0;
    while (k < sorted.size() && mover.a > sorted[k].a) {
      next.push_back(swapped_right(mover, sorted[k]));
      ++k;
    }
    next.push_back(mover);
    for (; k < sorted.size(); ++k) next.push_back(sorted[k]);
    sorted = std::move(next);
  }
  return collect(std::move(sorted));
}

CliffordElement cliff_add(const CliffordElement& a, const CliffordElement& b) {
  CliffordWord w = a.to_word();
  const CliffordWord wb = b.to_word();
  w.insert(w.end(), wb.begin(), wb.end());
  return reduce(w);
}

CliffordElement cliff_neg(const CliffordElement& a) {
  const CliffordWord w = a.to_word();
  CliffordWord r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->alpha, -it->exponent});
  return reduce(r);
}

CliffordElement cliff_conjugate(const CliffordElement& a, const CliffordElement& u) {
  return cliff_add(cliff_add(cliff_neg(u), a), u);
}

Sign cliff_sign(const CliffordElement& a) {
  if (a.is_identity()) return Sign::Zero;
  return a.terms().back().second > 0 ? Sign::Positive : Sign::Negative;
}

Cmp cliff_compare(const CliffordElement& a, const CliffordElement& b) {
  switch (cliff_sign(cliff_add(cliff_neg(a), b))) {
    case Sign::Positive: return Cmp::Less;
    case Sign::Negative: return Cmp::Greater;
    default: return Cmp::Equal;
  }
}

CliffordSegment::CliffordSegment(CliffordElement base, bool closed)
    : base_(std::move(base)), closed_(closed) {
  const Sign s = cliff_sign(base_);
  if (closed_ ? s != Sign::Positive : s == Sign::Negative)
    throw InvalidSegment("segment base must be positive (or zero for an open segment)");
}

bool CliffordSegment::contains(const CliffordElement& x) const {
  const Cmp c = cliff_compare(base_, x);
  return closed_ ? c != Cmp::Greater : c == Cmp::Less;
}

std::string CliffordSegment::str() const {
  return std::string("{x ") + (closed_ ? ">=" : ">") + " " + base_.str() + "}";
}

std::optional<NormalityWitness> probe_final_segment_normality(const CliffordSegment& f,
                                                              int trials,
                                                              std::uint64_t seed) {
  // Directed phase, walking the generator ladder: some generator g(beta)
  // lies in F (every element sits below a generator), and conjugating it by
  // g(2*beta - r) lands on g(r); pick r with g(r) outside F.
  const auto& base_terms = f.base().terms();
  const Rational top = base_terms.empty() ? Rational(0) : base_terms.back().first;
  const Rational bottom = base_terms.empty() ? Rational(0) : base_terms.front().first;
  const Rational beta = top + 1;
  const CliffordElement gen_beta = CliffordElement::generator(beta);
  if (f.contains(gen_beta)) {
    for (int k = 0; k < 8; ++k) {
      const Rational r = (bottom < beta ? bottom : beta) - 1 - k;
      const CliffordElement gr = CliffordElement::generator(r);
      if (f.contains(gr)) continue;
      const CliffordElement u = CliffordElement::generator(2 * beta - r);
      const CliffordElement image = cliff_conjugate(gen_beta, u);
      if (image != gr)
        throw CriteriaDisagreement("generator conjugation missed its target");
      if (!f.contains(image)) return NormalityWitness{gen_beta, u, image};
    }
  }

  // Random phase: members of F conjugated by random words.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-16, 16);
  std::uniform_int_distribution<int> den_pow(0, 4);
  std::uniform_int_distribution<int> expo(0, 1);
  std::uniform_int_distribution<int> len(1, 4);
  auto rand_alpha = [&] { return Rational(num(rng), 1LL << den_pow(rng)); };
  for (int t = 0; t < trials; ++t) {
    CliffordWord uw;
    const int L = len(rng);
    for (int i = 0; i < L; ++i) uw.push_back({rand_alpha(), expo(rng) ? 1 : -1});
    const CliffordElement u = reduce(uw);
    // a member of F: the base plus a random positive element
    CliffordElement member = f.base();
    CliffordElement bump = CliffordElement::generator(rand_alpha());
    if (cliff_sign(bump) != Sign::Positive) continue;
    member = cliff_add(member, bump);
    if (!f.contains(member)) continue;
    const CliffordElement image = cliff_conjugate(member, u);
    if (!f.contains(image)) return NormalityWitness{member, u, image};
  }
  return std::nullopt;
}

CliffordWord parse_clifford_word(const std::string& text) {
  CliffordWord out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 4 || tok.substr(0, 2) != "g(")
      throw ParseError("expected g(<rational>) token, got: " + tok);
    const auto close = tok.find(')');
    if (close == std::string::npos) throw ParseError("unclosed g( in: " + tok);
    const Rational a = rat_parse(tok.substr(2, close - 2));
    long long e = 1;
    if (close + 1 < tok.size()) {
      if (tok[close + 1] != '^') throw ParseError("expected ^ after g(...) in: " + tok);
      try {
        e = std::stoll(tok.substr(close + 2));
      } catch (const std::exception&) {
        throw ParseError("bad exponent in: " + tok);
      }
      if (e == 0) continue;
    }
    const int sign = e > 0 ? 1 : -1;
    for (long long k = 0; k < (e > 0 ? e : -e); ++k) out.push_back({a, sign});
  }
  return out;
}

}  // namespace semiord
