#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiord/cmp.hpp"
#include "semiord/rational.hpp"

namespace semiord {

// Clifford's group: generators g(a), a rational, with the defining relation
//   g(a) + g(b) = g((a+b)/2) + g(a)   whenever a > b.
// Elements carry an exact normal form  m1*g(a1) + ... + ms*g(as)  with
// a1 < ... < as and every mi nonzero; the order takes the sign of ms.

struct CliffordLetter {
  Rational alpha;
  int exponent = 1;  // +1 or -1
};

using CliffordWord = std::vector<CliffordLetter>;

class CliffordElement {
 public:
  CliffordElement() = default;  // identity

  static CliffordElement generator(const Rational& alpha);
  // m * g(alpha); m = 0 gives the identity.
  static CliffordElement multiple(long long m, const Rational& alpha);
  // Takes terms already in normal form (strictly increasing alpha, m != 0).
  static CliffordElement from_terms(std::vector<std::pair<Rational, long long>> terms);

  bool is_identity() const { return terms_.empty(); }
  const std::vector<std::pair<Rational, long long>>& terms() const { return terms_; }
  CliffordWord to_word() const;
  std::string str() const;  // "+2*g(1/2) -1*g(3)" style; "0" for the identity

  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const CliffordElement& a, const CliffordElement& b) {
    return !(a == b);
  }

 private:
  std::vector<std::pair<Rational, long long>> terms_;
};

// Left-to-right scan, swap at the first inversion, merge when sorted.
CliffordElement reduce(const CliffordWord& w);
// Same, validating every applied swap against a forward-only application of
// the defining relation and checking the decreasing reduction measure.
CliffordElement reduce_checked(const CliffordWord& w);
// Independent strategy (right-to-left prepend) for confluence fuzzing.
CliffordElement reduce_rtl(const CliffordWord& w);

CliffordElement cliff_add(const CliffordElement& a, const CliffordElement& b);
CliffordElement cliff_neg(const CliffordElement& a);
// u^-1 * a * u.
CliffordElement cliff_conjugate(const CliffordElement& a, const CliffordElement& u);

enum class Sign { Negative, Zero, Positive };

// Zero iff identity, else the sign of the leading (largest-alpha) coefficient.
Sign cliff_sign(const CliffordElement& a);
// a vs b via sign(-a + b).
Cmp cliff_compare(const CliffordElement& a, const CliffordElement& b);

// Principal final segment {x : base <= x} (closed) or {x : base < x} (open)
// of the Clifford total order.  A closed segment needs base > 0; an open one
// allows base = 0 (all positives).  Constructor throws InvalidSegment.
class CliffordSegment {
 public:
  CliffordSegment(CliffordElement base, bool closed);

  bool contains(const CliffordElement& x) const;
  const CliffordElement& base() const { return base_; }
  bool closed() const { return closed_; }
  std::string str() const;

 private:
  CliffordElement base_;
  bool closed_ = true;
};

struct NormalityWitness {
  CliffordElement member;      // f in F
  CliffordElement conjugator;  // u
  CliffordElement image;       // u^-1 f u, not in F
};

// Searches for a conjugation witness that F is not normal.  The directed
// phase walks the generator ladder (any generator in F conjugates onto any
// other generator); random trials follow.  Returns nullopt when no witness
// was found within the budget (the improper segment of all positives is the
// normal cone, so nothing will ever be found for it).
std::optional<NormalityWitness> probe_final_segment_normality(
    const CliffordSegment& f, int trials, std::uint64_t seed = 0x5eed);

// Parses "g(3/2) g(0)^-1 g(1)" style words.  Throws ParseError.
CliffordWord parse_clifford_word(const std::string& text);

}  // namespace semiord
