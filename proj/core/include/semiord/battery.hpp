#pragma once

#include <functional>
#include <string>
#include <vector>

#include "semiord/poset.hpp"

namespace semiord {

// One witness group of the embeddability battery, with an exact finite-poset
// embeddability decider (structural test, or a window search whose window is
// large enough by a gap-compression argument).
struct BatteryGroup {
  std::string name;
  std::function<bool(const Poset&)> embeds;
};

// Witness groups:
//   chains<n>      Z x Z/n with cone {(m,0): m>=0}: direct sum of n copies of Z
//   layers<n>      same carrier, cone C1 u {(m,i): m>=1}: lex sum of n-antichains
//   ztheta3        Z with threshold 3
//   evenplus<n>    Z with cone {even >= 2} u {>= n+1}   (n even)
//   halfcrown<p>   Z x Z/2, strict cone generated by (1,0) and (p+1,1)  (n = 2p+1)
// max_size bounds the posets the deciders will be asked about.
std::vector<BatteryGroup> standard_battery(int max_size);

struct PreceqResult {
  bool refuted = false;
  std::string witness_group;  // set when refuted
};

// Semi-decision of P preceq Q: Refuted when some battery group embeds Q but
// provably cannot embed P.  NotRefuted is not a proof.
PreceqResult preceq_battery(const Poset& p, const Poset& q);

}  // namespace semiord
