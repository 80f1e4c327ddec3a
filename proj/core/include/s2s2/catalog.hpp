#pragma once

// Named rings and modules used by the worked examples.

#include <string>

#include "s2s2/group_homalg.hpp"

namespace s2s2::catalog {

/// F2[t,u]/(t^3, u^3), top 4.
std::string rp2xrp2_ring();
/// Twisted bundle, in the same generators: F2[t,u]/(u^3, t^3 + t u^2), top 4.
std::string rp2_twisted_rp2_ring();
/// Twisted bundle as F2[w,x]/(x^3, w^2 (w + x)), top 4.
std::string rp2_twisted_rp2_wx_ring();
/// P(u) (x) E(x) with |x| = 1, |u| = 2, Sq^1 u = 0, truncated at 6.
std::string z4_group_ring();
/// F2[s]/(s^2), |s| = 4.
std::string s4_ring();
/// F2[a,b]/(a^3, b^2), |a| = 1, |b| = 2.
std::string s2xrp2_ring();
/// F2[a,b]/(a^3, b^2 + a^2 b).
std::string s2_twisted_rp2_ring();
/// Cohomology ring of the trivial group (F2 in degree 0).
std::string trivial_group_ring();

/// pi_2 of the Z/4 quotient: Z^2 with the generator acting by (0 1; -1 0).
homalg::GroupModule z4_pi2();
/// pi_3 of the Z/4 quotient: Z^2 with the generator swapping the summands.
homalg::GroupModule z4_pi3();
/// pi_2 of RP^2 x RP^2 over (Z/2)^2: t = diag(-1,1), u = diag(1,-1).
homalg::GroupModule rp2xrp2_pi2();
/// pi_2 of S^2 x RP^2 over Z/2: t = diag(1,-1).
homalg::GroupModule s2xrp2_pi2();

}  // namespace s2s2::catalog
