#include "s2s2/catalog.hpp"

namespace s2s2::catalog {

using linalg::IntMatrix;

std::string rp2xrp2_ring() {
  return "gen t 1\ngen u 1\nrel t^3\nrel u^3\ntop 4\nfundamental t^2*u^2\n";
}

std::string rp2_twisted_rp2_ring() {
  return "gen t 1\ngen u 1\nrel u^3\nrel t^3 + t*u^2\ntop 4\nfundamental t^2*u^2\n";
}

std::string rp2_twisted_rp2_wx_ring() {
  return "gen w 1\ngen x 1\nrel x^3\nrel w^3 + w^2*x\ntop 4\nfundamental w^2*x^2\n";
}

std::string z4_group_ring() { return "gen x 1\ngen u 2\nrel x^2\nsq1 u 0\ntop 6\n"; }

std::string s4_ring() { return "gen s 4\ntop 4\nfundamental s\n"; }

std::string s2xrp2_ring() { return "gen a 1\ngen b 2\nrel a^3\nrel b^2\ntop 4\nfundamental a^2*b\n"; }

std::string s2_twisted_rp2_ring() {
  return "gen a 1\ngen b 2\nrel a^3\nrel b^2 + a^2*b\ntop 4\nfundamental a^2*b\n";
}

std::string trivial_group_ring() { return "gen x 1\nrel x\ntop 6\n"; }

homalg::GroupModule z4_pi2() { return homalg::GroupModule::from_actions({IntMatrix{{0, 1}, {-1, 0}}}); }

homalg::GroupModule z4_pi3() { return homalg::GroupModule::from_actions({IntMatrix{{0, 1}, {1, 0}}}); }

homalg::GroupModule rp2xrp2_pi2() {
  return homalg::GroupModule::from_actions({IntMatrix{{-1, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, -1}}});
}

homalg::GroupModule s2xrp2_pi2() { return homalg::GroupModule::from_actions({IntMatrix{{1, 0}, {0, -1}}}); }

}  // namespace s2s2::catalog
