#pragma once

#include <string>

#include "skewpbw/presentation.hpp"
#include "skewpbw/text.hpp"

namespace support {

inline skewpbw::Presentation shipped(const std::string& name) {
  return skewpbw::load_presentation(std::string(SKEWPBW_ALGEBRA_DIR) + "/" + name + ".alg");
}

inline skewpbw::RingPtr ring(const std::string& name,
                             skewpbw::MonomialOrder order = skewpbw::MonomialOrder::deglex()) {
  return skewpbw::Ring::create(shipped(name), std::move(order));
}

inline skewpbw::Polynomial poly(const skewpbw::RingPtr& r, const std::string& text) {
  return skewpbw::parse_polynomial(text, r);
}

inline const char* const kShipped[] = {"witten",       "qplane_m1",    "qplane_q2",   "qplane_q2_gf5", "qplane_zeta3",
                                       "qplane_zeta4", "weyl3",        "multiparam3", "qplane_conj",   "commutative"};

inline const char* const kQuasiCommutative[] = {"qplane_m1",    "qplane_q2",   "qplane_q2_gf5", "qplane_zeta3",
                                                "qplane_zeta4", "multiparam3", "qplane_conj",   "commutative"};

}  // namespace support
