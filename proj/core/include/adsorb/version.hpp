#ifndef ADSORB_VERSION_HPP_
#define ADSORB_VERSION_HPP_

namespace adsorb {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // ADSORB_VERSION_HPP_
