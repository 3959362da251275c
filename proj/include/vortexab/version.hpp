#ifndef VORTEXAB_VERSION_HPP
#define VORTEXAB_VERSION_HPP

namespace vortexab {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
