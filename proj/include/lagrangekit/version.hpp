#ifndef LAGRANGEKIT_VERSION_HPP
#define LAGRANGEKIT_VERSION_HPP

namespace lagrangekit {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
