#ifndef EIL_VERSION_HPP
#define EIL_VERSION_HPP

namespace eil {

inline constexpr const char* kVersion = "0.1.0";

} // namespace eil

#endif
