#ifndef EINSTAB_VERSION_HPP
#define EINSTAB_VERSION_HPP

namespace einstab {

inline constexpr const char* kToolName = "einstab";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace einstab

#endif
