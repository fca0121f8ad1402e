#pragma once

#include <altab/text.hpp>

namespace corpus {

inline constexpr const char* kT0 = "EEDDEDDEEDDED|L3,5;U4,9;U6,8;L6,9;L7,9;L10,12";
inline constexpr const char* kSigma0 = "10 12 3 5 2 1 0 8 6 7 9 4 11 13";

inline altab::AltTableau t0() { return altab::parse_tableau(kT0); }

}  // namespace corpus
