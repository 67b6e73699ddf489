#pragma once

#include <string>
#include <string_view>

#include "hstrn/linkmodel.hpp"

namespace hstrn {

enum class ShadowingClass { heavy, average };

// Named system configurations PM1..PM6 used throughout the docs and the
// reproduction runs. PM1/PM3: estimation error 0.25 with 1/3 relays;
// PM2/PM4: perfect CSI with 1/3 relays; PM5/PM6: 3 relays, error 0.25,
// relay budget pinned to 5/10 dB. Satellite budget defaults to 20 dB and
// the jammer to 1 dB; sweeps override fields afterwards.
NetworkConfig expand_preset(int pm, ShadowingClass sc);

// Parses "PM3-AS", "pm1-hs" etc.; throws std::invalid_argument.
NetworkConfig parse_preset(std::string_view name);

std::string preset_name(int pm, ShadowingClass sc);

} // namespace hstrn
