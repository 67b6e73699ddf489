#include "hstrn/presets.hpp"

#include <cctype>
#include <stdexcept>

namespace hstrn {

NetworkConfig expand_preset(int pm, ShadowingClass sc) {
    if (pm < 1 || pm > 6) throw std::invalid_argument("preset index must be 1..6");
    NetworkConfig cfg;
    const ShadowedRicianParams link = sc == ShadowingClass::heavy
                                          ? ShadowedRicianParams::heavy()
                                          : ShadowedRicianParams::average();
    const int n = (pm == 1 || pm == 2) ? 1 : 3;
    cfg.relays.assign(static_cast<std::size_t>(n), link);
    const double mu = (pm == 2 || pm == 4) ? 0.0 : 0.25;
    cfg.cee = CeeProfile::uniform(mu);
    cfg.power.psi_db = 20.0;
    cfg.power.theta_db = 1.0;
    cfg.power.phi_db = pm == 5 ? 5.0 : pm == 6 ? 10.0 : 20.0;
    cfg.c_th = 1.0;
    return cfg;
}

std::string preset_name(int pm, ShadowingClass sc) {
    return "PM" + std::to_string(pm) + (sc == ShadowingClass::heavy ? "-HS" : "-AS");
}

NetworkConfig parse_preset(std::string_view name) {
    std::string up;
    up.reserve(name.size());
    for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (up.size() == 6 && up.compare(0, 2, "PM") == 0 && up[3] == '-' &&
        up[2] >= '1' && up[2] <= '6') {
        if (up.compare(4, 2, "HS") == 0) return expand_preset(up[2] - '0', ShadowingClass::heavy);
        if (up.compare(4, 2, "AS") == 0) return expand_preset(up[2] - '0', ShadowingClass::average);
    }
    throw std::invalid_argument("unknown preset '" + std::string(name) +
                                "' (expected PM1-HS .. PM6-AS)");
}

} // namespace hstrn
