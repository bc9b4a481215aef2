#pragma once

#include <string>

#include "posetkit/format.hpp"
#include "posetkit/poset.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(POSETKIT_FIXTURE_DIR) + "/" + name; }

inline posetkit::Poset poset(const std::string& name) { return posetkit::load_poset(path(name + ".poset")); }

inline posetkit::BoundedPoset bounded(const std::string& name) { return posetkit::as_bounded(poset(name)); }

inline const char* const all_bounded[] = {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6",
                                          "fig7", "fig8", "fig9", "fig10", "n5", "twochain"};

}  // namespace fixtures
