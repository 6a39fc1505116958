#pragma once

#include <functional>

#include "ssetkit/smap.hpp"

namespace sset {

/// Presents a simplicial set given by levelwise element sets and operator
/// actions.  Elements are identified by caller-chosen canonical keys, unique
/// within and across the computed levels.  Levels 0..cap are computed; the
/// result is exact if the caller guarantees no nondegenerate content above
/// cap (set `exact`), otherwise it carries a truncation mark.
struct LevelwiseSpec {
    int cap = 0;
    bool exact = false;
    std::function<std::vector<std::string>(int)> elements;
    /// face(n, key, i): the i-th face of a level-n element, n >= 1.
    std::function<std::string(int, const std::string&, int)> face;
    /// degen(n, key, i): the i-th degeneracy of a level-n element, n < cap.
    std::function<std::string(int, const std::string&, int)> degen;
    /// Id for a nondegenerate element; defaults to the key itself.
    std::function<Id(int, const std::string&)> name;
};

struct LevelwiseResult {
    SSetPtr sset;
    /// key of a nondegenerate element -> its id.
    std::map<std::string, Id> nondegenerate_of;
    /// (level, key) -> normal form in the presented simplicial set.
    std::map<std::pair<int, std::string>, Simplex> normal_form;

    const Simplex& normalize(int level, const std::string& key) const {
        return normal_form.at({level, key});
    }
};

LevelwiseResult from_levelwise(const LevelwiseSpec& spec);

}  // namespace sset
