#include "ssetkit/levelwise.hpp"

#include <stdexcept>

namespace sset {

LevelwiseResult from_levelwise(const LevelwiseSpec& spec) {
    LevelwiseResult out;
    SSet s;

    std::vector<std::vector<std::string>> level_keys(static_cast<std::size_t>(spec.cap) + 1);
    for (int n = 0; n <= spec.cap; ++n) level_keys[static_cast<std::size_t>(n)] = spec.elements(n);

    auto name_of = [&](int n, const std::string& key) {
        return spec.name ? spec.name(n, key) : Id(key);
    };

    // Normal forms level by level: an element is degenerate at i exactly
    // when degen(face(e, i), i) == e; stripping any one descent and
    // normalizing the face reaches the unique normal form.
    for (int n = 0; n <= spec.cap; ++n) {
        for (const std::string& key : level_keys[static_cast<std::size_t>(n)]) {
            Simplex nf{"", MonotoneMap::identity(1)};
            bool degenerate = false;
            for (int i = 0; i < n && !degenerate; ++i) {
                std::string f = spec.face(n, key, i);
                if (spec.degen(n - 1, f, i) == key) {
                    degenerate = true;
                    const Simplex& inner = out.normal_form.at({n - 1, f});
                    nf = Simplex{inner.base,
                                 inner.surj.after(MonotoneMap::codegeneracy(n - 1, i))};
                }
            }
            if (!degenerate) {
                Id id = name_of(n, key);
                out.nondegenerate_of.emplace(key, id);
                nf = Simplex{id, MonotoneMap::identity(n + 1)};
            }
            out.normal_form.emplace(std::make_pair(n, key), std::move(nf));
        }
    }

    // Face tables.
    for (int n = 0; n <= spec.cap; ++n) {
        for (const std::string& key : level_keys[static_cast<std::size_t>(n)]) {
            auto it = out.nondegenerate_of.find(key);
            if (it == out.nondegenerate_of.end()) continue;
            std::vector<Simplex> faces;
            for (int i = 0; i <= n && n > 0; ++i)
                faces.push_back(out.normal_form.at({n - 1, spec.face(n, key, i)}));
            s.add_simplex(it->second, n, std::move(faces));
        }
    }
    if (!spec.exact) s.set_truncation(spec.cap);
    out.sset = std::make_shared<const SSet>(std::move(s));
    return out;
}

}  // namespace sset
