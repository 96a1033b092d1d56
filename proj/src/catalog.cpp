#include "ooeval/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace ooo {

namespace {

std::string image_name(const std::vector<int>& f) {
    std::string s;
    for (int v : f) s += static_cast<char>('0' + v);
    return s;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    // f first, then g.
    std::vector<int> h(f.size());
    for (std::size_t q = 0; q < f.size(); ++q) h[q] = g[static_cast<std::size_t>(f[q])];
    return h;
}

}  // namespace

std::optional<finite_semigroup> transformation_closure(int points,
                                                       const std::vector<std::vector<int>>& generators,
                                                       int max_size) {
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems;
    std::vector<std::size_t> queue_pos;

    auto add = [&](const std::vector<int>& f) -> bool {
        if (index.count(f)) return true;
        if (static_cast<int>(elems.size()) >= max_size) return false;
        index[f] = static_cast<int>(elems.size());
        elems.push_back(f);
        return true;
    };

    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != points) fail(errc::contract_error, "generator arity mismatch");
        for (int v : g)
            if (v < 0 || v >= points) fail(errc::contract_error, "generator image out of range");
        if (!add(g)) return std::nullopt;
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : generators)
            if (!add(compose(elems[i], g))) return std::nullopt;

    const int k = static_cast<int>(elems.size());
    std::vector<std::string> names;
    for (const auto& f : elems) names.push_back(image_name(f));
    std::vector<int> table(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            auto it = index.find(compose(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]));
            if (it == index.end()) fail(errc::contract_error, "closure is not closed");
            table[static_cast<std::size_t>(i) * k + j] = it->second;
        }
    return finite_semigroup(std::move(names), std::move(table));
}

std::vector<finite_semigroup> random_transformation_catalog(int count, std::uint64_t seed, int max_size) {
    rng_t rng(seed);
    std::vector<finite_semigroup> out;
    // Signature = point count + sorted element names; enough to dedupe since
    // elements fix the subsemigroup of T_points.
    std::set<std::string> seen;
    while (static_cast<int>(out.size()) < count) {
        int points = 3 + static_cast<int>(rng_below(rng, 2));
        int gens = 1 + static_cast<int>(rng_below(rng, 3));
        std::vector<std::vector<int>> g(static_cast<std::size_t>(gens), std::vector<int>(static_cast<std::size_t>(points)));
        for (auto& f : g)
            for (auto& v : f) v = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(points)));
        auto s = transformation_closure(points, g, max_size);
        if (!s) continue;
        std::vector<std::string> names = s->names();
        std::sort(names.begin(), names.end());
        std::string sig = std::to_string(points) + ":";
        for (const auto& n : names) sig += n + ",";
        if (!seen.insert(sig).second) continue;
        out.push_back(std::move(*s));
    }
    return out;
}

}  // namespace ooo
