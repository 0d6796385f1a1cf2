#include "momat/cat/finset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "momat/error.hpp"

namespace momat::cat {

FinSet::FinSet(std::initializer_list<std::string> labels) : FinSet(std::vector<std::string>(labels)) {}

FinSet::FinSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::set<std::string_view> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) throw Error(ErrorCode::DuplicateName, "set element '" + l + "' repeated");
}

std::size_t FinSet::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error(ErrorCode::NotFound, "no element '" + std::string(label) + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

FinSetMap::FinSetMap(FinSet domain, FinSet codomain, std::vector<std::size_t> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (images_.size() != domain_.size())
        throw Error(ErrorCode::NonTotalMap, "map defines " + std::to_string(images_.size()) + " images for " +
                                                std::to_string(domain_.size()) + " elements");
    for (auto i : images_)
        if (i >= codomain_.size()) throw Error(ErrorCode::NonTotalMap, "image index outside codomain");
}

FinSetMap FinSetMap::from_pairs(FinSet domain, FinSet codomain,
                                const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::optional<std::size_t>> slots(domain.size());
    for (const auto& [from, to] : pairs) {
        auto i = domain.index_of(from);
        if (slots[i]) throw Error(ErrorCode::NonTotalMap, "element '" + from + "' mapped twice");
        slots[i] = codomain.index_of(to);
    }
    std::vector<std::size_t> images;
    images.reserve(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i]) throw Error(ErrorCode::NonTotalMap, "element '" + domain.label(i) + "' unmapped");
        images.push_back(*slots[i]);
    }
    return FinSetMap(std::move(domain), std::move(codomain), std::move(images));
}

FinSetMap FinSetMap::identity(const FinSet& set) {
    std::vector<std::size_t> images(set.size());
    std::iota(images.begin(), images.end(), std::size_t{0});
    return FinSetMap(set, set, std::move(images));
}

FinSetMap compose(const FinSetMap& g, const FinSetMap& f) {
    if (f.codomain() != g.domain()) throw Error(ErrorCode::DomainMismatch, "g o f with cod(f) != dom(g)");
    std::vector<std::size_t> images;
    images.reserve(f.domain().size());
    for (auto i : f.images()) images.push_back(g(i));
    return FinSetMap(f.domain(), g.codomain(), std::move(images));
}

Pullback finset_pullback(const FinSetMap& f, const FinSetMap& g) {
    if (f.codomain() != g.codomain())
        throw Error(ErrorCode::CodomainMismatch, "pullback legs must share a codomain");

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < f.domain().size(); ++a)
        for (std::size_t b = 0; b < g.domain().size(); ++b)
            if (f(a) == g(b)) pairs.emplace_back(a, b);

    std::vector<std::string> labels;
    std::vector<std::size_t> to_a, to_b;
    for (auto [a, b] : pairs) {
        labels.push_back("(" + f.domain().label(a) + "," + g.domain().label(b) + ")");
        to_a.push_back(a);
        to_b.push_back(b);
    }
    FinSet apex(std::move(labels));
    return Pullback{apex, pairs, FinSetMap(apex, f.domain(), std::move(to_a)), FinSetMap(apex, g.domain(), std::move(to_b))};
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
};

}  // namespace

Pushout finset_pushout(const FinSetMap& f, const FinSetMap& g) {
    if (f.domain() != g.domain()) throw Error(ErrorCode::DomainMismatch, "pushout legs must share a domain");

    const std::size_t na = f.codomain().size();
    const std::size_t nb = g.codomain().size();
    DisjointSets sets(na + nb);
    for (std::size_t c = 0; c < f.domain().size(); ++c) sets.unite(f(c), na + g(c));

    // Roots are the smallest members, so iterating in index order yields
    // classes ordered by smallest member.
    std::map<std::size_t, std::size_t> class_of_root;
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> class_of(na + nb);
    for (std::size_t i = 0; i < na + nb; ++i) {
        auto root = sets.find(i);
        auto [it, inserted] = class_of_root.emplace(root, classes.size());
        if (inserted) classes.emplace_back();
        classes[it->second].push_back(i);
        class_of[i] = it->second;
    }

    auto element_label = [&](std::size_t i) {
        return i < na ? f.codomain().label(i) : g.codomain().label(i - na);
    };
    std::vector<std::string> labels;
    std::set<std::string> used;
    for (const auto& members : classes) {
        std::string label;
        if (members.size() == 1) {
            label = element_label(members.front());
        } else {
            label = "[";
            for (std::size_t k = 0; k < members.size(); ++k) {
                if (k) label += "=";
                label += element_label(members[k]);
            }
            label += "]";
        }
        // A and B may share labels; primes keep the apex a set.
        while (!used.insert(label).second) label += "'";
        labels.push_back(std::move(label));
    }
    FinSet apex(std::move(labels));

    std::vector<std::size_t> from_a(class_of.begin(), class_of.begin() + static_cast<std::ptrdiff_t>(na));
    std::vector<std::size_t> from_b(class_of.begin() + static_cast<std::ptrdiff_t>(na), class_of.end());
    return Pushout{apex, std::move(classes), FinSetMap(f.codomain(), apex, std::move(from_a)),
                   FinSetMap(g.codomain(), apex, std::move(from_b))};
}

}  // namespace momat::cat
