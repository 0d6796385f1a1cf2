#pragma once

// Pullbacks and pushouts in the category of finite sets.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace momat::cat {

/// Finite set of labeled elements; element identity is the index.
class FinSet {
public:
    FinSet() = default;
    FinSet(std::initializer_list<std::string> labels);
    explicit FinSet(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t index_of(std::string_view label) const;

    friend bool operator==(const FinSet&, const FinSet&) = default;

private:
    std::vector<std::string> labels_;
};

/// Total function between finite sets, stored as image indices.
class FinSetMap {
public:
    FinSetMap(FinSet domain, FinSet codomain, std::vector<std::size_t> images);
    /// Builds from label pairs; every domain element must appear exactly once.
    static FinSetMap from_pairs(FinSet domain, FinSet codomain,
                                const std::vector<std::pair<std::string, std::string>>& pairs);
    static FinSetMap identity(const FinSet& set);

    const FinSet& domain() const noexcept { return domain_; }
    const FinSet& codomain() const noexcept { return codomain_; }
    const std::vector<std::size_t>& images() const noexcept { return images_; }
    std::size_t operator()(std::size_t i) const { return images_.at(i); }

    friend bool operator==(const FinSetMap&, const FinSetMap&) = default;

private:
    FinSet domain_;
    FinSet codomain_;
    std::vector<std::size_t> images_;
};

/// g ∘ f; throws DomainMismatch unless f's codomain is g's domain.
FinSetMap compose(const FinSetMap& g, const FinSetMap& f);

struct Pullback {
    FinSet apex;                                       // labels "(a,b)"
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (A index, B index)
    FinSetMap proj_a;
    FinSetMap proj_b;
};

/// P = {(a,b) | f(a) = g(b)}, ordered by (A index, B index).
Pullback finset_pullback(const FinSetMap& f, const FinSetMap& g);

struct Pushout {
    FinSet apex;  // one label per class, "[a=x]" when a class merges elements
    /// Members of each class as indices into the disjoint union A ⊔ B
    /// (A elements first), in ascending order.
    std::vector<std::vector<std::size_t>> classes;
    FinSetMap inj_a;
    FinSetMap inj_b;
};

/// P = (A ⊔ B) / ~ with f(c) ~ g(c); classes ordered by their smallest member.
Pushout finset_pushout(const FinSetMap& f, const FinSetMap& g);

}  // namespace momat::cat
