#pragma once

// Finite presented categories, functors and natural transformations.
//
// A category here is a directed multigraph of generator morphisms. Composite
// morphisms are generator paths and identities are the empty path at an
// object. The presentation is commutative: two paths with the same endpoints
// denote the same morphism. Weights ride along as data and never take part
// in any law.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace momat::cat {

struct ObjectId {
    std::size_t value = 0;
    friend auto operator<=>(const ObjectId&, const ObjectId&) = default;
};

struct MorphismId {
    std::size_t value = 0;
    friend auto operator<=>(const MorphismId&, const MorphismId&) = default;
};

/// Quantity carried by an object, e.g. an account balance in "EU".
struct Payload {
    std::string unit;
    double amount = 0.0;
};

struct Object {
    ObjectId id;
    std::string name;
    std::optional<Payload> payload;
};

struct Morphism {
    MorphismId id;
    ObjectId src;
    ObjectId dst;
    std::string label;
    double weight = 0.0;
};

/// A chain of generators; steps.front() is applied first.
struct Path {
    ObjectId src;
    ObjectId dst;
    std::vector<MorphismId> steps;

    bool is_identity() const noexcept { return steps.empty(); }
    friend bool operator==(const Path&, const Path&) = default;
};

class FiniteCategory {
public:
    FiniteCategory() = default;
    explicit FiniteCategory(std::string name) : name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

    /// Ids are 1-based and dense in insertion order.
    ObjectId add_object(std::string name, std::optional<Payload> payload = std::nullopt);
    ObjectId get_object(std::string_view name) const;
    std::optional<ObjectId> find_object(std::string_view name) const;
    MorphismId add_morphism(ObjectId src, ObjectId dst, double weight, std::string label = {});
    /// Replaces the payload amount of a named object; unit and everything else stay.
    void update_object(std::string_view name, double amount);

    bool contains(ObjectId id) const noexcept;
    bool contains(MorphismId id) const noexcept;
    const Object& object(ObjectId id) const;
    const Morphism& morphism(MorphismId id) const;
    std::span<const Object> objects() const noexcept { return objects_; }
    std::span<const Morphism> morphisms() const noexcept { return morphisms_; }
    std::size_t object_count() const noexcept { return objects_.size(); }
    std::size_t morphism_count() const noexcept { return morphisms_.size(); }

    Path identity(ObjectId id) const;
    Path generator(MorphismId id) const;
    bool is_valid(const Path& path) const;
    /// g ∘ f, defined iff f ends where g starts.
    std::optional<Path> compose(const Path& g, const Path& f) const;
    /// Equality of morphisms under the commutative presentation.
    bool equal(const Path& a, const Path& b) const;

private:
    std::string name_;
    std::vector<Object> objects_;
    std::vector<Morphism> morphisms_;
    std::map<std::string, ObjectId, std::less<>> by_name_;
};

struct LawViolation {
    std::string law;
    std::string detail;
    std::vector<MorphismId> morphisms;
    std::vector<ObjectId> objects;
};

struct LawReport {
    std::vector<LawViolation> violations;

    bool passed() const noexcept { return violations.empty(); }
    std::string summary() const;
};

/// Endpoint validity, unique names, identity law and associativity over all
/// composable generator triples.
LawReport check_category_laws(const FiniteCategory& cat);

class Functor {
public:
    Functor(std::shared_ptr<const FiniteCategory> source,
            std::shared_ptr<const FiniteCategory> target,
            std::string name = {});

    static Functor identity(std::shared_ptr<const FiniteCategory> cat);

    const std::string& name() const noexcept { return name_; }
    const FiniteCategory& source() const noexcept { return *source_; }
    const FiniteCategory& target() const noexcept { return *target_; }
    const std::shared_ptr<const FiniteCategory>& source_ptr() const noexcept { return source_; }
    const std::shared_ptr<const FiniteCategory>& target_ptr() const noexcept { return target_; }

    void map_object(ObjectId from, ObjectId to);
    void map_morphism(MorphismId from, Path to);
    void map_morphism(MorphismId from, MorphismId to);

    const std::map<ObjectId, ObjectId>& object_map() const noexcept { return object_map_; }
    const std::map<MorphismId, Path>& morphism_map() const noexcept { return morphism_map_; }

    ObjectId apply(ObjectId a) const;
    Path apply(MorphismId f) const;
    Path apply(const Path& p) const;

private:
    std::shared_ptr<const FiniteCategory> source_;
    std::shared_ptr<const FiniteCategory> target_;
    std::string name_;
    std::map<ObjectId, ObjectId> object_map_;
    std::map<MorphismId, Path> morphism_map_;
};

/// Totality, endpoint coherence, identity and composition preservation.
/// Checked on generators and composable generator pairs.
LawReport check_functor_laws(const Functor& f);

class NaturalTransformation {
public:
    NaturalTransformation(Functor from, Functor to, std::string name = {});

    const std::string& name() const noexcept { return name_; }
    const Functor& from() const noexcept { return from_; }
    const Functor& to() const noexcept { return to_; }

    void set_component(ObjectId a, Path component);
    void set_component(ObjectId a, MorphismId component);
    const Path& component(ObjectId a) const;
    const std::map<ObjectId, Path>& components() const noexcept { return components_; }

private:
    Functor from_;
    Functor to_;
    std::string name_;
    std::map<ObjectId, Path> components_;
};

/// Every component runs F(A) → G(A) and every generator square
/// G(f) ∘ η_A = η_B ∘ F(f) commutes.
LawReport check_naturality(const NaturalTransformation& eta);

}  // namespace momat::cat
