#include "momat/cat/category.hpp"

#include <set>
#include <sstream>

#include "momat/error.hpp"

namespace momat::cat {

namespace {

std::string describe(const FiniteCategory& cat, MorphismId id) {
    if (!cat.contains(id)) return "#" + std::to_string(id.value);
    const auto& m = cat.morphism(id);
    std::string out = m.label.empty() ? "#" + std::to_string(id.value) : m.label;
    if (cat.contains(m.src) && cat.contains(m.dst))
        out += " (" + cat.object(m.src).name + " -> " + cat.object(m.dst).name + ")";
    return out;
}

std::string describe(const FiniteCategory& cat, ObjectId id) {
    return cat.contains(id) ? cat.object(id).name : "#" + std::to_string(id.value);
}

}  // namespace

ObjectId FiniteCategory::add_object(std::string name, std::optional<Payload> payload) {
    if (by_name_.contains(name))
        throw Error(ErrorCode::DuplicateName, "object '" + name + "' already in " + name_);
    ObjectId id{objects_.size() + 1};
    by_name_.emplace(name, id);
    objects_.push_back(Object{id, std::move(name), std::move(payload)});
    return id;
}

ObjectId FiniteCategory::get_object(std::string_view name) const {
    if (auto id = find_object(name)) return *id;
    throw Error(ErrorCode::NotFound, "no object '" + std::string(name) + "'");
}

std::optional<ObjectId> FiniteCategory::find_object(std::string_view name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

MorphismId FiniteCategory::add_morphism(ObjectId src, ObjectId dst, double weight, std::string label) {
    if (!contains(src) || !contains(dst))
        throw Error(ErrorCode::DanglingEndpoint,
                    "morphism endpoint " + std::to_string(src.value) + " -> " +
                        std::to_string(dst.value) + " not in " + name_);
    MorphismId id{morphisms_.size() + 1};
    morphisms_.push_back(Morphism{id, src, dst, std::move(label), weight});
    return id;
}

void FiniteCategory::update_object(std::string_view name, double amount) {
    auto id = get_object(name);
    auto& obj = objects_[id.value - 1];
    if (!obj.payload)
        throw Error(ErrorCode::PayloadKindMismatch,
                    "object '" + obj.name + "' carries no amount payload");
    obj.payload->amount = amount;
}

bool FiniteCategory::contains(ObjectId id) const noexcept {
    return id.value >= 1 && id.value <= objects_.size();
}

bool FiniteCategory::contains(MorphismId id) const noexcept {
    return id.value >= 1 && id.value <= morphisms_.size();
}

const Object& FiniteCategory::object(ObjectId id) const {
    if (!contains(id)) throw Error(ErrorCode::NotFound, "object #" + std::to_string(id.value));
    return objects_[id.value - 1];
}

const Morphism& FiniteCategory::morphism(MorphismId id) const {
    if (!contains(id)) throw Error(ErrorCode::NotFound, "morphism #" + std::to_string(id.value));
    return morphisms_[id.value - 1];
}

Path FiniteCategory::identity(ObjectId id) const {
    if (!contains(id)) throw Error(ErrorCode::NotFound, "object #" + std::to_string(id.value));
    return Path{id, id, {}};
}

Path FiniteCategory::generator(MorphismId id) const {
    const auto& m = morphism(id);
    return Path{m.src, m.dst, {id}};
}

bool FiniteCategory::is_valid(const Path& path) const {
    if (!contains(path.src) || !contains(path.dst)) return false;
    if (path.steps.empty()) return path.src == path.dst;
    ObjectId at = path.src;
    for (auto step : path.steps) {
        if (!contains(step)) return false;
        const auto& m = morphisms_[step.value - 1];
        if (m.src != at) return false;
        at = m.dst;
    }
    return at == path.dst;
}

std::optional<Path> FiniteCategory::compose(const Path& g, const Path& f) const {
    if (f.dst != g.src) return std::nullopt;
    Path out{f.src, g.dst, f.steps};
    out.steps.insert(out.steps.end(), g.steps.begin(), g.steps.end());
    return out;
}

bool FiniteCategory::equal(const Path& a, const Path& b) const {
    return is_valid(a) && is_valid(b) && a.src == b.src && a.dst == b.dst;
}

std::string LawReport::summary() const {
    if (passed()) return "pass";
    std::ostringstream out;
    out << violations.size() << " violation(s)";
    for (const auto& v : violations) out << "; " << v.law << ": " << v.detail;
    return out.str();
}

LawReport check_category_laws(const FiniteCategory& cat) {
    LawReport report;
    std::set<std::string, std::less<>> names;
    for (const auto& obj : cat.objects()) {
        if (!names.insert(obj.name).second)
            report.violations.push_back({"unique-names", "duplicate object '" + obj.name + "'", {}, {obj.id}});
    }
    for (const auto& m : cat.morphisms()) {
        if (!cat.contains(m.src) || !cat.contains(m.dst))
            report.violations.push_back({"endpoints", "dangling morphism " + describe(cat, m.id), {m.id}, {}});
    }
    if (!report.passed()) return report;

    for (const auto& m : cat.morphisms()) {
        auto f = cat.generator(m.id);
        auto left = cat.compose(cat.identity(m.dst), f);
        auto right = cat.compose(f, cat.identity(m.src));
        if (!left || !right || *left != f || *right != f)
            report.violations.push_back({"identity", "id law fails on " + describe(cat, m.id), {m.id}, {}});
    }

    // Associativity is checked on the path representation itself, so it
    // holds without appeal to the commutative quotient.
    for (const auto& f : cat.morphisms()) {
        for (const auto& g : cat.morphisms()) {
            if (g.src != f.dst) continue;
            for (const auto& h : cat.morphisms()) {
                if (h.src != g.dst) continue;
                auto pf = cat.generator(f.id), pg = cat.generator(g.id), ph = cat.generator(h.id);
                auto hg = cat.compose(ph, pg);
                auto gf = cat.compose(pg, pf);
                auto left = hg ? cat.compose(*hg, pf) : std::nullopt;
                auto right = gf ? cat.compose(ph, *gf) : std::nullopt;
                if (!left || !right || *left != *right)
                    report.violations.push_back(
                        {"associativity", "on " + describe(cat, f.id) + ", " + describe(cat, g.id) + ", " + describe(cat, h.id),
                         {f.id, g.id, h.id}, {}});
            }
        }
    }
    return report;
}

Functor::Functor(std::shared_ptr<const FiniteCategory> source,
                 std::shared_ptr<const FiniteCategory> target,
                 std::string name)
    : source_(std::move(source)), target_(std::move(target)), name_(std::move(name)) {
    if (!source_ || !target_) throw Error(ErrorCode::InvalidArgument, "functor needs source and target");
}

Functor Functor::identity(std::shared_ptr<const FiniteCategory> cat) {
    Functor f(cat, cat, "id");
    for (const auto& obj : cat->objects()) f.map_object(obj.id, obj.id);
    for (const auto& m : cat->morphisms()) f.map_morphism(m.id, m.id);
    return f;
}

void Functor::map_object(ObjectId from, ObjectId to) {
    if (!source_->contains(from) || !target_->contains(to))
        throw Error(ErrorCode::NotFound, "object mapping " + std::to_string(from.value) + " -> " +
                                             std::to_string(to.value) + " leaves its category");
    object_map_[from] = to;
}

void Functor::map_morphism(MorphismId from, Path to) {
    if (!source_->contains(from)) throw Error(ErrorCode::NotFound, "source morphism #" + std::to_string(from.value));
    morphism_map_[from] = std::move(to);
}

void Functor::map_morphism(MorphismId from, MorphismId to) { map_morphism(from, target_->generator(to)); }

ObjectId Functor::apply(ObjectId a) const {
    auto it = object_map_.find(a);
    if (it == object_map_.end()) throw Error(ErrorCode::NotFound, "functor " + name_ + " undefined on object #" + std::to_string(a.value));
    return it->second;
}

Path Functor::apply(MorphismId f) const {
    auto it = morphism_map_.find(f);
    if (it == morphism_map_.end()) throw Error(ErrorCode::NotFound, "functor " + name_ + " undefined on morphism #" + std::to_string(f.value));
    return it->second;
}

Path Functor::apply(const Path& p) const {
    Path out{apply(p.src), apply(p.dst), {}};
    for (auto step : p.steps) {
        auto image = apply(step);
        out.steps.insert(out.steps.end(), image.steps.begin(), image.steps.end());
    }
    return out;
}

LawReport check_functor_laws(const Functor& F) {
    LawReport report;
    const auto& src = F.source();
    const auto& dst = F.target();

    for (const auto& obj : src.objects()) {
        auto it = F.object_map().find(obj.id);
        if (it == F.object_map().end() || !dst.contains(it->second))
            report.violations.push_back({"totality", "object " + obj.name + " unmapped", {}, {obj.id}});
    }
    for (const auto& m : src.morphisms()) {
        if (!F.morphism_map().contains(m.id))
            report.violations.push_back({"totality", "morphism " + describe(src, m.id) + " unmapped", {m.id}, {}});
    }
    if (!report.passed()) return report;

    for (const auto& m : src.morphisms()) {
        const auto& image = F.morphism_map().at(m.id);
        if (!dst.is_valid(image)) {
            report.violations.push_back({"well-formed", "image of " + describe(src, m.id) + " is not a path", {m.id}, {}});
            continue;
        }
        if (image.src != F.apply(m.src) || image.dst != F.apply(m.dst))
            report.violations.push_back(
                {"endpoint-coherence",
                 "image of " + describe(src, m.id) + " runs " + describe(dst, image.src) + " -> " + describe(dst, image.dst) +
                     ", expected " + describe(dst, F.apply(m.src)) + " -> " + describe(dst, F.apply(m.dst)),
                 {m.id}, {}});
    }

    for (const auto& obj : src.objects()) {
        auto image = F.apply(src.identity(obj.id));
        if (image != dst.identity(F.apply(obj.id)))
            report.violations.push_back({"identity", "F(id_" + obj.name + ") != id_F(" + obj.name + ")", {}, {obj.id}});
    }

    for (const auto& f : src.morphisms()) {
        for (const auto& g : src.morphisms()) {
            if (g.src != f.dst) continue;
            auto composite = src.compose(src.generator(g.id), src.generator(f.id));
            auto Ff = F.apply(f.id);
            auto Fg = F.apply(g.id);
            auto composed = dst.compose(Fg, Ff);
            if (!composed || !dst.equal(*composed, F.apply(*composite)))
                report.violations.push_back({"composition",
                                             "F(" + describe(src, g.id) + " o " + describe(src, f.id) + ") != F(g) o F(f)",
                                             {f.id, g.id}, {}});
        }
    }
    return report;
}

NaturalTransformation::NaturalTransformation(Functor from, Functor to, std::string name)
    : from_(std::move(from)), to_(std::move(to)), name_(std::move(name)) {}

void NaturalTransformation::set_component(ObjectId a, Path component) {
    if (!from_.source().contains(a)) throw Error(ErrorCode::NotFound, "component at unknown object #" + std::to_string(a.value));
    components_[a] = std::move(component);
}

void NaturalTransformation::set_component(ObjectId a, MorphismId component) {
    set_component(a, from_.target().generator(component));
}

const Path& NaturalTransformation::component(ObjectId a) const {
    auto it = components_.find(a);
    if (it == components_.end()) throw Error(ErrorCode::NotFound, "no component at object #" + std::to_string(a.value));
    return it->second;
}

LawReport check_naturality(const NaturalTransformation& eta) {
    LawReport report;
    const auto& F = eta.from();
    const auto& G = eta.to();
    if (F.source_ptr() != G.source_ptr() || F.target_ptr() != G.target_ptr()) {
        report.violations.push_back({"parallel-functors", "F and G differ in source or target", {}, {}});
        return report;
    }
    const auto& src = F.source();
    const auto& dst = F.target();

    for (const auto& obj : src.objects()) {
        auto it = eta.components().find(obj.id);
        if (it == eta.components().end()) {
            report.violations.push_back({"totality", "no component at " + obj.name, {}, {obj.id}});
            continue;
        }
        const auto& c = it->second;
        if (!dst.is_valid(c) || c.src != F.apply(obj.id) || c.dst != G.apply(obj.id))
            report.violations.push_back({"component-type", "component at " + obj.name + " is not F(A) -> G(A)", {}, {obj.id}});
    }

    for (const auto& f : src.morphisms()) {
        if (!eta.components().contains(f.src) || !eta.components().contains(f.dst)) continue;
        const auto& eta_a = eta.component(f.src);
        const auto& eta_b = eta.component(f.dst);
        auto lhs = dst.compose(G.apply(f.id), eta_a);
        auto rhs = dst.compose(eta_b, F.apply(f.id));
        if (!lhs || !rhs || !dst.equal(*lhs, *rhs))
            report.violations.push_back({"naturality", "square fails at " + describe(src, f.id), {f.id}, {f.src, f.dst}});
    }
    return report;
}

}  // namespace momat::cat
