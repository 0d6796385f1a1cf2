#include <doctest.h>

#include <set>

#include "momat/cat/finset.hpp"
#include "momat/error.hpp"
#include "universal.hpp"

using namespace momat;
using namespace momat::cat;
using momat::testing::for_each_map;
using momat::testing::Images;
using momat::testing::labeled;

TEST_CASE("FinSetMap must be total") {
    FinSet a{"a", "b"}, c{"t"};
    CHECK_THROWS_AS(FinSetMap(a, c, {0}), Error);
    CHECK_THROWS_AS(FinSetMap(a, c, {0, 1}), Error);
    CHECK_THROWS_AS(FinSetMap::from_pairs(a, c, {{"a", "t"}}), Error);
    CHECK_THROWS_AS(FinSet({"a", "a"}), Error);
}

TEST_CASE("pullback of the two-valued classifier example") {
    FinSet A{"a", "b"}, B{"x", "y", "z"}, C{"t", "f"};
    auto f = FinSetMap::from_pairs(A, C, {{"a", "t"}, {"b", "f"}});
    auto g = FinSetMap::from_pairs(B, C, {{"x", "t"}, {"y", "t"}, {"z", "f"}});
    auto pb = finset_pullback(f, g);
    CHECK(pb.apex == FinSet{"(a,x)", "(a,y)", "(b,z)"});
    CHECK(compose(f, pb.proj_a) == compose(g, pb.proj_b));
}

TEST_CASE("pullback edge cases") {
    FinSet A{"a", "b"}, C{"t", "f"};
    auto f = FinSetMap::from_pairs(A, C, {{"a", "t"}, {"b", "f"}});
    auto empty = FinSetMap(FinSet{}, C, {});
    CHECK(finset_pullback(f, empty).apex.empty());

    auto id = FinSetMap::identity(C);
    auto diag = finset_pullback(id, id);
    CHECK(diag.apex == FinSet{"(t,t)", "(f,f)"});

    CHECK_THROWS_AS(finset_pullback(f, FinSetMap::identity(A)), Error);
}

TEST_CASE("pushout gluing one point") {
    FinSet C{"t"}, A{"a", "b"}, B{"x", "y"};
    auto f = FinSetMap::from_pairs(C, A, {{"t", "a"}});
    auto g = FinSetMap::from_pairs(C, B, {{"t", "x"}});
    auto po = finset_pushout(f, g);
    CHECK(po.apex == FinSet{"[a=x]", "b", "y"});
    CHECK(po.classes.size() == 3);
    CHECK(compose(po.inj_a, f) == compose(po.inj_b, g));
}

TEST_CASE("pushout edge cases") {
    FinSet A{"a", "b"}, B{"x", "y", "z"};
    auto po = finset_pushout(FinSetMap(FinSet{}, A, {}), FinSetMap(FinSet{}, B, {}));
    CHECK(po.apex.size() == A.size() + B.size());

    FinSet C{"p", "q", "r"};
    auto id = FinSetMap::identity(C);
    auto same = finset_pushout(id, id);
    CHECK(same.apex.size() == C.size());

    CHECK_THROWS_AS(finset_pushout(FinSetMap::identity(A), FinSetMap::identity(B)), Error);
}

TEST_CASE("shared labels in A and B stay distinct in the pushout") {
    FinSet A{"a", "b"};
    auto po = finset_pushout(FinSetMap(FinSet{}, A, {}), FinSetMap(FinSet{}, A, {}));
    CHECK(po.apex.size() == 4);
}

namespace {

// Independent pushout class count: repeated relaxation of a label array.
std::size_t class_count(const FinSetMap& f, const FinSetMap& g) {
    const std::size_t na = f.codomain().size(), n = na + g.codomain().size();
    std::vector<std::size_t> tag(n);
    for (std::size_t i = 0; i < n; ++i) tag[i] = i;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t c = 0; c < f.domain().size(); ++c) {
            auto& x = tag[f(c)];
            auto& y = tag[na + g(c)];
            if (x != y) {
                auto lo = std::min(x, y), hi = std::max(x, y);
                for (auto& t : tag)
                    if (t == hi) t = lo;
                changed = true;
            }
        }
    }
    return std::set<std::size_t>(tag.begin(), tag.end()).size();
}

}  // namespace

TEST_CASE("pullback universal property, exhaustively on small sets") {
    std::size_t fixtures = 0;
    for (std::size_t na = 0; na <= 3; ++na)
        for (std::size_t nb = 0; nb <= 3; ++nb)
            for (std::size_t nc = 1; nc <= 2; ++nc) {
                auto A = labeled(na, 'a'), B = labeled(nb, 'b'), C = labeled(nc, 'c');
                for_each_map(na, nc, [&](const Images& fi) {
                    for_each_map(nb, nc, [&](const Images& gi) {
                        FinSetMap f(A, C, fi), g(B, C, gi);
                        auto pb = finset_pullback(f, g);
                        std::size_t expected = 0;
                        for (auto x : fi)
                            for (auto y : gi) expected += x == y;
                        CHECK(pb.apex.size() == expected);
                        CHECK(compose(f, pb.proj_a) == compose(g, pb.proj_b));
                        // Every cone from a set D of size <= 2 factors uniquely.
                        for (std::size_t nd = 0; nd <= 2; ++nd)
                            for_each_map(nd, na, [&](const Images& da) {
                                for_each_map(nd, nb, [&](const Images& db) {
                                    bool cone = true;
                                    for (std::size_t k = 0; k < nd; ++k) cone = cone && fi[da[k]] == gi[db[k]];
                                    CHECK(testing::pullback_mediators(pb, da, db) == (cone ? 1u : 0u));
                                });
                            });
                        ++fixtures;
                    });
                });
            }
    CHECK(fixtures > 100);
}

TEST_CASE("pushout universal property, exhaustively on small sets") {
    std::size_t fixtures = 0;
    for (std::size_t nc = 0; nc <= 2; ++nc)
        for (std::size_t na = 1; na <= 3; ++na)
            for (std::size_t nb = 1; nb <= 2; ++nb) {
                auto A = labeled(na, 'a'), B = labeled(nb, 'b'), C = labeled(nc, 'c');
                for_each_map(nc, na, [&](const Images& fi) {
                    for_each_map(nc, nb, [&](const Images& gi) {
                        FinSetMap f(C, A, fi), g(C, B, gi);
                        auto po = finset_pushout(f, g);
                        CHECK(po.apex.size() == class_count(f, g));
                        CHECK(compose(po.inj_a, f) == compose(po.inj_b, g));
                        for (std::size_t nq = 1; nq <= 2; ++nq)
                            for_each_map(na, nq, [&](const Images& qa) {
                                for_each_map(nb, nq, [&](const Images& qb) {
                                    bool cocone = true;
                                    for (std::size_t k = 0; k < nc; ++k) cocone = cocone && qa[fi[k]] == qb[gi[k]];
                                    CHECK(testing::pushout_mediators(po, nq, qa, qb) == (cocone ? 1u : 0u));
                                });
                            });
                        ++fixtures;
                    });
                });
            }
    CHECK(fixtures > 50);
}
