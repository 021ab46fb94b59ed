#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "latmu/errors.hpp"
#include "latmu/families.hpp"
#include "latmu/mobius.hpp"

using namespace latmu;

namespace {

long long catalan(int n) {
    long long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

long long binom(int n, int k) {
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

}  // namespace

TEST_CASE("partition lattice: sizes, labels, top Mobius value") {
    const long long bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
    long long factorial = 1;
    for (int n = 2; n <= 7; ++n) {
        auto P = partition_lattice(n);
        CHECK(P.lattice.size() == bell[n]);
        factorial *= (n - 1);
        CHECK(mobius_recursive(P.lattice)[P.lattice.top()] ==
              (n % 2 ? factorial : -factorial));
    }
    auto P = partition_lattice(4);
    CHECK(P.lattice.label(P.lattice.bottom()) == "1/2/3/4");
    CHECK(P.lattice.label(P.lattice.top()) == "1234");
    CHECK(P.elements[static_cast<size_t>(P.lattice.atoms()[0])].blocks.size() == 3);
}

TEST_CASE("non-crossing lattice: Catalan sizes and top Mobius values") {
    for (int n = 2; n <= 7; ++n) {
        auto nc = noncrossing_lattice(n);
        CHECK(nc.lattice.size() == catalan(n));
        const long long want = (n % 2 ? 1 : -1) * catalan(n - 1);
        CHECK(mobius_recursive(nc.lattice)[nc.lattice.top()] == want);
        // both canonical atom orders reproduce the value by NBB
        for (auto v : {NcVariant::Rank, NcVariant::Interval}) {
            auto ord = nc_atom_order(nc, v);
            CHECK(mobius_nbb(nc.lattice, ord)[nc.lattice.top()] == want);
        }
    }
}

TEST_CASE("non-crossing atoms carry their defining pair") {
    auto nc = noncrossing_lattice(4);
    CHECK(nc.atom_pairs.size() == nc.lattice.atoms().size());
    for (size_t i = 0; i < nc.atom_pairs.size(); ++i) {
        auto [a, b] = nc.atom_pairs[i];
        CHECK(a < b);
        const auto& blocks =
            nc.elements[static_cast<size_t>(nc.lattice.atoms()[i])].blocks;
        CHECK(std::count_if(blocks.begin(), blocks.end(),
                            [](const auto& blk) { return blk.size() == 2; }) == 1);
    }
}

TEST_CASE("signed non-crossing lattices: Reiner values") {
    for (int n = 2; n <= 3; ++n) {
        for (int smask = 0; smask < (1 << n); ++smask) {
            std::vector<int> S;
            for (int i = 0; i < n; ++i)
                if (smask >> i & 1) S.push_back(i + 1);
            auto L = ncbd_lattice(n, S);
            const long long want =
                (n % 2 ? -1 : 1) * catalan(n - 1) *
                (2 * n - 1 - static_cast<long long>(S.size()));
            CHECK(mobius_recursive(L.lattice)[L.lattice.top()] == want);
            auto ord = ncb_atom_order(L);
            CHECK(mobius_nbb(L.lattice, ord)[L.lattice.top()] == want);
            auto bases = enumerate_nbb_bases(L.lattice, ord, L.lattice.top());
            CHECK(static_cast<long long>(bases.size()) == std::abs(want));
            for (const auto& b : bases) CHECK(static_cast<int>(b.size()) == n);
        }
    }
}

TEST_CASE("ncbd ground set and zero blocks") {
    auto L = ncbd_lattice(2, {1});
    // zero block {2,-2} allowed, {1,-1} forbidden
    for (const auto& e : L.elements)
        for (const auto& blk : e.blocks)
            if (blk.size() == 2 && blk[0] == -blk[1])
                CHECK(std::abs(blk[0]) == 2);
    CHECK_THROWS_AS((void)ncbd_lattice(2, {3}), Error);
}

TEST_CASE("shuffle words: order, crossing, join") {
    // u = x1 y1 y2 x2, v = y3 x1 x2 x3 inside W_{3,3}
    ShuffleWord u{3, 3, {{'x', 1}, {'y', 1}, {'y', 2}, {'x', 2}}};
    ShuffleWord v{3, 3, {{'y', 3}, {'x', 1}, {'x', 2}, {'x', 3}}};
    CHECK(u.str() == "aABb");
    CHECK(crossed_letters(u, v) == std::vector<int>{1});
    auto w = shuffle_join(u, v);
    CHECK(w.str() == "ABCb");  // y1 y2 y3 x2
    CHECK(shuffle_leq(u, w));
    CHECK(shuffle_leq(v, w));
    CHECK(!shuffle_leq(w, u));
}

TEST_CASE("shuffle poset: size, Mobius, join agrees with the formula") {
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; m + n <= 5; ++n) {
            auto sp = shuffle_poset(m, n);
            const long long want =
                ((m + n) % 2 ? -1 : 1) * binom(m + n, m);
            CHECK(mobius_recursive(sp.lattice)[sp.lattice.top()] == want);
            // constructive join equals the lattice join everywhere
            for (int x = 0; x < sp.lattice.size(); ++x)
                for (int y = 0; y < sp.lattice.size(); ++y) {
                    auto j = shuffle_join(sp.elements[static_cast<size_t>(x)],
                                          sp.elements[static_cast<size_t>(y)]);
                    CHECK(sp.index_of(j) == sp.lattice.join(x, y));
                }
        }
    auto sp = shuffle_poset(2, 1);
    CHECK(sp.lattice.label(sp.lattice.bottom()) == "ab");
    CHECK(sp.lattice.label(sp.lattice.top()) == "A");
    // NBB under the canonical order
    auto ord = shuffle_atom_order(sp);
    CHECK(mobius_nbb(sp.lattice, ord)[sp.lattice.top()] == -3);
}

TEST_CASE("dominance order basics") {
    CHECK(dominates(IntegerPartition{{4, 2}}, IntegerPartition{{3, 1, 1, 1}}));
    CHECK(!dominates(IntegerPartition{{3, 3}}, IntegerPartition{{4, 1, 1}}));
    CHECK_THROWS_AS((void)dominates(IntegerPartition{{2}}, IntegerPartition{{3}}),
                    NotSameN);
    CHECK(composition_join(Composition{{1, 3}}, Composition{{2, 2}}).parts ==
          std::vector<int>{2, 2});
    CHECK(partition_reflection(Composition{{1, 3}}).parts ==
          std::vector<int>{2, 2});
    CHECK(partition_reflection(Composition{{3, 1}}).parts ==
          std::vector<int>{3, 1});
    CHECK(partition_reflection(Composition{{1, 1, 4}}).parts ==
          std::vector<int>{2, 2, 2});
}

TEST_CASE("dominance join matches the lattice join") {
    for (int n : {5, 6, 7}) {
        auto D = dominance_lattice(n);
        for (int x = 0; x < D.lattice.size(); ++x)
            for (int y = 0; y < D.lattice.size(); ++y) {
                auto j = dominance_join(D.elements[static_cast<size_t>(x)],
                                        D.elements[static_cast<size_t>(y)]);
                CHECK(D.index_of(j) == D.lattice.join(x, y));
            }
    }
}

TEST_CASE("dominance atoms: moves, walls, critical intervals") {
    // beta = (4,4,2,1): wall [1,2], moves from the strict descents
    auto atoms = dominance_atoms(IntegerPartition{{4, 4, 2, 1}});
    REQUIRE(atoms.size() == 2);
    CHECK(atoms[0].kind == DominanceAtomInfo::Kind::Wall);
    CHECK(atoms[0].from_row == 2);
    CHECK(atoms[0].to_row == 1);
    CHECK(atoms[0].ci_lo == 1);
    CHECK(atoms[0].ci_hi == 1);
    CHECK(atoms[0].alpha.parts == std::vector<int>{5, 3, 2, 1});
    CHECK(atoms[1].kind == DominanceAtomInfo::Kind::Move);
    CHECK(atoms[1].from_row == 4);
    CHECK(atoms[1].to_row == 3);
    CHECK(atoms[1].alpha.parts == std::vector<int>{4, 4, 3});
    // every atom is an upper cover in the lattice
    auto D = dominance_lattice(11);
    const int b = D.index_of(IntegerPartition{{4, 4, 2, 1}});
    std::vector<int> covers = D.lattice.upper_covers(b);
    std::vector<int> from_atoms;
    for (const auto& a : dominance_atoms(IntegerPartition{{4, 4, 2, 1}}))
        from_atoms.push_back(D.index_of(a.alpha));
    std::sort(covers.begin(), covers.end());
    std::sort(from_atoms.begin(), from_atoms.end());
    CHECK(covers == from_atoms);
}

TEST_CASE("dominance closed-form Mobius equals the recursive value") {
    for (int n = 3; n <= 7; ++n) {
        auto D = dominance_lattice(n);
        for (int x = 0; x < D.lattice.size(); ++x) {
            auto iv = D.lattice.interval(x, D.lattice.top());
            auto mu = mobius_recursive(iv.lattice);
            for (int y = 0; y < iv.lattice.size(); ++y)
                CHECK(dominance_mobius(
                          D.elements[static_cast<size_t>(x)],
                          D.elements[static_cast<size_t>(
                              iv.to_parent[static_cast<size_t>(y)])]) == mu[y]);
        }
    }
    CHECK_THROWS_AS((void)dominance_mobius(IntegerPartition{{3, 1}},
                                           IntegerPartition{{2, 2}}),
                    NotComparable);
}

TEST_CASE("dominance interval carries a consistent atom order") {
    IntegerPartition beta{{2, 2, 1, 1}}, lambda{{6}};
    auto iv = dominance_interval(beta, lambda);
    CHECK(iv.elements[static_cast<size_t>(iv.lattice.bottom())] == beta);
    CHECK(iv.elements[static_cast<size_t>(iv.lattice.top())] == lambda);
    CHECK(mobius_nbb(iv.lattice, iv.atom_order)[iv.lattice.top()] ==
          dominance_mobius(beta, lambda));
}

TEST_CASE("bracket vectors: validity, join, meet") {
    CHECK(is_valid_bracket_vector({1, 1, 1}));
    CHECK(is_valid_bracket_vector({1, 2, 3}));
    CHECK(is_valid_bracket_vector({1, 2, 2}));
    CHECK(is_valid_bracket_vector({1, 2, 2, 2}));
    CHECK(!is_valid_bracket_vector({1, 1, 2, 1}));  // v_2 = 1 inside [v_3, 2]
    CHECK(!is_valid_bracket_vector({1, 2, 1, 3}));  // v_3 = 1 inside [v_4, 3]
    CHECK(!is_valid_bracket_vector({2, 1}));        // v_1 must be 1
    CHECK(!is_valid_bracket_vector({1, 3}));        // v_2 <= 2
    CHECK(tamari_join(BracketVector{{1, 1, 3}}, BracketVector{{1, 2, 1}}).v ==
          std::vector<int>{1, 2, 3});
    CHECK(tamari_meet(BracketVector{{1, 1, 3}}, BracketVector{{1, 2, 1}}).v ==
          std::vector<int>{1, 1, 1});
}

TEST_CASE("Tamari lattice: Catalan size, formula join/meet, labels") {
    for (int n = 2; n <= 6; ++n) {
        auto T = tamari_lattice(n);
        CHECK(T.lattice.size() == catalan(n));
        for (int x = 0; x < T.lattice.size(); ++x)
            for (int y = 0; y < T.lattice.size(); ++y) {
                CHECK(T.index_of(tamari_join(T.elements[static_cast<size_t>(x)],
                                             T.elements[static_cast<size_t>(y)])) ==
                      T.lattice.join(x, y));
                CHECK(T.index_of(tamari_meet(T.elements[static_cast<size_t>(x)],
                                             T.elements[static_cast<size_t>(y)])) ==
                      T.lattice.meet(x, y));
            }
    }
    auto T = tamari_lattice(3);
    CHECK(T.lattice.label(T.lattice.bottom()) == "(1,1,1)");
    CHECK(T.lattice.label(T.lattice.top()) == "(1,2,3)");
}

TEST_CASE("parenthesizations and bracket vectors correspond") {
    for (int n = 1; n <= 5; ++n) {
        auto ps = all_parenthesizations(n);
        CHECK(static_cast<long long>(ps.size()) == catalan(n));
        auto T = tamari_lattice(n);
        std::vector<int> seen(static_cast<size_t>(T.lattice.size()), 0);
        for (const auto& p : ps) {
            auto bv = bracket_vector_of(p);
            ++seen[static_cast<size_t>(T.index_of(bv))];
            CHECK(parenthesization_of(bv).str() == p.str());
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    }
    // worked instances
    auto ps = all_parenthesizations(3);
    for (const auto& p : ps) {
        if (p.str() == "(((x1x2)x3)x4)")
            CHECK(bracket_vector_of(p).v == std::vector<int>{1, 1, 1});
        if (p.str() == "(x1(x2(x3x4)))")
            CHECK(bracket_vector_of(p).v == std::vector<int>{1, 2, 3});
        if (p.str() == "((x1(x2x3))x4)")
            CHECK(bracket_vector_of(p).v == std::vector<int>{1, 2, 1});
    }
}

TEST_CASE("rotations give exactly the upper covers") {
    auto T = tamari_lattice(4);
    for (const auto& p : all_parenthesizations(4)) {
        auto got = rotation_covers(p);
        std::vector<int> g, w;
        for (const auto& b : got) g.push_back(T.index_of(b));
        for (int c : T.lattice.upper_covers(T.index_of(bracket_vector_of(p))))
            w.push_back(c);
        std::sort(g.begin(), g.end());
        std::sort(w.begin(), w.end());
        CHECK(g == w);
    }
}

TEST_CASE("bracket vectors encode trees on [n+1]") {
    auto edges = tamari_tree_of(BracketVector{{1, 2, 1}});
    CHECK(edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {1, 4}});
    CHECK_THROWS_AS((void)tamari_tree_of(BracketVector{{2, 1}}),
                    InvalidBracketVector);
}

TEST_CASE("boolean and chain fixtures") {
    auto B = boolean_lattice(3);
    CHECK(B.size() == 8);
    CHECK(B.label(B.bottom()) == "{}");
    CHECK(B.label(B.top()) == "{1,2,3}");
    CHECK(mobius_recursive(B)[B.top()] == -1);
    auto C = chain(5);
    CHECK(C.size() == 6);
    auto mu = mobius_recursive(C);
    CHECK(mu[0] == 1);
    CHECK(mu[1] == -1);
    CHECK(mu[2] == 0);
}
