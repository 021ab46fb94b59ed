#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "latmu/errors.hpp"
#include "latmu/families.hpp"
#include "latmu/structure.hpp"

using namespace latmu;
using namespace latmu::testing;

TEST_CASE("integer polynomial arithmetic and printing") {
    IntegerPolynomial p({-3, 7, -5, 1});
    CHECK(p.degree() == 3);
    CHECK(p.eval(1) == 0);
    CHECK(p.expanded_str() == "t^3-5t^2+7t-3");
    CHECK(IntegerPolynomial::from_roots({1, 1, 3}) == p);
    CHECK(factored_str({1, 3, 1}) == "(t-1)^2*(t-3)");
    CHECK(factored_str({0, 1, 0, 1}) == "t^2*(t-1)^2");
    CHECK((IntegerPolynomial({1, 1}) * IntegerPolynomial({-1, 1})).coefficients ==
          std::vector<long long>{-1, 0, 1});
    CHECK((IntegerPolynomial({1, -1}) + IntegerPolynomial({2, 1})).coefficients ==
          std::vector<long long>{3});
    CHECK(IntegerPolynomial({0, 0}).degree() == -1);
    CHECK(IntegerPolynomial().expanded_str() == "0");
}

TEST_CASE("left-modular elements") {
    // every element of a distributive lattice is left-modular
    for (const auto& L : {boolean_lattice(3), chain(4)})
        for (int x = 0; x < L.size(); ++x) CHECK(is_left_modular_element(L, x));
    // pentagon: the long-chain elements are left-modular, the short-chain
    // middle element is not
    auto N = pentagon();
    CHECK(is_left_modular_element(N, 2));
    CHECK(is_left_modular_element(N, 3));
    CHECK(!is_left_modular_element(N, 1));
    // Tamari T_3, element (1,2,2)
    auto T = tamari_lattice(3);
    CHECK(is_left_modular_element(T.lattice, T.index_of(BracketVector{{1, 2, 2}})));
}

TEST_CASE("left-modular chain search is deterministic and complete") {
    auto C = chain(3);
    auto w = find_left_modular_chain(C);
    REQUIRE(w);
    CHECK(w->elements == std::vector<int>{0, 1, 2, 3});
    auto T = tamari_lattice(3);
    auto wt = find_left_modular_chain(T.lattice);
    REQUIRE(wt);
    std::vector<std::string> labels;
    for (int x : wt->elements) labels.push_back(T.lattice.label(x));
    CHECK(labels == std::vector<std::string>{"(1,1,1)", "(1,2,1)", "(1,2,2)",
                                             "(1,2,3)"});
}

TEST_CASE("levels and the induced order") {
    auto sp = shuffle_poset(2, 1);
    auto w = is_ll(sp.lattice);
    REQUIRE(w);
    std::vector<size_t> sizes;
    for (const auto& lv : w->levels.levels) sizes.push_back(lv.size());
    CHECK(sizes == std::vector<size_t>{1, 1, 3});
    auto ord = induced_atom_order(sp.lattice, w->levels);
    for (int a = 0; a < ord.count(); ++a)
        for (int b = 0; b < ord.count(); ++b)
            CHECK(ord.below(a, b) ==
                  (w->levels.level_of[static_cast<size_t>(a)] <
                   w->levels.level_of[static_cast<size_t>(b)]));
    // B_2 levels are singletons
    auto B = boolean_lattice(2);
    auto wb = is_ll(B);
    REQUIRE(wb);
    for (const auto& lv : wb->levels.levels) CHECK(lv.size() == 1);
}

TEST_CASE("level condition: positive and negative cases") {
    for (int m = 1; m <= 4; ++m) {
        auto sp = shuffle_poset(m, 1);
        auto w = find_left_modular_chain(sp.lattice);
        REQUIRE(w);
        CHECK(level_condition_holds(sp.lattice, *w).holds);
    }
    // W_{2,2}: delete the x letters, then insert the y letters
    auto sp = shuffle_poset(2, 2);
    auto word = [&](std::vector<std::pair<char, int>> ls) {
        return sp.index_of(ShuffleWord{2, 2, std::move(ls)});
    };
    MaximalChain delta{{word({{'x', 1}, {'x', 2}}), word({{'x', 2}}), word({}),
                        word({{'y', 1}}), word({{'y', 1}, {'y', 2}})}};
    auto lc = level_condition_holds(sp.lattice, delta);
    CHECK(!lc.holds);
    CHECK(lc.witness.size() >= 2);
    // the witness really violates the condition: a <= join of later-level b's
    const auto& atoms = sp.lattice.atoms();
    int join = sp.lattice.bottom();
    for (size_t i = 1; i < lc.witness.size(); ++i)
        join = sp.lattice.join(join,
                               atoms[static_cast<size_t>(lc.witness[i])]);
    CHECK(sp.lattice.leq(atoms[static_cast<size_t>(lc.witness[0])], join));
}

TEST_CASE("semimodular lattices satisfy the level condition on every chain") {
    for (const auto& L : {boolean_lattice(3), diamond(),
                          partition_lattice(4).lattice}) {
        REQUIRE(L.is_semimodular());
        // enumerate all maximal chains
        std::vector<MaximalChain> chains;
        MaximalChain cur;
        cur.elements.push_back(L.bottom());
        auto dfs = [&](auto&& self) -> void {
            if (cur.elements.back() == L.top()) {
                chains.push_back(cur);
                return;
            }
            for (int u : L.upper_covers(cur.elements.back())) {
                cur.elements.push_back(u);
                self(self);
                cur.elements.pop_back();
            }
        };
        dfs(dfs);
        for (const auto& c : chains) CHECK(level_condition_holds(L, c).holds);
    }
}

TEST_CASE("is_ll on the example families") {
    for (int m = 1; m <= 4; ++m) CHECK(is_ll(shuffle_poset(m, 1).lattice));
    for (int m = 2; m <= 4; ++m)
        CHECK(!shuffle_poset(m, 1).lattice.is_semimodular());
    for (int n = 2; n <= 5; ++n) CHECK(is_ll(tamari_lattice(n).lattice));
    CHECK(is_ll(partition_lattice(3).lattice));
    CHECK(!is_ll(shuffle_poset(2, 2).lattice));
}

TEST_CASE("generalized rank") {
    auto C = chain(3);
    auto w = find_left_modular_chain(C);
    CHECK(generalized_rank(C, *w) == std::vector<int>{0, 1, 1, 1});
    // Lemma: every NBB base of x under the induced order has rho(x) elements
    auto sp = shuffle_poset(2, 1);
    auto ll = is_ll(sp.lattice);
    REQUIRE(ll);
    auto rho = generalized_rank(sp.lattice, ll->chain);
    auto ord = induced_atom_order(sp.lattice, ll->levels);
    for (int x = 0; x < sp.lattice.size(); ++x)
        for (const auto& b : enumerate_nbb_bases(sp.lattice, ord, x))
            CHECK(static_cast<int>(b.size()) == rho[static_cast<size_t>(x)]);
}

TEST_CASE("characteristic polynomials") {
    auto check_chi = [](const FiniteLattice& L, const std::string& factored) {
        auto w = is_ll(L);
        REQUIRE(w);
        auto f = ll_factorization_check(L, w->chain, w->levels, true);
        CHECK(f.equal);
        CHECK(factored_str(f.roots) == factored);
    };
    check_chi(shuffle_poset(1, 1).lattice, "(t-1)*(t-2)");
    check_chi(shuffle_poset(2, 1).lattice, "(t-1)^2*(t-3)");
    check_chi(shuffle_poset(3, 1).lattice, "(t-1)^3*(t-4)");
    check_chi(shuffle_poset(4, 1).lattice, "(t-1)^4*(t-5)");
    check_chi(tamari_lattice(3).lattice, "t*(t-1)^2");
    check_chi(tamari_lattice(4).lattice, "t^3*(t-1)^3");
    check_chi(tamari_lattice(5).lattice, "t^6*(t-1)^4");
    check_chi(boolean_lattice(3), "(t-1)^3");
    check_chi(partition_lattice(3).lattice, "(t-1)*(t-2)");
    CHECK_THROWS_AS(
        (void)ll_factorization_check(boolean_lattice(2),
                                     MaximalChain{{0, 1, 3}}, LevelPartition{},
                                     false),
        PreconditionNotVerified);
}

TEST_CASE("NBB sets are the one-per-level sets in LL lattices") {
    for (const auto& L : {shuffle_poset(2, 1).lattice, tamari_lattice(4).lattice,
                          boolean_lattice(3)}) {
        auto w = is_ll(L);
        REQUIRE(w);
        CHECK(nbb_level_characterization(L, w->chain));
    }
}

TEST_CASE("two atoms in one level join above an earlier-level atom") {
    // Lemma used for the level characterization, checked exhaustively
    for (const auto& L : {shuffle_poset(2, 1).lattice, tamari_lattice(4).lattice}) {
        auto w = is_ll(L);
        REQUIRE(w);
        const auto& atoms = L.atoms();
        const auto& lv = w->levels;
        for (size_t a = 0; a < atoms.size(); ++a)
            for (size_t b = a + 1; b < atoms.size(); ++b) {
                if (lv.level_of[a] != lv.level_of[b]) continue;
                const int j = L.join(atoms[a], atoms[b]);
                bool earlier = false;
                for (size_t c = 0; c < atoms.size(); ++c)
                    if (lv.level_of[c] < lv.level_of[a] && L.leq(atoms[c], j))
                        earlier = true;
                CHECK(earlier);
            }
    }
}

TEST_CASE("sublattice closure and distributivity") {
    auto B = boolean_lattice(3);
    auto sub = sublattice_generated(B, {1, 2});  // {1}, {2}
    CHECK(sub == std::vector<int>{0, 1, 2, 3});
    CHECK(is_distributive(B));
    CHECK(is_distributive(chain(4)));
    CHECK(!is_distributive(diamond()));
    CHECK(!is_distributive(pentagon()));
}

TEST_CASE("supersolvability") {
    auto P = partition_lattice(3);
    auto w = find_left_modular_chain(P.lattice);
    REQUIRE(w);
    CHECK(is_supersolvable_with(P.lattice, *w));
    // distributive lattices are supersolvable with any maximal chain
    auto B = boolean_lattice(3);
    MaximalChain c{{0, 1, 3, 7}};
    CHECK(is_supersolvable_with(B, c));
    // supersolvable chains are left-modular on the corpus
    for (int x : w->elements) CHECK(is_left_modular_element(P.lattice, x));
    // pentagon with its long chain is not supersolvable
    auto N = pentagon();
    CHECK(!is_supersolvable_with(N, MaximalChain{{0, 2, 3, 4}}));
    CHECK_THROWS_AS(
        (void)is_supersolvable_with(partition_lattice(6).lattice,
                                    MaximalChain{{0}}),
        CapacityExceeded);
}

TEST_CASE("generalized vs ordinary rank") {
    auto C = chain(3);
    auto rc = rank_comparison(C, *find_left_modular_chain(C));
    CHECK(rc.agree_where_mu_nonzero);
    CHECK(rc.disagreements.size() == 2);
    for (const auto& d : rc.disagreements) CHECK(d.mu == 0);
    auto B = boolean_lattice(3);
    auto rb = rank_comparison(B, *find_left_modular_chain(B));
    CHECK(rb.disagreements.empty());
    auto P = partition_lattice(3);
    CHECK(rank_comparison(P.lattice, *find_left_modular_chain(P.lattice))
              .agree_where_mu_nonzero);
}

TEST_CASE("six-element counterexample") {
    auto L = six_element_lattice();
    CHECK(L.is_atomic());
    CHECK(!L.is_ranked());
    auto w = find_left_modular_chain(L);
    REQUIRE(w);
    // rho equals the longest-chain length everywhere (not just mu != 0)
    CHECK(rank_comparison(L, *w).disagreements.empty());
}

TEST_CASE("circuit condition implies the level condition") {
    for (const auto& L : {shuffle_poset(2, 1).lattice, boolean_lattice(3),
                          diamond(), tamari_lattice(4).lattice}) {
        auto w = find_left_modular_chain(L);
        REQUIRE(w);
        CHECK(levelcondition_from_circuit_condition(L, *w));
    }
    // B_2 has no circuits: vacuous
    auto B = boolean_lattice(2);
    CHECK(levelcondition_from_circuit_condition(
        B, *find_left_modular_chain(B)));
}

TEST_CASE("chain validation") {
    auto B = boolean_lattice(2);
    CHECK_THROWS_AS((void)levels_from_chain(B, MaximalChain{{0, 3}}), Error);
    CHECK_THROWS_AS((void)levels_from_chain(B, MaximalChain{{0, 1}}), Error);
}
