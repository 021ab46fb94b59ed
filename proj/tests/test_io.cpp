#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "latmu/errors.hpp"
#include "latmu/families.hpp"
#include "latmu/io.hpp"

using namespace latmu;
using namespace latmu::testing;

TEST_CASE("lattice text round trip") {
    for (const auto& L : {fig_lattice(), boolean_lattice(3),
                          noncrossing_lattice(4).lattice}) {
        const std::string text = write_lattice(L);
        auto L2 = read_lattice(text);
        CHECK(write_lattice(L2) == text);
        REQUIRE(L2.size() == L.size());
        for (int x = 0; x < L.size(); ++x) {
            CHECK(L2.label(x) == L.label(x));
            for (int y = 0; y < L.size(); ++y) CHECK(L2.leq(x, y) == L.leq(x, y));
        }
    }
}

TEST_CASE("lattice parser: comments, blanks, implied covers") {
    auto L = read_lattice(
        "# a square\n"
        "lattice 4\n"
        "\n"
        "labels bot\ta\tb\ttop\n"
        "cover 0 1  # atom\n"
        "cover 0 2\n"
        "cover 1 3\n"
        "cover 2 3\n"
        "cover 0 3\n");  // transitively implied; canonicalized away
    CHECK(L.size() == 4);
    CHECK(L.label(0) == "bot");
    CHECK(L.covers().size() == 4);
}

TEST_CASE("lattice parser failures") {
    CHECK_THROWS_AS((void)read_lattice("covers 1\n"), FormatError);
    CHECK_THROWS_AS((void)read_lattice("lattice x\n"), FormatError);
    CHECK_THROWS_AS((void)read_lattice("lattice 2\ncover 0 5\n"), FormatError);
    CHECK_THROWS_AS((void)read_lattice("lattice 2\nlabels only_one\n"),
                    FormatError);
    CHECK_THROWS_AS((void)read_lattice("lattice 2\nfrobnicate 0 1\n"),
                    FormatError);
    CHECK_THROWS_AS((void)read_lattice_file("/no/such/file"), FormatError);
}

TEST_CASE("atom order round trip with transitive closure") {
    auto L = fig_lattice();
    auto ord = read_atom_order(L, "rel 1 0  # b below a\nrel 0 2\n");
    CHECK(ord.below(1, 0));
    CHECK(ord.below(0, 2));
    CHECK(ord.below(1, 2));  // closed transitively
    auto ord2 = read_atom_order(L, write_atom_order(ord));
    CHECK(ord2.strictly_below == ord.strictly_below);
}

TEST_CASE("atom order failures") {
    auto L = fig_lattice();
    CHECK_THROWS_AS((void)read_atom_order(L, "rel 0 9\n"), FormatError);
    CHECK_THROWS_AS((void)read_atom_order(L, "rel 0\n"), FormatError);
    CHECK_THROWS_AS((void)read_atom_order(L, "rel 0 1\nrel 1 0\n"),
                    CycleDetected);
}

TEST_CASE("mobius TSV") {
    auto L = boolean_lattice(2);
    CHECK(mobius_tsv(L, mobius_recursive(L)) ==
          "0\t{}\t1\n"
          "1\t{1}\t-1\n"
          "2\t{2}\t-1\n"
          "3\t{1,2}\t1\n");
}

TEST_CASE("report TSV") {
    CHECK(report_tsv({{"ll", true, "0,a,1"}, {"semimodular", false, ""}}) ==
          "ll\ttrue\t0,a,1\n"
          "semimodular\tfalse\t-\n");
}
