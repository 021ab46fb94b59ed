#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "latmu/errors.hpp"
#include "latmu/families.hpp"
#include "latmu/io.hpp"
#include "latmu/mobius.hpp"
#include "latmu/structure.hpp"

using namespace latmu;

namespace {

IntegerPartition parse_partition(const std::string& s) {
    IntegerPartition p;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (cur.empty()) throw FormatError("bad partition: '" + s + "'");
            p.parts.push_back(std::stoi(cur));
            cur.clear();
        } else if (c >= '0' && c <= '9') {
            cur += c;
        } else {
            throw FormatError("bad partition: '" + s + "'");
        }
    }
    return p;
}

struct LoadedSource {
    FiniteLattice L;
    std::function<AtomOrder(const FiniteLattice&)> canonical =
        [](const FiniteLattice& l) { return incomparability_order(l); };
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int int_arg(const std::string& s, const std::string& spec) {
    try {
        size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw FormatError("bad family specifier: '" + spec + "'");
    }
}

LoadedSource load_source(const std::string& spec) {
    const auto parts = split(spec, ':');
    const std::string& kind = parts[0];
    auto arity = [&](size_t n) {
        if (parts.size() != n + 1)
            throw FormatError("bad family specifier: '" + spec + "'");
    };
    if (kind == "pi") {
        arity(1);
        return {partition_lattice(int_arg(parts[1], spec)).lattice};
    }
    if (kind == "nc") {
        arity(1);
        auto nc = noncrossing_lattice(int_arg(parts[1], spec));
        LoadedSource src{nc.lattice};
        src.canonical = [nc](const FiniteLattice&) {
            return nc_atom_order(nc, NcVariant::Rank);
        };
        return src;
    }
    if (kind == "ncbd") {
        arity(2);
        std::vector<int> S;
        if (!parts[2].empty())
            for (const auto& t : split(parts[2], ','))
                S.push_back(int_arg(t, spec));
        auto l = ncbd_lattice(int_arg(parts[1], spec), S);
        LoadedSource src{l.lattice};
        src.canonical = [l](const FiniteLattice&) { return ncb_atom_order(l); };
        return src;
    }
    if (kind == "shuffle") {
        arity(2);
        auto p = shuffle_poset(int_arg(parts[1], spec), int_arg(parts[2], spec));
        LoadedSource src{p.lattice};
        src.canonical = [p](const FiniteLattice&) { return shuffle_atom_order(p); };
        return src;
    }
    if (kind == "dom") {
        arity(1);
        const int n = int_arg(parts[1], spec);
        if (n < 1 || n > 12)
            throw CapacityExceeded("dominance_lattice supports 1 <= n <= 12");
        IntegerPartition bottom, top;
        bottom.parts.assign(static_cast<size_t>(n), 1);
        top.parts = {n};
        auto iv = dominance_interval(bottom, top);
        LoadedSource src{iv.lattice};
        const AtomOrder ord = iv.atom_order;
        src.canonical = [ord](const FiniteLattice&) { return ord; };
        return src;
    }
    if (kind == "tamari") {
        arity(1);
        return {tamari_lattice(int_arg(parts[1], spec)).lattice};
    }
    if (kind == "bool") {
        arity(1);
        return {boolean_lattice(int_arg(parts[1], spec))};
    }
    if (kind == "chain") {
        arity(1);
        return {chain(int_arg(parts[1], spec))};
    }
    return {read_lattice_file(spec)};
}

MaximalChain any_maximal_chain(const FiniteLattice& L) {
    MaximalChain c;
    int x = L.bottom();
    c.elements.push_back(x);
    while (x != L.top()) {
        x = L.upper_covers(x).front();
        c.elements.push_back(x);
    }
    return c;
}

std::string label_list(const FiniteLattice& L, const std::vector<int>& xs) {
    if (xs.empty()) return "-";
    std::string s;
    for (int x : xs) {
        if (!s.empty()) s += ",";
        s += L.label(x);
    }
    return s;
}

int run(int argc, char** argv) {
    CLI::App app{"Finite-lattice Mobius computation toolkit"};
    app.require_subcommand(1);

    std::string src_spec, out_path, order_path, method = "recursive";
    std::string beta_str, lambda_str;
    bool canonical = false, verify = false;
    int element = -1;
    long long budget = 100000;

    auto* build = app.add_subcommand("build", "write a family as a lattice file");
    build->add_option("source", src_spec)->required();
    build->add_option("--out", out_path)->required();

    auto* mob = app.add_subcommand("mobius", "Mobius values, one method");
    mob->add_option("source", src_spec)->required();
    mob->add_option("--method", method)
        ->check(CLI::IsMember({"recursive", "crosscut", "nbb", "coreless", "nbc"}));
    mob->add_option("--order", order_path);
    mob->add_flag("--canonical", canonical);
    mob->add_flag("--verify", verify);

    auto* bas = app.add_subcommand("bases", "NBB bases of one element");
    bas->add_option("source", src_spec)->required();
    bas->add_option("--element", element)->required();
    bas->add_option("--order", order_path);
    bas->add_flag("--canonical", canonical);

    auto* chp = app.add_subcommand("charpoly", "characteristic polynomial");
    chp->add_option("source", src_spec)->required();
    std::string chain_opt = "auto";
    chp->add_option("--chain", chain_opt);

    auto* chk = app.add_subcommand("check", "structural report");
    chk->add_option("source", src_spec)->required();
    bool c_all = false, c_lm = false, c_level = false, c_ll = false;
    bool c_semi = false, c_geom = false, c_ss = false;
    chk->add_flag("--all", c_all);
    chk->add_flag("--left-modular", c_lm);
    chk->add_flag("--level", c_level);
    chk->add_flag("--ll", c_ll);
    chk->add_flag("--semimodular", c_semi);
    chk->add_flag("--geometric", c_geom);
    chk->add_flag("--supersolvable", c_ss);

    auto* pf = app.add_subcommand("perfect-order", "search for a perfect atom order");
    pf->add_option("source", src_spec)->required();
    pf->add_option("--budget", budget);

    auto* dm = app.add_subcommand("dominance-mu", "closed-form dominance Mobius value");
    dm->add_option("beta", beta_str)->required();
    dm->add_option("lambda", lambda_str)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (dm->parsed()) {
        std::cout << dominance_mobius(parse_partition(beta_str),
                                      parse_partition(lambda_str))
                  << "\n";
        return 0;
    }

    LoadedSource src = load_source(src_spec);
    const FiniteLattice& L = src.L;
    auto pick_order = [&]() {
        if (!order_path.empty()) return read_atom_order_file(L, order_path);
        return src.canonical(L);
    };

    if (build->parsed()) {
        std::ofstream out(out_path);
        if (!out) throw FormatError("cannot open '" + out_path + "'");
        out << write_lattice(L);
        return 0;
    }

    if (mob->parsed()) {
        MobiusVector mu;
        if (method == "recursive")
            mu = mobius_recursive(L);
        else if (method == "crosscut")
            mu = mobius_crosscut(L);
        else if (method == "nbb")
            mu = mobius_nbb(L, pick_order());
        else if (method == "coreless")
            mu = mobius_coreless(L, selector_from_order(L, pick_order()));
        else
            mu = mobius_nbc_generalized(L, pick_order());
        if (verify && !(mu == mobius_recursive(L))) {
            std::cerr << "verification failed: method '" << method
                      << "' disagrees with the recursive oracle\n";
            return 3;
        }
        std::cout << mobius_tsv(L, mu);
        return 0;
    }

    if (bas->parsed()) {
        if (element < 0 || element >= L.size())
            throw FormatError("element index out of range");
        const AtomOrder ord = pick_order();
        const auto& atoms = L.atoms();
        for (const auto& base : enumerate_nbb_bases(L, ord, element)) {
            std::vector<int> ids;
            for (int p : base) ids.push_back(atoms[static_cast<size_t>(p)]);
            std::cout << label_list(L, ids) << "\n";
        }
        return 0;
    }

    if (chp->parsed()) {
        if (const auto w = is_ll(L)) {
            const auto f = ll_factorization_check(L, w->chain, w->levels, true);
            std::cout << (f.equal ? factored_str(f.roots) : f.chi.expanded_str())
                      << "\n";
        } else {
            const auto c = any_maximal_chain(L);
            std::cout << characteristic_polynomial(L, c).expanded_str()
                      << "\t# extended usage: lattice is not LL\n";
        }
        return 0;
    }

    if (chk->parsed()) {
        std::vector<ReportRow> rows;
        const auto lm_chain = find_left_modular_chain(L);
        const auto chain_or_any = lm_chain ? *lm_chain : any_maximal_chain(L);
        if (c_all || c_lm)
            rows.push_back({"left_modular_chain", lm_chain.has_value(),
                            lm_chain ? label_list(L, lm_chain->elements) : "-"});
        if (c_all || c_level) {
            const auto lc = level_condition_holds(L, chain_or_any);
            std::vector<int> ids;
            const auto& atoms = L.atoms();
            for (int p : lc.witness) ids.push_back(atoms[static_cast<size_t>(p)]);
            rows.push_back({"level_condition", lc.holds, label_list(L, ids)});
        }
        if (c_all || c_ll) {
            const auto w = is_ll(L);
            rows.push_back({"ll", w.has_value(),
                            w ? label_list(L, w->chain.elements) : "-"});
        }
        if (c_all || c_semi) rows.push_back({"semimodular", L.is_semimodular(), "-"});
        if (c_all || c_geom) rows.push_back({"geometric", L.is_geometric(), "-"});
        if (c_all || c_ss)
            rows.push_back({"supersolvable", is_supersolvable_with(L, chain_or_any),
                            label_list(L, chain_or_any.elements)});
        if (rows.empty()) throw FormatError("check requires at least one property flag");
        std::cout << report_tsv(rows);
        return 0;
    }

    if (pf->parsed()) {
        const auto res = search_perfect_order(L, budget);
        switch (res.status) {
            case SearchStatus::Found:
                std::cout << "found\t" << res.candidates_tried << "\n"
                          << write_atom_order(*res.order);
                break;
            case SearchStatus::ProvedNone:
                std::cout << "proved-none\t" << res.candidates_tried << "\n";
                break;
            case SearchStatus::BudgetExhausted:
                std::cout << "budget-exhausted\t" << res.candidates_tried << "\n";
                break;
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
