#include "latmu/io.hpp"

#include <fstream>
#include <sstream>

#include "latmu/errors.hpp"

namespace latmu {

namespace {

// Next non-blank line with `#` comments stripped, split on whitespace;
// `labels` lines keep a tab-separated payload instead.
bool next_fields(std::istream& in, std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in, line)) {
        if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
        fields.clear();
        std::istringstream ss(line);
        std::string kw;
        ss >> kw;
        if (kw.empty()) continue;
        fields.push_back(kw);
        if (kw == "labels") {
            std::string rest;
            std::getline(ss, rest);
            if (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t'))
                rest.erase(0, 1);
            std::string item;
            std::istringstream rs(rest);
            while (std::getline(rs, item, '\t')) fields.push_back(item);
            return true;
        }
        std::string tok;
        while (ss >> tok) fields.push_back(tok);
        return true;
    }
    return false;
}

int parse_index(const std::string& s, int size, const char* what) {
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw FormatError(std::string("bad ") + what + ": '" + s + "'");
    }
    if (pos != s.size() || v < 0 || v >= size)
        throw FormatError(std::string(what) + " out of range: '" + s + "'");
    return v;
}

}  // namespace

FiniteLattice read_lattice(std::istream& in) {
    std::vector<std::string> f;
    if (!next_fields(in, f) || f.size() != 2 || f[0] != "lattice")
        throw FormatError("expected header line 'lattice <size>'");
    CoverList cl;
    try {
        cl.size = std::stoi(f[1]);
    } catch (const std::exception&) {
        throw FormatError("bad size: '" + f[1] + "'");
    }
    if (cl.size < 1) throw FormatError("size must be positive");
    // peek the next meaningful line for a labels directive
    while (next_fields(in, f)) {
        if (f[0] == "labels") {
            if (static_cast<int>(f.size()) - 1 != cl.size)
                throw FormatError("labels count does not match size");
            cl.labels.assign(f.begin() + 1, f.end());
        } else if (f[0] == "cover") {
            if (f.size() != 3) throw FormatError("expected 'cover <lo> <up>'");
            cl.covers.emplace_back(parse_index(f[1], cl.size, "cover index"),
                                   parse_index(f[2], cl.size, "cover index"));
        } else {
            throw FormatError("unknown directive: '" + f[0] + "'");
        }
    }
    return FiniteLattice::from_covers(cl);
}

FiniteLattice read_lattice(const std::string& text) {
    std::istringstream ss(text);
    return read_lattice(ss);
}

FiniteLattice read_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    return read_lattice(in);
}

std::string write_lattice(const FiniteLattice& L) {
    std::ostringstream out;
    out << "lattice " << L.size() << "\n";
    out << "labels";
    for (int x = 0; x < L.size(); ++x) out << (x ? "\t" : " ") << L.label(x);
    out << "\n";
    for (const auto& [lo, up] : L.covers())
        out << "cover " << lo << " " << up << "\n";
    return out.str();
}

AtomOrder read_atom_order(const FiniteLattice& L, std::istream& in) {
    AtomOrder ord = AtomOrder::empty_on(L);
    std::vector<std::string> f;
    while (next_fields(in, f)) {
        if (f[0] != "rel" || f.size() != 3)
            throw FormatError("expected 'rel <a> <b>'");
        const int a = parse_index(f[1], ord.count(), "atom index");
        const int b = parse_index(f[2], ord.count(), "atom index");
        ord.set_below(a, b);
    }
    ord.close_transitively();
    ord.validate();
    return ord;
}

AtomOrder read_atom_order(const FiniteLattice& L, const std::string& text) {
    std::istringstream ss(text);
    return read_atom_order(L, ss);
}

AtomOrder read_atom_order_file(const FiniteLattice& L, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    return read_atom_order(L, in);
}

std::string write_atom_order(const AtomOrder& order) {
    std::ostringstream out;
    for (int a = 0; a < order.count(); ++a)
        for (int b = 0; b < order.count(); ++b)
            if (order.below(a, b)) out << "rel " << a << " " << b << "\n";
    return out.str();
}

std::string mobius_tsv(const FiniteLattice& L, const MobiusVector& mu) {
    std::ostringstream out;
    for (int x = 0; x < L.size(); ++x)
        out << x << "\t" << L.label(x) << "\t" << mu[x] << "\n";
    return out.str();
}

std::string report_tsv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    for (const auto& r : rows)
        out << r.property << "\t" << (r.holds ? "true" : "false") << "\t"
            << (r.witness.empty() ? "-" : r.witness) << "\n";
    return out.str();
}

}  // namespace latmu
