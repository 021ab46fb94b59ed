#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latmu/lattice.hpp"
#include "latmu/mobius.hpp"

namespace latmu {

// Lattice text format: `lattice <size>`, optional `labels <tab-separated>`,
// then `cover <lo> <up>` lines (0-based).  Blank lines and `#` comments
// are ignored.  Round-trips modulo transitive reduction.
FiniteLattice read_lattice(std::istream& in);
FiniteLattice read_lattice(const std::string& text);
FiniteLattice read_lattice_file(const std::string& path);
std::string write_lattice(const FiniteLattice& L);

// Atom-order text format: `rel <a> <b>` lines, indices into L.atoms();
// transitive closure applied, cycles rejected.
AtomOrder read_atom_order(const FiniteLattice& L, std::istream& in);
AtomOrder read_atom_order(const FiniteLattice& L, const std::string& text);
AtomOrder read_atom_order_file(const FiniteLattice& L, const std::string& path);
std::string write_atom_order(const AtomOrder& order);

// TSV: element <TAB> label <TAB> mu
std::string mobius_tsv(const FiniteLattice& L, const MobiusVector& mu);

// TSV: property <TAB> holds <TAB> witness (label list or `-`)
struct ReportRow {
    std::string property;
    bool holds = false;
    std::string witness = "-";
};
std::string report_tsv(const std::vector<ReportRow>& rows);

}  // namespace latmu
