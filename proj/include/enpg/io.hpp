#ifndef ENPG_IO_HPP
#define ENPG_IO_HPP

#include <iosfwd>
#include <string>

#include "enpg/graph.hpp"
#include "enpg/grid.hpp"
#include "enpg/split.hpp"

namespace enpg {

/// Graph text format: comment lines start with '#'; the first payload line is
/// "n <vertices> <edges>", optionally followed by "v <label>" lines (labels
/// default to 0..n-1), then "e <a> <b>" edge lines and "p <name> <label>..."
/// annotation lines. Duplicate edges and loops are rejected.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

/// Representation text format: one "label: (x1,y1) (x2,y2) ..." line per
/// vertex, points in path order, written in sorted label order.
Representation read_rep(std::istream& in);
void write_rep(std::ostream& out, const Representation& rep);

/// Witness text format: "KXY <L|R> <H|V> <labels...>", "SIGMA <L|R> <H|V>
/// <labels...>" in order, and "SCLASS <label> <class> <lo> <hi>" per stable
/// vertex.
SplitWitness read_witness(std::istream& in);
void write_witness(std::ostream& out, const SplitWitness& w);

/// Two "cycle <labels...>" lines.
HamDecomposition read_decomp(std::istream& in);
void write_decomp(std::ostream& out, const HamDecomposition& d);

Graph read_graph_file(const std::string& path);
Representation read_rep_file(const std::string& path);
SplitWitness read_witness_file(const std::string& path);
HamDecomposition read_decomp_file(const std::string& path);

}  // namespace enpg

#endif
