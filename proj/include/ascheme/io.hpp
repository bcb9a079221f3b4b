#pragma once

// Text formats. Blank lines and '#' comments are ignored everywhere.
//
//   edge list        first line "n m", then m lines "u v" (0-based)
//   relation matrix  first line "n d", then n lines of n labels in 0..d
//   tensor           first line "n d", then lines "i j k p"; missing
//                    quadruples are 0
//   gram matrix      first line "n", then n lines of n reals

#include "ascheme/graphs.hpp"
#include "ascheme/numerics.hpp"
#include "ascheme/schemes.hpp"

#include <fstream>
#include <iosfwd>
#include <string>

namespace ascheme {

Graph read_edge_list(std::istream& in, std::size_t max_dense = kDefaultMaxDense);
void write_edge_list(std::ostream& out, const Graph& g);

RelationPartition read_relation_matrix(std::istream& in, std::size_t max_dense = kDefaultMaxDense);
void write_relation_matrix(std::ostream& out, const RelationPartition& rel);

struct TensorFile {
    std::int64_t n = 0;
    IntersectionNumbers p;
};
TensorFile read_tensor(std::istream& in);
void write_tensor(std::ostream& out, std::int64_t n, const IntersectionNumbers& p);

SymMatrix read_gram(std::istream& in, std::size_t max_dense = kDefaultMaxDense);
void write_gram(std::ostream& out, const SymMatrix& m);

/// Opens `path` for reading; throws Error when it cannot.
std::ifstream open_input(const std::string& path);

} // namespace ascheme
