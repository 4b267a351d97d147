#ifndef TDOM_IO_HPP
#define TDOM_IO_HPP

#include <iosfwd>
#include <string>

#include "tdom/bipartite.hpp"
#include "tdom/bounds.hpp"
#include "tdom/graph.hpp"
#include "tdom/matrix.hpp"
#include "tdom/pipeline.hpp"

namespace tdom {

// Graph files: "n m" then m lines "u v" with 0 <= u < v < n, no duplicates.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
std::string serialize_graph(const Graph& g);

// Matrix files: "m n" then m rows of n characters from {0,1}.
BinaryMatrix parse_matrix(std::istream& in);
BinaryMatrix parse_matrix_text(const std::string& text);
std::string serialize_matrix(const BinaryMatrix& a);

// Bipartite files: "na nb m" then m lines "a b".
BipartiteGraph parse_bipartite(std::istream& in);
BipartiteGraph parse_bipartite_text(const std::string& text);
std::string serialize_bipartite(const BipartiteGraph& g);

Graph read_graph_file(const std::string& path);
BinaryMatrix read_matrix_file(const std::string& path);
BipartiteGraph read_bipartite_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// JSON documents, keys in documented order.
std::string analyze_json(const Graph& g);
std::string repair_report_json(const RepairReport& report);
std::string matrix_report_json(int t, long long diff, long long bound, bool inclusive);
std::string bound_report_json(const BoundReport& report);
std::string counterexample_json(const TreeCounterexample& gk, bool degree_bounds_ok,
                                const int* oracle_distance);
std::string oracle_json(const std::string& kind, long long value);

}  // namespace tdom

#endif
