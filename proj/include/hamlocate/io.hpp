#pragma once

#include <string>

#include "hamlocate/certificate.hpp"
#include "hamlocate/graph.hpp"

namespace hamlocate {

// graph6: standard bit-packing (upper triangle, column-major, 6-bit groups
// offset by 63; '~'-prefixed 3-byte length for n >= 63).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// Edge-list text: first line "n", then one "u v" line per edge.
std::string to_edge_list_text(const Graph& g);
Graph from_edge_list_text(const std::string& text);

// File round-trip; format chosen by extension (".g6" => graph6, else edge list).
void write_graph_file(const Graph& g, const std::string& path);
Graph read_graph_file(const std::string& path);

// Certificate JSON: {"order":[...],"x":..,"y":..,"claimed_distance":..}
std::string certificate_to_json(const CycleCertificate& c);
CycleCertificate certificate_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace hamlocate
