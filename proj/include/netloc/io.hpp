#pragma once

#include "netloc/detector.hpp"
#include "netloc/generated.hpp"
#include "netloc/network.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace netloc {

// Parse failure with position diagnostics (line is 0 when unknown, e.g.
// inside a JSON document where the byte offset is embedded in the message).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + std::move(message)
                                      : std::move(message)),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

enum class FileFormat { EdgeList, Json };

// Edge-list text form:
//   # comment
//   nodes: 7            (optional; defaults to max id + 1)
//   anchors: 0 2 5
//   0 1
//   1 2
Network parse_edge_list(std::istream& in);

// JSON form: {"node_count": n, "anchors": [...], "edges": [[u,v],...],
//             "positions": [[x,y],...]?}
Network parse_network_json(std::istream& in);

// Sniffs the format (JSON when the first non-space byte is '{').
Network parse_network(std::istream& in);
Network parse_network_file(const std::string& path);

void write_network(std::ostream& out, const Network& net, FileFormat format);
std::string network_to_string(const Network& net, FileFormat format);

std::string report_to_json(const LocalizabilityReport& report);
std::string report_to_text(const LocalizabilityReport& report);

// Undirected DOT view; anchors drawn as boxes.
void write_dot_graph(std::ostream& out, const std::vector<std::vector<NodeId>>& adjacency,
                     const std::vector<Role>& roles, const std::string& name);

}  // namespace netloc
