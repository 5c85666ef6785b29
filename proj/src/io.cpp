#include "netloc/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace netloc {

namespace {

using nlohmann::json;

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

NodeId parse_id(const std::string& tok, int line_no) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("expected a node id, got '" + tok + "'", line_no);
    }
    if (used != tok.size()) throw ParseError("expected a node id, got '" + tok + "'", line_no);
    return static_cast<NodeId>(value);
}

}  // namespace

Network parse_edge_list(std::istream& in) {
    std::optional<std::size_t> node_count;
    std::vector<NodeId> anchors;
    std::vector<std::pair<NodeId, NodeId>> edges;
    NodeId max_id = 0;
    bool any_id = false;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto toks = tokens_of(strip_comment(raw));
        if (toks.empty()) continue;
        if (toks[0] == "nodes:") {
            if (toks.size() != 2) throw ParseError("nodes: expects one count", line_no);
            node_count = parse_id(toks[1], line_no);
        } else if (toks[0] == "anchors:") {
            for (std::size_t i = 1; i < toks.size(); ++i) {
                anchors.push_back(parse_id(toks[i], line_no));
                max_id = std::max(max_id, anchors.back());
                any_id = true;
            }
        } else if (toks.size() == 2) {
            const NodeId u = parse_id(toks[0], line_no);
            const NodeId v = parse_id(toks[1], line_no);
            edges.emplace_back(u, v);
            max_id = std::max({max_id, u, v});
            any_id = true;
        } else {
            throw ParseError("expected 'u v', 'nodes: n' or 'anchors: ...', got '" + raw + "'",
                             line_no);
        }
    }

    const std::size_t n = node_count.value_or(any_id ? static_cast<std::size_t>(max_id) + 1 : 0);
    try {
        return build_network(edges, anchors, n);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Network parse_network_json(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    try {
        const auto n = doc.at("node_count").get<std::size_t>();
        std::vector<NodeId> anchors = doc.at("anchors").get<std::vector<NodeId>>();
        std::vector<std::pair<NodeId, NodeId>> edges;
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("edges entries must be [u, v] pairs");
            edges.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
        }
        Network net = build_network(edges, anchors, n);
        if (doc.contains("positions")) {
            const auto& pos = doc.at("positions");
            if (pos.size() != n) throw ParseError("positions must list one entry per node");
            int dim = 0;
            std::vector<double> coords;
            for (const auto& p : pos) {
                if (dim == 0) dim = static_cast<int>(p.size());
                if (static_cast<int>(p.size()) != dim || dim == 0)
                    throw ParseError("positions must have uniform nonzero dimension");
                for (const auto& c : p) coords.push_back(c.get<double>());
            }
            if (n > 0) net.set_positions(std::move(coords), dim);
        }
        return net;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

Network parse_network(std::istream& in) {
    char c = 0;
    while (in.get(c)) {
        if (!std::isspace(static_cast<unsigned char>(c))) break;
    }
    if (!in) return parse_edge_list(in);  // empty input -> empty network
    in.unget();
    if (c == '{') return parse_network_json(in);
    return parse_edge_list(in);
}

Network parse_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_network(in);
}

void write_network(std::ostream& out, const Network& net, FileFormat format) {
    if (format == FileFormat::EdgeList) {
        out << "nodes: " << net.node_count() << "\n";
        out << "anchors:";
        for (NodeId a : net.anchors()) out << " " << a;
        out << "\n";
        for (const auto& [u, v] : net.edges()) out << u << " " << v << "\n";
        return;
    }
    json doc;
    doc["node_count"] = net.node_count();
    doc["anchors"] = net.anchors();
    auto edges = json::array();
    for (const auto& [u, v] : net.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    if (net.has_positions()) {
        auto positions = json::array();
        for (NodeId v = 0; v < net.node_count(); ++v) {
            auto p = json::array();
            for (int k = 0; k < net.position_dim(); ++k) p.push_back(net.position(v, k));
            positions.push_back(std::move(p));
        }
        doc["positions"] = std::move(positions);
    }
    out << doc.dump(2) << "\n";
}

std::string network_to_string(const Network& net, FileFormat format) {
    std::ostringstream ss;
    write_network(ss, net, format);
    return ss.str();
}

std::string report_to_json(const LocalizabilityReport& report) {
    json doc;
    doc["mode"] = report.mode;
    doc["dimension"] = report.dimension;
    doc["localizable"] = report.localizable;
    doc["removed_order"] = report.removed_order;
    doc["passes"] = report.passes;
    return doc.dump(2) + "\n";
}

std::string report_to_text(const LocalizabilityReport& report) {
    std::ostringstream ss;
    ss << "mode: " << report.mode << "  dimension: " << report.dimension << "\n";
    ss << "nodes: " << report.iota.size() << "\n";
    ss << "localizable set size: " << report.localizable.size() << "\n";
    ss << "localizable:";
    for (NodeId v : report.localizable) ss << " " << v;
    ss << "\n";
    ss << "removed_order:";
    for (NodeId v : report.removed_order) ss << " " << v;
    ss << "\n";
    ss << "passes: " << report.passes << "\n";
    return ss.str();
}

void write_dot_graph(std::ostream& out, const std::vector<std::vector<NodeId>>& adjacency,
                     const std::vector<Role>& roles, const std::string& name) {
    out << "graph " << name << " {\n";
    for (NodeId v = 0; v < roles.size(); ++v) {
        out << "  " << v;
        if (roles[v] == Role::Anchor) out << " [shape=box, style=filled, fillcolor=\"#c8e6ff\"]";
        out << ";\n";
    }
    for (NodeId u = 0; u < adjacency.size(); ++u)
        for (NodeId v : adjacency[u])
            if (u < v) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

}  // namespace netloc
