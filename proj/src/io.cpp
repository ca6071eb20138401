#include "hamlocate/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hamlocate {

namespace {

void append_g6_size(std::string& out, int n) {
    if (n < 0) throw std::invalid_argument("graph6: negative order");
    if (n <= 62) {
        out.push_back((char)(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back((char)(((n >> 12) & 63) + 63));
        out.push_back((char)(((n >> 6) & 63) + 63));
        out.push_back((char)((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: order too large");
    }
}

int parse_g6_size(const std::string& s, std::size_t& pos) {
    if (pos >= s.size()) throw std::invalid_argument("graph6: empty");
    unsigned char c = (unsigned char)s[pos];
    if (c == '~') {
        if (pos + 3 >= s.size()) throw std::invalid_argument("graph6: truncated size");
        int n = 0;
        for (int k = 1; k <= 3; ++k) {
            unsigned char b = (unsigned char)s[pos + (std::size_t)k];
            if (b < 63 || b > 126) throw std::invalid_argument("graph6: bad size byte");
            n = (n << 6) | (b - 63);
        }
        pos += 4;
        return n;
    }
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad size byte");
    pos += 1;
    return c - 63;
}

} // namespace

std::string to_graph6(const Graph& g) {
    std::string out;
    append_g6_size(out, g.n());
    int bit = 5;
    unsigned char cur = 0;
    for (int j = 1; j < g.n(); ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) cur |= (unsigned char)(1u << bit);
            if (--bit < 0) {
                out.push_back((char)(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    }
    if (bit != 5) out.push_back((char)(cur + 63));
    return out;
}

Graph from_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    std::size_t pos = 0;
    int n = parse_g6_size(s, pos);
    GraphBuilder b(n);
    long long need = (long long)n * (n - 1) / 2;
    long long consumed = 0;
    int bit = -1;
    unsigned char cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bit < 0) {
                if (pos >= s.size()) throw std::invalid_argument("graph6: truncated bits");
                unsigned char c = (unsigned char)s[pos++];
                if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad data byte");
                cur = (unsigned char)(c - 63);
                bit = 5;
            }
            if ((cur >> bit) & 1) b.add_edge(i, j);
            --bit;
            ++consumed;
        }
    }
    if (consumed != need) throw std::logic_error("graph6: internal bit accounting");
    return b.build();
}

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph from_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    int n = -1;
    if (!(in >> n) || n < 0) throw std::invalid_argument("edge list: missing order line");
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> u >> v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

void write_graph_file(const Graph& g, const std::string& path) {
    bool g6 = path.size() >= 3 && path.substr(path.size() - 3) == ".g6";
    write_text_file(path, g6 ? to_graph6(g) + "\n" : to_edge_list_text(g));
}

Graph read_graph_file(const std::string& path) {
    std::string text = read_text_file(path);
    bool g6 = path.size() >= 3 && path.substr(path.size() - 3) == ".g6";
    return g6 ? from_graph6(text) : from_edge_list_text(text);
}

std::string certificate_to_json(const CycleCertificate& c) {
    nlohmann::json j;
    j["order"] = c.order;
    j["x"] = c.x;
    j["y"] = c.y;
    j["claimed_distance"] = c.claimed_distance;
    return j.dump();
}

CycleCertificate certificate_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CycleCertificate c;
    c.order = j.at("order").get<std::vector<int>>();
    c.x = j.at("x").get<int>();
    c.y = j.at("y").get<int>();
    c.claimed_distance = j.at("claimed_distance").get<int>();
    return c;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace hamlocate
