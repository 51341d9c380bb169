#include "enpg/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace enpg {

namespace {

std::vector<std::string> payload_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
    auto lines = payload_lines(in);
    if (lines.empty()) throw std::invalid_argument("empty graph file");
    auto head = tokens(lines[0]);
    if (head.size() != 3 || head[0] != "n")
        throw std::invalid_argument("graph file must start with 'n <vertices> <edges>'");
    std::size_t nv = std::stoul(head[1]), ne = std::stoul(head[2]);

    Graph g;
    std::vector<Label> declared;
    std::size_t edges_seen = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto tok = tokens(lines[i]);
        if (tok.empty()) continue;
        if (tok[0] == "v") {
            if (tok.size() != 2) throw std::invalid_argument("bad vertex line: " + lines[i]);
            if (g.has_vertex(tok[1]))
                throw std::invalid_argument("duplicate vertex '" + tok[1] + "'");
            g.add_vertex(tok[1]);
            declared.push_back(tok[1]);
        } else if (tok[0] == "e") {
            if (tok.size() != 3) throw std::invalid_argument("bad edge line: " + lines[i]);
            if (declared.empty() && g.vertex_count() == 0)
                for (std::size_t v = 0; v < nv; ++v) g.add_vertex(std::to_string(v));
            if (!g.has_vertex(tok[1]) || !g.has_vertex(tok[2]))
                throw std::invalid_argument("edge references unknown vertex: " + lines[i]);
            if (tok[1] == tok[2]) throw std::invalid_argument("loop edge: " + lines[i]);
            if (g.has_edge(tok[1], tok[2]))
                throw std::invalid_argument("duplicate edge: " + lines[i]);
            g.add_edge(tok[1], tok[2]);
            ++edges_seen;
        } else if (tok[0] == "p") {
            if (tok.size() < 2) throw std::invalid_argument("bad annotation line: " + lines[i]);
            LabelSet set;
            for (std::size_t j = 2; j < tok.size(); ++j) {
                if (!g.has_vertex(tok[j]))
                    throw std::invalid_argument("annotation references unknown vertex '" +
                                                tok[j] + "'");
                set.insert(tok[j]);
            }
            g.set_annotation(tok[1], set);
        } else {
            throw std::invalid_argument("unknown line kind: " + lines[i]);
        }
    }
    if (declared.empty() && g.vertex_count() == 0)
        for (std::size_t v = 0; v < nv; ++v) g.add_vertex(std::to_string(v));
    if (g.vertex_count() != nv)
        throw std::invalid_argument("vertex count mismatch: header says " + head[1]);
    if (edges_seen != ne)
        throw std::invalid_argument("edge count mismatch: header says " + head[2]);
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& v : g.vertices()) out << "v " << v << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    for (const auto& [name, set] : g.annotations()) {
        out << "p " << name;
        for (const auto& v : set) out << " " << v;
        out << "\n";
    }
}

Representation read_rep(std::istream& in) {
    Representation rep;
    for (const auto& line : payload_lines(in)) {
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("representation line needs 'label:': " + line);
        std::string label = line.substr(0, colon);
        label.erase(label.find_last_not_of(" \t") + 1);
        label.erase(0, label.find_first_not_of(" \t"));
        if (label.empty()) throw std::invalid_argument("empty label: " + line);

        std::vector<GridPoint> pts;
        std::string rest = line.substr(colon + 1);
        std::size_t i = 0;
        while (i < rest.size()) {
            std::size_t open = rest.find('(', i);
            if (open == std::string::npos) break;
            std::size_t comma = rest.find(',', open);
            std::size_t close = rest.find(')', open);
            if (comma == std::string::npos || close == std::string::npos || comma > close)
                throw std::invalid_argument("bad point syntax: " + line);
            GridPoint p;
            p.x = std::stoll(rest.substr(open + 1, comma - open - 1));
            p.y = std::stoll(rest.substr(comma + 1, close - comma - 1));
            pts.push_back(p);
            i = close + 1;
        }
        rep.set_path(label, LatticePath(pts));  // validates the path invariants
    }
    return rep;
}

void write_rep(std::ostream& out, const Representation& rep) {
    for (const auto& [v, path] : rep.paths()) {
        out << v << ":";
        for (const auto& p : path.points()) out << " (" << p.x << "," << p.y << ")";
        out << "\n";
    }
}

SplitWitness read_witness(std::istream& in) {
    SplitWitness w;
    auto xy = [](const std::string& xs, const std::string& ys) {
        if ((xs != "L" && xs != "R") || (ys != "H" && ys != "V"))
            throw std::invalid_argument("bad side/kind '" + xs + " " + ys + "'");
        return std::make_pair(xs == "L" ? 0 : 1, ys == "H" ? 0 : 1);
    };
    for (const auto& line : payload_lines(in)) {
        auto tok = tokens(line);
        if (tok.empty()) continue;
        if (tok[0] == "KXY") {
            if (tok.size() < 3) throw std::invalid_argument("bad KXY line: " + line);
            auto [x, y] = xy(tok[1], tok[2]);
            for (std::size_t i = 3; i < tok.size(); ++i) w.k_parts[x][y].insert(tok[i]);
        } else if (tok[0] == "SIGMA") {
            if (tok.size() < 3) throw std::invalid_argument("bad SIGMA line: " + line);
            auto [x, y] = xy(tok[1], tok[2]);
            for (std::size_t i = 3; i < tok.size(); ++i) w.sigmas[x][y].push_back(tok[i]);
        } else if (tok[0] == "SCLASS") {
            if (tok.size() != 5) throw std::invalid_argument("bad SCLASS line: " + line);
            auto cls = sclass_from_string(tok[2]);
            if (!cls) throw std::invalid_argument("unknown class '" + tok[2] + "'");
            SAssignment a;
            a.cls = *cls;
            a.lo = std::stoi(tok[3]);
            a.hi = std::stoi(tok[4]);
            w.s_classes[tok[1]] = a;
        } else {
            throw std::invalid_argument("unknown witness line: " + line);
        }
    }
    return w;
}

void write_witness(std::ostream& out, const SplitWitness& w) {
    const char* xs[2] = {"L", "R"};
    const char* ys[2] = {"H", "V"};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            out << "KXY " << xs[x] << " " << ys[y];
            for (const auto& v : w.k_parts[x][y]) out << " " << v;
            out << "\n";
        }
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            out << "SIGMA " << xs[x] << " " << ys[y];
            for (const auto& v : w.sigmas[x][y]) out << " " << v;
            out << "\n";
        }
    for (const auto& [s, a] : w.s_classes)
        out << "SCLASS " << s << " " << to_string(a.cls) << " " << a.lo << " " << a.hi << "\n";
}

HamDecomposition read_decomp(std::istream& in) {
    HamDecomposition d;
    int count = 0;
    for (const auto& line : payload_lines(in)) {
        auto tok = tokens(line);
        if (tok.empty()) continue;
        if (tok[0] != "cycle") throw std::invalid_argument("unknown decomposition line: " + line);
        std::vector<Label>& target = count == 0 ? d.cycle_a : d.cycle_b;
        for (std::size_t i = 1; i < tok.size(); ++i) target.push_back(tok[i]);
        if (++count > 2) throw std::invalid_argument("more than two cycles");
    }
    if (count != 2) throw std::invalid_argument("expected exactly two cycle lines");
    return d;
}

void write_decomp(std::ostream& out, const HamDecomposition& d) {
    out << "cycle";
    for (const auto& v : d.cycle_a) out << " " << v;
    out << "\ncycle";
    for (const auto& v : d.cycle_b) out << " " << v;
    out << "\n";
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return in;
}

}  // namespace

Graph read_graph_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_graph(in);
}

Representation read_rep_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_rep(in);
}

SplitWitness read_witness_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_witness(in);
}

HamDecomposition read_decomp_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_decomp(in);
}

}  // namespace enpg
