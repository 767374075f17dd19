#include "mvis/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mvis::io
{

Json to_json(const VertexSet & s)
{
    Json out = Json::array();
    for (Vertex v = 0; v < s.universe(); ++v)
        if (s.contains(v))
            out.push_back(v);
    return out;
}

Json to_json(const Coloring & c)
{
    auto classes = c.classes();
    std::sort(classes.begin(), classes.end(), [](auto & a, auto & b) { return a.front() < b.front(); });
    return Json{{"k", c.k()}, {"classes", classes}};
}

Json to_json(const EdgePartition & p)
{
    Json edges = Json::array();
    for (std::size_t i = 0; i < p.edges.size(); ++i)
        edges.push_back({p.edges[i].first, p.edges[i].second, p.class_of[i]});
    return Json{{"host", p.host_spec()}, {"classes", p.classes}, {"edges", std::move(edges)}};
}

Json to_json(const ConstructedColoring & c)
{
    return Json{{"source", c.source}, {"mode", to_string(c.mode)}, {"claimed_k", c.claimed_k}, {"coloring", to_json(c.coloring)},
                {"notes", c.notes}};
}

namespace
{
    Vertex vertex_of(const Json & v, std::size_t n)
    {
        if (!v.is_number_integer() || v.get<long long>() < 0 || static_cast<std::size_t>(v.get<long long>()) >= n)
            throw InputError("vertex " + v.dump() + " is not in 0.." + std::to_string(n == 0 ? 0 : n - 1));
        return static_cast<Vertex>(v.get<long long>());
    }
}

Coloring coloring_from_json(const Json & j, std::size_t n)
{
    const Json * classes = nullptr;
    const bool flat = j.is_array() && !j.empty() && !j.front().is_array();
    if (j.is_array() && !flat)
        classes = &j;
    else if (j.is_object() && j.contains("classes"))
        classes = &j.at("classes");
    else if (flat || (j.is_object() && j.contains("colors"))) {
        const auto & colors = flat ? j : j.at("colors");
        if (!colors.is_array() || colors.size() != n)
            throw InputError("coloring: 'colors' must list one colour per vertex (" + std::to_string(n) + ")");
        std::vector<int> out;
        for (auto & c : colors) {
            if (!c.is_number_integer() || c.get<long long>() < 0)
                throw InputError("coloring: colours must be non-negative integers");
            out.push_back(static_cast<int>(c.get<long long>()));
        }
        return Coloring(std::move(out));
    }
    else
        throw InputError("coloring: expected 'classes' or 'colors'");
    if (!classes->is_array())
        throw InputError("coloring: 'classes' must be a list of lists");
    std::vector<std::vector<Vertex>> parts;
    for (auto & cls : *classes) {
        if (!cls.is_array())
            throw InputError("coloring: every class must be a list");
        std::vector<Vertex> part;
        for (auto & v : cls)
            part.push_back(vertex_of(v, n));
        parts.push_back(std::move(part));
    }
    return Coloring::from_classes(n, parts);
}

VertexSet set_from_text(const std::string & text, std::size_t n)
{
    VertexSet s(n);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
        Json j;
        try {
            j = Json::parse(text);
        }
        catch (const Json::parse_error & e) {
            throw InputError(std::string("set: ") + e.what());
        }
        const Json & list = j.is_object() ? j.at("set") : j;
        if (!list.is_array())
            throw InputError("set: expected a list of vertices");
        for (auto & v : list)
            s.insert(vertex_of(v, n));
        return s;
    }
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size() || v < 0 || static_cast<std::size_t>(v) >= n)
                throw std::out_of_range(tok);
            s.insert(static_cast<Vertex>(v));
        }
        catch (const std::exception &) {
            throw InputError("set: bad vertex '" + tok + "'");
        }
    }
    return s;
}

std::string read_text_file(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Coloring read_coloring_file(const std::string & path, std::size_t n)
{
    try {
        return coloring_from_json(Json::parse(read_text_file(path)), n);
    }
    catch (const Json::exception & e) {
        throw InputError(path + ": " + e.what());
    }
}

VertexSet read_set_file(const std::string & path, std::size_t n) { return set_from_text(read_text_file(path), n); }

std::string to_dot(const Graph & g, const Coloring * c)
{
    static const char * palette[] = {"red", "blue", "green3", "orange", "purple", "gold", "cyan3", "magenta", "brown", "gray50", "olivedrab", "navy"};
    constexpr int palette_size = sizeof(palette) / sizeof(palette[0]);
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        std::string label = g.label(v);
        std::string escaped;
        for (char ch : label) {
            if (ch == '"' || ch == '\\')
                escaped += '\\';
            escaped += ch;
        }
        out << "  " << v << " [label=\"" << escaped << "\"";
        if (c) {
            const int k = (*c)[v];
            std::string colour;
            if (k < palette_size)
                colour = palette[k];
            else {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f 0.7 0.9", static_cast<double>(k) / c->k());
                colour = buf;
            }
            out << ", color=\"" << colour << "\", style=filled, fillcolor=\"" << colour << "\"";
        }
        out << "];\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

void write_file_atomic(const std::string & path, const std::string & content)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw InputError("cannot write " + tmp);
        out << content;
        if (!out.flush())
            throw InputError("cannot write " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}
