#pragma once

#include "dpr/generators.hpp"

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dpr::test {

/// Plane graph from named clockwise rotations written as one string per vertex.
inline PlaneGraph graph_of(const std::vector<std::pair<std::string, std::vector<std::string>>>& rot)
{
    std::vector<std::string> names;
    std::map<std::string, std::vector<std::string>> m;
    for (const auto& [v, nb] : rot) {
        names.push_back(v);
        m[v] = nb;
    }
    return build_plane_graph(names, m);
}

/// Ids of named vertices.
inline Path path_of(const PlaneGraph& g, const std::vector<std::string>& names)
{
    Path p;
    for (const auto& n : names)
        p.push_back(g.at(n));
    return p;
}

/// Exit code and standard output of a shell command.
inline std::pair<int, std::string> run(const std::string& cmd)
{
    std::string out;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f)
        return {-1, out};
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0)
        out.append(buf.data(), n);
    int status = pclose(f);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace dpr::test
