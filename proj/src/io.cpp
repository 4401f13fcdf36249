#include "dpr/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace dpr {

namespace {

Vertex vertex_of(const PlaneGraph& g, const Json& v)
{
    if (v.is_number_integer()) {
        long long id = v.get<long long>();
        if (id < 0 || id >= g.num_vertices())
            throw Error(ErrorCode::UnknownVertex, "vertex id out of range: " + std::to_string(id), {id});
        return static_cast<Vertex>(id);
    }
    if (!v.is_string())
        throw Error(ErrorCode::InvalidInput, "a vertex must be a name or an id");
    auto id = g.find(v.get<std::string>());
    if (!id)
        throw Error(ErrorCode::UnknownVertex, "unknown vertex " + v.get<std::string>());
    return *id;
}

std::string name_of(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    throw Error(ErrorCode::InvalidInput, "vertex names must be strings or integers");
}

const Json& member(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorCode::InvalidInput, std::string("missing member \"") + key + "\"");
    return j.at(key);
}

int face_through(const PlaneGraph& g, const Json& boundary, const char* which)
{
    std::vector<Vertex> vs;
    for (const auto& v : boundary)
        vs.push_back(vertex_of(g, v));
    auto faces = g.faces_containing(vs);
    if (faces.empty())
        throw Error(ErrorCode::InvalidInput, std::string("no face contains the hinted boundary of ") + which);
    // a boundary listed in walk order picks its face among faces with the same vertices
    for (int f : faces) {
        const auto& walk = g.face(f).walk;
        if (walk.size() != vs.size())
            continue;
        for (std::size_t r = 0; r < walk.size(); ++r)
            if (std::equal(walk.begin() + r, walk.end(), vs.begin())
                && std::equal(walk.begin(), walk.begin() + r, vs.begin() + (walk.size() - r)))
                return f;
    }
    return faces.front();
}

Json names(const PlaneGraph& g, const std::vector<Vertex>& vs)
{
    Json out = Json::array();
    for (Vertex v : vs)
        out.push_back(g.name(v));
    return out;
}

} // namespace

Json instance_to_json(const Instance& inst, const Linkage* P, const Linkage* Q)
{
    const PlaneGraph& g = inst.graph;
    Json j;
    j["vertices"] = g.names();
    Json rot = Json::object();
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        rot[g.name(v)] = names(g, g.rotation(v));
    j[g.embedded() ? "rotation" : "adjacency"] = rot;
    Json term;
    if (inst.st()) {
        term["s"] = g.name(inst.terminals.s);
        term["t"] = g.name(inst.terminals.t);
        term["k"] = inst.terminals.k;
    } else {
        term["pairs"] = Json::array();
        for (auto [s, t] : inst.terminals.pairs)
            term["pairs"].push_back({g.name(s), g.name(t)});
    }
    j["terminals"] = term;
    if (inst.kind == InstanceKind::TwoFace)
        j["faces_hint"] = {{"S", names(g, g.face(inst.face_S).walk)}, {"T", names(g, g.face(inst.face_T).walk)}};
    if (P)
        j["P"] = linkage_to_json(g, *P);
    if (Q)
        j["Q"] = linkage_to_json(g, *Q);
    return j;
}

InstanceFile instance_from_json(const Json& j)
{
    if (!j.is_object())
        throw Error(ErrorCode::InvalidInput, "an instance must be a JSON object");
    std::vector<std::string> vertices;
    for (const auto& v : member(j, "vertices"))
        vertices.push_back(name_of(v));
    bool embedded = j.contains("rotation");
    const Json& lists = embedded ? j.at("rotation") : member(j, "adjacency");
    if (!lists.is_object())
        throw Error(ErrorCode::InvalidInput, "rotation lists must be an object keyed by vertex");
    std::map<std::string, std::vector<std::string>> rot;
    for (auto it = lists.begin(); it != lists.end(); ++it) {
        auto& out = rot[it.key()];
        for (const auto& u : it.value())
            out.push_back(name_of(u));
    }
    PlaneGraph g = embedded ? build_plane_graph(vertices, rot) : build_abstract_graph(vertices, rot);

    const Json& term = member(j, "terminals");
    Terminals t;
    if (term.contains("pairs")) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (const auto& p : term.at("pairs")) {
            if (!p.is_array() || p.size() != 2)
                throw Error(ErrorCode::InvalidInput, "a terminal pair must have two entries");
            pairs.push_back({vertex_of(g, p[0]), vertex_of(g, p[1])});
        }
        t = Terminals::from_pairs(pairs);
    } else {
        const Json& k = member(term, "k");
        if (!k.is_number_integer() || k.get<int>() < 1)
            throw Error(ErrorCode::InvalidInput, "k must be a positive integer");
        t = Terminals::from_st(vertex_of(g, member(term, "s")), vertex_of(g, member(term, "t")), k.get<int>());
    }

    InstanceFile f;
    if (j.contains("faces_hint") && !t.st) {
        const Json& hint = j.at("faces_hint");
        f.instance = make_two_face(g, t, face_through(g, member(hint, "S"), "S"), face_through(g, member(hint, "T"), "T"));
    } else {
        f.instance = classify_instance(g, t);
    }
    if (j.contains("P"))
        f.P = linkage_from_json(g, j.at("P"));
    if (j.contains("Q"))
        f.Q = linkage_from_json(g, j.at("Q"));
    return f;
}

Json linkage_to_json(const PlaneGraph& g, const Linkage& L)
{
    Json out = Json::array();
    for (const Path& p : L)
        out.push_back(names(g, p));
    return out;
}

Linkage linkage_from_json(const PlaneGraph& g, const Json& j)
{
    if (!j.is_array())
        throw Error(ErrorCode::InvalidInput, "a linkage must be an array of paths");
    Linkage L;
    for (const auto& p : j) {
        if (!p.is_array())
            throw Error(ErrorCode::InvalidInput, "a path must be an array of vertices");
        Path path;
        for (const auto& v : p)
            path.push_back(vertex_of(g, v));
        L.push_back(std::move(path));
    }
    return L;
}

Json sequence_to_json(const PlaneGraph& g, const Sequence& seq)
{
    Json out = Json::array();
    for (const Linkage& L : seq)
        out.push_back(linkage_to_json(g, L));
    return out;
}

Sequence sequence_from_json(const PlaneGraph& g, const Json& j)
{
    const Json& body = j.is_object() ? member(j, "sequence") : j;
    if (!body.is_array())
        throw Error(ErrorCode::InvalidInput, "a sequence must be an array of linkages");
    Sequence seq;
    for (const auto& L : body)
        seq.push_back(linkage_from_json(g, L));
    return seq;
}

std::vector<CrossingSequence> crossings_from_json(const Json& j)
{
    const Json& k = member(j, "k");
    if (!k.is_number_integer() || k.get<int>() < 1)
        throw Error(ErrorCode::InvalidInput, "k must be a positive integer");
    std::vector<CrossingSequence> out;
    for (const auto& s : member(j, "sequences")) {
        CrossingSequence cs;
        cs.k = k.get<int>();
        cs.j = member(s, "j").get<int>();
        if (cs.j < 1 || cs.j > cs.k)
            throw Error(ErrorCode::InvalidInput, "sequence index out of range");
        for (const auto& c : member(s, "crossings")) {
            if (!c.is_array() || c.size() != 2)
                throw Error(ErrorCode::InvalidInput, "a crossing is [path index, sign]");
            Letter l{c[0].get<int>(), c[1].get<int>()};
            if (l.gen < 1 || l.gen > cs.k || (l.exp != 1 && l.exp != -1))
                throw Error(ErrorCode::InvalidInput, "bad crossing entry");
            cs.crossings.push_back(l);
        }
        out.push_back(std::move(cs));
    }
    return out;
}

Json crossings_to_json(const std::vector<CrossingSequence>& sequences)
{
    Json j;
    j["k"] = sequences.empty() ? 0 : sequences.front().k;
    j["sequences"] = Json::array();
    for (const auto& cs : sequences) {
        Json c = Json::array();
        for (const Letter& l : cs.crossings)
            c.push_back({l.gen, l.exp});
        j["sequences"].push_back({{"j", cs.j}, {"crossings", c}});
    }
    return j;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
    }
}

} // namespace dpr
