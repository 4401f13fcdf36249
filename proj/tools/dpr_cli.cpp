#include "dpr/crossings.hpp"
#include "dpr/generators.hpp"
#include "dpr/io.hpp"
#include "dpr/ncl.hpp"
#include "dpr/one_face.hpp"
#include "dpr/oracle.hpp"
#include "dpr/st_paths.hpp"
#include "dpr/two_face.hpp"
#include "dpr/words.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>

using namespace dpr;

namespace {

enum Exit { kYes = 0, kNo = 1, kError = 2 };

struct Options {
    std::string format = "json";
    std::string input;
    std::string source;
    std::string target;
    std::string sequence;
    std::string mode = "auto";
    std::size_t limit = kOracleLimit;
    std::string family = "cylinder";
    int rows = 2, cols = 8, k = 2, winding_p = 0, winding_q = 0;
    int vertices = 8, walk = 4;
    unsigned long long seed = 1;
};

void emit(const Options& o, const Json& j, const std::string& text)
{
    if (o.format == "text")
        std::cout << text;
    else
        std::cout << j.dump() << '\n';
}

struct Loaded {
    InstanceFile file;
    Linkage P, Q;
};

Loaded load(const Options& o, bool need_linkages)
{
    Loaded l{instance_from_json(read_json_file(o.input)), {}, {}};
    const PlaneGraph& g = l.file.instance.graph;
    if (!o.source.empty())
        l.file.P = linkage_from_json(g, read_json_file(o.source));
    if (!o.target.empty())
        l.file.Q = linkage_from_json(g, read_json_file(o.target));
    if (need_linkages && (!l.file.P || !l.file.Q))
        throw Error(ErrorCode::InvalidInput, "linkages P and Q are required (in the instance file or via -P/-Q)");
    if (l.file.P)
        l.P = *l.file.P;
    if (l.file.Q)
        l.Q = *l.file.Q;
    return l;
}

/// Two-face reading of an instance whose sources and sinks lie on distinct faces.
Instance as_two_face(const Instance& inst)
{
    if (inst.kind == InstanceKind::TwoFace)
        return inst;
    if (inst.st() || !inst.graph.embedded())
        throw Error(ErrorCode::InvalidInput, "not a two-face instance");
    auto fs = inst.graph.faces_containing(inst.sources());
    auto ft = inst.graph.faces_containing(inst.sinks());
    for (int S : fs)
        for (int T : ft)
            if (S != T)
                return make_two_face(inst.graph, inst.terminals, S, T);
    throw Error(ErrorCode::InvalidInput, "sources and sinks do not lie on two distinct faces");
}

InstanceKind resolve_mode(const Options& o, Instance& inst)
{
    if (o.mode == "one-face") {
        if (inst.kind != InstanceKind::OneFace)
            throw Error(ErrorCode::InvalidInput, "not a one-face instance");
        return InstanceKind::OneFace;
    }
    if (o.mode == "two-face") {
        inst = as_two_face(inst);
        return InstanceKind::TwoFace;
    }
    if (o.mode == "st") {
        if (!inst.st())
            throw Error(ErrorCode::InvalidInput, "not an s-t instance");
        return InstanceKind::St;
    }
    if (inst.kind == InstanceKind::General)
        throw Error(ErrorCode::InvalidInput, "instance is neither one-face, two-face nor s-t; use the oracle");
    return inst.kind;
}

Json vertex_names(const PlaneGraph& g, const std::vector<Vertex>& vs)
{
    Json out = Json::array();
    for (Vertex v : vs)
        out.push_back(g.name(v));
    return out;
}

std::string linkage_text(const PlaneGraph& g, const Linkage& L)
{
    std::string out;
    for (std::size_t i = 0; i < L.size(); ++i) {
        out += i ? " | " : "";
        for (std::size_t j = 0; j < L[i].size(); ++j)
            out += (j ? " " : "") + g.name(L[i][j]);
    }
    return out;
}

int run_decide(const Options& o)
{
    Loaded l = load(o, true);
    Instance inst = l.file.instance;
    Json j;
    std::string text;
    bool yes = true;
    std::string reason;
    switch (resolve_mode(o, inst)) {
    case InstanceKind::OneFace:
        yes = decide_one_face(inst, l.P, l.Q);
        break;
    case InstanceKind::TwoFace: {
        auto v = decide_two_face(inst, l.P, l.Q);
        yes = v.yes;
        reason = v.reason;
        if (v.mu) {
            j["mu"] = *v.mu;
            text += "mu " + std::to_string(*v.mu) + "\n";
        }
        if (v.separator)
            j["separator"] = vertex_names(inst.graph, *v.separator);
        break;
    }
    default: {
        auto v = decide_st(inst, l.P, l.Q);
        yes = v.yes;
        reason = v.reason;
        if (v.U)
            j["U"] = vertex_names(inst.graph, *v.U);
        if (v.W)
            j["W"] = vertex_names(inst.graph, *v.W);
        break;
    }
    }
    j["answer"] = yes ? "YES" : "NO";
    if (!yes)
        j["reason"] = reason;
    emit(o, j, (yes ? "YES\n" : "NO: " + reason + "\n") + text);
    return yes ? kYes : kNo;
}

int run_sequence(const Options& o)
{
    Loaded l = load(o, true);
    Instance inst = l.file.instance;
    std::optional<Sequence> seq;
    switch (resolve_mode(o, inst)) {
    case InstanceKind::OneFace:
        seq = sequence_one_face(inst, l.P, l.Q);
        break;
    case InstanceKind::TwoFace:
        seq = sequence_two_face(inst, l.P, l.Q);
        break;
    default:
        seq = sequence_st(inst, l.P, l.Q);
        break;
    }
    Json j;
    j["answer"] = seq ? "YES" : "NO";
    std::string text = seq ? "YES\n" : "NO\n";
    if (seq) {
        j["sequence"] = sequence_to_json(inst.graph, *seq);
        for (const Linkage& L : *seq)
            text += linkage_text(inst.graph, L) + "\n";
    }
    emit(o, j, text);
    return seq ? kYes : kNo;
}

int run_verify(const Options& o)
{
    Loaded l = load(o, false);
    const Instance& inst = l.file.instance;
    Sequence seq = sequence_from_json(inst.graph, read_json_file(o.sequence));
    Status st = verify_sequence(inst, seq);
    Json j;
    j["ok"] = st.ok;
    std::string text = st.ok ? "ok\n" : "failed: " + st.message + "\n";
    if (!st.ok) {
        j["error"] = to_string(st.code);
        j["message"] = st.message;
        if (!st.info.empty())
            j["index"] = st.info.front();
    }
    emit(o, j, text);
    return st.ok ? kYes : kNo;
}

int run_mu(const Options& o)
{
    Loaded l = load(o, true);
    Instance inst = l.file.instance;
    if (inst.st() || !inst.graph.embedded())
        throw Error(ErrorCode::InvalidInput, "mu needs a plane pairs instance");
    Json j;
    auto M = mu_matrix(inst.graph, l.P, l.Q);
    j["matrix"] = M;
    std::string text;
    if (o.mode == "two-face" || inst.kind == InstanceKind::TwoFace) {
        inst = as_two_face(inst);
        int m = mu_two_face(inst, l.P, l.Q);
        j["mu"] = m;
        text += "mu " + std::to_string(m) + "\n";
    }
    for (const auto& row : M) {
        for (std::size_t i = 0; i < row.size(); ++i)
            text += (i ? " " : "") + std::to_string(row[i]);
        text += "\n";
    }
    emit(o, j, text);
    return kYes;
}

int run_word(const Options& o)
{
    Json in = read_json_file(o.input);
    std::vector<CrossingSequence> seqs;
    if (in.contains("sequences")) {
        seqs = crossings_from_json(in);
    } else {
        Loaded l = load(o, true);
        const Instance& inst = l.file.instance;
        for (int j = 1; j <= inst.k(); ++j)
            seqs.push_back(crossing_sequence(inst.graph, l.P, l.Q[j - 1], j));
    }
    Json j;
    j["words"] = Json::array();
    std::string text;
    for (const auto& cs : seqs) {
        FreeWord w = word_from_crossings(cs);
        FreeWord r = reduce(w);
        bool member = in_cyclic_subgroup(w, cs.j);
        j["words"].push_back({{"j", cs.j}, {"word", to_text(w)}, {"reduced", to_text(r)},
            {"abelianization", abelianize(w)}, {"in_subgroup", member}});
        text += "w_" + std::to_string(cs.j) + " = " + to_text(w) + (member ? "" : "  (not in <x_" + std::to_string(cs.j) + ">)") + "\n";
    }
    CurveVerdict v = curves_reconfigurable(seqs);
    j["reconfigurable"] = v.reconfigurable;
    if (!v.reconfigurable)
        j["witness"] = v.witness_j;
    text += std::string("reconfigurable: ") + (v.reconfigurable ? "true" : "false") + "\n";
    emit(o, j, text);
    return v.reconfigurable ? kYes : kNo;
}

int run_oracle(const Options& o)
{
    Loaded l = load(o, true);
    const Instance& inst = l.file.instance;
    auto seq = oracle_shortest(inst, l.P, l.Q, o.limit);
    Json j;
    j["answer"] = seq ? "YES" : "NO";
    std::string text = seq ? "YES\n" : "NO\n";
    if (seq) {
        j["sequence"] = sequence_to_json(inst.graph, *seq);
        for (const Linkage& L : *seq)
            text += linkage_text(inst.graph, L) + "\n";
    }
    emit(o, j, text);
    return seq ? kYes : kNo;
}

/// Random AND/OR graph with a valid configuration and one reached by legal flips.
std::tuple<NclGraph, NclConfig, NclConfig> random_ncl(const Options& o)
{
    std::mt19937_64 rng(o.seed);
    for (;;) {
        NclGraph h = random_ncl_graph(rng, o.vertices);
        if (auto sigma = random_ncl_config(rng, h))
            return {h, *sigma, random_ncl_walk(rng, h, *sigma, o.walk)};
    }
}

int run_gen(const Options& o)
{
    GeneratedInstance gi;
    if (o.family == "cylinder") {
        gi = gen_cylinder(o.rows, o.cols, o.k, o.winding_p, o.winding_q);
    } else if (o.family == "figure1") {
        gi = gen_nested_diamonds();
    } else if (o.family == "ncl-st" || o.family == "ncl-planar") {
        if (o.vertices < 4 || o.vertices % 2)
            throw Error(ErrorCode::InvalidInput, "--vertices must be even and at least 4");
        auto [h, sigma, tau] = random_ncl(o);
        gi = o.family == "ncl-st" ? gen_ncl_stpaths(h, sigma, tau) : gen_ncl_planar(h, sigma, tau);
    } else {
        throw Error(ErrorCode::InvalidInput, "unknown family " + o.family);
    }
    if (o.format == "dot") {
        std::cout << to_dot(gi.instance.graph);
        return kYes;
    }
    const auto& g = gi.instance.graph;
    emit(o, instance_to_json(gi.instance, &gi.P, &gi.Q),
        "vertices " + std::to_string(g.num_vertices()) + " edges " + std::to_string(g.num_edges()) + " kind "
            + to_string(gi.instance.kind) + " k " + std::to_string(gi.instance.k()) + "\n");
    return kYes;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Reconfiguration of vertex-disjoint paths in plane graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));

    auto with_instance = [&](CLI::App* c, bool linkages) {
        c->add_option("-i,--input", o.input, "Instance JSON file")->required();
        if (linkages) {
            c->add_option("-P,--source", o.source, "Source linkage JSON file (overrides the instance's P)");
            c->add_option("-Q,--target", o.target, "Target linkage JSON file (overrides the instance's Q)");
        }
    };
    auto with_mode = [&](CLI::App* c) {
        c->add_option("--mode", o.mode, "Instance kind")->check(CLI::IsMember({"auto", "one-face", "two-face", "st"}));
    };

    auto* decide = app.add_subcommand("decide", "Decide whether P reconfigures to Q");
    with_instance(decide, true);
    with_mode(decide);
    auto* sequence = app.add_subcommand("sequence", "Emit a reconfiguration sequence from P to Q");
    with_instance(sequence, true);
    with_mode(sequence);
    auto* verify = app.add_subcommand("verify", "Check a reconfiguration sequence");
    with_instance(verify, false);
    verify->add_option("-s,--sequence", o.sequence, "Sequence JSON file")->required();
    auto* mu = app.add_subcommand("mu", "Algebraic intersection numbers of P and Q");
    with_instance(mu, true);
    with_mode(mu);
    auto* word = app.add_subcommand("word", "Free-group words of crossing data or of an instance");
    with_instance(word, true);
    auto* oracle = app.add_subcommand("oracle", "Breadth-first search of the reconfiguration graph");
    with_instance(oracle, true);
    oracle->add_option("--limit", o.limit, "Largest number of linkages to visit");
    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("--family", o.family, "Instance family")
        ->check(CLI::IsMember({"cylinder", "ncl-st", "ncl-planar", "figure1"}));
    gen->add_option("--rows", o.rows, "Cylinder rings");
    gen->add_option("--cols", o.cols, "Cylinder columns");
    gen->add_option("--k", o.k, "Number of paths");
    gen->add_option("--winding-p", o.winding_p, "Winding of P");
    gen->add_option("--winding-q", o.winding_q, "Winding of Q");
    gen->add_option("--vertices", o.vertices, "AND/OR graph vertices");
    gen->add_option("--walk", o.walk, "Random legal flips from the source configuration to the target");
    gen->add_option("--seed", o.seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kYes : kError;
    }
    try {
        if (o.format == "dot" && !gen->parsed())
            throw Error(ErrorCode::InvalidInput, "--format dot is available for gen only");
        if (decide->parsed())
            return run_decide(o);
        if (sequence->parsed())
            return run_sequence(o);
        if (verify->parsed())
            return run_verify(o);
        if (mu->parsed())
            return run_mu(o);
        if (word->parsed())
            return run_word(o);
        if (oracle->parsed())
            return run_oracle(o);
        return run_gen(o);
    } catch (const Error& e) {
        Json j{{"error", to_string(e.code())}, {"message", e.what()}, {"info", e.info()}};
        std::cout << j.dump() << '\n';
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        Json j{{"error", "InvalidInput"}, {"message", e.what()}};
        std::cout << j.dump() << '\n';
        std::cerr << "error: " << e.what() << '\n';
    }
    return kError;
}
