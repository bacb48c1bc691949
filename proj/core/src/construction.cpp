#include "trigen/construction.hpp"

#include <bit>
#include <cassert>
#include <sstream>

#include "trigen/canonical.hpp"
#include "trigen/connectivity.hpp"
#include "trigen/errors.hpp"

namespace trigen {

namespace {

std::string set_text(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : set_members(s)) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

VertexSet parse_set(const std::string& text) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw ParseError("step: bad vertex set " + text);
    VertexSet s = 0;
    std::string body = text.substr(1, text.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ','))
        s |= vbit(std::stoi(item));
    return s;
}

Edge parse_pair(const std::string& text) {
    auto dash = text.find('-');
    if (dash == std::string::npos) throw ParseError("step: bad edge " + text);
    return make_edge(std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1)));
}

#ifndef NDEBUG
void check_candidate(const Candidate& c) {
    assert(is_three_connected(c.graph));
}
#else
void check_candidate(const Candidate&) {}
#endif

} // namespace

std::string ConstructionStep::to_line() const {
    std::string out;
    for (const Edge& e : added_edges) {
        if (!out.empty()) out += ' ';
        out += "add " + std::to_string(e.first) + "-" + std::to_string(e.second);
    }
    if (split) {
        if (!out.empty()) out += ' ';
        out += "split " + std::to_string(split->target) + " " + set_text(split->side_one) + "|" +
               set_text(split->side_two);
    }
    return out;
}

ConstructionStep ConstructionStep::from_line(const std::string& line) {
    ConstructionStep step;
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok == "add") {
            std::string pair;
            if (!(ss >> pair)) throw ParseError("step: dangling add");
            step.added_edges.push_back(parse_pair(pair));
        } else if (tok == "split") {
            int target;
            std::string sides;
            if (!(ss >> target >> sides)) throw ParseError("step: dangling split");
            auto bar = sides.find('|');
            if (bar == std::string::npos) throw ParseError("step: bad split sides " + sides);
            step.split = SplitSpec{target, parse_set(sides.substr(0, bar)),
                                   parse_set(sides.substr(bar + 1))};
        } else {
            throw ParseError("step: unknown token " + tok);
        }
    }
    if (step.added_edges.size() > 2) throw ParseError("step: too many additions");
    if (!step.split) {
        if (step.added_edges.size() != 1) throw ParseError("step: bare step needs one addition");
        step.kind = StepKind::AddOnly;
    } else {
        switch (step.added_edges.size()) {
            case 0: step.kind = StepKind::SplitOnly; break;
            case 1: step.kind = StepKind::AddThenSplit; break;
            default: step.kind = StepKind::AddTwoThenSplit; break;
        }
    }
    return step;
}

Graph apply_step(const Graph& g, const ConstructionStep& step) {
    Graph out = g;
    for (const Edge& e : step.added_edges) out = add_edge(out, e.first, e.second);
    if (step.split) out = vertex_split(out, *step.split);
    return out;
}

Graph replay(const Graph& seed, const ProvenanceChain& chain) {
    Graph g = canonical_form(seed);
    for (const ConstructionStep& step : chain.steps) g = canonical_form(apply_step(g, step));
    return g;
}

std::vector<Candidate> splitter_children(const Graph& g) {
    std::vector<Candidate> out;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            if (g.has_edge(u, w)) continue;
            ConstructionStep step{StepKind::AddOnly, {make_edge(u, w)}, std::nullopt};
            out.push_back(Candidate{add_edge(g, u, w), step});
            check_candidate(out.back());
        }
    for (const SplitSpec& spec : enumerate_splits(g)) {
        ConstructionStep step{StepKind::SplitOnly, {}, spec};
        out.push_back(Candidate{vertex_split(g, spec), step});
        check_candidate(out.back());
    }
    return out;
}

std::vector<Candidate> candidates_op_i(const Graph& g) {
    std::vector<Candidate> out;
    for (const SplitSpec& spec : enumerate_splits(g)) {
        ConstructionStep step{StepKind::SplitOnly, {}, spec};
        out.push_back(Candidate{vertex_split(g, spec), step});
        check_candidate(out.back());
    }
    return out;
}

std::vector<Candidate> candidates_op_ii(const Graph& g) {
    std::vector<Candidate> out;
    int n = g.vertex_count();
    for (int x = 0; x < n; ++x) {
        VertexSet non_adjacent = g.vertex_mask() & ~g.neighbors(x) & ~vbit(x);
        for (int w : set_members(non_adjacent)) {
            // add e = (x,w), then split x; the new vertex keeps {w, z} so its
            // triad is {e, f, (new,z)}
            Graph added = add_edge(g, x, w);
            if (added.degree(x) < 4) continue; // cannot happen on 3-connected input
            for (int z : set_members(g.neighbors(x))) {
                VertexSet two = vbit(w) | vbit(z);
                VertexSet one = added.neighbors(x) & ~two;
                if (std::popcount(one) < 2) continue;
                SplitSpec spec{x, one, two};
                ConstructionStep step{StepKind::AddThenSplit, {make_edge(x, w)}, spec};
                out.push_back(Candidate{vertex_split(added, spec), step});
                check_candidate(out.back());
            }
        }
    }
    return out;
}

std::vector<Candidate> candidates_op_iii(const Graph& g) {
    std::vector<Candidate> out;
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        std::vector<int> non_adjacent = set_members(g.vertex_mask() & ~g.neighbors(v) & ~vbit(v));
        for (std::size_t ai = 0; ai < non_adjacent.size(); ++ai)
            for (std::size_t bi = ai + 1; bi < non_adjacent.size(); ++bi) {
                int a = non_adjacent[ai], b = non_adjacent[bi];
                Graph added = add_edge(add_edge(g, v, a), v, b);
                VertexSet two = vbit(a) | vbit(b);
                VertexSet one = added.neighbors(v) & ~two;
                SplitSpec spec{v, one, two}; // |one| = deg_g(v) >= 3
                ConstructionStep step{StepKind::AddTwoThenSplit,
                                      {make_edge(v, a), make_edge(v, b)}, spec};
                out.push_back(Candidate{vertex_split(added, spec), step});
                check_candidate(out.back());
            }
    }
    return out;
}

} // namespace trigen
