#include "trigen/families.hpp"

#include "trigen/canonical.hpp"
#include "trigen/errors.hpp"

namespace trigen {

Graph prism() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph wheel(int r) {
    if (r < 3) throw BadParameterError("wheel: need at least 3 spokes");
    if (r + 1 > kMaxVertices) throw BadParameterError("wheel: too many spokes");
    Graph g(r + 1);
    for (int i = 0; i < r; ++i) {
        g.link(i, (i + 1) % r == 0 ? 0 : i + 1);
        g.link(i, r);
    }
    return g;
}

Graph k3p_variant(int p, int extra) {
    if (p < 3) throw BadParameterError("k3p_variant: need p >= 3");
    if (extra < 0 || extra > 3) throw BadParameterError("k3p_variant: extra edges must be 0..3");
    if (p + 3 > kMaxVertices) throw BadParameterError("k3p_variant: too many vertices");
    Graph g(p + 3);
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < p + 3; ++b) g.link(a, b);
    // added edges inside the 3-class; the two-edge variant shares vertex 0
    if (extra >= 1) g.link(0, 1);
    if (extra >= 2) g.link(0, 2);
    if (extra >= 3) g.link(1, 2);
    return g;
}

Graph complete(int n) {
    if (n < 1 || n > kMaxVertices) throw BadParameterError("complete: bad vertex count");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.link(u, v);
    return g;
}

Graph k5_minus_e() {
    Graph g = complete(5);
    g.unlink(3, 4);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.link(i, (i + 1) % 5);         // outer cycle
        g.link(i, i + 5);               // spokes
        g.link(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return g;
}

Graph build(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Prism: return prism();
        case FamilyKind::Wheel: return wheel(spec.size_param);
        case FamilyKind::K3pVariant: return k3p_variant(spec.size_param, spec.extra_edges);
        case FamilyKind::Complete: return complete(spec.size_param);
        case FamilyKind::K5MinusE: return k5_minus_e();
        case FamilyKind::Petersen: return petersen();
    }
    throw BadParameterError("build: unknown family kind");
}

std::vector<Graph> dirac_catalog(int r) {
    if (r < 3) throw BadParameterError("dirac_catalog: need rank >= 3");
    if (r == 3) return {wheel(3)};
    if (r == 4) return {complete(5), k5_minus_e(), wheel(4)};
    std::vector<Graph> out;
    out.push_back(wheel(r));
    for (int extra = 0; extra <= 3; ++extra) out.push_back(k3p_variant(r - 2, extra));
    return out;
}

bool is_wheel(const Graph& g) {
    int n = g.vertex_count();
    if (n < 4) return false;
    return are_isomorphic(g, wheel(n - 1));
}

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Prism: return "prism";
        case FamilyKind::Wheel: return "wheel";
        case FamilyKind::K3pVariant: return "k3p";
        case FamilyKind::Complete: return "complete";
        case FamilyKind::K5MinusE: return "k5me";
        case FamilyKind::Petersen: return "petersen";
    }
    return "unknown";
}

std::optional<FamilyKind> family_from_name(const std::string& name) {
    if (name == "prism") return FamilyKind::Prism;
    if (name == "wheel") return FamilyKind::Wheel;
    if (name == "k3p") return FamilyKind::K3pVariant;
    if (name == "complete") return FamilyKind::Complete;
    if (name == "k5me") return FamilyKind::K5MinusE;
    if (name == "petersen") return FamilyKind::Petersen;
    return std::nullopt;
}

} // namespace trigen
