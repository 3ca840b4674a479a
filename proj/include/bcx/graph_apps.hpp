#ifndef BCX_GRAPH_APPS_HPP
#define BCX_GRAPH_APPS_HPP

#include <array>
#include <optional>
#include <vector>

#include "bcx/broken_circuit.hpp"
#include "bcx/graph.hpp"
#include "bcx/intpoly.hpp"
#include "bcx/rng.hpp"

namespace bcx {

// Triangulated graph with user-supplied faces (edge-index triples). For a
// polygon triangulation the faces are the l-2 internal triangles and outer
// marks the boundary; for a maximal planar graph all 2l-4 faces are listed.
struct Triangulation {
    SimpleGraph graph;
    std::vector<std::array<int, 3>> faces;
    std::vector<int> outer;

    std::vector<ElementSet> face_circuits() const;
};

bool is_polygon_triangulation(const Triangulation& t, std::string* why = nullptr);
bool is_maximal_planar(const Triangulation& t, std::string* why = nullptr);

struct TriangulationAnalysis {
    Ordering ordering;
    IntPolynomial chromatic;
    bool complete_intersection = false;
    std::vector<int> degrees;
};

// Polygon triangulations only: builds the dual-tree ordering, certifies the
// complete intersection, and checks chromatic = t(t-1)(t-2)^(l-2) with both
// engines.
TriangulationAnalysis triangulation_analysis(const Triangulation& t);

struct WilfOrdering {
    Ordering ordering;
    std::vector<ElementSet> forest;  // face circuits of the chosen dual forest
    int count = 0;                   // pairwise disjoint broken circuits
    int bound = 0;                   // asserted lower bound
    bool small_case = false;         // l in {3,4}: only the l-2 guarantee holds
    bool exact_search = false;       // false when the forest was only heuristic
    bool triangle_free_dual = false;
};

// Maximal planar graphs: maximum induced forest in the dual (exact up to 14
// dual vertices), turned into an ordering with that many disjoint broken
// circuits.
WilfOrdering wilf_ordering(const Triangulation& t);

struct WilfRow {
    int p;
    BigInt a;  // chromatic coefficient
    BigInt b;  // bound
};

struct WilfReport {
    std::vector<WilfRow> rows;
    bool all_dominated = false;
    bool triangle_free_dual = false;
};

WilfReport wilf_report(const Triangulation& t);

// Generators used by the verification suites.
Triangulation polygon_fan(int l);
Triangulation polygon_random(int l, Rng& rng);
Triangulation tetrahedron();
Triangulation octahedron();
Triangulation icosahedron();

}  // namespace bcx

#endif
