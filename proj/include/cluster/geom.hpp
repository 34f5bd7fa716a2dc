#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cluster/integer.hpp"
#include "cluster/matrix.hpp"

namespace cluster {

// ---- polygon model (type A) ------------------------------------------------
// Vertices 1..N clockwise, N = n + 3. Diagonal k (0-based) is the k-th entry;
// side [l, l+1] is frozen row n + l - 1 (0-based) and side [N, 1] is the last.

struct PolygonTriangulation {
    std::size_t n = 0;  // number of diagonals
    std::vector<std::pair<int, int>> diagonals;  // a < b, 1-based
    std::size_t vertices() const { return n + 3; }
};

PolygonTriangulation polygon_fan(std::size_t n);  // diagonal l is [1, l + 2]
bool is_polygon_triangulation(const PolygonTriangulation& t);
bool diagonals_cross(std::pair<int, int> d, std::pair<int, int> e);
// All triangulations, diagonals sorted, in lexicographic order.
std::vector<PolygonTriangulation> polygon_triangulations(std::size_t n);
// (2n+3) x n, or the n x n top when extended is false.
Matrix polygon_matrix(const PolygonTriangulation& t, bool extended = true);
// Replaces diagonal k by the other diagonal of its quadrilateral.
PolygonTriangulation polygon_flip(const PolygonTriangulation& t, std::size_t k);

// ---- once-punctured polygon (type D) ---------------------------------------
// A non-radius arc is stored as the clockwise interval [a, b] of vertices it
// cuts off on the side away from the puncture; 2 <= (b - a) mod n <= n - 1.
// A radius joins vertex a to the puncture.

struct TaggedArc {
    int a = 1, b = 1;
    bool radius = false;
    bool notched = false;

    static TaggedArc chord(int a, int b) { return {a, b, false, false}; }
    static TaggedArc plain(int v) { return {v, 0, true, false}; }
    static TaggedArc notch(int v) { return {v, 0, true, true}; }
    friend bool operator==(const TaggedArc& x, const TaggedArc& y) {
        return x.a == y.a && x.b == y.b && x.radius == y.radius && x.notched == y.notched;
    }
    friend bool operator!=(const TaggedArc& x, const TaggedArc& y) { return !(x == y); }
    friend bool operator<(const TaggedArc& x, const TaggedArc& y);
};

enum class PuncturedFlavor { AllPlain, AllNotched, DigonMixed };
const char* flavor_name(PuncturedFlavor f);

struct TaggedTriangulation {
    std::size_t n = 0;  // polygon vertices = number of arcs
    std::vector<TaggedArc> arcs;
};

// "i-j" (clockwise interval), "p-i:plain", "p-i:notched".
std::string format_arc(const TaggedArc& a);
TaggedArc parse_arc(const std::string& s, std::size_t n);
std::string format_tagged(const TaggedTriangulation& t);  // space separated
TaggedTriangulation parse_tagged(const std::string& s, std::size_t n);

bool is_valid_arc(const TaggedArc& a, std::size_t n);
bool crosses_cut(const TaggedArc& a, std::size_t n);  // cut from p to side [n, 1]
std::vector<TaggedArc> tagged_arcs(std::size_t n);    // all n^2 of them, sorted
bool compatible(const TaggedArc& x, const TaggedArc& y, std::size_t n);
bool is_tagged_triangulation(const TaggedTriangulation& t);
PuncturedFlavor flavor(const TaggedTriangulation& t);

TaggedTriangulation all_plain_radii(std::size_t n);  // arc k is the radius at k + 1
// Every tagged triangulation (arcs sorted), found as maximal compatible sets.
std::vector<TaggedTriangulation> tagged_triangulations(std::size_t n);
// The unique replacement of arc k. Throws IndexError for a bad k.
TaggedTriangulation tagged_flip(const TaggedTriangulation& t, std::size_t k);

// 2n x n: arcs, then boundary sides [l, l+1] (l = 1..n, side n is [n, 1]).
Matrix tagged_matrix(const TaggedTriangulation& t);
// 2n + 2 rows: tagged_matrix plus the lambda and lambda-bar rows. At the
// all-plain-radii triangulation those rows are -e_1 and e_n; elsewhere they
// are carried along flips, and every flip of the whole graph is checked.
Matrix tagged_matrix_bullet(const TaggedTriangulation& t);

// ---- symmetric models (types C and B) ---------------------------------------

// Triangulations of P_{2n+2} invariant under the half turn.
std::vector<PolygonTriangulation> central_triangulations(std::size_t n);
// Flip of a diameter, or of a centrally symmetric pair of diagonals.
PolygonTriangulation central_flip(const PolygonTriangulation& t, std::size_t k);
// Tagged triangulations of P•_{n+1} fixed by switching every tag.
std::vector<TaggedTriangulation> tag_symmetric_triangulations(std::size_t n);
// Flip of a non-radius arc, or of the pair of radii.
TaggedTriangulation tag_symmetric_flip(const TaggedTriangulation& t, std::size_t k);

// ---- counts ---------------------------------------------------------------

enum class Model { PolygonA, TaggedD, CentralC, TagSymB };
Model parse_model(const std::string& s);
const char* model_name(Model m);

struct TriangulationCount {
    Integer enumerated, closed_form;
};
// Throws InternalError when enumeration and formula disagree.
TriangulationCount count_triangulations(Model m, std::size_t n);

Integer catalan_seeds(std::size_t n);  // a_n = C(2n+2, n+1) / (n+2)
Integer type_d_seeds(std::size_t n);   // d_n = (3n-2)/n C(2n-2, n-1)
// d_n = sum_{k=0}^{n-3} a_k d_{n-1-k} + 2 a_{n-1} for 3 <= n <= N.
bool dn_recurrence_check(std::size_t N);

// Flip graph of a model as a list of vertex labels and undirected edges.
struct FlipGraph {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    bool connected() const;
    bool regular(std::size_t degree) const;
    std::string dot() const;
};
FlipGraph flip_graph(Model m, std::size_t n);

}  // namespace cluster
