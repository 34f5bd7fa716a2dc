#include "cluster/geom.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <numeric>
#include <sstream>

#include "cluster/error.hpp"
#include "cluster/seed.hpp"

namespace cluster {

namespace {

constexpr std::size_t kMaxItems = 256;
using Bits = std::bitset<kMaxItems>;

// Maximal cliques of a compatibility relation (Bron-Kerbosch with pivot).
std::vector<std::vector<std::size_t>> maximal_cliques(std::size_t count,
                                                      const std::function<bool(std::size_t, std::size_t)>& ok) {
    if (count > kMaxItems) throw PreconditionError("too many arcs to enumerate");
    std::vector<Bits> nb(count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (ok(i, j)) {
                nb[i].set(j);
                nb[j].set(i);
            }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> r;
    std::function<void(Bits, Bits)> bk = [&](Bits p, Bits x) {
        if (p.none() && x.none()) {
            out.push_back(r);
            return;
        }
        std::size_t pivot = 0, best = 0;
        bool have = false;
        Bits px = p | x;
        for (std::size_t u = 0; u < count; ++u)
            if (px[u]) {
                std::size_t c = (p & nb[u]).count();
                if (!have || c > best) {
                    pivot = u;
                    best = c;
                    have = true;
                }
            }
        Bits cand = p & ~nb[pivot];
        for (std::size_t v = 0; v < count; ++v) {
            if (!cand[v]) continue;
            r.push_back(v);
            bk(p & nb[v], x & nb[v]);
            r.pop_back();
            p.reset(v);
            x.set(v);
        }
    };
    Bits all;
    for (std::size_t i = 0; i < count; ++i) all.set(i);
    bk(all, Bits());
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

Integer binomial(unsigned long n, unsigned long k) {
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return Integer(z);
}

int wrap(int v, int n) { return ((v - 1) % n + n) % n + 1; }

// j follows i clockwise in some triangle
void add_pair(Matrix& b, long i, long j) {
    const long n = static_cast<long>(b.cols());
    if (j < n) b(i, j) += 1;
    if (i < n) b(j, i) -= 1;
}

// Adds the clockwise triangle (s1, s2, s3) of rows into b.
void add_triangle(Matrix& b, long s1, long s2, long s3) {
    add_pair(b, s1, s2);
    add_pair(b, s2, s3);
    add_pair(b, s3, s1);
}

}  // namespace

// ---- polygon -----------------------------------------------------------------

PolygonTriangulation polygon_fan(std::size_t n) {
    PolygonTriangulation t;
    t.n = n;
    for (std::size_t l = 1; l <= n; ++l) t.diagonals.emplace_back(1, static_cast<int>(l + 2));
    return t;
}

bool diagonals_cross(std::pair<int, int> d, std::pair<int, int> e) {
    auto [a, b] = d;
    auto [c, f] = e;
    if (a > b) std::swap(a, b);
    if (c > f) std::swap(c, f);
    return (a < c && c < b && b < f) || (c < a && a < f && f < b);
}

namespace {

bool valid_diagonal(std::pair<int, int> d, int N) {
    auto [a, b] = d;
    return 1 <= a && a < b && b <= N && b - a >= 2 && !(a == 1 && b == N);
}

std::vector<std::pair<int, int>> all_diagonals(int N) {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= N; ++a)
        for (int b = a + 2; b <= N; ++b)
            if (valid_diagonal({a, b}, N)) out.emplace_back(a, b);
    return out;
}

// Row of segment [a, b] (a < b) in the polygon matrix, or -1.
long polygon_row(const PolygonTriangulation& t, int a, int b) {
    const int N = static_cast<int>(t.vertices());
    const long n = static_cast<long>(t.n);
    if (b == a + 1) return n + a - 1;
    if (a == 1 && b == N) return 2 * n + 2;
    for (std::size_t k = 0; k < t.diagonals.size(); ++k)
        if (t.diagonals[k] == std::make_pair(a, b)) return static_cast<long>(k);
    return -1;
}

}  // namespace

bool is_polygon_triangulation(const PolygonTriangulation& t) {
    const int N = static_cast<int>(t.vertices());
    if (t.diagonals.size() != t.n) return false;
    for (std::size_t i = 0; i < t.n; ++i) {
        if (!valid_diagonal(t.diagonals[i], N)) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (t.diagonals[i] == t.diagonals[j] || diagonals_cross(t.diagonals[i], t.diagonals[j])) return false;
    }
    return true;  // n pairwise noncrossing diagonals are maximal
}

std::vector<PolygonTriangulation> polygon_triangulations(std::size_t n) {
    auto diags = all_diagonals(static_cast<int>(n + 3));
    auto cliques = maximal_cliques(diags.size(), [&](std::size_t i, std::size_t j) {
        return !diagonals_cross(diags[i], diags[j]);
    });
    std::vector<PolygonTriangulation> out;
    for (const auto& c : cliques) {
        PolygonTriangulation t;
        t.n = n;
        for (std::size_t i : c) t.diagonals.push_back(diags[i]);
        if (t.diagonals.size() != n) throw InternalError("maximal noncrossing set of the wrong size");
        out.push_back(std::move(t));
    }
    return out;
}

Matrix polygon_matrix(const PolygonTriangulation& t, bool extended) {
    if (!is_polygon_triangulation(t)) throw PreconditionError("not a triangulation");
    const int N = static_cast<int>(t.vertices());
    Matrix b(2 * t.n + 3, t.n);
    for (int a = 1; a <= N; ++a)
        for (int c = a + 1; c <= N; ++c) {
            long ac = polygon_row(t, a, c);
            if (ac < 0) continue;
            for (int m = a + 1; m < c; ++m) {
                long am = polygon_row(t, a, m), mc = polygon_row(t, m, c);
                if (am >= 0 && mc >= 0) add_triangle(b, am, mc, ac);
            }
        }
    return extended ? b : b.top_square();
}

PolygonTriangulation polygon_flip(const PolygonTriangulation& t, std::size_t k) {
    if (k >= t.n) throw IndexError("diagonal " + std::to_string(k + 1) + " is not in the triangulation");
    if (!is_polygon_triangulation(t)) throw PreconditionError("not a triangulation");
    auto [a, c] = t.diagonals[k];
    const int N = static_cast<int>(t.vertices());
    auto seg = [&](int x, int y) { return polygon_row(t, std::min(x, y), std::max(x, y)) >= 0; };
    int inner = 0, outer = 0;
    for (int m = 1; m <= N; ++m) {
        if (m == a || m == c || !seg(a, m) || !seg(m, c)) continue;
        (a < m && m < c ? inner : outer) = m;
    }
    if (!inner || !outer) throw InternalError("diagonal without a quadrilateral");
    PolygonTriangulation out = t;
    out.diagonals[k] = {std::min(inner, outer), std::max(inner, outer)};
    return out;
}

// ---- tagged arcs ---------------------------------------------------------------

bool operator<(const TaggedArc& x, const TaggedArc& y) {
    // radii first (by vertex, plain before notched), then chords
    if (x.radius != y.radius) return x.radius;
    if (x.a != y.a) return x.a < y.a;
    if (x.radius) return x.notched < y.notched;
    return x.b < y.b;
}

const char* flavor_name(PuncturedFlavor f) {
    switch (f) {
    case PuncturedFlavor::AllPlain: return "AllPlain";
    case PuncturedFlavor::AllNotched: return "AllNotched";
    default: return "DigonMixed";
    }
}

std::string format_arc(const TaggedArc& a) {
    if (a.radius) return "p-" + std::to_string(a.a) + (a.notched ? ":notched" : ":plain");
    return std::to_string(a.a) + "-" + std::to_string(a.b);
}

TaggedArc parse_arc(const std::string& s, std::size_t n) {
    TaggedArc out;
    try {
        if (s.rfind("p-", 0) == 0) {
            auto colon = s.find(':');
            std::string tag = colon == std::string::npos ? "plain" : s.substr(colon + 1);
            if (tag != "plain" && tag != "notched") throw ParseError("bad tag in '" + s + "'");
            out = tag == "plain" ? TaggedArc::plain(std::stoi(s.substr(2, colon - 2)))
                                 : TaggedArc::notch(std::stoi(s.substr(2, colon - 2)));
        } else {
            auto dash = s.find('-');
            if (dash == std::string::npos) throw ParseError("bad arc '" + s + "'");
            out = TaggedArc::chord(std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1)));
        }
    } catch (const std::logic_error&) {
        throw ParseError("bad arc '" + s + "'");
    }
    if (!is_valid_arc(out, n)) throw PreconditionError("'" + s + "' is not an arc of the punctured " + std::to_string(n) + "-gon");
    return out;
}

std::string format_tagged(const TaggedTriangulation& t) {
    std::string s;
    for (const auto& a : t.arcs) s += (s.empty() ? "" : " ") + format_arc(a);
    return s;
}

TaggedTriangulation parse_tagged(const std::string& s, std::size_t n) {
    TaggedTriangulation t;
    t.n = n;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) t.arcs.push_back(parse_arc(tok, n));
    return t;
}

bool is_valid_arc(const TaggedArc& x, std::size_t n) {
    const int N = static_cast<int>(n);
    if (x.a < 1 || x.a > N) return false;
    if (x.radius) return x.b == 0;
    if (x.notched || x.b < 1 || x.b > N) return false;
    int len = ((x.b - x.a) % N + N) % N;
    return len >= 2 && len <= N - 1;
}

bool crosses_cut(const TaggedArc& x, std::size_t) { return !x.radius && x.a > x.b; }

std::vector<TaggedArc> tagged_arcs(std::size_t n) {
    std::vector<TaggedArc> out;
    const int N = static_cast<int>(n);
    for (int v = 1; v <= N; ++v) {
        out.push_back(TaggedArc::plain(v));
        out.push_back(TaggedArc::notch(v));
    }
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b)
            if (is_valid_arc(TaggedArc::chord(a, b), n)) out.push_back(TaggedArc::chord(a, b));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Sides [s, s+1] cut off by a chord, as offsets from the chord's start.
bool strictly_inside(int v, const TaggedArc& c, int N) {
    int len = ((c.b - c.a) % N + N) % N, off = ((v - c.a) % N + N) % N;
    return off >= 1 && off <= len - 1;
}

}  // namespace

bool compatible(const TaggedArc& x, const TaggedArc& y, std::size_t n) {
    const int N = static_cast<int>(n);
    if (x == y) return true;
    if (x.radius && y.radius) return x.a == y.a || x.notched == y.notched;
    if (x.radius) return !strictly_inside(x.a, y, N);
    if (y.radius) return !strictly_inside(y.a, x, N);
    // chords: the cut-off side sets must be nested or disjoint
    auto sides = [N](const TaggedArc& c) {
        std::vector<bool> s(N, false);
        for (int v = c.a; v != c.b; v = wrap(v + 1, N)) s[v - 1] = true;
        return s;
    };
    auto sx = sides(x), sy = sides(y);
    bool meet = false, x_in_y = true, y_in_x = true;
    for (int i = 0; i < N; ++i) {
        if (sx[i] && sy[i]) meet = true;
        if (sx[i] && !sy[i]) x_in_y = false;
        if (sy[i] && !sx[i]) y_in_x = false;
    }
    return !meet || x_in_y || y_in_x;
}

bool is_tagged_triangulation(const TaggedTriangulation& t) {
    for (std::size_t i = 0; i < t.arcs.size(); ++i) {
        if (!is_valid_arc(t.arcs[i], t.n)) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (t.arcs[i] == t.arcs[j] || !compatible(t.arcs[i], t.arcs[j], t.n)) return false;
    }
    for (const auto& a : tagged_arcs(t.n)) {
        if (std::find(t.arcs.begin(), t.arcs.end(), a) != t.arcs.end()) continue;
        bool all = true;
        for (const auto& b : t.arcs)
            if (!compatible(a, b, t.n)) {
                all = false;
                break;
            }
        if (all) return false;  // not maximal
    }
    return !t.arcs.empty();
}

PuncturedFlavor flavor(const TaggedTriangulation& t) {
    bool plain = false, notched = false;
    for (const auto& a : t.arcs)
        if (a.radius) (a.notched ? notched : plain) = true;
    if (plain && notched) return PuncturedFlavor::DigonMixed;
    return notched ? PuncturedFlavor::AllNotched : PuncturedFlavor::AllPlain;
}

TaggedTriangulation all_plain_radii(std::size_t n) {
    TaggedTriangulation t;
    t.n = n;
    for (std::size_t v = 1; v <= n; ++v) t.arcs.push_back(TaggedArc::plain(static_cast<int>(v)));
    return t;
}

std::vector<TaggedTriangulation> tagged_triangulations(std::size_t n) {
    if (n < 2) throw PreconditionError("punctured polygon needs n >= 2");
    auto arcs = tagged_arcs(n);
    auto cliques = maximal_cliques(arcs.size(), [&](std::size_t i, std::size_t j) {
        return compatible(arcs[i], arcs[j], n);
    });
    std::vector<TaggedTriangulation> out;
    for (const auto& c : cliques) {
        TaggedTriangulation t;
        t.n = n;
        for (std::size_t i : c) t.arcs.push_back(arcs[i]);
        out.push_back(std::move(t));
    }
    return out;
}

TaggedTriangulation tagged_flip(const TaggedTriangulation& t, std::size_t k) {
    if (k >= t.arcs.size()) throw IndexError("arc " + std::to_string(k + 1) + " is not in the triangulation");
    if (!is_tagged_triangulation(t)) throw PreconditionError("not a tagged triangulation");
    std::vector<TaggedArc> found;
    for (const auto& a : tagged_arcs(t.n)) {
        if (std::find(t.arcs.begin(), t.arcs.end(), a) != t.arcs.end()) continue;
        bool ok = true;
        for (std::size_t i = 0; i < t.arcs.size() && ok; ++i)
            if (i != k && !compatible(a, t.arcs[i], t.n)) ok = false;
        if (ok) found.push_back(a);
    }
    if (found.size() != 1)
        throw InternalError("flip of " + format_arc(t.arcs[k]) + " has " + std::to_string(found.size()) + " candidates");
    TaggedTriangulation out = t;
    out.arcs[k] = found[0];
    return out;
}

Matrix tagged_matrix(const TaggedTriangulation& t) {
    if (!is_tagged_triangulation(t)) throw PreconditionError("not a tagged triangulation");
    const std::size_t n = t.n;
    const int N = static_cast<int>(n);
    Matrix b(2 * n, n);
    auto edge = [&](int a, int c) -> long {
        int len = ((c - a) % N + N) % N;
        if (len == 0) return -1;
        if (len == 1) return static_cast<long>(n) + a - 1;
        for (std::size_t k = 0; k < n; ++k)
            if (!t.arcs[k].radius && t.arcs[k].a == a && t.arcs[k].b == c) return static_cast<long>(k);
        return -1;
    };
    // triangles away from the puncture, each below its outermost chord
    for (std::size_t k = 0; k < n; ++k) {
        const TaggedArc& c = t.arcs[k];
        if (c.radius) continue;
        int found = 0;
        for (int m = wrap(c.a + 1, N); m != c.b; m = wrap(m + 1, N)) {
            long am = edge(c.a, m), mb = edge(m, c.b);
            if (am < 0 || mb < 0) continue;
            add_triangle(b, am, mb, static_cast<long>(k));
            ++found;
        }
        if (found != 1) throw InternalError("chord " + format_arc(c) + " does not bound exactly one triangle");
    }
    // triangles at the puncture
    std::map<int, std::vector<long>> radii;
    for (std::size_t k = 0; k < n; ++k)
        if (t.arcs[k].radius) radii[t.arcs[k].a].push_back(static_cast<long>(k));
    if (radii.size() >= 2) {
        std::vector<int> vs;
        for (auto& [v, ks] : radii) vs.push_back(v);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            int v = vs[i], w = vs[(i + 1) % vs.size()];
            long e = edge(v, w);
            if (e < 0) throw InternalError("no side between consecutive radii");
            add_triangle(b, e, radii[w][0], radii[v][0]);
        }
    } else if (radii.size() == 1) {
        // punctured digon: the loop around both radii sits in the triangle
        // (v, w, v); each radius takes the loop's place
        int v = radii.begin()->first;
        const auto& ks = radii.begin()->second;
        if (ks.size() != 2) throw InternalError("single radius in a tagged triangulation");
        int w = 0;
        for (int m = 1; m <= N; ++m)
            if (m != v && edge(v, m) >= 0 && edge(m, v) >= 0) w = m;
        if (!w) throw InternalError("punctured digon not found");
        long e1 = edge(v, w), e2 = edge(w, v);
        add_pair(b, e1, e2);
        for (long r : ks) {
            add_pair(b, e2, r);
            add_pair(b, r, e1);
        }
    } else {
        throw InternalError("tagged triangulation without radii");
    }
    return b;
}

namespace {

std::string tagged_key(const TaggedTriangulation& t) {
    auto arcs = t.arcs;
    std::sort(arcs.begin(), arcs.end());
    TaggedTriangulation s{t.n, arcs};
    return format_tagged(s);
}

// Column order of t against its sorted order: sorted position p holds t's arc perm[p].
std::vector<std::size_t> sort_perm(const TaggedTriangulation& t) {
    std::vector<std::size_t> p(t.arcs.size());
    std::iota(p.begin(), p.end(), 0);
    std::sort(p.begin(), p.end(), [&](std::size_t x, std::size_t y) { return t.arcs[x] < t.arcs[y]; });
    return p;
}

const std::map<std::string, Matrix>& bullet_table(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::map<std::string, Matrix>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::map<std::string, Matrix> table;
    TaggedTriangulation t0 = all_plain_radii(n);
    Matrix b0(2 * n + 2, n);
    Matrix top = tagged_matrix(t0);
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < n; ++j) b0(i, j) = top(i, j);
    b0(2 * n, 0) = -1;
    b0(2 * n + 1, n - 1) = 1;
    std::vector<std::pair<TaggedTriangulation, Matrix>> queue{{t0, b0}};
    table.emplace(tagged_key(t0), b0);
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (std::size_t k = 0; k < n; ++k) {
            TaggedTriangulation t1 = tagged_flip(queue[q].first, k);
            Matrix b1 = mutate(queue[q].second, k);
            auto p = sort_perm(t1);
            TaggedTriangulation s1{n, {}};
            for (std::size_t i : p) s1.arcs.push_back(t1.arcs[i]);
            Matrix c1 = permute_mutable(b1, p);
            std::string key = format_tagged(s1);
            auto hit = table.find(key);
            if (hit != table.end()) {
                if (hit->second != c1) throw InternalError("lambda rows depend on the flip path at " + key);
                continue;
            }
            table.emplace(key, c1);
            queue.emplace_back(s1, c1);
        }
    }
    return cache.emplace(n, std::move(table)).first->second;
}

}  // namespace

Matrix tagged_matrix_bullet(const TaggedTriangulation& t) {
    if (!is_tagged_triangulation(t)) throw PreconditionError("not a tagged triangulation");
    const auto& table = bullet_table(t.n);
    auto it = table.find(tagged_key(t));
    if (it == table.end()) throw InternalError("tagged triangulation not reached by flips");
    // back from sorted order to t's order
    auto p = sort_perm(t);
    std::vector<std::size_t> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
    return permute_mutable(it->second, inv);
}

// ---- symmetric models ------------------------------------------------------------

namespace {

std::pair<int, int> half_turn(std::pair<int, int> d, int N) {
    int a = wrap(d.first + N / 2, N), b = wrap(d.second + N / 2, N);
    return {std::min(a, b), std::max(a, b)};
}

bool centrally_symmetric(const PolygonTriangulation& t) {
    const int N = static_cast<int>(t.vertices());
    for (const auto& d : t.diagonals)
        if (std::find(t.diagonals.begin(), t.diagonals.end(), half_turn(d, N)) == t.diagonals.end()) return false;
    return true;
}

bool tag_symmetric(const TaggedTriangulation& t) {
    for (const auto& a : t.arcs) {
        if (!a.radius) continue;
        TaggedArc b = a;
        b.notched = !b.notched;
        if (std::find(t.arcs.begin(), t.arcs.end(), b) == t.arcs.end()) return false;
    }
    return true;
}

}  // namespace

std::vector<PolygonTriangulation> central_triangulations(std::size_t n) {
    if (n < 1) throw PreconditionError("central model needs n >= 1");
    std::vector<PolygonTriangulation> out;
    for (auto& t : polygon_triangulations(2 * n - 1))
        if (centrally_symmetric(t)) out.push_back(std::move(t));
    return out;
}

PolygonTriangulation central_flip(const PolygonTriangulation& t, std::size_t k) {
    if (k >= t.n) throw IndexError("diagonal " + std::to_string(k + 1) + " is not in the triangulation");
    const int N = static_cast<int>(t.vertices());
    auto img = half_turn(t.diagonals[k], N);
    PolygonTriangulation out = polygon_flip(t, k);
    if (img != t.diagonals[k]) {
        auto it = std::find(out.diagonals.begin(), out.diagonals.end(), img);
        if (it == out.diagonals.end()) throw PreconditionError("triangulation is not centrally symmetric");
        out = polygon_flip(out, static_cast<std::size_t>(it - out.diagonals.begin()));
    }
    if (!centrally_symmetric(out)) throw InternalError("central flip broke the symmetry");
    return out;
}

std::vector<TaggedTriangulation> tag_symmetric_triangulations(std::size_t n) {
    if (n < 2) throw PreconditionError("tag-symmetric model needs n >= 2");
    std::vector<TaggedTriangulation> out;
    for (auto& t : tagged_triangulations(n + 1))
        if (tag_symmetric(t)) out.push_back(std::move(t));
    return out;
}

TaggedTriangulation tag_symmetric_flip(const TaggedTriangulation& t, std::size_t k) {
    if (k >= t.arcs.size()) throw IndexError("arc " + std::to_string(k + 1) + " is not in the triangulation");
    TaggedTriangulation out = tagged_flip(t, k);
    if (t.arcs[k].radius) {
        std::size_t other = t.arcs.size();
        for (std::size_t i = 0; i < t.arcs.size(); ++i)
            if (i != k && t.arcs[i].radius) other = i;
        if (other == t.arcs.size()) throw PreconditionError("triangulation is not tag-symmetric");
        out = tagged_flip(out, other);
    }
    if (!tag_symmetric(out)) throw InternalError("orbit flip broke the tag symmetry");
    return out;
}

// ---- counts ---------------------------------------------------------------------

Model parse_model(const std::string& s) {
    if (s == "A" || s == "PolygonA") return Model::PolygonA;
    if (s == "D" || s == "TaggedD") return Model::TaggedD;
    if (s == "C" || s == "CentralC") return Model::CentralC;
    if (s == "B" || s == "TagSymB") return Model::TagSymB;
    throw ParseError("unknown model '" + s + "'");
}

const char* model_name(Model m) {
    switch (m) {
    case Model::PolygonA: return "PolygonA";
    case Model::TaggedD: return "TaggedD";
    case Model::CentralC: return "CentralC";
    default: return "TagSymB";
    }
}

Integer catalan_seeds(std::size_t n) {
    return Integer(binomial(2 * n + 2, n + 1).to_mpz() / static_cast<unsigned long>(n + 2));
}

Integer type_d_seeds(std::size_t n) {
    if (n < 2) throw PreconditionError("d_n needs n >= 2");
    mpz_class c = binomial(2 * n - 2, n - 1).to_mpz() * static_cast<unsigned long>(3 * n - 2);
    return Integer(mpz_class(c / static_cast<unsigned long>(n)));
}

bool dn_recurrence_check(std::size_t N) {
    if (N < 3) throw PreconditionError("recurrence check needs N >= 3");
    for (std::size_t n = 3; n <= N; ++n) {
        Integer rhs = 2 * catalan_seeds(n - 1);
        for (std::size_t k = 0; k + 3 <= n; ++k) rhs += catalan_seeds(k) * type_d_seeds(n - 1 - k);
        if (rhs != type_d_seeds(n)) return false;
    }
    return true;
}

TriangulationCount count_triangulations(Model m, std::size_t n) {
    TriangulationCount c;
    switch (m) {
    case Model::PolygonA:
        c.enumerated = static_cast<long long>(polygon_triangulations(n).size());
        c.closed_form = catalan_seeds(n);
        break;
    case Model::TaggedD:
        c.enumerated = static_cast<long long>(tagged_triangulations(n).size());
        c.closed_form = type_d_seeds(n);
        break;
    case Model::CentralC:
        c.enumerated = static_cast<long long>(central_triangulations(n).size());
        c.closed_form = binomial(2 * n, n);
        break;
    case Model::TagSymB:
        c.enumerated = static_cast<long long>(tag_symmetric_triangulations(n).size());
        c.closed_form = binomial(2 * n, n);
        break;
    }
    if (c.enumerated != c.closed_form)
        throw InternalError(std::string(model_name(m)) + "(" + std::to_string(n) + "): enumerated " +
                            c.enumerated.str() + ", formula " + c.closed_form.str());
    return c;
}

// ---- flip graphs ------------------------------------------------------------------

bool FlipGraph::connected() const {
    if (labels.empty()) return true;
    std::vector<std::vector<std::size_t>> adj(labels.size());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(labels.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == labels.size();
}

bool FlipGraph::regular(std::size_t degree) const {
    std::vector<std::size_t> deg(labels.size(), 0);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d == degree; });
}

std::string FlipGraph::dot() const {
    std::ostringstream os;
    os << "graph flips {\n";
    for (std::size_t i = 0; i < labels.size(); ++i) os << "  " << i << " [label=\"" << labels[i] << "\"];\n";
    for (auto [a, b] : edges) os << "  " << a << " -- " << b << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

std::string polygon_key(PolygonTriangulation t) {
    std::sort(t.diagonals.begin(), t.diagonals.end());
    std::string s;
    for (auto [a, b] : t.diagonals) s += (s.empty() ? "" : " ") + std::to_string(a) + "-" + std::to_string(b);
    return s;
}

template <class T, class Key, class Flip, class Skip>
FlipGraph build_graph(const std::vector<T>& all, Key key, Flip flip, Skip skip, std::size_t arcs) {
    FlipGraph g;
    std::map<std::string, std::size_t> index;
    for (const auto& t : all) {
        index.emplace(key(t), g.labels.size());
        g.labels.push_back(key(t));
    }
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t k = 0; k < arcs; ++k) {
            if (skip(all[i], k)) continue;
            auto it = index.find(key(flip(all[i], k)));
            if (it == index.end()) throw InternalError("flip left the model");
            edges.insert({std::min(i, it->second), std::max(i, it->second)});
        }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

}  // namespace

FlipGraph flip_graph(Model m, std::size_t n) {
    auto never = [](const auto&, std::size_t) { return false; };
    switch (m) {
    case Model::PolygonA:
        return build_graph(polygon_triangulations(n), polygon_key, polygon_flip, never, n);
    case Model::TaggedD:
        return build_graph(tagged_triangulations(n), tagged_key, tagged_flip, never, n);
    case Model::CentralC: {
        // one flip per orbit: skip the larger member of each symmetric pair
        auto skip = [](const PolygonTriangulation& t, std::size_t k) {
            auto img = half_turn(t.diagonals[k], static_cast<int>(t.vertices()));
            return img < t.diagonals[k];
        };
        return build_graph(central_triangulations(n), polygon_key, central_flip, skip, 2 * n - 1);
    }
    default: {
        auto skip = [](const TaggedTriangulation& t, std::size_t k) { return t.arcs[k].radius && t.arcs[k].notched; };
        return build_graph(tag_symmetric_triangulations(n), tagged_key, tag_symmetric_flip, skip, n + 1);
    }
    }
}

}  // namespace cluster
