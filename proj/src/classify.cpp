#include "cluster/classify.hpp"

#include <algorithm>
#include <functional>
#include <gmpxx.h>
#include <numeric>
#include <sstream>

#include "cluster/error.hpp"

namespace cluster {

// ---- types, exponents, counts --------------------------------------------

int DynkinType::rank() const {
    int r = 0;
    for (const auto& c : components) r += c.rank;
    return r;
}

std::string DynkinType::str() const {
    std::string out;
    for (std::size_t i = 0; i < components.size(); ++i) out += (i ? "+" : "") + components[i].str();
    return out;
}

void validate(const DynkinComponent& c) {
    bool ok = false;
    switch (c.family) {
        case 'A': ok = c.rank >= 1; break;
        case 'B': ok = c.rank >= 2; break;
        case 'C': ok = c.rank >= 3; break;
        case 'D': ok = c.rank >= 4; break;
        case 'E': ok = c.rank >= 6 && c.rank <= 8; break;
        case 'F': ok = c.rank == 4; break;
        case 'G': ok = c.rank == 2; break;
        default: break;
    }
    if (!ok) throw PreconditionError("not a finite type: " + c.str());
}

DynkinType parse_dynkin(const std::string& s) {
    DynkinType t;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '+')) {
        part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
        if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0])))
            throw ParseError("bad Dynkin label '" + part + "'");
        DynkinComponent c;
        c.family = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
        try {
            std::size_t used = 0;
            c.rank = std::stoi(part.substr(1), &used);
            if (used != part.size() - 1) throw ParseError("bad Dynkin label '" + part + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad Dynkin label '" + part + "'");
        }
        if (c.family == 'C' && c.rank == 2) c.family = 'B';
        validate(c);
        t.components.push_back(c);
    }
    if (t.components.empty()) throw ParseError("empty Dynkin type");
    std::sort(t.components.begin(), t.components.end());
    return t;
}

std::vector<int> exponents(const DynkinComponent& c) {
    validate(c);
    int n = c.rank;
    std::vector<int> e;
    switch (c.family) {
        case 'A':
            for (int i = 1; i <= n; ++i) e.push_back(i);
            break;
        case 'B':
        case 'C':
            for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
            break;
        case 'D':
            for (int i = 1; i <= n - 1; ++i) e.push_back(2 * i - 1);
            e.push_back(n - 1);
            std::sort(e.begin(), e.end());
            break;
        case 'E':
            if (n == 6) e = {1, 4, 5, 7, 8, 11};
            if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
            if (n == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
            break;
        case 'F': e = {1, 5, 7, 11}; break;
        case 'G': e = {1, 5}; break;
    }
    return e;
}

int coxeter_number(const DynkinComponent& c) {
    validate(c);
    switch (c.family) {
        case 'A': return c.rank + 1;
        case 'B':
        case 'C': return 2 * c.rank;
        case 'D': return 2 * c.rank - 2;
        case 'E': return c.rank == 6 ? 12 : c.rank == 7 ? 18 : 30;
        case 'F': return 12;
        case 'G': return 6;
    }
    return 0;
}

std::pair<Integer, Integer> count_type(const DynkinType& t) {
    mpq_class seeds = 1;
    Integer vars = 0;
    for (const auto& c : t.components) {
        int h = coxeter_number(c);
        for (int e : exponents(c)) seeds *= mpq_class(e + h + 1, e + 1);
        seeds.canonicalize();
        vars += Integer(static_cast<long long>(c.rank) * (h + 2) / 2);
    }
    if (seeds.get_den() != 1) throw InternalError("seed count formula is not an integer");
    return {Integer(mpz_class(seeds.get_num())), vars};
}

// ---- diagram matching ------------------------------------------------------

namespace {

std::optional<DynkinComponent> match_component(const Diagram& d, const std::vector<std::size_t>& comp) {
    std::size_t n = comp.size();
    if (n == 1) return DynkinComponent{'A', 1};
    std::vector<bool> in(d.n, false);
    for (std::size_t v : comp) in[v] = true;
    std::vector<const DiagramEdge*> edges;
    for (const auto& e : d.edges)
        if (in[e.from]) edges.push_back(&e);
    if (edges.size() != n - 1) return std::nullopt;  // connected, so a tree iff n-1 edges
    std::vector<std::vector<std::size_t>> adj(d.n);
    int w2 = 0, w3 = 0;
    const DiagramEdge* heavy = nullptr;
    for (const auto* e : edges) {
        adj[e->from].push_back(e->to);
        adj[e->to].push_back(e->from);
        if (e->weight == Integer(2)) ++w2, heavy = e;
        else if (e->weight == Integer(3)) ++w3, heavy = e;
        else if (e->weight != Integer(1)) return std::nullopt;
    }
    if (w3) {
        if (n == 2) return DynkinComponent{'G', 2};
        return std::nullopt;
    }
    std::size_t branch = d.n, deg3 = 0;
    std::vector<std::size_t> leaves;
    for (std::size_t v : comp) {
        if (adj[v].size() > 3) return std::nullopt;
        if (adj[v].size() == 3) branch = v, ++deg3;
        if (adj[v].size() == 1) leaves.push_back(v);
    }
    if (w2 > 1) return std::nullopt;
    if (w2 == 1) {
        if (deg3) return std::nullopt;
        if (n == 2) return DynkinComponent{'B', 2};
        // path from one leaf
        std::vector<std::size_t> path{leaves[0]};
        while (path.size() < n) {
            std::size_t v = path.back();
            for (std::size_t u : adj[v])
                if (path.size() < 2 || u != path[path.size() - 2]) {
                    path.push_back(u);
                    break;
                }
        }
        std::size_t a = heavy->from, b = heavy->to;
        auto pos = [&](std::size_t v) { return std::find(path.begin(), path.end(), v) - path.begin(); };
        std::size_t pa = pos(a), pb = pos(b);
        std::size_t lo = std::min(pa, pb);
        if (lo == 0 || lo == n - 2) {
            // end vertex v1 and its neighbour v2
            std::size_t v1 = lo == 0 ? path[0] : path[n - 1];
            const Integer& b12 = (v1 == a) ? heavy->b_fwd : heavy->b_back;
            return DynkinComponent{abs(b12) == Integer(2) ? 'B' : 'C', static_cast<int>(n)};
        }
        if (n == 4 && lo == 1) return DynkinComponent{'F', 4};
        return std::nullopt;
    }
    if (deg3 == 0) return DynkinComponent{'A', static_cast<int>(n)};
    if (deg3 > 1) return std::nullopt;
    std::vector<int> arms;
    for (std::size_t start : adj[branch]) {
        int len = 1;
        std::size_t prev = branch, cur = start;
        while (adj[cur].size() == 2) {
            std::size_t nx = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nx;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return DynkinComponent{'D', static_cast<int>(n)};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return DynkinComponent{'E', static_cast<int>(n)};
    return std::nullopt;
}

std::vector<std::vector<std::size_t>> diagram_components(const Diagram& d) {
    auto adj = d.adjacency();
    std::vector<int> comp(d.n, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < d.n; ++s) {
        if (comp[s] >= 0) continue;
        out.emplace_back();
        std::vector<std::size_t> stack{s};
        comp[s] = static_cast<int>(out.size() - 1);
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (std::size_t u : adj[v])
                if (comp[u] < 0) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

}  // namespace

std::optional<DynkinType> match_dynkin(const Diagram& d) {
    DynkinType t;
    for (const auto& comp : diagram_components(d)) {
        auto c = match_component(d, comp);
        if (!c) return std::nullopt;
        t.components.push_back(*c);
    }
    std::sort(t.components.begin(), t.components.end());
    return t;
}

// ---- chordless cycles and companions ---------------------------------------

std::vector<ChordlessCycle> chordless_cycles(const Diagram& d) {
    auto adj = d.adjacency();
    std::vector<std::vector<bool>> nb(d.n, std::vector<bool>(d.n, false));
    for (std::size_t v = 0; v < d.n; ++v)
        for (std::size_t u : adj[v]) nb[v][u] = true;
    std::vector<ChordlessCycle> out;
    std::vector<std::size_t> path;
    std::vector<bool> on(d.n, false);
    // cycles with smallest vertex s; path[1] < path.back() picks one direction
    std::function<void(std::size_t)> extend = [&](std::size_t s) {
        std::size_t v = path.back();
        for (std::size_t u : adj[v]) {
            if (u <= s || on[u]) continue;
            // u may touch only v among the inner path vertices (and s at the end)
            bool chord = false;
            for (std::size_t t = 1; t + 1 < path.size(); ++t)
                if (nb[u][path[t]]) chord = true;
            if (chord) continue;
            if (path.size() >= 2 && nb[u][s]) {
                if (path[1] < u) {
                    ChordlessCycle c;
                    c.vertices = path;
                    c.vertices.push_back(u);
                    out.push_back(c);
                }
                continue;  // closing at s; going further would leave a chord to s
            }
            on[u] = true;
            path.push_back(u);
            extend(s);
            path.pop_back();
            on[u] = false;
        }
    };
    for (std::size_t s = 0; s < d.n; ++s) {
        path = {s};
        on[s] = true;
        extend(s);
        on[s] = false;
    }
    for (auto& c : out) {
        std::size_t k = c.vertices.size();
        int fwd = 0;
        for (std::size_t t = 0; t < k; ++t) {
            std::size_t a = c.vertices[t], b = c.vertices[(t + 1) % k];
            const DiagramEdge* e = d.edge_between(a, b);
            if (e->from == a) ++fwd;
        }
        c.cyclically_oriented = (fwd == 0 || fwd == static_cast<int>(k));
    }
    std::sort(out.begin(), out.end(),
              [](const ChordlessCycle& x, const ChordlessCycle& y) { return x.vertices < y.vertices; });
    return out;
}

std::optional<Matrix> signed_companion(const Matrix& b) {
    Matrix top = b.top_square();
    Diagram d = diagram(top);
    auto cycles = chordless_cycles(d);
    for (const auto& c : cycles)
        if (!c.cyclically_oriented) return std::nullopt;

    // edge signs: +1 / -1 for a_ij; spanning-forest edges fixed at -1
    std::size_t e = d.edges.size();
    auto edge_index = [&](std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < e; ++t)
            if ((d.edges[t].from == i && d.edges[t].to == j) || (d.edges[t].from == j && d.edges[t].to == i)) return t;
        return e;
    };
    std::vector<int> fixed(e, 0);  // 1 means fixed negative
    {
        std::vector<std::size_t> parent(d.n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (std::size_t t = 0; t < e; ++t) {
            std::size_t a = find(d.edges[t].from), c = find(d.edges[t].to);
            if (a != c) {
                parent[a] = c;
                fixed[t] = 1;
            }
        }
    }
    // GF(2) system over the free edges, bit 1 meaning a_ij > 0. The sign
    // condition asks for an odd number of positive edges on each cycle.
    std::vector<std::size_t> free_edges;
    std::vector<std::size_t> col(e, e);
    for (std::size_t t = 0; t < e; ++t)
        if (!fixed[t]) {
            col[t] = free_edges.size();
            free_edges.push_back(t);
        }
    std::size_t f = free_edges.size();
    std::vector<std::vector<uint8_t>> rows;
    for (const auto& c : cycles) {
        std::vector<uint8_t> r(f + 1, 0);
        std::size_t k = c.vertices.size();
        for (std::size_t t = 0; t < k; ++t) {
            std::size_t idx = edge_index(c.vertices[t], c.vertices[(t + 1) % k]);
            if (col[idx] < e) r[col[idx]] ^= 1;
        }
        r[f] = 1;  // odd number of positive edges
        rows.push_back(r);
    }
    std::vector<int> value(f, 0);
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < f && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (std::size_t t = 0; t <= f; ++t) rows[r][t] ^= rows[rank][t];
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r][f]) return std::nullopt;  // inconsistent
    for (std::size_t r = 0; r < rank; ++r) value[pivot_col[r]] = rows[r][f];

    std::size_t n = top.cols();
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
    for (std::size_t t = 0; t < e; ++t) {
        const auto& ed = d.edges[t];
        bool positive = !fixed[t] && value[col[t]];
        Integer s(positive ? 1 : -1);
        a(ed.from, ed.to) = s * abs(top(ed.from, ed.to));
        a(ed.to, ed.from) = s * abs(top(ed.to, ed.from));
    }
    // check the sign condition directly
    for (const auto& c : cycles) {
        int pos = 0;
        std::size_t k = c.vertices.size();
        for (std::size_t t = 0; t < k; ++t)
            if (a(c.vertices[t], c.vertices[(t + 1) % k]).sign() > 0) ++pos;
        if (pos % 2 == 0) throw InternalError("companion violates the sign condition");
    }
    return a;
}

std::vector<Integer> leading_minors(const Matrix& a) {
    std::size_t n = a.rows();
    if (a.cols() != n) throw ShapeError("leading minors need a square matrix");
    // one Bareiss determinant per size; n is small
    std::vector<Integer> out;
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = a(i, j);
        out.push_back(determinant(m));
    }
    return out;
}

Integer determinant(const Matrix& a0) {
    std::size_t n = a0.rows();
    if (a0.cols() != n) throw ShapeError("determinant needs a square matrix");
    if (n == 0) return 1;
    Matrix a = a0;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return Integer(sign) * a(n - 1, n - 1);
}

bool is_positive(const Matrix& a, const std::vector<Integer>& d) {
    std::size_t n = a.rows();
    if (d.size() != n) throw ShapeError("symmetrizer has wrong length");
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s(i, j) = d[i] * a(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (s(i, j) != s(j, i)) throw PreconditionError("d does not symmetrize the quasi-Cartan matrix");
    for (const Integer& m : leading_minors(s))
        if (m.sign() <= 0) return false;
    return true;
}

bool is_positive(const Matrix& a) {
    // d with d_i |a_ij| = d_j |a_ji|: reuse the skew-symmetrizer of the
    // matrix that has the same moduli and a skew sign pattern
    std::size_t n = a.rows();
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            b(i, j) = abs(a(i, j));
            b(j, i) = -abs(a(j, i));
        }
    return is_positive(a, skew_symmetrizer(b));
}

bool finite_type_criterion(const Matrix& b) {
    Matrix top = b.top_square();
    auto d = skew_symmetrizer(top);
    auto a = signed_companion(top);
    return a && is_positive(*a, d);
}

TypeResult identify_type(const Matrix& b, const ExploreOptions& opt) {
    TypeResult r;
    Matrix top = b.top_square();
    if (!finite_type_criterion(top)) return r;
    r.finite = true;
    if (auto t = match_dynkin(diagram(top))) {
        r.type = t;
        return r;
    }
    ExploreOptions o = opt;
    o.abort_on_witness = true;
    MatrixClass mc = explore_matrix_class(top, o);
    for (const Matrix& m : mc.representative)
        if (auto t = match_dynkin(diagram(m))) {
            r.type = t;
            return r;
        }
    if (mc.report.status == ExploreStatus::Closed)
        throw InternalError("finite type class without a Dynkin member");
    return r;
}

// ---- generators ------------------------------------------------------------

Matrix tree_matrix(std::size_t n, const std::vector<WeightedEdge>& edges, unsigned long long flip) {
    Matrix b(n, n);
    for (std::size_t t = 0; t < edges.size(); ++t) {
        const auto& e = edges[t];
        if (e.i >= n || e.j >= n || e.i == e.j) throw IndexError("edge endpoint out of range");
        long long s = (flip >> t) & 1 ? -1 : 1;
        b(e.i, e.j) = s * e.wij;
        b(e.j, e.i) = -s * e.wji;
    }
    return b;
}

namespace {

std::vector<WeightedEdge> chain(std::size_t from, std::size_t count) {
    std::vector<WeightedEdge> out;
    for (std::size_t i = 0; i + 1 < count; ++i) out.push_back({from + i, from + i + 1});
    return out;
}

}  // namespace

std::vector<WeightedEdge> dynkin_edges(const DynkinComponent& c) {
    validate(c);
    std::size_t n = static_cast<std::size_t>(c.rank);
    std::vector<WeightedEdge> e;
    switch (c.family) {
        case 'A': e = chain(0, n); break;
        case 'B':
            e = chain(0, n);
            e[0].wij = 2;  // |b_12| = 2
            break;
        case 'C':
            e = chain(0, n);
            e[0].wji = 2;  // |b_21| = 2
            break;
        case 'D':
            e = chain(0, n - 1);
            e.push_back({n - 3, n - 1});
            break;
        case 'E': return t_edges(1, 2, c.rank - 4);
        case 'F':
            e = chain(0, 4);
            e[1].wij = 2;
            break;
        case 'G':
            e = chain(0, 2);
            e[0].wij = 3;
            break;
    }
    return e;
}

Matrix dynkin_matrix(const DynkinComponent& c, unsigned long long flip) {
    return tree_matrix(static_cast<std::size_t>(c.rank), dynkin_edges(c), flip);
}

std::vector<WeightedEdge> t_edges(int p, int q, int r) {
    if (p < 0 || q < 0 || r < 0) throw PreconditionError("T_{p,q,r} needs p, q, r >= 0");
    std::vector<WeightedEdge> e;
    std::size_t next = 1;
    for (int len : {p, q, r}) {
        std::size_t prev = 0;
        for (int t = 0; t < len; ++t) {
            e.push_back({prev, next});
            prev = next++;
        }
    }
    return e;
}

Matrix t_matrix(int p, int q, int r) { return tree_matrix(static_cast<std::size_t>(p + q + r + 1), t_edges(p, q, r)); }

Matrix s_matrix(int p, int q, int r, int s) {
    if (p < 1 || q < 1 || r < 1 || s < 0) throw PreconditionError("S^s_{p,q,r} needs p, q, r > 0 and s >= 0");
    std::size_t cyc = static_cast<std::size_t>(s + 3);
    std::size_t n = static_cast<std::size_t>(p + q + r + s);
    Matrix b(n, n);
    auto arrow = [&](std::size_t i, std::size_t j) {
        b(i, j) = 1;
        b(j, i) = -1;
    };
    for (std::size_t i = 0; i < cyc; ++i) arrow(i, (i + 1) % cyc);
    std::size_t next = cyc;
    int lens[3] = {p - 1, q - 1, r - 1};
    for (std::size_t at = 0; at < 3; ++at) {
        std::size_t prev = at;
        for (int t = 0; t < lens[at]; ++t) {
            arrow(prev, next);
            prev = next++;
        }
    }
    return b;
}

std::size_t extended_dynkin_size(char family, int n) {
    if (family == 'E' || family == 'F' || family == 'G' || family == 'B' || family == 'C' || family == 'D')
        return static_cast<std::size_t>(n + 1);
    throw PreconditionError(std::string("unknown extended Dynkin family ") + family);
}

std::vector<WeightedEdge> extended_dynkin_edges(char family, int n, int a) {
    std::vector<WeightedEdge> e;
    std::size_t v = static_cast<std::size_t>(n + 1);
    switch (family) {
        case 'B':
            if (n < 3) throw PreconditionError("B_n^(1) needs n >= 3");
            // fork {0, 1} at vertex 2, chain 2..n, weight 2 on the last edge
            e.push_back({0, 2});
            e.push_back({1, 2});
            for (std::size_t i = 2; i + 1 < v; ++i) e.push_back({i, i + 1});
            e.back().wij = 2;
            break;
        case 'C':
            if (n < 2) throw PreconditionError("C_n^(1) needs n >= 2");
            e = chain(0, v);
            e.front().wij = 2;
            e.back().wij = 2;
            break;
        case 'D':
            if (n < 4) throw PreconditionError("D_n^(1) needs n >= 4");
            e.push_back({0, 2});
            e.push_back({1, 2});
            for (std::size_t i = 2; i + 3 < v; ++i) e.push_back({i, i + 1});
            e.push_back({v - 3, v - 2});
            e.push_back({v - 3, v - 1});
            break;
        case 'E':
            if (n == 6) return t_edges(2, 2, 2);
            if (n == 7) return t_edges(3, 1, 3);
            if (n == 8) return t_edges(2, 1, 5);
            throw PreconditionError("E_n^(1) needs n in 6..8");
        case 'F':
            if (n != 4) throw PreconditionError("F_4^(1) only");
            e = chain(0, 5);
            e[2].wij = 2;
            break;
        case 'G':
            if (n != 2) throw PreconditionError("G_2^(1) only");
            if (a < 1 || a > 3) throw PreconditionError("G_2^(1) needs a in 1..3");
            e = chain(0, 3);
            e[0].wij = 3;
            e[1].wij = a;
            break;
        default: throw PreconditionError(std::string("unknown extended Dynkin family ") + family);
    }
    return e;
}

Matrix q_matrix(std::size_t n) {
    Matrix b(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        b(i, i + 1) = -1;
        b(i + 1, i) = 1;
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        b(i, i + 2) = 1;
        b(i + 2, i) = -1;
    }
    return b;
}

Matrix grid_matrix(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw PreconditionError("grid needs at least one vertex");
    Matrix b(rows * cols, rows * cols);
    auto at = [&](std::size_t r, std::size_t c) { return r * cols + c; };
    auto arrow = [&](std::size_t i, std::size_t j) {
        b(i, j) += 1;
        b(j, i) -= 1;
    };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) arrow(at(r, c), at(r, c + 1));
            if (r + 1 < rows) arrow(at(r, c), at(r + 1, c));
            if (r + 1 < rows && c + 1 < cols) arrow(at(r + 1, c + 1), at(r, c));
        }
    return b;
}

Matrix q_companion(std::size_t n) {
    Matrix b = q_matrix(n), a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = 2;
        for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = b(i, j);
    }
    return a;
}

}  // namespace cluster
