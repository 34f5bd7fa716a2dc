#include "cluster/folding.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "cluster/canon.hpp"
#include "parallel.hpp"

namespace cluster {

GroupAction::GroupAction(std::size_t m, std::size_t n, std::vector<std::vector<std::size_t>> generators)
    : m_(m), n_(n), gens_(std::move(generators)) {
    if (n > m) throw ShapeError("more mutable vertices than vertices");
    for (const auto& g : gens_) {
        if (g.size() != m)
            throw PreconditionError("generator has " + std::to_string(g.size()) + " entries, expected " +
                                    std::to_string(m));
        std::vector<bool> seen(m, false);
        for (std::size_t v : g) {
            if (v >= m || seen[v]) throw PreconditionError("generator is not a permutation");
            seen[v] = true;
        }
    }
    // union-find over generator cycles
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& g : gens_)
        for (std::size_t v = 0; v < m; ++v) {
            std::size_t a = find(v), b = find(g[v]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    orbit_of_.assign(m, 0);
    std::vector<long> index(m, -1);
    for (std::size_t v = 0; v < m; ++v) {
        std::size_t r = find(v);
        if (index[r] < 0) {
            index[r] = static_cast<long>(orbits_.size());
            orbits_.emplace_back();
        }
        orbit_of_[v] = static_cast<std::size_t>(index[r]);
        orbits_[orbit_of_[v]].push_back(v);
    }
}

std::size_t GroupAction::n_mutable_orbits() const {
    std::size_t c = 0;
    for (const auto& o : orbits_)
        if (o.front() < n_) ++c;
    return c;
}

std::vector<std::size_t> parse_permutation(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::size_t> p;
    long long v;
    while (in >> v) {
        if (v < 1) throw ParseError("permutation entries are 1-based");
        p.push_back(static_cast<std::size_t>(v - 1));
    }
    if (!in.eof()) throw ParseError("bad permutation '" + text + "'");
    return p;
}

std::string Admissibility::message() const {
    if (ok) return "admissible";
    std::ostringstream os;
    os << "not admissible: condition (" << condition << ") fails at ";
    switch (condition) {
    case 1: os << "vertices " << i + 1 << " ~ " << j + 1 << " (one mutable, one frozen)"; break;
    case 2: os << "b_" << i + 1 << "," << j + 1 << " under generator " << g + 1; break;
    case 3: os << "b_" << i + 1 << "," << j + 1 << " != 0 inside an orbit"; break;
    default: os << "vertices " << i + 1 << " ~ " << j + 1 << " (opposite signs)"; break;
    }
    return os.str();
}

Admissibility is_admissible(const Matrix& b, const GroupAction& g) {
    if (b.rows() != g.size() || b.cols() != g.n_mutable())
        throw ShapeError("action does not match the matrix shape");
    const std::size_t m = b.rows(), n = b.cols();
    auto fail = [](int c, std::size_t i, std::size_t j, std::size_t gen = 0) {
        Admissibility a;
        a.ok = false;
        a.condition = c;
        a.i = i;
        a.j = j;
        a.g = gen;
        return a;
    };
    for (const auto& o : g.orbits())
        for (std::size_t v : o)
            if ((v < n) != (o.front() < n)) return fail(1, o.front(), v);
    for (std::size_t t = 0; t < g.generators().size(); ++t) {
        const auto& p = g.generators()[t];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (b(i, j) != b(p[i], p[j])) return fail(2, i, j, t);
    }
    for (const auto& o : g.orbits()) {
        if (o.front() >= n) continue;
        for (std::size_t a : o)
            for (std::size_t c : o)
                if (a != c && !b(a, c).is_zero()) return fail(3, a, c);
    }
    for (const auto& o : g.orbits())
        for (std::size_t j = 0; j < n; ++j) {
            int s = 0;
            for (std::size_t i : o) {
                int t = b(i, j).sign();
                if (t == 0) continue;
                if (s == 0) s = t;
                if (s != t) {
                    Admissibility a = fail(4, o.front(), i);
                    // report a witness pair with opposite signs
                    for (std::size_t i2 : o)
                        if (b(i2, j).sign() == s) {
                            a.i = i2;
                            break;
                        }
                    return a;
                }
            }
        }
    return {};
}

Matrix fold_matrix(const Matrix& b, const GroupAction& g) {
    Admissibility a = is_admissible(b, g);
    if (!a.ok) throw FoldingError(a);
    const auto& orbits = g.orbits();
    std::size_t cols = g.n_mutable_orbits();
    Matrix out(orbits.size(), cols);
    for (std::size_t I = 0; I < orbits.size(); ++I)
        for (std::size_t J = 0; J < cols; ++J) {
            std::size_t j = orbits[J].front();
            Integer s = 0;
            for (std::size_t i : orbits[I]) s += b(i, j);
            out(I, J) = s;
        }
    return out;
}

OrbitMutation orbit_mutate(const Matrix& b, const GroupAction& g, std::size_t orbit) {
    if (orbit >= g.orbits().size() || g.orbits()[orbit].front() >= b.cols())
        throw IndexError("orbit " + std::to_string(orbit + 1) + " is not a mutable orbit");
    const auto& k = g.orbits()[orbit];
    for (std::size_t a : k)
        for (std::size_t c : k)
            if (a != c && !b(a, c).is_zero())
                throw PreconditionError("orbit " + std::to_string(orbit + 1) + " is not totally disconnected");
    OrbitMutation out;
    out.matrix = mutate_sequence(b, k);
    out.check = is_admissible(out.matrix, g);
    out.admissible = out.check.ok;
    return out;
}

const char* foldability_name(Foldability::Kind k) {
    switch (k) {
    case Foldability::Foldable: return "Foldable";
    case Foldability::Counterexample: return "Counterexample";
    default: return "Unknown";
    }
}

namespace {

std::vector<std::vector<std::size_t>> mutable_generators(const GroupAction& g) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& p : g.generators()) out.emplace_back(p.begin(), p.begin() + static_cast<long>(g.n_mutable()));
    return out;
}

}  // namespace

Foldability global_foldability(const Matrix& b, const GroupAction& g, const ExploreOptions& opt) {
    Foldability res;
    Admissibility a0 = is_admissible(b, g);
    if (!a0.ok) {
        res.kind = Foldability::Counterexample;
        res.failure = a0;
        return res;
    }
    const auto cent = centralizer(g.n_mutable(), mutable_generators(g));
    std::vector<std::size_t> korbits;
    for (std::size_t K = 0; K < g.orbits().size(); ++K)
        if (g.orbits()[K].front() < g.n_mutable()) korbits.push_back(K);

    std::vector<Matrix> rep{b};
    std::vector<std::size_t> parent{0}, via{0};
    std::unordered_map<Matrix, std::size_t> seen;
    seen.emplace(equivariant_canonical_form(b, cent).matrix, 0);
    auto word = [&](std::size_t s) {
        std::vector<std::size_t> w;
        for (; s != 0; s = parent[s]) w.push_back(via[s]);
        std::reverse(w.begin(), w.end());
        return w;
    };

    std::vector<std::size_t> frontier{0};
    res.depth_profile.push_back(1);
    std::size_t depth = 0;
    while (!frontier.empty()) {
        if (opt.max_depth && depth >= *opt.max_depth) {
            res.kind = Foldability::Unknown;
            res.states = rep.size();
            return res;
        }
        struct Child {
            OrbitMutation mu;
            Matrix key;
        };
        std::vector<Child> kids(frontier.size() * korbits.size());
        detail::parallel_for(kids.size(), opt.threads, [&](std::size_t t) {
            Child& c = kids[t];
            c.mu = orbit_mutate(rep[frontier[t / korbits.size()]], g, korbits[t % korbits.size()]);
            if (c.mu.admissible) c.key = equivariant_canonical_form(c.mu.matrix, cent).matrix;
        });
        std::vector<std::size_t> next;
        for (std::size_t t = 0; t < kids.size(); ++t) {
            std::size_t from = frontier[t / korbits.size()], K = korbits[t % korbits.size()];
            Child& c = kids[t];
            if (!c.mu.admissible) {
                res.kind = Foldability::Counterexample;
                res.word = word(from);
                res.word.push_back(K);
                res.failure = c.mu.check;
                res.states = rep.size();
                return res;
            }
            if (seen.count(c.key)) continue;
            if (rep.size() >= opt.max_states) {
                res.kind = Foldability::Unknown;
                res.states = rep.size();
                return res;
            }
            seen.emplace(std::move(c.key), rep.size());
            next.push_back(rep.size());
            rep.push_back(std::move(c.mu.matrix));
            parent.push_back(from);
            via.push_back(K);
        }
        frontier = std::move(next);
        ++depth;
        res.depth_profile.push_back(rep.size());
    }
    res.kind = Foldability::Foldable;
    res.states = rep.size();
    return res;
}

FoldedPattern fold_seed_pattern(const Matrix& b, const GroupAction& g, const ExploreOptions& opt) {
    Foldability f = global_foldability(b, g, opt);
    if (f.kind == Foldability::Counterexample) {
        if (f.failure) throw FoldingError(*f.failure);
        throw PreconditionError("quiver is not globally foldable");
    }
    if (f.kind != Foldability::Foldable) throw PreconditionError("global foldability undecided within the cap");
    FoldedPattern out;
    out.folded = fold_matrix(b, g);
    out.initial = initial_seed(out.folded);
    out.pattern = explore_seed_pattern(out.initial, opt);
    return out;
}

std::size_t check_folded_seeds(const Matrix& b, const GroupAction& g, std::size_t max_states) {
    std::vector<int> psi(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) psi[v] = static_cast<int>(g.orbit_of(v));
    const std::size_t norb = g.orbits().size();
    std::vector<std::size_t> korbits;
    for (std::size_t K = 0; K < norb; ++K)
        if (g.orbits()[K].front() < g.n_mutable()) korbits.push_back(K);

    auto compare = [&](const Seed& up, const Seed& down) {
        if (fold_matrix(up.matrix, g) != down.matrix) throw InternalError("folded matrix does not commute with mutation");
        for (std::size_t i = 0; i < up.cluster.size(); ++i)
            if (up.cluster[i].remap(psi, norb) != down.cluster[g.orbit_of(i)])
                throw InternalError("folded cluster variable differs at vertex " + std::to_string(i + 1));
    };

    struct Pair {
        Seed up, down;
    };
    std::vector<Pair> states{{initial_seed(b), initial_seed(fold_matrix(b, g))}};
    compare(states[0].up, states[0].down);
    std::unordered_multimap<std::size_t, std::size_t> index;
    auto key = [](const Seed& s) {
        std::size_t h = s.matrix.hash();
        for (const auto& x : s.cluster) h = h * 1000003u ^ x.hash();
        return h;
    };
    index.emplace(key(states[0].up), 0);
    for (std::size_t cur = 0; cur < states.size() && states.size() < max_states; ++cur)
        for (std::size_t K : korbits) {
            Seed up = seed_mutate_sequence(states[cur].up, g.orbits()[K]);
            Seed down = seed_mutate(states[cur].down, K);
            compare(up, down);
            std::size_t h = key(up);
            bool dup = false;
            for (auto [it, end] = index.equal_range(h); it != end; ++it)
                if (states[it->second].up == up) dup = true;
            if (dup) continue;
            index.emplace(h, states.size());
            states.push_back({std::move(up), std::move(down)});
        }
    return states.size();
}

bool sign_coherent(const Matrix& b, const GroupAction& g) {
    const auto& orbits = g.orbits();
    for (const auto& I : orbits)
        for (const auto& J : orbits) {
            if (J.front() >= b.cols()) continue;
            int s = 0;
            for (std::size_t i : I)
                for (std::size_t j : J) {
                    int t = b(i, j).sign();
                    if (t == 0) continue;
                    if (s != 0 && s != t) return false;
                    s = t;
                }
        }
    return true;
}

// ---- examples ---------------------------------------------------------------

namespace {

Matrix from_arrows(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
    Quiver q;
    q.n_mutable = q.n_total = n;
    for (auto [a, c] : arrows) q.add_arrow(a, c);
    return q.to_matrix();
}

}  // namespace

// 0 is the center; corners 1, 2 and 3, 4 are swapped by the rotation.
FoldingExample d4_affine_example() {
    return {from_arrows(5, {{1, 0}, {2, 0}, {3, 0}, {4, 0}}), GroupAction(5, 5, {{0, 2, 1, 4, 3}})};
}

// Vertices 0, 1 fixed; 2 <-> 3 and 4 <-> 5.
FoldingExample e6_f4_example() {
    return {from_arrows(6, {{4, 2}, {1, 2}, {1, 0}, {5, 3}, {1, 3}}), GroupAction(6, 6, {{0, 1, 3, 2, 5, 4}})};
}

// Three leaves 0 -> 1 -> 2 -> 0 under the generator, all pointing at 3.
FoldingExample d4_g2_example() {
    return {from_arrows(4, {{0, 3}, {1, 3}, {2, 3}}), GroupAction(4, 4, {{1, 2, 0, 3}})};
}

FoldingExample hexagon_cycle_example() {
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    std::vector<std::size_t> g(6);
    for (std::size_t i = 0; i < 6; ++i) {
        arrows.emplace_back(i, (i + 1) % 6);
        g[i] = (i + 3) % 6;
    }
    return {from_arrows(6, arrows), GroupAction(6, 6, {g})};
}

FoldingExample a3_b2_example() {
    return {from_arrows(3, {{1, 0}, {1, 2}}), GroupAction(3, 3, {{2, 1, 0}})};
}

// 0 is the central vertex, 1..n-1 one half of the chain and n..2n-2 the
// mirror images; arrows point toward the center.
FoldingExample central_a_example(std::size_t n) {
    if (n < 1) throw PreconditionError("central_a_example needs n >= 1");
    std::size_t m = 2 * n - 1;
    auto mirror = [n](std::size_t k) { return k == 0 ? 0 : n - 1 + k; };
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    std::vector<std::size_t> g(m);
    for (std::size_t k = 1; k < n; ++k) {
        arrows.emplace_back(k, k - 1);
        arrows.emplace_back(mirror(k), mirror(k - 1));
        g[k] = mirror(k);
        g[mirror(k)] = k;
    }
    return {from_arrows(m, arrows), GroupAction(m, m, {g})};
}

// 0, 1 are the two radii at one vertex (swapped), 2..n the remaining arcs of
// the fan, arrows d_{k+1} -> d_k and d_3 -> both radii.
FoldingExample tagged_d_example(std::size_t n) {
    if (n < 2) throw PreconditionError("tagged_d_example needs n >= 2");
    std::size_t m = n + 1;
    std::vector<std::pair<std::size_t, std::size_t>> arrows{{2, 0}, {2, 1}};
    for (std::size_t k = 3; k < m; ++k) arrows.emplace_back(k, k - 1);
    std::vector<std::size_t> g(m);
    std::iota(g.begin(), g.end(), 0);
    std::swap(g[0], g[1]);
    return {from_arrows(m, arrows), GroupAction(m, m, {g})};
}

}  // namespace cluster
