#include "cluster/explore.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cluster/canon.hpp"
#include "cluster/error.hpp"
#include "parallel.hpp"

namespace cluster {

const char* status_name(ExploreStatus s) {
    switch (s) {
        case ExploreStatus::Closed: return "Closed";
        case ExploreStatus::AbortedInfiniteWitness: return "AbortedInfiniteWitness";
        case ExploreStatus::DepthCapped: return "DepthCapped";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

std::string report_to_json(const ExplorationReport& r, bool seeds) {
    std::ostringstream os;
    os << "{\"status\":\"" << status_name(r.status) << "\",\"" << (seeds ? "seeds" : "matrices") << "\":" << r.count;
    if (seeds) os << ",\"variables\":" << r.variables;
    os << ",\"depth_profile\":[";
    for (std::size_t i = 0; i < r.depth_profile.size(); ++i) os << (i ? "," : "") << r.depth_profile[i];
    os << "]";
    if (r.witness) {
        const Witness& w = *r.witness;
        os << ",\"witness\":{\"i\":" << w.i + 1 << ",\"j\":" << w.j + 1 << ",\"product\":" << w.product
           << ",\"depth\":" << w.depth << ",\"word\":[";
        for (std::size_t t = 0; t < w.word.size(); ++t) os << (t ? "," : "") << w.word[t] + 1;
        os << "]}";
    }
    os << "}";
    return os.str();
}

std::optional<Witness> infinite_pair(const Matrix& b) {
    std::size_t n = b.cols();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (b(i, j).is_zero()) continue;
            Integer p = abs(b(i, j) * b(j, i));
            if (p >= Integer(4)) {
                Witness w;
                w.i = i;
                w.j = j;
                w.product = p;
                return w;
            }
        }
    return std::nullopt;
}

std::vector<std::size_t> MatrixClass::word(std::size_t member) const {
    std::vector<std::size_t> w;
    while (member != 0) {
        w.push_back(via[member]);
        member = parent[member];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

// ---- matrix classes -------------------------------------------------------

MatrixClass explore_matrix_class(const Matrix& b, const ExploreOptions& opt) {
    if (b.rows() < b.cols()) throw ShapeError("exchange matrix needs rows >= cols");
    skew_symmetrizer(b);  // throws when not skew-symmetrizable

    MatrixClass out;
    ExplorationReport& rep = out.report;
    std::unordered_map<Matrix, std::size_t> seen;
    auto add = [&](Matrix canon, Matrix repr, std::size_t parent, std::size_t k) {
        seen.emplace(canon, out.canonical.size());
        out.canonical.push_back(std::move(canon));
        out.representative.push_back(std::move(repr));
        out.parent.push_back(parent);
        out.via.push_back(k);
    };
    add(canonical_form(b).matrix, b, 0, 0);
    rep.depth_profile.push_back(1);
    if (auto w = infinite_pair(b)) {
        rep.witness = w;
        if (opt.abort_on_witness) {
            rep.status = ExploreStatus::AbortedInfiniteWitness;
            rep.count = 1;
            return out;
        }
    }

    std::size_t n = b.cols();
    std::vector<std::size_t> frontier{0};
    std::size_t depth = 0;
    rep.status = ExploreStatus::Closed;
    while (!frontier.empty()) {
        if (opt.max_depth && depth >= *opt.max_depth) {
            rep.status = ExploreStatus::DepthCapped;
            break;
        }
        ++depth;
        std::size_t tasks = frontier.size() * n;
        std::vector<Matrix> mutated(tasks), canon(tasks);
        detail::parallel_for(tasks, opt.threads, [&](std::size_t t) {
            mutated[t] = mutate(out.representative[frontier[t / n]], t % n);
            canon[t] = canonical_form(mutated[t]).matrix;
        });
        std::vector<std::size_t> next;
        bool stop = false;
        for (std::size_t t = 0; t < tasks && !stop; ++t) {
            if (seen.count(canon[t])) continue;
            if (out.canonical.size() >= opt.max_states) {
                rep.status = ExploreStatus::DepthCapped;
                stop = true;
                break;
            }
            std::size_t id = out.canonical.size();
            add(std::move(canon[t]), std::move(mutated[t]), frontier[t / n], t % n);
            next.push_back(id);
            if (!rep.witness) {
                if (auto w = infinite_pair(out.representative[id])) {
                    w->depth = depth;
                    w->word = out.word(id);
                    rep.witness = w;
                    if (opt.abort_on_witness) {
                        rep.status = ExploreStatus::AbortedInfiniteWitness;
                        stop = true;
                    }
                }
            }
        }
        rep.depth_profile.push_back(out.canonical.size());
        if (stop) break;
        frontier = std::move(next);
    }
    rep.count = out.canonical.size();
    return out;
}

// ---- seed patterns --------------------------------------------------------

namespace {

using Id = uint32_t;

// A seed stored as interned ids (all m rows) plus its matrix, with mutable
// positions sorted by id (unless labeled).
struct State {
    std::vector<Id> ids;
    Matrix b;
    friend bool operator==(const State& x, const State& y) { return x.ids == y.ids && x.b == y.b; }
};

struct StateHash {
    std::size_t operator()(const State& s) const {
        std::size_t h = s.b.hash();
        for (Id v : s.ids) h = h * 1000003u ^ v;
        return h;
    }
};

struct KeyHash {
    std::size_t operator()(const std::vector<int64_t>& k) const {
        std::size_t h = 1469598103934665603ull;
        for (int64_t v : k) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
        return h;
    }
};

State normalize(State s, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t c) { return s.ids[a] < s.ids[c]; });
    // equal ids inside one seed would mean a degenerate cluster; break ties
    // by the smallest matrix like canonicalize does
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        while (j < n && s.ids[perm[j]] == s.ids[perm[i]]) ++j;
        if (j - i > 1) groups.emplace_back(i, j);
        i = j;
    }
    std::vector<std::size_t> best = perm;
    if (!groups.empty()) {
        Matrix best_m = permute_mutable(s.b, perm);
        while (true) {
            std::size_t g = 0;
            for (; g < groups.size(); ++g)
                if (std::next_permutation(perm.begin() + groups[g].first, perm.begin() + groups[g].second)) break;
            if (g == groups.size()) break;
            Matrix m = permute_mutable(s.b, perm);
            if (m < best_m) {
                best_m = std::move(m);
                best = perm;
            }
        }
    }
    State out{s.ids, permute_mutable(s.b, best)};
    for (std::size_t p = 0; p < n; ++p) out.ids[p] = s.ids[best[p]];
    return out;
}

// (x_k, sorted M+ factors, sorted M- factors) with the two monomials put in a
// fixed order, since the relation is symmetric in them.
std::vector<int64_t> exchange_key(const State& s, std::size_t k) {
    std::vector<std::pair<int64_t, int64_t>> plus, minus;
    for (std::size_t i = 0; i < s.b.rows(); ++i) {
        const Integer& e = s.b(i, k);
        if (e.is_zero()) continue;
        (e.sign() > 0 ? plus : minus).emplace_back(s.ids[i], to_int(abs(e)));
    }
    std::sort(plus.begin(), plus.end());
    std::sort(minus.begin(), minus.end());
    if (minus < plus) std::swap(plus, minus);
    std::vector<int64_t> key{static_cast<int64_t>(s.ids[k]), static_cast<int64_t>(plus.size())};
    for (auto& [v, e] : plus) key.insert(key.end(), {v, e});
    for (auto& [v, e] : minus) key.insert(key.end(), {v, e});
    return key;
}

LaurentPolynomial exchange_from_key(const std::vector<int64_t>& key, const std::vector<LaurentPolynomial>& vars) {
    const LaurentPolynomial& xk = vars[static_cast<std::size_t>(key[0])];
    std::size_t nv = xk.nvars();
    std::size_t np = static_cast<std::size_t>(key[1]);
    LaurentPolynomial plus = LaurentPolynomial::constant(nv, 1), minus = plus;
    for (std::size_t t = 2, idx = 0; t < key.size(); t += 2, ++idx) {
        LaurentPolynomial f = vars[static_cast<std::size_t>(key[t])].pow(static_cast<unsigned>(key[t + 1]));
        if (idx < np)
            plus = plus * f;
        else
            minus = minus * f;
    }
    try {
        return LaurentPolynomial::exact_div(plus + minus, xk);
    } catch (const NotDivisible& e) {
        throw LaurentViolation(std::string("exchange relation is not Laurent: ") + e.what());
    }
}

}  // namespace

SeedPattern explore_seed_pattern(const Seed& s0, const ExploreOptions& opt) {
    std::size_t n = s0.n_mutable(), m = s0.n_total();
    if (s0.cluster.size() != m) throw ShapeError("seed cluster size does not match the matrix");
    skew_symmetrizer(s0.matrix);

    std::vector<LaurentPolynomial> vars;
    std::unordered_map<LaurentPolynomial, Id> intern;
    auto id_of = [&](const LaurentPolynomial& p) {
        auto it = intern.find(p);
        if (it != intern.end()) return it->second;
        Id id = static_cast<Id>(vars.size());
        intern.emplace(p, id);
        vars.push_back(p);
        return id;
    };

    State start{{}, s0.matrix};
    for (const auto& x : s0.cluster) start.ids.push_back(id_of(x));
    if (!opt.labeled) start = normalize(std::move(start), n);

    SeedPattern out;
    ExplorationReport& rep = out.report;
    std::unordered_set<State, StateHash> seen;
    std::vector<bool> mutable_var;  // indexed by id
    auto mark = [&](const State& s) {
        for (std::size_t p = 0; p < n; ++p) {
            if (s.ids[p] >= mutable_var.size()) mutable_var.resize(s.ids[p] + 1, false);
            if (!mutable_var[s.ids[p]]) {
                mutable_var[s.ids[p]] = true;
                out.variables.push_back(vars[s.ids[p]]);
            }
        }
    };
    auto keep = [&](const State& s) {
        if (!opt.keep_seeds) return;
        Seed seed{s.b, {}};
        for (Id v : s.ids) seed.cluster.push_back(vars[v]);
        out.seeds.push_back(opt.labeled ? seed : canonicalize(seed));
    };
    seen.insert(start);
    mark(start);
    keep(start);
    rep.depth_profile.push_back(1);

    std::unordered_map<std::vector<int64_t>, Id, KeyHash> cache;
    std::vector<State> frontier{start};
    std::size_t depth = 0;
    rep.status = ExploreStatus::Closed;
    while (!frontier.empty()) {
        if (opt.max_depth && depth >= *opt.max_depth) {
            rep.status = ExploreStatus::DepthCapped;
            break;
        }
        ++depth;
        std::size_t tasks = frontier.size() * n;
        std::vector<std::vector<int64_t>> keys(tasks);
        detail::parallel_for(tasks, opt.threads, [&](std::size_t t) { keys[t] = exchange_key(frontier[t / n], t % n); });

        // cache misses, in first-seen order
        std::vector<std::size_t> miss;
        std::unordered_map<std::vector<int64_t>, std::size_t, KeyHash> miss_index;
        for (std::size_t t = 0; t < tasks; ++t)
            if (!cache.count(keys[t]) && miss_index.emplace(keys[t], miss.size()).second) miss.push_back(t);
        std::vector<LaurentPolynomial> fresh(miss.size());
        detail::parallel_for(miss.size(), opt.threads, [&](std::size_t i) { fresh[i] = exchange_from_key(keys[miss[i]], vars); });
        rep.divisions += miss.size();
        for (std::size_t i = 0; i < miss.size(); ++i) cache.emplace(keys[miss[i]], id_of(fresh[i]));

        std::vector<State> built(tasks);
        detail::parallel_for(tasks, opt.threads, [&](std::size_t t) {
            const State& s = frontier[t / n];
            std::size_t k = t % n;
            State x{s.ids, mutate(s.b, k)};
            x.ids[k] = cache.at(keys[t]);
            built[t] = opt.labeled ? std::move(x) : normalize(std::move(x), n);
        });
        std::vector<State> next;
        bool stop = false;
        for (std::size_t t = 0; t < tasks; ++t) {
            if (seen.count(built[t])) continue;
            if (seen.size() >= opt.max_states) {
                rep.status = ExploreStatus::DepthCapped;
                stop = true;
                break;
            }
            seen.insert(built[t]);
            mark(built[t]);
            keep(built[t]);
            next.push_back(std::move(built[t]));
        }
        rep.depth_profile.push_back(seen.size());
        if (stop) break;
        frontier = std::move(next);
    }
    rep.count = seen.size();
    rep.variables = out.variables.size();
    return out;
}

// ---- queries ----------------------------------------------------------------

FiniteTypeDecision decide_finite_type(const Matrix& b, const ExploreOptions& opt) {
    ExploreOptions o = opt;
    o.abort_on_witness = true;
    MatrixClass mc = explore_matrix_class(b.top_square(), o);
    FiniteTypeDecision d;
    d.class_size = mc.report.count;
    d.witness = mc.report.witness;
    switch (mc.report.status) {
        case ExploreStatus::Closed: d.kind = FiniteTypeDecision::Finite; break;
        case ExploreStatus::AbortedInfiniteWitness: d.kind = FiniteTypeDecision::Infinite; break;
        case ExploreStatus::DepthCapped: d.kind = FiniteTypeDecision::Unknown; break;
    }
    return d;
}

EmbeddingResult is_embeddable(const Matrix& q, const Matrix& r, const ExploreOptions& opt) {
    Matrix qs = q.top_square(), rs = r.top_square();
    EmbeddingResult res;
    std::size_t k = qs.cols(), n = rs.cols();
    if (k > n) {
        res.verdict = Verdict::No;
        return res;
    }
    if (k == 0) {
        res.verdict = Verdict::Yes;
        return res;
    }
    Matrix target = canonical_form(qs).matrix;
    ExploreOptions o = opt;
    o.abort_on_witness = false;
    MatrixClass mc = explore_matrix_class(rs, o);
    std::vector<std::size_t> pick(k);
    for (std::size_t id = 0; id < mc.representative.size(); ++id) {
        const Matrix& mem = mc.representative[id];
        // k-subsets of 0..n-1 in lexicographic order
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            if (canonical_form(restrict_matrix(mem, pick)).matrix == target) {
                res.verdict = Verdict::Yes;
                res.subset = pick;
                res.word = mc.word(id);
                return res;
            }
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    res.verdict = mc.report.status == ExploreStatus::Closed ? Verdict::No : Verdict::Unknown;
    return res;
}

Verdict mutation_equivalent(const Matrix& b1, const Matrix& b2, const ExploreOptions& opt) {
    if (b1.rows() != b2.rows() || b1.cols() != b2.cols()) return Verdict::No;
    Matrix target = canonical_form(b2).matrix;
    ExploreOptions o = opt;
    o.abort_on_witness = false;
    MatrixClass mc = explore_matrix_class(b1, o);
    for (const Matrix& c : mc.canonical)
        if (c == target) return Verdict::Yes;
    return mc.report.status == ExploreStatus::Closed ? Verdict::No : Verdict::Unknown;
}

}  // namespace cluster
