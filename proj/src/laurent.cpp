#include "cluster/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "cluster/error.hpp"

namespace cluster {

namespace {

int32_t checked_add(int32_t a, int32_t b) {
    int32_t r;
    if (__builtin_add_overflow(a, b, &r)) throw InternalError("Laurent exponent overflow");
    return r;
}

int32_t checked_sub(int32_t a, int32_t b) {
    int32_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw InternalError("Laurent exponent overflow");
    return r;
}

}  // namespace

int grlex_compare(const int32_t* a, const int32_t* b, std::size_t n) {
    int64_t da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

// Open-addressing accumulator keyed by exponent vectors.
class TermTable {
public:
    explicit TermTable(std::size_t nv, std::size_t expected = 16) : nv_(nv) {
        std::size_t cap = 16;
        while (cap < expected * 2) cap <<= 1;
        slots_.assign(cap, 0);
        exps_.reserve(expected * nv);
        coeffs_.reserve(expected);
    }

    // Returns the term index; sets inserted when the exponent was new.
    std::size_t add(const int32_t* e, const Integer& c, bool* inserted = nullptr) {
        std::size_t mask = slots_.size() - 1;
        std::size_t h = hash(e) & mask;
        while (true) {
            uint32_t s = slots_[h];
            if (s == 0) break;
            std::size_t idx = s - 1;
            if (std::equal(e, e + nv_, exps_.data() + idx * nv_)) {
                coeffs_[idx] += c;
                if (inserted) *inserted = false;
                return idx;
            }
            h = (h + 1) & mask;
        }
        std::size_t idx = coeffs_.size();
        exps_.insert(exps_.end(), e, e + nv_);
        coeffs_.push_back(c);
        slots_[h] = static_cast<uint32_t>(idx + 1);
        if (inserted) *inserted = true;
        if (coeffs_.size() * 2 > slots_.size()) grow();
        return idx;
    }

    std::size_t size() const { return coeffs_.size(); }
    const int32_t* exp(std::size_t i) const { return exps_.data() + i * nv_; }
    Integer& coeff(std::size_t i) { return coeffs_[i]; }

    LaurentPolynomial extract() const {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) idx.push_back(i);
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t x, std::size_t y) { return grlex_compare(exp(x), exp(y), nv_) > 0; });
        LaurentPolynomial p(nv_);
        p.exps_.reserve(idx.size() * nv_);
        p.coeffs_.reserve(idx.size());
        for (std::size_t i : idx) {
            p.exps_.insert(p.exps_.end(), exp(i), exp(i) + nv_);
            p.coeffs_.push_back(coeffs_[i]);
        }
        return p;
    }

private:
    std::size_t hash(const int32_t* e) const {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (std::size_t i = 0; i < nv_; ++i) {
            h ^= static_cast<uint32_t>(e[i]);
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }

    void grow() {
        std::vector<uint32_t> next(slots_.size() * 2, 0);
        std::size_t mask = next.size() - 1;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            std::size_t h = hash(exp(i)) & mask;
            while (next[h]) h = (h + 1) & mask;
            next[h] = static_cast<uint32_t>(i + 1);
        }
        slots_.swap(next);
    }

    std::size_t nv_;
    std::vector<uint32_t> slots_;
    std::vector<int32_t> exps_;
    std::vector<Integer> coeffs_;
};

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, const Integer& c) {
    LaurentPolynomial p(nvars);
    if (!c.is_zero()) {
        p.exps_.assign(nvars, 0);
        p.coeffs_.push_back(c);
    }
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw IndexError("variable index out of range");
    LaurentPolynomial p(nvars);
    p.exps_.assign(nvars, 0);
    p.exps_[i] = 1;
    p.coeffs_.push_back(1);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(std::size_t nvars, const std::vector<int32_t>& exps, const Integer& c) {
    if (exps.size() != nvars) throw ShapeError("exponent vector has wrong length");
    LaurentPolynomial p(nvars);
    if (!c.is_zero()) {
        p.exps_ = exps;
        p.coeffs_.push_back(c);
    }
    return p;
}

int LaurentPolynomial::total_degree(std::size_t t) const {
    int d = 0;
    for (std::size_t i = 0; i < nv_; ++i) d += exponent(t)[i];
    return d;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

namespace {

void check_nvars(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.nvars() != b.nvars())
        throw ShapeError("Laurent polynomials in different variable counts (" + std::to_string(a.nvars()) + " vs " +
                         std::to_string(b.nvars()) + ")");
}

}  // namespace

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    check_nvars(a, b);
    std::size_t nv = a.nv_;
    LaurentPolynomial p(nv);
    p.exps_.reserve((a.size() + b.size()) * nv);
    p.coeffs_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto push = [&](const int32_t* e, Integer c) {
        if (c.is_zero()) return;
        p.exps_.insert(p.exps_.end(), e, e + nv);
        p.coeffs_.push_back(std::move(c));
    };
    while (i < a.size() || j < b.size()) {
        int c = (i == a.size()) ? -1 : (j == b.size()) ? 1 : grlex_compare(a.exponent(i), b.exponent(j), nv);
        if (c > 0) {
            push(a.exponent(i), a.coeffs_[i]);
            ++i;
        } else if (c < 0) {
            push(b.exponent(j), b.coeffs_[j]);
            ++j;
        } else {
            push(a.exponent(i), a.coeffs_[i] + b.coeffs_[j]);
            ++i;
            ++j;
        }
    }
    return p;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + (-b); }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    check_nvars(a, b);
    std::size_t nv = a.nv_;
    if (a.is_zero() || b.is_zero()) return LaurentPolynomial(nv);
    if (a.size() < b.size() && a.is_monomial()) return b * a;
    if (b.is_monomial()) {
        // graded-lex is translation invariant, so the order is kept
        LaurentPolynomial p(a);
        const int32_t* e = b.exponent(0);
        for (std::size_t t = 0; t < p.size(); ++t) {
            for (std::size_t v = 0; v < nv; ++v) p.exps_[t * nv + v] = checked_add(p.exps_[t * nv + v], e[v]);
            p.coeffs_[t] *= b.coeffs_[0];
        }
        return p;
    }
    TermTable table(nv, std::min<std::size_t>(a.size() * b.size(), 1u << 20));
    std::vector<int32_t> e(nv);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            for (std::size_t v = 0; v < nv; ++v) e[v] = checked_add(a.exponent(i)[v], b.exponent(j)[v]);
            table.add(e.data(), a.coeffs_[i] * b.coeffs_[j]);
        }
    return table.extract();
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
    LaurentPolynomial r = constant(nv_, 1), base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    check_nvars(a, b);
    std::size_t nv = a.nv_;
    if (b.is_zero()) throw DivisionByZero("Laurent division by zero");
    if (a.is_zero()) return LaurentPolynomial(nv);
    if (b.is_monomial()) {
        LaurentPolynomial q(a);
        const int32_t* e = b.exponent(0);
        for (std::size_t t = 0; t < q.size(); ++t) {
            for (std::size_t v = 0; v < nv; ++v) q.exps_[t * nv + v] = checked_sub(q.exps_[t * nv + v], e[v]);
            if (!(q.coeffs_[t] % b.coeffs_[0]).is_zero())
                throw NotDivisible("coefficient " + q.coeffs_[t].str() + " not divisible by " + b.coeffs_[0].str());
            q.coeffs_[t] /= b.coeffs_[0];
        }
        return q;
    }

    // Exponent box any exact quotient must live in.
    std::vector<int32_t> lo(nv, std::numeric_limits<int32_t>::max()), hi(nv, std::numeric_limits<int32_t>::min());
    std::vector<int32_t> blo = lo, bhi = hi;
    for (std::size_t t = 0; t < a.size(); ++t)
        for (std::size_t v = 0; v < nv; ++v) {
            lo[v] = std::min(lo[v], a.exponent(t)[v]);
            hi[v] = std::max(hi[v], a.exponent(t)[v]);
        }
    for (std::size_t t = 0; t < b.size(); ++t)
        for (std::size_t v = 0; v < nv; ++v) {
            blo[v] = std::min(blo[v], b.exponent(t)[v]);
            bhi[v] = std::max(bhi[v], b.exponent(t)[v]);
        }
    for (std::size_t v = 0; v < nv; ++v) {
        lo[v] = checked_sub(lo[v], blo[v]);
        hi[v] = checked_sub(hi[v], bhi[v]);
        if (lo[v] > hi[v]) throw NotDivisible("exponent ranges admit no quotient");
    }

    TermTable rem(nv, a.size() + a.size() / 2 + 16);
    auto cmp = [&](std::size_t x, std::size_t y) { return grlex_compare(rem.exp(x), rem.exp(y), nv) < 0; };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> heap(cmp);
    for (std::size_t t = 0; t < a.size(); ++t) heap.push(rem.add(a.exponent(t), a.coeffs_[t]));

    LaurentPolynomial q(nv);
    const int32_t* lt = b.exponent(0);
    const Integer& lc = b.coeffs_[0];
    std::vector<int32_t> qe(nv), e(nv);
    while (!heap.empty()) {
        std::size_t top = heap.top();
        heap.pop();
        if (rem.coeff(top).is_zero()) continue;
        for (std::size_t v = 0; v < nv; ++v) {
            qe[v] = checked_sub(rem.exp(top)[v], lt[v]);
            if (qe[v] < lo[v] || qe[v] > hi[v]) throw NotDivisible("leading-term elimination left the quotient box");
        }
        if (!(rem.coeff(top) % lc).is_zero()) throw NotDivisible("leading coefficient does not divide");
        Integer qc = rem.coeff(top) / lc;
        q.exps_.insert(q.exps_.end(), qe.begin(), qe.end());
        q.coeffs_.push_back(qc);
        rem.coeff(top) = 0;
        for (std::size_t j = 1; j < b.size(); ++j) {
            for (std::size_t v = 0; v < nv; ++v) e[v] = checked_add(qe[v], b.exponent(j)[v]);
            bool inserted = false;
            std::size_t idx = rem.add(e.data(), -(qc * b.coeffs_[j]), &inserted);
            if (inserted) heap.push(idx);
        }
    }
    if (q * b != a) throw InternalError("exact division verification failed");
    return q;
}

LaurentPolynomial LaurentPolynomial::remap(const std::vector<int>& map, std::size_t new_nvars) const {
    if (map.size() != nv_) throw ShapeError("remap table has wrong length");
    TermTable table(new_nvars, size() + 1);
    std::vector<int32_t> e(new_nvars);
    for (std::size_t t = 0; t < size(); ++t) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t v = 0; v < nv_; ++v) {
            if (map[v] < 0) continue;
            if (static_cast<std::size_t>(map[v]) >= new_nvars) throw IndexError("remap target out of range");
            e[map[v]] = checked_add(e[map[v]], exponent(t)[v]);
        }
        table.add(e.data(), coeffs_[t]);
    }
    return table.extract();
}

Integer LaurentPolynomial::value_at_ones() const {
    Integer s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

std::string LaurentPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t t = 0; t < size(); ++t) {
        const Integer& c = coeffs_[t];
        bool neg = c.sign() < 0;
        if (t == 0)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        Integer mag = abs(c);
        bool any = false;
        std::ostringstream mono;
        for (std::size_t v = 0; v < nv_; ++v) {
            int32_t x = exponent(t)[v];
            if (x == 0) continue;
            mono << (any ? "*" : "") << 'x' << (v + 1);
            if (x != 1) mono << '^' << x;
            any = true;
        }
        if (!any)
            os << mag;
        else if (mag.is_one())
            os << mono.str();
        else
            os << mag << '*' << mono.str();
    }
    return os.str();
}

std::size_t LaurentPolynomial::hash() const {
    uint64_t h = 0x84222325cbf29ce4ULL ^ nv_;
    for (int32_t x : exps_) h = (h ^ static_cast<uint32_t>(x)) * 0x100000001b3ULL;
    for (const auto& c : coeffs_) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
}

int compare(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.nv_ != b.nv_) return a.nv_ < b.nv_ ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t t = 0; t < a.size(); ++t) {
        int c = grlex_compare(a.exponent(t), b.exponent(t), a.nv_);
        if (c) return c;
        c = compare(a.coeffs_[t], b.coeffs_[t]);
        if (c) return c;
    }
    return 0;
}

// ---- parsing --------------------------------------------------------------

namespace {

struct Factor {
    std::size_t var;  // 0-based
    int32_t exp;
};

struct ParsedTerm {
    Integer coeff = 1;
    std::vector<Factor> factors;
};

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    std::vector<ParsedTerm> parse() {
        std::vector<ParsedTerm> terms;
        skip();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = (get() == '-') ? -1 : 1;
            skip();
        }
        while (true) {
            ParsedTerm t = term();
            if (sign < 0) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            skip();
            if (pos_ == s_.size()) break;
            char c = get();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            sign = (c == '-') ? -1 : 1;
            skip();
        }
        return terms;
    }

private:
    ParsedTerm term() {
        ParsedTerm t;
        while (true) {
            skip();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                t.coeff *= Integer::parse(digits());
            } else if (peek() == 'x') {
                get();
                std::string idx = digits();
                if (idx.empty()) fail("expected variable index after 'x'");
                int i = to_int(Integer::parse(idx));
                if (i < 1) fail("variable indices start at 1");
                int32_t e = 1;
                skip();
                if (peek() == '^') {
                    get();
                    skip();
                    int sgn = 1;
                    if (peek() == '-' || peek() == '+') sgn = (get() == '-') ? -1 : 1;
                    std::string d = digits();
                    if (d.empty()) fail("expected exponent");
                    e = sgn * to_int(Integer::parse(d));
                }
                t.factors.push_back({static_cast<std::size_t>(i - 1), e});
            } else {
                fail("expected coefficient or variable");
            }
            skip();
            if (peek() == '*') {
                get();
                continue;
            }
            return t;
        }
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("Laurent polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(const std::string& text, std::size_t nvars) {
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
    if (trimmed == "0") return LaurentPolynomial(nvars);
    auto terms = Parser(text).parse();
    std::size_t need = 0;
    for (const auto& t : terms)
        for (const auto& f : t.factors) need = std::max(need, f.var + 1);
    if (nvars == 0) nvars = need;
    if (need > nvars) throw ParseError("variable index exceeds declared variable count");
    TermTable table(nvars, terms.size() + 1);
    std::vector<int32_t> e(nvars);
    for (const auto& t : terms) {
        std::fill(e.begin(), e.end(), 0);
        for (const auto& f : t.factors) e[f.var] = checked_add(e[f.var], f.exp);
        table.add(e.data(), t.coeff);
    }
    return table.extract();
}

LaurentPolynomial lp_add(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + b; }
LaurentPolynomial lp_mul(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a * b; }
LaurentPolynomial lp_exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return LaurentPolynomial::exact_div(a, b);
}

}  // namespace cluster
