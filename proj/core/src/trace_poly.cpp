#include "repvar/trace_poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "repvar/errors.hpp"

namespace repvar {

TracePolynomial TracePolynomial::constant(long c) {
    TracePolynomial p;
    p.set({0, 0, 0}, BigInt(c));
    return p;
}

TracePolynomial TracePolynomial::monomial(int i, int j, int k, long c) {
    TracePolynomial p;
    p.set({i, j, k}, BigInt(c));
    return p;
}

void TracePolynomial::set(const Exponents& e, BigInt c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

TracePolynomial& TracePolynomial::operator-=(const TracePolynomial& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
    TracePolynomial r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            TracePolynomial::Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

TracePolynomial TracePolynomial::negated() const {
    TracePolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

double TracePolynomial::evaluate(double x, double y, double z) const {
    double total = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.convert_to<double>();
        for (int i = 0; i < e[0]; ++i) t *= x;
        for (int j = 0; j < e[1]; ++j) t *= y;
        for (int k = 0; k < e[2]; ++k) t *= z;
        total += t;
    }
    return total;
}

int TracePolynomial::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

int TracePolynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

TracePolynomial TracePolynomial::substitute_equal_traces() const {
    TracePolynomial r;
    for (const auto& [e, c] : terms_) {
        Exponents ne{e[0] + e[1], e[2], 0};
        auto it = r.terms_.find(ne);
        if (it == r.terms_.end()) {
            r.terms_.emplace(ne, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

namespace {

// print order: total degree desc, then y-, x-, z-exponent desc
bool print_before(const TracePolynomial::Exponents& a, const TracePolynomial::Exponents& b) {
    const int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    if (a[1] != b[1]) return a[1] > b[1];
    if (a[0] != b[0]) return a[0] > b[0];
    return a[2] > b[2];
}

std::string monomial_string(const TracePolynomial::Exponents& e) {
    static const char* names[3] = {"x", "y", "z"};
    std::string s;
    for (int v = 0; v < 3; ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[v];
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s;
}

} // namespace

std::string TracePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, BigInt>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return print_before(a.first, b.first); });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        const bool neg = c < 0;
        BigInt mag = neg ? BigInt(-c) : c;
        std::string mono = monomial_string(e);
        std::string coef;
        if (mag != 1 || mono.empty()) {
            coef = mag.str();
            if (!mono.empty()) coef += "*";
        }
        if (first) {
            out += (neg ? "-" : "") + coef + mono;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += coef + mono;
        }
    }
    return out;
}

TracePolynomial TracePolynomial::sign_normalized() const {
    if (terms_.empty()) return *this;
    auto lead = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (print_before(it->first, lead->first)) lead = it;
    return (lead->second < 0) ? negated() : *this;
}

// ---------------------------------------------------------------------------
// word reduction engine
// ---------------------------------------------------------------------------

namespace {

// letters encoded as int8: 1, -1 (A, A^-1), 2, -2 (B, B^-1)
using Key = std::string;

Key encode(const Word& w) {
    Key k;
    k.reserve(w.size());
    for (auto l : w) {
        switch (l) {
            case 1: k += 'a'; break;
            case -1: k += 'A'; break;
            case 2: k += 'b'; break;
            case -2: k += 'B'; break;
            default: throw validation_error("trace_polynomial: only 2-generator words supported");
        }
    }
    return k;
}

int neg_count(const Word& w) {
    int n = 0;
    for (auto l : w)
        if (l < 0) ++n;
    return n;
}

Word rotate(const Word& w, std::size_t r) {
    Word out;
    out.reserve(w.size());
    out.insert(out.end(), w.begin() + r, w.end());
    out.insert(out.end(), w.begin(), w.begin() + r);
    return out;
}

// canonical form under cyclic rotation and inversion, preferring
// fewer inverse letters (keeps the recursion measure monotone)
Word canonical(const Word& w) {
    if (w.empty()) return w;
    Word best;
    int best_neg = -1;
    Key best_key;
    const Word winv = inverse_word(w);
    for (const Word* base : {&w, &winv}) {
        const int nn = neg_count(*base);
        for (std::size_t r = 0; r < base->size(); ++r) {
            Word cand = rotate(*base, r);
            Key key = encode(cand);
            if (best_neg < 0 || nn < best_neg || (nn == best_neg && key < best_key)) {
                best = std::move(cand);
                best_neg = nn;
                best_key = std::move(key);
            }
        }
    }
    return best;
}

class Engine {
public:
    TracePolynomial reduce(const Word& word) {
        const Word w = canonical(word);
        const Key key = encode(w);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        TracePolynomial result;
        const std::size_t n = w.size();
        if (n == 0) {
            result = TracePolynomial::constant(2);
        } else if (n == 1) {
            result = (std::abs(w[0]) == 1) ? TracePolynomial::monomial(1, 0, 0)
                                           : TracePolynomial::monomial(0, 1, 0);
        } else if (int idx = last_negative(w); idx >= 0) {
            // rotate the inverse letter to the end: w ~ U X^-1, then
            // Tr(U X^-1) = Tr(U) Tr(X) - Tr(U X)
            Word rot = rotate(w, static_cast<std::size_t>(idx + 1) % n);
            Word U(rot.begin(), rot.end() - 1);
            const std::int32_t X = -rot.back();
            result = reduce(U) * reduce({X}) - reduce(concat(U, {X}));
        } else if (int pos = adjacent_pair(w); pos >= 0) {
            // rotate the doubled letter to the end: w ~ U X X, then by
            // Cayley-Hamilton Tr(U X X) = Tr(X) Tr(U X) - Tr(U)
            Word rot = rotate(w, static_cast<std::size_t>(pos + 2) % n);
            Word U(rot.begin(), rot.end() - 2);
            const std::int32_t X = rot.back();
            result = reduce({X}) * reduce(concat(U, {X})) - reduce(U);
        } else {
            // positive alternating word of even length: a power (XY)^k
            const Word C{w[0], w[1]};
            const std::size_t k = n / 2;
            if (k == 1)
                result = TracePolynomial::monomial(0, 0, 1);
            else
                result = reduce(C) * reduce(power(C, static_cast<int>(k - 1))) -
                         reduce(power(C, static_cast<int>(k - 2)));
        }
        memo_.emplace(key, result);
        return result;
    }

private:
    static int last_negative(const Word& w) {
        for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i)
            if (w[i] < 0) return i;
        return -1;
    }

    static int adjacent_pair(const Word& w) {
        const int n = static_cast<int>(w.size());
        for (int i = 0; i < n; ++i)
            if (w[i] == w[(i + 1) % n]) return i;
        return -1;
    }

    std::map<Key, TracePolynomial> memo_;
};

} // namespace

TracePolynomial trace_polynomial(const Word& w) {
    for (auto l : w)
        if (l == 0 || std::abs(l) > 2)
            throw validation_error("trace_polynomial: only 2-generator words supported");
    Engine engine;
    return engine.reduce(w);
}

} // namespace repvar
