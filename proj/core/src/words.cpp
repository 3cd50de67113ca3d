#include "repvar/words.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "repvar/errors.hpp"

namespace repvar {

Word inverse_word(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (auto& l : r) l = -l;
    return r;
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word power(const Word& w, int n) {
    if (n < 0) return power(inverse_word(w), -n);
    Word r;
    r.reserve(w.size() * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r.insert(r.end(), w.begin(), w.end());
    return r;
}

Word free_reduce(const Word& w) {
    Word out;
    for (auto l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word parse_word(const std::string& letters) {
    Word w;
    for (char c : letters) {
        if (c == ' ' || c == '\t') continue;
        if (c >= 'a' && c <= 'z')
            w.push_back(static_cast<std::int32_t>(c - 'a' + 1));
        else if (c >= 'A' && c <= 'Z')
            w.push_back(-static_cast<std::int32_t>(c - 'A' + 1));
        else
            throw validation_error(std::string("parse_word: unexpected character '") + c + "'");
    }
    return w;
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (auto l : w) {
        const int g = std::abs(l) - 1;
        if (g >= 26) throw validation_error("word_to_string: generator index beyond z");
        s += static_cast<char>((l > 0 ? 'a' : 'A') + g);
    }
    return s;
}

Presentation::Presentation(int n, std::vector<Word> rels)
    : n_generators(n), relators(std::move(rels)) {
    validate();
}

void Presentation::validate() const {
    if (n_generators < 1) throw validation_error("Presentation: need at least one generator");
    if (n_generators > 64) throw validation_error("Presentation: more than 64 generators unsupported");
    for (const auto& r : relators)
        for (auto l : r) {
            if (l == 0 || std::abs(l) > n_generators)
                throw validation_error("Presentation: relator letter out of range");
        }
}

Presentation free_group(int n) {
    if (n < 1) throw validation_error("free_group: n must be >= 1");
    return Presentation(n, {});
}

Presentation surface_group(int genus) {
    if (genus < 1) throw validation_error("surface_group: genus must be >= 1");
    Word rel;
    for (int i = 0; i < genus; ++i) {
        const std::int32_t a = 2 * i + 1, b = 2 * i + 2;
        rel.insert(rel.end(), {a, b, -a, -b});
    }
    return Presentation(2 * genus, {rel});
}

Presentation torus_group() { return surface_group(1); }

Presentation torus_knot_group(int a, int b) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1)
        throw validation_error("torus_knot_group: a, b must be coprime positive integers");
    Word rel = concat(power(Word{1}, a), power(Word{2}, -b));
    return Presentation(2, {rel});
}

Word two_bridge_word(int a, int b) {
    if (a < 3 || a % 2 == 0) throw validation_error("two_bridge_word: a must be odd and >= 3");
    if (b % 2 == 0 || b <= -a || b >= a)
        throw validation_error("two_bridge_word: b must be odd with -a < b < a");
    if (std::gcd(a, std::abs(b)) != 1)
        throw validation_error("two_bridge_word: a and b must be coprime");
    auto floor_div = [](long long p, long long q) {
        long long d = p / q;
        if ((p % q != 0) && ((p < 0) != (q < 0))) --d;
        return d;
    };
    Word w;
    w.reserve(a - 1);
    for (int k = 1; k < a; ++k) {
        const int sign = (floor_div(static_cast<long long>(k) * b, a) % 2 == 0) ? 1 : -1;
        const std::int32_t gen = (k % 2 == 1) ? 1 : 2;
        w.push_back(sign * gen);
    }
    return w;
}

Presentation two_bridge_group(int a, int b) {
    const Word w = two_bridge_word(a, b);
    // relation w u = v w, spelled as w u w^-1 v^-1
    Word rel = concat(concat(w, Word{1}), concat(inverse_word(w), Word{-2}));
    return Presentation(2, {rel});
}

Representation Representation::checked(const Presentation& p, std::vector<SU2> images,
                                       double tol) {
    if (static_cast<int>(images.size()) != p.n_generators)
        throw validation_error("Representation: one image per generator required");
    Representation rep;
    rep.images = std::move(images);
    for (const auto& r : p.relators) {
        const SU2 v = evaluate_word(rep, r);
        if (v.distance(SU2::identity()) > tol)
            throw tolerance_error("Representation: relator evaluates away from the identity");
    }
    return rep;
}

Representation Representation::raw(std::vector<SU2> images) {
    Representation rep;
    rep.images = std::move(images);
    return rep;
}

SU2 evaluate_word(const Representation& rep, const Word& w) {
    SU2 q = SU2::identity();
    for (auto l : w) {
        const int g = std::abs(l) - 1;
        if (g < 0 || g >= rep.n_generators())
            throw validation_error("evaluate_word: generator index out of range");
        q *= (l > 0) ? rep.images[g] : rep.images[g].inverse();
    }
    return q;
}

Eigen::Matrix3d fox_block(const Representation& rep, const Word& relator, int gen) {
    Eigen::Matrix3d block = Eigen::Matrix3d::Zero();
    SU2 prefix = SU2::identity();
    for (auto l : relator) {
        const int g = std::abs(l) - 1;
        if (g < 0 || g >= rep.n_generators())
            throw validation_error("fox_block: generator index out of range");
        if (l > 0) {
            if (std::abs(l) == gen) block += adjoint_matrix(prefix);
            prefix *= rep.images[g];
        } else {
            prefix *= rep.images[g].inverse();
            if (std::abs(l) == gen) block -= adjoint_matrix(prefix);
        }
    }
    return block;
}

Eigen::Vector3d crossed_extension(const Representation& rep,
                                  const std::vector<Eigen::Vector3d>& cochain,
                                  const Word& w) {
    if (static_cast<int>(cochain.size()) != rep.n_generators())
        throw validation_error("crossed_extension: one su(2) value per generator required");
    Eigen::Vector3d val = Eigen::Vector3d::Zero();
    SU2 prefix = SU2::identity();
    for (auto l : w) {
        const int g = std::abs(l) - 1;
        if (g < 0 || g >= rep.n_generators())
            throw validation_error("crossed_extension: generator index out of range");
        if (l > 0) {
            val += adjoint_matrix(prefix) * cochain[g];
            prefix *= rep.images[g];
        } else {
            prefix *= rep.images[g].inverse();
            val -= adjoint_matrix(prefix) * cochain[g];
        }
    }
    return val;
}

} // namespace repvar
