#include "propg/freelie.hpp"

#include <algorithm>
#include <cstddef>
#include <mutex>

#include "propg/detail/fp_matrix.hpp"
#include "propg/padic.hpp"

namespace propg {

namespace {

using Poly = std::map<std::vector<int>, BigInt>; // free associative polynomial

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            std::vector<int> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            BigInt& slot = out[w];
            slot += ca * cb;
            if (slot == 0)
                out.erase(w);
        }
    return out;
}

void poly_add_scaled(Poly& a, const Poly& b, const BigInt& c) {
    if (c == 0)
        return;
    for (const auto& [w, cb] : b) {
        BigInt& slot = a[w];
        slot += c * cb;
        if (slot == 0)
            a.erase(w);
    }
}

// standard (right) factorization of a Lyndon word: split before the
// lexicographically least proper suffix
std::size_t standard_split(const std::vector<int>& w) {
    std::size_t best = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (std::lexicographical_compare(w.begin() + static_cast<std::ptrdiff_t>(i), w.end(),
                                         w.begin() + static_cast<std::ptrdiff_t>(best), w.end()))
            best = i;
    }
    return best;
}

} // namespace

LyndonWord::LyndonWord(std::vector<int> letters) : letters_(std::move(letters)), degree_(0) {
    if (letters_.empty())
        throw DomainError("LyndonWord cannot be empty");
    for (int m : letters_) {
        if (!valid_generator(m))
            throw DomainError("generator degrees must be odd and >= 3");
        degree_ += m;
    }
    if (!is_lyndon(letters_))
        throw DomainError("word is not Lyndon");
}

bool LyndonWord::is_lyndon(std::span<const int> w) {
    if (w.empty())
        return false;
    const std::size_t n = w.size();
    for (std::size_t shift = 1; shift < n; ++shift) {
        // compare w with its rotation by shift
        bool smaller = false, larger = false;
        for (std::size_t i = 0; i < n; ++i) {
            int a = w[i];
            int b = w[(i + shift) % n];
            if (a < b) {
                smaller = true;
                break;
            }
            if (a > b) {
                larger = true;
                break;
            }
        }
        if (!smaller || larger)
            return false; // equal rotation or strictly smaller rotation
    }
    return true;
}

std::string LyndonWord::str() const {
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i)
            s += '.';
        s += std::to_string(letters_[i]);
    }
    return s;
}

LieElement LieElement::generator(int m) {
    if (!LyndonWord::valid_generator(m))
        throw DomainError("generator degrees must be odd and >= 3");
    LieElement e;
    e.coeffs_.emplace(std::vector<int>{m}, 1);
    return e;
}

LieElement LieElement::basis_word(const LyndonWord& w) {
    LieElement e;
    e.coeffs_.emplace(w.letters(), 1);
    return e;
}

bool LieElement::is_homogeneous() const {
    std::optional<int> d;
    for (const auto& [w, c] : coeffs_) {
        int deg = 0;
        for (int m : w)
            deg += m;
        if (!d)
            d = deg;
        else if (*d != deg)
            return false;
    }
    return true;
}

std::optional<int> LieElement::degree() const {
    if (coeffs_.empty())
        return std::nullopt;
    if (!is_homogeneous())
        throw DomainError("degree of a mixed-degree element");
    int deg = 0;
    for (int m : coeffs_.begin()->first)
        deg += m;
    return deg;
}

LieElement LieElement::operator+(const LieElement& o) const {
    LieElement out = *this;
    poly_add_scaled(out.coeffs_, o.coeffs_, 1);
    return out;
}

LieElement LieElement::operator-(const LieElement& o) const {
    LieElement out = *this;
    poly_add_scaled(out.coeffs_, o.coeffs_, -1);
    return out;
}

LieElement LieElement::scaled(const BigInt& c) const {
    LieElement out;
    if (c == 0)
        return out;
    for (const auto& [w, v] : coeffs_)
        out.coeffs_.emplace(w, c * v);
    return out;
}

std::string LieElement::str() const {
    if (coeffs_.empty())
        return "0";
    std::string s;
    for (const auto& [w, c] : coeffs_) {
        if (!s.empty())
            s += " + ";
        s += c.str();
        s += "*[";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i)
                s += '.';
            s += std::to_string(w[i]);
        }
        s += ']';
    }
    return s;
}

namespace {

const Poly& expansion(const std::vector<int>& w);

Poly build_expansion(const std::vector<int>& w) {
    if (w.size() == 1) {
        Poly p;
        p.emplace(w, 1);
        return p;
    }
    std::size_t split = standard_split(w);
    std::vector<int> u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<int> v(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
    const Poly& pu = expansion(u);
    const Poly& pv = expansion(v);
    Poly out = poly_mul(pu, pv);
    poly_add_scaled(out, poly_mul(pv, pu), -1);
    return out;
}

const Poly& expansion(const std::vector<int>& w) {
    static std::map<std::vector<int>, Poly> cache;
    static std::recursive_mutex mutex;
    std::lock_guard<std::recursive_mutex> lock(mutex);
    auto it = cache.find(w);
    if (it == cache.end())
        it = cache.emplace(w, build_expansion(w)).first;
    return it->second;
}

// Triangular rewriting: the least word of a Lie polynomial is Lyndon and
// carries the coefficient of that basis element.
LieElement lie_from_associative(Poly poly) {
    Poly coords;
    while (!poly.empty()) {
        const std::vector<int> w = poly.begin()->first;
        const BigInt coeff = poly.begin()->second;
        if (!LyndonWord::is_lyndon(w))
            throw InternalError("polynomial is not a Lie element");
        poly_add_scaled(poly, expansion(w), -coeff);
        coords.emplace(w, coeff);
    }
    LieElement out;
    for (auto& [w, c] : coords)
        out = out + LieElement::basis_word(LyndonWord(w)).scaled(c);
    return out;
}

} // namespace

LieElement bracket(const LieElement& a, const LieElement& b) {
    Poly pa, pb;
    for (const auto& [w, c] : a.coefficients())
        poly_add_scaled(pa, expansion(w), c);
    for (const auto& [w, c] : b.coefficients())
        poly_add_scaled(pb, expansion(w), c);
    Poly comm = poly_mul(pa, pb);
    poly_add_scaled(comm, poly_mul(pb, pa), -1);
    return lie_from_associative(std::move(comm));
}

std::vector<std::vector<LyndonWord>> lyndon_basis(int max_degree) {
    if (max_degree < 3)
        throw DomainError("lyndon_basis needs max_degree >= 3");
    if (max_degree > kMaxLieDegree)
        throw BudgetError("lyndon_basis degree exceeds the cap of " +
                          std::to_string(kMaxLieDegree));
    std::vector<std::vector<LyndonWord>> out(static_cast<std::size_t>(max_degree) + 1);
    std::vector<int> word;
    // depth-first enumeration of all words of total degree <= max_degree
    auto extend = [&](auto&& self, int degree) -> void {
        for (int g = 3; degree + g <= max_degree; g += 2) {
            word.push_back(g);
            if (LyndonWord::is_lyndon(word))
                out[static_cast<std::size_t>(degree + g)].emplace_back(word);
            self(self, degree + g);
            word.pop_back();
        }
    };
    extend(extend, 0);
    for (auto& bucket : out)
        std::sort(bucket.begin(), bucket.end());
    return out;
}

int64_t associative_dimension(int degree, std::span<const int> generator_degrees) {
    if (degree < 0)
        throw DomainError("degree must be non-negative");
    if (degree > kMaxLieDegree)
        throw BudgetError("associative_dimension degree exceeds the cap of " +
                          std::to_string(kMaxLieDegree));
    std::vector<int64_t> a(static_cast<std::size_t>(degree) + 1, 0);
    a[0] = 1;
    for (int n = 1; n <= degree; ++n)
        for (int g : generator_degrees)
            if (g >= 1 && g <= n)
                a[static_cast<std::size_t>(n)] += a[static_cast<std::size_t>(n - g)];
    return a[static_cast<std::size_t>(degree)];
}

int64_t associative_dimension(int degree) {
    std::vector<int> gens;
    for (int g = 3; g <= degree; g += 2)
        gens.push_back(g);
    return associative_dimension(degree, gens);
}

int64_t graded_dimension(int degree, std::span<const int> generator_degrees) {
    if (degree < 1)
        throw DomainError("graded_dimension needs degree >= 1");
    if (degree > kMaxLieDegree)
        throw BudgetError("graded_dimension degree exceeds the cap of " +
                          std::to_string(kMaxLieDegree));
    const std::size_t top = static_cast<std::size_t>(degree);
    std::vector<int64_t> a(top + 1, 0);
    a[0] = 1;
    for (std::size_t n = 1; n <= top; ++n)
        for (int g : generator_degrees)
            if (g >= 1 && static_cast<std::size_t>(g) <= n)
                a[n] += a[n - static_cast<std::size_t>(g)];

    // peel off (1 - t^n)^(-d_n) factors until the product matches a(t)
    std::vector<int64_t> b(top + 1, 0);
    b[0] = 1;
    std::vector<int64_t> dims(top + 1, 0);
    for (std::size_t n = 1; n <= top; ++n) {
        int64_t d = a[n] - b[n];
        if (d < 0)
            throw InternalError("dimension recursion produced a negative rank");
        dims[n] = d;
        if (d == 0)
            continue;
        // multiply b by (1 - t^n)^(-d) = sum over i of C(d-1+i, i) t^(n i)
        std::vector<int64_t> nb(top + 1, 0);
        for (std::size_t j = 0; j <= top; ++j) {
            if (b[j] == 0)
                continue;
            int64_t binom = 1;
            for (std::size_t i = 0; j + i * n <= top; ++i) {
                nb[j + i * n] += b[j] * binom;
                binom = binom * (d + static_cast<int64_t>(i)) / (static_cast<int64_t>(i) + 1);
            }
        }
        b = std::move(nb);
    }
    return dims[top];
}

int64_t graded_dimension(int degree) {
    std::vector<int> gens;
    for (int g = 3; g <= degree; g += 2)
        gens.push_back(g);
    return graded_dimension(degree, gens);
}

namespace {

std::size_t rank_over_q(std::vector<std::vector<BigInt>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m.front().size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows)
            continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0)
                continue;
            BigInt f = m[r][c], g = m[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] = m[r][k] * g - m[rank][k] * f;
        }
        ++rank;
    }
    return rank;
}

uint64_t reduce_mod(const BigInt& v, uint64_t p) {
    BigInt r = v % p;
    if (r < 0)
        r += p;
    return r.convert_to<uint64_t>();
}

} // namespace

LieRank rank_of(std::span<const LieElement> elements, int degree, uint64_t p) {
    if (!is_odd_prime(p))
        throw DomainError("rank_of requires an odd prime");
    if (elements.empty())
        return {0, 0};
    std::map<std::vector<int>, std::size_t> columns;
    for (const auto& e : elements) {
        if (e.is_zero())
            continue;
        auto d = e.degree(); // DomainError on mixed input
        if (d && *d != degree)
            throw DomainError("rank_of: element degree does not match");
        for (const auto& [w, c] : e.coefficients())
            columns.emplace(w, 0);
    }
    std::size_t col = 0;
    for (auto& [w, pos] : columns)
        pos = col++;
    const std::size_t ncols = std::max<std::size_t>(columns.size(), 1);

    std::vector<std::vector<BigInt>> mq(elements.size(), std::vector<BigInt>(ncols, 0));
    detail::FpMatrix mp(p, elements.size(), ncols);
    for (std::size_t r = 0; r < elements.size(); ++r)
        for (const auto& [w, c] : elements[r].coefficients()) {
            mq[r][columns.at(w)] = c;
            mp.at(r, columns.at(w)) = reduce_mod(c, p);
        }
    return {rank_over_q(std::move(mq)), mp.rank()};
}

} // namespace propg
