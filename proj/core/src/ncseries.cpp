#include "propg/ncseries.hpp"

#include <algorithm>

namespace propg {

namespace {

constexpr int kLenShift = 48;
constexpr uint64_t kLettersMask = (uint64_t(1) << kLenShift) - 1;

inline int key_length(uint64_t key) { return static_cast<int>(key >> kLenShift); }

inline uint64_t key_concat(uint64_t a, uint64_t b) {
    const uint64_t la = a >> kLenShift;
    const uint64_t lb = b >> kLenShift;
    const uint64_t letters = (a & kLettersMask) | ((b & kLettersMask) >> (4 * la));
    return ((la + lb) << kLenShift) | letters;
}

using Terms = std::vector<std::pair<uint64_t, uint64_t>>;

void normalize(Terms& t, uint64_t m) {
    std::sort(t.begin(), t.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < t.size();) {
        uint64_t key = t[i].first;
        uint64_t acc = 0;
        while (i < t.size() && t[i].first == key) {
            acc = detail::add_mod(acc, t[i].second, m);
            ++i;
        }
        if (acc != 0)
            t[out++] = {key, acc};
    }
    t.resize(out);
}

Terms merge_add(const Terms& a, const Terms& b, uint64_t m, bool subtract) {
    Terms out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            uint64_t v = subtract ? detail::sub_mod(0, b[j].second, m) : b[j].second;
            if (v != 0)
                out.emplace_back(b[j].first, v);
            ++j;
        } else {
            uint64_t v = subtract ? detail::sub_mod(a[i].second, b[j].second, m)
                                  : detail::add_mod(a[i].second, b[j].second, m);
            if (v != 0)
                out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

Terms mul_raw(const Terms& a, const Terms& b, int cls, uint64_t m) {
    Terms out;
    out.reserve(a.size() + b.size());
    for (const auto& [ka, ca] : a) {
        const int da = key_length(ka);
        for (const auto& [kb, cb] : b) {
            if (da + key_length(kb) > cls)
                break; // b is sorted by graded key
            out.emplace_back(key_concat(ka, kb), detail::mul_mod(ca, cb, m));
        }
    }
    normalize(out, m);
    return out;
}

Terms scaled_raw(const Terms& a, uint64_t c, uint64_t m) {
    Terms out;
    if (c == 0)
        return out;
    out.reserve(a.size());
    for (const auto& [k, v] : a) {
        uint64_t w = detail::mul_mod(v, c, m);
        if (w != 0)
            out.emplace_back(k, w);
    }
    return out;
}

Terms drop_constant(const Terms& a) {
    Terms out;
    out.reserve(a.size());
    for (const auto& t : a)
        if (t.first != 0)
            out.push_back(t);
    return out;
}

// C(a, k) as a residue mod p^N_work.  Exact to N_work - v_p(k!) digits,
// and k <= c keeps that loss inside the guard digits.
uint64_t binom_residue(uint64_t a, uint64_t k, uint64_t p, uint64_t m) {
    uint64_t num = 1 % m;
    for (uint64_t i = 0; i < k; ++i)
        num = detail::mul_mod(num, detail::sub_mod(a, i % m, m), m);
    uint64_t pe = 1, unit = 1 % m;
    for (uint64_t i = 1; i <= k; ++i) {
        uint64_t v = i;
        while (v % p == 0) {
            v /= p;
            pe *= p;
        }
        unit = detail::mul_mod(unit, v % m, m);
    }
    if (num % pe != 0)
        throw InternalError("binomial numerator not divisible by p-part of k!");
    return detail::mul_mod(num / pe, detail::inv_mod(unit, m), m);
}

void require_same_engine(const EnginePtr& a, const EnginePtr& b) {
    if (a.get() == b.get())
        return;
    if (!a || !b || !(a->config() == b->config()))
        throw ConfigMismatchError("operands belong to different engine configurations");
}

} // namespace

Word Word::single(int generator) {
    if (generator < 1 || generator > kMaxGenerator)
        throw DomainError("generator index out of range");
    return Word((uint64_t(1) << kLenShift) | (uint64_t(generator) << 44));
}

Word Word::from_letters(std::span<const int> letters) {
    if (letters.size() > kMaxLength)
        throw BudgetError("word length exceeds the packing cap");
    uint64_t bits = 0;
    int pos = 0;
    for (int g : letters) {
        if (g < 1 || g > kMaxGenerator)
            throw DomainError("generator index out of range");
        bits |= uint64_t(g) << (44 - 4 * pos);
        ++pos;
    }
    return Word((uint64_t(letters.size()) << kLenShift) | bits);
}

int Word::letter(int pos) const {
    if (pos < 0 || pos >= length())
        throw DomainError("word position out of range");
    return static_cast<int>((key_ >> (44 - 4 * pos)) & 0xF);
}

std::vector<int> Word::letters() const {
    std::vector<int> out;
    out.reserve(length());
    for (int i = 0; i < length(); ++i)
        out.push_back(letter(i));
    return out;
}

std::string Word::str() const {
    if (length() == 0)
        return "1";
    std::string s;
    for (int i = 0; i < length(); ++i) {
        if (i)
            s += '.';
        s += std::to_string(letter(i));
    }
    return s;
}

NcSeries::NcSeries(EnginePtr engine) : eng_(std::move(engine)) {
    if (!eng_)
        throw DomainError("NcSeries requires an engine");
}

PadicInt NcSeries::coefficient(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w.key(),
                               [](const auto& t, uint64_t k) { return t.first < k; });
    uint64_t res = (it != terms_.end() && it->first == w.key()) ? it->second : 0;
    return PadicInt::from_residue(eng_->prime(), eng_->working_precision(), res);
}

std::vector<std::pair<Word, PadicInt>> NcSeries::terms() const {
    std::vector<std::pair<Word, PadicInt>> out;
    out.reserve(terms_.size());
    for (const auto& [k, v] : terms_)
        out.emplace_back(Word::from_key(k),
                         PadicInt::from_residue(eng_->prime(), eng_->working_precision(), v));
    return out;
}

std::optional<int> NcSeries::min_degree_truncated() const {
    const uint64_t d = eng_->truncation_modulus();
    for (const auto& [k, v] : terms_)
        if (v % d != 0)
            return key_length(k);
    return std::nullopt;
}

std::map<Word, uint64_t> NcSeries::homogeneous_mod_p(int degree) const {
    std::map<Word, uint64_t> out;
    const uint64_t p = eng_->prime();
    for (const auto& [k, v] : terms_) {
        if (key_length(k) != degree)
            continue;
        uint64_t r = v % p;
        if (r != 0)
            out.emplace(Word::from_key(k), r);
    }
    return out;
}

bool NcSeries::equal_truncated(const NcSeries& o) const {
    require_same_engine(eng_, o.eng_);
    const uint64_t d = eng_->truncation_modulus();
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        // skip entries that vanish mod p^N
        if (i < terms_.size() && terms_[i].second % d == 0) {
            ++i;
            continue;
        }
        if (j < o.terms_.size() && o.terms_[j].second % d == 0) {
            ++j;
            continue;
        }
        if (i == terms_.size() || j == o.terms_.size())
            return false;
        if (terms_[i].first != o.terms_[j].first)
            return false;
        if (terms_[i].second % d != o.terms_[j].second % d)
            return false;
        ++i;
        ++j;
    }
    return true;
}

NcSeries NcSeries::operator+(const NcSeries& o) const {
    require_same_engine(eng_, o.eng_);
    return NcSeries(eng_, merge_add(terms_, o.terms_, eng_->modulus(), false));
}

NcSeries NcSeries::operator-(const NcSeries& o) const {
    require_same_engine(eng_, o.eng_);
    return NcSeries(eng_, merge_add(terms_, o.terms_, eng_->modulus(), true));
}

NcSeries NcSeries::operator*(const NcSeries& o) const {
    require_same_engine(eng_, o.eng_);
    return NcSeries(eng_, mul_raw(terms_, o.terms_, eng_->degree_class(), eng_->modulus()));
}

NcSeries NcSeries::scaled(const PadicInt& c) const {
    if (c.prime() != eng_->prime())
        throw ConfigMismatchError("scalar prime does not match the engine");
    if (c.precision() < eng_->working_precision())
        throw PrecisionError("scalar below working precision");
    return NcSeries(eng_, scaled_raw(terms_, c.residue() % eng_->modulus(), eng_->modulus()));
}

GroupElement::GroupElement(NcSeries s) : s_(std::move(s)) {
    if (s_.terms_.empty() || s_.terms_.front().first != 0 || s_.terms_.front().second != 1)
        throw DomainError("GroupElement requires constant coefficient exactly 1");
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    return GroupElement(s_ * o.s_);
}

GroupElement GroupElement::inverse() const {
    const auto& eng = s_.eng_;
    const uint64_t m = eng->modulus();
    const int cls = eng->degree_class();
    Terms u = drop_constant(s_.terms_);
    const Terms unit = {{0, 1}};
    Terms acc = unit;
    for (int i = 0; i < cls; ++i) {
        Terms prod = mul_raw(u, acc, cls, m);
        acc = merge_add(unit, prod, m, true); // 1 - u * acc
    }
    return GroupElement(NcSeries(eng, std::move(acc)));
}

GroupElement GroupElement::zp_power(const PadicInt& exponent) const {
    const auto& eng = s_.eng_;
    if (exponent.prime() != eng->prime())
        throw ConfigMismatchError("exponent prime does not match the engine");
    if (exponent.precision() < eng->working_precision())
        throw PrecisionError("zp_power exponent below working precision " +
                             std::to_string(eng->working_precision()));
    const uint64_t m = eng->modulus();
    const int cls = eng->degree_class();
    const uint64_t a = exponent.residue() % m;
    Terms u = drop_constant(s_.terms_);
    Terms acc = {{0, 1}};
    Terms upow = {{0, 1}};
    for (int k = 1; k <= cls; ++k) {
        upow = mul_raw(upow, u, cls, m);
        if (upow.empty())
            break;
        uint64_t bk = binom_residue(a, static_cast<uint64_t>(k), eng->prime(), m);
        if (bk == 0)
            continue;
        Terms part = scaled_raw(upow, bk, m);
        acc = merge_add(acc, part, m, false);
    }
    return GroupElement(NcSeries(eng, std::move(acc)));
}

GroupElement GroupElement::pow(int64_t e) const {
    return zp_power(s_.eng_->exact(e));
}

bool GroupElement::is_identity() const {
    const uint64_t d = s_.eng_->truncation_modulus();
    for (const auto& [k, v] : s_.terms_)
        if (k != 0 && v % d != 0)
            return false;
    return true;
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
    return a * b * a.inverse() * b.inverse();
}

std::optional<int> lcs_degree(const GroupElement& g) {
    const uint64_t d = g.engine()->truncation_modulus();
    for (const auto& [k, v] : g.series().terms())
        if (k.length() > 0 && v.residue() % d != 0)
            return k.length();
    return std::nullopt;
}

std::map<Word, uint64_t> leading_form(const GroupElement& g) {
    auto deg = lcs_degree(g);
    if (!deg)
        throw DomainError("leading_form of the identity element");
    return g.series().homogeneous_mod_p(*deg);
}

GroupElement substitute(const GroupElement& g, std::span<const GroupElement> images) {
    const auto& eng = g.engine();
    if (static_cast<int>(images.size()) != eng->generator_count())
        throw ConfigMismatchError("substitute needs one image per generator");
    std::vector<Terms> img;
    img.reserve(images.size());
    for (const auto& im : images) {
        require_same_engine(eng, im.engine());
        img.push_back(drop_constant(im.series().terms_));
    }
    const uint64_t m = eng->modulus();
    const int cls = eng->degree_class();
    Terms out;
    for (const auto& [key, coeff] : g.series().terms_) {
        const int len = key_length(key);
        if (len == 0) {
            out.emplace_back(0, coeff);
            continue;
        }
        Word w = Word::from_key(key);
        int first = w.letter(0);
        if (first > eng->generator_count())
            throw ConfigMismatchError("word letter outside the generator range");
        Terms prod = img[static_cast<std::size_t>(first - 1)];
        for (int pos = 1; pos < len && !prod.empty(); ++pos) {
            int l = w.letter(pos);
            if (l > eng->generator_count())
                throw ConfigMismatchError("word letter outside the generator range");
            prod = mul_raw(prod, img[static_cast<std::size_t>(l - 1)], cls, m);
        }
        Terms part = scaled_raw(prod, coeff, m);
        out.insert(out.end(), part.begin(), part.end());
    }
    normalize(out, m);
    return GroupElement(NcSeries(eng, std::move(out)));
}

GroupElement random_group_element(const EnginePtr& engine, RandomSource& rng) {
    const int r = engine->generator_count();
    const uint64_t p = engine->prime();
    const int factors = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(2 * engine->degree_class())));
    GroupElement g = engine->one();
    for (int i = 0; i < factors; ++i) {
        int k = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(r)));
        int64_t e = rng.signed_nonzero(p * p);
        g = g * engine->generator(k).pow(e);
    }
    return g;
}

Engine::Engine(EngineConfig cfg) : cfg_(std::move(cfg)) {
    if (!is_odd_prime(cfg_.prime))
        throw DomainError("engine prime must be an odd prime");
    if (cfg_.precision < 1)
        throw DomainError("engine precision must be >= 1");
    if (cfg_.degree_class < 1)
        throw DomainError("engine class must be >= 1");
    if (cfg_.degree_class > Word::kMaxLength)
        throw BudgetError("engine class exceeds the word-length cap of 12");
    if (cfg_.generator_count < 1)
        throw DomainError("engine needs at least one generator");
    if (cfg_.generator_count > Word::kMaxGenerator)
        throw BudgetError("generator count exceeds the packing cap of 15");
    if (cfg_.delta_twists.empty())
        cfg_.delta_twists.assign(static_cast<std::size_t>(cfg_.generator_count), 0);
    if (cfg_.gamma_twists.empty())
        cfg_.gamma_twists.assign(static_cast<std::size_t>(cfg_.generator_count), 0);
    if (cfg_.delta_twists.size() != static_cast<std::size_t>(cfg_.generator_count) ||
        cfg_.gamma_twists.size() != static_cast<std::size_t>(cfg_.generator_count))
        throw DomainError("twist vectors must have one entry per generator");

    unsigned __int128 words = 0, pw = 1;
    for (int d = 0; d <= cfg_.degree_class; ++d) {
        words += pw;
        pw *= static_cast<unsigned>(cfg_.generator_count);
    }
    if (words > cfg_.word_budget)
        throw BudgetError("word budget exceeded: " + std::to_string(static_cast<uint64_t>(words)) +
                          " words over budget " + std::to_string(cfg_.word_budget));

    n_work_ = cfg_.precision + static_cast<int>(vp_factorial(cfg_.prime, static_cast<uint64_t>(cfg_.degree_class)));
    modulus_ = detail::checked_pow(cfg_.prime, n_work_);
    if (modulus_ == 0)
        throw BudgetError("working modulus p^N_work exceeds the 62-bit capacity");
    trunc_modulus_ = detail::checked_pow(cfg_.prime, cfg_.precision);
    omega_ = teichmuller(cfg_.prime, static_cast<int64_t>(smallest_primitive_root(cfg_.prime)), n_work_).residue();
}

EnginePtr Engine::create(EngineConfig cfg) {
    return EnginePtr(new Engine(std::move(cfg)));
}

GroupElement Engine::one() const {
    NcSeries s(shared_from_this());
    s.terms_ = {{0, 1}};
    return GroupElement(std::move(s));
}

GroupElement Engine::generator(int k) const {
    if (k < 1 || k > cfg_.generator_count)
        throw DomainError("generator index out of range");
    NcSeries s(shared_from_this());
    s.terms_ = {{0, 1}, {Word::single(k).key(), 1}};
    return GroupElement(std::move(s));
}

PadicInt Engine::exact(int64_t v) const {
    return PadicInt(cfg_.prime, n_work_, v);
}

PadicInt Engine::teichmuller_unit() const {
    return PadicInt::from_residue(cfg_.prime, n_work_, omega_);
}

PadicInt Engine::chi_delta_power(int64_t e) const {
    const int64_t order = static_cast<int64_t>(cfg_.prime) - 1;
    int64_t r = e % order;
    if (r < 0)
        r += order;
    return PadicInt::from_residue(cfg_.prime, n_work_,
                                  detail::pow_mod(omega_, static_cast<uint64_t>(r), modulus_));
}

PadicInt Engine::chi_gamma_power(int64_t e) const {
    uint64_t base = (1 + cfg_.prime) % modulus_;
    if (e >= 0)
        return PadicInt::from_residue(cfg_.prime, n_work_,
                                      detail::pow_mod(base, static_cast<uint64_t>(e), modulus_));
    uint64_t inv = detail::inv_mod(base, modulus_);
    return PadicInt::from_residue(cfg_.prime, n_work_,
                                  detail::pow_mod(inv, static_cast<uint64_t>(-e), modulus_));
}

PadicInt Engine::delta_twist_unit(int k, int64_t conj_power) const {
    if (k < 1 || k > cfg_.generator_count)
        throw DomainError("generator index out of range");
    const int64_t order = static_cast<int64_t>(cfg_.prime) - 1;
    __int128 e = static_cast<__int128>(cfg_.delta_twists[static_cast<std::size_t>(k - 1)]) * conj_power;
    int64_t r = static_cast<int64_t>(e % order);
    return chi_delta_power(r);
}

PadicInt Engine::gamma_twist_unit(int k) const {
    if (k < 1 || k > cfg_.generator_count)
        throw DomainError("generator index out of range");
    return chi_gamma_power(cfg_.gamma_twists[static_cast<std::size_t>(k - 1)]);
}

} // namespace propg
