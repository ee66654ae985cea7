#include "propg/bernoulli_iwasawa.hpp"

namespace propg {

namespace {

// sum of C(m+1, k) B_k over k <= m vanishes for m >= 1; solve for B_m.
std::vector<uint64_t> bernoulli_residues(uint64_t p) {
    if (p < 5)
        return {};
    const int64_t top = static_cast<int64_t>(p) - 3; // largest even index
    std::vector<uint64_t> fact(p, 1), inv_fact(p, 1);
    for (uint64_t i = 1; i < p; ++i)
        fact[i] = detail::mul_mod(fact[i - 1], i, p);
    inv_fact[p - 1] = detail::inv_mod(fact[p - 1], p);
    for (uint64_t i = p - 1; i > 0; --i)
        inv_fact[i - 1] = detail::mul_mod(inv_fact[i], i, p);
    auto binom = [&](int64_t n, int64_t k) {
        return detail::mul_mod(fact[static_cast<std::size_t>(n)],
                               detail::mul_mod(inv_fact[static_cast<std::size_t>(k)],
                                               inv_fact[static_cast<std::size_t>(n - k)], p),
                               p);
    };

    std::vector<uint64_t> b(static_cast<std::size_t>(top) + 1, 0);
    b[0] = 1;
    b[1] = p - detail::inv_mod(2, p); // B_1 = -1/2
    for (int64_t m = 2; m <= top; m += 2) {
        uint64_t sum = detail::add_mod(binom(m + 1, 0), // B_0 term
                                       detail::mul_mod(binom(m + 1, 1), b[1], p), p);
        for (int64_t k = 2; k < m; k += 2)
            sum = detail::add_mod(sum, detail::mul_mod(binom(m + 1, k), b[static_cast<std::size_t>(k)], p), p);
        uint64_t inv = detail::inv_mod(static_cast<uint64_t>(m + 1) % p, p);
        b[static_cast<std::size_t>(m)] = detail::mul_mod(detail::sub_mod(0, sum, p), inv, p);
    }

    std::vector<uint64_t> packed;
    packed.reserve(static_cast<std::size_t>((top - 2) / 2 + 1));
    for (int64_t m = 2; m <= top; m += 2)
        packed.push_back(b[static_cast<std::size_t>(m)]);
    return packed;
}

} // namespace

BernoulliTable BernoulliTable::compute(uint64_t p) {
    if (!is_odd_prime(p))
        throw DomainError("Bernoulli table requires an odd prime");
    return BernoulliTable(p, bernoulli_residues(p));
}

BernoulliTable BernoulliTable::from_residues(uint64_t p, std::vector<uint64_t> residues) {
    if (!is_odd_prime(p))
        throw DomainError("Bernoulli table requires an odd prime");
    std::size_t expected = p < 5 ? 0 : static_cast<std::size_t>((p - 3) / 2);
    if (residues.size() != expected)
        throw DomainError("Bernoulli residue vector has the wrong length for p");
    return BernoulliTable(p, std::move(residues));
}

uint64_t BernoulliTable::residue(int64_t m) const {
    if (m < 2 || m % 2 != 0 || m > static_cast<int64_t>(p_) - 3)
        throw DomainError("Bernoulli index out of range (need even m with 2 <= m <= p-3)");
    return residues_[static_cast<std::size_t>((m - 2) / 2)];
}

std::vector<IrregularPair> irregular_pairs(const BernoulliTable& table) {
    std::vector<IrregularPair> out;
    const auto& r = table.residues();
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] == 0)
            out.push_back({table.prime(), static_cast<int64_t>(2 * i + 2)});
    return out;
}

std::vector<IrregularPair> irregular_pairs(uint64_t p) {
    return irregular_pairs(BernoulliTable::compute(p));
}

bool is_regular(uint64_t p) {
    return irregular_pairs(p).empty();
}

BoundRow nm_bound(uint64_t p, int64_t m, bool vandiver_assumed) {
    if (!is_odd_prime(p))
        throw DomainError("nm_bound requires an odd prime");
    if (m < 3 || m % 2 == 0)
        throw DomainError("nm_bound requires odd m >= 3");
    const int64_t k = (m - 3) / (static_cast<int64_t>(p) - 1);
    const int64_t bound =
        static_cast<int64_t>(vp_factorial(p, static_cast<uint64_t>(k) * p)) -
        static_cast<int64_t>(vp_factorial(p, static_cast<uint64_t>(m - 1)));
    return BoundRow{p, m, k, bound, vandiver_assumed};
}

SigmaValuation sigma_valuation(const KappaModel& model, int64_t j) {
    const uint64_t p = model.p;
    if (!is_odd_prime(p))
        throw DomainError("sigma_valuation requires an odd prime");
    if (j < 0)
        throw DomainError("sigma_valuation requires j >= 0");
    if (model.base_index % 2 == 0 || model.base_index < 3 ||
        model.base_index > static_cast<int64_t>(p))
        throw DomainError("base index must be odd with 3 <= k <= p");
    if (model.base_valuation < 0)
        throw DomainError("base valuation must be >= 0");
    if (model.unit % p == 0)
        throw DomainError("scaling must be a unit mod p");

    const uint64_t ladder = vp_factorial(p, static_cast<uint64_t>(j) * p);
    const uint64_t closed = ladder + static_cast<uint64_t>(model.base_valuation);
    if (static_cast<uint64_t>(model.precision) <= ladder + static_cast<uint64_t>(model.base_valuation) + 4)
        throw PrecisionError("sigma_valuation precision too low: need N > v_p((jp)!) + v0 + 4");

    const uint64_t modulus = detail::checked_pow(p, model.precision);
    if (modulus == 0)
        throw BudgetError("sigma_valuation modulus exceeds the 62-bit capacity");

    uint64_t u = model.unit % modulus;
    for (int64_t i = 0; i < model.base_valuation; ++i)
        u = detail::mul_mod(u, p, modulus);
    const int64_t m = model.base_index + j * (static_cast<int64_t>(p) - 1);
    const uint64_t chi_m = detail::pow_mod((1 + p) % modulus, static_cast<uint64_t>(m), modulus);
    for (int64_t i = 1; i <= j; ++i) {
        const int64_t l = model.base_index + (i - 1) * (static_cast<int64_t>(p) - 1);
        const uint64_t chi_l = detail::pow_mod((1 + p) % modulus, static_cast<uint64_t>(l), modulus);
        u = detail::mul_mod(u, detail::sub_mod(chi_m, chi_l, modulus), modulus);
    }
    if (u == 0)
        throw PrecisionError("sigma_valuation: simulated value vanished at this precision");
    uint64_t simulated = 0;
    while (u % p == 0) {
        u /= p;
        ++simulated;
    }
    return SigmaValuation{closed, simulated};
}

IhgenRecord ihgen_condition(uint64_t p, int64_t m, bool vandiver_holds) {
    if (!is_odd_prime(p))
        throw DomainError("ihgen_condition requires an odd prime");
    if (m < 2)
        throw DomainError("ihgen_condition requires m >= 2");
    IhgenRecord rec{p, m, m % 2 == 0, 0, false, vandiver_holds, ""};
    rec.bernoulli_index = rec.even_case ? m : static_cast<int64_t>(p) - m;
    if (rec.bernoulli_index < 2 || rec.bernoulli_index > static_cast<int64_t>(p) - 3 ||
        rec.bernoulli_index % 2 != 0)
        throw DomainError("ihgen_condition: index out of Bernoulli range");
    BernoulliTable table = BernoulliTable::compute(p);
    rec.applies = table.residue(rec.bernoulli_index) == 0;
    if (!rec.even_case && rec.applies)
        rec.note = vandiver_holds ? "vandiver-failure-implied; contradicts the assumed flag"
                                  : "vandiver-failure-implied";
    return rec;
}

} // namespace propg
