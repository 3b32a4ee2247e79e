#include "flexdp/gadgets.hpp"

#include "flexdp/errors.hpp"

#include <algorithm>

namespace flexdp {

std::vector<Rational> GadgetMatrix::apply(const std::vector<Rational> & p) const
{
    if (p.size() != columns())
        throw InputError("input vector length does not match the gadget");
    std::vector<Rational> out(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < columns(); ++c)
            out[r] += entries[r][c] * p[c];
    return out;
}

bool GadgetMatrix::nonnegative() const
{
    for (const auto & row : entries)
        for (const auto & x : row)
            if (sgn(x) < 0)
                return false;
    return true;
}

bool GadgetMatrix::column_stochastic() const
{
    for (std::size_t c = 0; c < columns(); ++c) {
        Rational sum = 0;
        for (std::size_t r = 0; r < rows(); ++r)
            sum += entries[r][c];
        if (sum != 1)
            return false;
    }
    return true;
}

bool GadgetMatrix::zero_diagonal() const
{
    for (std::size_t i = 0; i < std::min(rows(), columns()); ++i)
        if (sgn(entries[i][i]) != 0)
            return false;
    return true;
}

namespace {

void require_distribution(const std::vector<Rational> & p)
{
    Rational sum = 0;
    for (const auto & x : p) {
        if (sgn(x) < 0)
            throw InputError("gadget input has a negative entry");
        sum += x;
    }
    if (sum != 1)
        throw InputError("gadget input does not sum to 1");
}

void require_range(const std::array<Rational, 3> & p, const Rational & lo, const Rational & hi)
{
    require_distribution({p.begin(), p.end()});
    for (const auto & x : p)
        if (x < lo || x > hi)
            throw InputError("gadget input " + to_string(x) + " outside [" + to_string(lo) + ", " + to_string(hi) +
                             "]");
}

const std::vector<std::string> colour_labels{"1", "2", "3"};

/// num / den, where a zero denominator is only tolerated on a zero-probability column.
Rational ratio(const Rational & num, const Rational & den, const Rational & column_mass)
{
    if (sgn(den) != 0)
        return num / den;
    if (sgn(column_mass) == 0)
        return 0;
    throw InputError("zero denominator on a column with positive probability");
}

} // namespace

GadgetMatrix gadget_pendent(const std::array<Rational, 3> & p)
{
    require_range(p, Rational(1, 5), Rational(3, 5));
    std::array<Rational, 3> q;
    for (int i = 0; i < 3; ++i)
        q[i] = Rational(5, 2) * p[i] - Rational(1, 2);
    const Rational t(1, 10);
    GadgetMatrix a;
    a.column_labels = colour_labels;
    a.row_labels = colour_labels;
    a.entries = {
        {0, t * (2 * q[0] + 3 * q[1]) / p[1], t * (1 + q[0] + 3 * q[2]) / p[2]},
        {t * (1 + 2 * q[0] + q[1]) / p[0], 0, t * (q[1] + 2 * q[2]) / p[2]},
        {t * (3 * q[0] + q[2]) / p[0], t * (3 * q[1] + 2 * q[2]) / p[1], 0},
    };
    return a;
}

GadgetMatrix gadget_butterfly(const std::array<Rational, 3> & p)
{
    require_range(p, Rational(1, 5), Rational(1));
    std::array<Rational, 3> q;
    for (int i = 0; i < 3; ++i)
        q[i] = Rational(5, 2) * p[i] - Rational(1, 2);
    const Rational t(1, 10);
    std::vector<Rational> top{0, t * (q[0] + q[1]) / p[1], t * (1 + q[2]) / p[2]};
    std::vector<Rational> middle{t * (2 * q[0] + 2 * q[1]) / p[0], 0, t * 2 * q[2] / p[2]};
    std::vector<Rational> bottom{t * (2 * q[0] + q[2]) / p[0], t * (2 * q[1] + q[2]) / p[1], 0};
    GadgetMatrix a;
    a.column_labels = colour_labels;
    a.row_labels = {"1w3v2x", "1w3v3x", "2w3v1x", "3w1v1x", "3w2v1x"};
    a.entries = {top, top, middle, bottom, bottom};
    return a;
}

std::array<Rational, 6> normalize_parallel3(std::array<Rational, 6> p)
{
    enum { p12, p21, p13, p23, p31, p32 };
    if (p[p31] + p[p32] < p[p13] + p[p23])
        p = {p[p21], p[p12], p[p31], p[p32], p[p13], p[p23]};
    if (p[p21] < p[p12])
        p = {p[p21], p[p12], p[p23], p[p13], p[p32], p[p31]};
    return p;
}

Parallel3Result gadget_parallel3(const std::array<Rational, 6> & p)
{
    enum { p12, p21, p13, p23, p31, p32 };
    require_distribution({p.begin(), p.end()});
    const Rational fifth(1, 5), two_fifths(2, 5);
    const Rational u_marg[3] = {p[p12] + p[p13], p[p21] + p[p23], p[p31] + p[p32]};
    const Rational v_marg[3] = {p[p21] + p[p31], p[p12] + p[p32], p[p13] + p[p23]};
    for (int i = 0; i < 3; ++i)
        if (u_marg[i] < fifth || v_marg[i] < fifth)
            throw InputError("parallel3 input has a single-vertex marginal below 1/5");
    if (p[p31] + p[p32] < p[p13] + p[p23] || p[p21] < p[p12])
        throw InputError("parallel3 input is not in normal form");

    Parallel3Result result;
    auto & a = result.matrix;
    a.column_labels = {"12", "21", "13", "23", "31", "32"};
    a.row_labels = {"1u3v", "2u3v", "3u1v", "3u2v"};
    const Rational half(1, 2);

    if (p[p31] + p[p32] >= two_fifths) {
        result.case_label = "a";
        a.entries = {
            {0, 0, 0, 0, half, half},
            {0, 0, 0, 0, half, half},
            {1, 0, 1, 0, 0, 0},
            {0, 1, 0, 1, 0, 0},
        };
        return result;
    }
    if (p[p12] + p[p13] + p[p23] >= two_fifths) {
        result.case_label = "b";
        a.entries = {
            {0, half, 0, 0, half, half},
            {half, 0, 0, 0, half, half},
            {half, 0, half, half, 0, 0},
            {0, half, half, half, 0, 0},
        };
        return result;
    }

    const Rational keep21 = ratio(Rational(1), 5 * p[p21], p[p21]);
    if (p[p21] + p[p31] > two_fifths) {
        result.case_label = "c";
        a.entries = {
            {0, 1 - keep21, 0, 0, 1, 0},
            {1, 0, 0, 0, 0, 1},
            {0, 0, 1, 1, 0, 0},
            {0, keep21, 0, 0, 0, 0},
        };
        return result;
    }

    result.case_label = "c'";
    const Rational lower_mass = p[p13] + p[p23];
    const Rational keep3 = ratio(Rational(1), 5 * lower_mass, lower_mass);
    const Rational to_first = ratio(two_fifths - p[p21] - p[p31], p[p32], p[p32]);
    const Rational to_second = ratio(p[p21] + p[p31] + p[p32] - two_fifths, p[p32], p[p32]);
    a.entries = {
        {0, 1 - keep21, 0, 0, 1, to_first},
        {1, 0, 1 - keep3, 1 - keep3, 0, to_second},
        {0, 0, keep3, keep3, 0, 0},
        {0, keep21, 0, 0, 0, 0},
    };
    return result;
}

GadgetMatrix gadget_one_positive(const std::array<Rational, 3> & p)
{
    require_range(p, Rational(3, 10), Rational(2, 5));
    std::array<Rational, 3> q;
    for (int i = 0; i < 3; ++i)
        q[i] = 10 * p[i] - 3;
    const Rational t(1, 10);
    GadgetMatrix a;
    a.column_labels = colour_labels;
    a.row_labels = colour_labels;
    a.entries = {
        {0, t * 2 / p[1], t * 2 / p[2]},
        {t * (1 + q[0] + q[1]) / p[0], 0, t * (1 + q[2]) / p[2]},
        {t * (1 + q[0] + q[2]) / p[0], t * (1 + q[1]) / p[1], 0},
    };
    return a;
}

namespace {

/// base + width * r_i / sum(r) with r_i uniform in [0, 1000], not all zero.
std::array<Rational, 3> simplex_point(std::mt19937_64 & rng, const Rational & base, const Rational & width)
{
    std::uniform_int_distribution<long> draw(0, 1000);
    std::array<long, 3> r{};
    do
        for (auto & x : r)
            x = draw(rng);
    while (r[0] + r[1] + r[2] == 0);
    const long total = r[0] + r[1] + r[2];
    std::array<Rational, 3> p;
    for (int i = 0; i < 3; ++i)
        p[i] = base + width * Rational(r[i], total);
    for (auto & x : p)
        x.canonicalize();
    return p;
}

} // namespace

std::array<Rational, 3> sample_pendent_input(std::mt19937_64 & rng)
{
    return simplex_point(rng, Rational(1, 5), Rational(2, 5));
}

std::array<Rational, 3> sample_butterfly_input(std::mt19937_64 & rng)
{
    return simplex_point(rng, Rational(1, 5), Rational(2, 5));
}

std::array<Rational, 3> sample_one_positive_input(std::mt19937_64 & rng)
{
    return simplex_point(rng, Rational(3, 10), Rational(1, 10));
}

std::array<Rational, 6> sample_parallel3_input(std::mt19937_64 & rng, const std::string & wanted_case)
{
    std::uniform_int_distribution<long> draw(0, 1000);
    for (int attempt = 0; attempt < 1'000'000; ++attempt) {
        std::array<long, 6> r{};
        long total = 0;
        for (auto & x : r)
            total += x = draw(rng);
        if (total == 0)
            continue;
        std::array<Rational, 6> p;
        for (int i = 0; i < 6; ++i) {
            p[i] = Rational(r[i], total);
            p[i].canonicalize();
        }
        p = normalize_parallel3(p);
        try {
            auto result = gadget_parallel3(p);
            if (wanted_case.empty() || result.case_label == wanted_case)
                return p;
        }
        catch (const InputError &) {
        }
    }
    throw BudgetExceeded("parallel3 sampler found no input for case '" + wanted_case + "'");
}

std::vector<GadgetSelftest> gadget_selftest(int samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<GadgetSelftest> out;
    const Rational fifth(1, 5);
    const std::vector<Rational> heavy{Rational(2, 5), Rational(3, 10), Rational(3, 10)};

    auto run = [&](const std::string & name, auto && one) {
        GadgetSelftest t{name, samples, 0, {}};
        for (int i = 0; i < samples; ++i) {
            std::string failure = one(i);
            if (failure.empty())
                ++t.passed;
            else if (t.first_failure.empty())
                t.first_failure = failure;
        }
        out.push_back(t);
    };
    auto common = [](const GadgetMatrix & a) -> std::string {
        if (!a.nonnegative())
            return "negative entry";
        if (!a.column_stochastic())
            return "column does not sum to 1";
        return {};
    };

    run("pendent", [&](int) -> std::string {
        auto p = sample_pendent_input(rng);
        auto a = gadget_pendent(p);
        if (auto f = common(a); !f.empty())
            return f;
        if (!a.zero_diagonal())
            return "nonzero diagonal";
        if (a.apply({p.begin(), p.end()}) != heavy)
            return "output is not (2/5, 3/10, 3/10)";
        return {};
    });
    run("butterfly", [&](int) -> std::string {
        auto p = sample_butterfly_input(rng);
        auto a = gadget_butterfly(p);
        if (auto f = common(a); !f.empty())
            return f;
        if (a.apply({p.begin(), p.end()}) != std::vector<Rational>(5, fifth))
            return "output is not uniform 1/5";
        return {};
    });
    const std::string cases[4] = {"a", "b", "c", "c'"};
    run("parallel3", [&](int i) -> std::string {
        const std::string & wanted = cases[i % 4];
        auto p = sample_parallel3_input(rng, wanted);
        auto result = gadget_parallel3(p);
        if (auto f = common(result.matrix); !f.empty())
            return f;
        auto y = result.matrix.apply({p.begin(), p.end()});
        for (const auto & x : y)
            if (x < fifth)
                return "output entry below 1/5";
        if (result.case_label == "c'" &&
            y != std::vector<Rational>{fifth, Rational(2, 5), fifth, fifth})
            return "case c' output is not (1/5, 2/5, 1/5, 1/5)";
        return {};
    });
    run("one-positive", [&](int) -> std::string {
        auto p = sample_one_positive_input(rng);
        auto a = gadget_one_positive(p);
        if (auto f = common(a); !f.empty())
            return f;
        if (!a.zero_diagonal())
            return "nonzero diagonal";
        for (const auto & row : a.entries)
            for (const auto & x : row)
                if (sgn(x) != 0 && x < Rational(1, 3))
                    return "nonzero entry below 1/3";
        if (a.apply({p.begin(), p.end()}) != heavy)
            return "output is not (2/5, 3/10, 3/10)";
        return {};
    });
    return out;
}

} // namespace flexdp
