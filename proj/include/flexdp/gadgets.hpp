#pragma once

#include "flexdp/rational.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace flexdp {

/// Column j is the conditional output distribution given input event j.
struct GadgetMatrix {
    std::vector<std::vector<Rational>> entries; ///< rows x columns
    std::vector<std::string> column_labels;
    std::vector<std::string> row_labels;

    std::size_t rows() const { return entries.size(); }
    std::size_t columns() const { return column_labels.size(); }
    std::vector<Rational> apply(const std::vector<Rational> & p) const;
    bool nonnegative() const;
    bool column_stochastic() const;
    bool zero_diagonal() const;
};

/// Input marginals (p_1, p_2, p_3) of the neighbour, each in [1/5, 3/5], summing
/// to 1. Output rows are the colours of the pendent vertex; A p = (2/5, 3/10, 3/10).
GadgetMatrix gadget_pendent(const std::array<Rational, 3> & p);

/// p_i >= 1/5 summing to 1. Five output colorings on (w, v, x), each with
/// probability 1/5.
GadgetMatrix gadget_butterfly(const std::array<Rational, 3> & p);

/// Joint probabilities of ordered colour pairs on (u', v'), ordered
/// (12, 21, 13, 23, 31, 32). Requires nonnegative entries summing to 1, every
/// single-vertex marginal >= 1/5, p31 + p32 >= p13 + p23 and p21 >= p12.
/// Output rows are the colorings (1u,3v), (2u,3v), (3u,1v), (3u,2v).
struct Parallel3Result {
    std::string case_label; ///< "a", "b", "c" or "c'"
    GadgetMatrix matrix;
};
Parallel3Result gadget_parallel3(const std::array<Rational, 6> & p);

/// p_i in [3/10, 2/5] summing to 1; A p = (2/5, 3/10, 3/10) and every nonzero
/// entry is at least 1/3.
GadgetMatrix gadget_one_positive(const std::array<Rational, 3> & p);

/// Random feasible inputs with exact rational coordinates.
std::array<Rational, 3> sample_pendent_input(std::mt19937_64 & rng);
std::array<Rational, 3> sample_butterfly_input(std::mt19937_64 & rng);
std::array<Rational, 3> sample_one_positive_input(std::mt19937_64 & rng);
/// Rejection sampler; when `wanted_case` is nonempty, retries until that case fires.
std::array<Rational, 6> sample_parallel3_input(std::mt19937_64 & rng, const std::string & wanted_case = {});

/// Applies the swaps u <-> v and colour 1 <-> 2 that put p into normal form.
std::array<Rational, 6> normalize_parallel3(std::array<Rational, 6> p);

struct GadgetSelftest {
    std::string name;
    int samples = 0;
    int passed = 0;
    std::string first_failure;
};

/// Checks every gadget identity exactly on `samples` random inputs per gadget.
/// The parallel3 samples are split evenly across its four cases.
std::vector<GadgetSelftest> gadget_selftest(int samples, std::uint64_t seed);

} // namespace flexdp
