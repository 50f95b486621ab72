#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace skm {

/// Vertex subsets of [n] are stored as bitmasks; bit j-1 encodes vertex j.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 63;
/// Default cap on n for operations that enumerate all 2^n subsets.
inline constexpr int kDefaultSubsetGuard = 20;

/// Raised when an input is malformed (bad vertex id, bad sizes, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a computation would exceed a configured size guard.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when two independent computations that must agree do not.
class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Lexicographic order on the sorted vertex lists of two sets of equal size.
inline bool lex_less(Mask a, Mask b)
{
    const Mask diff = a ^ b;
    if (diff == 0)
        return false;
    return (a & (diff & (~diff + 1))) != 0;
}

/// Orders sets by size, then lexicographically.
inline bool size_lex_less(Mask a, Mask b)
{
    const int pa = popcount(a), pb = popcount(b);
    if (pa != pb)
        return pa < pb;
    return lex_less(a, b);
}

/// Sign of e_j ^ e_sigma relative to e_{sigma + j}: (-1)^{#{k in sigma : k < j}}.
inline int insertion_sign(Mask sigma, int bit)
{
    return (popcount(sigma & ((Mask{1} << bit) - 1)) & 1) ? -1 : 1;
}

/// 1-based sorted vertex list of a mask.
std::vector<int> to_vertices(Mask m);

/// Builds a mask from 1-based vertex ids; throws InputError on ids outside [1, n].
Mask from_vertices(int n, const std::vector<int>& vertices);

std::string format_set(Mask m);

/// All k-subsets of [n] in lexicographic order.
std::vector<Mask> subsets_of_size(int n, int k);

/// Binomial coefficient; throws GuardError on 64-bit overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Keeps only the inclusion-maximal members, sorted by size then lex.
std::vector<Mask> maximal_elements(std::vector<Mask> sets);

/// Keeps only the inclusion-minimal members, sorted by size then lex.
std::vector<Mask> minimal_elements(std::vector<Mask> sets);

} // namespace skm
