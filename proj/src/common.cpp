#include "skm/common.hpp"
#include "skm/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace skm {

std::vector<int> to_vertices(Mask m)
{
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

Mask from_vertices(int n, const std::vector<int>& vertices)
{
    Mask m = 0;
    for (int v : vertices) {
        if (v < 1 || v > n)
            throw InputError("vertex id " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
        m |= Mask{1} << (v - 1);
    }
    return m;
}

std::string format_set(Mask m)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : to_vertices(m)) {
        if (!first)
            os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<Mask> subsets_of_size(int n, int k)
{
    std::vector<Mask> out;
    if (k < 0 || k > n)
        return out;
    // Combinations in lexicographic order of their sorted vertex lists.
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        Mask m = 0;
        for (int b : idx)
            m |= Mask{1} << b;
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::int64_t>::max())
            throw GuardError("binomial coefficient overflows 64 bits");
    }
    return static_cast<std::int64_t>(r);
}

std::vector<Mask> maximal_elements(std::vector<Mask> sets)
{
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) { return popcount(a) > popcount(b); });
    std::vector<Mask> keep;
    for (Mask s : sets) {
        bool dominated = false;
        for (Mask t : keep)
            if (is_subset(s, t)) {
                dominated = true;
                break;
            }
        if (!dominated)
            keep.push_back(s);
    }
    std::sort(keep.begin(), keep.end(), size_lex_less);
    return keep;
}

std::vector<Mask> minimal_elements(std::vector<Mask> sets)
{
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });
    std::vector<Mask> keep;
    for (Mask s : sets) {
        bool dominated = false;
        for (Mask t : keep)
            if (is_subset(t, s)) {
                dominated = true;
                break;
            }
        if (!dominated)
            keep.push_back(s);
    }
    std::sort(keep.begin(), keep.end(), size_lex_less);
    return keep;
}

namespace {

int g_default_jobs = 0;

} // namespace

int default_jobs()
{
    if (g_default_jobs > 0)
        return g_default_jobs;
    if (const char* env = std::getenv("KOSZUL_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return 1;
}

void set_default_jobs(int jobs) { g_default_jobs = jobs; }

} // namespace skm
