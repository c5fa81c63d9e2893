#include "z4oa/common.hpp"

namespace z4oa {

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t limit,
                          const std::string& context) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base)
            throw BudgetError(context + ": " + std::to_string(base) + "^" +
                              std::to_string(exp) + " exceeds budget " +
                              std::to_string(limit));
        r *= base;
    }
    if (r > limit)
        throw BudgetError(context + ": " + std::to_string(r) +
                          " exceeds budget " + std::to_string(limit));
    return r;
}

PackedWord pack_word(const Word& w, int alphabet) {
    PackedWord p = 0;
    for (Symbol s : w) p = p * static_cast<PackedWord>(alphabet) + s;
    return p;
}

Word unpack_word(PackedWord p, int n, int alphabet) {
    Word w(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        w[static_cast<std::size_t>(i)] =
            static_cast<Symbol>(p % static_cast<PackedWord>(alphabet));
        p /= static_cast<PackedWord>(alphabet);
    }
    return w;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::string word_to_string(const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(static_cast<int>(w[i]));
    }
    s += ")";
    return s;
}

}  // namespace z4oa
