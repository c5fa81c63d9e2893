#include "z4oa/gray.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace z4oa {

Word gray(const Word& w) {
    static constexpr Symbol kPairs[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    Word out;
    out.reserve(w.size() * 2);
    for (Symbol s : w) {
        if (s > 3)
            throw std::invalid_argument("Z4 symbol out of range: " +
                                        std::to_string(static_cast<int>(s)));
        out.push_back(kPairs[s][0]);
        out.push_back(kPairs[s][1]);
    }
    return out;
}

PackedWord gray_packed(PackedWord p) {
    std::uint64_t lo = 0x5555555555555555ull;
    return (p & (lo << 1)) | (((p >> 1) ^ p) & lo);
}

BinaryCode gray_image(const Z4Code& c) {
    BinaryCode img;
    img.m = 2 * c.n;
    img.words.reserve(c.words.size());
    for (PackedWord w : c.words) img.words.push_back(gray_packed(w));
    std::sort(img.words.begin(), img.words.end());
    if (std::adjacent_find(img.words.begin(), img.words.end()) !=
        img.words.end())
        throw std::logic_error("gray_image: map is not injective");
    return img;
}

BinaryCode binary_code_from_words(const std::vector<Word>& rows, int m) {
    if (m < 1 || m > 64)
        throw std::invalid_argument("binary word length must be in [1, 64]");
    BinaryCode c;
    c.m = m;
    for (const Word& row : rows) {
        if (static_cast<int>(row.size()) != m)
            throw std::invalid_argument("binary word has length " +
                                        std::to_string(row.size()) +
                                        ", expected " + std::to_string(m));
        for (Symbol s : row)
            if (s > 1)
                throw std::invalid_argument("binary symbol out of range: " +
                                            std::to_string(static_cast<int>(s)));
        c.words.push_back(pack_word(row, 2));
    }
    std::sort(c.words.begin(), c.words.end());
    c.words.erase(std::unique(c.words.begin(), c.words.end()), c.words.end());
    return c;
}

bool is_linear_binary(BinaryCode& c) {
    if (c.linear) return *c.linear;
    bool ok = !c.words.empty() &&
              std::binary_search(c.words.begin(), c.words.end(), PackedWord{0});
    for (std::size_t i = 0; ok && i < c.words.size(); ++i)
        for (std::size_t j = i + 1; j < c.words.size(); ++j)
            if (!std::binary_search(c.words.begin(), c.words.end(),
                                    c.words[i] ^ c.words[j])) {
                ok = false;
                break;
            }
    c.linear = ok;
    return ok;
}

int binary_weight(PackedWord w) {
    return __builtin_popcountll(w);
}

int min_hamming_weight(const BinaryCode& c) {
    int best = c.m + 1;
    for (PackedWord w : c.words)
        if (w != 0) best = std::min(best, binary_weight(w));
    return best;
}

std::vector<Word> unpacked_words(const BinaryCode& c) {
    std::vector<Word> out;
    out.reserve(c.words.size());
    for (PackedWord w : c.words) out.push_back(unpack_word(w, c.m, 2));
    return out;
}

OaArray to_array(const BinaryCode& c) {
    return make_array(unpacked_words(c), 2);
}

}  // namespace z4oa
