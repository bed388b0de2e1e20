#pragma once
// Necklaces: canonical cyclic words over [d], the coordinate system of
// Cyc^N(K^d). Canonical form = lexicographically minimal rotation (Booth);
// enumeration in lexicographic order (Fredricksen–Kessler–Maiorana).

#include <cstdint>
#include <string>
#include <vector>

namespace umps {

using Word = std::vector<uint8_t>;

struct Necklace {
    Word word;  // lexicographically minimal rotation
    int N() const { return static_cast<int>(word.size()); }

    std::string str() const {
        std::string s;
        s.reserve(word.size());
        for (uint8_t c : word) s.push_back(static_cast<char>('0' + c));
        return s;
    }
    friend bool operator==(const Necklace& a, const Necklace& b) { return a.word == b.word; }
    friend bool operator<(const Necklace& a, const Necklace& b) { return a.word < b.word; }
};

// Index of the lexicographically least rotation (Booth's algorithm).
size_t least_rotation_index(const Word& w);

// Canonical representative; throws if a symbol is out of range.
Necklace canonicalize(const Word& w, int d);

// Parse a digit string into a word (symbols '0'..'9').
Word word_from_string(const std::string& s);

// All necklaces of length N over [d], each once, lexicographically ordered.
std::vector<Necklace> enumerate_necklaces(int N, int d);

// (1/N) Σ_{ℓ|N} φ(ℓ) d^{N/ℓ}
uint64_t cyc_dim(int N, int d);

// Number of binary necklaces with N0 zeros and N1 ones.
uint64_t count_binary_necklaces(int N0, int N1);

uint64_t euler_phi(uint64_t n);

// Shared per-(N,d) table with O(1) canonical-word -> index lookup.
class NecklaceTable {
public:
    NecklaceTable(int N, int d);
    const std::vector<Necklace>& list() const { return list_; }
    int size() const { return static_cast<int>(list_.size()); }
    // Index of an arbitrary word's necklace class.
    int index_of_word(const Word& w) const;
    // Index of an already-canonical word.
    int index_of_canonical(const Word& w) const;
    const Necklace& at(int i) const { return list_[static_cast<size_t>(i)]; }
    int N() const { return N_; }
    int d() const { return d_; }

    static const NecklaceTable& get(int N, int d);  // process-wide cache

private:
    int N_, d_;
    std::vector<Necklace> list_;
    std::vector<int32_t> rank_;  // dense word-code -> index, when d^N is small
    bool dense_ = false;
    int index_lookup(const Word& canon) const;
};

} // namespace umps
