#include "umps/necklace.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace umps {

size_t least_rotation_index(const Word& w) {
    const size_t n = w.size();
    if (n <= 1) return 0;
    // Booth's least-rotation on the doubled word with a failure function.
    std::vector<long> f(2 * n, -1);
    size_t k = 0;
    for (size_t j = 1; j < 2 * n; ++j) {
        uint8_t sj = w[j % n];
        long i = f[j - k - 1];
        while (i != -1 && sj != w[(k + static_cast<size_t>(i) + 1) % n]) {
            if (sj < w[(k + static_cast<size_t>(i) + 1) % n]) k = j - static_cast<size_t>(i) - 1;
            i = f[static_cast<size_t>(i)];
        }
        if (sj != w[(k + static_cast<size_t>(i) + 1) % n]) {
            if (sj < w[k % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

Necklace canonicalize(const Word& w, int d) {
    if (w.empty()) throw std::invalid_argument("canonicalize: empty word");
    for (uint8_t c : w) {
        if (c >= d) throw std::out_of_range("canonicalize: symbol out of range");
    }
    size_t k = least_rotation_index(w);
    Word rot(w.size());
    for (size_t i = 0; i < w.size(); ++i) rot[i] = w[(k + i) % w.size()];
    return Necklace{std::move(rot)};
}

Word word_from_string(const std::string& s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("word_from_string: non-digit in '" + s + "'");
        w.push_back(static_cast<uint8_t>(c - '0'));
    }
    return w;
}

std::vector<Necklace> enumerate_necklaces(int N, int d) {
    if (N < 1 || d < 1) throw std::invalid_argument("enumerate_necklaces: N >= 1, d >= 1 required");
    std::vector<Necklace> out;
    // FKM: generates pre-necklaces; a[1..t] with period p is a necklace iff p | N.
    std::vector<uint8_t> a(static_cast<size_t>(N) + 1, 0);
    auto rec = [&](auto&& self, int t, int p) -> void {
        if (t > N) {
            if (N % p == 0) {
                Word w(a.begin() + 1, a.end());
                out.push_back(Necklace{std::move(w)});
            }
            return;
        }
        a[static_cast<size_t>(t)] = a[static_cast<size_t>(t - p)];
        self(self, t + 1, p);
        for (int j = a[static_cast<size_t>(t - p)] + 1; j < d; ++j) {
            a[static_cast<size_t>(t)] = static_cast<uint8_t>(j);
            self(self, t + 1, t);
        }
    };
    rec(rec, 1, 1);
    return out;
}

uint64_t euler_phi(uint64_t n) {
    uint64_t r = n;
    for (uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            r -= r / q;
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

static uint64_t checked_pow(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < e; ++i) {
        if (b != 0 && r > (1ull << 62) / b) throw std::overflow_error("cyc_dim: d^N overflows");
        r *= b;
    }
    return r;
}

uint64_t cyc_dim(int N, int d) {
    if (N < 1 || d < 1) throw std::invalid_argument("cyc_dim: N >= 1, d >= 1 required");
    uint64_t sum = 0;
    for (int l = 1; l <= N; ++l) {
        if (N % l == 0) sum += euler_phi(static_cast<uint64_t>(l)) * checked_pow(static_cast<uint64_t>(d), static_cast<uint64_t>(N / l));
    }
    return sum / static_cast<uint64_t>(N);
}

uint64_t count_binary_necklaces(int N0, int N1) {
    if (N0 < 0 || N1 < 0 || N0 + N1 < 1) throw std::invalid_argument("count_binary_necklaces: need N0,N1 >= 0, N0+N1 >= 1");
    // (1/N) Σ_{ℓ | gcd(N0,N1)} φ(ℓ) C(N/ℓ, N0/ℓ), the content-constrained Burnside count.
    const int N = N0 + N1;
    uint64_t g = std::__gcd(static_cast<uint64_t>(N0), static_cast<uint64_t>(N1));
    if (N0 == 0 || N1 == 0) g = static_cast<uint64_t>(N);
    auto binom = [](uint64_t n, uint64_t k) -> uint64_t {
        if (k > n) return 0;
        if (k > n - k) k = n - k;
        unsigned __int128 r = 1;
        for (uint64_t i = 1; i <= k; ++i) {
            r = r * (n - k + i) / i;
        }
        return static_cast<uint64_t>(r);
    };
    unsigned __int128 sum = 0;
    for (uint64_t l = 1; l <= g; ++l) {
        if (g % l == 0) {
            sum += static_cast<unsigned __int128>(euler_phi(l)) *
                   binom(static_cast<uint64_t>(N) / l, static_cast<uint64_t>(N0) / l);
        }
    }
    return static_cast<uint64_t>(sum / static_cast<unsigned __int128>(N));
}

NecklaceTable::NecklaceTable(int N, int d) : N_(N), d_(d), list_(enumerate_necklaces(N, d)) {
    // Dense ranking when d^N is small enough (covers every desk-scale case).
    double size = 1;
    for (int i = 0; i < N; ++i) size *= d;
    if (size <= (1 << 22)) {
        dense_ = true;
        rank_.assign(static_cast<size_t>(size), -1);
        for (size_t i = 0; i < list_.size(); ++i) {
            size_t code = 0;
            for (uint8_t c : list_[i].word) code = code * static_cast<size_t>(d) + c;
            rank_[code] = static_cast<int32_t>(i);
        }
    }
}

int NecklaceTable::index_lookup(const Word& canon) const {
    if (dense_) {
        size_t code = 0;
        for (uint8_t c : canon) code = code * static_cast<size_t>(d_) + c;
        int32_t r = rank_[code];
        if (r < 0) throw std::logic_error("NecklaceTable: word not canonical");
        return r;
    }
    Necklace probe{canon};
    auto it = std::lower_bound(list_.begin(), list_.end(), probe);
    if (it == list_.end() || !(*it == probe)) throw std::logic_error("NecklaceTable: necklace not found");
    return static_cast<int>(it - list_.begin());
}

int NecklaceTable::index_of_word(const Word& w) const {
    if (static_cast<int>(w.size()) != N_) throw std::invalid_argument("NecklaceTable: word length mismatch");
    return index_lookup(canonicalize(w, d_).word);
}

int NecklaceTable::index_of_canonical(const Word& w) const { return index_lookup(w); }

const NecklaceTable& NecklaceTable::get(int N, int d) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<NecklaceTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(N, d);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<NecklaceTable>(N, d)).first;
    }
    return *it->second;
}

} // namespace umps
