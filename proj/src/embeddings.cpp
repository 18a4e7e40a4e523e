#include "dar/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "dar/util.hpp"

namespace dar {

EmbeddingSet::EmbeddingSet(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("embedding dimension must be positive");
}

void EmbeddingSet::add(const std::string& word, std::vector<float> vector) {
    if (dim_ == 0) dim_ = static_cast<int>(vector.size());
    if (static_cast<int>(vector.size()) != dim_)
        throw std::invalid_argument("embedding dimension mismatch for word '" + word + "'");
    if (!index_.emplace(word, words_.size()).second)
        throw std::invalid_argument("duplicate embedding word '" + word + "'");
    words_.push_back(word);
    vectors_.push_back(std::move(vector));
}

const std::vector<float>* EmbeddingSet::find(const std::string& word) const {
    auto it = index_.find(word);
    return it == index_.end() ? nullptr : &vectors_[it->second];
}

namespace {

[[noreturn]] void parse_fail(const std::string& path, size_t offset, const std::string& what) {
    throw std::runtime_error(path + ": " + what + " (byte offset " + std::to_string(offset) + ")");
}

}  // namespace

EmbeddingSet load_word2vec_binary(const std::string& path) {
    const std::string bytes = read_file_bytes(path);
    size_t pos = 0;

    const size_t eol = bytes.find('\n');
    if (eol == std::string::npos) parse_fail(path, 0, "missing header line");
    const std::string header = bytes.substr(0, eol);
    const size_t space = header.find(' ');
    long long count = -1, dim = -1;
    bool header_ok = space != std::string::npos && space > 0 && space + 1 < header.size();
    if (header_ok) {
        const std::string count_s = header.substr(0, space);
        const std::string dim_s = header.substr(space + 1);
        auto all_digits = [](const std::string& s) {
            return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
        };
        header_ok = all_digits(count_s) && all_digits(dim_s);
        if (header_ok) {
            count = std::stoll(count_s);
            dim = std::stoll(dim_s);
        }
    }
    if (!header_ok || count < 0 || dim < 1)
        parse_fail(path, 0, "malformed header line '" + header + "', expected '<count> <dim>'");
    pos = eol + 1;

    EmbeddingSet set(static_cast<int>(dim));
    const size_t payload = static_cast<size_t>(dim) * sizeof(float);
    for (long long rec = 0; rec < count; ++rec) {
        const size_t word_start = pos;
        const size_t sep = bytes.find(' ', pos);
        if (sep == std::string::npos)
            parse_fail(path, word_start,
                       "unterminated word in record " + std::to_string(rec));
        const std::string word = bytes.substr(word_start, sep - word_start);
        pos = sep + 1;
        if (pos + payload > bytes.size())
            parse_fail(path, pos, "truncated vector payload for record " + std::to_string(rec) +
                                      " (word '" + word + "')");
        std::vector<float> vec(dim);
        std::memcpy(vec.data(), bytes.data() + pos, payload);
        pos += payload;
        if (pos < bytes.size() && bytes[pos] == '\n') ++pos;
        try {
            set.add(word, std::move(vec));
        } catch (const std::invalid_argument&) {
            parse_fail(path, word_start,
                       "duplicate word '" + word + "' in record " + std::to_string(rec));
        }
    }
    if (pos != bytes.size())
        parse_fail(path, pos, "trailing bytes after the " + std::to_string(count) +
                                  " declared records");
    return set;
}

void save_word2vec_binary(const EmbeddingSet& set, const std::string& path) {
    if (set.empty() || set.dim() < 1)
        throw std::invalid_argument("refusing to save an empty embedding set");
    std::string out = std::to_string(set.size()) + " " + std::to_string(set.dim()) + "\n";
    for (size_t i = 0; i < set.size(); ++i) {
        out += set.words()[i];
        out.push_back(' ');
        auto vec = set.vector_at(i);
        const size_t old = out.size();
        out.resize(old + vec.size() * sizeof(float));
        std::memcpy(out.data() + old, vec.data(), vec.size() * sizeof(float));
        out.push_back('\n');
    }
    write_file_bytes(path, out);
}

namespace {

template <typename A, typename B>
double cosine_impl(std::span<const A> u, std::span<const B> v) {
    if (u.size() != v.size()) throw std::invalid_argument("cosine: length mismatch");
    if (u.empty()) throw std::invalid_argument("cosine: empty vectors");
    double dot = 0, nu = 0, nv = 0;
    for (size_t i = 0; i < u.size(); ++i) {
        const double a = u[i], b = v[i];
        dot += a * b;
        nu += a * a;
        nv += b * b;
    }
    if (nu == 0.0 || nv == 0.0) throw std::invalid_argument("cosine: zero vector");
    return dot / (std::sqrt(nu) * std::sqrt(nv));
}

}  // namespace

double cosine(std::span<const float> u, std::span<const float> v) { return cosine_impl(u, v); }
double cosine(std::span<const double> u, std::span<const double> v) { return cosine_impl(u, v); }

std::vector<Neighbor> nearest_neighbors(const std::string& word, int k, const EmbeddingSet& set,
                                        bool include_query) {
    if (k < 1) throw std::invalid_argument("nearest_neighbors: k must be positive");
    const std::vector<float>* query = set.find(word);
    if (!query) throw std::invalid_argument("nearest_neighbors: unknown word '" + word + "'");

    std::vector<Neighbor> all;
    all.reserve(set.size());
    for (size_t i = 0; i < set.size(); ++i) {
        const std::string& candidate = set.words()[i];
        if (!include_query && candidate == word) continue;
        all.push_back({candidate, cosine(std::span<const float>(*query), set.vector_at(i))});
    }
    std::sort(all.begin(), all.end(), [](const Neighbor& a, const Neighbor& b) {
        if (a.similarity != b.similarity) return a.similarity > b.similarity;
        return a.word < b.word;
    });
    if (static_cast<size_t>(k) < all.size()) all.resize(k);
    return all;
}

std::vector<double> avg_sentence_embedding(const std::vector<std::string>& tokens,
                                           const EmbeddingSet& set) {
    std::vector<double> sum(set.dim(), 0.0);
    size_t found = 0;
    for (const auto& tok : tokens) {
        const std::vector<float>* vec = set.find(tok);
        if (!vec) continue;
        ++found;
        for (size_t i = 0; i < sum.size(); ++i) sum[i] += (*vec)[i];
    }
    if (found > 0)
        for (double& x : sum) x /= static_cast<double>(found);
    return sum;
}

}  // namespace dar
