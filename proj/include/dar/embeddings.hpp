#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace dar {

// A set of pretrained word vectors. Payloads are kept in single precision
// exactly as stored on disk; similarity math runs in double precision.
class EmbeddingSet {
public:
    EmbeddingSet() = default;
    explicit EmbeddingSet(int dim);

    void add(const std::string& word, std::vector<float> vector);

    int dim() const { return dim_; }
    size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }

    const std::vector<float>* find(const std::string& word) const;
    bool contains(const std::string& word) const { return index_.count(word) > 0; }

    const std::vector<std::string>& words() const { return words_; }
    std::span<const float> vector_at(size_t i) const { return vectors_[i]; }

private:
    int dim_ = 0;
    std::vector<std::string> words_;  // insertion order, preserved by save
    std::vector<std::vector<float>> vectors_;
    std::unordered_map<std::string, size_t> index_;
};

// Binary word2vec layout: an ASCII header line "<count> <dim>\n", then per
// record the word bytes terminated by 0x20 followed by dim little-endian
// IEEE-754 single-precision values and an optional 0x0A. Values round-trip
// bit exactly. Malformed input raises an error naming the byte offset.
EmbeddingSet load_word2vec_binary(const std::string& path);

// Writes exactly the format accepted by load_word2vec_binary, with the
// trailing newline after every record; load(save(s)) is the identity.
void save_word2vec_binary(const EmbeddingSet& set, const std::string& path);

// u.v / (|u||v|) in double precision. Zero vectors are rejected.
double cosine(std::span<const float> u, std::span<const float> v);
double cosine(std::span<const double> u, std::span<const double> v);

struct Neighbor {
    std::string word;
    double similarity;
};

// Top-k words by descending cosine similarity to the query vector; ties
// break lexicographically. include_query keeps the query itself (always at
// rank 1 with similarity 1).
std::vector<Neighbor> nearest_neighbors(const std::string& word, int k, const EmbeddingSet& set,
                                        bool include_query = true);

// Mean of the vectors of the tokens found in the set; unknown tokens are
// skipped and an all-unknown sentence yields the zero vector.
std::vector<double> avg_sentence_embedding(const std::vector<std::string>& tokens,
                                           const EmbeddingSet& set);

}  // namespace dar
