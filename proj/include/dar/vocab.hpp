#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dar/corpus.hpp"

namespace dar {

// Frequency-selected vocabulary. Indices run 1..|V|; index 0 is reserved for
// the PADDING filler, which is not a vocabulary entry. UNK is always the
// last entry and absorbs every out-of-vocabulary word.
class Vocabulary {
public:
    static constexpr int32_t kPaddingIndex = 0;
    static constexpr const char* kUnkToken = "UNK";

    Vocabulary() = default;
    // entries must already end with UNK; indices are assigned in order.
    explicit Vocabulary(std::vector<std::string> entries);

    int32_t size() const { return static_cast<int32_t>(entries_.size()); }  // |V|, includes UNK
    int32_t unk_index() const { return size(); }

    // Index of a surface form, or unk_index() when absent.
    int32_t index_of(const std::string& word) const;
    bool contains(const std::string& word) const { return index_.count(word) > 0; }

    // Surface form at index (1..|V|).
    const std::string& word(int32_t index) const;
    const std::vector<std::string>& entries() const { return entries_; }

    bool operator==(const Vocabulary& other) const { return entries_ == other.entries_; }

private:
    std::vector<std::string> entries_;
    std::unordered_map<std::string, int32_t> index_;
};

// The (size-1) most frequent surface forms by raw count, plus UNK. Count
// ties are broken lexicographically so two builds over the same corpus are
// identical. When the corpus has fewer distinct forms, all of them are kept
// and |V| shrinks accordingly.
Vocabulary build_vocabulary(const Corpus& corpus, int size = 1000);
Vocabulary build_vocabulary(const std::vector<Utterance>& utterances, int size = 1000);

}  // namespace dar
