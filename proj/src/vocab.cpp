#include "dar/vocab.hpp"

#include <algorithm>
#include <stdexcept>

namespace dar {

Vocabulary::Vocabulary(std::vector<std::string> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || entries_.back() != kUnkToken)
        throw std::invalid_argument("vocabulary entries must end with UNK");
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (!index_.emplace(entries_[i], static_cast<int32_t>(i + 1)).second)
            throw std::invalid_argument("duplicate vocabulary entry: " + entries_[i]);
    }
}

int32_t Vocabulary::index_of(const std::string& word) const {
    auto it = index_.find(word);
    return it == index_.end() ? unk_index() : it->second;
}

const std::string& Vocabulary::word(int32_t index) const {
    if (index < 1 || index > size())
        throw std::out_of_range("vocabulary index out of range: " + std::to_string(index));
    return entries_[index - 1];
}

Vocabulary build_vocabulary(const std::vector<Utterance>& utterances, int size) {
    if (size < 2) throw std::invalid_argument("vocabulary size must be at least 2");
    if (utterances.empty()) throw std::invalid_argument("cannot build a vocabulary from an empty corpus");

    std::unordered_map<std::string, int64_t> counts;
    for (const auto& u : utterances)
        for (const auto& tok : u.tokens) ++counts[tok];

    // A literal "UNK" surface form folds into the reserved entry.
    counts.erase(Vocabulary::kUnkToken);

    std::vector<std::pair<std::string, int64_t>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    const size_t keep = std::min<size_t>(ranked.size(), static_cast<size_t>(size - 1));
    std::vector<std::string> entries;
    entries.reserve(keep + 1);
    for (size_t i = 0; i < keep; ++i) entries.push_back(ranked[i].first);
    entries.emplace_back(Vocabulary::kUnkToken);
    return Vocabulary(std::move(entries));
}

Vocabulary build_vocabulary(const Corpus& corpus, int size) {
    return build_vocabulary(corpus.utterances(), size);
}

}  // namespace dar
