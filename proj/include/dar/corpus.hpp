#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dar {

struct Utterance {
    std::string dialogue_id;
    std::string label;
    std::vector<std::string> tokens;
};

// Whitespace tokenizer that additionally splits leading/trailing
// punctuation marks (. , ! ? ;) into their own tokens. Case is preserved.
std::vector<std::string> tokenize(std::string_view text);

// Closed, ordered set of dialogue-act tags. Order is lexicographic so the
// same corpus always yields the same label ids.
class LabelSet {
public:
    LabelSet() = default;
    explicit LabelSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    int id_of(const std::string& label) const;     // throws on unknown label
    int find(const std::string& label) const;      // -1 on unknown label
    const std::string& label(int id) const { return labels_.at(id); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const LabelSet& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

// A corpus is a flat list of utterances in which each dialogue occupies one
// contiguous block. Immutable after construction.
class Corpus {
public:
    Corpus() = default;
    static Corpus from_utterances(std::vector<Utterance> utterances);

    // One utterance per line: dialogue_id<TAB>label<TAB>text. Blank lines
    // are ignored. With pretokenized=true the text is split on whitespace
    // only; otherwise the built-in tokenizer runs.
    static Corpus load_tsv(const std::string& path, bool pretokenized = false);
    void save_tsv(const std::string& path) const;

    size_t size() const { return utterances_.size(); }
    bool empty() const { return utterances_.empty(); }
    const Utterance& operator[](size_t i) const { return utterances_[i]; }
    const std::vector<Utterance>& utterances() const { return utterances_; }

    size_t dialogue_count() const { return spans_.size(); }
    // Utterances of dialogue d as [begin, end) indices into the flat list.
    std::pair<size_t, size_t> dialogue_span(size_t d) const { return spans_[d]; }
    std::span<const Utterance> dialogue(size_t d) const;

    LabelSet label_set() const;
    Corpus subset_by_dialogues(const std::vector<size_t>& dialogue_indices) const;
    // Keeps whole dialogues from the front until at least n utterances are
    // included (clamped to the corpus size).
    Corpus take_utterances(size_t n) const;

private:
    std::vector<Utterance> utterances_;
    std::vector<std::pair<size_t, size_t>> spans_;

    void rebuild_spans();
};

struct FoldSplit {
    Corpus train;
    Corpus test;
};

// Deterministic k-fold partition at dialogue granularity: no dialogue ever
// straddles train and test, so previous-sentence features cannot leak.
std::vector<FoldSplit> kfold_split(const Corpus& corpus, int k, uint64_t seed);

std::unordered_map<std::string, int64_t> label_counts(const Corpus& corpus);

}  // namespace dar
