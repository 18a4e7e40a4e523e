#include "dar/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dar/rng.hpp"
#include "dar/util.hpp"

namespace dar {

namespace {

bool is_punct_mark(char c) {
    return c == '.' || c == ',' || c == '!' || c == '?' || c == ';';
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::string_view chunk = text.substr(i, j - i);
        i = j;

        size_t lo = 0, hi = chunk.size();
        while (lo < hi && is_punct_mark(chunk[lo])) {
            out.emplace_back(1, chunk[lo]);
            ++lo;
        }
        size_t trail_begin = hi;
        while (trail_begin > lo && is_punct_mark(chunk[trail_begin - 1])) --trail_begin;
        if (trail_begin > lo) out.emplace_back(chunk.substr(lo, trail_begin - lo));
        for (size_t t = trail_begin; t < hi; ++t) out.emplace_back(1, chunk[t]);
    }
    return out;
}

LabelSet::LabelSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate label: " + labels_[i]);
    }
}

int LabelSet::id_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw std::out_of_range("unknown label: " + label);
    return it->second;
}

int LabelSet::find(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

void Corpus::rebuild_spans() {
    spans_.clear();
    std::set<std::string> seen;
    size_t begin = 0;
    for (size_t i = 0; i < utterances_.size(); ++i) {
        const bool boundary = i > 0 && utterances_[i].dialogue_id != utterances_[i - 1].dialogue_id;
        if (boundary) {
            spans_.emplace_back(begin, i);
            begin = i;
        }
        if (i == begin) {
            if (!seen.insert(utterances_[i].dialogue_id).second)
                throw std::invalid_argument("dialogue '" + utterances_[i].dialogue_id +
                                            "' is not contiguous in the corpus");
        }
    }
    if (!utterances_.empty()) spans_.emplace_back(begin, utterances_.size());
}

Corpus Corpus::from_utterances(std::vector<Utterance> utterances) {
    for (const auto& u : utterances) {
        if (u.tokens.empty())
            throw std::invalid_argument("utterance with empty token sequence in dialogue '" +
                                        u.dialogue_id + "'");
    }
    Corpus c;
    c.utterances_ = std::move(utterances);
    c.rebuild_spans();
    return c;
}

Corpus Corpus::load_tsv(const std::string& path, bool pretokenized) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    std::vector<Utterance> utterances;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const size_t t1 = line.find('\t');
        const size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 3 tab-separated fields");
        Utterance u;
        u.dialogue_id = line.substr(0, t1);
        u.label = line.substr(t1 + 1, t2 - t1 - 1);
        const std::string text = line.substr(t2 + 1);
        if (u.dialogue_id.empty() || u.label.empty())
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": empty dialogue id or label");
        if (pretokenized) {
            std::istringstream ts(text);
            std::string tok;
            while (ts >> tok) u.tokens.push_back(tok);
        } else {
            u.tokens = tokenize(text);
        }
        if (u.tokens.empty())
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": utterance text has no tokens");
        utterances.push_back(std::move(u));
    }
    try {
        return from_utterances(std::move(utterances));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void Corpus::save_tsv(const std::string& path) const {
    std::string out;
    for (const auto& u : utterances_) {
        out += u.dialogue_id;
        out += '\t';
        out += u.label;
        out += '\t';
        out += join(u.tokens, " ");
        out += '\n';
    }
    write_file_bytes(path, out);
}

std::span<const Utterance> Corpus::dialogue(size_t d) const {
    auto [b, e] = spans_.at(d);
    return {utterances_.data() + b, e - b};
}

LabelSet Corpus::label_set() const {
    std::set<std::string> labels;
    for (const auto& u : utterances_) labels.insert(u.label);
    return LabelSet(std::vector<std::string>(labels.begin(), labels.end()));
}

Corpus Corpus::subset_by_dialogues(const std::vector<size_t>& dialogue_indices) const {
    std::vector<Utterance> out;
    for (size_t d : dialogue_indices) {
        auto span = dialogue(d);
        out.insert(out.end(), span.begin(), span.end());
    }
    return from_utterances(std::move(out));
}

Corpus Corpus::take_utterances(size_t n) const {
    std::vector<Utterance> out;
    for (size_t d = 0; d < dialogue_count() && out.size() < n; ++d) {
        auto span = dialogue(d);
        out.insert(out.end(), span.begin(), span.end());
    }
    return from_utterances(std::move(out));
}

std::vector<FoldSplit> kfold_split(const Corpus& corpus, int k, uint64_t seed) {
    if (k < 2) throw std::invalid_argument("kfold_split: k must be at least 2");
    const size_t n_dialogues = corpus.dialogue_count();
    if (static_cast<size_t>(k) > n_dialogues)
        throw std::invalid_argument("kfold_split: k=" + std::to_string(k) + " exceeds the " +
                                    std::to_string(n_dialogues) + " dialogues available");

    std::vector<size_t> order(n_dialogues);
    for (size_t i = 0; i < n_dialogues; ++i) order[i] = i;
    RandomStream rng(mix_seed(seed, 0x6f1d5));
    rng.shuffle(order);

    std::vector<FoldSplit> folds;
    folds.reserve(k);
    for (int f = 0; f < k; ++f) {
        std::vector<size_t> train_ids, test_ids;
        for (size_t i = 0; i < n_dialogues; ++i) {
            if (static_cast<int>(i % k) == f)
                test_ids.push_back(order[i]);
            else
                train_ids.push_back(order[i]);
        }
        // Restore corpus order inside each side so encoding stays stable.
        std::sort(train_ids.begin(), train_ids.end());
        std::sort(test_ids.begin(), test_ids.end());
        folds.push_back({corpus.subset_by_dialogues(train_ids), corpus.subset_by_dialogues(test_ids)});
    }
    return folds;
}

std::unordered_map<std::string, int64_t> label_counts(const Corpus& corpus) {
    std::unordered_map<std::string, int64_t> counts;
    for (const auto& u : corpus.utterances()) ++counts[u.label];
    return counts;
}

}  // namespace dar
