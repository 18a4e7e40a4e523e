#include "dar/encoding.hpp"

#include <stdexcept>

namespace dar {

std::pair<std::vector<int32_t>, std::vector<uint8_t>> encode_sentence(
    const std::vector<std::string>& tokens, const Vocabulary& vocab, int max_len) {
    if (max_len < 6) throw std::invalid_argument("encode_sentence: max_len must be at least 6");

    const int n = static_cast<int>(tokens.size());
    std::vector<int32_t> ids(max_len, Vocabulary::kPaddingIndex);
    std::vector<uint8_t> mask(max_len, 0);

    const int head_slots = max_len - 5;
    const int head = std::min(n, head_slots);
    for (int i = 0; i < head; ++i) {
        ids[i] = vocab.index_of(tokens[i]);
        mask[i] = 1;
    }
    const int tail = std::min(n, 5);
    for (int j = 0; j < tail; ++j) {
        ids[head_slots + j] = vocab.index_of(tokens[n - tail + j]);
        mask[head_slots + j] = 1;
    }
    return {std::move(ids), std::move(mask)};
}

std::vector<uint8_t> bow_vector(const std::vector<std::string>& tokens, const Vocabulary& vocab) {
    std::vector<uint8_t> bow(vocab.size(), 0);
    for (const auto& tok : tokens) bow[vocab.index_of(tok) - 1] = 1;
    return bow;
}

std::vector<uint8_t> prev_bow(std::span<const Utterance> dialogue, size_t i, const Vocabulary& vocab) {
    if (i >= dialogue.size()) throw std::out_of_range("prev_bow: utterance index out of range");
    if (i == 0) return std::vector<uint8_t>(vocab.size(), 0);
    return bow_vector(dialogue[i - 1].tokens, vocab);
}

std::vector<EncodedSentence> encode_corpus(const Corpus& corpus, const Vocabulary& vocab,
                                           const LabelSet& labels, int max_len,
                                           EncodeReport* report) {
    std::vector<EncodedSentence> out;
    out.reserve(corpus.size());
    EncodeReport rep;
    for (size_t d = 0; d < corpus.dialogue_count(); ++d) {
        auto dia = corpus.dialogue(d);
        for (size_t i = 0; i < dia.size(); ++i) {
            EncodedSentence ex;
            auto [ids, mask] = encode_sentence(dia[i].tokens, vocab, max_len);
            ex.token_ids = std::move(ids);
            ex.mask = std::move(mask);
            ex.prev_bow = prev_bow(dia, i, vocab);
            ex.label_id = labels.id_of(dia[i].label);
            ++rep.n_examples;
            if (dia[i].tokens.empty()) ++rep.n_empty;
            if (static_cast<int>(dia[i].tokens.size()) > max_len) ++rep.n_truncated;
            for (const auto& tok : dia[i].tokens) {
                ++rep.n_tokens;
                if (!vocab.contains(tok)) ++rep.n_oov_tokens;
            }
            out.push_back(std::move(ex));
        }
    }
    if (report) *report = rep;
    return out;
}

}  // namespace dar
