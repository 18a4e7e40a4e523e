#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dar/corpus.hpp"
#include "dar/vocab.hpp"

namespace dar {

// One utterance prepared for the classifiers: a fixed-length token-index
// sequence with a validity mask, the bag-of-words of the previous utterance
// in the same dialogue, and the gold label.
struct EncodedSentence {
    std::vector<int32_t> token_ids;  // length L; Vocabulary::kPaddingIndex where mask is false
    std::vector<uint8_t> mask;       // length L; 1 = real token
    std::vector<uint8_t> prev_bow;   // length |V|; slot j corresponds to vocabulary index j+1
    int32_t label_id = -1;
};

// Fixed-length layout: slots [0, L-5) hold the first tokens of the
// sentence, the final five slots hold its last tokens. Short sentences may
// duplicate tokens between the two regions; unused slots are PADDING with
// mask false. Requires L >= 6.
std::pair<std::vector<int32_t>, std::vector<uint8_t>> encode_sentence(
    const std::vector<std::string>& tokens, const Vocabulary& vocab, int max_len = 15);

// Binary occurrence vector of the previous utterance of the dialogue
// (all-zero for the first utterance). Out-of-vocabulary words set the UNK
// slot; repetitions collapse.
std::vector<uint8_t> prev_bow(std::span<const Utterance> dialogue, size_t i, const Vocabulary& vocab);

// Occurrence vector of a single token sequence (same indexing as prev_bow).
std::vector<uint8_t> bow_vector(const std::vector<std::string>& tokens, const Vocabulary& vocab);

struct EncodeReport {
    size_t n_examples = 0;
    size_t n_empty = 0;       // encoded as all-PADDING
    size_t n_truncated = 0;   // longer than max_len
    size_t n_oov_tokens = 0;
    size_t n_tokens = 0;
};

// Encodes every utterance of the corpus against a vocabulary and label set.
std::vector<EncodedSentence> encode_corpus(const Corpus& corpus, const Vocabulary& vocab,
                                           const LabelSet& labels, int max_len = 15,
                                           EncodeReport* report = nullptr);

}  // namespace dar
