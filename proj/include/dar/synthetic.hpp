#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dar/corpus.hpp"

namespace dar {

// Configuration of the synthetic dialogue generator used for desk-scale
// experiments. Dialogues open with a greeting and close with a farewell;
// the body is a run of sampled events. A "pair" event emits one statement
// and one yes/no question built from the same sampled words, so the two
// classes differ in word order only and a bag-of-words model cannot
// separate them. A "qa" event emits an open question followed by a
// yes/no answer.
struct SyntheticConfig {
    int n_dialogues = 100;
    uint64_t seed = 0;
    double p_pair = 0.4;  // body event probabilities; remainder is a single utterance
    double p_qa = 0.3;
    int min_body_events = 3;
    int max_body_events = 6;

    static const std::vector<std::string>& class_labels();

    // Labels of the order-sensitive pair.
    static const char* statement_label() { return "statement"; }
    static const char* ynquestion_label() { return "ynquestion"; }

    // Analytic per-class utterance fractions implied by the event mixture.
    std::map<std::string, double> expected_fractions() const;

    // Number of distinct surface forms the generator can emit.
    static int distinct_token_count();
};

Corpus generate_synthetic(const SyntheticConfig& config);
Corpus generate_synthetic(int n_dialogues, uint64_t seed);

// Generates dialogues until at least n_utterances are produced, then trims
// the tail so exactly n_utterances remain (the final dialogue may be cut).
Corpus generate_synthetic_utterances(size_t n_utterances, uint64_t seed);

// Manifest: one "label,count" row per class, labels sorted.
void write_manifest_csv(const std::string& path, const Corpus& corpus);

}  // namespace dar
