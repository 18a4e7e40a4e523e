#include "dar/synthetic.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dar/rng.hpp"
#include "dar/util.hpp"

namespace dar {

namespace {

// Word pools. The pools of different single-utterance classes are disjoint
// so that every class except the statement/ynquestion pair is separable
// from surface forms alone.
const std::vector<std::string> kPronouns = {"you", "we", "they", "he", "she", "i"};
const std::vector<std::string> kAuxiliaries = {"can", "will", "should", "must", "could"};
const std::vector<std::string> kVerbs = {"go", "stay", "leave", "start", "stop", "wait", "play", "work"};
const std::vector<std::string> kAdverbs = {"now", "today", "soon", "later", "here", "there", "tomorrow"};
const std::vector<std::string> kWhWords = {"what", "where", "when", "why", "how", "who"};
const std::vector<std::string> kDoForms = {"do", "did", "does"};

const std::vector<std::vector<std::string>> kYesAnswers = {
    {"yes"}, {"yeah"}, {"yep"}, {"sure"}, {"absolutely"}, {"yes", "sure"}, {"yeah", "absolutely"}};
const std::vector<std::vector<std::string>> kNoAnswers = {
    {"no"}, {"nope"}, {"never"}, {"no", "way"}, {"not", "really"}};
const std::vector<std::vector<std::string>> kBackchannels = {
    {"uh-huh"}, {"hmm"}, {"oh"}, {"okay"}, {"well"}, {"right"}, {"oh", "okay"}};
const std::vector<std::vector<std::string>> kThanks = {
    {"thanks"}, {"thank", "you"}, {"thanks", "a", "lot"}, {"thank", "you", "very", "much"}};
const std::vector<std::vector<std::string>> kGreetings = {
    {"hello"}, {"hi"}, {"hey"}, {"hi", "everyone"}, {"good", "morning"}, {"hello", "again"}};
const std::vector<std::vector<std::string>> kClosings = {
    {"goodbye"}, {"bye"}, {"bye", "bye"}, {"see", "you"}, {"take", "care"}, {"farewell"}};

constexpr const char* kFiller = "uh";

std::vector<std::string> all_class_labels() {
    return {"backchannel", "closing",  "greeting", "no_answer", "openquestion",
            "statement",   "thanks",   "ynquestion", "yes_answer"};
}

}  // namespace

const std::vector<std::string>& SyntheticConfig::class_labels() {
    static const std::vector<std::string> labels = all_class_labels();
    return labels;
}

int SyntheticConfig::distinct_token_count() {
    std::set<std::string> forms;
    auto add_pool = [&forms](const std::vector<std::string>& pool) {
        forms.insert(pool.begin(), pool.end());
    };
    auto add_phrases = [&forms](const std::vector<std::vector<std::string>>& phrases) {
        for (const auto& p : phrases) forms.insert(p.begin(), p.end());
    };
    add_pool(kPronouns);
    add_pool(kAuxiliaries);
    add_pool(kVerbs);
    add_pool(kAdverbs);
    add_pool(kWhWords);
    add_pool(kDoForms);
    add_phrases(kYesAnswers);
    add_phrases(kNoAnswers);
    add_phrases(kBackchannels);
    add_phrases(kThanks);
    add_phrases(kGreetings);
    add_phrases(kClosings);
    forms.insert(kFiller);
    forms.insert(".");
    forms.insert("?");
    return static_cast<int>(forms.size());
}

std::map<std::string, double> SyntheticConfig::expected_fractions() const {
    const double p_single = 1.0 - p_pair - p_qa;
    const double events = 0.5 * (min_body_events + max_body_events);
    // Expected utterances per body event and per dialogue.
    const double per_event = 2.0 * p_pair + 2.0 * p_qa + 1.0 * p_single;
    const double per_dialogue = 2.0 + events * per_event;

    std::map<std::string, double> f;
    f["greeting"] = 1.0 / per_dialogue;
    f["closing"] = 1.0 / per_dialogue;
    f["statement"] = events * p_pair / per_dialogue;
    f["ynquestion"] = events * p_pair / per_dialogue;
    f["openquestion"] = events * p_qa / per_dialogue;
    f["yes_answer"] = events * p_qa * 0.5 / per_dialogue;
    f["no_answer"] = events * p_qa * 0.5 / per_dialogue;
    f["backchannel"] = events * p_single * 0.5 / per_dialogue;
    f["thanks"] = events * p_single * 0.5 / per_dialogue;
    return f;
}

namespace {

Utterance make_utterance(const std::string& dialogue_id, const std::string& label,
                         std::vector<std::string> tokens) {
    return Utterance{dialogue_id, label, std::move(tokens)};
}

void emit_pair(std::vector<Utterance>& out, const std::string& id, RandomStream& rng) {
    const std::string& pron = rng.pick(kPronouns);
    const std::string& aux = rng.pick(kAuxiliaries);
    const std::string& verb = rng.pick(kVerbs);
    const std::string& adv = rng.pick(kAdverbs);
    const bool filler = rng.bernoulli(0.25);
    const bool stop = rng.bernoulli(0.5);

    // Both utterances are built from the same sampled words so their token
    // multisets are identical; only the order differs.
    std::vector<std::string> statement, question;
    if (filler) {
        statement.push_back(kFiller);
        question.push_back(kFiller);
    }
    statement.insert(statement.end(), {pron, aux, verb, adv});
    question.insert(question.end(), {aux, pron, verb, adv});
    if (stop) {
        statement.push_back(".");
        question.push_back(".");
    }

    Utterance s = make_utterance(id, SyntheticConfig::statement_label(), std::move(statement));
    Utterance q = make_utterance(id, SyntheticConfig::ynquestion_label(), std::move(question));
    if (rng.bernoulli(0.5)) {
        out.push_back(std::move(s));
        out.push_back(std::move(q));
    } else {
        out.push_back(std::move(q));
        out.push_back(std::move(s));
    }
}

void emit_qa(std::vector<Utterance>& out, const std::string& id, RandomStream& rng) {
    std::vector<std::string> question = {rng.pick(kWhWords), rng.pick(kDoForms), rng.pick(kPronouns),
                                         rng.pick(kVerbs), "?"};
    out.push_back(make_utterance(id, "openquestion", std::move(question)));
    if (rng.bernoulli(0.5)) {
        out.push_back(make_utterance(id, "yes_answer", rng.pick(kYesAnswers)));
    } else {
        out.push_back(make_utterance(id, "no_answer", rng.pick(kNoAnswers)));
    }
}

void emit_single(std::vector<Utterance>& out, const std::string& id, RandomStream& rng) {
    if (rng.bernoulli(0.5)) {
        out.push_back(make_utterance(id, "backchannel", rng.pick(kBackchannels)));
    } else {
        out.push_back(make_utterance(id, "thanks", rng.pick(kThanks)));
    }
}

}  // namespace

Corpus generate_synthetic(const SyntheticConfig& config) {
    if (config.n_dialogues < 1) throw std::invalid_argument("generate_synthetic: need at least 1 dialogue");
    if (config.p_pair < 0 || config.p_qa < 0 || config.p_pair + config.p_qa > 1.0)
        throw std::invalid_argument("generate_synthetic: invalid event mixture");

    RandomStream rng(mix_seed(config.seed, 0x5f37));
    std::vector<Utterance> utterances;
    for (int d = 0; d < config.n_dialogues; ++d) {
        char id[16];
        std::snprintf(id, sizeof(id), "d%06d", d);
        const std::string dialogue_id(id);

        utterances.push_back(make_utterance(dialogue_id, "greeting", rng.pick(kGreetings)));
        const int body = config.min_body_events +
                         static_cast<int>(rng.uniform_int(config.max_body_events - config.min_body_events + 1));
        for (int e = 0; e < body; ++e) {
            const double r = rng.uniform();
            if (r < config.p_pair) {
                emit_pair(utterances, dialogue_id, rng);
            } else if (r < config.p_pair + config.p_qa) {
                emit_qa(utterances, dialogue_id, rng);
            } else {
                emit_single(utterances, dialogue_id, rng);
            }
        }
        utterances.push_back(make_utterance(dialogue_id, "closing", rng.pick(kClosings)));
    }
    return Corpus::from_utterances(std::move(utterances));
}

Corpus generate_synthetic(int n_dialogues, uint64_t seed) {
    SyntheticConfig config;
    config.n_dialogues = n_dialogues;
    config.seed = seed;
    return generate_synthetic(config);
}

Corpus generate_synthetic_utterances(size_t n_utterances, uint64_t seed) {
    SyntheticConfig config;
    config.seed = seed;
    // Average utterances per dialogue under the defaults is roughly 9.6;
    // overshoot and trim.
    config.n_dialogues = static_cast<int>(n_utterances / 8 + 2);
    Corpus corpus = generate_synthetic(config);
    while (corpus.size() < n_utterances) {
        config.n_dialogues += static_cast<int>((n_utterances - corpus.size()) / 8 + 1);
        corpus = generate_synthetic(config);
    }
    std::vector<Utterance> trimmed(corpus.utterances().begin(),
                                   corpus.utterances().begin() + n_utterances);
    return Corpus::from_utterances(std::move(trimmed));
}

void write_manifest_csv(const std::string& path, const Corpus& corpus) {
    auto counts = label_counts(corpus);
    std::vector<std::string> labels;
    for (const auto& [label, _] : counts) labels.push_back(label);
    std::sort(labels.begin(), labels.end());

    std::string out = "label,count\n";
    for (const auto& label : labels) out += label + "," + std::to_string(counts[label]) + "\n";
    write_file_bytes(path, out);
}

}  // namespace dar
