#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spamzero/textprep.hpp"

namespace spamzero {

class InferenceBackend;

enum class SummaryMethod { passthrough, extractive, abstractive };

const char* to_string(SummaryMethod m);

struct Summary {
    std::string message_id;
    std::string summary_text;
    SummaryMethod method = SummaryMethod::passthrough;
    double compression_ratio = 1.0;  // summary chars / input chars (codepoints)
    std::vector<std::size_t> sentence_indices;  // extractive only
    std::string provenance;  // e.g. fallback note; empty normally
};

struct SummaryConfig {
    int skip_below_tokens = 64;
    int budget_sentences = 3;
    int budget_tokens = 96;
    SummaryMethod mode = SummaryMethod::extractive;  // extractive | abstractive
};

// Exact instruction sent to generative backends; recorded in run manifests.
constexpr std::string_view kSummarizePromptPrefix =
    "Summarize the following message in at most ";

std::string summarize_prompt(std::string_view text, int budget_tokens);

// Splits on . ! ? followed by whitespace or end of text. A run of two or
// more dots terminates only when followed by whitespace and an uppercase
// letter, so ellipses inside a sentence do not split it.
std::vector<std::string> split_sentences(std::string_view text);

// Frequency-scored extraction: sentences scored by the mean corpus
// frequency of their non-stopword tokens, top budget_sentences kept in
// original order. Texts within budget_tokens pass through unchanged.
Summary extractive_summary(std::string_view text, const SummaryConfig& config,
                           const StopwordList& stopwords);

// Sends the pinned instruction prompt through the backend; an empty
// generation falls back to extractive_summary with the fallback recorded.
Summary abstractive_summary(std::string_view text, InferenceBackend& backend,
                            const SummaryConfig& config, const StopwordList& stopwords);

// Passthrough below skip_below_tokens, otherwise the configured mode.
// backend may be null for the extractive mode.
Summary maybe_summarize(std::string_view text, InferenceBackend* backend,
                        const SummaryConfig& config, const StopwordList& stopwords);

}  // namespace spamzero
