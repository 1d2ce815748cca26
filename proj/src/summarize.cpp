#include "spamzero/summarize.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "spamzero/backend.hpp"
#include "spamzero/errors.hpp"
#include "spamzero/unicode.hpp"

namespace spamzero {

const char* to_string(SummaryMethod m) {
    switch (m) {
        case SummaryMethod::passthrough: return "passthrough";
        case SummaryMethod::extractive: return "extractive";
        case SummaryMethod::abstractive: return "abstractive";
    }
    return "unknown";
}

std::string summarize_prompt(std::string_view text, int budget_tokens) {
    std::string prompt(kSummarizePromptPrefix);
    prompt += std::to_string(budget_tokens);
    prompt += " words:\n\n";
    prompt += text;
    return prompt;
}

namespace {

bool ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string trim_ws(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && ascii_space(s[b])) ++b;
    while (e > b && ascii_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

// First codepoint at or after `pos`, skipping ASCII whitespace.
char32_t first_nonspace_cp(std::string_view text, std::size_t pos) {
    while (pos < text.size() && ascii_space(text[pos])) ++pos;
    if (pos >= text.size()) return 0;
    return uni::decode_one(text, pos);
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> sentences;
    std::size_t start = 0;
    while (start < text.size() && ascii_space(text[start])) ++start;

    std::size_t i = start;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '!' || c == '?') {
            const std::size_t end = i + 1;
            if (end >= text.size() || ascii_space(text[end])) {
                const std::string sentence = trim_ws(text.substr(start, end - start));
                if (!sentence.empty()) sentences.push_back(sentence);
                start = end;
                while (start < text.size() && ascii_space(text[start])) ++start;
                i = start;
                continue;
            }
            ++i;
            continue;
        }
        if (c == '.') {
            std::size_t run_end = i + 1;
            while (run_end < text.size() && text[run_end] == '.') ++run_end;
            const std::size_t run_len = run_end - i;

            bool terminates;
            if (run_end >= text.size()) {
                terminates = true;
            } else if (!ascii_space(text[run_end])) {
                terminates = false;
            } else if (run_len == 1) {
                terminates = true;
            } else {
                // an ellipsis ends the sentence only before a new
                // uppercase-initial one
                terminates = uni::is_upper(first_nonspace_cp(text, run_end));
            }

            if (terminates) {
                const std::string sentence = trim_ws(text.substr(start, run_end - start));
                if (!sentence.empty()) sentences.push_back(sentence);
                start = run_end;
                while (start < text.size() && ascii_space(text[start])) ++start;
                i = start;
                continue;
            }
            i = run_end;
            continue;
        }
        ++i;
    }

    if (start < text.size()) {
        const std::string tail = trim_ws(text.substr(start));
        if (!tail.empty()) sentences.push_back(tail);
    }
    return sentences;
}

namespace {

std::vector<std::string> content_tokens(std::string_view text, const StopwordList& stopwords) {
    static const PrepConfig default_prep{};
    auto [tokens, removed] =
        remove_stopwords(split_whitespace(normalize(text, default_prep)), stopwords, default_prep);
    (void)removed;
    return tokens;
}

Summary passthrough_summary(std::string_view text) {
    Summary s;
    s.summary_text = std::string(text);
    s.method = SummaryMethod::passthrough;
    s.compression_ratio = 1.0;
    return s;
}

}  // namespace

Summary extractive_summary(std::string_view text, const SummaryConfig& config,
                           const StopwordList& stopwords) {
    const auto raw_tokens = split_whitespace(text);
    if (raw_tokens.size() <= static_cast<std::size_t>(std::max(1, config.budget_tokens)))
        return passthrough_summary(text);

    const auto sentences = split_sentences(text);
    if (sentences.empty()) return passthrough_summary(text);

    std::unordered_map<std::string, double> freq;
    for (const auto& tok : content_tokens(text, stopwords)) freq[tok] += 1.0;

    std::vector<double> scores(sentences.size(), 0.0);
    for (std::size_t si = 0; si < sentences.size(); ++si) {
        const auto toks = content_tokens(sentences[si], stopwords);
        if (toks.empty()) continue;
        double sum = 0.0;
        for (const auto& t : toks) sum += freq[t];
        scores[si] = sum / static_cast<double>(toks.size());
    }

    std::vector<std::size_t> order(sentences.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] > scores[b];  // stable: earlier sentence wins ties
    });

    const std::size_t take =
        std::min<std::size_t>(sentences.size(), static_cast<std::size_t>(std::max(1, config.budget_sentences)));
    std::vector<std::size_t> chosen(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take));
    std::sort(chosen.begin(), chosen.end());

    Summary s;
    s.method = SummaryMethod::extractive;
    s.sentence_indices = chosen;
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        if (k) s.summary_text.push_back(' ');
        s.summary_text += sentences[chosen[k]];
    }
    const auto in_chars = uni::codepoint_count(text);
    s.compression_ratio =
        in_chars == 0 ? 1.0
                      : static_cast<double>(uni::codepoint_count(s.summary_text)) /
                            static_cast<double>(in_chars);
    return s;
}

Summary abstractive_summary(std::string_view text, InferenceBackend& backend,
                            const SummaryConfig& config, const StopwordList& stopwords) {
    GenerateRequest req;
    req.prompt = summarize_prompt(text, config.budget_tokens);
    req.max_tokens = config.budget_tokens;
    req.deterministic = true;

    const std::string generated = trim_ws(backend.generate(req));
    if (generated.empty()) {
        Summary fallback = extractive_summary(text, config, stopwords);
        fallback.provenance = "abstractive-empty-fallback";
        return fallback;
    }

    Summary s;
    s.method = SummaryMethod::abstractive;
    s.summary_text = generated;
    const auto in_chars = uni::codepoint_count(text);
    s.compression_ratio =
        in_chars == 0 ? 1.0
                      : std::min(1.0, static_cast<double>(uni::codepoint_count(s.summary_text)) /
                                          static_cast<double>(in_chars));
    return s;
}

Summary maybe_summarize(std::string_view text, InferenceBackend* backend,
                        const SummaryConfig& config, const StopwordList& stopwords) {
    const auto token_count = split_whitespace(text).size();
    if (token_count < static_cast<std::size_t>(std::max(0, config.skip_below_tokens)))
        return passthrough_summary(text);

    switch (config.mode) {
        case SummaryMethod::extractive:
            return extractive_summary(text, config, stopwords);
        case SummaryMethod::abstractive:
            if (!backend)
                throw ConfigError("summary mode 'abstractive' requires an inference backend");
            return abstractive_summary(text, *backend, config, stopwords);
        default:
            throw ConfigError("invalid summary mode");
    }
}

}  // namespace spamzero
