#include "spamzero/textprep.hpp"

#include <cstdlib>
#include <fstream>

#include "spamzero/corpus.hpp"
#include "spamzero/errors.hpp"
#include "spamzero/unicode.hpp"

#ifndef SPAMZERO_DATA_DIR
#define SPAMZERO_DATA_DIR "data"
#endif

namespace spamzero {

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("SPAMZERO_DATA"); env && *env) return env;
    return SPAMZERO_DATA_DIR;
}

StopwordList StopwordList::load(const std::filesystem::path& dir, const std::string& id) {
    const auto path = dir / "stopwords" / (id + ".txt");
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("unknown stopword list '" + id + "': " + path.string() + " not found");
    }
    StopwordList list;
    list.id_ = id;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        list.words_.insert(line);
    }
    return list;
}

StopwordList StopwordList::load_default(const std::string& id) {
    return load(default_data_dir(), id);
}

std::string normalize(std::string_view text, const PrepConfig& config) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp = uni::decode_one(text, i);
        if (config.lowercase) cp = uni::to_lower(cp);

        bool keep;
        if (config.strip_non_alphabetic) {
            keep = uni::is_letter(cp) || (config.keep_digits && uni::is_digit(cp));
        } else {
            // whitespace still collapses even when stripping is off
            keep = cp != U' ' && cp != U'\t' && cp != U'\n' && cp != U'\r' && cp != U'\f' &&
                   cp != U'\v';
        }

        if (keep) {
            if (pending_space && !out.empty()) out.push_back(' ');
            pending_space = false;
            uni::append_utf8(out, cp);
        } else {
            pending_space = true;
        }
    }
    return out;
}

namespace {
// Locale-independent; tokenization must not depend on the host environment.
bool ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
}  // namespace

std::vector<std::string> split_whitespace(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (start < text.size()) {
        while (start < text.size() && ascii_space(text[start])) ++start;
        if (start >= text.size()) break;
        std::size_t end = start;
        while (end < text.size() && !ascii_space(text[end])) ++end;
        tokens.emplace_back(text.substr(start, end - start));
        start = end;
    }
    return tokens;
}

std::pair<std::vector<std::string>, int> remove_stopwords(std::vector<std::string> tokens,
                                                          const StopwordList& stopwords,
                                                          const PrepConfig& config) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    int removed = 0;
    for (auto& tok : tokens) {
        const bool too_short =
            uni::codepoint_count(tok) < static_cast<std::size_t>(std::max(0, config.min_token_length));
        if (too_short || stopwords.contains(tok)) {
            ++removed;
        } else {
            kept.push_back(std::move(tok));
        }
    }
    return {std::move(kept), removed};
}

PreprocessedMessage preprocess(const Message& message, const StopwordList& stopwords,
                               const PrepConfig& config) {
    PreprocessedMessage out;
    out.message_id = message.id;

    const std::string normalized = normalize(message.text, config);
    out.removed_char_count = static_cast<int>(uni::codepoint_count(message.text) -
                                              uni::codepoint_count(normalized));

    auto [tokens, removed] = remove_stopwords(split_whitespace(normalized), stopwords, config);
    out.removed_stopword_count = removed;
    out.tokens = std::move(tokens);

    for (std::size_t i = 0; i < out.tokens.size(); ++i) {
        if (i) out.clean_text.push_back(' ');
        out.clean_text += out.tokens[i];
    }
    return out;
}

}  // namespace spamzero
