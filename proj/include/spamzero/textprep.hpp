#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace spamzero {

struct Message;

struct PrepConfig {
    bool lowercase = true;
    bool strip_non_alphabetic = true;
    bool keep_digits = false;
    std::string stopword_list_id = "english-basic";
    int min_token_length = 1;
};

// A shipped word list, loaded once and read-only afterwards.
// File format: UTF-8, one word per line, '#' starts a comment line.
class StopwordList {
  public:
    StopwordList() = default;

    // Reads <dir>/<id>.txt; throws ConfigError when the list does not exist.
    static StopwordList load(const std::filesystem::path& dir, const std::string& id);

    // Resolves the data directory from SPAMZERO_DATA or the built-in default.
    static StopwordList load_default(const std::string& id = "english-basic");

    bool contains(std::string_view word) const { return words_.count(std::string(word)) > 0; }
    std::size_t size() const { return words_.size(); }
    const std::string& id() const { return id_; }

  private:
    std::string id_;
    std::unordered_set<std::string> words_;
};

// Data directory resolution: $SPAMZERO_DATA, else the compiled-in default.
std::filesystem::path default_data_dir();

struct PreprocessedMessage {
    std::string message_id;
    std::string clean_text;
    std::vector<std::string> tokens;
    int removed_stopword_count = 0;
    int removed_char_count = 0;
};

// Fixed rule order: lowercase, strip excluded characters to spaces,
// collapse whitespace runs, trim. Stopwords are not touched here.
std::string normalize(std::string_view text, const PrepConfig& config = {});

// Drops stopwords and tokens shorter than min_token_length. Tokens are
// expected to be normalize() output split on spaces.
std::pair<std::vector<std::string>, int> remove_stopwords(std::vector<std::string> tokens,
                                                          const StopwordList& stopwords,
                                                          const PrepConfig& config = {});

PreprocessedMessage preprocess(const Message& message, const StopwordList& stopwords,
                               const PrepConfig& config = {});

std::vector<std::string> split_whitespace(std::string_view text);

}  // namespace spamzero
