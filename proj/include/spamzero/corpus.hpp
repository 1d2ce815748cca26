#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace spamzero {

enum class Label { spam, ham };

const char* to_string(Label l);
std::optional<Label> label_from_string(std::string_view s);

struct Message {
    std::string id;      // hex digest of (source, text); stable across reloads
    std::string text;    // raw, unmodified
    std::string source;  // file path or corpus name
    std::optional<Label> gold_label;
};

struct DedupStats {
    std::int64_t input_count = 0;
    std::int64_t kept_count = 0;
    std::int64_t removed_count = 0;
};

struct Corpus {
    std::string name;
    std::vector<Message> messages;
    std::optional<DedupStats> dedup_stats;

    std::size_t size() const { return messages.size(); }
};

// One skipped record; serialized to the rejects report as JSONL.
struct RejectRecord {
    std::string file;
    std::int64_t line = 0;
    std::string reason;
};

struct LoadResult {
    Corpus corpus;
    std::vector<RejectRecord> rejects;
};

// SMS corpus: one record per line, `label<TAB>text`, labels ham/spam.
// A CSV variant with a header row is detected by sniffing the first line.
// Invalid UTF-8 bytes are replaced with U+FFFD; malformed records are
// skipped and reported, never fatal.
LoadResult load_sms_corpus(const std::filesystem::path& path,
                           std::optional<std::size_t> limit = std::nullopt);

// Single RFC-822-style message: text = subject + "\n" + plain-text body.
// Multipart messages take the text/plain alternative; HTML-only bodies are
// tag-stripped. No gold label.
Message load_eml(const std::filesystem::path& path);

enum class DedupKey { raw, normalized };

// Keeps the first occurrence of each key, preserving order. `normalized`
// compares normalize() output under the default PrepConfig.
Corpus dedup_corpus(const Corpus& corpus, DedupKey key);

// Deterministic stratified sample: per-class quotas by largest remainder,
// messages sorted by id, Fisher-Yates shuffle seeded per class, quota
// prefix taken, result emitted in original corpus order.
Corpus sample_stratified(const Corpus& corpus, std::size_t n, std::uint64_t seed);

void write_rejects_jsonl(const std::filesystem::path& path,
                         const std::vector<RejectRecord>& rejects);

}  // namespace spamzero
