#include "spamzero/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "spamzero/errors.hpp"
#include "spamzero/hash.hpp"
#include "spamzero/textprep.hpp"
#include "spamzero/unicode.hpp"

namespace spamzero {

const char* to_string(Label l) { return l == Label::spam ? "spam" : "ham"; }

std::optional<Label> label_from_string(std::string_view s) {
    if (s == "spam") return Label::spam;
    if (s == "ham") return Label::ham;
    return std::nullopt;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Re-encodes, replacing invalid sequences with U+FFFD. Spam corpora are
// dirty in practice; a bad byte must not abort a run.
std::string sanitize_utf8(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) uni::append_utf8(out, uni::decode_one(raw, i));
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
    return std::string(s.substr(b, e - b));
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.emplace_back(line);
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    // a trailing newline does not create a final empty record
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

// Minimal CSV field splitter with double-quote escaping, enough for the
// common `label,"text..."` distribution of the corpus.
std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

LoadResult load_sms_corpus(const std::filesystem::path& path, std::optional<std::size_t> limit) {
    const std::string content = sanitize_utf8(read_file(path));
    const std::vector<std::string> lines = split_lines(content);
    const std::string source = path.string();

    LoadResult result;
    result.corpus.name = path.filename().string();

    bool csv_mode = false;
    std::size_t first_record = 0;
    if (!lines.empty()) {
        const std::string& head = lines[0];
        if (head.find('\t') == std::string::npos && head.find(',') != std::string::npos) {
            csv_mode = true;
            const std::string first_cell = ascii_lower(trim(split_csv(head)[0]));
            if (!label_from_string(first_cell)) first_record = 1;  // header row
        }
    }

    // Duplicate texts share the digest; occurrence suffixes keep ids unique
    // within the corpus while staying stable across reloads. dedup_corpus
    // keeps first occurrences, whose ids are the bare digests.
    std::unordered_map<std::string, int> occurrence;
    for (std::size_t li = first_record; li < lines.size(); ++li) {
        if (limit && result.corpus.messages.size() >= *limit) break;
        const std::string& line = lines[li];
        if (trim(line).empty()) continue;

        std::string label_field, text;
        if (csv_mode) {
            const auto fields = split_csv(line);
            if (fields.size() < 2) {
                result.rejects.push_back(
                    {source, static_cast<std::int64_t>(li + 1), "missing text column"});
                continue;
            }
            label_field = fields[0];
            text = fields[1];
        } else {
            const std::size_t tab = line.find('\t');
            if (tab == std::string::npos) {
                result.rejects.push_back(
                    {source, static_cast<std::int64_t>(li + 1), "missing tab separator"});
                continue;
            }
            label_field = line.substr(0, tab);
            text = line.substr(tab + 1);
        }

        const auto label = label_from_string(ascii_lower(trim(label_field)));
        if (!label) {
            result.rejects.push_back({source, static_cast<std::int64_t>(li + 1),
                                      "unknown label '" + trim(label_field) + "'"});
            continue;
        }

        Message m;
        m.text = std::move(text);
        m.source = source;
        m.gold_label = label;
        m.id = message_id(m.source, m.text);
        const int seen = occurrence[m.id]++;
        if (seen > 0) m.id += "-" + std::to_string(seen);
        result.corpus.messages.push_back(std::move(m));
    }
    return result;
}

namespace {

struct MailPart {
    std::map<std::string, std::string> headers;  // lowercased names
    std::string body;
};

// Parses a header block plus body. Header lines fold per RFC 822
// (continuation lines start with whitespace).
MailPart parse_mail(const std::string& content) {
    MailPart part;
    std::istringstream in(content);
    std::string line;
    std::string current_name, current_value;
    bool in_headers = true;
    std::ostringstream body;
    bool first_body_line = true;

    auto flush_header = [&]() {
        if (!current_name.empty()) part.headers[ascii_lower(current_name)] = trim(current_value);
        current_name.clear();
        current_value.clear();
    };

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (in_headers) {
            if (line.empty()) {
                flush_header();
                in_headers = false;
                continue;
            }
            if (line[0] == ' ' || line[0] == '\t') {
                if (current_name.empty())
                    throw Error("unparseable message: continuation line before any header");
                current_value += " " + trim(line);
                continue;
            }
            const std::size_t colon = line.find(':');
            if (colon == std::string::npos)
                throw Error("unparseable message: malformed header '" + line + "'");
            flush_header();
            current_name = line.substr(0, colon);
            current_value = trim(line.substr(colon + 1));
        } else {
            if (!first_body_line) body << '\n';
            body << line;
            first_body_line = false;
        }
    }
    if (in_headers) flush_header();
    part.body = body.str();
    return part;
}

std::string header_param(const std::string& header_value, const std::string& param) {
    // e.g. multipart/alternative; boundary="xyz"
    const std::string lower = ascii_lower(header_value);
    std::size_t pos = lower.find(param + "=");
    if (pos == std::string::npos) return {};
    std::string rest = header_value.substr(pos + param.size() + 1);
    rest = trim(rest);
    if (!rest.empty() && rest[0] == '"') {
        const std::size_t close = rest.find('"', 1);
        return close == std::string::npos ? rest.substr(1) : rest.substr(1, close - 1);
    }
    const std::size_t semi = rest.find(';');
    return trim(semi == std::string::npos ? rest : rest.substr(0, semi));
}

std::string strip_html(const std::string& html) {
    std::string out;
    out.reserve(html.size());
    bool in_tag = false;
    std::string tag;
    for (char c : html) {
        if (in_tag) {
            if (c == '>') {
                in_tag = false;
                const std::string t = ascii_lower(trim(tag));
                if (t == "br" || t == "br/" || t == "/p" || t == "/div" || t == "/tr" ||
                    t == "/li" || t.rfind("/h", 0) == 0)
                    out.push_back('\n');
            } else {
                tag.push_back(c);
            }
        } else if (c == '<') {
            in_tag = true;
            tag.clear();
        } else {
            out.push_back(c);
        }
    }
    static const std::pair<const char*, const char*> entities[] = {
        {"&amp;", "&"}, {"&lt;", "<"},    {"&gt;", ">"},
        {"&quot;", "\""}, {"&#39;", "'"}, {"&apos;", "'"},
        {"&nbsp;", " "},
    };
    for (const auto& [from, to] : entities) {
        std::size_t pos = 0;
        while ((pos = out.find(from, pos)) != std::string::npos) {
            out.replace(pos, std::string(from).size(), to);
            pos += std::string(to).size();
        }
    }
    return out;
}

bool content_type_is(const MailPart& part, const std::string& type) {
    auto it = part.headers.find("content-type");
    if (it == part.headers.end()) return type == "text/plain";  // default per RFC
    return ascii_lower(it->second).rfind(type, 0) == 0;
}

std::string extract_text_body(const MailPart& mail) {
    auto ct = mail.headers.find("content-type");
    const std::string content_type = ct == mail.headers.end() ? "" : ascii_lower(ct->second);

    if (content_type.rfind("multipart/", 0) == 0) {
        const std::string boundary = header_param(ct->second, "boundary");
        if (boundary.empty())
            throw Error("unparseable message: Content-Type multipart without boundary");

        std::vector<MailPart> parts;
        const std::string delim = "--" + boundary;
        std::istringstream in(mail.body);
        std::string line;
        std::ostringstream cur;
        bool in_part = false;
        bool first_line = true;
        auto flush_part = [&]() {
            if (in_part) parts.push_back(parse_mail(cur.str()));
            cur.str("");
            cur.clear();
            first_line = true;
        };
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line == delim || line == delim + "--") {
                flush_part();
                in_part = line == delim;
                continue;
            }
            if (in_part) {
                if (!first_line) cur << '\n';
                cur << line;
                first_line = false;
            }
        }
        flush_part();
        if (parts.empty()) throw Error("unparseable message: multipart body has no parts");

        for (const auto& p : parts)
            if (content_type_is(p, "text/plain")) return p.body;
        for (const auto& p : parts)
            if (content_type_is(p, "text/html")) return strip_html(p.body);
        throw Error("unparseable message: no text part in multipart body");
    }

    if (content_type.rfind("text/html", 0) == 0) return strip_html(mail.body);
    return mail.body;
}

}  // namespace

Message load_eml(const std::filesystem::path& path) {
    const std::string content = sanitize_utf8(read_file(path));
    const MailPart mail = parse_mail(content);

    std::string subject;
    if (auto it = mail.headers.find("subject"); it != mail.headers.end()) subject = it->second;

    Message m;
    m.source = path.string();
    m.text = subject + "\n" + trim(extract_text_body(mail));
    m.id = message_id(m.source, m.text);
    return m;
}

Corpus dedup_corpus(const Corpus& corpus, DedupKey key) {
    Corpus out;
    out.name = corpus.name;
    std::unordered_set<std::string> seen;
    DedupStats stats;
    stats.input_count = static_cast<std::int64_t>(corpus.messages.size());

    const PrepConfig default_prep{};
    for (const auto& m : corpus.messages) {
        const std::string k = key == DedupKey::raw ? m.text : normalize(m.text, default_prep);
        if (seen.insert(k).second) {
            out.messages.push_back(m);
        } else {
            ++stats.removed_count;
        }
    }
    stats.kept_count = static_cast<std::int64_t>(out.messages.size());
    out.dedup_stats = stats;
    return out;
}

Corpus sample_stratified(const Corpus& corpus, std::size_t n, std::uint64_t seed) {
    if (n == 0 || n > corpus.messages.size())
        throw ConfigError("sample size " + std::to_string(n) + " out of range for corpus of " +
                          std::to_string(corpus.messages.size()));

    // class name -> indices into corpus.messages
    std::map<std::string, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < corpus.messages.size(); ++i) {
        const auto& m = corpus.messages[i];
        if (!m.gold_label)
            throw ConfigError("stratified sampling requires gold labels; message " + m.id +
                              " has none");
        by_class[to_string(*m.gold_label)].push_back(i);
    }

    // largest-remainder quotas, ties broken by class name order
    const double total = static_cast<double>(corpus.messages.size());
    std::map<std::string, std::size_t> quota;
    std::vector<std::pair<double, std::string>> remainders;
    std::size_t assigned = 0;
    for (const auto& [cls, members] : by_class) {
        const double exact = static_cast<double>(n) * static_cast<double>(members.size()) / total;
        const auto base = static_cast<std::size_t>(exact);
        quota[cls] = base;
        assigned += base;
        remainders.emplace_back(exact - static_cast<double>(base), cls);
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto& [rem, cls] : remainders) {
        if (assigned >= n) break;
        if (quota[cls] < by_class[cls].size()) {
            ++quota[cls];
            ++assigned;
        }
    }
    // rounding can leave a gap when a favored class is already exhausted
    for (auto& [cls, members] : by_class) {
        while (assigned < n && quota[cls] < members.size()) {
            ++quota[cls];
            ++assigned;
        }
    }

    std::vector<char> selected(corpus.messages.size(), 0);
    for (const auto& [cls, members] : by_class) {
        std::vector<std::size_t> order = members;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return corpus.messages[a].id < corpus.messages[b].id;
        });
        // explicit Fisher-Yates: std::shuffle is not portable across libraries
        std::mt19937_64 rng(seed ^ fnv1a64(cls));
        for (std::size_t i = order.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(rng() % i);
            std::swap(order[i - 1], order[j]);
        }
        for (std::size_t i = 0; i < quota[cls]; ++i) selected[order[i]] = 1;
    }

    Corpus out;
    out.name = corpus.name;
    for (std::size_t i = 0; i < corpus.messages.size(); ++i)
        if (selected[i]) out.messages.push_back(corpus.messages[i]);
    return out;
}

void write_rejects_jsonl(const std::filesystem::path& path,
                         const std::vector<RejectRecord>& rejects) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write rejects report: " + path.string());
    for (const auto& r : rejects) {
        nlohmann::json j{{"file", r.file}, {"line", r.line}, {"reason", r.reason}};
        out << j.dump() << "\n";
    }
}

}  // namespace spamzero
