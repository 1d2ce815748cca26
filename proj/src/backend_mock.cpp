#include <unordered_set>

#include "spamzero/backend.hpp"
#include "spamzero/textprep.hpp"

namespace spamzero {

const std::vector<std::string>& MockBackend::keywords() {
    // Pinned list; fixture expectations are hand-computable from it.
    static const std::vector<std::string> kw = {
        "win",  "free",   "prize",  "claim",           "urgent",
        "cash", "winner", "congratulations", "txt",    "call",
    };
    return kw;
}

int MockBackend::keyword_count(std::string_view text) {
    PrepConfig cfg;
    cfg.keep_digits = true;  // same normalization as parse_generation
    const auto tokens = split_whitespace(normalize(text, cfg));
    const std::unordered_set<std::string> present(tokens.begin(), tokens.end());

    int k = 0;
    for (const auto& kw : keywords())
        if (present.count(kw)) ++k;
    return k;
}

std::string MockBackend::generate(const GenerateRequest& req) {
    const std::string answer = keyword_count(req.prompt) > 0 ? "spam" : "ham";
    // single-word answers always fit, but honor the contract anyway
    const auto tokens = split_whitespace(answer);
    std::string out;
    for (std::size_t i = 0; i < tokens.size() && i < static_cast<std::size_t>(req.max_tokens); ++i) {
        if (i) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

std::vector<ScoreResult> MockBackend::score(const ScoreRequest& req) {
    const int k = keyword_count(req.prompt);
    std::vector<ScoreResult> results;
    results.reserve(req.continuations.size());
    for (const auto& cont : req.continuations) {
        ScoreResult r;
        r.token_count = 1;
        if (cont == "spam") {
            r.total_logprob = -1.0 - std::max(0, 3 - k);
        } else if (cont == "ham") {
            r.total_logprob = -1.0 - k;
        } else {
            r.total_logprob = -10.0;
        }
        results.push_back(r);
    }
    return results;
}

BackendInfo MockBackend::health_check() { return {"mock-v1", true}; }

}  // namespace spamzero
