#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "spamzero/backend.hpp"
#include "spamzero/errors.hpp"

namespace spamzero {

using nlohmann::json;

namespace {

std::string excerpt(const std::string& body) {
    constexpr std::size_t kMax = 200;
    if (body.size() <= kMax) return body;
    return body.substr(0, kMax) + "...";
}

json parse_response(const std::string& body, const std::string& path) {
    json parsed = json::parse(body, nullptr, false);
    if (parsed.is_discarded())
        throw ProtocolError("malformed JSON from " + path + ": " + excerpt(body));
    return parsed;
}

}  // namespace

RemoteBackend::RemoteBackend(std::string base_url, RetryPolicy retry, int max_in_flight)
    : base_url_(std::move(base_url)), retry_(retry), max_in_flight_(max_in_flight) {}

RemoteBackend::~RemoteBackend() = default;

std::string RemoteBackend::post_with_retry(const std::string& path, const std::string& body) {
    std::string last_error;
    auto backoff = retry_.initial_backoff;

    for (int attempt = 0; attempt <= retry_.max_retries; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(backoff);
            backoff = std::chrono::milliseconds(
                static_cast<std::int64_t>(static_cast<double>(backoff.count()) * retry_.multiplier));
        }

        httplib::Client client(base_url_);
        client.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(retry_.timeout));
        client.set_read_timeout(std::chrono::duration_cast<std::chrono::seconds>(retry_.timeout));

        auto res = client.Post(path, body, "application/json");
        if (!res) {
            last_error = "transport failure (" + httplib::to_string(res.error()) + ")";
            continue;  // retryable
        }
        if (res->status >= 500) {
            last_error = "server error " + std::to_string(res->status);
            continue;  // retryable
        }
        if (res->status >= 400) {
            std::string detail = excerpt(res->body);
            json parsed = json::parse(res->body, nullptr, false);
            if (parsed.is_object() && parsed.contains("error"))
                detail = parsed["error"].get<std::string>();
            throw ProtocolError("backend rejected " + path + " (" + std::to_string(res->status) +
                                "): " + detail);
        }
        return res->body;
    }
    throw RetryableError("backend " + base_url_ + path + " failed after " +
                         std::to_string(retry_.max_retries + 1) + " attempts: " + last_error);
}

std::string RemoteBackend::generate(const GenerateRequest& req) {
    const json body{{"prompt", req.prompt},
                    {"max_tokens", req.max_tokens},
                    {"deterministic", req.deterministic}};
    const json parsed = parse_response(post_with_retry("/v1/generate", body.dump()), "/v1/generate");
    if (!parsed.is_object() || !parsed.contains("text") || !parsed["text"].is_string())
        throw ProtocolError("generate response missing 'text': " + excerpt(parsed.dump()));
    return parsed["text"].get<std::string>();
}

std::vector<ScoreResult> RemoteBackend::score(const ScoreRequest& req) {
    const json body{{"prompt", req.prompt}, {"continuations", req.continuations}};
    const json parsed = parse_response(post_with_retry("/v1/score", body.dump()), "/v1/score");
    if (!parsed.is_object() || !parsed.contains("results") || !parsed["results"].is_array())
        throw ProtocolError("score response missing 'results': " + excerpt(parsed.dump()));

    const auto& arr = parsed["results"];
    if (arr.size() != req.continuations.size())
        throw ProtocolError("score results not aligned with continuations: got " +
                            std::to_string(arr.size()) + ", want " +
                            std::to_string(req.continuations.size()));

    std::vector<ScoreResult> results;
    results.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_object() || !item.contains("total_logprob") || !item.contains("token_count"))
            throw ProtocolError("malformed score result: " + excerpt(item.dump()));
        ScoreResult r;
        r.total_logprob = item["total_logprob"].get<double>();
        r.token_count = item["token_count"].get<int>();
        if (r.token_count < 1)
            throw ProtocolError("score result token_count must be >= 1");
        results.push_back(r);
    }
    return results;
}

BackendInfo RemoteBackend::health_check() {
    std::string last_error;
    auto backoff = retry_.initial_backoff;
    for (int attempt = 0; attempt <= retry_.max_retries; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(backoff);
            backoff = std::chrono::milliseconds(
                static_cast<std::int64_t>(static_cast<double>(backoff.count()) * retry_.multiplier));
        }
        httplib::Client client(base_url_);
        client.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(retry_.timeout));
        client.set_read_timeout(std::chrono::duration_cast<std::chrono::seconds>(retry_.timeout));

        auto res = client.Get("/v1/health");
        if (!res || res->status >= 500) {
            last_error = !res ? "transport failure (" + httplib::to_string(res.error()) + ")"
                              : "server error " + std::to_string(res->status);
            continue;
        }
        if (res->status >= 400)
            throw BackendUnreachableError("backend " + base_url_ + " refused health check (" +
                                          std::to_string(res->status) + ")");
        const json parsed = parse_response(res->body, "/v1/health");
        if (!parsed.is_object() || !parsed.contains("backend_id"))
            throw ProtocolError("health response missing 'backend_id': " + excerpt(res->body));
        BackendInfo info;
        info.backend_id = parsed["backend_id"].get<std::string>();
        info.supports_score = parsed.value("supports_score", false);
        return info;
    }
    throw BackendUnreachableError("backend unreachable at " + base_url_ + ": " + last_error);
}

}  // namespace spamzero
