#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace spamzero {

struct GenerateRequest {
    std::string prompt;
    int max_tokens = 8;
    bool deterministic = true;  // greedy decoding
};

struct ScoreRequest {
    std::string prompt;
    std::vector<std::string> continuations;
};

struct ScoreResult {
    double total_logprob = 0.0;
    int token_count = 1;
};

struct BackendInfo {
    std::string backend_id;
    bool supports_score = false;
};

// The model-runtime boundary. Implementations must be safe for concurrent
// calls up to max_in_flight() (0 means unbounded).
class InferenceBackend {
  public:
    virtual ~InferenceBackend() = default;

    // Text continuation, truncated to max_tokens. deterministic=true must
    // give identical output for identical requests within a session.
    virtual std::string generate(const GenerateRequest& req) = 0;

    // One result per continuation, order-aligned. total_logprob <= 0,
    // token_count >= 1. Throws CapabilityError when unsupported.
    virtual std::vector<ScoreResult> score(const ScoreRequest& req) = 0;

    // Identity and capabilities; checked before a run and recorded in the
    // manifest. Throws BackendUnreachableError when the backend is down.
    virtual BackendInfo health_check() = 0;

    virtual int max_in_flight() const { return 1; }
};

// Deterministic model-free backend. generate() answers "spam" when the
// prompt contains any pinned keyword as a whole word (after the same
// normalization parse_generation uses), "ham" otherwise. score() follows
// the pinned keyword-count formulas; see the implementation.
class MockBackend final : public InferenceBackend {
  public:
    static const std::vector<std::string>& keywords();

    // distinct pinned keywords present in the text, whole-word matched
    static int keyword_count(std::string_view text);

    std::string generate(const GenerateRequest& req) override;
    std::vector<ScoreResult> score(const ScoreRequest& req) override;
    BackendInfo health_check() override;
    int max_in_flight() const override { return 0; }
};

struct RetryPolicy {
    int max_retries = 3;
    std::chrono::milliseconds initial_backoff{1000};
    double multiplier = 2.0;
    std::chrono::milliseconds timeout{30000};
};

// HTTP client for the JSON protocol:
//   POST /v1/generate {prompt, max_tokens, deterministic} -> {text}
//   POST /v1/score    {prompt, continuations}             -> {results}
//   GET  /v1/health                                       -> {backend_id, supports_score}
// 4xx responses are protocol errors (non-retryable); 5xx and transport
// failures are retried per the policy.
class RemoteBackend final : public InferenceBackend {
  public:
    explicit RemoteBackend(std::string base_url, RetryPolicy retry = {}, int max_in_flight = 4);
    ~RemoteBackend() override;

    std::string generate(const GenerateRequest& req) override;
    std::vector<ScoreResult> score(const ScoreRequest& req) override;
    BackendInfo health_check() override;
    int max_in_flight() const override { return max_in_flight_; }

  private:
    std::string post_with_retry(const std::string& path, const std::string& body);

    std::string base_url_;
    RetryPolicy retry_;
    int max_in_flight_;
};

// Runs a model helper as a child process and speaks one JSON object per
// line over its stdin/stdout:
//   {"op":"generate","prompt":...,"max_tokens":...,"deterministic":...} -> {"text":...}
//   {"op":"score","prompt":...,"continuations":[...]} -> {"results":[{"total_logprob":..,"token_count":..}]}
//   {"op":"health"} -> {"backend_id":...,"supports_score":...}
// Requests are serialized; max_in_flight is 1.
class LocalProcessBackend final : public InferenceBackend {
  public:
    // argv[0] is the helper executable; model_name is recorded in the
    // backend id when the helper does not report one.
    LocalProcessBackend(std::vector<std::string> argv, std::string model_name);
    ~LocalProcessBackend() override;

    std::string generate(const GenerateRequest& req) override;
    std::vector<ScoreResult> score(const ScoreRequest& req) override;
    BackendInfo health_check() override;
    int max_in_flight() const override { return 1; }

  private:
    void ensure_started();
    std::string round_trip(const std::string& request_line);

    std::vector<std::string> argv_;
    std::string model_name_;
    std::mutex mutex_;
    int child_pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
    std::string read_buffer_;
};

// Pass-through wrapper that counts backend calls; the orchestrator uses it
// for the cache-effectiveness log line.
class CountingBackend final : public InferenceBackend {
  public:
    explicit CountingBackend(InferenceBackend& inner) : inner_(inner) {}

    std::string generate(const GenerateRequest& req) override {
        ++calls_;
        return inner_.generate(req);
    }
    std::vector<ScoreResult> score(const ScoreRequest& req) override {
        ++calls_;
        return inner_.score(req);
    }
    BackendInfo health_check() override { return inner_.health_check(); }
    int max_in_flight() const override { return inner_.max_in_flight(); }

    std::uint64_t calls() const { return calls_.load(); }

  private:
    InferenceBackend& inner_;
    std::atomic<std::uint64_t> calls_{0};
};

}  // namespace spamzero
