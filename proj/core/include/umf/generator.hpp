#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>

#include "umf/candidates.hpp"
#include "umf/senses.hpp"

namespace umf {

/// Wire request for the black-box generator.
struct GeneratorRequest {
  std::string source_text;
  std::string source_lang;
  std::string target_lang;
  int n = 32;
  BiasMap bias;  // forwarded when the adapter supports it
};

struct FetchResult {
  CandidateSet set;
  bool honored_bias = false;
};

/// Candidate acquisition behind the generator wire contract. Implementations:
/// a JSONL file source for reproducible experiments and an HTTP JSON adapter.
class CandidateSource {
 public:
  virtual ~CandidateSource() = default;

  /// Returns a validated CandidateSet with at most request.n candidates
  /// (first n by rank). Throws TransportError / ProtocolError /
  /// EmptyResponse.
  virtual FetchResult fetch(const std::string& sentence_id,
                            const GeneratorRequest& request) = 0;
};

/// Reads a JSONL candidate file once and serves sets by sentence_id.
class FileCandidateSource : public CandidateSource {
 public:
  explicit FileCandidateSource(const std::filesystem::path& path);

  FetchResult fetch(const std::string& sentence_id, const GeneratorRequest& request) override;

 private:
  std::map<std::string, CandidateSet> by_id_;
};

struct HttpGeneratorConfig {
  std::string base_url;   // e.g. http://host:port
  std::string token;      // bearer auth, may be empty
  int max_attempts = 3;   // transport retries with exponential backoff
  int backoff_ms = 250;
  int timeout_s = 30;
};

/// Endpoint from UMF_GENERATOR_URL, token from UMF_GENERATOR_TOKEN.
HttpGeneratorConfig http_config_from_env();

/// POST {base_url}/generate with a GeneratorRequest body.
class HttpCandidateSource : public CandidateSource {
 public:
  explicit HttpCandidateSource(HttpGeneratorConfig config);

  FetchResult fetch(const std::string& sentence_id, const GeneratorRequest& request) override;

 private:
  HttpGeneratorConfig config_;
};

Json generator_request_to_json(const GeneratorRequest& request);

/// Parses and validates a GeneratorResponse body against the request
/// (count <= n, ranks contiguous from 1). Throws ProtocolError/EmptyResponse.
FetchResult parse_generator_response(const Json& doc, const std::string& sentence_id,
                                     const GeneratorRequest& request);

}  // namespace umf
