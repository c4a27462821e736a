#include "umf/generator.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>

#include "umf/errors.hpp"
#include "umf/text.hpp"

namespace umf {

Json generator_request_to_json(const GeneratorRequest& request) {
  Json doc = Json::object();
  doc["source_text"] = request.source_text;
  doc["source_lang"] = request.source_lang;
  doc["target_lang"] = request.target_lang;
  doc["n"] = request.n;
  if (!request.bias.empty()) doc["bias"] = bias_map_to_json(request.bias);
  return doc;
}

FetchResult parse_generator_response(const Json& doc, const std::string& sentence_id,
                                     const GeneratorRequest& request) {
  if (!doc.is_object() || !doc.contains("candidates") || !doc["candidates"].is_array()) {
    throw ProtocolError("generator response missing 'candidates' array");
  }
  const Json& arr = doc["candidates"];
  if (arr.empty()) throw EmptyResponse("generator returned no candidates");
  if (arr.size() > static_cast<std::size_t>(request.n)) {
    throw ProtocolError("generator returned more candidates than requested");
  }
  Json set_doc = Json::object();
  set_doc["sentence_id"] = sentence_id;
  set_doc["source_text"] = request.source_text;
  set_doc["target_lang"] = request.target_lang;
  set_doc["candidates"] = arr;
  FetchResult result;
  try {
    result.set = parse_candidate_set(set_doc);
  } catch (const SchemaError& e) {
    throw ProtocolError(std::string("malformed generator response: ") + e.what());
  }
  result.honored_bias = doc.value("honored_bias", false);
  return result;
}

FileCandidateSource::FileCandidateSource(const std::filesystem::path& path) {
  for (CandidateSet& set : read_candidate_file(path)) {
    const std::string id = set.sentence_id;
    if (!by_id_.emplace(id, std::move(set)).second) {
      throw ParseError("duplicate sentence_id '" + id + "' in candidate file");
    }
  }
}

FetchResult FileCandidateSource::fetch(const std::string& sentence_id,
                                       const GeneratorRequest& request) {
  auto it = by_id_.find(sentence_id);
  if (it == by_id_.end()) {
    throw EmptyResponse("no candidates for sentence '" + sentence_id + "'");
  }
  FetchResult result;
  result.set = it->second;
  result.honored_bias = false;  // a file cannot honor generation-time bias
  if (result.set.candidates.size() > static_cast<std::size_t>(request.n)) {
    result.set.candidates.resize(static_cast<std::size_t>(request.n));
  }
  return result;
}

HttpGeneratorConfig http_config_from_env() {
  HttpGeneratorConfig config;
  if (const char* url = std::getenv("UMF_GENERATOR_URL")) config.base_url = url;
  if (const char* token = std::getenv("UMF_GENERATOR_TOKEN")) config.token = token;
  return config;
}

HttpCandidateSource::HttpCandidateSource(HttpGeneratorConfig config)
    : config_(std::move(config)) {
  if (config_.base_url.empty()) {
    throw TransportError("generator endpoint not configured (UMF_GENERATOR_URL)");
  }
}

FetchResult HttpCandidateSource::fetch(const std::string& sentence_id,
                                       const GeneratorRequest& request) {
  httplib::Client client(config_.base_url);
  client.set_connection_timeout(config_.timeout_s, 0);
  client.set_read_timeout(config_.timeout_s, 0);
  httplib::Headers headers;
  if (!config_.token.empty()) {
    headers.emplace("Authorization", "Bearer " + config_.token);
  }
  const std::string body = generator_request_to_json(request).dump();

  std::string last_error;
  int backoff = config_.backoff_ms;
  for (int attempt = 1; attempt <= config_.max_attempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
      backoff *= 2;
    }
    auto res = client.Post("/generate", headers, body, "application/json");
    if (!res) {
      last_error = "connection failed: " + httplib::to_string(res.error());
      continue;  // transport failure: retry
    }
    if (res->status >= 500) {
      last_error = "server error " + std::to_string(res->status);
      continue;  // transient server failure: retry
    }
    if (res->status != 200) {
      throw TransportError("generator returned status " + std::to_string(res->status));
    }
    Json doc;
    try {
      doc = Json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
      throw ProtocolError(std::string("generator response is not JSON: ") + e.what());
    }
    return parse_generator_response(doc, sentence_id, request);
  }
  throw TransportError("generator unreachable after " + std::to_string(config_.max_attempts) +
                       " attempts: " + last_error);
}

}  // namespace umf
