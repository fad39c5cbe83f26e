#pragma once

#include <json.hpp>
#include <optional>

#include "hermsym/branching.hpp"
#include "hermsym/moment.hpp"
#include "hermsym/okounkov.hpp"
#include "hermsym/verify.hpp"

namespace hermsym {

using Json = nlohmann::ordered_json;

/// Shared metadata block: model, level, convention, seed, version.
Json meta_block(const std::string& model_spec, std::optional<long> k,
                const std::string& convention, std::optional<uint64_t> seed);

/// Weights serialize as exact rational coordinate strings plus a basis tag.
Json weight_json(const Weight& w);
Json bigint_json(const BigInt& v);

Json checks_json(const std::vector<CheckResult>& checks);

Json describe_json(const Model& m, const MarkedParabolic& p);
Json table_json(const KTypeTable& t);
Json polytope_json(const MarkedParabolic& p, long k);
Json okounkov_json(const ModelParabolic& mp, const OkounkovData& d);
Json moment_json(const MomentValue& mv, const MarkedParabolic& p);

std::string polytope_csv(const MarkedParabolic& p, long k);
std::string okounkov_csv(const OkounkovData& d);
std::string table_csv(const KTypeTable& t);

}  // namespace hermsym
