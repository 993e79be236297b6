#include "ofa/cost_model.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ofa/utf8.hpp"

namespace ofa {

namespace {

Cost require_nonnegative(Cost value, const char* what) {
  if (value < 0) {
    throw std::invalid_argument(std::string("cost model: negative ") + what + " cost");
  }
  return value;
}

}  // namespace

CostModel::CostModel(std::vector<Cost> choice, Cost unify_default)
    : choice_(std::move(choice)), unify_default_(require_nonnegative(unify_default, "unify_default")) {
  if (choice_.empty()) {
    throw std::invalid_argument("cost model: choice array must cover at least one position");
  }
  for (Cost c : choice_) require_nonnegative(c, "choice");
}

CostModel CostModel::uniform(std::size_t positions, Cost choice, Cost unify) {
  return CostModel(std::vector<Cost>(positions, choice), unify);
}

CostModel CostModel::parse(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("cost model: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("choice") || !doc.contains("unify_default")) {
    throw std::invalid_argument("cost model: expected object with 'choice' and 'unify_default'");
  }
  std::vector<Cost> choice;
  for (const auto& v : doc.at("choice")) {
    if (!v.is_number_integer()) throw std::invalid_argument("cost model: 'choice' entries must be integers");
    choice.push_back(v.get<Cost>());
  }
  if (!doc.at("unify_default").is_number_integer()) {
    throw std::invalid_argument("cost model: 'unify_default' must be an integer");
  }
  CostModel model(std::move(choice), doc.at("unify_default").get<Cost>());
  if (doc.contains("unify")) {
    for (const auto& triple : doc.at("unify")) {
      if (!triple.is_array() || triple.size() != 3 || !triple[0].is_number_integer() ||
          !triple[1].is_string() || !triple[2].is_number_integer()) {
        throw std::invalid_argument("cost model: 'unify' entries must be [position, symbol, cost]");
      }
      const std::int64_t pos1 = triple[0].get<std::int64_t>();
      if (pos1 < 1 || static_cast<std::size_t>(pos1) > model.positions()) {
        throw std::invalid_argument("cost model: unify position " + std::to_string(pos1) + " out of range");
      }
      std::u32string sym;
      if (!utf8::decode(triple[1].get<std::string>(), sym) || sym.size() != 1) {
        throw std::invalid_argument("cost model: unify symbol must be a single character");
      }
      model.set_unify(static_cast<std::size_t>(pos1 - 1), sym[0], triple[2].get<Cost>());
    }
  }
  return model;
}

void CostModel::set_unify(std::size_t position, Symbol symbol, Cost cost) {
  if (position >= positions()) {
    throw std::invalid_argument("cost model: unify position out of range");
  }
  unify_[{position, symbol}] = require_nonnegative(cost, "unify");
}

Cost CostModel::choice(std::size_t position) const {
  return choice_.at(position);
}

Cost CostModel::unify(std::size_t position, Symbol symbol) const {
  auto it = unify_.find({position, symbol});
  return it == unify_.end() ? unify_default_ : it->second;
}

Cost CostModel::max_choice() const {
  return *std::max_element(choice_.begin(), choice_.end());
}

Cost CostModel::max_unify() const {
  Cost best = unify_default_;
  for (const auto& [key, value] : unify_) best = std::max(best, value);
  return best;
}

}  // namespace ofa
